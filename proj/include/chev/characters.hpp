/*
   Copyright 2026 The chevtool Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/**
 * @file characters.hpp
 * @brief Torus characters of graded slices, Weyl characters, and the
 *        character-level good filtration certificate.
 *
 * Weights are integer vectors in the epsilon basis of the torus realization:
 * e_i - e_j for GL, e_i +- e_j and 2 e_i for Sp, e_i +- e_j and e_i for odd
 * SO, e_i +- e_j for even SO. Weyl characters use the alternant quotient on
 * doubled weights so that half-integral rho stays integral.
 */

#ifndef CHEV_CHARACTERS_HPP
#define CHEV_CHARACTERS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chev/invariants.hpp"
#include "chev/scheme.hpp"

namespace chev {

using Weight = std::vector<int>;

struct CharacterVector {
    std::map<Weight, std::int64_t> terms;  ///< nonzero multiplicities only

    void add(const Weight& w, std::int64_t c);
    CharacterVector& operator+=(const CharacterVector& o);
    CharacterVector scaled(std::int64_t c) const;
    /// value at the identity of the torus
    std::int64_t dimension() const;
    friend bool operator==(const CharacterVector&, const CharacterVector&) = default;
    std::string to_string() const;
};

/// Character of the whole degree-m slice (Free or Ambient), or of Rbar_m / Ibar_m (Quotient).
CharacterVector slice_character(const GroupSpec& spec, unsigned d, unsigned m, Field f, SliceKind kind = SliceKind::Free);
/// Character of a torus-stable subspace of the degree-m slice of the given kind's coordinate ring.
CharacterVector subspace_character(const GroupSpec& spec, unsigned d, const LinSpace& V, Field f, SliceKind kind = SliceKind::Free);

std::vector<Weight> positive_roots(const GroupSpec& spec);
bool is_dominant(const Weight& w, const GroupSpec& spec);
/// Throws std::invalid_argument for non-dominant weights and for O_n.
CharacterVector weyl_character(const Weight& lambda, const GroupSpec& spec);

struct WeylDecomposition {
    std::map<Weight, std::int64_t> coefficients;
};

/// Throws std::invalid_argument when c is not Weyl-invariant.
WeylDecomposition decompose_into_weyl(const CharacterVector& c, const GroupSpec& spec);

enum class CertifiedModule { Ideal, Free, Quotient };

struct CertificateDegree {
    unsigned degree;
    bool pass;
    /// first negative coefficient in weight order, when the degree fails
    std::optional<std::pair<Weight, std::int64_t>> witness;
    WeylDecomposition decomposition;
};

struct Certificate {
    std::vector<CertificateDegree> degrees;
    bool pass() const;
};

/// Checks one character: nonnegative Weyl coefficients.
CertificateDegree certify_character(const CharacterVector& c, const GroupSpec& spec, unsigned degree);
/// Degrees 0..max_degree of Ibar, Rbar or Rbar/Ibar; O_n is rejected.
Certificate goodfil_certificate(const GroupSpec& spec, unsigned d, std::uint32_t p, unsigned max_degree,
                                CertifiedModule module = CertifiedModule::Ideal);

/// "certificate PASS" or "certificate FAIL"; a PASS is necessary, not sufficient, for a good filtration.
std::string certificate_status(bool pass);

}  // namespace chev

#endif
