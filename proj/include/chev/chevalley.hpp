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
 * @file chevalley.hpp
 * @brief Restriction of invariants to d-tuples of Cartan elements, checked
 *        degree by degree.
 *
 * The source side is computed from root subgroups (group_invariants), the
 * target side from the finite Weyl group (finite_invariants); the two never
 * share code beyond the slice bases, so a rank match is a two-sided check.
 */

#ifndef CHEV_CHEVALLEY_HPP
#define CHEV_CHEVALLEY_HPP

#include <cstdint>
#include <string>

#include "chev/invariants.hpp"
#include "chev/scheme.hpp"

namespace chev {

/// Substitute X(k) = sum_i t(k)_i H_i into a polynomial on the lie_frame coordinates of g^d.
SparsePoly restrict_to_cartan(const SparsePoly& p, const GroupSpec& spec, unsigned d, Field f);

struct DegreeReport {
    GroupKind group;
    unsigned n, d;
    std::uint32_t p;
    unsigned degree;
    std::size_t dim_source, dim_target, dim_image;
    bool injective, surjective;
    /// restricted invariants all land in the Weyl invariants
    bool image_in_target;
    /// p divides |W|, so the Weyl side is not covered by the coprime case
    bool weyl_order_divisible;
    std::string field;

    bool bijective() const { return injective && surjective && image_in_target; }
    /// The invariants listed with DegreeReport.
    bool consistent() const;
};

/// Over working_field(spec, p).
DegreeReport phi_degree_check(const GroupSpec& spec, unsigned d, std::uint32_t p, unsigned m);
DegreeReport phi_degree_check(const GroupSpec& spec, unsigned d, Field f, unsigned m);

struct AmbientReport {
    std::size_t dim_ambient;   ///< invariants of K[M_n^d]_m
    std::size_t dim_image;     ///< their image in K[c^d_g]_m
    std::size_t dim_commuting; ///< invariants of K[c^d_g]_m
    bool surjective() const { return dim_image == dim_commuting; }
};

AmbientReport phi_from_ambient(const GroupSpec& spec, unsigned d, std::uint32_t p, unsigned m);

struct SplitReport {
    unsigned n, d;
    std::uint32_t p;
    unsigned degree;
    std::size_t source_plus, source_minus, target_plus, target_minus;
    std::size_t image_plus, image_minus;
    /// the (0)-part restricts into the (0)-part and the (1)-part into the (1)-part
    bool preserves_split;
};

SplitReport so_even_split_check(unsigned n, unsigned d, std::uint32_t p, unsigned m);

}  // namespace chev

#endif
