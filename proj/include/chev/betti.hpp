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
 * @file betti.hpp
 * @brief Graded Betti numbers from Koszul homology, windowed regularity and
 *        the a priori regularity bound for ideals generated in bounded degree.
 *
 * beta_ij(M) is the homology at M_{j-i} (x) Wedge^i K^r of
 *
 *   0 -> M_{j-r} (x) Wedge^r -> ... -> M_j (x) Wedge^0 -> 0,
 *   d(m (x) e_S) = sum_q (-1)^q x_{s_q} m (x) e_{S - s_q},   S = {s_0 < s_1 < ...}.
 *
 * Modules are given degree by degree: a dimension per degree and, for each
 * variable, the matrix of multiplication from degree j to j+1 acting on row
 * vectors.
 */

#ifndef CHEV_BETTI_HPP
#define CHEV_BETTI_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chev/field.hpp"
#include "chev/linalg.hpp"
#include "chev/poly.hpp"

namespace chev {

class GradedModuleSlices {
   public:
    enum class Kind { Ideal, Quotient, Free, Generic };

    /// The ideal generated by homogeneous gens, degrees 0..top.
    static GradedModuleSlices ideal(Field f, const std::vector<SparsePoly>& gens, std::size_t r, unsigned top);
    /// S / (gens), degrees 0..top.
    static GradedModuleSlices quotient(Field f, const std::vector<SparsePoly>& gens, std::size_t r, unsigned top);
    /// S itself.
    static GradedModuleSlices free(Field f, std::size_t r, unsigned top);
    /// dims[j] and mult[j][s] (dims[j] x dims[j+1]) supplied directly; mult needs top = dims.size()-1 entries.
    static GradedModuleSlices generic(Field f, std::size_t r, std::vector<std::size_t> dims, std::vector<std::vector<Matrix>> mult);

    const Field& field() const noexcept { return field_; }
    Kind kind() const noexcept { return kind_; }
    std::size_t nvars() const noexcept { return r_; }
    unsigned top() const noexcept { return top_; }
    /// Largest generator degree of the ideal (Ideal and Quotient kinds), else 0.
    unsigned max_generator_degree() const noexcept { return kappa_; }

    /// 0 below degree 0; throws when j exceeds the computed range.
    std::size_t dim(int j) const;
    /// Multiplication by x_s from degree j to j+1.
    const Matrix& mult(int j, std::size_t s) const;

    /// x_s x_t = x_t x_s on every computed slice.
    bool multiplications_commute() const;

    /// The same module after replacing the basis of each slice by rows of g[j].
    GradedModuleSlices change_basis(const std::vector<Matrix>& g) const;

   private:
    GradedModuleSlices(Field f, Kind k, std::size_t r) : field_(f), kind_(k), r_(r) {}
    void need(int j) const;
    Field field_;
    Kind kind_;
    std::size_t r_;
    unsigned top_ = 0;
    unsigned kappa_ = 0;
    std::vector<std::size_t> dims_;
    std::vector<std::vector<Matrix>> mult_;
};

/// beta_ij via the complex above; throws naming the missing degree when a slice is unavailable.
std::size_t betti_number(const GradedModuleSlices& M, int i, int j);

struct BettiTable {
    /// nonzero entries only, keyed (i, j)
    std::map<std::pair<int, int>, std::size_t> entries;
    int window = 0;
    std::size_t at(int i, int j) const;
};

BettiTable betti_table(const GradedModuleSlices& M, int j_max);

struct Regularity {
    std::optional<int> reg;   ///< empty for the zero module
    bool complete;            ///< every beta that could exceed reg was inside the window
};

/// max(j - i) over nonzero beta_ij with j <= j_max.
Regularity regularity_windowed(const GradedModuleSlices& M, int j_max);
Regularity regularity_of(const BettiTable& t, const GradedModuleSlices& M);

/// d(kappa - 1) + 1 for d <= 3, [3 kappa^2 (kappa - 1)]^(2^(d-4)) + 1 for d >= 4.
BigInt chardin_bound(unsigned kappa, unsigned dvars);

}  // namespace chev

#endif
