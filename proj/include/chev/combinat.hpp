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
 * @file combinat.hpp
 * @brief The quadratic-form maximum over strictly monotone lattice points,
 *        partitions and Schur dimensions, and the characteristic bounds.
 *
 * F_m(x_1..x_2m) = sum_i (x_i - x_{i-1}) x_{m+i} (n - x_{m+i})
 *                        + (x_{m+i} - x_{m+i+1}) x_i (n - x_i),   x_0 = x_{2m+1} = 0.
 */

#ifndef CHEV_COMBINAT_HPP
#define CHEV_COMBINAT_HPP

#include <cstdint>
#include <vector>

#include "chev/field.hpp"

namespace chev {

using Point = std::vector<std::int64_t>;

std::int64_t eval_F(unsigned n, unsigned m, const Point& x);

/// 0 < a_1 < ... < a_m <= n >= a_{m+1} > ... > a_2m > 0
bool in_V(unsigned n, unsigned m, const Point& a);
/// 0 < a_1 < ... < a_m <= n
bool in_W(unsigned n, unsigned m, const Point& a);

/// Exhaustive maximum of F_m over all 1 <= m <= n and all points of V_m (n <= 8).
std::int64_t lemma_max_bruteforce(unsigned n);
std::int64_t lemma_max_closed(unsigned n);
/// (n^3 - (n-m)^3 - m) / 3, the value of H_m at (1, 2, ..., m).
std::int64_t h_beta(unsigned n, unsigned m);

struct HReduction {
    std::int64_t value;       ///< H_m(a) = F_m(a, f_1(a), ..., f_m(a))
    Point f;                  ///< the f_i values
    bool matches;             ///< f_i integral and n >= f_1 > ... > f_m > 0
};
/// f_i = (2n - x_i - x_{i-1})/2 + (1 - (-1)^(x_i + x_{i-1}))/4, x_0 = 0.
HReduction h_reduction_check(unsigned n, unsigned m, const Point& a);
/// max of H_m over all 1 <= m <= n and all points of W_m.
std::int64_t h_reduction_max(unsigned n);

/// Nonincreasing positive parts.
using Partition = std::vector<unsigned>;

bool is_partition(const Partition& p);
Partition conjugate(const Partition& p);
/// All partitions of k, in reverse lexicographic order.
std::vector<Partition> partitions_of(unsigned k);
/// Number of semistandard tableaux of shape lambda with entries in 1..N.
BigInt schur_dim(const Partition& lambda, unsigned N);

struct CauchyResult {
    BigInt lhs, rhs;
    bool equal;
};
/// C(a*b, k) against sum over |lambda| = k of schur_dim(lambda, a) * schur_dim(conj lambda, b).
CauchyResult cauchy_check(unsigned k, unsigned dimF, unsigned dimG);

/// sum_j i_j (dim V_j - i_j) < p.
bool semisimple_bound_check(const std::vector<unsigned>& dims, const std::vector<unsigned>& exts, std::uint64_t p);

/// 2 (reg - 1)(n - 1) + d (n^3 - n)/3
BigInt thm_bound_goodfil(unsigned n, unsigned d, std::int64_t reg);
/// 12^(2^(d*lie_dim - 4)) (2n - 2) + d (n^3 - n)/3. Throws std::domain_error when
/// d*lie_dim < 4 and std::overflow_error when the exponent 2^(d*lie_dim-4) exceeds 2^20.
BigInt thm_bound_iso(unsigned n, unsigned d, std::size_t lie_dim);
/// 2 alpha (n - 1) + m (n^3 - n)/3
BigInt lemma31_bound(unsigned n, unsigned m, std::int64_t alpha);

/// Smallest prime strictly greater than x.
BigInt next_prime(const BigInt& x);

/// Largest exponent e accepted in towers like 12^(2^e).
inline constexpr unsigned kMaxTowerExponent = 20;

}  // namespace chev

#endif
