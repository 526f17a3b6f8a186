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
 * @file invariants.hpp
 * @brief Torus weights, Weyl group actions on t^d, and invariant subspaces of
 *        graded slices under finite groups and under the classical groups.
 *
 * Group invariants are computed without a Reynolds operator. A polynomial is
 * G-invariant when it has torus weight zero and is fixed by every root
 * subgroup x(t) = I + t e + t^2 e^2 / 2; expanding f(x(t) . X) in t gives one
 * linear condition per power of t. Root subgroups for the simple roots and
 * their negatives suffice, since together with T they generate G. For O_n the
 * reflection diag(-1, 1, ..., 1) is added.
 *
 * Coordinates on t^d are t(k)_i with index k * rank + i.
 */

#ifndef CHEV_INVARIANTS_HPP
#define CHEV_INVARIANTS_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "chev/field.hpp"
#include "chev/linalg.hpp"
#include "chev/poly.hpp"
#include "chev/scheme.hpp"

namespace chev {

/// Which graded slice an invariant computation acts on.
enum class SliceKind {
    Free,      ///< Rbar_m, polynomials on g^d
    Quotient,  ///< Rbar_m / Ibar_m, returned as normal forms modulo Ibar_m
    Ambient,   ///< R_m, polynomials on M_n^d
};

struct TorusData {
    unsigned rank;
    /// H_1..H_rank as matrices in the group's realization
    std::vector<Matrix> cartan;
    /// weight of every coordinate function of the slice ring, copy-major
    std::vector<std::vector<int>> weights;
};

TorusData torus_data(const GroupSpec& spec, unsigned d, Field f, SliceKind kind = SliceKind::Free);

/// The coordinate frame a slice kind lives on.
LieFrame slice_frame(const GroupSpec& spec, Field f, SliceKind kind);

struct WeylAction {
    unsigned rank;
    std::vector<IntMatrix> generators;
    std::uint64_t order;
};

WeylAction weyl_generators(const GroupSpec& spec);
/// Every element of the group generated by the action, identity first.
std::vector<IntMatrix> weyl_elements(const WeylAction& action);
/// t_1 -> -t_1: the class of diag(-1, 1, ..., 1) for orthogonal groups.
IntMatrix component_reflection(const GroupSpec& spec);

/// Image of the degree-m slice of K[t^d] under t(k)_i -> sum_j g_ij t(k)_j, as rows.
Matrix weyl_slice_action(const IntMatrix& g, unsigned d, unsigned m, Field f);
LinSpace finite_invariants(const WeylAction& action, unsigned d, unsigned m, Field f);

LinSpace torus_weight_zero(const GroupSpec& spec, unsigned d, unsigned m, Field f, SliceKind kind = SliceKind::Free);

struct OneParamSubgroup {
    Matrix e;
    std::vector<int> weight;
    /// coefficient of t^k in x(t), k = 0, 1, 2
    std::vector<Matrix> coefficients() const;
    Matrix at(const FieldElement& c) const;
};

/// Root subgroups for plus and minus the simple roots (or all roots).
std::vector<OneParamSubgroup> root_subgroups(const GroupSpec& spec, Field f, bool simple_only = true);

/// Throws std::domain_error when the characteristic is at most n.
void check_characteristic(const GroupSpec& spec, Field f);

/// Linear substitution c -> c' on the frame coordinates induced by X -> g X g^-1.
Matrix conjugation_matrix(const LieFrame& frame, const Matrix& g, const Matrix& ginv);

LinSpace group_invariants(const GroupSpec& spec, unsigned d, unsigned m, Field f, SliceKind kind);

struct EigenSplit {
    LinSpace plus;
    LinSpace minus;
};

/// +1 and -1 eigenspaces of an involution preserving space.
EigenSplit eigen_split(const LinSpace& space, const std::function<Vector(const Vector&)>& involution);
EigenSplit eigen_split(const LinSpace& space, const Matrix& involution);

}  // namespace chev

#endif
