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
 * @file scheme.hpp
 * @brief Classical groups, their Lie algebras, generic matrices and the
 *        graded slices of the commuting ideal.
 *
 * A LieFrame is a basis of a space of n x n matrices (the Lie algebra, or all
 * of M_n) together with a coordinate solver. Coordinates on g^d are the dual
 * coordinates of a frame, copy k owning variables k*size .. k*size+size-1.
 *
 * The default frame of g is the reduced echelon basis of the solution space of
 * the defining constraints. For so_n over a field containing sqrt(-1) the frame
 * is instead a basis of torus weight vectors (see lie_frame), which is what the
 * invariant computations need.
 */

#ifndef CHEV_SCHEME_HPP
#define CHEV_SCHEME_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "chev/field.hpp"
#include "chev/linalg.hpp"
#include "chev/poly.hpp"

namespace chev {

enum class GroupKind { GL, O, SO, Sp };

GroupKind parse_group(const std::string& s);
std::string group_name(GroupKind k);

using IntMatrix = std::vector<std::vector<std::int64_t>>;

struct GroupSpec {
    GroupKind kind;
    unsigned n;
    std::size_t lie_dim;
    /// J for Sp, the identity for O/SO, empty for GL.
    IntMatrix form;
    /// Reduced echelon basis of g, as integer matrices.
    std::vector<IntMatrix> lie_basis;

    /// Rank of the maximal torus.
    unsigned rank() const;
    bool is_orthogonal() const { return kind == GroupKind::O || kind == GroupKind::SO; }
};

GroupSpec group_spec(GroupKind kind, unsigned n);

/// F_p for GL/Sp; for O/SO the smallest extension of F_p containing sqrt(-1).
Field working_field(const GroupSpec& spec, std::uint32_t p);

class LieFrame {
   public:
    LieFrame(Field f, unsigned n, std::vector<Matrix> basis, std::vector<std::string> names);

    const Field& field() const noexcept { return field_; }
    unsigned n() const noexcept { return n_; }
    std::size_t size() const noexcept { return basis_.size(); }
    const std::vector<Matrix>& basis() const noexcept { return basis_; }
    const Matrix& operator[](std::size_t i) const { return basis_[i]; }
    const std::vector<std::string>& names() const noexcept { return names_; }

    /// Coordinates of X in the frame; throws if X is outside the span.
    Vector coordinates(const Matrix& X) const;
    bool contains(const Matrix& X) const;

    /// Torus weights of the basis elements under the adjoint action, one integer
    /// vector per element. Empty when the frame is not a weight basis.
    const std::vector<std::vector<int>>& weights() const noexcept { return weights_; }
    bool has_weights() const noexcept { return !weights_.empty(); }
    void set_weights(std::vector<std::vector<int>> w);

   private:
    Field field_;
    unsigned n_;
    std::vector<Matrix> basis_;
    std::vector<std::string> names_;
    std::vector<std::vector<int>> weights_;
    LinSpace span_;
    Matrix transform_;  // span_.basis() = transform_ * (flattened basis)
};

/// Frame of g over f. For so_n this is the weight frame when f contains
/// sqrt(-1), and the echelon frame otherwise.
LieFrame lie_frame(const GroupSpec& spec, Field f);
/// Frame of g that always uses the echelon basis.
LieFrame echelon_frame(const GroupSpec& spec, Field f);
/// Columns of P span the torus eigenlines (identity for GL/Sp); omega[a] is
/// the weight of column a. Throws UnsupportedField for O/SO without sqrt(-1).
struct WeightBasis {
    Matrix P;
    std::vector<std::vector<int>> omega;
};
WeightBasis weight_basis(const GroupSpec& spec, Field f);
bool has_sqrt_minus_one(Field f);

/// Frame of M_n: elementary matrices, or for O/SO with sqrt(-1) available the
/// conjugates P E_ab P^-1 by the weight eigenbasis P.
LieFrame ambient_frame(const GroupSpec& spec, Field f);
/// Elementary matrices E_ij in row-major order.
LieFrame standard_frame(unsigned n, Field f);

/// The Cartan elements H_1..H_rank of the torus realization, as matrices.
std::vector<Matrix> cartan_elements(const GroupSpec& spec, Field f);

struct GenericMatrices {
    unsigned n, d;
    std::size_t nvars;
    /// mats[k](i,j) is the (i,j) entry of the k-th generic matrix.
    std::vector<std::vector<std::vector<SparsePoly>>> mats;
};

enum class Realization { Ambient, Intrinsic };

/// X(k) = sum_l c_{k,l} B_l over the frame.
GenericMatrices generic_matrices(const LieFrame& frame, unsigned d);
/// Ambient uses E_ij, intrinsic uses lie_frame(spec, f).
GenericMatrices generic_matrices(const GroupSpec& spec, unsigned d, Realization r, Field f);

/// Entries of [X(k), X(l)] for k < l, row-major, unreduced.
std::vector<SparsePoly> commutator_generators(const GenericMatrices& mats);

/// Linear generators of I' in the d*n^2 ambient variables x(k)_ij.
std::vector<SparsePoly> lie_constraints(const GroupSpec& spec, unsigned d, Field f);

/// Degree-m slice of I-bar inside the intrinsic coordinate ring, labelled.
LinSpace ibar_component(const GroupSpec& spec, unsigned d, unsigned m, Field f);
/// Same, for an explicit frame of g.
LinSpace ibar_component(const LieFrame& frame, unsigned d, unsigned m);

/// dim K[c^d_g]_m = dim Rbar_m - dim Ibar_m.
std::size_t commuting_hilbert(const GroupSpec& spec, unsigned d, unsigned m, Field f);

/// Integer matrix read over f.
Matrix to_matrix(const IntMatrix& m, Field f);

}  // namespace chev

#endif
