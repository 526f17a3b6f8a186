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
 * @file linalg.hpp
 * @brief Dense exact matrices, reduced row echelon form, and subspaces.
 *
 * Elimination dispatches on the field tag to a typed kernel (32-bit residues
 * for F_p, residue pairs for F_{p^2}, boost rationals for Q), so the generic
 * FieldElement storage only costs a conversion per call.
 */

#ifndef CHEV_LINALG_HPP
#define CHEV_LINALG_HPP

#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

#include "chev/field.hpp"

namespace chev {

class MonomialBasis;

using Vector = std::vector<FieldElement>;

Vector zero_vector(Field f, std::size_t n);
bool is_zero(const Vector& v);

class Matrix {
   public:
    Matrix(Field f, std::size_t rows, std::size_t cols);
    /// Rows must share the given field and have `cols` entries.
    static Matrix from_rows(Field f, std::size_t cols, const std::vector<Vector>& rows);
    static Matrix from_ints(Field f, const std::vector<std::vector<std::int64_t>>& rows);
    static Matrix identity(Field f, std::size_t n);

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    FieldElement& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const FieldElement& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    void append_row(const Vector& v);
    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const FieldElement& s) const;
    bool is_zero() const;
    /// Row vector times matrix.
    Vector apply_right(const Vector& v) const;

    friend bool operator==(const Matrix& a, const Matrix& b);

    /// Throws FieldMismatch when an entry carries a foreign field tag.
    void check_uniform() const;

   private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<FieldElement> data_;
};

struct Echelon {
    Matrix rows;                      ///< nonzero rows of the reduced echelon form
    std::vector<std::size_t> pivots;  ///< pivot column of each row, increasing
};

/// Canonical reduced row echelon form by exact elimination.
Echelon row_reduce(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Inverse of a square matrix; throws std::domain_error when singular.
Matrix inverse(const Matrix& m);

/// A subspace of F^N stored by its unique reduced echelon basis, optionally
/// labelled by the monomials of a graded slice.
class LinSpace {
   public:
    LinSpace(Field f, std::size_t ambient_dim);
    static LinSpace span(Field f, std::size_t ambient_dim, const std::vector<Vector>& generators);
    static LinSpace row_space(const Matrix& m);
    static LinSpace full(Field f, std::size_t ambient_dim);

    const Field& field() const noexcept { return basis_.field(); }
    std::size_t dim() const noexcept { return basis_.rows(); }
    std::size_t ambient_dim() const noexcept { return basis_.cols(); }
    const Matrix& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
    Vector vector(std::size_t i) const { return basis_.row(i); }
    std::vector<Vector> vectors() const;

    /// Normal form modulo this space: the result vanishes on every pivot column.
    Vector reduce(Vector v) const;
    bool contains(const Vector& v) const;
    bool contains(const LinSpace& other) const;
    /// Coordinates in the echelon basis; throws if v is outside the space.
    std::vector<FieldElement> coordinates(const Vector& v) const;

    LinSpace sum(const LinSpace& other) const;
    LinSpace intersect(const LinSpace& other) const;

    const std::shared_ptr<const MonomialBasis>& labels() const noexcept { return labels_; }
    LinSpace& with_labels(std::shared_ptr<const MonomialBasis> labels);

    friend bool operator==(const LinSpace& a, const LinSpace& b) { return a.basis_ == b.basis_; }

   private:
    LinSpace(Echelon e) : basis_(std::move(e.rows)), pivots_(std::move(e.pivots)) {}
    Matrix basis_;
    std::vector<std::size_t> pivots_;
    std::shared_ptr<const MonomialBasis> labels_;
};

/// Sorted (column, nonzero value) pairs.
using SparseVec = std::vector<std::pair<std::size_t, FieldElement>>;

SparseVec to_sparse(const Vector& v);

/// Incremental elimination on sparse rows with typed residues; keeps memory
/// proportional to the nonzeros of the semi-echelon rows it holds.
class SparseEchelon {
   public:
    SparseEchelon(Field f, std::size_t cols);
    ~SparseEchelon();
    SparseEchelon(SparseEchelon&&) noexcept;
    SparseEchelon& operator=(SparseEchelon&&) noexcept;

    /// Adds v when it is independent of the rows held so far.
    bool add(const SparseVec& v);
    bool contains(const SparseVec& v) const;
    std::size_t rank() const;
    std::size_t cols() const noexcept { return cols_; }
    /// Canonical subspace spanned by everything added.
    LinSpace span() const;

   private:
    friend LinSpace left_kernel_sparse(Field, std::size_t, const std::vector<SparseVec>&);
    struct Impl;
    std::size_t cols_;
    std::unique_ptr<Impl> impl_;
};

/// Rank of a matrix given by sparse rows.
std::size_t sparse_rank(Field f, std::size_t cols, const std::vector<SparseVec>& rows);
/// Left kernel {y : y M = 0} of the matrix whose rows are given.
LinSpace left_kernel_sparse(Field f, std::size_t cols, const std::vector<SparseVec>& rows);

/// Right kernel {x : m x = 0}, as a canonical subspace of F^cols.
LinSpace kernel_basis(const Matrix& m);
/// Left kernel {y : y m = 0}, as a canonical subspace of F^rows.
LinSpace left_kernel(const Matrix& m);

}  // namespace chev

#endif
