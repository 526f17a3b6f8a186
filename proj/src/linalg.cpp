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

#include "chev/linalg.hpp"

#include <array>
#include <functional>
#include <queue>
#include <variant>
#include <stdexcept>

namespace chev {

namespace {

struct PrimeOps {
    using T = std::uint32_t;
    std::uint64_t p;
    T zero() const { return 0; }
    bool is_zero(T a) const { return a == 0; }
    T mul(T a, T b) const { return static_cast<T>((std::uint64_t(a) * b) % p); }
    T inv(T a) const {
        std::uint64_t r = 1, b = a, e = p - 2;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return static_cast<T>(r);
    }
    // a - f*b
    T axpy(T a, T f, T b) const { return static_cast<T>((a + p * p - std::uint64_t(f) * b) % p); }
    T load(const FieldElement& e) const { return e.finite().a; }
    FieldElement store(const Field& fl, T a) const { return FieldElement::from_finite(fl, {a, 0}); }
};

struct QuadOps {
    using T = std::array<std::uint32_t, 2>;
    std::uint64_t p, q;
    T zero() const { return {0, 0}; }
    bool is_zero(const T& a) const { return a[0] == 0 && a[1] == 0; }
    T mul(const T& x, const T& y) const {
        std::uint64_t a = (std::uint64_t(x[0]) * y[0] + (std::uint64_t(x[1]) * y[1] % p) * q) % p;
        std::uint64_t b = (std::uint64_t(x[0]) * y[1] + std::uint64_t(x[1]) * y[0]) % p;
        return {static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)};
    }
    T inv(const T& x) const {
        const FieldElement e = FieldElement::from_finite(field(), {x[0], x[1]}).inverse();
        return {e.finite().a, e.finite().b};
    }
    T axpy(const T& a, const T& f, const T& b) const {
        T fb = mul(f, b);
        return {static_cast<std::uint32_t>((a[0] + p - fb[0]) % p), static_cast<std::uint32_t>((a[1] + p - fb[1]) % p)};
    }
    T load(const FieldElement& e) const { return {e.finite().a, e.finite().b}; }
    FieldElement store(const Field& fl, const T& a) const { return FieldElement::from_finite(fl, {a[0], a[1]}); }
    Field field() const { return Field::quadratic(static_cast<std::uint32_t>(p)); }
};

struct RationalOps {
    using T = Rational;
    T zero() const { return 0; }
    bool is_zero(const T& a) const { return a == 0; }
    T mul(const T& a, const T& b) const { return a * b; }
    T inv(const T& a) const { return 1 / a; }
    T axpy(const T& a, const T& f, const T& b) const { return a - f * b; }
    T load(const FieldElement& e) const { return e.rational_value(); }
    FieldElement store(const Field&, const T& a) const { return FieldElement::rational(a); }
};

template <class Ops>
Echelon rref_typed(const Ops& ops, const Matrix& m) {
    using T = typename Ops::T;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<T> a(rows * cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) a[r * cols + c] = ops.load(m(r, c));

    std::vector<std::size_t> pivots;
    std::size_t prow = 0;
    for (std::size_t c = 0; c < cols && prow < rows; ++c) {
        std::size_t sel = rows;
        for (std::size_t r = prow; r < rows; ++r)
            if (!ops.is_zero(a[r * cols + c])) {
                sel = r;
                break;
            }
        if (sel == rows) continue;
        if (sel != prow)
            for (std::size_t k = c; k < cols; ++k) std::swap(a[sel * cols + k], a[prow * cols + k]);
        T* pr = &a[prow * cols];
        const T inv = ops.inv(pr[c]);
        for (std::size_t k = c; k < cols; ++k)
            if (!ops.is_zero(pr[k])) pr[k] = ops.mul(pr[k], inv);
        // nonzero tail of the pivot row, reused for every elimination
        std::vector<std::size_t> nz;
        for (std::size_t k = c; k < cols; ++k)
            if (!ops.is_zero(pr[k])) nz.push_back(k);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == prow) continue;
            T* rr = &a[r * cols];
            if (ops.is_zero(rr[c])) continue;
            const T f = rr[c];
            for (std::size_t k : nz) rr[k] = ops.axpy(rr[k], f, pr[k]);
        }
        pivots.push_back(c);
        ++prow;
    }

    Matrix out(m.field(), prow, cols);
    for (std::size_t r = 0; r < prow; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (!ops.is_zero(a[r * cols + c])) out(r, c) = ops.store(m.field(), a[r * cols + c]);
    return {std::move(out), std::move(pivots)};
}

}  // namespace

Vector zero_vector(Field f, std::size_t n) { return Vector(n, FieldElement(f)); }

bool is_zero(const Vector& v) {
    for (const auto& e : v)
        if (!e.is_zero()) return false;
    return true;
}

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols) : field_(f), rows_(rows), cols_(cols), data_(rows * cols, FieldElement(f)) {}

Matrix Matrix::from_rows(Field f, std::size_t cols, const std::vector<Vector>& rows) {
    Matrix m(f, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    m.check_uniform();
    return m;
}

Matrix Matrix::from_ints(Field f, const std::vector<std::vector<std::int64_t>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(f, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = FieldElement(f, rows[r][c]);
    }
    return m;
}

Matrix Matrix::identity(Field f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldElement(f, 1);
    return m;
}

void Matrix::check_uniform() const {
    for (const auto& e : data_)
        if (!(e.field() == field_)) throw FieldMismatch("matrix over " + field_.name() + " has an entry over " + e.field().name());
}

Vector Matrix::row(std::size_t r) const { return Vector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }

void Matrix::append_row(const Vector& v) {
    if (v.size() != cols_) throw std::invalid_argument("append_row: wrong length");
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix out(field_, rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            const auto& a = (*this)(r, k);
            if (a.is_zero()) continue;
            for (std::size_t c = 0; c < o.cols_; ++c)
                if (!o(k, c).is_zero()) out(r, c) += a * o(k, c);
        }
    return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + o.scaled(FieldElement(field_, -1)); }

Matrix Matrix::scaled(const FieldElement& s) const {
    Matrix out = *this;
    for (auto& e : out.data_) e *= s;
    return out;
}

bool Matrix::is_zero() const {
    for (const auto& e : data_)
        if (!e.is_zero()) return false;
    return true;
}

Vector Matrix::apply_right(const Vector& v) const {
    if (v.size() != rows_) throw std::invalid_argument("vector-matrix product: shape mismatch");
    Vector out = zero_vector(field_, cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        if (v[r].is_zero()) continue;
        for (std::size_t c = 0; c < cols_; ++c)
            if (!(*this)(r, c).is_zero()) out[c] += v[r] * (*this)(r, c);
    }
    return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
    if (!(a.field_ == b.field_) || a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.data_.size(); ++i)
        if (!(a.data_[i] == b.data_[i])) return false;
    return true;
}

Echelon row_reduce(const Matrix& m) {
    m.check_uniform();
    const Field& f = m.field();
    switch (f.kind()) {
        case Field::Kind::Prime:
            return rref_typed(PrimeOps{f.characteristic()}, m);
        case Field::Kind::Quadratic:
            return rref_typed(QuadOps{f.characteristic(), f.nonresidue()}, m);
        case Field::Kind::Rational:
            return rref_typed(RationalOps{}, m);
    }
    throw std::logic_error("unknown field kind");
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

Matrix inverse(const Matrix& m) {
    const std::size_t n = m.rows();
    if (m.cols() != n) throw std::invalid_argument("inverse of a non-square matrix");
    Matrix aug(m.field(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = FieldElement(m.field(), 1);
    }
    Echelon e = row_reduce(aug);
    if (e.pivots.size() < n || (n && e.pivots[n - 1] >= n)) throw std::domain_error("matrix is singular");
    Matrix inv(m.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.rows(i, n + j);
    return inv;
}

LinSpace::LinSpace(Field f, std::size_t ambient_dim) : basis_(f, 0, ambient_dim) {}

LinSpace LinSpace::span(Field f, std::size_t ambient_dim, const std::vector<Vector>& generators) {
    return LinSpace(row_reduce(Matrix::from_rows(f, ambient_dim, generators)));
}

LinSpace LinSpace::row_space(const Matrix& m) { return LinSpace(row_reduce(m)); }

LinSpace LinSpace::full(Field f, std::size_t ambient_dim) { return LinSpace(row_reduce(Matrix::identity(f, ambient_dim))); }

std::vector<Vector> LinSpace::vectors() const {
    std::vector<Vector> out;
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
    return out;
}

Vector LinSpace::reduce(Vector v) const {
    if (v.size() != ambient_dim()) throw std::invalid_argument("reduce: vector length does not match the ambient space");
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
        const FieldElement f = v[pivots_[r]];
        if (f.is_zero()) continue;
        for (std::size_t c = pivots_[r]; c < ambient_dim(); ++c)
            if (!basis_(r, c).is_zero()) v[c] -= f * basis_(r, c);
    }
    return v;
}

bool LinSpace::contains(const Vector& v) const { return is_zero(reduce(v)); }

bool LinSpace::contains(const LinSpace& other) const {
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.vector(i))) return false;
    return true;
}

std::vector<FieldElement> LinSpace::coordinates(const Vector& v) const {
    if (!contains(v)) throw std::invalid_argument("coordinates: vector is not in the subspace");
    std::vector<FieldElement> c;
    for (std::size_t p : pivots_) c.push_back(v[p]);
    return c;
}

LinSpace LinSpace::sum(const LinSpace& other) const {
    auto gens = vectors();
    for (auto& v : other.vectors()) gens.push_back(std::move(v));
    LinSpace out = span(field(), ambient_dim(), gens);
    out.labels_ = labels_;
    return out;
}

LinSpace LinSpace::intersect(const LinSpace& other) const {
    // (a, b) with a*U + b*V = 0 gives a*U in both spaces
    Matrix stacked(field(), 0, ambient_dim());
    for (std::size_t i = 0; i < dim(); ++i) stacked.append_row(vector(i));
    for (std::size_t i = 0; i < other.dim(); ++i) stacked.append_row(other.vector(i));
    LinSpace rel = left_kernel(stacked);
    std::vector<Vector> gens;
    for (std::size_t k = 0; k < rel.dim(); ++k) {
        Vector a = rel.basis().row(k);
        a.resize(dim(), FieldElement(field()));
        gens.push_back(basis_.apply_right(a));
    }
    LinSpace out = span(field(), ambient_dim(), gens);
    out.labels_ = labels_;
    return out;
}

LinSpace& LinSpace::with_labels(std::shared_ptr<const MonomialBasis> labels) {
    labels_ = std::move(labels);
    return *this;
}

LinSpace kernel_basis(const Matrix& m) {
    Echelon e = row_reduce(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t p : e.pivots) is_pivot[p] = true;
    std::vector<Vector> gens;
    const FieldElement one(m.field(), 1);
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vector v = zero_vector(m.field(), cols);
        v[f] = one;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.rows(r, f);
        gens.push_back(std::move(v));
    }
    return LinSpace::span(m.field(), cols, gens);
}

LinSpace left_kernel(const Matrix& m) { return kernel_basis(m.transpose()); }

SparseVec to_sparse(const Vector& v) {
    SparseVec out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) out.emplace_back(i, v[i]);
    return out;
}

namespace {

template <class Ops>
struct TypedEchelon {
    using T = typename Ops::T;
    using Row = std::vector<std::pair<std::size_t, T>>;
    Ops ops;
    Field field;
    std::size_t cols;
    std::vector<Row> rows;                    // each row is monic at its pivot
    std::vector<std::ptrdiff_t> pivot_row;    // column -> row index, or -1

    TypedEchelon(Ops o, Field f, std::size_t c) : ops(o), field(f), cols(c), pivot_row(c, -1) {}

    // Reduce v to a row with no entry on an existing pivot column.
    // scratch buffers, all zero / false between calls
    mutable std::vector<T> acc;
    mutable std::vector<char> live;

    Row reduce(const SparseVec& v) const {
        if (acc.size() != cols) {
            acc.assign(cols, ops.zero());
            live.assign(cols, 0);
        }
        std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> heap;
        for (const auto& [c, x] : v) {
            if (c >= cols) throw std::invalid_argument("sparse row has a column out of range");
            if (!(x.field() == field)) throw FieldMismatch("mixed field tags: " + x.field().name() + " and " + field.name());
            acc[c] = ops.load(x);
            live[c] = 1;
            heap.push(c);
        }
        Row out;
        while (!heap.empty()) {
            const std::size_t c = heap.top();
            heap.pop();
            if (!live[c]) continue;
            live[c] = 0;
            if (ops.is_zero(acc[c])) continue;
            const std::ptrdiff_t r = pivot_row[c];
            if (r < 0) {
                out.emplace_back(c, acc[c]);
                acc[c] = ops.zero();
                continue;
            }
            const T f = acc[c];
            for (const auto& [k, y] : rows[static_cast<std::size_t>(r)]) {
                if (k == c) continue;
                acc[k] = ops.axpy(acc[k], f, y);
                if (!live[k]) {
                    live[k] = 1;
                    heap.push(k);
                }
            }
            acc[c] = ops.zero();
        }
        return out;
    }

    bool add(const SparseVec& v) {
        Row r = reduce(v);
        if (r.empty()) return false;
        const T inv = ops.inv(r.front().second);
        for (auto& [k, y] : r) y = ops.mul(y, inv);
        pivot_row[r.front().first] = static_cast<std::ptrdiff_t>(rows.size());
        rows.push_back(std::move(r));
        return true;
    }

    LinSpace span() const {
        std::vector<Vector> gens;
        for (const auto& r : rows) {
            Vector v = zero_vector(field, cols);
            for (const auto& [k, y] : r) v[k] = ops.store(field, y);
            gens.push_back(std::move(v));
        }
        return LinSpace::span(field, cols, gens);
    }
};

using AnyEchelon = std::variant<TypedEchelon<PrimeOps>, TypedEchelon<QuadOps>, TypedEchelon<RationalOps>>;

AnyEchelon make_echelon(Field f, std::size_t cols) {
    switch (f.kind()) {
        case Field::Kind::Prime:
            return TypedEchelon<PrimeOps>(PrimeOps{f.characteristic()}, f, cols);
        case Field::Kind::Quadratic:
            return TypedEchelon<QuadOps>(QuadOps{f.characteristic(), f.nonresidue()}, f, cols);
        case Field::Kind::Rational:
            break;
    }
    return TypedEchelon<RationalOps>(RationalOps{}, f, cols);
}

}  // namespace

struct SparseEchelon::Impl {
    AnyEchelon e;
};

SparseEchelon::SparseEchelon(Field f, std::size_t cols) : cols_(cols), impl_(std::make_unique<Impl>(Impl{make_echelon(f, cols)})) {}
SparseEchelon::~SparseEchelon() = default;
SparseEchelon::SparseEchelon(SparseEchelon&&) noexcept = default;
SparseEchelon& SparseEchelon::operator=(SparseEchelon&&) noexcept = default;

bool SparseEchelon::add(const SparseVec& v) {
    return std::visit([&](auto& e) { return e.add(v); }, impl_->e);
}

bool SparseEchelon::contains(const SparseVec& v) const {
    return std::visit([&](const auto& e) { return e.reduce(v).empty(); }, impl_->e);
}

std::size_t SparseEchelon::rank() const {
    return std::visit([](const auto& e) { return e.rows.size(); }, impl_->e);
}

LinSpace SparseEchelon::span() const {
    return std::visit([](const auto& e) { return e.span(); }, impl_->e);
}

std::size_t sparse_rank(Field f, std::size_t cols, const std::vector<SparseVec>& rows) {
    SparseEchelon e(f, cols);
    for (const auto& r : rows) e.add(r);
    return e.rank();
}

LinSpace left_kernel_sparse(Field f, std::size_t cols, const std::vector<SparseVec>& rows) {
    // eliminate [M | I]; rows whose pivot falls in the identity block have zero M-part
    const std::size_t n = rows.size();
    SparseEchelon e(f, cols + n);
    const FieldElement one(f, 1);
    for (std::size_t i = 0; i < n; ++i) {
        SparseVec v = rows[i];
        v.emplace_back(cols + i, one);
        e.add(v);
    }
    std::vector<Vector> gens;
    std::visit(
        [&](const auto& te) {
            for (const auto& r : te.rows) {
                if (r.front().first < cols) continue;
                Vector y = zero_vector(f, n);
                for (const auto& [k, x] : r) y[k - cols] = te.ops.store(f, x);
                gens.push_back(std::move(y));
            }
        },
        e.impl_->e);
    return LinSpace::span(f, n, gens);
}

}  // namespace chev
