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

#include "chev/scheme.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <stdexcept>

namespace chev {

namespace {

Vector flatten(const Matrix& X) {
    Vector v;
    v.reserve(X.rows() * X.cols());
    for (std::size_t i = 0; i < X.rows(); ++i)
        for (std::size_t j = 0; j < X.cols(); ++j) v.push_back(X(i, j));
    return v;
}

Matrix elementary(Field f, unsigned n, std::size_t i, std::size_t j) {
    Matrix m(f, n, n);
    m(i, j) = FieldElement(f, 1);
    return m;
}

std::string index_name(const char* prefix, std::size_t i, std::size_t j) {
    return std::string(prefix) + std::to_string(i + 1) + std::to_string(j + 1);
}

// Weight of B under the torus, read off from P^-1 B P: every nonzero entry
// (a,b) must carry the same weight omega[a] - omega[b].
std::vector<int> weight_of(const Matrix& B, const Matrix& P, const Matrix& Pinv, const std::vector<std::vector<int>>& omega) {
    Matrix Q = Pinv * B * P;
    std::optional<std::vector<int>> w;
    for (std::size_t a = 0; a < Q.rows(); ++a)
        for (std::size_t b = 0; b < Q.cols(); ++b) {
            if (Q(a, b).is_zero()) continue;
            std::vector<int> c(omega[a].size());
            for (std::size_t k = 0; k < c.size(); ++k) c[k] = omega[a][k] - omega[b][k];
            if (w && *w != c) throw std::logic_error("frame element is not a torus weight vector");
            w = c;
        }
    if (!w) throw std::logic_error("zero frame element");
    return *w;
}

void assign_weights(LieFrame& frame, const GroupSpec& spec) {
    WeightBasis wb = weight_basis(spec, frame.field());
    Matrix Pinv = inverse(wb.P);
    std::vector<std::vector<int>> w;
    for (const auto& B : frame.basis()) w.push_back(weight_of(B, wb.P, Pinv, wb.omega));
    frame.set_weights(std::move(w));
}

}  // namespace

GroupKind parse_group(const std::string& s) {
    std::string t;
    for (char c : s) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (t == "gl") return GroupKind::GL;
    if (t == "o") return GroupKind::O;
    if (t == "so") return GroupKind::SO;
    if (t == "sp") return GroupKind::Sp;
    throw std::invalid_argument("unknown group '" + s + "' (expected gl, o, so or sp)");
}

std::string group_name(GroupKind k) {
    switch (k) {
        case GroupKind::GL:
            return "GL";
        case GroupKind::O:
            return "O";
        case GroupKind::SO:
            return "SO";
        case GroupKind::Sp:
            return "Sp";
    }
    return "?";
}

unsigned GroupSpec::rank() const { return kind == GroupKind::GL ? n : n / 2; }

Matrix to_matrix(const IntMatrix& m, Field f) { return Matrix::from_ints(f, m); }

GroupSpec group_spec(GroupKind kind, unsigned n) {
    if (n < 2) throw std::invalid_argument("group size must be at least 2");
    if (kind == GroupKind::Sp && n % 2) throw std::invalid_argument("Sp needs even n, got " + std::to_string(n));
    GroupSpec spec{kind, n, 0, {}, {}};
    const std::size_t N = std::size_t(n) * n;
    const Field Q = Field::rationals();
    if (kind == GroupKind::GL) {
        spec.lie_dim = N;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                IntMatrix e(n, std::vector<std::int64_t>(n, 0));
                e[i][j] = 1;
                spec.lie_basis.push_back(e);
            }
        return spec;
    }
    spec.form.assign(n, std::vector<std::int64_t>(n, 0));
    if (kind == GroupKind::Sp) {
        const unsigned h = n / 2;
        for (unsigned i = 0; i < h; ++i) {
            spec.form[i][h + i] = 1;
            spec.form[h + i][i] = -1;
        }
    } else {
        for (unsigned i = 0; i < n; ++i) spec.form[i][i] = 1;
    }
    // constraint (i,j): entry (i,j) of A^t J + J A, as a functional on A
    // (for the identity form this is A + A^t)
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vector r = zero_vector(Q, N);
            for (std::size_t a = 0; a < n; ++a) {
                if (spec.form[a][j]) r[a * n + i] += FieldElement(Q, spec.form[a][j]);
                if (spec.form[i][a]) r[a * n + j] += FieldElement(Q, spec.form[i][a]);
            }
            rows.push_back(std::move(r));
        }
    LinSpace g = kernel_basis(Matrix::from_rows(Q, N, rows));
    spec.lie_dim = g.dim();
    for (std::size_t r = 0; r < g.dim(); ++r) {
        IntMatrix B(n, std::vector<std::int64_t>(n, 0));
        for (std::size_t c = 0; c < N; ++c) {
            auto v = g.basis()(r, c).to_small_integer();
            if (!v) throw std::logic_error("non-integral Lie algebra basis");
            B[c / n][c % n] = *v;
        }
        spec.lie_basis.push_back(std::move(B));
    }
    return spec;
}

bool has_sqrt_minus_one(Field f) { return FieldElement(f, -1).sqrt().has_value(); }

Field working_field(const GroupSpec& spec, std::uint32_t p) {
    return spec.is_orthogonal() ? Field::with_sqrt_minus_one(p) : Field::prime(p);
}

LieFrame::LieFrame(Field f, unsigned n, std::vector<Matrix> basis, std::vector<std::string> names)
    : field_(f), n_(n), basis_(std::move(basis)), names_(std::move(names)), span_(f, std::size_t(n) * n), transform_(f, 0, 0) {
    const std::size_t k = basis_.size(), N = std::size_t(n) * n;
    if (names_.size() != k) throw std::invalid_argument("frame needs one name per basis element");
    Matrix aug(f, k, N + k);
    for (std::size_t r = 0; r < k; ++r) {
        if (basis_[r].rows() != n || basis_[r].cols() != n) throw std::invalid_argument("frame element has the wrong shape");
        if (!(basis_[r].field() == f)) throw FieldMismatch("frame element over " + basis_[r].field().name());
        Vector v = flatten(basis_[r]);
        for (std::size_t c = 0; c < N; ++c) aug(r, c) = v[c];
        aug(r, N + r) = FieldElement(f, 1);
    }
    Echelon e = row_reduce(aug);
    if (k && (e.pivots.size() < k || e.pivots[k - 1] >= N)) throw std::invalid_argument("frame elements are linearly dependent");
    Matrix R(f, k, N);
    transform_ = Matrix(f, k, k);
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = 0; c < N; ++c) R(r, c) = e.rows(r, c);
        for (std::size_t c = 0; c < k; ++c) transform_(r, c) = e.rows(r, N + c);
    }
    span_ = LinSpace::row_space(R);
}

Vector LieFrame::coordinates(const Matrix& X) const {
    Vector x = flatten(X);
    if (!span_.contains(x)) throw std::invalid_argument("matrix lies outside the frame span");
    Vector cr;
    cr.reserve(span_.dim());
    for (std::size_t p : span_.pivots()) cr.push_back(x[p]);
    return transform_.apply_right(cr);
}

bool LieFrame::contains(const Matrix& X) const { return span_.contains(flatten(X)); }

void LieFrame::set_weights(std::vector<std::vector<int>> w) {
    if (!w.empty() && w.size() != basis_.size()) throw std::invalid_argument("one weight per frame element expected");
    weights_ = std::move(w);
}

WeightBasis weight_basis(const GroupSpec& spec, Field f) {
    const unsigned n = spec.n, r = spec.rank();
    WeightBasis wb{Matrix::identity(f, n), {}};
    auto unit = [r](int k, int s) {
        std::vector<int> v(r, 0);
        if (k >= 0) v[k] = s;
        return v;
    };
    switch (spec.kind) {
        case GroupKind::GL:
            for (unsigned a = 0; a < n; ++a) wb.omega.push_back(unit(int(a), 1));
            return wb;
        case GroupKind::Sp:
            for (unsigned a = 0; a < n; ++a) wb.omega.push_back(a < r ? unit(int(a), 1) : unit(int(a - r), -1));
            return wb;
        case GroupKind::O:
        case GroupKind::SO:
            break;
    }
    auto i = FieldElement(f, -1).sqrt();
    if (!i) throw UnsupportedField("diagonalizing the so torus needs sqrt(-1), which " + f.name() + " lacks");
    // columns v_k^+ = e_2k + i e_2k+1, v_k^- = e_2k - i e_2k+1, then e_{n-1} for odd n
    Matrix P(f, n, n);
    for (unsigned k = 0; k < r; ++k) {
        P(2 * k, 2 * k) = FieldElement(f, 1);
        P(2 * k + 1, 2 * k) = *i;
        P(2 * k, 2 * k + 1) = FieldElement(f, 1);
        P(2 * k + 1, 2 * k + 1) = -*i;
        wb.omega.push_back(unit(int(k), 1));
        wb.omega.push_back(unit(int(k), -1));
    }
    if (n % 2) {
        P(n - 1, n - 1) = FieldElement(f, 1);
        wb.omega.push_back(unit(-1, 0));
    }
    wb.P = P;
    return wb;
}

std::vector<Matrix> cartan_elements(const GroupSpec& spec, Field f) {
    std::vector<Matrix> H;
    const unsigned n = spec.n, r = spec.rank();
    for (unsigned k = 0; k < r; ++k) {
        Matrix h(f, n, n);
        switch (spec.kind) {
            case GroupKind::GL:
                h(k, k) = FieldElement(f, 1);
                break;
            case GroupKind::Sp:
                h(k, k) = FieldElement(f, 1);
                h(r + k, r + k) = FieldElement(f, -1);
                break;
            case GroupKind::O:
            case GroupKind::SO:
                h(2 * k, 2 * k + 1) = FieldElement(f, 1);
                h(2 * k + 1, 2 * k) = FieldElement(f, -1);
                break;
        }
        H.push_back(std::move(h));
    }
    return H;
}

LieFrame standard_frame(unsigned n, Field f) {
    std::vector<Matrix> basis;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            basis.push_back(elementary(f, n, i, j));
            names.push_back(index_name("x", i, j));
        }
    return LieFrame(f, n, std::move(basis), std::move(names));
}

LieFrame echelon_frame(const GroupSpec& spec, Field f) {
    std::vector<Matrix> basis;
    std::vector<std::string> names;
    for (const auto& B : spec.lie_basis) {
        basis.push_back(to_matrix(B, f));
        // name by the pivot, the first nonzero entry in row-major order
        for (std::size_t c = 0; c < std::size_t(spec.n) * spec.n; ++c)
            if (B[c / spec.n][c % spec.n]) {
                names.push_back(index_name("x", c / spec.n, c % spec.n));
                break;
            }
    }
    LieFrame frame(f, spec.n, std::move(basis), std::move(names));
    if (!spec.is_orthogonal()) assign_weights(frame, spec);
    return frame;
}

LieFrame lie_frame(const GroupSpec& spec, Field f) {
    if (!spec.is_orthogonal() || !has_sqrt_minus_one(f)) return echelon_frame(spec, f);
    const unsigned n = spec.n, r = spec.rank();
    WeightBasis wb = weight_basis(spec, f);
    std::vector<Matrix> basis;
    std::vector<std::string> names;
    for (const auto& h : cartan_elements(spec, f)) {
        basis.push_back(h);
        names.push_back("h" + std::to_string(basis.size()));
    }
    // u w^t - w u^t over pairs of eigenvectors, skipping the pairs (v_k^+, v_k^-)
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            if (a / 2 == b / 2 && a / 2 < r) continue;
            Matrix B(f, n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) B(i, j) = wb.P(i, a) * wb.P(j, b) - wb.P(i, b) * wb.P(j, a);
            basis.push_back(std::move(B));
            names.push_back(index_name("w", a, b));
        }
    LieFrame frame(f, n, std::move(basis), std::move(names));
    assign_weights(frame, spec);
    return frame;
}

LieFrame ambient_frame(const GroupSpec& spec, Field f) {
    if (!spec.is_orthogonal() || !has_sqrt_minus_one(f)) {
        LieFrame frame = standard_frame(spec.n, f);
        if (!spec.is_orthogonal()) assign_weights(frame, spec);
        return frame;
    }
    WeightBasis wb = weight_basis(spec, f);
    Matrix Pinv = inverse(wb.P);
    std::vector<Matrix> basis;
    std::vector<std::string> names;
    for (std::size_t a = 0; a < spec.n; ++a)
        for (std::size_t b = 0; b < spec.n; ++b) {
            basis.push_back(wb.P * elementary(f, spec.n, a, b) * Pinv);
            names.push_back(index_name("y", a, b));
        }
    LieFrame frame(f, spec.n, std::move(basis), std::move(names));
    assign_weights(frame, spec);
    return frame;
}

GenericMatrices generic_matrices(const LieFrame& frame, unsigned d) {
    const unsigned n = frame.n();
    const Field f = frame.field();
    GenericMatrices g{n, d, d * frame.size(), {}};
    for (unsigned k = 0; k < d; ++k) {
        std::vector<std::vector<SparsePoly>> X(n, std::vector<SparsePoly>(n, SparsePoly(f, g.nvars)));
        for (std::size_t l = 0; l < frame.size(); ++l) {
            const Monomial var = Monomial::variable(g.nvars, k * frame.size() + l);
            for (unsigned i = 0; i < n; ++i)
                for (unsigned j = 0; j < n; ++j)
                    if (!frame[l](i, j).is_zero()) X[i][j].add_term(var, frame[l](i, j));
        }
        g.mats.push_back(std::move(X));
    }
    return g;
}

GenericMatrices generic_matrices(const GroupSpec& spec, unsigned d, Realization r, Field f) {
    return generic_matrices(r == Realization::Ambient ? standard_frame(spec.n, f) : lie_frame(spec, f), d);
}

std::vector<SparsePoly> commutator_generators(const GenericMatrices& g) {
    std::vector<SparsePoly> out;
    if (g.mats.empty()) return out;
    const Field f = g.mats[0][0][0].field();
    const unsigned n = g.n;
    for (unsigned k = 0; k < g.d; ++k)
        for (unsigned l = k + 1; l < g.d; ++l) {
            const auto& X = g.mats[k];
            const auto& Y = g.mats[l];
            for (unsigned i = 0; i < n; ++i)
                for (unsigned j = 0; j < n; ++j) {
                    SparsePoly e(f, g.nvars);
                    for (unsigned a = 0; a < n; ++a) {
                        e += X[i][a] * Y[a][j];
                        e -= Y[i][a] * X[a][j];
                    }
                    out.push_back(std::move(e));
                }
        }
    return out;
}

std::vector<SparsePoly> lie_constraints(const GroupSpec& spec, unsigned d, Field f) {
    std::vector<SparsePoly> out;
    if (spec.kind == GroupKind::GL) return out;
    GenericMatrices g = generic_matrices(standard_frame(spec.n, f), d);
    const unsigned n = spec.n;
    for (unsigned k = 0; k < d; ++k) {
        const auto& X = g.mats[k];
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) {
                SparsePoly e(f, g.nvars);
                for (unsigned a = 0; a < n; ++a) {
                    if (spec.form[a][j]) e += X[a][i].scaled(FieldElement(f, spec.form[a][j]));
                    if (spec.form[i][a]) e += X[a][j].scaled(FieldElement(f, spec.form[i][a]));
                }
                if (!e.is_zero()) out.push_back(std::move(e));
            }
    }
    return out;
}

LinSpace ibar_component(const LieFrame& frame, unsigned d, unsigned m) {
    GenericMatrices g = generic_matrices(frame, d);
    return ideal_degree_component(frame.field(), commutator_generators(g), m, g.nvars);
}

LinSpace ibar_component(const GroupSpec& spec, unsigned d, unsigned m, Field f) { return ibar_component(lie_frame(spec, f), d, m); }

std::size_t commuting_hilbert(const GroupSpec& spec, unsigned d, unsigned m, Field f) {
    LinSpace I = ibar_component(spec, d, m, f);
    return I.ambient_dim() - I.dim();
}

}  // namespace chev
