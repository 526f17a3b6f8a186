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

#include "chev/invariants.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "chev/parallel.hpp"

namespace chev {

namespace {

// Images of monomials under a fixed substitution, sharing work across
// monomials with a common prefix.
class ImageCache {
   public:
    ImageCache(Field f, std::vector<SparsePoly> assignment) : f_(f), assign_(std::move(assignment)) {}

    const SparsePoly& image(const Monomial& u) {
        auto it = memo_.find(u);
        if (it != memo_.end()) return it->second;
        SparsePoly out(f_, assign_.front().nvars());
        if (u.degree() == 0) {
            out = SparsePoly::constant(f_, assign_.front().nvars(), FieldElement(f_, 1));
        } else {
            std::size_t j = u.nvars();
            while (u[--j] == 0) {
            }
            out = image(u.with_exponent(j, u[j] - 1)) * assign_[j];
        }
        return memo_.emplace(u, std::move(out)).first->second;
    }

   private:
    Field f_;
    std::vector<SparsePoly> assign_;
    std::unordered_map<Monomial, SparsePoly, MonomialHash> memo_;
};

using SparseAcc = std::map<std::size_t, FieldElement>;

void accumulate(SparseAcc& acc, const SparseVec& v, const FieldElement& c) {
    for (const auto& [i, x] : v) {
        auto [it, fresh] = acc.try_emplace(i, x * c);
        if (!fresh) {
            it->second += x * c;
            if (it->second.is_zero()) acc.erase(it);
        }
    }
}

SparseVec to_vec(const SparseAcc& acc) { return SparseVec(acc.begin(), acc.end()); }

// Normal form modulo a reduced echelon space, one block of width S at a time.
class BlockReducer {
   public:
    BlockReducer(const LinSpace* U, std::size_t S) : S_(S) {
        if (!U || U->dim() == 0) return;
        for (std::size_t r = 0; r < U->dim(); ++r) {
            pivot_row_[U->pivots()[r]] = rows_.size();
            rows_.push_back(to_sparse(U->vector(r)));
        }
    }

    SparseVec reduce(const SparseVec& v) const {
        if (rows_.empty()) return v;
        SparseAcc acc(v.begin(), v.end());
        for (const auto& [i, x] : v) {
            auto it = pivot_row_.find(i % S_);
            if (it == pivot_row_.end()) continue;
            const std::size_t base = i - i % S_;
            SparseVec shifted;
            for (const auto& [c, y] : rows_[it->second]) shifted.emplace_back(base + c, y);
            accumulate(acc, shifted, -x);
        }
        return to_vec(acc);
    }

   private:
    std::size_t S_;
    std::vector<SparseVec> rows_;
    std::unordered_map<std::size_t, std::size_t> pivot_row_;
};

// One group element or one-parameter family acting on coordinates: the
// substitution c_j -> sum assignment, with an optional extra variable t last.
struct Action {
    std::vector<SparsePoly> assignment;
    bool has_t;
};

Action conjugation_action(const LieFrame& frame, unsigned d, const std::vector<Matrix>& g, const std::vector<Matrix>& ginv, bool has_t) {
    const Field f = frame.field();
    const std::size_t size = frame.size();
    const std::size_t nv = d * size + (has_t ? 1 : 0);
    const std::size_t kmax = g.size() + ginv.size() - 2;
    // coords[l][k] = frame coordinates of the t^k coefficient of g B_l g^-1
    std::vector<std::vector<Vector>> coords(size);
    for (std::size_t l = 0; l < size; ++l)
        for (std::size_t k = 0; k <= kmax; ++k) {
            Matrix M(f, frame.n(), frame.n());
            for (std::size_t a = 0; a < g.size(); ++a)
                if (k >= a && k - a < ginv.size()) M = M + g[a] * frame[l] * ginv[k - a];
            coords[l].push_back(frame.coordinates(M));
        }
    Action act{std::vector<SparsePoly>(d * size, SparsePoly(f, nv)), has_t};
    for (unsigned q = 0; q < d; ++q)
        for (std::size_t j = 0; j < size; ++j) {
            SparsePoly& a = act.assignment[q * size + j];
            for (std::size_t l = 0; l < size; ++l)
                for (std::size_t k = 0; k <= kmax; ++k) {
                    const FieldElement& c = coords[l][k][j];
                    if (c.is_zero()) continue;
                    std::vector<std::uint8_t> e(nv, 0);
                    e[q * size + l] = 1;
                    if (k) {
                        if (!has_t) throw std::logic_error("constant action with a t-dependent coefficient");
                        e[nv - 1] = static_cast<std::uint8_t>(k);
                    }
                    a.add_term(Monomial(std::move(e)), c);
                }
        }
    return act;
}

// For each monomial u, the block vector of (g.u - u): one block of width S per
// positive power of t, or a single block when there is no t.
std::vector<SparseVec> difference_table(const Action& act, const std::vector<Monomial>& mons, const MonomialBasis& basis,
                                        const BlockReducer& red, Field f) {
    const std::size_t S = basis.size();
    ImageCache cache(f, act.assignment);
    std::vector<SparseVec> out;
    out.reserve(mons.size());
    for (const auto& u : mons) {
        Monomial ext = u;
        if (act.has_t) {
            std::vector<std::uint8_t> e = u.exponents();
            e.push_back(0);
            ext = Monomial(std::move(e));
        }
        const SparsePoly& img = cache.image(ext);
        SparseAcc acc;
        for (const auto& [mono, c] : img.terms()) {
            std::size_t block = 0;
            Monomial base = mono;
            if (act.has_t) {
                const unsigned k = mono[mono.nvars() - 1];
                if (k == 0) continue;  // the t^0 part is u itself
                block = k - 1;
                base = mono.truncated(mono.nvars() - 1);
            }
            acc.emplace(block * S + basis.index_of(base), c);
        }
        if (!act.has_t) {
            const std::size_t iu = basis.index_of(u);
            auto [it, fresh] = acc.try_emplace(iu, FieldElement(f, -1));
            if (!fresh) {
                it->second -= FieldElement(f, 1);
                if (it->second.is_zero()) acc.erase(it);
            }
        }
        out.push_back(red.reduce(to_vec(acc)));
    }
    return out;
}

std::size_t table_width(const std::vector<SparseVec>& table) {
    std::size_t w = 0;
    for (const auto& v : table)
        if (!v.empty()) w = std::max(w, v.back().first + 1);
    return w;
}

std::vector<std::vector<int>> frame_coordinate_weights(const LieFrame& frame, unsigned d) {
    if (!frame.has_weights())
        throw UnsupportedField("torus weights of the orthogonal Lie algebra need sqrt(-1) in " + frame.field().name() +
                               "; work over F_{p^2}");
    std::vector<std::vector<int>> w;
    for (unsigned q = 0; q < d; ++q)
        for (const auto& mu : frame.weights()) {
            std::vector<int> neg(mu.size());
            for (std::size_t i = 0; i < mu.size(); ++i) neg[i] = -mu[i];
            w.push_back(std::move(neg));
        }
    return w;
}

std::vector<Monomial> weight_zero_monomials(const std::vector<std::vector<int>>& w, const MonomialBasis& basis) {
    std::vector<Monomial> out;
    const std::size_t r = w.empty() ? 0 : w.front().size();
    for (const auto& u : basis.monomials()) {
        std::vector<int> s(r, 0);
        for (std::size_t j = 0; j < u.nvars(); ++j)
            if (u[j])
                for (std::size_t i = 0; i < r; ++i) s[i] += static_cast<int>(u[j]) * w[j][i];
        if (std::all_of(s.begin(), s.end(), [](int x) { return x == 0; })) out.push_back(u);
    }
    return out;
}

Vector reduce_mod(const LinSpace* U, Vector v) { return U ? U->reduce(std::move(v)) : v; }

}  // namespace

LieFrame slice_frame(const GroupSpec& spec, Field f, SliceKind kind) {
    return kind == SliceKind::Ambient ? ambient_frame(spec, f) : lie_frame(spec, f);
}

TorusData torus_data(const GroupSpec& spec, unsigned d, Field f, SliceKind kind) {
    LieFrame frame = slice_frame(spec, f, kind);
    return {spec.rank(), cartan_elements(spec, f), frame_coordinate_weights(frame, d)};
}

WeylAction weyl_generators(const GroupSpec& spec) {
    const unsigned r = spec.rank();
    WeylAction a{r, {}, 0};
    auto id = [&] {
        IntMatrix m(r, std::vector<std::int64_t>(r, 0));
        for (unsigned i = 0; i < r; ++i) m[i][i] = 1;
        return m;
    };
    for (unsigned i = 0; i + 1 < r; ++i) {
        IntMatrix s = id();
        s[i][i] = s[i + 1][i + 1] = 0;
        s[i][i + 1] = s[i + 1][i] = 1;
        a.generators.push_back(s);
    }
    if (spec.kind == GroupKind::SO && spec.n % 2 == 0) {
        if (r >= 2) {
            IntMatrix s = id();
            s[0][0] = s[1][1] = 0;
            s[0][1] = s[1][0] = -1;
            a.generators.push_back(s);
        }
    } else if (spec.kind != GroupKind::GL) {
        IntMatrix s = id();
        s[r - 1][r - 1] = -1;
        a.generators.push_back(s);
    }
    a.order = weyl_elements(a).size();
    return a;
}

std::vector<IntMatrix> weyl_elements(const WeylAction& action) {
    const unsigned r = action.rank;
    IntMatrix id(r, std::vector<std::int64_t>(r, 0));
    for (unsigned i = 0; i < r; ++i) id[i][i] = 1;
    auto mul = [&](const IntMatrix& a, const IntMatrix& b) {
        IntMatrix c(r, std::vector<std::int64_t>(r, 0));
        for (unsigned i = 0; i < r; ++i)
            for (unsigned k = 0; k < r; ++k)
                if (a[i][k])
                    for (unsigned j = 0; j < r; ++j) c[i][j] += a[i][k] * b[k][j];
        return c;
    };
    std::vector<IntMatrix> out{id};
    std::set<IntMatrix> seen{id};
    for (std::size_t i = 0; i < out.size(); ++i)
        for (const auto& g : action.generators) {
            IntMatrix h = mul(g, out[i]);
            if (seen.insert(h).second) out.push_back(std::move(h));
        }
    return out;
}

IntMatrix component_reflection(const GroupSpec& spec) {
    const unsigned r = spec.rank();
    IntMatrix m(r, std::vector<std::int64_t>(r, 0));
    for (unsigned i = 0; i < r; ++i) m[i][i] = 1;
    if (r) m[0][0] = -1;
    return m;
}

Matrix weyl_slice_action(const IntMatrix& g, unsigned d, unsigned m, Field f) {
    const std::size_t r = g.size(), nv = r * d;
    auto basis = MonomialBasis::slice(nv, m);
    std::vector<SparsePoly> assign;
    for (unsigned k = 0; k < d; ++k)
        for (std::size_t i = 0; i < r; ++i) {
            SparsePoly a(f, nv);
            for (std::size_t j = 0; j < r; ++j)
                if (g[i][j]) a.add_term(Monomial::variable(nv, k * r + j), FieldElement(f, g[i][j]));
            assign.push_back(std::move(a));
        }
    Matrix out(f, basis->size(), basis->size());
    if (nv == 0) {
        if (basis->size()) out(0, 0) = FieldElement(f, 1);
        return out;
    }
    ImageCache cache(f, assign);
    for (std::size_t i = 0; i < basis->size(); ++i)
        for (const auto& [mono, c] : cache.image((*basis)[i]).terms()) out(i, basis->index_of(mono)) = c;
    return out;
}

LinSpace finite_invariants(const WeylAction& action, unsigned d, unsigned m, Field f) {
    auto basis = MonomialBasis::slice(std::size_t(action.rank) * d, m);
    const std::size_t S = basis->size();
    std::vector<SparseVec> rows(S);
    for (std::size_t gi = 0; gi < action.generators.size(); ++gi) {
        Matrix A = weyl_slice_action(action.generators[gi], d, m, f) - Matrix::identity(f, S);
        for (std::size_t i = 0; i < S; ++i)
            for (std::size_t j = 0; j < S; ++j)
                if (!A(i, j).is_zero()) rows[i].emplace_back(gi * S + j, A(i, j));
    }
    LinSpace out = left_kernel_sparse(f, std::max<std::size_t>(1, action.generators.size() * S), rows);
    out.with_labels(basis);
    return out;
}

LinSpace torus_weight_zero(const GroupSpec& spec, unsigned d, unsigned m, Field f, SliceKind kind) {
    LieFrame frame = slice_frame(spec, f, kind);
    auto w = frame_coordinate_weights(frame, d);
    auto basis = MonomialBasis::slice(w.size(), m);
    std::optional<LinSpace> U;
    if (kind == SliceKind::Quotient) U = ibar_component(frame, d, m);
    std::vector<Vector> rows;
    for (const auto& u : weight_zero_monomials(w, *basis)) {
        Vector e = zero_vector(f, basis->size());
        e[basis->index_of(u)] = FieldElement(f, 1);
        rows.push_back(reduce_mod(U ? &*U : nullptr, std::move(e)));
    }
    LinSpace out = LinSpace::span(f, basis->size(), rows);
    out.with_labels(basis);
    return out;
}

std::vector<Matrix> OneParamSubgroup::coefficients() const {
    const Field f = e.field();
    return {Matrix::identity(f, e.rows()), e, (e * e).scaled(FieldElement(f, 1) / FieldElement(f, 2))};
}

Matrix OneParamSubgroup::at(const FieldElement& c) const {
    auto co = coefficients();
    return co[0] + co[1].scaled(c) + co[2].scaled(c * c);
}

void check_characteristic(const GroupSpec& spec, Field f) {
    if (f.is_finite() && f.characteristic() <= spec.n)
        throw std::domain_error("group invariants need p > n (got p = " + std::to_string(f.characteristic()) +
                                ", n = " + std::to_string(spec.n) + ")");
}

std::vector<OneParamSubgroup> root_subgroups(const GroupSpec& spec, Field f, bool simple_only) {
    LieFrame frame = lie_frame(spec, f);
    if (!frame.has_weights()) frame_coordinate_weights(frame, 1);  // throws
    const auto& W = frame.weights();
    auto is_zero_w = [](const std::vector<int>& w) { return std::all_of(w.begin(), w.end(), [](int x) { return x == 0; }); };
    auto lex_positive = [](const std::vector<int>& w) {
        for (int x : w)
            if (x) return x > 0;
        return false;
    };
    std::set<std::vector<int>> positive;
    for (const auto& w : W)
        if (lex_positive(w)) positive.insert(w);
    std::set<std::vector<int>> keep;
    for (const auto& a : positive) {
        bool decomposable = false;
        for (const auto& b : positive) {
            std::vector<int> c(a.size());
            for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
            if (positive.count(c)) decomposable = true;
        }
        if (!simple_only || !decomposable) {
            keep.insert(a);
            std::vector<int> neg(a.size());
            for (std::size_t i = 0; i < a.size(); ++i) neg[i] = -a[i];
            keep.insert(neg);
        }
    }
    std::vector<OneParamSubgroup> out;
    for (std::size_t l = 0; l < frame.size(); ++l) {
        if (is_zero_w(W[l]) || !keep.count(W[l])) continue;
        const Matrix& e = frame[l];
        if (!(e * e * e).is_zero()) throw std::logic_error("root vector " + frame.names()[l] + " has e^3 != 0");
        out.push_back({e, W[l]});
    }
    return out;
}

Matrix conjugation_matrix(const LieFrame& frame, const Matrix& g, const Matrix& ginv) {
    Matrix L(frame.field(), frame.size(), frame.size());
    for (std::size_t l = 0; l < frame.size(); ++l) {
        Vector c = frame.coordinates(g * frame[l] * ginv);
        for (std::size_t j = 0; j < frame.size(); ++j) L(l, j) = c[j];
    }
    return L;
}

LinSpace group_invariants(const GroupSpec& spec, unsigned d, unsigned m, Field f, SliceKind kind) {
    check_characteristic(spec, f);
    LieFrame frame = slice_frame(spec, f, kind);
    auto w = frame_coordinate_weights(frame, d);
    const std::size_t nv = w.size();
    auto basis = MonomialBasis::slice(nv, m);
    const std::size_t S = basis->size();
    std::optional<LinSpace> U;
    if (kind == SliceKind::Quotient && d >= 2) U = ibar_component(frame, d, m);
    const LinSpace* Up = (U && U->dim()) ? &*U : nullptr;
    BlockReducer red(Up, S);

    const std::vector<Monomial> W0 = weight_zero_monomials(w, *basis);
    // K: rows over W0 (local indices), the current candidate space
    std::vector<SparseVec> K;
    for (std::size_t i = 0; i < W0.size(); ++i) K.push_back({{i, FieldElement(f, 1)}});

    std::vector<Action> actions;
    if (m > 0) {
        for (const auto& x : root_subgroups(spec, f)) {
            auto co = x.coefficients();
            std::vector<Matrix> inv{co[0], co[1].scaled(FieldElement(f, -1)), co[2]};
            actions.push_back(conjugation_action(frame, d, co, inv, true));
        }
        if (spec.kind == GroupKind::O) {
            Matrix g0 = Matrix::identity(f, spec.n);
            g0(0, 0) = FieldElement(f, -1);
            actions.push_back(conjugation_action(frame, d, {g0}, {g0}, false));
        }
    }

    const std::size_t batch = std::max(1u, thread_count());
    for (std::size_t start = 0; start < actions.size() && !K.empty(); start += batch) {
        const std::size_t end = std::min(actions.size(), start + batch);
        std::vector<std::vector<SparseVec>> tables(end - start);
        parallel_for(end - start, [&](std::size_t i) { tables[i] = difference_table(actions[start + i], W0, *basis, red, f); });
        for (const auto& table : tables) {
            std::vector<SparseVec> cond;
            for (const auto& k : K) {
                SparseAcc acc;
                for (const auto& [i, c] : k) accumulate(acc, table[i], c);
                cond.push_back(to_vec(acc));
            }
            std::size_t width = std::max<std::size_t>(1, table_width(table));
            LinSpace Y = left_kernel_sparse(f, width, cond);
            std::vector<SparseVec> next;
            for (std::size_t r = 0; r < Y.dim(); ++r) {
                SparseAcc acc;
                const Vector y = Y.vector(r);
                for (std::size_t i = 0; i < K.size(); ++i)
                    if (!y[i].is_zero()) accumulate(acc, K[i], y[i]);
                next.push_back(to_vec(acc));
            }
            K = std::move(next);
            if (K.empty()) break;
        }
    }

    std::vector<Vector> rows;
    for (const auto& k : K) {
        Vector v = zero_vector(f, S);
        for (const auto& [i, c] : k) v[basis->index_of(W0[i])] = c;
        rows.push_back(reduce_mod(Up, std::move(v)));
    }
    LinSpace out = LinSpace::span(f, S, rows);
    out.with_labels(basis);
    return out;
}

EigenSplit eigen_split(const LinSpace& space, const std::function<Vector(const Vector&)>& involution) {
    const Field f = space.field();
    if (f.is_finite() && f.characteristic() == 2) throw std::invalid_argument("eigen_split needs characteristic != 2");
    const FieldElement half = FieldElement(f, 1) / FieldElement(f, 2);
    std::vector<Vector> plus, minus;
    for (const auto& v : space.vectors()) {
        Vector iv = involution(v);
        if (involution(iv) != v) throw std::invalid_argument("eigen_split: the map does not square to the identity");
        if (!space.contains(iv)) throw std::invalid_argument("eigen_split: the map does not preserve the space");
        Vector p(v.size(), FieldElement(f)), q(v.size(), FieldElement(f));
        for (std::size_t i = 0; i < v.size(); ++i) {
            p[i] = (v[i] + iv[i]) * half;
            q[i] = (v[i] - iv[i]) * half;
        }
        plus.push_back(std::move(p));
        minus.push_back(std::move(q));
    }
    EigenSplit out{LinSpace::span(f, space.ambient_dim(), plus), LinSpace::span(f, space.ambient_dim(), minus)};
    if (space.labels()) {
        out.plus.with_labels(space.labels());
        out.minus.with_labels(space.labels());
    }
    return out;
}

EigenSplit eigen_split(const LinSpace& space, const Matrix& involution) {
    return eigen_split(space, [&](const Vector& v) { return involution.apply_right(v); });
}

}  // namespace chev
