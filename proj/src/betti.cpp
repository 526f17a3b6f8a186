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

#include "chev/betti.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "chev/combinat.hpp"

namespace chev {

namespace {

// shift[u][s] = index of x_s * u in the next slice
std::vector<std::vector<std::size_t>> shift_table(const MonomialBasis& from, const MonomialBasis& to, std::size_t r) {
    std::vector<std::vector<std::size_t>> t(from.size(), std::vector<std::size_t>(r));
    for (std::size_t u = 0; u < from.size(); ++u)
        for (std::size_t s = 0; s < r; ++s) t[u][s] = to.index_of(from[u] * Monomial::variable(r, s));
    return t;
}

unsigned max_degree(const std::vector<SparsePoly>& gens) {
    int k = 0;
    for (const auto& g : gens) k = std::max(k, g.degree());
    return static_cast<unsigned>(k);
}

std::vector<std::uint32_t> subsets_of_size(std::size_t r, int i) {
    std::vector<std::uint32_t> out;
    if (i < 0 || static_cast<std::size_t>(i) > r) return out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << r); ++mask)
        if (std::popcount(mask) == i) out.push_back(mask);
    return out;
}

}  // namespace

GradedModuleSlices GradedModuleSlices::ideal(Field f, const std::vector<SparsePoly>& gens, std::size_t r, unsigned top) {
    GradedModuleSlices M(f, Kind::Ideal, r);
    M.top_ = top;
    M.kappa_ = max_degree(gens);
    std::vector<LinSpace> I;
    std::vector<std::shared_ptr<const MonomialBasis>> S;
    for (unsigned j = 0; j <= top; ++j) {
        I.push_back(ideal_degree_component(f, gens, j, r));
        S.push_back(I.back().labels());
        M.dims_.push_back(I.back().dim());
    }
    for (unsigned j = 0; j < top; ++j) {
        auto sh = shift_table(*S[j], *S[j + 1], r);
        std::vector<Matrix> ms;
        for (std::size_t s = 0; s < r; ++s) {
            Matrix m(f, I[j].dim(), I[j + 1].dim());
            // column of the next slice -> coordinate index (RREF coordinates sit at pivots)
            std::vector<std::ptrdiff_t> coord(S[j + 1]->size(), -1);
            for (std::size_t k = 0; k < I[j + 1].pivots().size(); ++k) coord[I[j + 1].pivots()[k]] = static_cast<std::ptrdiff_t>(k);
            for (std::size_t b = 0; b < I[j].dim(); ++b) {
                Vector w = zero_vector(f, S[j + 1]->size());
                for (std::size_t u = 0; u < S[j]->size(); ++u)
                    if (!I[j].basis()(b, u).is_zero()) w[sh[u][s]] = I[j].basis()(b, u);
                for (std::size_t c = 0; c < w.size(); ++c)
                    if (coord[c] >= 0) m(b, static_cast<std::size_t>(coord[c])) = w[c];
            }
            ms.push_back(std::move(m));
        }
        M.mult_.push_back(std::move(ms));
    }
    return M;
}

GradedModuleSlices GradedModuleSlices::quotient(Field f, const std::vector<SparsePoly>& gens, std::size_t r, unsigned top) {
    GradedModuleSlices M(f, Kind::Quotient, r);
    M.top_ = top;
    M.kappa_ = max_degree(gens);
    std::vector<LinSpace> I;
    std::vector<std::shared_ptr<const MonomialBasis>> S;
    std::vector<std::vector<std::size_t>> standard;  // non-pivot monomials of each slice
    for (unsigned j = 0; j <= top; ++j) {
        I.push_back(ideal_degree_component(f, gens, j, r));
        S.push_back(I.back().labels());
        std::vector<bool> piv(S.back()->size(), false);
        for (std::size_t p : I.back().pivots()) piv[p] = true;
        std::vector<std::size_t> st;
        for (std::size_t c = 0; c < piv.size(); ++c)
            if (!piv[c]) st.push_back(c);
        M.dims_.push_back(st.size());
        standard.push_back(std::move(st));
    }
    for (unsigned j = 0; j < top; ++j) {
        auto sh = shift_table(*S[j], *S[j + 1], r);
        std::vector<Matrix> ms;
        for (std::size_t s = 0; s < r; ++s) {
            Matrix m(f, standard[j].size(), standard[j + 1].size());
            for (std::size_t b = 0; b < standard[j].size(); ++b) {
                Vector w = zero_vector(f, S[j + 1]->size());
                w[sh[standard[j][b]][s]] = FieldElement(f, 1);
                w = I[j + 1].reduce(std::move(w));
                for (std::size_t c = 0; c < standard[j + 1].size(); ++c) m(b, c) = w[standard[j + 1][c]];
            }
            ms.push_back(std::move(m));
        }
        M.mult_.push_back(std::move(ms));
    }
    return M;
}

GradedModuleSlices GradedModuleSlices::free(Field f, std::size_t r, unsigned top) {
    GradedModuleSlices M = quotient(f, {}, r, top);
    M.kind_ = Kind::Free;
    return M;
}

GradedModuleSlices GradedModuleSlices::generic(Field f, std::size_t r, std::vector<std::size_t> dims, std::vector<std::vector<Matrix>> mult) {
    if (dims.empty()) throw std::invalid_argument("generic module needs at least one slice");
    if (mult.size() + 1 != dims.size()) throw std::invalid_argument("generic module needs one multiplication table per degree below the top");
    for (std::size_t j = 0; j < mult.size(); ++j) {
        if (mult[j].size() != r) throw std::invalid_argument("generic module needs one multiplication per variable");
        for (const auto& m : mult[j])
            if (m.rows() != dims[j] || m.cols() != dims[j + 1] || !(m.field() == f))
                throw std::invalid_argument("multiplication matrix at degree " + std::to_string(j) + " has the wrong shape or field");
    }
    GradedModuleSlices M(f, Kind::Generic, r);
    M.top_ = static_cast<unsigned>(dims.size() - 1);
    M.dims_ = std::move(dims);
    M.mult_ = std::move(mult);
    return M;
}

void GradedModuleSlices::need(int j) const {
    if (j > static_cast<int>(top_)) throw std::out_of_range("missing slice: degree " + std::to_string(j) + " needed, computed up to " + std::to_string(top_));
}

std::size_t GradedModuleSlices::dim(int j) const {
    if (j < 0) return 0;
    need(j);
    return dims_[static_cast<std::size_t>(j)];
}

const Matrix& GradedModuleSlices::mult(int j, std::size_t s) const {
    if (j < 0) throw std::out_of_range("no multiplication below degree 0");
    need(j + 1);
    return mult_.at(static_cast<std::size_t>(j)).at(s);
}

bool GradedModuleSlices::multiplications_commute() const {
    for (unsigned j = 0; j + 1 < top_; ++j)
        for (std::size_t s = 0; s < r_; ++s)
            for (std::size_t t = s + 1; t < r_; ++t)
                if (!(mult_[j][s] * mult_[j + 1][t] == mult_[j][t] * mult_[j + 1][s])) return false;
    return true;
}

GradedModuleSlices GradedModuleSlices::change_basis(const std::vector<Matrix>& g) const {
    if (g.size() != dims_.size()) throw std::invalid_argument("change_basis needs one matrix per slice");
    GradedModuleSlices M = *this;
    std::vector<Matrix> ginv;
    for (const auto& m : g) ginv.push_back(inverse(m));
    for (std::size_t j = 0; j < mult_.size(); ++j)
        for (std::size_t s = 0; s < r_; ++s) M.mult_[j][s] = g[j] * mult_[j][s] * ginv[j + 1];
    return M;
}

namespace {

// rank of d_i : M_{j-i} (x) Wedge^i -> M_{j-i+1} (x) Wedge^{i-1}
std::size_t koszul_rank(const GradedModuleSlices& M, int i, int j) {
    const std::size_t r = M.nvars();
    if (i < 1 || static_cast<std::size_t>(i) > r) return 0;
    const int deg = j - i;
    const std::size_t src = M.dim(deg);
    if (src == 0) return 0;
    const std::size_t tgt = M.dim(deg + 1);
    if (tgt == 0) return 0;
    auto S = subsets_of_size(r, i);
    auto T = subsets_of_size(r, i - 1);
    std::vector<std::vector<SparseVec>> rows_of(r);
    for (std::size_t s = 0; s < r; ++s) {
        const Matrix& m = M.mult(deg, s);
        for (std::size_t b = 0; b < src; ++b) rows_of[s].push_back(to_sparse(m.row(b)));
    }
    const Field& f = M.field();
    SparseEchelon ech(f, T.size() * tgt);
    for (std::uint32_t mask : S)
        for (std::size_t b = 0; b < src; ++b) {
            std::vector<std::pair<std::size_t, FieldElement>> entries;
            int q = 0;
            for (std::size_t s = 0; s < r; ++s) {
                if (!(mask >> s & 1)) continue;
                const std::uint32_t rest = mask & ~(std::uint32_t(1) << s);
                const std::size_t block = static_cast<std::size_t>(std::lower_bound(T.begin(), T.end(), rest) - T.begin());
                for (const auto& [c, x] : rows_of[s][b]) entries.emplace_back(block * tgt + c, q % 2 ? -x : x);
                ++q;
            }
            std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b2) { return a.first < b2.first; });
            ech.add(entries);
        }
    return ech.rank();
}

std::size_t wedge_dim(std::size_t r, int i) { return (i < 0 || static_cast<std::size_t>(i) > r) ? 0 : binomial(r, static_cast<std::uint64_t>(i)); }

}  // namespace

std::size_t betti_number(const GradedModuleSlices& M, int i, int j) {
    const std::size_t r = M.nvars();
    if (i < 0 || static_cast<std::size_t>(i) > r) return 0;
    M.dim(j);  // the complex reaches degree j
    const std::size_t c = M.dim(j - i) * wedge_dim(r, i);
    return c - koszul_rank(M, i, j) - koszul_rank(M, i + 1, j);
}

std::size_t BettiTable::at(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
}

BettiTable betti_table(const GradedModuleSlices& M, int j_max) {
    BettiTable t;
    t.window = j_max;
    const int r = static_cast<int>(M.nvars());
    M.dim(j_max);
    for (int j = 0; j <= j_max; ++j) {
        // rank[i] = rank of d_i at internal degree j
        std::vector<std::size_t> rk(static_cast<std::size_t>(r) + 2, 0);
        for (int i = 1; i <= std::min(r, j + 1); ++i) rk[static_cast<std::size_t>(i)] = koszul_rank(M, i, j);
        for (int i = 0; i <= std::min(r, j); ++i) {
            const std::size_t c = M.dim(j - i) * wedge_dim(M.nvars(), i);
            const std::size_t b = c - rk[static_cast<std::size_t>(i)] - rk[static_cast<std::size_t>(i) + 1];
            if (b) t.entries[{i, j}] = b;
        }
    }
    return t;
}

BigInt chardin_bound(unsigned kappa, unsigned dvars) {
    if (kappa < 1 || dvars < 1) throw std::invalid_argument("chardin_bound needs kappa >= 1 and at least one variable");
    if (dvars <= 3) return BigInt(dvars) * (kappa - 1) + 1;
    const unsigned e = dvars - 4;
    if (e > kMaxTowerExponent) throw std::overflow_error("regularity bound tower 2^" + std::to_string(e) + " is too large to materialize");
    BigInt base = BigInt(3) * kappa * kappa * (kappa - 1);
    BigInt r = base;
    for (unsigned k = 0; k < e; ++k) r = r * r;
    return r + 1;
}

Regularity regularity_of(const BettiTable& t, const GradedModuleSlices& M) {
    Regularity out{std::nullopt, false};
    for (const auto& [ij, b] : t.entries) {
        const int v = ij.second - ij.first;
        if (!out.reg || v > *out.reg) out.reg = v;
    }
    switch (M.kind()) {
        case GradedModuleSlices::Kind::Free:
            out.complete = t.window >= 0;
            break;
        case GradedModuleSlices::Kind::Generic:
            out.complete = false;
            break;
        case GradedModuleSlices::Kind::Ideal:
        case GradedModuleSlices::Kind::Quotient: {
            if (M.max_generator_degree() == 0) {
                // ideal is 0 or the unit ideal: free or zero, nothing beyond degree 0
                out.complete = t.window >= 0;
                break;
            }
            // every nonzero beta has i <= r and j - i <= bound
            try {
                BigInt need = chardin_bound(M.max_generator_degree(), static_cast<unsigned>(M.nvars())) + M.nvars() - 1;
                out.complete = BigInt(t.window) >= need;
            } catch (const std::overflow_error&) {
                out.complete = false;
            }
            break;
        }
    }
    return out;
}

Regularity regularity_windowed(const GradedModuleSlices& M, int j_max) { return regularity_of(betti_table(M, j_max), M); }

}  // namespace chev
