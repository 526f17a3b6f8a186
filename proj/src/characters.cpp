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

#include "chev/characters.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace chev {

namespace {

enum class RootType { A, B, C, D };

RootType root_type(const GroupSpec& spec) {
    switch (spec.kind) {
        case GroupKind::GL:
            return RootType::A;
        case GroupKind::Sp:
            return RootType::C;
        default:
            return spec.n % 2 ? RootType::B : RootType::D;
    }
}

void reject_disconnected(const GroupSpec& spec) {
    if (spec.kind == GroupKind::O)
        throw std::invalid_argument("O_" + std::to_string(spec.n) +
                                    " is disconnected; Weyl characters and the certificate are offered for GL, SO and Sp only");
}

Weight apply(const IntMatrix& g, const Weight& w) {
    Weight out(w.size(), 0);
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = 0; j < w.size(); ++j) out[i] += static_cast<int>(g[i][j]) * w[j];
    return out;
}

int sign_of(const IntMatrix& g) {
    // signed permutation: sign of the permutation times the product of the signs
    const std::size_t r = g.size();
    std::vector<std::size_t> perm(r);
    int s = 1;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            if (g[i][j]) {
                perm[i] = j;
                if (g[i][j] < 0) s = -s;
            }
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j)
            if (perm[i] > perm[j]) s = -s;
    return s;
}

Weight add(Weight a, const Weight& b, int scale = 1) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += scale * b[i];
    return a;
}

}  // namespace

void CharacterVector::add(const Weight& w, std::int64_t c) {
    if (c == 0) return;
    auto [it, fresh] = terms.try_emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
}

CharacterVector& CharacterVector::operator+=(const CharacterVector& o) {
    for (const auto& [w, c] : o.terms) add(w, c);
    return *this;
}

CharacterVector CharacterVector::scaled(std::int64_t c) const {
    CharacterVector out;
    for (const auto& [w, x] : terms) out.add(w, x * c);
    return out;
}

std::int64_t CharacterVector::dimension() const {
    std::int64_t s = 0;
    for (const auto& [w, c] : terms) s += c;
    return s;
}

std::string CharacterVector::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << it->second << "*(";
        for (std::size_t i = 0; i < it->first.size(); ++i) os << (i ? "," : "") << it->first[i];
        os << ")";
    }
    if (first) os << "0";
    return os.str();
}

CharacterVector subspace_character(const GroupSpec& spec, unsigned d, const LinSpace& V, Field f, SliceKind kind) {
    if (!V.labels()) throw std::invalid_argument("subspace_character needs a space labelled by its slice");
    TorusData t = torus_data(spec, d, f, kind);
    const MonomialBasis& basis = *V.labels();
    std::map<Weight, std::vector<std::size_t>> by_weight;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        Weight w(t.rank, 0);
        for (std::size_t j = 0; j < basis[i].nvars(); ++j)
            if (basis[i][j]) w = add(w, t.weights[j], static_cast<int>(basis[i][j]));
        by_weight[w].push_back(i);
    }
    CharacterVector out;
    for (const auto& [w, cols] : by_weight) {
        std::vector<SparseVec> rows;
        for (std::size_t r = 0; r < V.dim(); ++r) {
            SparseVec row;
            for (std::size_t c = 0; c < cols.size(); ++c)
                if (!V.basis()(r, cols[c]).is_zero()) row.emplace_back(c, V.basis()(r, cols[c]));
            if (!row.empty()) rows.push_back(std::move(row));
        }
        if (!rows.empty()) out.add(w, static_cast<std::int64_t>(sparse_rank(f, cols.size(), rows)));
    }
    return out;
}

CharacterVector slice_character(const GroupSpec& spec, unsigned d, unsigned m, Field f, SliceKind kind) {
    TorusData t = torus_data(spec, d, f, kind);
    CharacterVector out;
    for (const auto& u : monomials_of_degree(t.weights.size(), m)) {
        Weight w(t.rank, 0);
        for (std::size_t j = 0; j < u.nvars(); ++j)
            if (u[j]) w = add(w, t.weights[j], static_cast<int>(u[j]));
        out.add(w, 1);
    }
    if (kind == SliceKind::Quotient && d >= 2) {
        LinSpace I = ibar_component(lie_frame(spec, f), d, m);
        out += subspace_character(spec, d, I, f, SliceKind::Free).scaled(-1);
    }
    return out;
}

std::vector<Weight> positive_roots(const GroupSpec& spec) {
    const unsigned r = spec.rank();
    const RootType type = root_type(spec);
    std::vector<Weight> out;
    auto e = [&](std::size_t i) {
        Weight w(r, 0);
        w[i] = 1;
        return w;
    };
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) {
            out.push_back(add(e(i), e(j), -1));
            if (type != RootType::A) out.push_back(add(e(i), e(j)));
        }
    for (std::size_t i = 0; i < r; ++i) {
        if (type == RootType::B) out.push_back(e(i));
        if (type == RootType::C) out.push_back(add(e(i), e(i)));
    }
    return out;
}

bool is_dominant(const Weight& w, const GroupSpec& spec) {
    const std::size_t r = spec.rank();
    if (w.size() != r) return false;
    const RootType type = root_type(spec);
    for (std::size_t i = 0; i + 1 < r; ++i) {
        if (type == RootType::D && i + 2 == r) {
            if (w[i] < std::abs(w[i + 1])) return false;
        } else if (w[i] < w[i + 1]) {
            return false;
        }
    }
    if ((type == RootType::B || type == RootType::C) && r && w[r - 1] < 0) return false;
    return true;
}

CharacterVector weyl_character(const Weight& lambda, const GroupSpec& spec) {
    reject_disconnected(spec);
    if (!is_dominant(lambda, spec)) {
        std::ostringstream os;
        for (std::size_t i = 0; i < lambda.size(); ++i) os << (i ? "," : "") << lambda[i];
        throw std::invalid_argument("weight (" + os.str() + ") is not dominant for " + group_name(spec.kind) + "_" + std::to_string(spec.n));
    }
    const auto roots = positive_roots(spec);
    // doubled: 2 rho is the sum of the positive roots
    Weight two_rho(spec.rank(), 0);
    for (const auto& a : roots) two_rho = add(two_rho, a);
    const Weight top = add(add(lambda, lambda), two_rho);
    std::map<Weight, std::int64_t> P;
    for (const auto& g : weyl_elements(weyl_generators(spec))) {
        auto& c = P[apply(g, top)];
        c += sign_of(g);
    }
    std::erase_if(P, [](const auto& kv) { return kv.second == 0; });
    // divide by (1 - e^{-2 alpha}) for every positive root: along each line
    // mu + Z*step, Q_mu = sum_{k >= 0} P_{mu + k step} and the line sums to zero
    for (const auto& a : roots) {
        const Weight step = add(a, a);
        std::size_t lead = 0;
        while (step[lead] == 0) ++lead;
        auto line_key = [&](const Weight& w) {
            int k = w[lead] / step[lead];
            if (w[lead] - k * step[lead] < 0) --k;
            return add(w, step, -k);
        };
        std::map<Weight, std::pair<Weight, Weight>> lines;  // key -> (lowest, highest)
        for (const auto& [w, c] : P) {
            auto [it, fresh] = lines.try_emplace(line_key(w), w, w);
            if (!fresh) {
                it->second.first = std::min(it->second.first, w);
                it->second.second = std::max(it->second.second, w);
            }
        }
        std::map<Weight, std::int64_t> Q;
        for (const auto& [key, ends] : lines) {
            std::int64_t acc = 0;
            for (Weight w = ends.second;; w = add(w, step, -1)) {
                auto it = P.find(w);
                if (it != P.end()) acc += it->second;
                if (w == ends.first) break;
                if (acc) Q[w] = acc;
            }
            if (acc) throw std::logic_error("Weyl character: alternant not divisible by the denominator");
        }
        P = std::move(Q);
    }
    CharacterVector out;
    for (const auto& [w, c] : P) {
        Weight h = add(w, two_rho, -1);
        for (int& x : h) {
            if (x % 2) throw std::logic_error("Weyl character: odd doubled weight");
            x /= 2;
        }
        out.add(h, c);
    }
    return out;
}

WeylDecomposition decompose_into_weyl(const CharacterVector& c, const GroupSpec& spec) {
    reject_disconnected(spec);
    for (const auto& g : weyl_generators(spec).generators)
        for (const auto& [w, x] : c.terms) {
            auto it = c.terms.find(apply(g, w));
            if (it == c.terms.end() || it->second != x)
                throw std::invalid_argument("character is not invariant under the Weyl group");
        }
    WeylDecomposition out;
    CharacterVector rest = c;
    // positive roots are lexicographically positive, so the largest remaining
    // weight is dominant and is the highest weight of its Weyl character
    while (!rest.terms.empty()) {
        const auto& [top, coeff] = *rest.terms.rbegin();
        const Weight lambda = top;
        const std::int64_t k = coeff;
        out.coefficients[lambda] = k;
        rest += weyl_character(lambda, spec).scaled(-k);
    }
    return out;
}

bool Certificate::pass() const {
    return std::all_of(degrees.begin(), degrees.end(), [](const CertificateDegree& d) { return d.pass; });
}

CertificateDegree certify_character(const CharacterVector& c, const GroupSpec& spec, unsigned degree) {
    CertificateDegree out{degree, true, std::nullopt, decompose_into_weyl(c, spec)};
    for (const auto& [w, k] : out.decomposition.coefficients)
        if (k < 0) {
            out.pass = false;
            out.witness = std::make_pair(w, k);
            break;
        }
    return out;
}

Certificate goodfil_certificate(const GroupSpec& spec, unsigned d, std::uint32_t p, unsigned max_degree, CertifiedModule module) {
    reject_disconnected(spec);
    const Field f = working_field(spec, p);
    Certificate out;
    out.degrees.resize(max_degree + 1);
    for (unsigned m = 0; m <= max_degree; ++m) {
        CharacterVector c;
        switch (module) {
            case CertifiedModule::Ideal:
                c = subspace_character(spec, d, ibar_component(lie_frame(spec, f), d, m), f);
                break;
            case CertifiedModule::Free:
                c = slice_character(spec, d, m, f);
                break;
            case CertifiedModule::Quotient:
                c = slice_character(spec, d, m, f, SliceKind::Quotient);
                break;
        }
        out.degrees[m] = certify_character(c, spec, m);
    }
    return out;
}

std::string certificate_status(bool pass) { return pass ? "certificate PASS" : "certificate FAIL"; }

}  // namespace chev
