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

#include "chev/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string_view>

namespace chev {

Monomial::Monomial(std::vector<std::uint8_t> exps) : exps_(std::move(exps)) {
    for (auto e : exps_) degree_ += e;
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index) {
    Monomial m(nvars);
    m.exps_.at(index) = 1;
    m.degree_ = 1;
    return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
    if (nvars() != o.nvars()) throw std::invalid_argument("monomial product: variable counts differ");
    Monomial r = *this;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        unsigned e = unsigned(exps_[i]) + o.exps_[i];
        if (e > 255) throw std::overflow_error("monomial exponent exceeds 255");
        r.exps_[i] = static_cast<std::uint8_t>(e);
    }
    r.degree_ = degree_ + o.degree_;
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    if (nvars() != o.nvars()) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > o.exps_[i]) return false;
    return true;
}

Monomial Monomial::with_exponent(std::size_t i, unsigned e) const {
    std::vector<std::uint8_t> x = exps_;
    x.at(i) = static_cast<std::uint8_t>(e);
    return Monomial(std::move(x));
}

Monomial Monomial::truncated(std::size_t nvars) const {
    std::vector<std::uint8_t> x = exps_;
    x.resize(nvars, 0);
    return Monomial(std::move(x));
}

bool operator<(const Monomial& a, const Monomial& b) {
    if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
    return a.exps_ < b.exps_;
}

std::string Monomial::to_string(const std::vector<std::string>& names) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (!exps_[i]) continue;
        if (!first) os << '*';
        first = false;
        if (i < names.size())
            os << names[i];
        else
            os << 'x' << i;
        if (exps_[i] > 1) os << '^' << unsigned(exps_[i]);
    }
    if (first) os << '1';
    return os.str();
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
    const auto& e = m.exponents();
    return std::hash<std::string_view>{}(std::string_view(reinterpret_cast<const char*>(e.data()), e.size()));
}

std::vector<Monomial> monomials_of_degree(std::size_t v, unsigned m) {
    std::vector<Monomial> out;
    if (v == 0) {
        if (m == 0) out.emplace_back(0);
        return out;
    }
    std::vector<std::uint8_t> e(v, 0);
    // exponent of x0 descending, then recurse: this is decreasing lex order
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
        if (i + 1 == v) {
            e[i] = static_cast<std::uint8_t>(left);
            out.emplace_back(e);
            return;
        }
        for (int k = static_cast<int>(left); k >= 0; --k) {
            e[i] = static_cast<std::uint8_t>(k);
            rec(i + 1, left - static_cast<unsigned>(k));
        }
        e[i] = 0;
    };
    rec(0, m);
    return out;
}

MonomialBasis::MonomialBasis(std::vector<Monomial> monomials) : monomials_(std::move(monomials)) {
    index_.reserve(monomials_.size());
    for (std::size_t i = 0; i < monomials_.size(); ++i)
        if (!index_.emplace(monomials_[i], i).second) throw std::invalid_argument("duplicate monomial in basis");
}

std::shared_ptr<const MonomialBasis> MonomialBasis::slice(std::size_t nvars, unsigned degree) {
    return std::make_shared<const MonomialBasis>(monomials_of_degree(nvars, degree));
}

std::size_t MonomialBasis::index_of(const Monomial& m) const {
    auto it = index_.find(m);
    return it == index_.end() ? npos : it->second;
}

SparsePoly SparsePoly::constant(Field f, std::size_t nvars, const FieldElement& c) {
    SparsePoly p(f, nvars);
    p.add_term(Monomial(nvars), c);
    return p;
}

SparsePoly SparsePoly::variable(Field f, std::size_t nvars, std::size_t index) {
    SparsePoly p(f, nvars);
    p.add_term(Monomial::variable(nvars, index), FieldElement(f, 1));
    return p;
}

SparsePoly SparsePoly::monomial(const Monomial& m, const FieldElement& c) {
    SparsePoly p(c.field(), m.nvars());
    p.add_term(m, c);
    return p;
}

FieldElement SparsePoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? FieldElement(field_) : it->second;
}

int SparsePoly::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.degree()));
    return d;
}

bool SparsePoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    const unsigned d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    return true;
}

void SparsePoly::add_term(const Monomial& m, const FieldElement& c) {
    if (m.nvars() != nvars_) throw std::invalid_argument("term has the wrong variable count");
    if (!(c.field() == field_)) throw FieldMismatch("term over " + c.field().name() + " added to a polynomial over " + field_.name());
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void SparsePoly::check_compatible(const SparsePoly& o) const {
    if (!(field_ == o.field_)) throw FieldMismatch("polynomials over " + field_.name() + " and " + o.field_.name());
    if (nvars_ != o.nvars_) throw std::invalid_argument("polynomials in different variable counts");
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
    check_compatible(o);
    SparsePoly r(field_, nvars_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

SparsePoly SparsePoly::scaled(const FieldElement& c) const {
    SparsePoly r(field_, nvars_);
    if (c.is_zero()) return r;
    for (const auto& [m, a] : terms_) r.terms_.emplace(m, a * c);
    return r;
}

SparsePoly SparsePoly::pow(unsigned e) const {
    SparsePoly r = constant(field_, nvars_, FieldElement(field_, 1));
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

bool operator==(const SparsePoly& a, const SparsePoly& b) {
    if (!(a.field_ == b.field_) || a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
    auto it = b.terms_.begin();
    for (const auto& [m, c] : a.terms_) {
        if (!(it->first == m) || !(it->second == c)) return false;
        ++it;
    }
    return true;
}

Vector SparsePoly::to_vector(const MonomialBasis& basis) const {
    Vector v = zero_vector(field_, basis.size());
    for (const auto& [m, c] : terms_) {
        std::size_t i = basis.index_of(m);
        if (i == MonomialBasis::npos) throw std::invalid_argument("term " + m.to_string() + " lies outside the slice");
        v[i] = c;
    }
    return v;
}

SparsePoly SparsePoly::from_vector(Field f, const MonomialBasis& basis, const Vector& v) {
    if (v.size() != basis.size()) throw std::invalid_argument("from_vector: length mismatch");
    const std::size_t nv = basis.size() ? basis[0].nvars() : 0;
    SparsePoly p(f, nv);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) p.add_term(basis[i], v[i]);
    return p;
}

std::vector<SparsePoly> SparsePoly::collect(std::size_t var) const {
    std::vector<SparsePoly> out;
    for (const auto& [m, c] : terms_) {
        const unsigned k = m[var];
        while (out.size() <= k) out.emplace_back(field_, nvars_);
        out[k].add_term(m.with_exponent(var, 0), c);
    }
    return out;
}

std::string SparsePoly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (c.is_one() && m.degree() > 0)
            os << m.to_string(names);
        else if (m.degree() == 0)
            os << c.to_string();
        else
            os << c.to_string() << '*' << m.to_string(names);
    }
    return os.str();
}

SparsePoly substitute(const SparsePoly& p, const std::vector<SparsePoly>& assignment) {
    if (assignment.size() != p.nvars()) throw std::invalid_argument("substitute: assignment must cover every variable");
    std::size_t target_vars = assignment.empty() ? 0 : assignment.front().nvars();
    for (const auto& a : assignment) {
        if (a.nvars() != target_vars) throw std::invalid_argument("substitute: images live in different rings");
        if (!(a.field() == p.field())) throw FieldMismatch("substitute: image over a different field");
    }
    // powers[i][e] = assignment[i]^e, filled lazily
    std::vector<std::vector<SparsePoly>> powers(p.nvars());
    auto power = [&](std::size_t i, unsigned e) -> const SparsePoly& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(SparsePoly::constant(p.field(), target_vars, FieldElement(p.field(), 1)));
        while (cache.size() <= e) cache.push_back(cache.back() * assignment[i]);
        return cache[e];
    };
    SparsePoly out(p.field(), target_vars);
    for (const auto& [m, c] : p.terms()) {
        SparsePoly term = SparsePoly::constant(p.field(), target_vars, c);
        for (std::size_t i = 0; i < m.nvars() && !term.is_zero(); ++i)
            if (m[i]) term = term * power(i, m[i]);
        out += term;
    }
    return out;
}

LinSpace ideal_degree_component(Field f, const std::vector<SparsePoly>& generators, unsigned m, std::size_t v) {
    auto basis = MonomialBasis::slice(v, m);
    std::vector<Vector> rows;
    for (const auto& g : generators) {
        if (!(g.field() == f)) throw FieldMismatch("generator over " + g.field().name() + ", expected " + f.name());
        if (g.nvars() != v) throw std::invalid_argument("generator has the wrong variable count");
        if (!g.is_homogeneous()) throw std::invalid_argument("ideal_degree_component: generator " + g.to_string() + " is not homogeneous");
        if (g.is_zero()) continue;
        const int dg = g.degree();
        if (dg > static_cast<int>(m)) continue;
        for (const auto& u : monomials_of_degree(v, m - static_cast<unsigned>(dg))) {
            Vector row = zero_vector(f, basis->size());
            for (const auto& [mono, c] : g.terms()) row[basis->index_of(mono * u)] = c;
            rows.push_back(std::move(row));
        }
    }
    LinSpace out = LinSpace::span(f, basis->size(), rows);
    out.with_labels(basis);
    return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace chev
