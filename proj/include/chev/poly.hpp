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
 * @file poly.hpp
 * @brief Monomials, sparse multivariate polynomials and graded slices.
 *
 * Monomials compare in graded lexicographic order (total degree first, then
 * the exponent of x0, x1, ... lexicographically). Slices list their monomials
 * in decreasing order, so x0^m always comes first.
 */

#ifndef CHEV_POLY_HPP
#define CHEV_POLY_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "chev/field.hpp"
#include "chev/linalg.hpp"

namespace chev {

class Monomial {
   public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<std::uint8_t> exps);
    static Monomial variable(std::size_t nvars, std::size_t index);

    std::size_t nvars() const noexcept { return exps_.size(); }
    unsigned degree() const noexcept { return degree_; }
    unsigned operator[](std::size_t i) const { return exps_[i]; }
    const std::vector<std::uint8_t>& exponents() const noexcept { return exps_; }

    Monomial operator*(const Monomial& o) const;
    /// True when this monomial divides o.
    bool divides(const Monomial& o) const;
    Monomial with_exponent(std::size_t i, unsigned e) const;
    /// Drop (or keep) trailing variables.
    Monomial truncated(std::size_t nvars) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
    /// Graded lexicographic order.
    friend bool operator<(const Monomial& a, const Monomial& b);

    std::string to_string(const std::vector<std::string>& names = {}) const;

   private:
    std::vector<std::uint8_t> exps_;
    unsigned degree_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept;
};

/// Decreasing graded lex order, used as the term order of SparsePoly maps.
struct GrLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return b < a; }
};

/// All monomials of degree m in v variables, decreasing graded lex order.
std::vector<Monomial> monomials_of_degree(std::size_t v, unsigned m);

/// An ordered monomial list with a reverse index: the basis of one graded slice.
class MonomialBasis {
   public:
    explicit MonomialBasis(std::vector<Monomial> monomials);
    static std::shared_ptr<const MonomialBasis> slice(std::size_t nvars, unsigned degree);

    std::size_t size() const noexcept { return monomials_.size(); }
    const Monomial& operator[](std::size_t i) const { return monomials_[i]; }
    const std::vector<Monomial>& monomials() const noexcept { return monomials_; }
    /// Index of m, or npos.
    std::size_t index_of(const Monomial& m) const;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

   private:
    std::vector<Monomial> monomials_;
    std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

class SparsePoly {
   public:
    using Terms = std::map<Monomial, FieldElement, GrLexGreater>;

    SparsePoly(Field f, std::size_t nvars) : field_(f), nvars_(nvars) {}
    static SparsePoly constant(Field f, std::size_t nvars, const FieldElement& c);
    static SparsePoly variable(Field f, std::size_t nvars, std::size_t index);
    static SparsePoly monomial(const Monomial& m, const FieldElement& c);

    const Field& field() const noexcept { return field_; }
    std::size_t nvars() const noexcept { return nvars_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    FieldElement coefficient(const Monomial& m) const;
    /// -1 for the zero polynomial.
    int degree() const;
    /// The zero polynomial counts as homogeneous.
    bool is_homogeneous() const;

    void add_term(const Monomial& m, const FieldElement& c);

    SparsePoly& operator+=(const SparsePoly& o);
    SparsePoly& operator-=(const SparsePoly& o);
    SparsePoly operator-() const;
    SparsePoly operator*(const SparsePoly& o) const;
    SparsePoly scaled(const FieldElement& c) const;
    SparsePoly pow(unsigned e) const;
    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
    friend bool operator==(const SparsePoly& a, const SparsePoly& b);

    /// Coordinates in a slice basis; throws if a term is outside the slice.
    Vector to_vector(const MonomialBasis& basis) const;
    static SparsePoly from_vector(Field f, const MonomialBasis& basis, const Vector& v);

    /// Split by the exponent of one variable: result[k] is the coefficient of var^k
    /// (a polynomial in the remaining variables, same variable count).
    std::vector<SparsePoly> collect(std::size_t var) const;

    std::string to_string(const std::vector<std::string>& names = {}) const;

   private:
    void check_compatible(const SparsePoly& o) const;
    Field field_;
    std::size_t nvars_;
    Terms terms_;
};

/// Replace every variable i of p by assignment[i]; all images share a variable count.
SparsePoly substitute(const SparsePoly& p, const std::vector<SparsePoly>& assignment);

/// Span of { u*g : g a generator, u a monomial of degree m - deg g } inside the
/// degree-m slice of a v-variable ring over f. Generators must be homogeneous.
/// The result is labelled with the slice basis.
LinSpace ideal_degree_component(Field f, const std::vector<SparsePoly>& generators, unsigned m, std::size_t v);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace chev

#endif
