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
 * @file field.hpp
 * @brief Exact scalars over F_p, F_{p^2} and the rationals.
 *
 * Every scalar carries the tag of the field it lives in. Arithmetic between
 * scalars of different fields throws FieldMismatch; nothing is ever rounded.
 *
 * F_{p^2} is F_p[s]/(s^2 - q) where q is the smallest quadratic non-residue
 * mod p. Elements are stored as a + b*s with a, b in [0, p).
 */

#ifndef CHEV_FIELD_HPP
#define CHEV_FIELD_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

namespace chev {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class FieldMismatch : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when a computation needs scalars the chosen field does not have.
class UnsupportedField : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

bool is_prime(std::uint64_t n);

class Field {
   public:
    enum class Kind : std::uint8_t { Prime, Quadratic, Rational };

    /// F_p; p must be an odd prime below 2^31.
    static Field prime(std::uint32_t p);
    /// F_{p^2} realized with the smallest non-residue.
    static Field quadratic(std::uint32_t p);
    static Field rationals();
    /// F_p when -1 is a square mod p, F_{p^2} otherwise.
    static Field with_sqrt_minus_one(std::uint32_t p);

    Kind kind() const noexcept { return kind_; }
    /// 0 for the rationals.
    std::uint32_t characteristic() const noexcept { return p_; }
    /// The non-residue q with s^2 = q; meaningful for Quadratic only.
    std::uint32_t nonresidue() const noexcept { return q_; }
    bool is_finite() const noexcept { return kind_ != Kind::Rational; }

    std::string name() const;

    friend bool operator==(const Field&, const Field&) = default;

   private:
    Field(Kind k, std::uint32_t p, std::uint32_t q) : kind_(k), p_(p), q_(q) {}
    Kind kind_;
    std::uint32_t p_;
    std::uint32_t q_;
};

/// Residue pair a + b*s of F_{p^2} (b = 0 in F_p).
struct FiniteValue {
    std::uint32_t a = 0;
    std::uint32_t b = 0;
    friend bool operator==(const FiniteValue&, const FiniteValue&) = default;
};

class FieldElement {
   public:
    using Finite = FiniteValue;

    explicit FieldElement(Field f);
    FieldElement(Field f, std::int64_t value);
    FieldElement(Field f, const BigInt& value);
    /// a + b*s in F_{p^2}.
    static FieldElement quadratic(Field f, std::int64_t a, std::int64_t b);
    static FieldElement rational(const Rational& r);

    const Field& field() const noexcept { return field_; }
    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement& operator*=(const FieldElement& o);
    FieldElement& operator/=(const FieldElement& o);
    FieldElement inverse() const;
    FieldElement pow(std::uint64_t e) const;

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
    friend bool operator==(const FieldElement& a, const FieldElement& b);

    /// Raw storage access for the typed elimination kernels.
    const Finite& finite() const { return std::get<Finite>(value_); }
    const Rational& rational_value() const { return std::get<Rational>(value_); }
    static FieldElement from_finite(Field f, Finite v) { return FieldElement(f, v); }

    /// True when the element lies in the prime subfield (always for F_p and Q).
    bool in_prime_subfield() const noexcept;
    /// Symmetric representative in (-p/2, p/2] of a prime-subfield element;
    /// numerator for an integral rational. Empty if not representable.
    std::optional<std::int64_t> to_small_integer() const;

    /// A square root when one exists in this field.
    std::optional<FieldElement> sqrt() const;

    std::string to_string() const;

   private:
    FieldElement(Field f, Finite v) : field_(f), value_(v) {}
    void check_same(const FieldElement& o) const;

    Field field_;
    std::variant<Finite, Rational> value_;
};

}  // namespace chev

#endif
