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

#include "chev/field.hpp"

#include <sstream>

namespace chev {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a * b) % p; }

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint32_t reduce(std::int64_t v, std::uint32_t p) {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}

bool is_residue(std::uint64_t a, std::uint64_t p) {
    a %= p;
    return a == 0 || powmod(a, (p - 1) / 2, p) == 1;
}

// Tonelli-Shanks; a must be a nonzero residue.
std::uint64_t sqrt_mod(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) return 0;
    std::uint64_t q = p - 1, s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    std::uint64_t z = 2;
    while (is_residue(z, p)) ++z;
    std::uint64_t m = s, c = powmod(z, q, p), t = powmod(a, q, p), r = powmod(a, (q + 1) / 2, p);
    while (t != 1) {
        std::uint64_t i = 0, tt = t;
        while (tt != 1) {
            tt = mulmod(tt, tt, p);
            ++i;
        }
        std::uint64_t b = c;
        for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = mulmod(b, b, p);
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
    }
    // canonical choice: the smaller representative
    return std::min(r, p - r);
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Field Field::prime(std::uint32_t p) {
    if (p == 2 || !is_prime(p) || p >= (1u << 31))
        throw std::invalid_argument("field characteristic must be an odd prime below 2^31, got " + std::to_string(p));
    return Field(Kind::Prime, p, 0);
}

Field Field::quadratic(std::uint32_t p) {
    Field base = prime(p);
    std::uint32_t q = 2;
    while (is_residue(q, base.p_)) ++q;
    return Field(Kind::Quadratic, p, q);
}

Field Field::rationals() { return Field(Kind::Rational, 0, 0); }

Field Field::with_sqrt_minus_one(std::uint32_t p) { return p % 4 == 1 ? prime(p) : quadratic(p); }

std::string Field::name() const {
    switch (kind_) {
        case Kind::Prime:
            return "F_" + std::to_string(p_);
        case Kind::Quadratic:
            return "F_" + std::to_string(p_) + "^2";
        case Kind::Rational:
            return "Q";
    }
    return "?";
}

FieldElement::FieldElement(Field f) : field_(f) {
    if (f.kind() == Field::Kind::Rational)
        value_ = Rational(0);
    else
        value_ = Finite{};
}

FieldElement::FieldElement(Field f, std::int64_t v) : field_(f) {
    if (f.kind() == Field::Kind::Rational)
        value_ = Rational(v);
    else
        value_ = Finite{reduce(v, f.characteristic()), 0};
}

FieldElement::FieldElement(Field f, const BigInt& v) : field_(f) {
    if (f.kind() == Field::Kind::Rational) {
        value_ = Rational(v);
    } else {
        BigInt r = v % f.characteristic();
        if (r < 0) r += f.characteristic();
        value_ = Finite{static_cast<std::uint32_t>(r), 0};
    }
}

FieldElement FieldElement::quadratic(Field f, std::int64_t a, std::int64_t b) {
    if (f.kind() != Field::Kind::Quadratic) throw FieldMismatch("quadratic element requested outside F_{p^2}");
    return FieldElement(f, Finite{reduce(a, f.characteristic()), reduce(b, f.characteristic())});
}

FieldElement FieldElement::rational(const Rational& r) {
    FieldElement e(Field::rationals());
    e.value_ = r;
    return e;
}

void FieldElement::check_same(const FieldElement& o) const {
    if (!(field_ == o.field_)) throw FieldMismatch("mixed field tags: " + field_.name() + " and " + o.field_.name());
}

bool FieldElement::is_zero() const noexcept {
    if (auto f = std::get_if<Finite>(&value_)) return f->a == 0 && f->b == 0;
    return std::get<Rational>(value_) == 0;
}

bool FieldElement::is_one() const noexcept {
    if (auto f = std::get_if<Finite>(&value_)) return f->a == 1 && f->b == 0;
    return std::get<Rational>(value_) == 1;
}

FieldElement FieldElement::operator-() const {
    FieldElement r = *this;
    if (auto f = std::get_if<Finite>(&r.value_)) {
        const std::uint32_t p = field_.characteristic();
        f->a = f->a ? p - f->a : 0;
        f->b = f->b ? p - f->b : 0;
    } else {
        auto& q = std::get<Rational>(r.value_);
        q = -q;
    }
    return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
    check_same(o);
    if (auto f = std::get_if<Finite>(&value_)) {
        const std::uint64_t p = field_.characteristic();
        const auto& g = std::get<Finite>(o.value_);
        f->a = static_cast<std::uint32_t>((std::uint64_t(f->a) + g.a) % p);
        f->b = static_cast<std::uint32_t>((std::uint64_t(f->b) + g.b) % p);
    } else {
        std::get<Rational>(value_) += std::get<Rational>(o.value_);
    }
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) { return *this += -o; }

FieldElement& FieldElement::operator*=(const FieldElement& o) {
    check_same(o);
    if (auto f = std::get_if<Finite>(&value_)) {
        const std::uint64_t p = field_.characteristic();
        const auto& g = std::get<Finite>(o.value_);
        if (field_.kind() == Field::Kind::Prime) {
            f->a = static_cast<std::uint32_t>(mulmod(f->a, g.a, p));
        } else {
            const std::uint64_t q = field_.nonresidue();
            std::uint64_t a = (mulmod(f->a, g.a, p) + mulmod(mulmod(f->b, g.b, p), q, p)) % p;
            std::uint64_t b = (mulmod(f->a, g.b, p) + mulmod(f->b, g.a, p)) % p;
            f->a = static_cast<std::uint32_t>(a);
            f->b = static_cast<std::uint32_t>(b);
        }
    } else {
        std::get<Rational>(value_) *= std::get<Rational>(o.value_);
    }
    return *this;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in " + field_.name());
    if (auto f = std::get_if<Finite>(&value_)) {
        const std::uint64_t p = field_.characteristic();
        if (field_.kind() == Field::Kind::Prime) return FieldElement(field_, Finite{static_cast<std::uint32_t>(powmod(f->a, p - 2, p)), 0});
        // (a + bs)^{-1} = (a - bs) / (a^2 - q b^2)
        const std::uint64_t q = field_.nonresidue();
        std::uint64_t norm = (mulmod(f->a, f->a, p) + p - mulmod(mulmod(f->b, f->b, p), q, p)) % p;
        std::uint64_t ninv = powmod(norm, p - 2, p);
        return FieldElement(field_, Finite{static_cast<std::uint32_t>(mulmod(f->a, ninv, p)),
                                           static_cast<std::uint32_t>(mulmod(f->b ? p - f->b : 0, ninv, p))});
    }
    return rational(1 / std::get<Rational>(value_));
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
    check_same(o);
    return *this *= o.inverse();
}

FieldElement FieldElement::pow(std::uint64_t e) const {
    FieldElement r(field_, 1), b = *this;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

bool operator==(const FieldElement& x, const FieldElement& y) {
    x.check_same(y);
    return x.value_ == y.value_;
}

bool FieldElement::in_prime_subfield() const noexcept {
    if (auto f = std::get_if<Finite>(&value_)) return f->b == 0;
    return true;
}

std::optional<std::int64_t> FieldElement::to_small_integer() const {
    if (auto f = std::get_if<Finite>(&value_)) {
        if (f->b != 0) return std::nullopt;
        const std::int64_t p = field_.characteristic();
        std::int64_t a = f->a;
        return a <= p / 2 ? a : a - p;
    }
    const auto& r = std::get<Rational>(value_);
    if (denominator(r) != 1) return std::nullopt;
    BigInt num = numerator(r);
    if (boost::multiprecision::abs(num) > BigInt(INT64_MAX)) return std::nullopt;
    return static_cast<std::int64_t>(num);
}

std::optional<FieldElement> FieldElement::sqrt() const {
    if (is_zero()) return *this;
    if (field_.kind() == Field::Kind::Rational) {
        const auto& r = std::get<Rational>(value_);
        if (r < 0) return std::nullopt;
        BigInt n = numerator(r), d = denominator(r);
        BigInt sn = boost::multiprecision::sqrt(n), sd = boost::multiprecision::sqrt(d);
        if (sn * sn != n || sd * sd != d) return std::nullopt;
        return rational(Rational(sn, sd));
    }
    const std::uint64_t p = field_.characteristic();
    const auto& f = std::get<Finite>(value_);
    if (f.b != 0) return std::nullopt;  // only prime-subfield radicands are needed
    if (is_residue(f.a, p)) return FieldElement(field_, Finite{static_cast<std::uint32_t>(sqrt_mod(f.a, p)), 0});
    if (field_.kind() == Field::Kind::Prime) return std::nullopt;
    // a = q * c^2 with c in F_p, so sqrt(a) = c*s
    const std::uint64_t q = field_.nonresidue();
    std::uint64_t c2 = mulmod(f.a, powmod(q, p - 2, p), p);
    return FieldElement(field_, Finite{0, static_cast<std::uint32_t>(sqrt_mod(c2, p))});
}

std::string FieldElement::to_string() const {
    std::ostringstream os;
    if (auto f = std::get_if<Finite>(&value_)) {
        if (field_.kind() == Field::Kind::Quadratic && f->b != 0) {
            os << f->a << "+" << f->b << "s";
        } else {
            os << f->a;
        }
    } else {
        os << std::get<Rational>(value_);
    }
    return os.str();
}

}  // namespace chev
