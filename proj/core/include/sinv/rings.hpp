#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "sinv/errors.hpp"

namespace sinv {

/// The ring of integers with arbitrary-precision arithmetic.
struct IntegerRing {
    using Element = mpz_class;
    static constexpr bool is_field = false;

    Element zero() const { return Element(0); }
    Element one() const { return Element(1); }
    Element from_long(long v) const { return Element(v); }

    bool is_zero(const Element& a) const { return sgn(a) == 0; }
    bool is_unit(const Element& a) const { return a == 1 || a == -1; }

    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element neg(const Element& a) const { return -a; }

    Element inv(const Element& a) const {
        if (!is_unit(a)) throw DomainError("integer " + to_string(a) + " is not a unit");
        return a;
    }

    bool divides(const Element& a, const Element& b) const {
        if (is_zero(a)) return is_zero(b);
        return mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t()) != 0;
    }
    /// b / a, exact.
    Element div_exact(const Element& b, const Element& a) const {
        Element q;
        mpz_divexact(q.get_mpz_t(), b.get_mpz_t(), a.get_mpz_t());
        return q;
    }
    /// Truncated quotient: b = quot(b,a)*a + r with |r| < |a|.
    Element quot(const Element& b, const Element& a) const {
        Element q;
        mpz_tdiv_q(q.get_mpz_t(), b.get_mpz_t(), a.get_mpz_t());
        return q;
    }

    std::string to_string(const Element& a) const { return a.get_str(); }
    std::string name() const { return "Z"; }
    bool operator==(const IntegerRing&) const = default;
};

/// The field of rationals; values are always gcd-reduced with positive
/// denominator (GMP canonical form).
struct RationalField {
    using Element = mpq_class;
    static constexpr bool is_field = true;

    Element zero() const { return Element(0); }
    Element one() const { return Element(1); }
    Element from_long(long v) const { return Element(v); }

    bool is_zero(const Element& a) const { return sgn(a) == 0; }
    bool is_unit(const Element& a) const { return !is_zero(a); }

    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element neg(const Element& a) const { return -a; }
    Element inv(const Element& a) const {
        if (is_zero(a)) throw DomainError("division by zero in Q");
        return 1 / a;
    }
    Element div_exact(const Element& b, const Element& a) const { return b / a; }

    std::string to_string(const Element& a) const { return a.get_str(); }
    std::string name() const { return "Q"; }
    bool operator==(const RationalField&) const = default;
};

/// The prime field Z/p, elements stored as canonical representatives 0..p-1.
class PrimeField {
public:
    using Element = std::int64_t;
    static constexpr bool is_field = true;

    /// Throws InputError unless p is prime (and fits comfortably in 32 bits).
    explicit PrimeField(std::int64_t p);

    std::int64_t modulus() const { return p_; }

    Element zero() const { return 0; }
    Element one() const { return p_ == 1 ? 0 : 1; }
    Element from_long(long v) const {
        Element r = v % p_;
        return r < 0 ? r + p_ : r;
    }

    bool is_zero(Element a) const { return a == 0; }
    bool is_unit(Element a) const { return a != 0; }

    Element add(Element a, Element b) const {
        Element r = a + b;
        return r >= p_ ? r - p_ : r;
    }
    Element sub(Element a, Element b) const {
        Element r = a - b;
        return r < 0 ? r + p_ : r;
    }
    Element mul(Element a, Element b) const {
        return static_cast<Element>((static_cast<__int128>(a) * b) % p_);
    }
    Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
    Element inv(Element a) const;
    Element div_exact(Element b, Element a) const { return mul(b, inv(a)); }

    std::string to_string(Element a) const { return std::to_string(a); }
    std::string name() const { return "Z/" + std::to_string(p_); }
    bool operator==(const PrimeField&) const = default;

private:
    std::int64_t p_;
};

using Ring = std::variant<IntegerRing, RationalField, PrimeField>;

/// Parses "z" | "q" | "zp:<prime>". Throws InputError on anything else
/// (including a composite modulus).
Ring parse_ring(std::string_view text);

std::string ring_name(const Ring& ring);

} // namespace sinv
