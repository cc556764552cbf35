#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "epp/errors.hpp"

namespace epp {

using Integer = mpz_class;

/// Exact arbitrary-precision rational. Always canonical: denominator > 0 and
/// gcd(|num|, den) = 1. No floating point anywhere; conversions to decimal
/// strings are explicit and rounded deterministically.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(int n) : q_(n) {}
    Rational(long n) : q_(static_cast<signed long>(n)) {}
    Rational(const Integer& n) : q_(n) {}
    Rational(const Integer& num, const Integer& den);
    Rational(long num, long den);

    /// Parses "p", "-p", or "p/q". Throws ParseError on anything else.
    static Rational parse(std::string_view text);

    Integer num() const { return q_.get_num(); }
    Integer den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational abs() const;

    /// "p/q", or just "p" when the denominator is 1.
    std::string str() const;

    /// Decimal approximation with `digits` places, rounded half away from
    /// zero. Deterministic, suitable for bit-identical output.
    std::string decimal(int digits = 12) const;

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.q_ + b.q_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.q_ - b.q_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.q_ * b.q_); }
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const { return Rational(mpq_class(-q_)); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}
    mpq_class q_; // canonical by construction
};

/// x(x+a)(x+2a)...(x+(k-1)a); 1 for k = 0.
Rational rising_factorial(const Rational& x, int k, const Rational& step = Rational(1));

/// x(x-a)(x-2a)...(x-(k-1)a); 1 for k = 0.
Rational falling_factorial(const Rational& x, int k, const Rational& step = Rational(1));

/// Generalized binomial coefficient x^{k falling} / k!.
Rational binomial(const Rational& x, int k);

/// Integer binomial; 0 outside the triangle (k < 0, n < 0 or k > n).
Integer binomial_int(long n, long k);

Integer factorial(unsigned long n);

/// Small integer power with exact arithmetic.
Rational pow(const Rational& base, unsigned long e);

} // namespace epp
