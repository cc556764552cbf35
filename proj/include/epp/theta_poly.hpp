#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "epp/rational.hpp"

namespace epp {

/// Polynomial in the parameter theta with exact rational coefficients.
/// Canonical form: no trailing zero coefficient; the zero polynomial has an
/// empty coefficient list and degree -1.
class ThetaPoly {
public:
    ThetaPoly() = default;
    explicit ThetaPoly(std::vector<Rational> coeffs); // index = power of theta

    static ThetaPoly constant(const Rational& c);
    static ThetaPoly theta();

    /// Product (theta + offset)(theta + offset + step)...(theta + offset + (k-1) step),
    /// i.e. the step-`step` rising factorial of (theta + offset) as a polynomial.
    static ThetaPoly rising(const Rational& offset, int k, const Rational& step);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rational& coeff(int i) const; // 0 beyond degree
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& theta) const;

    /// p(theta + delta), computed exactly.
    ThetaPoly shifted(const Rational& delta) const;

    /// Backward difference with step a: p(theta) - p(theta - a).
    ThetaPoly backward_difference(const Rational& step) const;

    /// Exact division by the linear factor (theta + a); returns {quotient,
    /// remainder} with remainder = p(-a).
    std::pair<ThetaPoly, Rational> divide_linear(const Rational& a) const;

    ThetaPoly operator-() const;
    friend ThetaPoly operator+(const ThetaPoly& a, const ThetaPoly& b);
    friend ThetaPoly operator-(const ThetaPoly& a, const ThetaPoly& b);
    friend ThetaPoly operator*(const ThetaPoly& a, const ThetaPoly& b);
    friend ThetaPoly operator*(const ThetaPoly& a, const Rational& s);
    friend ThetaPoly operator*(const Rational& s, const ThetaPoly& a) { return a * s; }
    ThetaPoly& operator+=(const ThetaPoly& o) { return *this = *this + o; }

    friend bool operator==(const ThetaPoly&, const ThetaPoly&) = default;

    std::string str() const; // e.g. "-1/2*theta^3 - 3/4*theta^2 - 1/4*theta"
    friend std::ostream& operator<<(std::ostream& os, const ThetaPoly& p);

private:
    void trim();
    std::vector<Rational> c_;
};

} // namespace epp
