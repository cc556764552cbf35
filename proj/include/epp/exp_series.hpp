#pragma once

#include <vector>

#include "epp/rational.hpp"

namespace epp {

/// Truncated exponential formal power series: sum_{i=0..order} c_i t^i / i!
/// with exact rational c_i. Every value carries the order through which its
/// coefficients are valid; binary operations propagate the minimum order and
/// extraction past it is a hard error, never a silent zero.
class ExpSeries {
public:
    ExpSeries() : c_(1, Rational(0)) {}
    /// Coefficients in the exponential convention; order = coeffs.size() - 1.
    explicit ExpSeries(std::vector<Rational> coeffs);

    static ExpSeries zero(int order);
    static ExpSeries one(int order);
    static ExpSeries identity(int order);                         // t
    static ExpSeries exponential(const Rational& a, int order);   // e^{a t}
    /// (1 + scale t)^exponent with c_n = exponent^{n falling} scale^n.
    static ExpSeries binomial_series(const Rational& exponent, const Rational& scale, int order);
    static ExpSeries log1p(const Rational& scale, int order);     // log(1 + scale t)

    int order() const { return static_cast<int>(c_.size()) - 1; }
    /// Exponential coefficient c_n; throws OrderExceeded for n > order.
    const Rational& coeff(int n) const;
    /// Ordinary coefficient [t^n] = c_n / n!.
    Rational ordinary_coeff(int n) const;

    ExpSeries truncated(int order) const;

    friend ExpSeries operator+(const ExpSeries& a, const ExpSeries& b);
    friend ExpSeries operator-(const ExpSeries& a, const ExpSeries& b);
    /// Cauchy product in the exponential convention:
    /// c_n = sum_k binom(n,k) a_k b_{n-k}.
    friend ExpSeries operator*(const ExpSeries& a, const ExpSeries& b);
    friend ExpSeries operator*(const ExpSeries& a, const Rational& s);
    friend ExpSeries operator*(const Rational& s, const ExpSeries& a) { return a * s; }

    /// f(g(t)); requires g(0) = 0 (throws NonzeroConstantTerm).
    ExpSeries compose(const ExpSeries& g) const;

    /// Compositional inverse: requires c_0 = 0 and c_1 != 0 (throws
    /// NotInvertible). Solved order by order; only c_1 is ever divided by.
    ExpSeries reversion() const;

    /// Multiplicative inverse 1/f; requires c_0 != 0.
    ExpSeries reciprocal() const;

    /// True when coefficients agree exactly through min(order, o.order, n).
    bool equal_through(const ExpSeries& o, int n) const;

private:
    std::vector<Rational> c_;
};

} // namespace epp
