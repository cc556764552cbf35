#include "epp/exp_series.hpp"

#include <algorithm>

namespace epp {

ExpSeries::ExpSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) c_.assign(1, Rational(0));
}

ExpSeries ExpSeries::zero(int order) {
    return ExpSeries(std::vector<Rational>(static_cast<size_t>(order) + 1, Rational(0)));
}

ExpSeries ExpSeries::one(int order) {
    auto s = zero(order);
    s.c_[0] = Rational(1);
    return s;
}

ExpSeries ExpSeries::identity(int order) {
    auto s = zero(order);
    if (order >= 1) s.c_[1] = Rational(1);
    return s;
}

ExpSeries ExpSeries::exponential(const Rational& a, int order) {
    auto s = zero(order);
    Rational p(1);
    for (int i = 0; i <= order; ++i) {
        s.c_[static_cast<size_t>(i)] = p;
        p *= a;
    }
    return s;
}

ExpSeries ExpSeries::binomial_series(const Rational& exponent, const Rational& scale, int order) {
    auto s = zero(order);
    Rational c(1);
    for (int n = 0; n <= order; ++n) {
        s.c_[static_cast<size_t>(n)] = c;
        c *= (exponent - Rational(n)) * scale;
    }
    return s;
}

ExpSeries ExpSeries::log1p(const Rational& scale, int order) {
    auto s = zero(order);
    // [t^n] log(1+ct) = (-1)^{n+1} c^n / n  ->  c_n = (n-1)! (-1)^{n+1} c^n
    Rational cn = scale;
    for (int n = 1; n <= order; ++n) {
        s.c_[static_cast<size_t>(n)] = cn * Rational(factorial(static_cast<unsigned long>(n - 1)));
        cn *= -scale;
    }
    return s;
}

const Rational& ExpSeries::coeff(int n) const {
    if (n < 0 || n > order())
        throw OrderExceeded("coefficient " + std::to_string(n) + " beyond valid order " +
                            std::to_string(order()));
    return c_[static_cast<size_t>(n)];
}

Rational ExpSeries::ordinary_coeff(int n) const {
    return coeff(n) / Rational(factorial(static_cast<unsigned long>(n)));
}

ExpSeries ExpSeries::truncated(int order) const {
    if (order >= this->order()) return *this;
    return ExpSeries(std::vector<Rational>(c_.begin(), c_.begin() + order + 1));
}

ExpSeries operator+(const ExpSeries& a, const ExpSeries& b) {
    const int n = std::min(a.order(), b.order());
    auto s = ExpSeries::zero(n);
    for (int i = 0; i <= n; ++i)
        s.c_[static_cast<size_t>(i)] = a.c_[static_cast<size_t>(i)] + b.c_[static_cast<size_t>(i)];
    return s;
}

ExpSeries operator-(const ExpSeries& a, const ExpSeries& b) {
    const int n = std::min(a.order(), b.order());
    auto s = ExpSeries::zero(n);
    for (int i = 0; i <= n; ++i)
        s.c_[static_cast<size_t>(i)] = a.c_[static_cast<size_t>(i)] - b.c_[static_cast<size_t>(i)];
    return s;
}

ExpSeries operator*(const ExpSeries& a, const ExpSeries& b) {
    const int n = std::min(a.order(), b.order());
    auto s = ExpSeries::zero(n);
    for (int i = 0; i <= n; ++i) {
        Rational acc(0);
        for (int k = 0; k <= i; ++k)
            acc += Rational(binomial_int(i, k)) * a.c_[static_cast<size_t>(k)] *
                   b.c_[static_cast<size_t>(i - k)];
        s.c_[static_cast<size_t>(i)] = acc;
    }
    return s;
}

ExpSeries operator*(const ExpSeries& a, const Rational& s) {
    ExpSeries out = a;
    for (auto& x : out.c_) x *= s;
    return out;
}

ExpSeries ExpSeries::compose(const ExpSeries& g) const {
    if (!g.c_[0].is_zero())
        throw NonzeroConstantTerm("series composition needs inner constant term 0");
    const int n = std::min(order(), g.order());
    const ExpSeries gt = g.truncated(n);
    // f(g) = sum_k f_k g^k / k!; g^k has valuation >= k so k <= n suffices
    ExpSeries acc = ExpSeries::one(n) * c_[0];
    ExpSeries gk = ExpSeries::one(n);
    for (int k = 1; k <= n; ++k) {
        gk = gk * gt * (Rational(1) / Rational(k)); // g^k / k!
        acc = acc + gk * c_[static_cast<size_t>(k)];
    }
    return acc;
}

ExpSeries ExpSeries::reversion() const {
    if (!c_[0].is_zero()) throw NotInvertible("reversion needs constant term 0");
    if (order() < 1 || c_[1].is_zero()) throw NotInvertible("reversion needs a nonzero linear term");
    const int n = order();
    ExpSeries g = zero(n);
    g.c_[1] = Rational(1) / c_[1];
    for (int m = 2; m <= n; ++m) {
        // with g_m still 0, coefficient m of f(g) is missing only c_1 * g_m
        const Rational got = compose(g.truncated(m)).coeff(m);
        g.c_[static_cast<size_t>(m)] = -got / c_[1];
    }
    return g;
}

ExpSeries ExpSeries::reciprocal() const {
    if (c_[0].is_zero()) throw NotInvertible("reciprocal of a series with zero constant term");
    const int n = order();
    ExpSeries w = zero(n);
    w.c_[0] = Rational(1) / c_[0];
    for (int m = 1; m <= n; ++m) {
        Rational acc(0);
        for (int k = 0; k < m; ++k)
            acc += Rational(binomial_int(m, k)) * w.c_[static_cast<size_t>(k)] *
                   c_[static_cast<size_t>(m - k)];
        w.c_[static_cast<size_t>(m)] = -acc / c_[0];
    }
    return w;
}

bool ExpSeries::equal_through(const ExpSeries& o, int n) const {
    const int m = std::min({n, order(), o.order()});
    for (int i = 0; i <= m; ++i)
        if (c_[static_cast<size_t>(i)] != o.c_[static_cast<size_t>(i)]) return false;
    return true;
}

} // namespace epp
