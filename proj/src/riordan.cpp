#include "epp/riordan.hpp"

#include <algorithm>

namespace epp {

ExpRiordan::ExpRiordan(ExpSeries d, ExpSeries h) : d_(std::move(d)), h_(std::move(h)) {
    if (d_.coeff(0).is_zero()) throw NotInvertible("Riordan array needs d(0) != 0");
    if (h_.order() < 1 || !h_.coeff(0).is_zero() || h_.coeff(1).is_zero())
        throw NotInvertible("Riordan array needs h(0) = 0 and h'(0) != 0");
    order_ = std::min(d_.order(), h_.order());
    d_ = d_.truncated(order_);
    h_ = h_.truncated(order_);
}

ExpRiordan::ExpRiordan(const ExpRiordan& o) : d_(o.d_), h_(o.h_), order_(o.order_) {
    std::scoped_lock lock(o.mutex_);
    cols_ = o.cols_;
}

ExpRiordan& ExpRiordan::operator=(const ExpRiordan& o) {
    if (this == &o) return *this;
    std::scoped_lock lock(mutex_, o.mutex_);
    d_ = o.d_;
    h_ = o.h_;
    order_ = o.order_;
    cols_ = o.cols_;
    return *this;
}

ExpRiordan ExpRiordan::identity(int order) {
    return ExpRiordan(ExpSeries::one(order), ExpSeries::identity(order));
}

const ExpSeries& ExpRiordan::column(int k) const {
    std::scoped_lock lock(mutex_);
    if (cols_.empty()) cols_.push_back(d_);
    while (static_cast<int>(cols_.size()) <= k) {
        const int j = static_cast<int>(cols_.size());
        cols_.push_back(cols_.back() * h_ * (Rational(1) / Rational(j)));
    }
    return cols_[static_cast<size_t>(k)];
}

Rational ExpRiordan::entry(int n, int k) const {
    if (n < 0 || k < 0) throw Error("Riordan entry with negative index");
    if (n > order_)
        throw OrderExceeded("Riordan row " + std::to_string(n) + " beyond order " +
                            std::to_string(order_));
    if (k > n) return Rational(0);
    return column(k).coeff(n);
}

std::vector<Rational> ExpRiordan::row(int n) const {
    std::vector<Rational> out;
    out.reserve(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) out.push_back(entry(n, k));
    return out;
}

Rational ExpRiordan::ordinary_entry(int n, int k) const {
    return entry(n, k) * Rational(factorial(static_cast<unsigned long>(std::max(k, 0)))) /
           Rational(factorial(static_cast<unsigned long>(std::max(n, 0))));
}

ExpRiordan riordan_mul(const ExpRiordan& r1, const ExpRiordan& r2) {
    return ExpRiordan(r1.d() * r2.d().compose(r1.h()), r2.h().compose(r1.h()));
}

ExpRiordan riordan_inverse(const ExpRiordan& r) {
    const ExpSeries hbar = r.h().reversion();
    return ExpRiordan(r.d().compose(hbar).reciprocal(), hbar);
}

Rational ftra(const ExpRiordan& r, const ExpSeries& c, int n) {
    return (r.d() * c.compose(r.h())).coeff(n);
}

namespace {

// omega_i = (b - a)^{i-1 falling a}, the Bell-polynomial weights.
Rational bell_weight(const GStirlingParams& p, int i) {
    return falling_factorial(p.b - p.a, i - 1, p.a);
}

// S_{n,l}(a,b,0) as the partial Bell polynomial: sum over compositions
// c_1 + ... + c_l = n of n!/l! prod omega_{c_j}/c_j!.
Rational bell_sum_c0(const GStirlingParams& p, int n, int l) {
    if (l == 0) return n == 0 ? Rational(1) : Rational(0);
    if (n < l) return Rational(0);
    Rational total(0);
    // plain recursion over compositions of n into l positive parts
    const auto rec = [&](auto&& self, int rest, int slots, const Rational& prod) -> void {
        if (slots == 0) {
            if (rest == 0) total += prod;
            return;
        }
        for (int c = 1; c <= rest - (slots - 1); ++c)
            self(self, rest - c, slots - 1,
                 prod * bell_weight(p, c) / Rational(factorial(static_cast<unsigned long>(c))));
    };
    rec(rec, n, l, Rational(1));
    total *= Rational(factorial(static_cast<unsigned long>(n))) /
             Rational(factorial(static_cast<unsigned long>(l)));
    return total;
}

Rational bell_route(const GStirlingParams& p, int n, int l) {
    if (p.c.is_zero()) return bell_sum_c0(p, n, l);
    // (1+at)^{c/a} contributes c^{m falling a}; convolve in the exponential
    // convention
    Rational total(0);
    for (int m = 0; m <= n; ++m)
        total += Rational(binomial_int(n, m)) * falling_factorial(p.c, m, p.a) *
                 bell_sum_c0(p, n - m, l);
    return total;
}

Rational riordan_route(const GStirlingParams& p, int n, int l) {
    const int order = n + 2;
    ExpSeries d = p.a.is_zero() ? ExpSeries::exponential(p.c, order)
                                : ExpSeries::binomial_series(p.c / p.a, p.a, order);
    ExpSeries h = ExpSeries::identity(order);
    if (!p.a.is_zero() && !p.b.is_zero()) {
        h = (ExpSeries::binomial_series(p.b / p.a, p.a, order) - ExpSeries::one(order)) *
            (Rational(1) / p.b);
    } else if (!p.a.is_zero()) { // b = 0: limit series log(1+at)/a
        h = ExpSeries::log1p(p.a, order) * (Rational(1) / p.a);
    } else if (!p.b.is_zero()) { // a = 0: limit series (e^{bt}-1)/b
        h = (ExpSeries::exponential(p.b, order) - ExpSeries::one(order)) *
            (Rational(1) / p.b);
    }
    return ExpRiordan(std::move(d), std::move(h)).entry(n, l);
}

} // namespace

Rational gstirling(const GStirlingParams& p, int n, int l, StirlingRoute route) {
    if (n < 0 || l < 0) throw Error("gstirling with negative index");
    switch (route) {
        case StirlingRoute::BellSum: return bell_route(p, n, l);
        case StirlingRoute::Riordan: return riordan_route(p, n, l);
    }
    throw Error("unreachable");
}

Rational laguerre_row(int l, int j) {
    if (l < 0 || j < 0 || j > l) throw Error("laguerre_row needs 0 <= j <= l");
    const int order = std::max(l, j) + 1;
    // l! L_l(t) = l! e^t 1F1(1+l, 1, -t), built from the hypergeometric
    // coefficients [t^i/i!] 1F1(1+l,1,t) = (l+i)^{i falling} / i!
    ExpSeries f = ExpSeries::zero(order);
    {
        std::vector<Rational> c(static_cast<size_t>(order) + 1, Rational(0));
        for (int i = 0; i <= order; ++i) {
            const Rational sign = (i % 2 == 0) ? Rational(1) : Rational(-1);
            c[static_cast<size_t>(i)] = sign * falling_factorial(Rational(l + i), i) /
                                        Rational(factorial(static_cast<unsigned long>(i)));
        }
        f = ExpSeries(std::move(c));
    }
    const ExpSeries laguerre =
        (ExpSeries::exponential(Rational(1), order) * f) *
        Rational(factorial(static_cast<unsigned long>(l)));
    const Rational left = laguerre.ordinary_coeff(j);

    // (l,j) entry of R_e[-1/(t-1), t/(t-1)]
    const ExpSeries geom = ExpSeries::binomial_series(Rational(-1), Rational(-1), order);
    const ExpSeries h = ExpSeries::identity(order) * geom * Rational(-1); // t/(t-1)
    const Rational right = ExpRiordan(geom, h).entry(l, j);

    if (left != right)
        throw IdentityViolation("Laguerre row identity failed at (l=" + std::to_string(l) +
                                ", j=" + std::to_string(j) + "): " + left.str() +
                                " != " + right.str());
    return left;
}

} // namespace epp
