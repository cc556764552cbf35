#pragma once

#include <mutex>
#include <vector>

#include "epp/exp_series.hpp"
#include "epp/rational.hpp"

namespace epp {

/// Exponential Riordan array R_e[d, h]: the lower-triangular matrix with
/// entry(n,k) = [t^n/n!] d(t) h(t)^k / k!, for d with d_0 != 0 and h with
/// h_0 = 0, h_1 != 0. The array is defined by its series pair; columns are
/// materialized lazily up to the series order and cached. Concurrent reads
/// are safe and cache population is idempotent.
class ExpRiordan {
public:
    ExpRiordan(ExpSeries d, ExpSeries h);
    ExpRiordan(const ExpRiordan& o);
    ExpRiordan& operator=(const ExpRiordan& o);

    static ExpRiordan identity(int order);

    int order() const { return order_; }
    const ExpSeries& d() const { return d_; }
    const ExpSeries& h() const { return h_; }

    /// Exact entry; 0 for k > n, throws OrderExceeded for n > order.
    Rational entry(int n, int k) const;
    std::vector<Rational> row(int n) const;

    /// Same array read in the ordinary-coefficient convention:
    /// [t^n] d(t) h(t)^k = entry(n,k) * k! / n!.
    Rational ordinary_entry(int n, int k) const;

private:
    const ExpSeries& column(int k) const; // d h^k / k!
    ExpSeries d_, h_;
    int order_;
    mutable std::vector<ExpSeries> cols_;
    mutable std::mutex mutex_;
};

/// Riordan group product: R_e[d,h] * R_e[g,f] = R_e[d g(h), f(h)]. Equals the
/// matrix product of the truncated triangles.
ExpRiordan riordan_mul(const ExpRiordan& r1, const ExpRiordan& r2);

/// Group inverse R_e[1/d(hbar), hbar] with hbar the compositional inverse of h.
ExpRiordan riordan_inverse(const ExpRiordan& r);

/// Fundamental theorem of Riordan arrays: sum_k entry(n,k) c_k as the single
/// coefficient [t^n/n!] d(t) c(h(t)).
Rational ftra(const ExpRiordan& r, const ExpSeries& c, int n);

/// Hsu-Shiue generalized Stirling number parameters.
struct GStirlingParams {
    Rational a, b, c;
};

enum class StirlingRoute {
    Riordan, // coefficient of R_e[(1+at)^{c/a}, ((1+at)^{b/a}-1)/b], with the
             // standard limit series when a = 0 or b = 0
    BellSum, // partial Bell polynomial over compositions, extended to c != 0
             // by convolution with the weights c^{m falling a}
};

/// S_{n,l}(a,b,c), exact. The two routes agree everywhere; BellSum is the
/// independent oracle used by the verification suite.
Rational gstirling(const GStirlingParams& p, int n, int l,
                   StirlingRoute route = StirlingRoute::Riordan);

/// Ordinary coefficient [t^j] of l! L_l(t) (Laguerre polynomial), computed two
/// ways: from the confluent hypergeometric series e^t 1F1(1+l,1,-t) and as the
/// (l,j) entry of R_e[-1/(t-1), t/(t-1)]. Throws IdentityViolation if the two
/// disagree, which would signal an implementation bug.
Rational laguerre_row(int l, int j);

} // namespace epp
