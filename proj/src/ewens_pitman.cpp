#include "epp/ewens_pitman.hpp"

#include <algorithm>

#include "epp/exp_series.hpp"
#include "epp/riordan.hpp"

namespace epp {

EPParams::EPParams(Rational alpha_, Rational theta_) : alpha(std::move(alpha_)), theta(std::move(theta_)) {
    if (alpha.sign() < 0 || alpha >= Rational(1))
        throw ParamRange("alpha must satisfy 0 <= alpha < 1, got " + alpha.str());
    if (theta <= -alpha)
        throw ParamRange("theta must satisfy theta > -alpha, got theta = " + theta.str() +
                         ", alpha = " + alpha.str());
}

FLambda f_lambda(const IntegerPartition& lam, const Rational& alpha, PmfRoute route) {
    switch (route) {
        case PmfRoute::Closed: return closed_f_lambda(lam, alpha);
        case PmfRoute::Newton: return newton_f_lambda(lam, alpha);
        case PmfRoute::AltRep: return altrep_f_lambda(lam, alpha);
    }
    throw Error("unreachable");
}

namespace {

// theta^{l rising alpha} / theta^{n rising} with the shared leading theta
// cancelled, so theta = 0 evaluates exactly. Requires l >= 1 when n >= 1.
Rational rising_ratio(const EPParams& p, int l, int n) {
    if (n == 0) return rising_factorial(p.theta, l, p.alpha);
    if (l == 0) throw Error("rising_ratio: zero length with positive size");
    return rising_factorial(p.theta + p.alpha, l - 1, p.alpha) /
           rising_factorial(p.theta + Rational(1), n - 1);
}

Rational phi_from_poly(const EPParams& p, const FLambda& f) {
    const int n = f.lam.size();
    if (n == 0) return Rational(1);
    // f is divisible by theta (its lowest node sits in every construction),
    // and theta^{n rising} = theta (theta+1)^{n-1 rising}; cancel and evaluate
    auto [quotient, remainder] = f.poly.divide_linear(Rational(0));
    if (!remainder.is_zero())
        throw IdentityViolation("f_lambda(0) != 0 for lambda = " + f.lam.str());
    Rational value = quotient.eval(p.theta) / rising_factorial(p.theta + Rational(1), n - 1);
    if (n % 2 != 0) value = -value;
    return value;
}

// xi_j = (1-alpha)^{j-1 rising} / j!
Rational xi_weight(const Rational& alpha, int j) {
    return rising_factorial(Rational(1) - alpha, j - 1) /
           Rational(factorial(static_cast<unsigned long>(j)));
}

// EGF of theta^{l rising alpha}: (1 - alpha t)^{-theta/alpha}, degenerating
// to e^{theta t} at alpha = 0.
ExpSeries rising_egf(const EPParams& p, int order) {
    if (p.alpha.is_zero()) return ExpSeries::exponential(p.theta, order);
    return ExpSeries::binomial_series(-p.theta / p.alpha, -p.alpha, order);
}

// EGF with coefficients theta^{l rising alpha} / theta (l >= 1), used when
// theta = 0 makes the plain pipeline 0/0.
ExpSeries rising_egf_reduced(const EPParams& p, int order) {
    std::vector<Rational> c(static_cast<size_t>(order) + 1, Rational(0));
    for (int l = 1; l <= order; ++l)
        c[static_cast<size_t>(l)] = rising_factorial(p.theta + p.alpha, l - 1, p.alpha);
    return ExpSeries(std::move(c));
}

// The Kingman h series (1 - (1-t)^alpha)/alpha, degenerating to
// log(1/(1-t)) at alpha = 0.
ExpSeries kingman_h(const Rational& alpha, int order) {
    if (alpha.is_zero()) return ExpSeries::log1p(Rational(-1), order) * Rational(-1);
    return (ExpSeries::one(order) - ExpSeries::binomial_series(alpha, Rational(-1), order)) *
           (Rational(1) / alpha);
}

} // namespace

Rational phi_harmonic(const EPParams& p, const IntegerPartition& lam, PmfRoute route) {
    return phi_from_poly(p, f_lambda(lam, p.alpha, route));
}

Rational pmf(const EPParams& p, const IntegerPartition& lam, PmfRoute route, bool verify) {
    if (verify) {
        const FLambda closed = closed_f_lambda(lam, p.alpha);
        if (!p.alpha.is_zero()) {
            for (PmfRoute other : {PmfRoute::Newton, PmfRoute::AltRep}) {
                const FLambda f = f_lambda(lam, p.alpha, other);
                if (f.poly != closed.poly)
                    throw IdentityViolation("f_lambda route mismatch for lambda = " + lam.str());
            }
        }
    }
    return Rational(kingman_dim(lam)) * phi_harmonic(p, lam, route);
}

Rational eppf(const EPParams& p, const IntegerPartition& lam) {
    if (lam.empty()) return Rational(1);
    Rational out = rising_ratio(p, lam.length(), lam.size());
    for (int part : lam.parts()) out *= rising_factorial(Rational(1) - p.alpha, part - 1);
    return out;
}

Rational normalization(const EPParams& p, int n) {
    if (n < 0) throw Error("normalization: negative n");
    if (n == 0) return Rational(1);
    const int order = n + 2;
    const ExpSeries h = kingman_h(p.alpha, order);
    if (!p.theta.is_zero())
        return rising_egf(p, order).compose(h).coeff(n) / rising_factorial(p.theta, n);
    return rising_egf_reduced(p, order).compose(h).coeff(n) /
           rising_factorial(p.theta + Rational(1), n - 1);
}

Rational marginal_length(const EPParams& p, int n, int l, StatRoute route, bool verify,
                         int oracle_bound) {
    if (n < 0 || l < 0 || l > n) throw Error("marginal_length needs 0 <= l <= n");
    if (verify) {
        const Rational a = marginal_length(p, n, l, StatRoute::ClosedForm, false, oracle_bound);
        const Rational b = marginal_length(p, n, l, StatRoute::BruteForce, false, oracle_bound);
        if (a != b)
            throw IdentityViolation("marginal_length mismatch at n=" + std::to_string(n) +
                                    ", l=" + std::to_string(l) + ": " + a.str() + " != " + b.str());
        return a;
    }
    if (route == StatRoute::BruteForce) {
        return bruteforce_expectation(
            p, n,
            [l](const IntegerPartition& lam) {
                return lam.length() == l ? Rational(1) : Rational(0);
            },
            oracle_bound);
    }
    const Rational stirling = gstirling({Rational(-1), -p.alpha, Rational(0)}, n, l);
    if (stirling.is_zero()) return Rational(0);
    if (p.theta.is_zero() || p.alpha.is_zero())
        return stirling * rising_ratio(p, l, n);
    // theta^{l rising alpha} recovered from its Laguerre-type generating
    // function (-alpha)^l [t^l/l!] (-1/(t-1)) (1 - t/(t-1))^{-theta/alpha - l}
    const ExpSeries shape =
        ExpSeries::binomial_series(Rational(-1), Rational(-1), l) *
        ExpSeries::binomial_series(p.theta / p.alpha + Rational(l), Rational(-1), l);
    Rational factor = shape.coeff(l) * pow(-p.alpha, static_cast<unsigned long>(l));
    return stirling * factor / rising_factorial(p.theta, n);
}

Rational moment_length(const EPParams& p, int n, int k, StatRoute route, bool verify,
                       int oracle_bound) {
    if (k < 1 || k > n) throw Error("moment_length needs 1 <= k <= n");
    if (verify) {
        const Rational a = moment_length(p, n, k, StatRoute::ClosedForm, false, oracle_bound);
        const Rational b = moment_length(p, n, k, StatRoute::BruteForce, false, oracle_bound);
        bool ok = a == b;
        if (ok && !p.alpha.is_zero() && !p.theta.is_zero())
            ok = a == moment_length_expansion(p, n, k, false);
        if (!ok)
            throw IdentityViolation("moment_length mismatch at n=" + std::to_string(n) +
                                    ", k=" + std::to_string(k));
        return a;
    }
    if (route == StatRoute::BruteForce) {
        return bruteforce_expectation(
            p, n,
            [k](const IntegerPartition& lam) {
                return falling_factorial(Rational(lam.length()), k);
            },
            oracle_bound);
    }
    const Rational stirling = gstirling({Rational(-1), -p.alpha, p.theta + Rational(k) * p.alpha}, n, k);
    return Rational(factorial(static_cast<unsigned long>(k))) * stirling * rising_ratio(p, k, n);
}

Rational moment_length_expansion(const EPParams& p, int n, int k, bool step_alpha) {
    if (p.alpha.is_zero()) throw AlphaZero("the binomial expansion divides by alpha");
    if (p.theta.is_zero()) throw ParamRange("the binomial expansion needs theta != 0");
    const Rational step = step_alpha ? p.alpha : Rational(1);
    Rational sum(0);
    for (int j = 0; j <= k; ++j) {
        Rational term = Rational(binomial_int(k, j)) *
                        rising_factorial(p.theta + Rational(j) * p.alpha, n, step);
        if ((k - j) % 2 != 0) term = -term;
        sum += term;
    }
    return rising_factorial(p.theta / p.alpha, k) * sum / rising_factorial(p.theta, n);
}

Rational joint_moment_sizes(const EPParams& p, int n, std::span<const int> orders, StatRoute route,
                            bool verify, int oracle_bound) {
    int s = 0, k = 0;
    for (size_t i = 0; i < orders.size(); ++i) {
        if (orders[i] < 0) throw Error("negative moment order");
        s += static_cast<int>(i + 1) * orders[i];
        k += orders[i];
    }
    if (s > n) throw OrderTooLarge("order total " + std::to_string(s) + " exceeds n = " + std::to_string(n));
    if (k == 0) return Rational(1);
    if (verify) {
        const Rational a = joint_moment_sizes(p, n, orders, StatRoute::ClosedForm, false, oracle_bound);
        const Rational b = joint_moment_sizes(p, n, orders, StatRoute::BruteForce, false, oracle_bound);
        if (a != b) throw IdentityViolation("joint_moment_sizes mismatch at n=" + std::to_string(n));
        return a;
    }
    if (route == StatRoute::BruteForce) {
        std::vector<int> ord(orders.begin(), orders.end());
        return bruteforce_expectation(
            p, n,
            [&ord](const IntegerPartition& lam) {
                Rational out(1);
                for (size_t i = 0; i < ord.size() && !out.is_zero(); ++i)
                    out *= falling_factorial(Rational(lam.frequency(static_cast<int>(i + 1))), ord[i]);
                return out;
            },
            oracle_bound);
    }
    Rational out = Rational(factorial(static_cast<unsigned long>(n))) /
                   Rational(factorial(static_cast<unsigned long>(n - s)));
    out *= rising_factorial(p.theta + Rational(k) * p.alpha, n - s);
    out *= rising_ratio(p, k, n);
    for (size_t i = 0; i < orders.size(); ++i)
        out *= pow(xi_weight(p.alpha, static_cast<int>(i + 1)),
                   static_cast<unsigned long>(orders[i]));
    return out;
}

int ConditionalQuery::order_total() const {
    int s = 0;
    for (size_t i = 0; i < orders.size(); ++i) s += static_cast<int>(i + 1) * orders[i];
    return s;
}

int ConditionalQuery::order_count() const {
    int k = 0;
    for (int o : orders) k += o;
    return k;
}

namespace {

// One decomposition of the m added boxes: increments q_i on the parts of mu
// plus a multiset nu of brand-new parts. Its exact weighted path count from
// mu to the merged partition lambda is
//   m! / (prod q_i! prod nu_i! prod r_j(nu)!) * prod r_j(lambda)! / prod r_j(mu)!
// and the probability weight is that count times phi(lambda)/phi(mu).
Rational conditional_oracle(const EPParams& p, const ConditionalQuery& q) {
    const int m = q.extra;
    const int lmu = q.mu.length();
    const Rational phi_mu = phi_harmonic(p, q.mu);
    const Rational mu_freq = Rational(q.mu.frequency_factorial());
    const Integer m_fact = factorial(static_cast<unsigned long>(m));
    Rational total(0);

    for (int r = 0; r <= m; ++r) {
        for (const IntegerPartition& nu : enumerate_partitions(r)) {
            Rational order_weight(1);
            for (size_t i = 0; i < q.orders.size() && !order_weight.is_zero(); ++i)
                order_weight *= falling_factorial(Rational(nu.frequency(static_cast<int>(i + 1))),
                                                  q.orders[i]);
            if (order_weight.is_zero()) continue;

            Rational nu_factor = Rational(m_fact) / Rational(nu.frequency_factorial());
            for (int part : nu.parts())
                nu_factor /= Rational(factorial(static_cast<unsigned long>(part)));

            // enumerate nonnegative increments q_1..q_lmu summing to m - r
            std::vector<int> inc(static_cast<size_t>(lmu), 0);
            const auto emit = [&]() {
                std::vector<int> merged(q.mu.parts().begin(), q.mu.parts().end());
                for (int i = 0; i < lmu; ++i) merged[static_cast<size_t>(i)] += inc[static_cast<size_t>(i)];
                merged.insert(merged.end(), nu.parts().begin(), nu.parts().end());
                std::sort(merged.begin(), merged.end(), std::greater<int>());
                IntegerPartition lambda(std::move(merged));

                Rational paths = nu_factor * Rational(lambda.frequency_factorial()) / mu_freq;
                for (int qi : inc) paths /= Rational(factorial(static_cast<unsigned long>(qi)));
                total += paths * (phi_harmonic(p, lambda) / phi_mu) * order_weight;
            };
            const auto rec = [&](auto&& self, int idx, int rest) -> void {
                if (idx == lmu - 1) {
                    inc[static_cast<size_t>(idx)] = rest;
                    emit();
                    return;
                }
                for (int v = 0; v <= rest; ++v) {
                    inc[static_cast<size_t>(idx)] = v;
                    self(self, idx + 1, rest - v);
                }
            };
            rec(rec, 0, m - r);
        }
    }
    return total;
}

} // namespace

Rational conditional_moment(const EPParams& p, const ConditionalQuery& q, StatRoute route,
                            bool verify, int oracle_bound) {
    if (q.mu.empty()) throw Error("conditional_moment needs a nonempty observed partition");
    if (q.extra < 0) throw Error("conditional_moment: negative sample extension");
    const int s = q.order_total();
    const int k = q.order_count();
    if (s > q.extra)
        throw OrderTooLarge("order total " + std::to_string(s) + " exceeds m = " +
                            std::to_string(q.extra));
    if (verify) {
        const Rational a = conditional_moment(p, q, StatRoute::ClosedForm, false, oracle_bound);
        const Rational b = conditional_moment(p, q, StatRoute::BruteForce, false, oracle_bound);
        if (a != b)
            throw IdentityViolation("conditional_moment mismatch for mu = " + q.mu.str());
        return a;
    }
    if (route == StatRoute::BruteForce) {
        if (q.mu.size() + q.extra > oracle_bound)
            throw OracleBoundExceeded("conditional oracle bound " + std::to_string(oracle_bound) +
                                      " exceeded");
        return conditional_oracle(p, q);
    }
    const int n = q.mu.size();
    const int m = q.extra;
    Rational out = Rational(factorial(static_cast<unsigned long>(m))) /
                   Rational(factorial(static_cast<unsigned long>(m - s)));
    out *= rising_factorial(p.theta + Rational(q.mu.length()) * p.alpha, k, p.alpha);
    out *= rising_factorial(p.theta + Rational(n) + Rational(k) * p.alpha, m - s);
    out /= rising_factorial(p.theta + Rational(n), m); // theta^{n r} / theta^{n+m r}
    for (size_t i = 0; i < q.orders.size(); ++i)
        out *= pow(xi_weight(p.alpha, static_cast<int>(i + 1)),
                   static_cast<unsigned long>(q.orders[i]));
    return out;
}

Rational bruteforce_expectation(const EPParams& p, int n,
                                const std::function<Rational(const IntegerPartition&)>& g,
                                int oracle_bound) {
    if (n < 0) throw Error("bruteforce_expectation: negative n");
    if (n > oracle_bound)
        throw OracleBoundExceeded("enumeration bound " + std::to_string(oracle_bound) +
                                  " exceeded by n = " + std::to_string(n));
    Rational total(0);
    for (const IntegerPartition& lam : enumerate_partitions(n)) total += g(lam) * pmf(p, lam);
    return total;
}

} // namespace epp
