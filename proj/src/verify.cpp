#include "epp/verify.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "epp/branching.hpp"
#include "epp/ewens_pitman.hpp"
#include "epp/exp_series.hpp"
#include "epp/partition.hpp"
#include "epp/riordan.hpp"
#include "epp/symmetric.hpp"
#include "epp/theta_poly.hpp"

namespace epp::verify {

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;
    void fail(const std::string& what) {
        if (passed) detail = what;
        passed = false;
    }
    void note(const std::string& what) {
        if (passed && detail.empty()) detail = what;
    }
};

using CheckFn = std::function<void(const Options&, Outcome&)>;

std::vector<std::pair<Rational, Rational>> param_grid() {
    std::vector<std::pair<Rational, Rational>> grid;
    for (const auto& alpha : {Rational(1, 4), Rational(1, 2), Rational(3, 4)})
        for (const auto& theta : {Rational(1, 2), Rational(1), Rational(3)})
            grid.emplace_back(alpha, theta);
    return grid;
}

Rational random_rational(std::mt19937& rng, int num_lo, int num_hi, int den_hi) {
    std::uniform_int_distribution<int> num(num_lo, num_hi);
    std::uniform_int_distribution<int> den(1, den_hi);
    return Rational(num(rng), den(rng));
}

// --- partitions & graphs ---------------------------------------------------

void check_partition_count(const Options& o, Outcome& out) {
    const int top = std::max(o.max_n, 20);
    // Euler pentagonal recurrence as the independent count
    std::vector<Integer> p(static_cast<size_t>(top) + 1);
    p[0] = 1;
    for (int n = 1; n <= top; ++n) {
        Integer acc(0);
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            const int g2 = k * (3 * k + 1) / 2;
            if (g1 > n && g2 > n) break;
            const int sign = (k % 2 == 1) ? 1 : -1;
            if (g1 <= n) acc += sign * p[static_cast<size_t>(n - g1)];
            if (g2 <= n) acc += sign * p[static_cast<size_t>(n - g2)];
        }
        p[static_cast<size_t>(n)] = acc;
    }
    for (int n = 0; n <= std::min(top, o.max_n + 10); ++n) {
        const auto level = enumerate_partitions(n);
        if (Integer(static_cast<long>(level.size())) != p[static_cast<size_t>(n)]) {
            out.fail("p(" + std::to_string(n) + ") enumeration gave " +
                     std::to_string(level.size()) + ", recurrence gives " +
                     p[static_cast<size_t>(n)].get_str());
            return;
        }
        for (size_t i = 0; i + 1 < level.size(); ++i)
            if (!(level[i + 1] < level[i])) {
                out.fail("enumeration order not reverse-lexicographic at n=" + std::to_string(n));
                return;
            }
    }
}

void check_dim_recursion(const Options& o, Outcome& out) {
    const KingmanGraph g;
    for (int n = 1; n <= o.max_n; ++n) {
        for (const auto& lam : enumerate_partitions(n)) {
            Integer acc(0);
            for (const auto& [mu, kappa] : g.predecessors(lam)) acc += kappa * kingman_dim(mu);
            if (acc != kingman_dim(lam)) {
                out.fail("dim recursion fails at lambda = " + lam.str());
                return;
            }
        }
    }
}

void check_dim_path_weights(const Options& o, Outcome& out) {
    const KingmanGraph g;
    // weighted path count by explicit depth-first enumeration
    const std::function<Integer(const IntegerPartition&)> paths =
        [&](const IntegerPartition& lam) -> Integer {
        if (lam.empty()) return Integer(1);
        Integer acc(0);
        for (const auto& [mu, kappa] : g.predecessors(lam)) acc += kappa * paths(mu);
        return acc;
    };
    for (int n = 0; n <= std::min(6, o.max_n); ++n)
        for (const auto& lam : enumerate_partitions(n))
            if (paths(lam) != kingman_dim(lam)) {
                out.fail("path enumeration disagrees with dim at lambda = " + lam.str());
                return;
            }
}

template <class G>
bool graph_consistent(const G& g, int levels, std::string& detail) {
    for (int n = 0; n <= levels; ++n) {
        for (const auto& v : g.level_vertices(n)) {
            for (const auto& [w, kappa] : g.successors(v)) {
                bool found = false;
                for (const auto& [back, kappa2] : g.predecessors(w))
                    if (back == v && kappa2 == kappa) found = true;
                if (!found || g.level(w) != n + 1) {
                    std::ostringstream os;
                    os << "successor edge not mirrored at level " << n;
                    detail = os.str();
                    return false;
                }
            }
        }
    }
    return true;
}

void check_graph_consistency(const Options& o, Outcome& out) {
    std::string detail;
    if (!graph_consistent(KingmanGraph{}, std::min(6, o.max_n), detail))
        out.fail("Kingman graph: " + detail);
    if (!graph_consistent(PascalGraph{}, std::min(8, o.max_n), detail))
        out.fail("Pascal graph: " + detail);
    // covering increments size by exactly one and is antisymmetric
    for (int n = 0; n <= std::min(6, o.max_n); ++n)
        for (const auto& mu : enumerate_partitions(n))
            for (const auto& lam : enumerate_partitions(n + 1))
                if (covers(mu, lam) && covers(lam, mu)) {
                    out.fail("covering relation not antisymmetric");
                    return;
                }
}

void check_pascal_boundary(const Options&, Outcome& out) {
    const Rational half(1, 2);
    const Rational ratio = pascal_boundary_ratio({1, 1}, half, 10000);
    const Rational target(1, 4);
    if ((ratio - target).abs() > Rational(1, 1000)) {
        out.fail("ratio at n=10^4 is " + ratio.str() + ", not within 1/1000 of 1/4");
        return;
    }
    if (pascal_boundary_ratio({0, 0}, Rational(1, 3), 50) != Rational(1))
        out.fail("empty prefix ratio should be 1");
    if (pascal_boundary_ratio({2, 0}, Rational(0), 100) != Rational(0))
        out.fail("ratio with h(n) < a should be exactly 0");
}

// --- series ----------------------------------------------------------------

void check_series_reversion(const Options&, Outcome& out) {
    std::mt19937 rng(20240901);
    for (int trial = 0; trial < 20; ++trial) {
        std::uniform_int_distribution<int> ord(4, 12);
        const int order = ord(rng);
        std::vector<Rational> c(static_cast<size_t>(order) + 1, Rational(0));
        c[1] = random_rational(rng, 1, 6, 5);
        for (int i = 2; i <= order; ++i) c[static_cast<size_t>(i)] = random_rational(rng, -6, 6, 5);
        const ExpSeries h{std::vector<Rational>(c)};
        const ExpSeries hbar = h.reversion();
        if (!h.compose(hbar).equal_through(ExpSeries::identity(order), order) ||
            !hbar.compose(h).equal_through(ExpSeries::identity(order), order)) {
            out.fail("round trip failed on trial " + std::to_string(trial));
            return;
        }
    }
    // a pinned instance: the inverse pair (1 - e^{-at})/a and -log(1-at)/a
    const Rational a(1, 2);
    const int order = 10;
    const ExpSeries lower =
        (ExpSeries::one(order) - ExpSeries::exponential(-a, order)) * (Rational(1) / a);
    const ExpSeries expected = ExpSeries::log1p(-a, order) * (Rational(-1) / a);
    if (!lower.reversion().equal_through(expected, order))
        out.fail("reversion of (1-e^{-at})/a is not -log(1-at)/a");
}

void check_series_binomial(const Options&, Outcome& out) {
    std::mt19937 rng(20240902);
    for (int trial = 0; trial < 10; ++trial) {
        const Rational a = random_rational(rng, -5, 5, 4);
        const Rational b = random_rational(rng, -5, 5, 4);
        const Rational c = random_rational(rng, 1, 4, 3);
        const int order = 9;
        const ExpSeries prod = ExpSeries::binomial_series(a, c, order) *
                               ExpSeries::binomial_series(b, c, order);
        if (!prod.equal_through(ExpSeries::binomial_series(a + b, c, order), order)) {
            out.fail("(1+ct)^a (1+ct)^b != (1+ct)^{a+b} for a=" + a.str() + ", b=" + b.str());
            return;
        }
    }
    // commutativity and associativity of the exponential product
    const ExpSeries f = ExpSeries::binomial_series(Rational(-2), Rational(-1), 8);
    const ExpSeries g = ExpSeries::exponential(Rational(3), 8);
    const ExpSeries h = ExpSeries::log1p(Rational(1), 8);
    if (!(f * g).equal_through(g * f, 8) || !((f * g) * h).equal_through(f * (g * h), 8))
        out.fail("exponential product not commutative/associative");
}

void check_factorial_duality(const Options&, Outcome& out) {
    std::mt19937 rng(20240903);
    for (int trial = 0; trial < 20; ++trial) {
        const Rational x = random_rational(rng, -8, 8, 5);
        const Rational a = random_rational(rng, -4, 4, 3);
        std::uniform_int_distribution<int> kd(0, 6);
        const int k = kd(rng);
        const Rational lhs = rising_factorial(x, k, a);
        const Rational rhs = falling_factorial(x + Rational(k - 1) * a, k, a);
        if (lhs != rhs) {
            out.fail("duality fails at x=" + x.str() + ", k=" + std::to_string(k) +
                     ", a=" + a.str());
            return;
        }
    }
}

void check_altrep_term_identity(const Options&, Outcome& out) {
    // sum_{i=0}^{l-j} (-1)^j binom(i+j,j) (theta+l a)^{i+j rising a} / (a^{i+j} (i+j)!)
    //   = (-1)^j (theta+l a)^{l+1 rising a} / ((theta+(l+j)a) a^l (l-j)! j!)
    std::mt19937 rng(20240904);
    for (int trial = 0; trial < 10; ++trial) {
        const Rational theta = random_rational(rng, 1, 12, 6);
        const Rational alpha = random_rational(rng, 1, 9, 10);
        for (int l = 0; l <= 6; ++l) {
            for (int j = 0; j <= l; ++j) {
                Rational lhs(0);
                for (int i = 0; i <= l - j; ++i) {
                    Rational term = Rational(binomial_int(i + j, j)) *
                                    rising_factorial(theta + Rational(l) * alpha, i + j, alpha) /
                                    (pow(alpha, static_cast<unsigned long>(i + j)) *
                                     Rational(factorial(static_cast<unsigned long>(i + j))));
                    lhs += term;
                }
                if (j % 2 != 0) lhs = -lhs;
                Rational rhs = rising_factorial(theta + Rational(l) * alpha, l + 1, alpha) /
                               ((theta + Rational(l + j) * alpha) *
                                pow(alpha, static_cast<unsigned long>(l)) *
                                Rational(factorial(static_cast<unsigned long>(l - j))) *
                                Rational(factorial(static_cast<unsigned long>(j))));
                if (j % 2 != 0) rhs = -rhs;
                if (lhs != rhs) {
                    out.fail("identity fails at l=" + std::to_string(l) + ", j=" + std::to_string(j) +
                             ", theta=" + theta.str() + ", alpha=" + alpha.str());
                    return;
                }
            }
        }
    }
}

// --- Riordan ---------------------------------------------------------------

ExpRiordan random_riordan(std::mt19937& rng, int order) {
    std::vector<Rational> d(static_cast<size_t>(order) + 1), h(static_cast<size_t>(order) + 1);
    d[0] = random_rational(rng, 1, 5, 3);
    for (int i = 1; i <= order; ++i) {
        d[static_cast<size_t>(i)] = random_rational(rng, -5, 5, 4);
        h[static_cast<size_t>(i)] = random_rational(rng, -5, 5, 4);
    }
    h[0] = Rational(0);
    if (h[1].is_zero()) h[1] = Rational(1);
    return ExpRiordan(ExpSeries(std::move(d)), ExpSeries(std::move(h)));
}

std::vector<std::vector<Rational>> dense(const ExpRiordan& r, int size) {
    std::vector<std::vector<Rational>> m(static_cast<size_t>(size),
                                         std::vector<Rational>(static_cast<size_t>(size), Rational(0)));
    for (int n = 0; n < size; ++n)
        for (int k = 0; k <= n; ++k) m[static_cast<size_t>(n)][static_cast<size_t>(k)] = r.entry(n, k);
    return m;
}

std::vector<std::vector<Rational>> matmul(const std::vector<std::vector<Rational>>& a,
                                          const std::vector<std::vector<Rational>>& b) {
    const size_t n = a.size();
    std::vector<std::vector<Rational>> c(n, std::vector<Rational>(n, Rational(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k)
            for (size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

void check_riordan_group(const Options&, Outcome& out) {
    std::mt19937 rng(20240905);
    const int size = 8;
    const int order = size - 1;
    const ExpRiordan id = ExpRiordan::identity(order);
    for (int trial = 0; trial < 5; ++trial) {
        const ExpRiordan r1 = random_riordan(rng, order);
        const ExpRiordan r2 = random_riordan(rng, order);
        const ExpRiordan r3 = random_riordan(rng, order);
        if (dense(riordan_mul(r1, r2), size) != matmul(dense(r1, size), dense(r2, size))) {
            out.fail("group product differs from the matrix product");
            return;
        }
        if (dense(riordan_mul(riordan_mul(r1, r2), r3), size) !=
            dense(riordan_mul(r1, riordan_mul(r2, r3)), size)) {
            out.fail("product not associative");
            return;
        }
        if (dense(riordan_mul(r1, id), size) != dense(r1, size) ||
            dense(riordan_mul(id, r1), size) != dense(r1, size)) {
            out.fail("identity element fails");
            return;
        }
        const ExpRiordan inv = riordan_inverse(r1);
        if (dense(riordan_mul(r1, inv), size) != dense(id, size) ||
            dense(riordan_mul(inv, r1), size) != dense(id, size)) {
            out.fail("two-sided inverse fails");
            return;
        }
    }
    // binomial array squared: R_e[e^t,t]^2 = R_e[e^{2t},t]
    const ExpRiordan binom(ExpSeries::exponential(Rational(1), order), ExpSeries::identity(order));
    const ExpRiordan square = riordan_mul(binom, binom);
    for (int n = 0; n < size; ++n)
        for (int k = 0; k <= n; ++k) {
            const Rational expect =
                Rational(binomial_int(n, k)) * pow(Rational(2), static_cast<unsigned long>(n - k));
            if (square.entry(n, k) != expect) {
                out.fail("binomial array square wrong at (" + std::to_string(n) + "," +
                         std::to_string(k) + ")");
                return;
            }
        }
}

void check_ftra_row_sums(const Options&, Outcome& out) {
    std::mt19937 rng(20240906);
    for (int trial = 0; trial < 30; ++trial) {
        const int order = 10;
        const ExpRiordan r = random_riordan(rng, order);
        std::vector<Rational> cs(static_cast<size_t>(order) + 1);
        for (auto& x : cs) x = random_rational(rng, -5, 5, 4);
        const ExpSeries c{std::vector<Rational>(cs)};
        std::uniform_int_distribution<int> nd(0, 10);
        const int n = nd(rng);
        Rational direct(0);
        for (int k = 0; k <= n; ++k) direct += r.entry(n, k) * cs[static_cast<size_t>(k)];
        if (ftra(r, c, n) != direct) {
            out.fail("FTRA differs from the direct row sum on trial " + std::to_string(trial));
            return;
        }
    }
}

void check_stirling_cross_route(const Options& o, Outcome& out) {
    const int top = std::min(10, o.max_n);
    for (const auto& alpha : {Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
        for (const auto& theta : {Rational(1, 2), Rational(1), Rational(3)}) {
            std::vector<Rational> cs = {Rational(0)};
            for (int k = 1; k <= 3; ++k) cs.push_back(theta + Rational(k) * alpha);
            for (const auto& c : cs) {
                const GStirlingParams params{Rational(-1), -alpha, c};
                for (int n = 0; n <= top; ++n)
                    for (int l = 0; l <= n; ++l) {
                        const Rational riordan = gstirling(params, n, l, StirlingRoute::Riordan);
                        const Rational bell = gstirling(params, n, l, StirlingRoute::BellSum);
                        if (riordan != bell) {
                            out.fail("S(" + std::to_string(n) + "," + std::to_string(l) +
                                     ") routes disagree at alpha=" + alpha.str() + ", c=" + c.str() +
                                     ": " + riordan.str() + " vs " + bell.str());
                            return;
                        }
                    }
            }
        }
    }
    // identity array: S(n,l;-1,-1,0) = delta_{n,l}
    for (int n = 0; n <= 6; ++n)
        for (int l = 0; l <= n; ++l) {
            const Rational s = gstirling({Rational(-1), Rational(-1), Rational(0)}, n, l);
            if (s != (n == l ? Rational(1) : Rational(0))) {
                out.fail("S(n,l;-1,-1,0) is not the identity array");
                return;
            }
        }
}

void check_laguerre(const Options&, Outcome& out) {
    try {
        for (int l = 0; l <= 8; ++l)
            for (int j = 0; j <= l; ++j) laguerre_row(l, j);
    } catch (const IdentityViolation& e) {
        out.fail(e.what());
        return;
    }
    if (laguerre_row(0, 0) != Rational(1) || laguerre_row(1, 1) != Rational(-1) ||
        laguerre_row(2, 0) != Rational(2))
        out.fail("pinned Laguerre values wrong");
}

void check_laguerre_alternating_sum(const Options&, Outcome& out) {
    // (-a)^l l!/j! sum_i (-1)^i binom(j,i) (l+i)^{i falling} / i!
    //   = (-a)^l [t^l/l!] (-1/(t-1)) (t/(t-1))^j / j!
    const Rational alpha(1, 2);
    for (int l = 0; l <= 6; ++l) {
        for (int j = 0; j <= l; ++j) {
            Rational sum(0);
            for (int i = 0; i <= j; ++i) {
                Rational term = Rational(binomial_int(j, i)) *
                                falling_factorial(Rational(l + i), i) /
                                Rational(factorial(static_cast<unsigned long>(i)));
                if (i % 2 != 0) term = -term;
                sum += term;
            }
            const Rational shared = pow(-alpha, static_cast<unsigned long>(l));
            const Rational lhs = shared * Rational(factorial(static_cast<unsigned long>(l))) /
                                 Rational(factorial(static_cast<unsigned long>(j))) * sum;
            const Rational rhs = shared * laguerre_row(l, j);
            if (lhs != rhs) {
                out.fail("alternating sum fails at l=" + std::to_string(l) + ", j=" + std::to_string(j));
                return;
            }
        }
    }
}

// --- symmetric functions & interpolation ------------------------------------

void check_interpolation_property(const Options& o, Outcome& out) {
    const int top = std::min(7, o.max_n);
    for (int n = 1; n <= top; ++n) {
        for (const auto& lam : enumerate_partitions(n)) {
            for (int m = 0; m <= n; ++m) {
                for (const auto& mu : enumerate_partitions(m)) {
                    std::vector<Rational> point;
                    for (int part : mu.parts()) point.emplace_back(part);
                    const Rational value = factorial_monomial_sym(lam, point);
                    if (mu == lam) {
                        Integer expect(1);
                        for (int part : lam.parts()) expect *= factorial(static_cast<unsigned long>(part));
                        if (value != Rational(expect)) {
                            out.fail("m*_lambda(lambda) != prod lambda_i! at lambda = " + lam.str());
                            return;
                        }
                    } else if (!value.is_zero()) {
                        out.fail("m*_" + lam.str() + " does not vanish at mu = " + mu.str());
                        return;
                    }
                }
            }
        }
    }
}

void check_mstar_closed_form(const Options& o, Outcome& out) {
    const Rational alpha(1, 2);
    const Rational alpha2(2, 7);
    for (int n = 0; n <= std::min(6, o.max_n); ++n) {
        for (const auto& lam : enumerate_partitions(n)) {
            for (int k = 0; k <= 2 * lam.length(); ++k) {
                for (const Rational& a : {alpha, alpha2}) {
                    const std::vector<Rational> point(static_cast<size_t>(k), a);
                    if (factorial_monomial_sym(lam, point) != mstar_repeated_alpha(lam, k, a)) {
                        out.fail("closed form of m* at repeated alphabet fails for lambda = " +
                                 lam.str() + ", k = " + std::to_string(k));
                        return;
                    }
                }
            }
        }
    }
}

void check_symmetric_recursions(const Options& o, Outcome& out) {
    const KingmanGraph g;
    std::mt19937 rng(20240907);
    const IntegerPartition one(std::vector<int>{1});
    for (int n = 1; n <= std::min(6, o.max_n); ++n) {
        for (const auto& lam : enumerate_partitions(n)) {
            const auto succ = g.successors(lam);
            for (int trial = 0; trial < 10; ++trial) {
                std::vector<Rational> point;
                for (int i = 0; i <= n; ++i) point.push_back(random_rational(rng, -6, 6, 5));
                // m_lambda m_(1) = sum kappa m_nu
                Rational rhs_m(0);
                for (const auto& [nu, kappa] : succ) rhs_m += Rational(kappa) * monomial_sym(nu, point);
                if (monomial_sym(lam, point) * monomial_sym(one, point) != rhs_m) {
                    out.fail("monomial recursion fails at lambda = " + lam.str());
                    return;
                }
                // m*_lambda m*_(1) = n m*_lambda + sum kappa m*_nu
                Rational rhs_f = Rational(n) * factorial_monomial_sym(lam, point);
                for (const auto& [nu, kappa] : succ)
                    rhs_f += Rational(kappa) * factorial_monomial_sym(nu, point);
                if (factorial_monomial_sym(lam, point) * factorial_monomial_sym(one, point) != rhs_f) {
                    out.fail("factorial monomial recursion fails at lambda = " + lam.str());
                    return;
                }
            }
        }
    }
}

void check_sheffer_delta(const Options&, Outcome& out) {
    // (backward difference / alpha)^j applied to (theta + l alpha)^{i rising alpha}/i!
    // evaluated at theta = -l alpha gives delta_{i,j}
    for (const Rational& alpha : {Rational(1, 2), Rational(1, 3)}) {
        const int l = 3;
        for (int i = 0; i <= 6; ++i) {
            ThetaPoly basis = ThetaPoly::rising(Rational(l) * alpha, i, alpha) *
                              (Rational(1) / Rational(factorial(static_cast<unsigned long>(i))));
            for (int j = 0; j <= 6; ++j) {
                const Rational value = basis.eval(Rational(-l) * alpha);
                const Rational expect = (i == j) ? Rational(1) : Rational(0);
                if (value != expect) {
                    out.fail("delta-operator property fails at i=" + std::to_string(i) +
                             ", j=" + std::to_string(j));
                    return;
                }
                basis = basis.backward_difference(alpha) * (Rational(1) / alpha);
            }
        }
    }
}

void check_three_representations(const Options& o, Outcome& out) {
    const std::vector<Rational> alphas = {Rational(1, 4), Rational(1, 3), Rational(1, 2),
                                          Rational(3, 4)};
    for (int n = 0; n <= o.max_n; ++n) {
        for (const auto& lam : enumerate_partitions(n)) {
            for (const auto& alpha : alphas) {
                const FLambda closed = closed_f_lambda(lam, alpha);
                const FLambda newton = newton_f_lambda(lam, alpha);
                FLambda alt = altrep_f_lambda(lam, alpha);
                if (o.fault == Fault::AltrepSign && alt.poly.degree() >= 0) {
                    // injected sign fault on the leading coefficient (test-only)
                    std::vector<Rational> c = alt.poly.coeffs();
                    c.back() = -c.back();
                    alt.poly = ThetaPoly(std::move(c));
                }
                if (newton.poly != closed.poly || alt.poly != closed.poly) {
                    out.fail("lambda = " + lam.str() + ", alpha = " + alpha.str() +
                             ": closed " + closed.poly.str() + "; newton " + newton.poly.str() +
                             "; alternating " + alt.poly.str());
                    return;
                }
            }
        }
    }
}

void check_interpolation_nodes(const Options& o, Outcome& out) {
    for (int n = 0; n <= std::min(8, o.max_n); ++n) {
        for (const auto& lam : enumerate_partitions(n)) {
            for (const auto& alpha : {Rational(1, 2), Rational(2, 5)}) {
                const FLambda f = closed_f_lambda(lam, alpha);
                if (f.poly.degree() != lam.length()) {
                    out.fail("degree(f_lambda) != l(lambda) at lambda = " + lam.str());
                    return;
                }
                for (int k = lam.length(); k <= 2 * lam.length(); ++k) {
                    if (f.poly.eval(Rational(-k) * alpha) != mstar_repeated_alpha(lam, k, alpha)) {
                        out.fail("interpolation node value fails at lambda = " + lam.str() +
                                 ", k = " + std::to_string(k));
                        return;
                    }
                }
                // column 0 of the divided-difference table and the Newton
                // coefficients via backward differences
                if (lam.length() > 0) {
                    const auto table = divided_difference_table(lam, alpha);
                    ThetaPoly diff = f.poly;
                    for (int i = 0; i <= lam.length(); ++i) {
                        const Rational node_value = mstar_repeated_alpha(lam, lam.length() + i, alpha);
                        if (table[0][static_cast<size_t>(i)] != node_value) {
                            out.fail("divided-difference column 0 wrong at lambda = " + lam.str());
                            return;
                        }
                        const Rational b_i =
                            diff.eval(Rational(-lam.length()) * alpha) /
                            (Rational(factorial(static_cast<unsigned long>(i))) *
                             pow(alpha, static_cast<unsigned long>(i)));
                        if (table[static_cast<size_t>(i)][0] != b_i) {
                            out.fail("Newton coefficient != backward difference at lambda = " +
                                     lam.str());
                            return;
                        }
                        diff = diff.backward_difference(alpha);
                    }
                }
            }
        }
    }
}

// --- Ewens-Pitman ------------------------------------------------------------

void check_normalization(const Options& o, Outcome& out) {
    auto grid = param_grid();
    grid.emplace_back(Rational(0), Rational(1));     // Ewens row
    grid.emplace_back(Rational(1, 2), Rational(0));  // theta = 0 edge
    for (const auto& [alpha, theta] : grid) {
        const EPParams p(alpha, theta);
        for (int n = 0; n <= o.max_n; ++n) {
            if (normalization(p, n) != Rational(1)) {
                out.fail("FTRA normalization != 1 at n=" + std::to_string(n) +
                         ", alpha=" + alpha.str() + ", theta=" + theta.str());
                return;
            }
            Rational direct(0);
            for (const auto& lam : enumerate_partitions(n)) direct += pmf(p, lam);
            if (direct != Rational(1)) {
                out.fail("enumeration sum != 1 at n=" + std::to_string(n));
                return;
            }
        }
    }
}

void check_pmf_routes(const Options& o, Outcome& out) {
    for (const auto& [alpha, theta] : param_grid()) {
        const EPParams p(alpha, theta);
        for (int n = 1; n <= std::min(8, o.max_n); ++n)
            for (const auto& lam : enumerate_partitions(n)) {
                try {
                    pmf(p, lam, PmfRoute::Closed, /*verify=*/true);
                } catch (const IdentityViolation& e) {
                    out.fail(e.what());
                    return;
                }
            }
    }
}

void check_harmonicity(const Options& o, Outcome& out) {
    const KingmanGraph kingman;
    for (const auto& [alpha, theta] : param_grid()) {
        const EPParams p(alpha, theta);
        const auto phi = [&p](const IntegerPartition& lam) { return phi_harmonic(p, lam); };
        for (int level = 1; level <= std::min(9, o.max_n - 1); ++level)
            if (!check_harmonic(kingman, phi, level)) {
                out.fail("phi_{theta,alpha} not harmonic at level " + std::to_string(level) +
                         ", alpha=" + alpha.str() + ", theta=" + theta.str());
                return;
            }
    }
    const PascalGraph pascal;
    const Rational third(1, 3);
    const auto phi_p = [&third](const PascalVertex& v) {
        return pow(third, static_cast<unsigned long>(v.heads)) *
               pow(Rational(1) - third, static_cast<unsigned long>(v.tails));
    };
    for (int level = 0; level <= 6; ++level)
        if (!check_harmonic(pascal, phi_p, level)) {
            out.fail("Bernoulli harmonic function fails on the Pascal graph");
            return;
        }
    const auto constant_one = [](const IntegerPartition&) { return Rational(1); };
    if (check_harmonic(kingman, constant_one, 2))
        out.fail("constant 1 wrongly accepted as harmonic on the Kingman graph");
}

void check_marginal_length(const Options& o, Outcome& out) {
    for (const auto& [alpha, theta] : param_grid()) {
        const EPParams p(alpha, theta);
        for (int n = 1; n <= o.max_n; ++n) {
            Rational row_sum(0);
            for (int l = 0; l <= n; ++l) {
                const Rational gf = marginal_length(p, n, l, StatRoute::ClosedForm, false, o.max_n);
                const Rational bf = marginal_length(p, n, l, StatRoute::BruteForce, false, o.max_n);
                if (gf != bf) {
                    out.fail("marginal routes disagree at n=" + std::to_string(n) + ", l=" +
                             std::to_string(l) + ", alpha=" + alpha.str() + ", theta=" + theta.str() +
                             ": " + gf.str() + " vs " + bf.str());
                    return;
                }
                // Stirling form with the Bell-route S as a third value
                const Rational stirling =
                    gstirling({Rational(-1), -alpha, Rational(0)}, n, l, StirlingRoute::BellSum);
                const Rational closed = stirling * rising_factorial(theta, l, alpha) /
                                        rising_factorial(theta, n);
                if (gf != closed) {
                    out.fail("marginal differs from its Stirling form at n=" + std::to_string(n));
                    return;
                }
                row_sum += gf;
            }
            if (row_sum != Rational(1)) {
                out.fail("marginal row does not sum to 1 at n=" + std::to_string(n));
                return;
            }
        }
    }
}

void check_moment_length(const Options& o, Outcome& out) {
    bool alpha_step_matched = true;
    for (const auto& [alpha, theta] : param_grid()) {
        const EPParams p(alpha, theta);
        for (int n = 1; n <= o.max_n; ++n) {
            for (int k = 1; k <= std::min(3, n); ++k) {
                const Rational closed = moment_length(p, n, k, StatRoute::ClosedForm, false, o.max_n);
                const Rational brute = moment_length(p, n, k, StatRoute::BruteForce, false, o.max_n);
                if (closed != brute) {
                    out.fail("moment routes disagree at n=" + std::to_string(n) + ", k=" +
                             std::to_string(k));
                    return;
                }
                if (moment_length_expansion(p, n, k, false) != closed) {
                    out.fail("step-1 binomial expansion disagrees at n=" + std::to_string(n) +
                             ", k=" + std::to_string(k));
                    return;
                }
                if (moment_length_expansion(p, n, k, true) != closed) alpha_step_matched = false;
            }
            const Rational k1 = moment_length(p, n, 1, StatRoute::ClosedForm, false, o.max_n);
            const Rational direct = theta / alpha *
                                    (rising_factorial(theta + alpha, n) / rising_factorial(theta, n) -
                                     Rational(1));
            if (k1 != direct) {
                out.fail("first moment differs from its closed form at n=" + std::to_string(n));
                return;
            }
        }
    }
    out.note(alpha_step_matched
                 ? "note: the step-alpha binomial expansion variant agreed everywhere"
                 : "note: the step-alpha binomial expansion variant disagrees (step-1 is the "
                   "correct reading; kept for reporting)");
}

void check_joint_moment_sizes(const Options& o, Outcome& out) {
    // all order vectors with s = sum j k_j <= 4
    std::vector<std::vector<int>> orders;
    for (int k1 = 0; k1 <= 4; ++k1)
        for (int k2 = 0; 2 * k2 + k1 <= 4; ++k2)
            for (int k3 = 0; 3 * k3 + 2 * k2 + k1 <= 4; ++k3)
                for (int k4 = 0; 4 * k4 + 3 * k3 + 2 * k2 + k1 <= 4; ++k4)
                    orders.push_back({k1, k2, k3, k4});
    for (const auto& [alpha, theta] : param_grid()) {
        const EPParams p(alpha, theta);
        for (int n = 1; n <= std::min(10, o.max_n); ++n) {
            for (const auto& ord : orders) {
                int s = 0;
                for (size_t i = 0; i < ord.size(); ++i) s += static_cast<int>(i + 1) * ord[i];
                if (s > n) continue;
                const Rational closed =
                    joint_moment_sizes(p, n, ord, StatRoute::ClosedForm, false, o.max_n);
                const Rational brute =
                    joint_moment_sizes(p, n, ord, StatRoute::BruteForce, false, o.max_n);
                if (closed != brute) {
                    out.fail("joint moment routes disagree at n=" + std::to_string(n) +
                             ", orders=(" + std::to_string(ord[0]) + "," + std::to_string(ord[1]) +
                             "," + std::to_string(ord[2]) + "," + std::to_string(ord[3]) + ")");
                    return;
                }
            }
        }
    }
}

void check_conditional_moment(const Options& o, Outcome& out) {
    for (const auto& [alpha, theta] : param_grid()) {
        const EPParams p(alpha, theta);
        // one-step growth: expected count of new singletons is the
        // new-block probability (theta + alpha) / (theta + 1)
        const ConditionalQuery crp{IntegerPartition(std::vector<int>{1}), 1, {1}};
        const Rational expect = (theta + alpha) / (theta + Rational(1));
        if (conditional_moment(p, crp, StatRoute::ClosedForm) != expect ||
            conditional_moment(p, crp, StatRoute::BruteForce) != expect) {
            out.fail("one-step new-block probability wrong");
            return;
        }
        for (int nmu = 1; nmu <= std::min(5, o.max_n - 1); ++nmu) {
            for (const auto& mu : enumerate_partitions(nmu)) {
                for (int m = 1; m <= std::min(4, o.max_n - nmu); ++m) {
                    std::vector<std::vector<int>> orders;
                    for (int k1 = 0; k1 <= 3; ++k1)
                        for (int k2 = 0; k1 + 2 * k2 <= 3; ++k2)
                            for (int k3 = 0; k1 + 2 * k2 + 3 * k3 <= 3; ++k3)
                                orders.push_back({k1, k2, k3});
                    for (auto& ord : orders) {
                        ConditionalQuery q{mu, m, ord};
                        if (q.order_total() > m) continue;
                        const Rational closed =
                            conditional_moment(p, q, StatRoute::ClosedForm, false, o.max_n);
                        const Rational oracle =
                            conditional_moment(p, q, StatRoute::BruteForce, false, o.max_n);
                        if (closed != oracle) {
                            out.fail("conditional moment disagrees at mu=" + mu.str() + ", m=" +
                                     std::to_string(m) + ", orders=(" + std::to_string(ord[0]) + "," +
                                     std::to_string(ord[1]) + "," + std::to_string(ord[2]) +
                                     "), alpha=" + alpha.str() + ", theta=" + theta.str() + ": " +
                                     closed.str() + " vs " + oracle.str());
                            return;
                        }
                    }
                }
            }
        }
    }
}

void check_sufficiency(const Options& o, Outcome& out) {
    // for fixed alpha the pmf ratio between two theta values depends on
    // lambda only through its length
    for (const auto& alpha : {Rational(1, 4), Rational(1, 2)}) {
        const EPParams p1(alpha, Rational(1));
        const EPParams p2(alpha, Rational(5, 2));
        for (int n = 1; n <= std::min(8, o.max_n); ++n) {
            std::vector<Rational> ratio_by_length(static_cast<size_t>(n) + 1, Rational(0));
            std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
            for (const auto& lam : enumerate_partitions(n)) {
                const Rational ratio = pmf(p1, lam) / pmf(p2, lam);
                const size_t l = static_cast<size_t>(lam.length());
                if (!seen[l]) {
                    seen[l] = true;
                    ratio_by_length[l] = ratio;
                } else if (ratio_by_length[l] != ratio) {
                    out.fail("theta likelihood ratio varies within a length class at n=" +
                             std::to_string(n));
                    return;
                }
            }
        }
    }
}

void check_eppf_relation(const Options& o, Outcome& out) {
    for (const auto& [alpha, theta] : param_grid()) {
        const EPParams p(alpha, theta);
        for (int n = 0; n <= std::min(8, o.max_n); ++n)
            for (const auto& lam : enumerate_partitions(n)) {
                if (phi_harmonic(p, lam) * Rational(lam.frequency_factorial()) != eppf(p, lam)) {
                    out.fail("phi times the frequency multiplicities != EPPF at lambda = " +
                             lam.str());
                    return;
                }
            }
    }
}

const std::vector<std::pair<std::string, CheckFn>>& registry() {
    static const std::vector<std::pair<std::string, CheckFn>> checks = {
        {"partition-count", check_partition_count},
        {"dim-recursion", check_dim_recursion},
        {"dim-path-weights", check_dim_path_weights},
        {"graph-consistency", check_graph_consistency},
        {"pascal-boundary", check_pascal_boundary},
        {"series-reversion", check_series_reversion},
        {"series-binomial-product", check_series_binomial},
        {"factorial-duality", check_factorial_duality},
        {"altrep-term-identity", check_altrep_term_identity},
        {"riordan-group-axioms", check_riordan_group},
        {"ftra-row-sums", check_ftra_row_sums},
        {"stirling-cross-route", check_stirling_cross_route},
        {"laguerre-identity", check_laguerre},
        {"laguerre-alternating-sum", check_laguerre_alternating_sum},
        {"interpolation-property", check_interpolation_property},
        {"mstar-closed-form", check_mstar_closed_form},
        {"symmetric-recursions", check_symmetric_recursions},
        {"sheffer-delta", check_sheffer_delta},
        {"three-representations", check_three_representations},
        {"interpolation-nodes", check_interpolation_nodes},
        {"normalization", check_normalization},
        {"pmf-route-equality", check_pmf_routes},
        {"harmonicity", check_harmonicity},
        {"marginal-length", check_marginal_length},
        {"moment-length", check_moment_length},
        {"joint-moment-sizes", check_joint_moment_sizes},
        {"conditional-moment", check_conditional_moment},
        {"sufficiency", check_sufficiency},
        {"eppf-relation", check_eppf_relation},
    };
    return checks;
}

CheckResult run_one(const std::string& name, const CheckFn& fn, const Options& opts) {
    CheckResult result;
    result.name = name;
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();
    try {
        fn(opts, outcome);
    } catch (const std::exception& e) {
        outcome.fail(std::string("exception: ") + e.what());
    }
    const auto stop = std::chrono::steady_clock::now();
    result.passed = outcome.passed;
    result.detail = outcome.detail;
    result.millis = std::chrono::duration<double, std::milli>(stop - start).count();
    return result;
}

} // namespace

std::vector<std::string> check_names() {
    std::vector<std::string> names;
    for (const auto& [name, fn] : registry()) names.push_back(name);
    return names;
}

CheckResult run_check(const std::string& name, const Options& opts) {
    for (const auto& [n, fn] : registry())
        if (n == name) return run_one(n, fn, opts);
    throw Error("unknown check: " + name);
}

std::vector<CheckResult> run_all(const Options& opts) {
    std::vector<CheckResult> results;
    for (const auto& [name, fn] : registry()) results.push_back(run_one(name, fn, opts));
    return results;
}

} // namespace epp::verify
