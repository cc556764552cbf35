#include <doctest.h>

#include <random>
#include <thread>

#include "epp/riordan.hpp"

using namespace epp;

namespace {

ExpRiordan binomial_array(int order) {
    return ExpRiordan(ExpSeries::exponential(Rational(1), order), ExpSeries::identity(order));
}

ExpRiordan random_riordan(std::mt19937& rng, int order) {
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4), pos(1, 5);
    std::vector<Rational> d(static_cast<size_t>(order) + 1), h(static_cast<size_t>(order) + 1);
    d[0] = Rational(pos(rng), den(rng));
    for (int i = 1; i <= order; ++i) {
        d[static_cast<size_t>(i)] = Rational(num(rng), den(rng));
        h[static_cast<size_t>(i)] = Rational(num(rng), den(rng));
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

} // namespace

TEST_CASE("identity array and binomial array entries") {
    const ExpRiordan id = ExpRiordan::identity(8);
    for (int n = 0; n <= 8; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(id.entry(n, k) == (n == k ? Rational(1) : Rational(0)));

    const ExpRiordan binom = binomial_array(8);
    for (int n = 0; n <= 8; ++n)
        for (int k = 0; k <= n; ++k) CHECK(binom.entry(n, k) == Rational(binomial_int(n, k)));
    CHECK(binom.entry(3, 7) == Rational(0));
    CHECK_THROWS_AS(binom.entry(9, 0), OrderExceeded);
}

TEST_CASE("kingman column entry equals a generalized Stirling number") {
    const Rational alpha(1, 2);
    const int order = 6;
    const ExpSeries h =
        (ExpSeries::one(order) - ExpSeries::binomial_series(alpha, Rational(-1), order)) *
        (Rational(1) / alpha);
    const ExpRiordan r(ExpSeries::one(order), h);
    CHECK(r.entry(2, 1) == Rational(1, 2));
    for (int n = 0; n <= order; ++n)
        for (int l = 0; l <= n; ++l)
            CHECK(r.entry(n, l) ==
                  gstirling({Rational(-1), -alpha, Rational(0)}, n, l, StirlingRoute::BellSum));
}

TEST_CASE("ordinary-convention wrapper") {
    const ExpRiordan binom = binomial_array(8);
    // [t^n] e^t t^k = 1/(n-k)!
    for (int n = 0; n <= 8; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(binom.ordinary_entry(n, k) ==
                  Rational(1) / Rational(factorial(static_cast<unsigned long>(n - k))));
}

TEST_CASE("group product, identity, inverse on 8x8 truncations") {
    std::mt19937 rng(42);
    const int size = 8;
    const int order = size - 1;
    const ExpRiordan id = ExpRiordan::identity(order);
    for (int trial = 0; trial < 5; ++trial) {
        const ExpRiordan r1 = random_riordan(rng, order);
        const ExpRiordan r2 = random_riordan(rng, order);
        const ExpRiordan r3 = random_riordan(rng, order);

        CHECK(dense(riordan_mul(r1, r2), size) == matmul(dense(r1, size), dense(r2, size)));
        CHECK(dense(riordan_mul(riordan_mul(r1, r2), r3), size) ==
              dense(riordan_mul(r1, riordan_mul(r2, r3)), size));
        CHECK(dense(riordan_mul(r1, id), size) == dense(r1, size));
        CHECK(dense(riordan_mul(id, r1), size) == dense(r1, size));

        const ExpRiordan inv = riordan_inverse(r1);
        CHECK(dense(riordan_mul(r1, inv), size) == dense(id, size));
        CHECK(dense(riordan_mul(inv, r1), size) == dense(id, size));
    }
}

TEST_CASE("squared binomial array") {
    const ExpRiordan square = riordan_mul(binomial_array(7), binomial_array(7));
    for (int n = 0; n <= 7; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(square.entry(n, k) ==
                  Rational(binomial_int(n, k)) * pow(Rational(2), static_cast<unsigned long>(n - k)));
}

TEST_CASE("inverse of the lowering pair recovers the logarithmic series") {
    const Rational alpha(1, 2);
    const int order = 9;
    const ExpSeries lower =
        (ExpSeries::one(order) - ExpSeries::exponential(-alpha, order)) * (Rational(1) / alpha);
    const ExpRiordan r(ExpSeries::one(order), lower);
    const ExpRiordan inv = riordan_inverse(r);
    const ExpSeries expected = ExpSeries::log1p(-alpha, order) * (Rational(-1) / alpha);
    CHECK(inv.h().equal_through(expected, order));
}

TEST_CASE("ftra equals the direct row sum") {
    // binomial theorem instance: sum binom(3,k) 2^k = 27
    const ExpRiordan binom = binomial_array(6);
    CHECK(ftra(binom, ExpSeries::exponential(Rational(2), 6), 3) == Rational(27));

    // identity array returns the coefficient itself
    const ExpSeries c = ExpSeries::binomial_series(Rational(-5, 2), Rational(-1), 6);
    CHECK(ftra(ExpRiordan::identity(6), c, 4) == c.coeff(4));

    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4), nd(0, 10);
    for (int trial = 0; trial < 30; ++trial) {
        const int order = 10;
        const ExpRiordan r = random_riordan(rng, order);
        std::vector<Rational> cs(static_cast<size_t>(order) + 1);
        for (auto& x : cs) x = Rational(num(rng), den(rng));
        const int n = nd(rng);
        Rational direct(0);
        for (int k = 0; k <= n; ++k) direct += r.entry(n, k) * cs[static_cast<size_t>(k)];
        CHECK(ftra(r, ExpSeries{std::move(cs)}, n) == direct);
    }
}

TEST_CASE("normalization pipeline coefficient") {
    // R_e[1, (1-(1-t)^alpha)/alpha] with c = (1-alpha t)^{-theta/alpha}:
    // coefficient n is theta^{n rising}; alpha = 1/2, theta = 1, n = 4 -> 24
    const Rational alpha(1, 2), theta(1);
    const int order = 6;
    const ExpSeries h =
        (ExpSeries::one(order) - ExpSeries::binomial_series(alpha, Rational(-1), order)) *
        (Rational(1) / alpha);
    const ExpRiordan r(ExpSeries::one(order), h);
    const ExpSeries c = ExpSeries::binomial_series(-theta / alpha, -alpha, order);
    CHECK(ftra(r, c, 4) == Rational(24));
}

TEST_CASE("generalized Stirling numbers cross-route") {
    // identity specialization
    for (int n = 0; n <= 6; ++n)
        for (int l = 0; l <= n; ++l)
            CHECK(gstirling({Rational(-1), Rational(-1), Rational(0)}, n, l) ==
                  (n == l ? Rational(1) : Rational(0)));

    CHECK(gstirling({Rational(-1), Rational(-1, 2), Rational(0)}, 2, 1) == Rational(1, 2));

    // closed form for l = 1 with c = theta + alpha
    const Rational alpha(1, 2), theta(1);
    const Rational s31 = gstirling({Rational(-1), -alpha, theta + alpha}, 3, 1);
    CHECK(s31 == (rising_factorial(theta + alpha, 3) - rising_factorial(theta, 3)) / alpha);
    CHECK(s31 == Rational(57, 4));
    CHECK(s31 == gstirling({Rational(-1), -alpha, theta + alpha}, 3, 1, StirlingRoute::BellSum));

    // both routes agree on the module grid, including the k used inside c
    for (const auto& a : {Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
        for (const auto& t : {Rational(1, 2), Rational(1), Rational(3)}) {
            for (int k = 0; k <= 3; ++k) {
                const Rational c = k == 0 ? Rational(0) : t + Rational(k) * a;
                for (int n = 0; n <= 10; ++n)
                    for (int l = 0; l <= n; ++l) {
                        const GStirlingParams params{Rational(-1), -a, c};
                        CHECK(gstirling(params, n, l, StirlingRoute::Riordan) ==
                              gstirling(params, n, l, StirlingRoute::BellSum));
                    }
            }
        }
    }
}

TEST_CASE("degenerate Stirling parameters use the limit series") {
    // b = 0 (alpha = 0 in the length marginal): h -> log(1+at)/a
    for (int n = 0; n <= 8; ++n)
        for (int l = 0; l <= n; ++l) {
            const GStirlingParams p{Rational(-1), Rational(0), Rational(0)};
            CHECK(gstirling(p, n, l, StirlingRoute::Riordan) ==
                  gstirling(p, n, l, StirlingRoute::BellSum));
        }
    // a = 0: d -> e^{ct}, h -> (e^{bt}-1)/b; S(n,l;0,1,0) are Stirling numbers
    // of the second kind
    const GStirlingParams second{Rational(0), Rational(1), Rational(0)};
    CHECK(gstirling(second, 4, 2) == Rational(7));
    CHECK(gstirling(second, 5, 3) == Rational(25));
    for (int n = 0; n <= 8; ++n)
        for (int l = 0; l <= n; ++l)
            CHECK(gstirling(second, n, l) == gstirling(second, n, l, StirlingRoute::BellSum));
    // a = b = 0 with c != 0: pure powers c^n on column 0
    CHECK(gstirling({Rational(0), Rational(0), Rational(3)}, 4, 0) == Rational(81));
}

TEST_CASE("laguerre rows by two independent routes") {
    CHECK(laguerre_row(0, 0) == Rational(1));
    CHECK(laguerre_row(1, 1) == Rational(-1));
    CHECK(laguerre_row(2, 0) == Rational(2));
    for (int l = 0; l <= 8; ++l)
        for (int j = 0; j <= l; ++j) CHECK_NOTHROW(laguerre_row(l, j));
    // row l of the coefficient table of l! L_l sums to l! L_l(1)
    Rational row_sum(0);
    for (int j = 0; j <= 3; ++j) row_sum += laguerre_row(3, j);
    CHECK(row_sum == Rational(-4)); // 3! L_3(1) = 6 (1 - 3 + 3/2 - 1/6) = -4
}

TEST_CASE("alternating binomial sum matches the Laguerre entry") {
    const Rational alpha(1, 2);
    for (int l = 0; l <= 6; ++l)
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
            CHECK(shared * Rational(factorial(static_cast<unsigned long>(l))) /
                      Rational(factorial(static_cast<unsigned long>(j))) * sum ==
                  shared * laguerre_row(l, j));
        }
}

TEST_CASE("concurrent reads of a shared array") {
    const ExpRiordan r = binomial_array(24);
    std::vector<std::thread> threads;
    std::vector<bool> ok(4, false);
    for (int i = 0; i < 4; ++i)
        threads.emplace_back([&r, &ok, i] {
            bool good = true;
            for (int n = 0; n <= 24; ++n)
                for (int k = 0; k <= n; ++k)
                    good = good && r.entry(n, k) == Rational(binomial_int(n, k));
            ok[static_cast<size_t>(i)] = good;
        });
    for (auto& t : threads) t.join();
    for (bool good : ok) CHECK(good);
}
