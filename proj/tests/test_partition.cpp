#include <doctest.h>

#include <vector>

#include "epp/branching.hpp"
#include "epp/partition.hpp"

using namespace epp;

namespace {

// Euler's pentagonal recurrence, the independent partition counter.
std::vector<long> partition_counts(int top) {
    std::vector<long> p(static_cast<size_t>(top) + 1, 0);
    p[0] = 1;
    for (int n = 1; n <= top; ++n) {
        long acc = 0;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            const int g2 = k * (3 * k + 1) / 2;
            if (g1 > n && g2 > n) break;
            const long sign = (k % 2 == 1) ? 1 : -1;
            if (g1 <= n) acc += sign * p[static_cast<size_t>(n - g1)];
            if (g2 <= n) acc += sign * p[static_cast<size_t>(n - g2)];
        }
        p[static_cast<size_t>(n)] = acc;
    }
    return p;
}

IntegerPartition part(std::vector<int> v) { return IntegerPartition(std::move(v)); }

} // namespace

TEST_CASE("construction validates shape") {
    CHECK_THROWS_AS(part({1, 2}), ParseError);
    CHECK_THROWS_AS(part({2, 0}), ParseError);
    CHECK(part({4, 2, 1}).size() == 7);
    CHECK(part({4, 2, 1}).length() == 3);
    CHECK(IntegerPartition{}.size() == 0);
    CHECK(IntegerPartition{}.length() == 0);
}

TEST_CASE("frequencies") {
    const auto lam = part({2, 2, 1});
    CHECK(lam.frequency(1) == 1);
    CHECK(lam.frequency(2) == 2);
    CHECK(lam.frequency(3) == 0);
    CHECK(lam.frequency_factorial() == 2);
    int n = 0, l = 0;
    const auto r = lam.frequencies();
    for (size_t j = 1; j < r.size(); ++j) {
        n += static_cast<int>(j) * r[j];
        l += r[j];
    }
    CHECK(n == lam.size());
    CHECK(l == lam.length());
}

TEST_CASE("parse rejects ascending input") {
    CHECK(IntegerPartition::parse("4,2,1") == part({4, 2, 1}));
    CHECK_THROWS_AS(IntegerPartition::parse("1,2"), ParseError);
    CHECK_THROWS_AS(IntegerPartition::parse("2,x"), ParseError);
}

TEST_CASE("enumeration: order and counts") {
    const auto level0 = enumerate_partitions(0);
    REQUIRE(level0.size() == 1);
    CHECK(level0[0].empty());

    const auto level4 = enumerate_partitions(4);
    REQUIRE(level4.size() == 5);
    CHECK(level4[0] == part({4}));
    CHECK(level4[1] == part({3, 1}));
    CHECK(level4[2] == part({2, 2}));
    CHECK(level4[3] == part({2, 1, 1}));
    CHECK(level4[4] == part({1, 1, 1, 1}));

    CHECK(enumerate_partitions(12).size() == 77);

    const auto counts = partition_counts(30);
    for (int n = 0; n <= 30; ++n)
        CHECK(static_cast<long>(enumerate_partitions(n).size()) == counts[static_cast<size_t>(n)]);
}

TEST_CASE("covering relation and multiplicity") {
    CHECK(kingman_multiplicity(part({2, 1}), part({2, 2})) == 2);
    CHECK(kingman_multiplicity(part({1}), part({2})) == 1);
    CHECK(kingman_multiplicity(part({4, 2}), part({4, 2, 1})) == 1);
    CHECK_THROWS_AS(kingman_multiplicity(part({2, 1}), part({4, 1})), NotCovering);
    CHECK_THROWS_AS(kingman_multiplicity(part({2}), part({2, 2})), NotCovering);

    // covering increments size by exactly 1 and is antisymmetric
    for (int n = 0; n <= 7; ++n)
        for (const auto& mu : enumerate_partitions(n))
            for (int m = 0; m <= 8; ++m)
                for (const auto& lam : enumerate_partitions(m)) {
                    if (covers(mu, lam)) {
                        CHECK(lam.size() == mu.size() + 1);
                        CHECK(!covers(lam, mu));
                    }
                }
}

TEST_CASE("kingman dimension") {
    CHECK(kingman_dim(part({2, 1})) == 3);
    CHECK(kingman_dim(part({4, 2, 1})) == 105);
    CHECK(kingman_dim(IntegerPartition{}) == 1);
}

TEST_CASE("dimension satisfies the forward recursion") {
    const KingmanGraph g;
    for (int n = 1; n <= 10; ++n)
        for (const auto& lam : enumerate_partitions(n)) {
            Integer acc(0);
            for (const auto& [mu, kappa] : g.predecessors(lam)) acc += kappa * kingman_dim(mu);
            CHECK(acc == kingman_dim(lam));
        }
}

TEST_CASE("dimension equals the weighted path count") {
    const KingmanGraph g;
    // explicit depth-first path enumeration, multiplying edge multiplicities
    struct Walker {
        const KingmanGraph& g;
        Integer walk(const IntegerPartition& lam) const {
            if (lam.empty()) return Integer(1);
            Integer acc(0);
            for (const auto& [mu, kappa] : g.predecessors(lam)) acc += kappa * walk(mu);
            return acc;
        }
    } walker{g};
    for (int n = 0; n <= 6; ++n)
        for (const auto& lam : enumerate_partitions(n)) CHECK(walker.walk(lam) == kingman_dim(lam));
}

TEST_CASE("successors and predecessors are mutually consistent") {
    const KingmanGraph kg;
    for (int n = 0; n <= 6; ++n)
        for (const auto& mu : enumerate_partitions(n))
            for (const auto& [lam, kappa] : kg.successors(mu)) {
                CHECK(kappa == kingman_multiplicity(mu, lam));
                bool mirrored = false;
                for (const auto& [back, kappa2] : kg.predecessors(lam))
                    if (back == mu && kappa2 == kappa) mirrored = true;
                CHECK(mirrored);
            }
    const PascalGraph pg;
    for (int n = 0; n <= 6; ++n)
        for (const auto& v : pg.level_vertices(n))
            for (const auto& [w, kappa] : pg.successors(v)) {
                CHECK(kappa == 1);
                bool mirrored = false;
                for (const auto& [back, kappa2] : pg.predecessors(w))
                    if (back == v && kappa2 == kappa) mirrored = true;
                CHECK(mirrored);
            }
}

TEST_CASE("pascal path counts") {
    CHECK(pascal_dim({0, 0}, {2, 1}) == 3);
    CHECK(pascal_dim({1, 1}, {1, 1}) == 1);
    CHECK(pascal_dim({2, 0}, {1, 5}) == 0);
    CHECK(pascal_dim({0, 2}, {3, 1}) == 0);
    // forward recursion dim(h,t) = dim(h-1,t) + dim(h,t-1)
    for (int h = 1; h <= 8; ++h)
        for (int t = 1; t <= 8; ++t)
            CHECK(pascal_dim({0, 0}, {h, t}) ==
                  pascal_dim({0, 0}, {h - 1, t}) + pascal_dim({0, 0}, {h, t - 1}));
}

TEST_CASE("pascal boundary ratio converges to p^a (1-p)^b") {
    const Rational half(1, 2);
    const Rational r1000 = pascal_boundary_ratio({1, 1}, half, 1000);
    CHECK((r1000 - Rational(1, 4)).abs() < Rational(1, 100));
    CHECK(pascal_boundary_ratio({0, 0}, Rational(2, 3), 500) == Rational(1));
    CHECK(pascal_boundary_ratio({2, 0}, Rational(0), 100) == Rational(0));
}
