#include <doctest.h>

#include <random>

#include "epp/rational.hpp"

using namespace epp;

TEST_CASE("construction canonicalizes") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(1, 3).den() == 3);
    CHECK(Rational(0, 7) == Rational(0));
    CHECK_THROWS_AS(Rational(1, 0), ParseError);
}

TEST_CASE("parse and print round-trip") {
    for (const char* text : {"3/32", "-7/5", "0", "12", "-4", "123456789012345678901234567890/7"}) {
        const Rational r = Rational::parse(text);
        CHECK(Rational::parse(r.str()) == r);
        CHECK(r.str() == text);
    }
    CHECK(Rational::parse(" 1/2 ") == Rational(1, 2));
    CHECK(Rational::parse("2/4").str() == "1/2");
    CHECK_THROWS_AS(Rational::parse("1/2/3"), ParseError);
    CHECK_THROWS_AS(Rational::parse("a"), ParseError);
    CHECK_THROWS_AS(Rational::parse(""), ParseError);
    CHECK_THROWS_AS(Rational::parse("1.5"), ParseError);
}

TEST_CASE("parse/print round-trip on random rationals") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 1000000);
    for (int i = 0; i < 200; ++i) {
        const Rational r(num(rng), den(rng));
        CHECK(Rational::parse(r.str()) == r);
    }
}

TEST_CASE("decimal rendering is deterministic and rounded") {
    CHECK(Rational(3, 32).decimal(12) == "0.093750000000");
    CHECK(Rational(1, 3).decimal(6) == "0.333333");
    CHECK(Rational(2, 3).decimal(6) == "0.666667");
    CHECK(Rational(-1, 8).decimal(3) == "-0.125");
    CHECK(Rational(5, 2).decimal(2) == "2.50");
    CHECK(Rational(0).decimal(4) == "0.0000");
}

TEST_CASE("rising factorial") {
    CHECK(rising_factorial(Rational(1), 3, Rational(1, 2)) == Rational(3));
    CHECK(rising_factorial(Rational(7, 3), 0, Rational(9)) == Rational(1));
    CHECK(rising_factorial(Rational(2), 4) == Rational(120)); // 2*3*4*5
}

TEST_CASE("falling factorial") {
    CHECK(falling_factorial(Rational(5), 2) == Rational(20));
    CHECK(falling_factorial(Rational(5), 0, Rational(3)) == Rational(1));
    CHECK(falling_factorial(Rational(3), 4) == Rational(0));
}

TEST_CASE("rising/falling duality on random inputs") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> small(-9, 9), dend(1, 6), kd(0, 7);
    for (int i = 0; i < 100; ++i) {
        const Rational x(small(rng), dend(rng));
        const Rational a(small(rng), dend(rng));
        const int k = kd(rng);
        CHECK(rising_factorial(x, k, a) == falling_factorial(x + Rational(k - 1) * a, k, a));
    }
}

TEST_CASE("binomials") {
    CHECK(binomial_int(5, 2) == 10);
    CHECK(binomial_int(4, 5) == 0);
    CHECK(binomial_int(-1, 0) == 0);
    CHECK(binomial(Rational(1, 2), 2) == Rational(-1, 8));
}
