/*
 * Copyright (c) 2026 The bepoly authors
 * SPDX-License-Identifier: Apache-2.0
 */

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "bepoly/rational.hpp"
#include "oracles.hpp"

using bepoly::BigInt;
using bepoly::Rational;

TEST_CASE("construction normalizes to canonical form", "[rational]") {
    CHECK(Rational(6, 8) == Rational(3, 4));
    CHECK(Rational(3, -4) == Rational(-3, 4));
    CHECK(Rational(-6, -4) == Rational(3, 2));

    Rational zero(0, 5);
    CHECK(zero.is_zero());
    CHECK(zero.numerator() == 0);
    CHECK(zero.denominator() == 1);

    CHECK(Rational(42).is_integer());
    CHECK(Rational(1, 2).denominator() == 2);
}

TEST_CASE("zero denominator is rejected", "[rational]") {
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(0).reciprocal(), std::domain_error);
}

TEST_CASE("basic arithmetic", "[rational]") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(1, 2) * Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(1, 2) / Rational(1, 3) == Rational(3, 2));
    CHECK(-Rational(3, 4) == Rational(-3, 4));
    CHECK(Rational(2, 4).sign() == 1);
    CHECK(Rational(-1, 7).sign() == -1);
    CHECK(Rational(0).sign() == 0);
}

TEST_CASE("arithmetic is exact on random values", "[rational]") {
    std::mt19937_64 rng(20260810);
    for (int i = 0; i < 200; ++i) {
        Rational a = oracles::random_rational(rng, 1000);
        Rational b = oracles::random_rational(rng, 1000);
        CHECK((a + b) - b == a);
        if (!b.is_zero()) CHECK((a * b) / b == a);
    }
}

TEST_CASE("binomial coefficients", "[rational]") {
    CHECK(bepoly::binomial(5, 0) == Rational(1));
    CHECK(bepoly::binomial(5, 2) == Rational(10));
    CHECK(bepoly::binomial(10, 5) == Rational(252));
    CHECK(bepoly::binomial(0, 0) == Rational(1));
    CHECK(bepoly::binomial(3, 7) == Rational(0));

    // against the additive Pascal-triangle oracle
    for (std::size_t n = 0; n <= 20; ++n)
        for (std::size_t k = 0; k <= n; ++k)
            CHECK(bepoly::binomial(n, k) == Rational(oracles::pascal_binomial(n, k)));
}

TEST_CASE("factorial and powers of two", "[rational]") {
    CHECK(bepoly::factorial(0) == 1);
    CHECK(bepoly::factorial(5) == 120);
    CHECK(bepoly::factorial(20) == BigInt("2432902008176640000"));

    CHECK(bepoly::pow2(0) == Rational(1));
    CHECK(bepoly::pow2(10) == Rational(1024));
    CHECK(bepoly::pow2(-3) == Rational(1, 8));
    CHECK(bepoly::pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(bepoly::pow(Rational(-1, 2), 2) == Rational(1, 4));
}

TEST_CASE("string round trips", "[rational]") {
    CHECK(Rational(-691, 2730).to_string() == "-691/2730");
    CHECK(Rational(0).to_string() == "0");
    CHECK(Rational(7).to_string() == "7");
    CHECK(Rational(-1, 2).to_string() == "-1/2");

    CHECK(Rational::from_string("-691/2730") == Rational(-691, 2730));
    CHECK(Rational::from_string("0") == Rational(0));
    CHECK(Rational::from_string("2/4") == Rational(1, 2));  // parser normalizes

    std::mt19937_64 rng(99);
    for (int i = 0; i < 100; ++i) {
        Rational r = oracles::random_rational(rng, 10000);
        CHECK(Rational::from_string(r.to_string()) == r);
    }

    CHECK_THROWS_AS(Rational::from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("1/"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("1/0"), std::domain_error);
}

TEST_CASE("big values stay exact", "[rational]") {
    // sum of 1/k for k=1..40 has a large denominator; (sum * lcm) must be integral
    Rational h(0);
    for (long long k = 1; k <= 40; ++k) h += Rational(1, k);
    Rational back = h;
    for (long long k = 1; k <= 40; ++k) back -= Rational(1, k);
    CHECK(back.is_zero());
    CHECK(bepoly::binomial(64, 32) == Rational(BigInt("1832624140942590534")));
}
