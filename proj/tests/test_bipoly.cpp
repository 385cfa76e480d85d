/*
 * Copyright (c) 2026 The bepoly authors
 * SPDX-License-Identifier: Apache-2.0
 */

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "bepoly/bipoly.hpp"
#include "oracles.hpp"

using bepoly::AffineArg;
using bepoly::BiPoly;
using bepoly::BiVar;
using bepoly::Rational;
using bepoly::UniPoly;
using bepoly::uni_to_bi;

namespace {
BiPoly grid(std::vector<std::vector<Rational>> rows) { return BiPoly::from_grid(rows); }
}  // namespace

TEST_CASE("canonical grid form", "[bipoly]") {
    CHECK(BiPoly().is_zero());
    CHECK(BiPoly(Rational(0)).is_zero());
    CHECK(grid({{Rational(0), Rational(0)}, {Rational(0)}}).is_zero());

    BiPoly p = grid({{Rational(1), Rational(0)}, {Rational(0), Rational(0)}});
    CHECK(p.rows() == 1);
    CHECK(p.cols() == 1);
    CHECK(p.degree_x() == 0);
    CHECK(BiPoly().degree_x() == -1);
}

TEST_CASE("arithmetic matches hand expansion", "[bipoly]") {
    UniPoly u = UniPoly::monomial(Rational(1), 1);
    BiPoly x_plus_y = uni_to_bi(u, AffineArg::x_plus_y());
    BiPoly x_minus_y = grid({{Rational(0), Rational(-1)}, {Rational(1)}});
    // (x+y)(x-y) = x^2 - y^2
    CHECK(x_plus_y * x_minus_y ==
          grid({{Rational(0), Rational(0), Rational(-1)},
                {Rational(0), Rational(0), Rational(0)},
                {Rational(1), Rational(0), Rational(0)}}));

    BiPoly sum = x_plus_y + x_minus_y;  // 2x
    CHECK(sum == grid({{Rational(0)}, {Rational(2)}}));
    CHECK((x_plus_y - x_plus_y).is_zero());
    CHECK(x_plus_y * BiPoly(Rational(1)) == x_plus_y);
}

TEST_CASE("affine substitution into two variables", "[bipoly]") {
    UniPoly u = UniPoly::monomial(Rational(1), 1);
    CHECK(uni_to_bi(u, AffineArg::z()) ==
          grid({{Rational(1), Rational(-1)}, {Rational(-1)}}));  // 1 - x - y

    UniPoly b1 = UniPoly::from_coeffs({Rational(-1, 2), Rational(1)});
    CHECK(uni_to_bi(b1, AffineArg::z()) ==
          grid({{Rational(1, 2), Rational(-1)}, {Rational(-1)}}));  // 1/2 - x - y

    UniPoly u2 = UniPoly::monomial(Rational(1), 2);
    CHECK(uni_to_bi(u2, AffineArg::x_plus_y()) ==
          grid({{Rational(0), Rational(0), Rational(1)},
                {Rational(0), Rational(2), Rational(0)},
                {Rational(1), Rational(0), Rational(0)}}));  // x^2 + 2xy + y^2
}

TEST_CASE("embedding is degree-preserving and homomorphic", "[bipoly]") {
    std::mt19937_64 rng(31);
    for (const AffineArg& arg : {AffineArg::x(), AffineArg::y()}) {
        for (int i = 0; i < 20; ++i) {
            UniPoly p = oracles::random_nonzero_unipoly(rng, 6);
            BiPoly embedded = uni_to_bi(p, arg);
            int deg = (arg.cx.is_zero() ? embedded.degree_y() : embedded.degree_x());
            CHECK(deg == p.degree());
        }
    }
    for (const AffineArg& arg :
         {AffineArg::x(), AffineArg::y(), AffineArg::z(), AffineArg::x_plus_y()}) {
        for (int i = 0; i < 10; ++i) {
            UniPoly p = oracles::random_unipoly(rng, 5);
            UniPoly q = oracles::random_unipoly(rng, 5);
            CHECK(uni_to_bi(p * q, arg) == uni_to_bi(p, arg) * uni_to_bi(q, arg));
            CHECK(uni_to_bi(p + q, arg) == uni_to_bi(p, arg) + uni_to_bi(q, arg));
        }
    }
    CHECK(uni_to_bi(UniPoly(Rational(7, 3)), AffineArg::z()) == BiPoly(Rational(7, 3)));
}

TEST_CASE("substitution agrees with evaluation", "[bipoly]") {
    std::mt19937_64 rng(41);
    for (const AffineArg& arg : {AffineArg::x(), AffineArg::y(), AffineArg::z(),
                                 AffineArg::x_plus_y(), AffineArg{Rational(1, 2), Rational(-2), Rational(3)}}) {
        for (int i = 0; i < 10; ++i) {
            UniPoly p = oracles::random_unipoly(rng, 6);
            Rational px = oracles::random_rational(rng);
            Rational py = oracles::random_rational(rng);
            CHECK(uni_to_bi(p, arg).eval(px, py) == p.eval(arg.c0 + arg.cx * px + arg.cy * py));
        }
    }
}

TEST_CASE("ring axioms on random bivariate polynomials", "[bipoly]") {
    std::mt19937_64 rng(67);
    auto random_bipoly = [&rng]() {
        BiPoly p = uni_to_bi(oracles::random_unipoly(rng, 4), AffineArg::x()) *
                   uni_to_bi(oracles::random_unipoly(rng, 4), AffineArg::y());
        return p + uni_to_bi(oracles::random_unipoly(rng, 4), AffineArg::x_plus_y());
    };
    for (int i = 0; i < 20; ++i) {
        BiPoly a = random_bipoly();
        BiPoly b = random_bipoly();
        BiPoly c = random_bipoly();
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        CHECK(a * BiPoly(Rational(1)) == a);
    }
}

TEST_CASE("single-variable difference operators", "[bipoly]") {
    CHECK(bepoly::bi_delta(BiPoly(Rational(5)), BiVar::x).is_zero());

    BiPoly xy = grid({{Rational(0), Rational(0)}, {Rational(0), Rational(1)}});
    CHECK(bepoly::bi_delta(xy, BiVar::x) == grid({{Rational(0), Rational(1)}}));  // y
    CHECK(bepoly::bi_delta(xy, BiVar::y) == grid({{Rational(0)}, {Rational(1)}}));  // x

    UniPoly e1 = UniPoly::from_coeffs({Rational(-1, 2), Rational(1)});
    CHECK(bepoly::bi_delta_star(uni_to_bi(e1, AffineArg::x()), BiVar::x) ==
          grid({{Rational(0)}, {Rational(2)}}));  // 2x
}

TEST_CASE("difference operators agree with shifted evaluation", "[bipoly]") {
    std::mt19937_64 rng(53);
    for (int i = 0; i < 15; ++i) {
        UniPoly p = oracles::random_unipoly(rng, 5);
        UniPoly q = oracles::random_unipoly(rng, 5);
        BiPoly f = uni_to_bi(p, AffineArg::x()) * uni_to_bi(q, AffineArg::y());
        Rational px = oracles::random_rational(rng);
        Rational py = oracles::random_rational(rng);
        CHECK(bepoly::bi_delta(f, BiVar::x).eval(px, py) ==
              f.eval(px + Rational(1), py) - f.eval(px, py));
        CHECK(bepoly::bi_delta_star(f, BiVar::y).eval(px, py) ==
              f.eval(px, py + Rational(1)) + f.eval(px, py));
    }
}
