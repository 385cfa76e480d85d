/*
 * Copyright (c) 2026 The bepoly authors
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "bepoly/rational.hpp"
#include "bepoly/sequences.hpp"
#include "bepoly/unipoly.hpp"

// Brute-force reference implementations, deliberately written along different
// routes than the library (additive Pascal triangle, the explicit double sum
// for Bernoulli numbers, the even-index Euler-number recurrence). Test-only.

namespace oracles {

using bepoly::BigInt;
using bepoly::Rational;
using bepoly::UniPoly;

/// C(n,k) by the Pascal recurrence; additions only.
inline BigInt pascal_binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::vector<BigInt> row(n + 1, 0);
    row[0] = 1;
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i; j >= 1; --j) row[j] += row[j - 1];
    // after the loop row[j] = C(n, j)
    return row[k];
}

/// B_n = sum(k=0..n) 1/(k+1) sum(j=0..k) (-1)^j C(k,j) j^n, with 0^0 = 1.
inline Rational bernoulli_number(std::size_t n) {
    Rational total(0);
    for (std::size_t k = 0; k <= n; ++k) {
        Rational inner(0);
        for (std::size_t j = 0; j <= k; ++j) {
            BigInt jn = 1;
            for (std::size_t e = 0; e < n; ++e) jn *= BigInt(j);
            Rational term = Rational(pascal_binomial(k, j)) * Rational(jn);
            inner += (j % 2 == 0) ? term : -term;
        }
        total += inner / Rational(static_cast<long long>(k) + 1);
    }
    return total;
}

inline UniPoly bernoulli_poly(std::size_t n) {
    UniPoly acc;
    for (std::size_t k = 0; k <= n; ++k)
        acc += Rational(pascal_binomial(n, k)) * bernoulli_number(k) *
               UniPoly::monomial(Rational(1), n - k);
    return acc;
}

/// Euler numbers: odd indices vanish; even ones from
/// sum over even k of C(n,k) E_k = 0.
inline Rational euler_number(std::size_t n) {
    if (n % 2 == 1) return Rational(0);
    std::vector<Rational> even;  // even[i] = E_{2i}
    even.emplace_back(1);
    for (std::size_t half = 1; 2 * half <= n; ++half) {
        Rational acc(0);
        for (std::size_t i = 0; i < half; ++i)
            acc += Rational(pascal_binomial(2 * half, 2 * i)) * even[i];
        even.push_back(-acc);
    }
    return even[n / 2];
}

/// E_n(x) = sum(k=0..n) C(n,k) (E_k / 2^k) (x - 1/2)^(n-k).
inline UniPoly euler_poly(std::size_t n) {
    UniPoly shifted = UniPoly::from_coeffs({Rational(-1, 2), Rational(1)});
    UniPoly acc;
    for (std::size_t k = 0; k <= n; ++k) {
        UniPoly power(Rational(1));
        for (std::size_t e = 0; e < n - k; ++e) power *= shifted;
        acc += Rational(pascal_binomial(n, k)) * euler_number(k) / bepoly::pow2(static_cast<long long>(k)) * power;
    }
    return acc;
}

// -- random generators --------------------------------------------------------

inline Rational random_rational(std::mt19937_64& rng, long long bound = 50) {
    long long num = static_cast<long long>(rng() % static_cast<unsigned long long>(2 * bound + 1)) - bound;
    long long den = static_cast<long long>(rng() % static_cast<unsigned long long>(bound)) + 1;
    return Rational(num, den);
}

inline UniPoly random_unipoly(std::mt19937_64& rng, std::size_t max_degree,
                              const std::string& var = "x") {
    std::size_t deg = rng() % (max_degree + 1);
    std::vector<Rational> coeffs;
    for (std::size_t i = 0; i <= deg; ++i) coeffs.push_back(random_rational(rng));
    return UniPoly::from_coeffs(std::move(coeffs), var);
}

inline UniPoly random_nonzero_unipoly(std::mt19937_64& rng, std::size_t max_degree,
                                      const std::string& var = "x") {
    for (;;) {
        UniPoly p = random_unipoly(rng, max_degree, var);
        if (!p.is_zero()) return p;
    }
}

}  // namespace oracles
