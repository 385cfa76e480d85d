/*
 * Copyright (c) 2026 The bepoly authors
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bepoly/rational.hpp"
#include "bepoly/unipoly.hpp"

namespace bepoly {

/// Finite prefix a_0..a_L of a rational sequence; reads past the end throw.
class RationalSeq {
public:
    RationalSeq() = default;
    explicit RationalSeq(std::vector<Rational> entries) : entries_(std::move(entries)) {}

    std::size_t size() const { return entries_.size(); }

    const Rational& at(std::size_t i) const {
        if (i >= entries_.size())
            throw std::out_of_range("RationalSeq: index " + std::to_string(i) +
                                    " beyond last entry " + std::to_string(entries_.size()) + "-1");
        return entries_[i];
    }

    const std::vector<Rational>& entries() const { return entries_; }

private:
    std::vector<Rational> entries_;
};

/// Append-only tables of Bernoulli numbers and Euler polynomials, filled by
/// recurrence. An entry, once computed, never changes. Not synchronized; the
/// module-level free functions wrap a shared instance in a mutex.
class SequenceCache {
public:
    /// B_n from the convolution sum(k=0..n) C(n+1,k) B_k = 0 with B_0 = 1.
    const Rational& bernoulli_number(std::size_t n) {
        while (bernoulli_.size() <= n) {
            std::size_t m = bernoulli_.size();
            if (m == 0) {
                bernoulli_.emplace_back(1);
                continue;
            }
            Rational acc(0);
            for (std::size_t k = 0; k < m; ++k) acc += binomial(m + 1, k) * bernoulli_[k];
            bernoulli_.push_back(-acc / Rational(static_cast<long long>(m) + 1));
        }
        return bernoulli_[n];
    }

    /// E_n(x) from delta_star(E_n) = 2x^n and the addition theorem:
    /// E_n(x) = x^n - (1/2) sum(k=0..n-1) C(n,k) E_k(x).
    const UniPoly& euler_poly(std::size_t n) {
        while (euler_polys_.size() <= n) {
            std::size_t m = euler_polys_.size();
            UniPoly acc = UniPoly::monomial(Rational(1), m);
            for (std::size_t k = 0; k < m; ++k)
                acc -= binomial(m, k) * euler_polys_[k] / Rational(2);
            euler_polys_.push_back(std::move(acc));
        }
        return euler_polys_[n];
    }

private:
    std::vector<Rational> bernoulli_;
    std::vector<UniPoly> euler_polys_;
};

namespace detail {

inline SequenceCache& shared_cache() {
    static SequenceCache cache;
    return cache;
}

inline std::mutex& cache_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace detail

/// B_n as a number (the value of the degree-n Bernoulli polynomial at 0).
inline Rational bernoulli_number(std::size_t n) {
    std::lock_guard<std::mutex> lock(detail::cache_mutex());
    return detail::shared_cache().bernoulli_number(n);
}

/// B_n(x) = sum(k=0..n) C(n,k) B_k x^(n-k); monic of degree n.
inline UniPoly bernoulli_poly(std::size_t n) {
    std::vector<Rational> ascending(n + 1, Rational(0));
    {
        std::lock_guard<std::mutex> lock(detail::cache_mutex());
        auto& cache = detail::shared_cache();
        for (std::size_t k = 0; k <= n; ++k) ascending[n - k] = binomial(n, k) * cache.bernoulli_number(k);
    }
    return UniPoly::from_coeffs(std::move(ascending));
}

inline UniPoly euler_poly(std::size_t n) {
    std::lock_guard<std::mutex> lock(detail::cache_mutex());
    return detail::shared_cache().euler_poly(n);
}

/// E_n = 2^n E_n(1/2); integer-valued.
inline Rational euler_number(std::size_t n) {
    return pow2(static_cast<long long>(n)) * euler_poly(n).eval(Rational(1, 2));
}

/// Alternating binomial transform of a sequence prefix:
/// A_l(t) = sum(k=0..l) C(l,k) (-1)^k a_k t^(l-k). Needs entries a_0..a_l.
inline UniPoly dual_transform(const RationalSeq& seq, std::size_t l) {
    if (seq.size() < l + 1)
        throw std::out_of_range("dual_transform: order " + std::to_string(l) + " needs " +
                                std::to_string(l + 1) + " entries, sequence has " +
                                std::to_string(seq.size()));
    std::vector<Rational> ascending(l + 1, Rational(0));
    Rational sign(1);
    for (std::size_t k = 0; k <= l; ++k) {
        ascending[l - k] = binomial(l, k) * sign * seq.at(k);
        sign = -sign;
    }
    return UniPoly::from_coeffs(std::move(ascending), "t");
}

/// Deterministic pseudo-random sequence of small rationals (|num| <= 100,
/// 1 <= den <= 100). Same seed, same sequence, on every platform.
inline RationalSeq seeded_sequence(std::uint64_t seed, std::size_t count) {
    // xorshift* keeps the stream independent of any standard-library
    // distribution implementation.
    std::uint64_t state = seed ? seed : 0x9e3779b97f4a7c15ull;
    auto next = [&state]() {
        state ^= state >> 12;
        state ^= state << 25;
        state ^= state >> 27;
        return state * 0x2545f4914f6cdd1dull;
    };
    std::vector<Rational> entries;
    entries.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        long long num = static_cast<long long>(next() % 201) - 100;
        long long den = static_cast<long long>(next() % 100) + 1;
        entries.emplace_back(num, den);
    }
    return RationalSeq(std::move(entries));
}

}  // namespace bepoly
