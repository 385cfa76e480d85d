/*
 * Copyright (c) 2026 The bepoly authors
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace bepoly {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational in canonical form: gcd(|num|, den) == 1,
/// den >= 1, zero stored as 0/1. All arithmetic is exact.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    Rational reciprocal() const {
        if (is_zero()) throw std::domain_error("Rational: reciprocal of zero");
        return Rational(den_, num_);
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    /// "p/q" with q > 1, plain "p" for integers ("0" for zero).
    std::string to_string() const {
        std::string s = num_.str();
        if (den_ != 1) {
            s += '/';
            s += den_.str();
        }
        return s;
    }

    /// Parses "p", "-p" or "p/q"; result is normalized. Throws on malformed input.
    static Rational from_string(std::string_view text) {
        auto slash = text.find('/');
        if (slash == std::string_view::npos) return Rational(parse_int(text), 1);
        return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
    }

private:
    static BigInt parse_int(std::string_view text) {
        std::size_t i = 0;
        if (i < text.size() && text[i] == '-') ++i;
        if (i == text.size()) throw std::invalid_argument("Rational: empty integer literal");
        for (std::size_t j = i; j < text.size(); ++j) {
            if (text[j] < '0' || text[j] > '9')
                throw std::invalid_argument("Rational: bad integer literal '" + std::string(text) + "'");
        }
        return BigInt(std::string(text));
    }

    void normalize() {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        BigInt g = gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_;
};

/// C(n, k) as an exact integer-valued Rational; 0 when k > n.
inline Rational binomial(unsigned long long n, unsigned long long k) {
    if (k > n) return Rational(0);
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (unsigned long long i = 1; i <= k; ++i) {
        r *= BigInt(n - k + i);
        r /= BigInt(i);  // exact: product of i consecutive integers is divisible by i!
    }
    return Rational(std::move(r));
}

inline BigInt factorial(unsigned long long n) {
    BigInt r = 1;
    for (unsigned long long i = 2; i <= n; ++i) r *= BigInt(i);
    return r;
}

/// 2^e for any integer e (negative exponents give fractions).
inline Rational pow2(long long e) {
    BigInt p = BigInt(1) << static_cast<unsigned>(e < 0 ? -e : e);
    return e < 0 ? Rational(1, std::move(p)) : Rational(std::move(p));
}

inline Rational pow(const Rational& base, unsigned e) {
    Rational r(1);
    for (unsigned i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace bepoly
