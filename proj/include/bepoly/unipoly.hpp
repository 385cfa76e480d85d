/*
 * Copyright (c) 2026 The bepoly authors
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bepoly/rational.hpp"

// Guard rail: operations refuse to build polynomials beyond this degree so
// memory stays predictable. Override at compile time if a larger workspace
// is needed.
#ifndef BEPOLY_MAX_DEGREE
#define BEPOLY_MAX_DEGREE 128
#endif

namespace bepoly {

inline constexpr std::size_t kMaxDegree = BEPOLY_MAX_DEGREE;

/// Dense univariate polynomial over Rational, ascending coefficients with no
/// trailing zeros. The trimmed coefficient vector is the canonical form:
/// equality is coefficient-sequence equality. The variable name is a label
/// only; binary operations require matching labels on nonconstant operands.
class UniPoly {
public:
    UniPoly() = default;  // zero polynomial

    explicit UniPoly(Rational constant, std::string var = "x") : var_(std::move(var)) {
        if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
    }

    static UniPoly monomial(Rational coeff, std::size_t degree, std::string var = "x") {
        if (degree > kMaxDegree)
            throw std::length_error("UniPoly: monomial degree exceeds bound " +
                                    std::to_string(kMaxDegree));
        UniPoly p;
        p.var_ = std::move(var);
        if (!coeff.is_zero()) {
            p.coeffs_.assign(degree + 1, Rational(0));
            p.coeffs_[degree] = std::move(coeff);
        }
        return p;
    }

    static UniPoly from_coeffs(std::vector<Rational> ascending, std::string var = "x") {
        UniPoly p;
        p.coeffs_ = std::move(ascending);
        p.var_ = std::move(var);
        p.trim();
        return p;
    }

    const std::string& var() const { return var_; }

    UniPoly with_var(std::string var) const {
        UniPoly p = *this;
        p.var_ = std::move(var);
        return p;
    }

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    Rational coeff(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : Rational(0);
    }

    const Rational& leading() const {
        if (is_zero()) throw std::domain_error("UniPoly: zero polynomial has no leading coefficient");
        return coeffs_.back();
    }

    /// Exact Horner evaluation.
    Rational eval(const Rational& point) const {
        Rational acc(0);
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * point + coeffs_[i];
        return acc;
    }

    UniPoly derivative() const {
        UniPoly d;
        d.var_ = var_;
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            d.coeffs_.push_back(coeffs_[i] * Rational(static_cast<long long>(i)));
        d.trim();
        return d;
    }

    /// P(scale*u + shift), expanded to canonical form.
    UniPoly compose_affine(const Rational& scale, const Rational& shift) const {
        UniPoly linear = from_coeffs({shift, scale}, var_);
        UniPoly acc(Rational(0), var_);
        for (std::size_t i = coeffs_.size(); i-- > 0;)
            acc = acc * linear + UniPoly(coeffs_[i], var_);
        return acc;
    }

    UniPoly operator-() const {
        UniPoly p = *this;
        for (auto& c : p.coeffs_) c = -c;
        return p;
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        UniPoly r;
        r.var_ = result_var(a, b);
        r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = a.coeff(i) + b.coeff(i);
        r.trim();
        return r;
    }

    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        UniPoly r;
        r.var_ = result_var(a, b);
        if (a.is_zero() || b.is_zero()) return r;
        std::size_t deg = a.coeffs_.size() + b.coeffs_.size() - 2;
        if (deg > kMaxDegree)
            throw std::length_error("UniPoly: product degree " + std::to_string(deg) +
                                    " exceeds bound " + std::to_string(kMaxDegree));
        r.coeffs_.assign(deg + 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        r.trim();
        return r;
    }

    friend UniPoly operator*(const UniPoly& p, const Rational& s) {
        UniPoly r = p;
        for (auto& c : r.coeffs_) c *= s;
        r.trim();
        return r;
    }
    friend UniPoly operator*(const Rational& s, const UniPoly& p) { return p * s; }
    friend UniPoly operator/(const UniPoly& p, const Rational& s) { return p * s.reciprocal(); }

    UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
    UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

    /// Canonical equality: coefficient sequences only, labels ignored.
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

private:
    static const std::string& result_var(const UniPoly& a, const UniPoly& b) {
        if (!a.is_constant() && !b.is_constant() && a.var_ != b.var_)
            throw std::invalid_argument("UniPoly: variable mismatch '" + a.var_ + "' vs '" +
                                        b.var_ + "'");
        if (!a.is_constant()) return a.var_;
        return b.is_constant() ? a.var_ : b.var_;
    }

    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
    std::string var_ = "x";
};

}  // namespace bepoly
