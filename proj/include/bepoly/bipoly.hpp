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
#include "bepoly/unipoly.hpp"

namespace bepoly {

/// Degree-<=1 substitution argument c0 + cx*x + cy*y. Covers every change of
/// variable used by the identity catalog: x, y, z = 1-x-y, x+y, scalings.
struct AffineArg {
    Rational c0;
    Rational cx;
    Rational cy;

    static AffineArg x() { return {Rational(0), Rational(1), Rational(0)}; }
    static AffineArg y() { return {Rational(0), Rational(0), Rational(1)}; }
    static AffineArg z() { return {Rational(1), Rational(-1), Rational(-1)}; }  // 1 - x - y
    static AffineArg x_plus_y() { return {Rational(0), Rational(1), Rational(1)}; }
    static AffineArg constant(Rational c) { return {std::move(c), Rational(0), Rational(0)}; }
};

enum class BiVar { x, y };

/// Dense bivariate polynomial in (x, y) over Rational. Coefficients live in a
/// row-major grid where entry (i, j) multiplies x^i * y^j; the grid is trimmed
/// of all-zero trailing rows and columns, so equality is structural. The zero
/// polynomial has an empty grid.
class BiPoly {
public:
    BiPoly() = default;  // zero

    explicit BiPoly(Rational constant) {
        if (!constant.is_zero()) {
            rows_ = cols_ = 1;
            coeffs_.push_back(std::move(constant));
        }
    }

    static BiPoly from_grid(const std::vector<std::vector<Rational>>& grid) {
        BiPoly p;
        p.rows_ = grid.size();
        for (const auto& row : grid) p.cols_ = std::max(p.cols_, row.size());
        p.coeffs_.assign(p.rows_ * p.cols_, Rational(0));
        for (std::size_t i = 0; i < grid.size(); ++i)
            for (std::size_t j = 0; j < grid[i].size(); ++j) p.coeffs_[i * p.cols_ + j] = grid[i][j];
        p.trim();
        return p;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    int degree_x() const { return static_cast<int>(rows_) - 1; }  // -1 for zero
    int degree_y() const { return static_cast<int>(cols_) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    Rational coeff(std::size_t i, std::size_t j) const {
        return (i < rows_ && j < cols_) ? coeffs_[i * cols_ + j] : Rational(0);
    }

    /// Exact evaluation at a rational point.
    Rational eval(const Rational& px, const Rational& py) const {
        Rational acc(0);
        for (std::size_t i = rows_; i-- > 0;) {
            Rational row(0);
            for (std::size_t j = cols_; j-- > 0;) row = row * py + coeffs_[i * cols_ + j];
            acc = acc * px + row;
        }
        return acc;
    }

    BiPoly operator-() const {
        BiPoly p = *this;
        for (auto& c : p.coeffs_) c = -c;
        return p;
    }

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
        BiPoly r;
        r.rows_ = std::max(a.rows_, b.rows_);
        r.cols_ = std::max(a.cols_, b.cols_);
        r.coeffs_.assign(r.rows_ * r.cols_, Rational(0));
        for (std::size_t i = 0; i < r.rows_; ++i)
            for (std::size_t j = 0; j < r.cols_; ++j) r.coeffs_[i * r.cols_ + j] = a.coeff(i, j) + b.coeff(i, j);
        r.trim();
        return r;
    }

    friend BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }

    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly r;
        if (a.is_zero() || b.is_zero()) return r;
        std::size_t dx = a.rows_ + b.rows_ - 2;
        std::size_t dy = a.cols_ + b.cols_ - 2;
        if (dx > kMaxDegree || dy > kMaxDegree)
            throw std::length_error("BiPoly: product degree exceeds bound " +
                                    std::to_string(kMaxDegree));
        r.rows_ = dx + 1;
        r.cols_ = dy + 1;
        r.coeffs_.assign(r.rows_ * r.cols_, Rational(0));
        for (std::size_t i1 = 0; i1 < a.rows_; ++i1)
            for (std::size_t j1 = 0; j1 < a.cols_; ++j1) {
                const Rational& ca = a.coeffs_[i1 * a.cols_ + j1];
                if (ca.is_zero()) continue;
                for (std::size_t i2 = 0; i2 < b.rows_; ++i2)
                    for (std::size_t j2 = 0; j2 < b.cols_; ++j2)
                        r.coeffs_[(i1 + i2) * r.cols_ + (j1 + j2)] += ca * b.coeffs_[i2 * b.cols_ + j2];
            }
        r.trim();
        return r;
    }

    friend BiPoly operator*(const BiPoly& p, const Rational& s) {
        BiPoly r = p;
        for (auto& c : r.coeffs_) c *= s;
        r.trim();
        return r;
    }
    friend BiPoly operator*(const Rational& s, const BiPoly& p) { return p * s; }
    friend BiPoly operator/(const BiPoly& p, const Rational& s) { return p * s.reciprocal(); }

    BiPoly& operator+=(const BiPoly& o) { return *this = *this + o; }
    BiPoly& operator-=(const BiPoly& o) { return *this = *this - o; }
    BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }

    friend bool operator==(const BiPoly& a, const BiPoly& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

private:
    void trim() {
        std::size_t max_i = 0, max_j = 0;
        bool any = false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!coeffs_[i * cols_ + j].is_zero()) {
                    any = true;
                    max_i = std::max(max_i, i);
                    max_j = std::max(max_j, j);
                }
        if (!any) {
            rows_ = cols_ = 0;
            coeffs_.clear();
            return;
        }
        if (max_i + 1 == rows_ && max_j + 1 == cols_) return;
        std::vector<Rational> packed;
        packed.reserve((max_i + 1) * (max_j + 1));
        for (std::size_t i = 0; i <= max_i; ++i)
            for (std::size_t j = 0; j <= max_j; ++j) packed.push_back(std::move(coeffs_[i * cols_ + j]));
        coeffs_ = std::move(packed);
        rows_ = max_i + 1;
        cols_ = max_j + 1;
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> coeffs_;  // row-major, rows_ * cols_
};

/// P(c0 + cx*x + cy*y), expanded canonically. Degree-preserving ring
/// homomorphism of the coefficient sequence into the (x, y) grid.
inline BiPoly uni_to_bi(const UniPoly& p, const AffineArg& arg) {
    BiPoly linear = BiPoly::from_grid({{arg.c0, arg.cy}, {arg.cx, Rational(0)}});
    BiPoly acc;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = acc * linear + BiPoly(p.coeffs()[i]);
    return acc;
}

namespace detail {

/// Substitutes v+1 for the chosen variable: the image of x^d is sum_i C(d,i) x^i.
inline BiPoly shift_one(const BiPoly& p, BiVar v) {
    if (p.is_zero()) return p;
    BiPoly r;
    std::vector<std::vector<Rational>> grid(p.rows(), std::vector<Rational>(p.cols(), Rational(0)));
    for (std::size_t i = 0; i < p.rows(); ++i)
        for (std::size_t j = 0; j < p.cols(); ++j) {
            Rational c = p.coeff(i, j);
            if (c.is_zero()) continue;
            if (v == BiVar::x) {
                for (std::size_t i2 = 0; i2 <= i; ++i2) grid[i2][j] += binomial(i, i2) * c;
            } else {
                for (std::size_t j2 = 0; j2 <= j; ++j2) grid[i][j2] += binomial(j, j2) * c;
            }
        }
    return BiPoly::from_grid(grid);
}

}  // namespace detail

/// Difference in one variable: P(..v+1..) - P(..v..).
inline BiPoly bi_delta(const BiPoly& p, BiVar v) { return detail::shift_one(p, v) - p; }

/// Sum in one variable: P(..v+1..) + P(..v..).
inline BiPoly bi_delta_star(const BiPoly& p, BiVar v) { return detail::shift_one(p, v) + p; }

}  // namespace bepoly
