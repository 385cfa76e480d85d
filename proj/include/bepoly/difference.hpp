/*
 * Copyright (c) 2026 The bepoly authors
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "bepoly/rational.hpp"
#include "bepoly/unipoly.hpp"

// Difference-operator calculus on univariate polynomials:
//   delta(P)      = P(u+1) - P(u)
//   delta_star(P) = P(u+1) + P(u)
// delta kills exactly the constants; delta_star is injective on polynomials,
// so its inverse is total and unique.

namespace bepoly {

inline UniPoly delta(const UniPoly& p) {
    return p.compose_affine(Rational(1), Rational(1)) - p;
}

inline UniPoly delta_star(const UniPoly& p) {
    return p.compose_affine(Rational(1), Rational(1)) + p;
}

/// The unique P with delta(P) = r and P(0) = 0. Eliminates the leading term
/// of the residue each round: delta(c*u^(d+1)) has leading term c*(d+1)*u^d.
inline UniPoly invert_delta(const UniPoly& r) {
    UniPoly p(Rational(0), r.var());
    UniPoly residue = r;
    while (!residue.is_zero()) {
        std::size_t d = static_cast<std::size_t>(residue.degree());
        UniPoly term = UniPoly::monomial(
            residue.leading() / Rational(static_cast<long long>(d) + 1), d + 1, r.var());
        p += term;
        residue -= delta(term);
    }
    return p;  // built from degree >= 1 monomials only, so P(0) = 0
}

/// The unique P with delta_star(P) = r, computed leading coefficient down
/// (the leading coefficient of P is half that of r).
inline UniPoly invert_delta_star(const UniPoly& r) {
    UniPoly p(Rational(0), r.var());
    UniPoly residue = r;
    while (!residue.is_zero()) {
        std::size_t d = static_cast<std::size_t>(residue.degree());
        UniPoly term = UniPoly::monomial(residue.leading() / Rational(2), d, r.var());
        p += term;
        residue -= delta_star(term);
    }
    return p;
}

}  // namespace bepoly
