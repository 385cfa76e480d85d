/*
 * Copyright (c) 2026 The bepoly authors
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bepoly/bipoly.hpp"
#include "bepoly/rational.hpp"
#include "bepoly/sequences.hpp"
#include "bepoly/unipoly.hpp"

// Catalog of symmetric Bernoulli/Euler identities. Every entry constructs
// both sides of one identity as canonical bivariate polynomials over the
// constraint x + y + z = 1 (z substituted as 1 - x - y) and certifies
// equality by exact cancellation. Univariate and scalar identities embed
// into BiPoly (t occupies the x slot) so one report type covers everything.

namespace bepoly {

enum class IdentityId {
    thm0_b1,    // two x-power/Bernoulli convolutions summing to a pure power of -x
    thm0_b2,    // x-power/Bernoulli convolution, symmetric under (m,y) <-> (n,z)
    thm0_e1,    // Euler-polynomial variant of thm0_b1 (same right-hand side)
    thm0_e2,    // Euler-polynomial variant of thm0_b2
    eq1,        // Bernoulli*Bernoulli double convolution in x,y,z
    eq1_prime,  // equivalent form of eq1 shifted to m,n >= 1
    eq2,        // Euler*Bernoulli convolution
    eq3,        // mixed Euler/Bernoulli convolution with binomial-ratio tail
    eq4,        // y-derivative of eq1_prime
    eq5,        // y-derivative of eq2
    eq6,        // y-derivative of eq3 at shifted index
    eq7_A,      // polynomial Woodcock symmetry A_{m-1,n}(t) = A_{n-1,m}(t)
    eq7_C,      // Euler companion C_{m,n}(t) = C_{n,m}(t)
    woodcock,   // numeric Woodcock symmetry A_{m-1,n} = A_{n-1,m}
    eq10,       // alternating convolution of (1-2^j)B_j/j values
    eq11,       // Euler-number convolution against a Bernoulli-number sum
    lemma2,     // dual-transform two-variable identity (reported by verify_lemma2)
};

/// The sixteen grid-verifiable identities, in report order.
inline constexpr std::array<IdentityId, 16> kCatalog = {
    IdentityId::thm0_b1, IdentityId::thm0_b2, IdentityId::thm0_e1, IdentityId::thm0_e2,
    IdentityId::eq1,     IdentityId::eq1_prime, IdentityId::eq2,   IdentityId::eq3,
    IdentityId::eq4,     IdentityId::eq5,     IdentityId::eq6,     IdentityId::eq7_A,
    IdentityId::eq7_C,   IdentityId::woodcock, IdentityId::eq10,   IdentityId::eq11,
};

inline std::string_view to_string(IdentityId id) {
    switch (id) {
        case IdentityId::thm0_b1: return "thm0_b1";
        case IdentityId::thm0_b2: return "thm0_b2";
        case IdentityId::thm0_e1: return "thm0_e1";
        case IdentityId::thm0_e2: return "thm0_e2";
        case IdentityId::eq1: return "eq1";
        case IdentityId::eq1_prime: return "eq1_prime";
        case IdentityId::eq2: return "eq2";
        case IdentityId::eq3: return "eq3";
        case IdentityId::eq4: return "eq4";
        case IdentityId::eq5: return "eq5";
        case IdentityId::eq6: return "eq6";
        case IdentityId::eq7_A: return "eq7_A";
        case IdentityId::eq7_C: return "eq7_C";
        case IdentityId::woodcock: return "woodcock";
        case IdentityId::eq10: return "eq10";
        case IdentityId::eq11: return "eq11";
        case IdentityId::lemma2: return "lemma2";
    }
    return "?";
}

inline std::optional<IdentityId> identity_from_string(std::string_view name) {
    for (IdentityId id : kCatalog)
        if (to_string(id) == name) return id;
    if (name == "lemma2") return IdentityId::lemma2;
    return std::nullopt;
}

/// Inclusive lower bounds on (m, n) for each identity.
struct ParamDomain {
    int min_m;
    int min_n;
};

inline ParamDomain domain_of(IdentityId id) {
    switch (id) {
        case IdentityId::thm0_b1:
        case IdentityId::thm0_b2:
        case IdentityId::thm0_e1:
        case IdentityId::thm0_e2:
        case IdentityId::eq1:
        case IdentityId::eq2:
        case IdentityId::eq3:
        case IdentityId::lemma2:
            return {0, 0};
        default:
            return {1, 1};
    }
}

/// Result of checking one identity at one parameter point. A false `holds`
/// never raises; the nonzero diff stays available for inspection.
struct IdentityReport {
    IdentityId id = IdentityId::eq1;
    int m = 0;
    int n = 0;
    BiPoly lhs;
    BiPoly rhs;
    BiPoly diff;
    bool holds = false;
};

struct SuiteReport {
    std::vector<IdentityReport> reports;
    bool all_hold = true;
    std::map<IdentityId, std::size_t> counts;
};

// -- Woodcock-type convolutions ---------------------------------------------

/// A_{m,n} = (1/n) sum(k=1..n) C(n,k) (-1)^k B_{m+k} B_{n-k}; needs n >= 1.
inline Rational woodcock_number(int m, int n) {
    if (m < 0) throw std::domain_error("woodcock_number requires m >= 0, got m = " + std::to_string(m));
    if (n < 1) throw std::domain_error("woodcock_number requires n >= 1, got n = " + std::to_string(n));
    auto um = static_cast<std::size_t>(m);
    auto un = static_cast<std::size_t>(n);
    Rational acc(0);
    Rational sign(-1);  // (-1)^k starting at k = 1
    for (std::size_t k = 1; k <= un; ++k) {
        acc += binomial(un, k) * sign * bernoulli_number(um + k) * bernoulli_number(un - k);
        sign = -sign;
    }
    return acc / Rational(n);
}

namespace detail {

inline UniPoly bern_t(std::size_t j) { return bernoulli_poly(j).with_var("t"); }
inline UniPoly bern_2t(std::size_t j) {
    return bernoulli_poly(j).compose_affine(Rational(2), Rational(0)).with_var("t");
}
inline UniPoly eul_t(std::size_t j) { return euler_poly(j).with_var("t"); }
inline UniPoly eul_2t(std::size_t j) {
    return euler_poly(j).compose_affine(Rational(2), Rational(0)).with_var("t");
}

inline Rational alternating(std::size_t k) { return k % 2 == 0 ? Rational(1) : Rational(-1); }

}  // namespace detail

/// A_{m,n}(t) = (1/n) sum(k=0..n) C(n,k) (-1)^k B_{m+k}(t) B_{n-k}(2t)
///            - B_m(t) B_n(t)/n; needs n >= 1.
inline UniPoly woodcock_poly_A(int m, int n) {
    if (m < 0) throw std::domain_error("woodcock_poly_A requires m >= 0, got m = " + std::to_string(m));
    if (n < 1) throw std::domain_error("woodcock_poly_A requires n >= 1, got n = " + std::to_string(n));
    auto um = static_cast<std::size_t>(m);
    auto un = static_cast<std::size_t>(n);
    UniPoly acc(Rational(0), "t");
    for (std::size_t k = 0; k <= un; ++k)
        acc += binomial(un, k) * detail::alternating(k) * (detail::bern_t(um + k) * detail::bern_2t(un - k));
    return acc / Rational(n) - detail::bern_t(um) * detail::bern_t(un) / Rational(n);
}

/// C_{m,n}(t) = sum(k=0..n) C(n,k) (-1)^k B_{m+k}(t) E_{n-k}(2t)
///            - (n/2) E_m(t) E_{n-1}(t); needs n >= 1.
inline UniPoly woodcock_poly_C(int m, int n) {
    if (m < 0) throw std::domain_error("woodcock_poly_C requires m >= 0, got m = " + std::to_string(m));
    if (n < 1) throw std::domain_error("woodcock_poly_C requires n >= 1, got n = " + std::to_string(n));
    auto um = static_cast<std::size_t>(m);
    auto un = static_cast<std::size_t>(n);
    UniPoly acc(Rational(0), "t");
    for (std::size_t k = 0; k <= un; ++k)
        acc += binomial(un, k) * detail::alternating(k) * (detail::bern_t(um + k) * detail::eul_2t(un - k));
    return acc - Rational(n, 2) * (detail::eul_t(um) * detail::eul_t(un - 1));
}

// -- Side construction -------------------------------------------------------

namespace detail {

inline BiPoly at_x(const UniPoly& p) { return uni_to_bi(p, AffineArg::x()); }
inline BiPoly at_y(const UniPoly& p) { return uni_to_bi(p, AffineArg::y()); }
inline BiPoly at_z(const UniPoly& p) { return uni_to_bi(p, AffineArg::z()); }
inline BiPoly at_xy(const UniPoly& p) { return uni_to_bi(p, AffineArg::x_plus_y()); }
inline BiPoly x_power(std::size_t e) {
    return uni_to_bi(UniPoly::monomial(Rational(1), e), AffineArg::x());
}

using Sides = std::pair<BiPoly, BiPoly>;

// (-1)^m sum C(m,k) x^(m-k) F_{n+k+1}(y)/(n+k+1)
//   + (-1)^n sum C(n,k) x^(n-k) F_{m+k+1}(z)/(m+k+1)
//   = (-x)^(m+n+1) / ((m+n+1) C(m+n,n)),  F in {B, E}
inline Sides sides_thm0_first(std::size_t m, std::size_t n, UniPoly (*F)(std::size_t)) {
    BiPoly lhs;
    for (std::size_t k = 0; k <= m; ++k)
        lhs += binomial(m, k) * x_power(m - k) * at_y(F(n + k + 1)) /
               Rational(static_cast<long long>(n + k + 1));
    lhs = alternating(m) * lhs;
    BiPoly zsum;
    for (std::size_t k = 0; k <= n; ++k)
        zsum += binomial(n, k) * x_power(n - k) * at_z(F(m + k + 1)) /
                Rational(static_cast<long long>(m + k + 1));
    lhs += alternating(n) * zsum;
    BiPoly rhs = x_power(m + n + 1) *
                 (alternating(m + n + 1) / (Rational(static_cast<long long>(m + n + 1)) * binomial(m + n, n)));
    return {lhs, rhs};
}

// (-1)^m sum C(m,k) x^(m-k) F_{n+k}(y) = (-1)^n sum C(n,k) x^(n-k) F_{m+k}(z)
inline Sides sides_thm0_second(std::size_t m, std::size_t n, UniPoly (*F)(std::size_t)) {
    BiPoly lhs;
    for (std::size_t k = 0; k <= m; ++k) lhs += binomial(m, k) * x_power(m - k) * at_y(F(n + k));
    lhs = alternating(m) * lhs;
    BiPoly rhs;
    for (std::size_t k = 0; k <= n; ++k) rhs += binomial(n, k) * x_power(n - k) * at_z(F(m + k));
    rhs = alternating(n) * rhs;
    return {lhs, rhs};
}

inline Sides sides_eq1(std::size_t m, std::size_t n) {
    BiPoly lhs;
    for (std::size_t k = 0; k <= m; ++k)
        lhs += binomial(m, k) * at_x(bernoulli_poly(m - k + 1)) * at_y(bernoulli_poly(n + k + 1)) /
               (Rational(static_cast<long long>(m - k + 1)) * Rational(static_cast<long long>(n + k + 1)));
    lhs = alternating(m) * lhs;
    BiPoly zsum;
    for (std::size_t k = 0; k <= n; ++k)
        zsum += binomial(n, k) * at_x(bernoulli_poly(n - k + 1)) * at_z(bernoulli_poly(m + k + 1)) /
                (Rational(static_cast<long long>(n - k + 1)) * Rational(static_cast<long long>(m + k + 1)));
    lhs += alternating(n) * zsum;

    Rational inv_mn1 = Rational(static_cast<long long>(m + n + 1)).reciprocal();
    Rational inv_mn2 = Rational(static_cast<long long>(m + n + 2)).reciprocal();
    BiPoly rhs = alternating(m + n + 1) * inv_mn1 / binomial(m + n, n) * at_x(bernoulli_poly(m + n + 2)) * inv_mn2;
    rhs -= at_z(bernoulli_poly(m + 1)) * at_y(bernoulli_poly(n + 1)) /
           (Rational(static_cast<long long>(m + 1)) * Rational(static_cast<long long>(n + 1)));
    rhs += alternating(m + 1) / Rational(static_cast<long long>(m + 1)) * at_y(bernoulli_poly(m + n + 2)) * inv_mn2;
    rhs += alternating(n + 1) / Rational(static_cast<long long>(n + 1)) * at_z(bernoulli_poly(m + n + 2)) * inv_mn2;
    return {lhs, rhs};
}

inline Sides sides_eq1_prime(std::size_t m, std::size_t n) {
    BiPoly lhs;
    for (std::size_t k = 0; k <= m; ++k)
        lhs += binomial(m, k) * at_x(bernoulli_poly(m - k)) * at_y(bernoulli_poly(n + k)) /
               Rational(static_cast<long long>(n + k));
    lhs = alternating(m) / Rational(static_cast<long long>(m)) * lhs;
    BiPoly zsum;
    for (std::size_t k = 0; k <= n; ++k)
        zsum += binomial(n, k) * at_x(bernoulli_poly(n - k)) * at_z(bernoulli_poly(m + k)) /
                Rational(static_cast<long long>(m + k));
    lhs += alternating(n) / Rational(static_cast<long long>(n)) * zsum;

    BiPoly rhs = alternating(m + n) * Rational(factorial(m - 1) * factorial(n - 1), factorial(m + n)) *
                 at_x(bernoulli_poly(m + n));
    rhs += at_z(bernoulli_poly(m)) * at_y(bernoulli_poly(n)) /
           (Rational(static_cast<long long>(m)) * Rational(static_cast<long long>(n)));
    return {lhs, rhs};
}

inline Sides sides_eq2(std::size_t m, std::size_t n) {
    BiPoly lhs;
    for (std::size_t k = 0; k <= m; ++k)
        lhs += binomial(m, k) * at_x(euler_poly(m - k)) * at_y(bernoulli_poly(n + k + 1)) /
               Rational(static_cast<long long>(n + k + 1));
    lhs = alternating(m) * lhs;
    BiPoly zsum;
    for (std::size_t k = 0; k <= n; ++k)
        zsum += binomial(n, k) * at_x(euler_poly(n - k)) * at_z(bernoulli_poly(m + k + 1)) /
                Rational(static_cast<long long>(m + k + 1));
    lhs += alternating(n) * zsum;

    BiPoly rhs = alternating(m + n + 1) / (Rational(static_cast<long long>(m + n + 1)) * binomial(m + n, n)) *
                 at_x(euler_poly(m + n + 1));
    rhs -= at_z(euler_poly(m)) * at_y(euler_poly(n)) / Rational(2);
    return {lhs, rhs};
}

inline Sides sides_eq3(std::size_t m, std::size_t n) {
    BiPoly lhs;
    for (std::size_t k = 0; k <= m; ++k)
        lhs += binomial(m, k) * at_x(euler_poly(m - k)) * at_y(euler_poly(n + k + 1)) /
               Rational(static_cast<long long>(n + k + 1));
    lhs = alternating(m) / Rational(2) * lhs;
    BiPoly zsum;
    for (std::size_t k = 0; k <= n; ++k)
        zsum += binomial(n, k) * at_x(bernoulli_poly(n - k + 1)) * at_z(euler_poly(m + k + 1)) /
                (Rational(static_cast<long long>(n - k + 1)) * Rational(static_cast<long long>(m + k + 1)));
    lhs -= alternating(n) * zsum;

    Rational inv_mn2 = Rational(static_cast<long long>(m + n + 2)).reciprocal();
    BiPoly rhs = alternating(m + n) / (Rational(static_cast<long long>(m + n + 1)) * binomial(m + n, n)) *
                 at_x(bernoulli_poly(m + n + 2)) * inv_mn2;
    rhs += alternating(n) / Rational(static_cast<long long>(n + 1)) * at_z(euler_poly(m + n + 2)) * inv_mn2;
    BiPoly tail;
    for (std::size_t k = 0; k <= m; ++k)
        tail += binomial(m, k) / binomial(n + k + 1, k) * at_z(euler_poly(m - k)) *
                at_y(bernoulli_poly(n + k + 2)) / Rational(static_cast<long long>(n + k + 2));
    rhs -= tail / Rational(static_cast<long long>(n + 1));
    return {lhs, rhs};
}

inline Sides sides_eq4(std::size_t m, std::size_t n) {
    BiPoly lhs;
    for (std::size_t k = 0; k <= m; ++k)
        lhs += binomial(m, k) * at_x(bernoulli_poly(m - k)) * at_y(bernoulli_poly(n - 1 + k));
    lhs = alternating(m) / Rational(static_cast<long long>(m)) * lhs;
    lhs -= at_z(bernoulli_poly(m)) * at_y(bernoulli_poly(n - 1)) / Rational(static_cast<long long>(m));

    BiPoly rhs;
    for (std::size_t k = 0; k <= n; ++k)
        rhs += binomial(n, k) * at_x(bernoulli_poly(n - k)) * at_z(bernoulli_poly(m - 1 + k));
    rhs = alternating(n) / Rational(static_cast<long long>(n)) * rhs;
    rhs -= at_y(bernoulli_poly(n)) * at_z(bernoulli_poly(m - 1)) / Rational(static_cast<long long>(n));
    return {lhs, rhs};
}

// The correction terms pair E_{m-1}(z) E_n(y) with E_{n-1}(y) E_m(z): the
// (m,y,z) <-> (n,z,y) exchange applies to the arguments as well, as forced
// by differentiating the Euler*Bernoulli convolution identity in y.
inline Sides sides_eq5(std::size_t m, std::size_t n) {
    BiPoly lhs;
    for (std::size_t k = 0; k <= m; ++k)
        lhs += binomial(m, k) * at_x(euler_poly(m - k)) * at_y(bernoulli_poly(n + k));
    lhs = alternating(m) * lhs;
    lhs -= Rational(static_cast<long long>(m), 2) * at_z(euler_poly(m - 1)) * at_y(euler_poly(n));

    BiPoly rhs;
    for (std::size_t k = 0; k <= n; ++k)
        rhs += binomial(n, k) * at_x(euler_poly(n - k)) * at_z(bernoulli_poly(m + k));
    rhs = alternating(n) * rhs;
    rhs -= Rational(static_cast<long long>(n), 2) * at_y(euler_poly(n - 1)) * at_z(euler_poly(m));
    return {lhs, rhs};
}

inline Sides sides_eq6(std::size_t m, std::size_t n) {
    BiPoly lhs;
    for (std::size_t k = 0; k <= m; ++k)
        lhs += binomial(m, k) * at_x(euler_poly(m - k)) * at_y(euler_poly(n - 1 + k));
    lhs = alternating(m) / Rational(2) * lhs;

    BiPoly rhs;
    for (std::size_t k = 0; k <= n; ++k)
        rhs += binomial(n, k) * at_x(bernoulli_poly(n - k)) * at_z(euler_poly(m + k));
    rhs = alternating(n) / Rational(static_cast<long long>(n)) * rhs;
    rhs -= at_y(bernoulli_poly(n)) * at_z(euler_poly(m)) / Rational(static_cast<long long>(n));
    return {lhs, rhs};
}

// (1/m) sum(k=0..m) C(m,k) (-1)^k (1-2^(n+k)) B_{n+k}/(n+k) (1-2^(m-k)) B_{m-k}
//   = (1/n) sum(k=1..n) C(n,k) (-1)^k (1-2^(m+k)) B_{m+k}/(m+k) B_{n-k}
inline Sides sides_eq10(std::size_t m, std::size_t n) {
    Rational lhs(0);
    for (std::size_t k = 0; k <= m; ++k)
        lhs += binomial(m, k) * alternating(k) * (Rational(1) - pow2(static_cast<long long>(n + k))) *
               bernoulli_number(n + k) / Rational(static_cast<long long>(n + k)) *
               (Rational(1) - pow2(static_cast<long long>(m - k))) * bernoulli_number(m - k);
    lhs = lhs / Rational(static_cast<long long>(m));
    Rational rhs(0);
    for (std::size_t k = 1; k <= n; ++k)
        rhs += binomial(n, k) * alternating(k) * (Rational(1) - pow2(static_cast<long long>(m + k))) *
               bernoulli_number(m + k) / Rational(static_cast<long long>(m + k)) * bernoulli_number(n - k);
    rhs = rhs / Rational(static_cast<long long>(n));
    return {BiPoly(lhs), BiPoly(rhs)};
}

// sum(k=0..m) C(m,k) E_{m-k} E_{n-1+k}
//   = (2^(m+1)/n) sum(k=1..n) C(n,k) (2^n - 2^(k+1)) B_{n-k}
//                              (1-2^(m+k+1)) B_{m+k+1}/(m+k+1)
inline Sides sides_eq11(std::size_t m, std::size_t n) {
    Rational lhs(0);
    for (std::size_t k = 0; k <= m; ++k)
        lhs += binomial(m, k) * euler_number(m - k) * euler_number(n - 1 + k);
    Rational rhs(0);
    for (std::size_t k = 1; k <= n; ++k)
        rhs += binomial(n, k) * (pow2(static_cast<long long>(n)) - pow2(static_cast<long long>(k + 1))) *
               bernoulli_number(n - k) * (Rational(1) - pow2(static_cast<long long>(m + k + 1))) *
               bernoulli_number(m + k + 1) / Rational(static_cast<long long>(m + k + 1));
    rhs = pow2(static_cast<long long>(m + 1)) / Rational(static_cast<long long>(n)) * rhs;
    return {BiPoly(lhs), BiPoly(rhs)};
}

}  // namespace detail

/// Both sides of the identity, term by term as displayed, with z := 1 - x - y
/// substituted. Scalar identities return constant BiPoly; t-identities place
/// t in the x slot. Throws std::domain_error outside the parameter domain.
inline std::pair<BiPoly, BiPoly> identity_sides(IdentityId id, int m, int n) {
    if (id == IdentityId::lemma2)
        throw std::domain_error("identity_sides: lemma2 needs a sequence; use verify_lemma2");
    ParamDomain dom = domain_of(id);
    if (m < dom.min_m)
        throw std::domain_error(std::string(to_string(id)) + " requires m >= " +
                                std::to_string(dom.min_m) + ", got m = " + std::to_string(m));
    if (n < dom.min_n)
        throw std::domain_error(std::string(to_string(id)) + " requires n >= " +
                                std::to_string(dom.min_n) + ", got n = " + std::to_string(n));
    auto um = static_cast<std::size_t>(m);
    auto un = static_cast<std::size_t>(n);
    using detail::at_x;
    switch (id) {
        case IdentityId::thm0_b1: return detail::sides_thm0_first(um, un, bernoulli_poly);
        case IdentityId::thm0_b2: return detail::sides_thm0_second(um, un, bernoulli_poly);
        case IdentityId::thm0_e1: return detail::sides_thm0_first(um, un, euler_poly);
        case IdentityId::thm0_e2: return detail::sides_thm0_second(um, un, euler_poly);
        case IdentityId::eq1: return detail::sides_eq1(um, un);
        case IdentityId::eq1_prime: return detail::sides_eq1_prime(um, un);
        case IdentityId::eq2: return detail::sides_eq2(um, un);
        case IdentityId::eq3: return detail::sides_eq3(um, un);
        case IdentityId::eq4: return detail::sides_eq4(um, un);
        case IdentityId::eq5: return detail::sides_eq5(um, un);
        case IdentityId::eq6: return detail::sides_eq6(um, un);
        case IdentityId::eq7_A: return {at_x(woodcock_poly_A(m - 1, n)), at_x(woodcock_poly_A(n - 1, m))};
        case IdentityId::eq7_C: return {at_x(woodcock_poly_C(m, n)), at_x(woodcock_poly_C(n, m))};
        case IdentityId::woodcock:
            return {BiPoly(woodcock_number(m - 1, n)), BiPoly(woodcock_number(n - 1, m))};
        case IdentityId::eq10: return detail::sides_eq10(um, un);
        case IdentityId::eq11: return detail::sides_eq11(um, un);
        case IdentityId::lemma2: break;  // unreachable
    }
    throw std::domain_error("identity_sides: unknown identity");
}

/// Canonicalizes both sides and reports whether they cancel exactly.
inline IdentityReport verify_identity(IdentityId id, int m, int n) {
    auto [lhs, rhs] = identity_sides(id, m, n);
    IdentityReport report;
    report.id = id;
    report.m = m;
    report.n = n;
    report.diff = lhs - rhs;
    report.holds = report.diff.is_zero();
    report.lhs = std::move(lhs);
    report.rhs = std::move(rhs);
    return report;
}

/// Dual-transform identity over an arbitrary rational sequence prefix:
///   sum(k=0..n) C(n,k) x^(m+k+1)/(m+k+1) A_{n-k}(y)
///     + (-1)^m A_{m+n+1}(y) / ((m+n+1) C(m+n,n))
///   = sum(k=0..m) C(m,k)/C(n+k,k) (-1)^k x^(m-k) A_{n+k+1}(x+y)/(n+k+1)
/// where A_l is the alternating binomial transform of the sequence.
/// Needs entries a_0..a_{m+n+1}.
inline IdentityReport verify_lemma2(const RationalSeq& seq, int m, int n) {
    if (m < 0) throw std::domain_error("verify_lemma2 requires m >= 0, got m = " + std::to_string(m));
    if (n < 0) throw std::domain_error("verify_lemma2 requires n >= 0, got n = " + std::to_string(n));
    auto um = static_cast<std::size_t>(m);
    auto un = static_cast<std::size_t>(n);
    if (seq.size() < um + un + 2)
        throw std::domain_error("verify_lemma2: needs " + std::to_string(um + un + 2) +
                                " sequence entries, got " + std::to_string(seq.size()));
    using detail::at_xy;
    using detail::at_y;
    using detail::x_power;

    BiPoly lhs;
    for (std::size_t k = 0; k <= un; ++k)
        lhs += binomial(un, k) * x_power(um + k + 1) / Rational(static_cast<long long>(um + k + 1)) *
               at_y(dual_transform(seq, un - k));
    lhs += detail::alternating(um) * at_y(dual_transform(seq, um + un + 1)) /
           (Rational(static_cast<long long>(um + un + 1)) * binomial(um + un, un));

    BiPoly rhs;
    for (std::size_t k = 0; k <= um; ++k)
        rhs += binomial(um, k) / binomial(un + k, k) * detail::alternating(k) * x_power(um - k) *
               at_xy(dual_transform(seq, un + k + 1)) / Rational(static_cast<long long>(un + k + 1));

    IdentityReport report;
    report.id = IdentityId::lemma2;
    report.m = m;
    report.n = n;
    report.diff = lhs - rhs;
    report.holds = report.diff.is_zero();
    report.lhs = std::move(lhs);
    report.rhs = std::move(rhs);
    return report;
}

/// Runs verify_identity over every (m, n) in each id's domain intersected
/// with [0..m_max] x [0..n_max]. Reports are ordered by (id, m, n); content
/// is deterministic.
inline SuiteReport verify_range(const std::set<IdentityId>& ids, int m_max, int n_max) {
    if (ids.empty()) throw std::invalid_argument("verify_range: empty identity set");
    if (ids.count(IdentityId::lemma2))
        throw std::invalid_argument("verify_range: lemma2 needs a sequence; use verify_lemma2");
    if (m_max < 1 || n_max < 1)
        throw std::domain_error("verify_range requires m_max, n_max >= 1, got " +
                                std::to_string(m_max) + ", " + std::to_string(n_max));
    SuiteReport suite;
    for (IdentityId id : kCatalog) {
        if (!ids.count(id)) continue;
        ParamDomain dom = domain_of(id);
        for (int m = dom.min_m; m <= m_max; ++m)
            for (int n = dom.min_n; n <= n_max; ++n) {
                suite.reports.push_back(verify_identity(id, m, n));
                suite.all_hold = suite.all_hold && suite.reports.back().holds;
                ++suite.counts[id];
            }
    }
    return suite;
}

}  // namespace bepoly
