/*
 * Copyright (c) 2026 The bepoly authors
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "bepoly/bipoly.hpp"
#include "bepoly/identities.hpp"
#include "bepoly/rational.hpp"
#include "bepoly/unipoly.hpp"

// Stable machine-readable encodings. Rationals are strings ("p/q", reduced,
// q > 1 omitted when 1) so exact values survive a round trip; key order is
// fixed, so emit -> parse -> emit is byte-identical.
//
//   rational  "p/q"
//   unipoly   {"var": "x", "coeffs": ["...", ...]}          ascending degree
//   bipoly    {"vars": ["x","y"], "coeffs": [["..."], ...]} row i = x^i
//   report    {"id","m","n","holds","lhs","rhs","diff"}
//   suite     {"all_hold","reports":[...]}

namespace bepoly {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& r) { return r.to_string(); }

inline Json to_json(const UniPoly& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(c.to_string());
    return Json{{"var", p.var()}, {"coeffs", std::move(coeffs)}};
}

inline Json to_json(const BiPoly& p) {
    Json grid = Json::array();
    for (std::size_t i = 0; i < p.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < p.cols(); ++j) row.push_back(p.coeff(i, j).to_string());
        grid.push_back(std::move(row));
    }
    return Json{{"vars", Json::array({"x", "y"})}, {"coeffs", std::move(grid)}};
}

inline Json to_json(const IdentityReport& r) {
    return Json{{"id", std::string(to_string(r.id))},
                {"m", r.m},
                {"n", r.n},
                {"holds", r.holds},
                {"lhs", to_json(r.lhs)},
                {"rhs", to_json(r.rhs)},
                {"diff", to_json(r.diff)}};
}

inline Json to_json(const SuiteReport& s) {
    Json reports = Json::array();
    for (const auto& r : s.reports) reports.push_back(to_json(r));
    return Json{{"all_hold", s.all_hold}, {"reports", std::move(reports)}};
}

inline Rational rational_from_json(const Json& j) {
    return Rational::from_string(j.get<std::string>());
}

inline UniPoly unipoly_from_json(const Json& j) {
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(Rational::from_string(c.get<std::string>()));
    return UniPoly::from_coeffs(std::move(coeffs), j.at("var").get<std::string>());
}

inline BiPoly bipoly_from_json(const Json& j) {
    std::vector<std::vector<Rational>> grid;
    for (const auto& row : j.at("coeffs")) {
        std::vector<Rational> r;
        for (const auto& c : row) r.push_back(Rational::from_string(c.get<std::string>()));
        grid.push_back(std::move(r));
    }
    return BiPoly::from_grid(grid);
}

inline IdentityReport report_from_json(const Json& j) {
    IdentityReport r;
    auto id = identity_from_string(j.at("id").get<std::string>());
    if (!id) throw std::invalid_argument("report: unknown identity id '" + j.at("id").get<std::string>() + "'");
    r.id = *id;
    r.m = j.at("m").get<int>();
    r.n = j.at("n").get<int>();
    r.holds = j.at("holds").get<bool>();
    r.lhs = bipoly_from_json(j.at("lhs"));
    r.rhs = bipoly_from_json(j.at("rhs"));
    r.diff = bipoly_from_json(j.at("diff"));
    return r;
}

inline SuiteReport suite_from_json(const Json& j) {
    SuiteReport s;
    s.all_hold = j.at("all_hold").get<bool>();
    for (const auto& rj : j.at("reports")) {
        s.reports.push_back(report_from_json(rj));
        ++s.counts[s.reports.back().id];
    }
    return s;
}

// -- human-readable rendering -------------------------------------------------

namespace detail {

inline void append_term(std::string& out, const Rational& c, const std::string& power) {
    bool negative = c.sign() < 0;
    Rational mag = negative ? -c : c;
    if (out.empty()) {
        if (negative) out += '-';
    } else {
        out += negative ? " - " : " + ";
    }
    std::string coeff = mag.to_string();
    if (power.empty()) {
        out += coeff;
    } else if (coeff == "1") {
        out += power;
    } else {
        out += coeff + "*" + power;
    }
}

inline std::string var_power(const std::string& var, std::size_t e) {
    if (e == 0) return "";
    if (e == 1) return var;
    return var + "^" + std::to_string(e);
}

}  // namespace detail

/// Descending-degree rendering, e.g. "x^2 - x + 1/6"; "0" for zero.
inline std::string to_string(const UniPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        if (p.coeffs()[i].is_zero()) continue;
        detail::append_term(out, p.coeffs()[i], detail::var_power(p.var(), i));
    }
    return out;
}

/// Terms ordered by descending total degree, then descending x-degree.
inline std::string to_string(const BiPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    int max_total = p.degree_x() + p.degree_y();
    for (int total = max_total; total >= 0; --total) {
        for (int i = std::min<int>(total, p.degree_x()); i >= 0; --i) {
            int j = total - i;
            if (j > p.degree_y()) break;
            Rational c = p.coeff(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
            if (c.is_zero()) continue;
            std::string power = detail::var_power("x", static_cast<std::size_t>(i));
            std::string ypow = detail::var_power("y", static_cast<std::size_t>(j));
            if (!power.empty() && !ypow.empty()) power += "*";
            detail::append_term(out, c, power + ypow);
        }
    }
    return out;
}

// -- CSV ----------------------------------------------------------------------

/// Space-separated ascending coefficients; safe inside one CSV cell.
inline std::string csv_cell(const UniPoly& p) {
    std::string out;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i) out += ' ';
        out += p.coeffs()[i].to_string();
    }
    return out;
}

/// Header "id,m,n,holds", one record per report, LF line endings.
inline std::string to_csv(const SuiteReport& s) {
    std::string out = "id,m,n,holds\n";
    for (const auto& r : s.reports) {
        out += std::string(to_string(r.id)) + "," + std::to_string(r.m) + "," + std::to_string(r.n) +
               "," + (r.holds ? "true" : "false") + "\n";
    }
    return out;
}

inline std::string to_text(const SuiteReport& s) {
    std::string out;
    for (const auto& r : s.reports) {
        out += std::string(to_string(r.id)) + " m=" + std::to_string(r.m) + " n=" + std::to_string(r.n) +
               (r.holds ? " holds" : " FAILS") + "\n";
    }
    out += std::to_string(s.reports.size()) + " checks, " +
           (s.all_hold ? "all hold" : "some fail") + "\n";
    return out;
}

}  // namespace bepoly
