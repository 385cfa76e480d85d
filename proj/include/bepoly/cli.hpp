/*
 * Copyright (c) 2026 The bepoly authors
 * SPDX-License-Identifier: Apache-2.0
 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bepoly/identities.hpp"
#include "bepoly/sequences.hpp"
#include "bepoly/serialize.hpp"

// Command-line front end.
//
//   eval    --what bernoulli-number|bernoulli-poly|euler-number|euler-poly --n N
//   verify  --identity <id>|all|lemma2 [--identity ...] --m-max M --n-max N [--seed S]
//   table   --what bernoulli-numbers|euler-numbers|woodcock|woodcock-poly-A|woodcock-poly-C
//
// Exit codes: 0 success / all verified identities hold, 1 some identity
// fails, 2 usage or parameter-domain errors. Payload goes to the output
// stream, diagnostics to the error stream.

namespace bepoly::cli {

enum class Format { text, json, csv };

inline Format parse_format(const std::string& name) {
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    return Format::text;
}

enum class Subcommand { eval, verify, table };

/// Everything a parsed command line pins down.
struct CliConfig {
    Subcommand subcommand = Subcommand::eval;
    std::vector<std::string> identities;  // ids, "all", or "lemma2"
    int m_max = 6;
    int n_max = 6;
    int n = 0;
    std::string what;
    Format format = Format::text;
    std::uint64_t seed = 1;
};

/// Emits a verification suite in the requested format and maps it to the
/// process exit code: 0 when every report holds, 1 otherwise.
inline int emit_verify_result(const SuiteReport& suite, Format format, std::ostream& out) {
    switch (format) {
        case Format::json: out << to_json(suite).dump() << '\n'; break;
        case Format::csv: out << to_csv(suite); break;
        case Format::text: out << to_text(suite); break;
    }
    return suite.all_hold ? 0 : 1;
}

namespace detail {

inline int run_eval(const CliConfig& cfg, std::ostream& out) {
    if (cfg.n < 0) throw std::domain_error("eval requires --n >= 0, got " + std::to_string(cfg.n));
    auto un = static_cast<std::size_t>(cfg.n);
    bool is_poly = (cfg.what == "bernoulli-poly" || cfg.what == "euler-poly");
    Rational value;
    UniPoly poly;
    if (cfg.what == "bernoulli-number") {
        value = bernoulli_number(un);
    } else if (cfg.what == "euler-number") {
        value = euler_number(un);
    } else if (cfg.what == "bernoulli-poly") {
        poly = bernoulli_poly(un);
    } else if (cfg.what == "euler-poly") {
        poly = euler_poly(un);
    } else {
        throw std::invalid_argument("eval: unknown --what '" + cfg.what + "'");
    }
    switch (cfg.format) {
        case Format::json:
            out << (is_poly ? to_json(poly) : to_json(value)).dump() << '\n';
            break;
        case Format::csv:
            if (is_poly)
                out << "n,coeffs\n" << cfg.n << "," << csv_cell(poly) << "\n";
            else
                out << "n,value\n" << cfg.n << "," << value.to_string() << "\n";
            break;
        case Format::text:
            out << (is_poly ? to_string(poly) : value.to_string()) << '\n';
            break;
    }
    return 0;
}

inline int run_verify(const CliConfig& cfg, std::ostream& out) {
    std::set<IdentityId> ids;
    bool want_lemma2 = false;
    for (const auto& name : cfg.identities) {
        if (name == "all") {
            ids.insert(kCatalog.begin(), kCatalog.end());
            continue;
        }
        auto id = identity_from_string(name);
        if (!id) throw std::invalid_argument("verify: unknown identity '" + name + "'");
        if (*id == IdentityId::lemma2)
            want_lemma2 = true;
        else
            ids.insert(*id);
    }

    SuiteReport suite;
    if (!ids.empty()) suite = verify_range(ids, cfg.m_max, cfg.n_max);
    if (want_lemma2) {
        // Five seeded sequences, each long enough for the whole grid.
        std::size_t entries =
            static_cast<std::size_t>(cfg.m_max) + static_cast<std::size_t>(cfg.n_max) + 2;
        for (int m = 0; m <= cfg.m_max; ++m)
            for (int n = 0; n <= cfg.n_max; ++n)
                for (std::uint64_t s = 0; s < 5; ++s) {
                    suite.reports.push_back(verify_lemma2(seeded_sequence(cfg.seed + s, entries), m, n));
                    suite.all_hold = suite.all_hold && suite.reports.back().holds;
                    ++suite.counts[IdentityId::lemma2];
                }
    }
    return emit_verify_result(suite, cfg.format, out);
}

inline int run_table(const CliConfig& cfg, std::ostream& out) {
    if (cfg.n_max < 0 || cfg.m_max < 0)
        throw std::domain_error("table requires --m-max and --n-max >= 0");

    const std::string& what = cfg.what;
    bool by_n_only = (what == "bernoulli-numbers" || what == "euler-numbers");
    bool poly_table = (what == "woodcock-poly-A" || what == "woodcock-poly-C");
    if (!by_n_only && !poly_table && what != "woodcock")
        throw std::invalid_argument("table: unknown --what '" + what + "'");

    Json rows = Json::array();
    std::string csv;
    std::string text;
    if (by_n_only) {
        csv = "n,value\n";
        for (int n = 0; n <= cfg.n_max; ++n) {
            Rational v = (what == "bernoulli-numbers") ? bernoulli_number(static_cast<std::size_t>(n))
                                                       : euler_number(static_cast<std::size_t>(n));
            rows.push_back(Json{{"n", n}, {"value", v.to_string()}});
            csv += std::to_string(n) + "," + v.to_string() + "\n";
            text += (what == "bernoulli-numbers" ? "B_" : "E_") + std::to_string(n) + " = " +
                    v.to_string() + "\n";
        }
    } else if (what == "woodcock") {
        csv = "m,n,value\n";
        for (int m = 0; m <= cfg.m_max; ++m)
            for (int n = 1; n <= cfg.n_max; ++n) {
                Rational v = woodcock_number(m, n);
                rows.push_back(Json{{"m", m}, {"n", n}, {"value", v.to_string()}});
                csv += std::to_string(m) + "," + std::to_string(n) + "," + v.to_string() + "\n";
                text += "A(" + std::to_string(m) + "," + std::to_string(n) + ") = " + v.to_string() + "\n";
            }
    } else {
        csv = "m,n,coeffs\n";
        const char* label = (what == "woodcock-poly-A") ? "A" : "C";
        for (int m = 0; m <= cfg.m_max; ++m)
            for (int n = 1; n <= cfg.n_max; ++n) {
                UniPoly p = (what == "woodcock-poly-A") ? woodcock_poly_A(m, n) : woodcock_poly_C(m, n);
                rows.push_back(Json{{"m", m}, {"n", n}, {"poly", to_json(p)}});
                csv += std::to_string(m) + "," + std::to_string(n) + "," + csv_cell(p) + "\n";
                text += std::string(label) + "(" + std::to_string(m) + "," + std::to_string(n) +
                        ")(t) = " + to_string(p) + "\n";
            }
    }

    switch (cfg.format) {
        case Format::json: out << Json{{"what", what}, {"rows", std::move(rows)}}.dump() << '\n'; break;
        case Format::csv: out << csv; break;
        case Format::text: out << text; break;
    }
    return 0;
}

}  // namespace detail

/// Entry point; args exclude the program name. Returns the process exit code.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Bernoulli/Euler polynomial toolkit"};
    app.require_subcommand(1);

    CliConfig cfg;
    std::string format_name = "text";

    auto* eval = app.add_subcommand("eval", "compute one number or polynomial");
    eval->add_option("--what", cfg.what,
                     "bernoulli-number | bernoulli-poly | euler-number | euler-poly")
        ->required();
    eval->add_option("--n", cfg.n, "index of the entity")->required()->check(CLI::NonNegativeNumber);
    eval->add_option("--format", format_name, "text | json | csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    auto* verify = app.add_subcommand("verify", "verify identities over a parameter grid");
    verify
        ->add_option("--identity", cfg.identities,
                     "identity id, 'all' (the whole catalog), or 'lemma2' (repeatable)")
        ->required();
    verify->add_option("--m-max", cfg.m_max, "largest m (default 6)")->check(CLI::NonNegativeNumber);
    verify->add_option("--n-max", cfg.n_max, "largest n (default 6)")->check(CLI::NonNegativeNumber);
    verify->add_option("--seed", cfg.seed, "seed for lemma2 test sequences (default 1)");
    verify->add_option("--format", format_name, "text | json | csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    auto* table = app.add_subcommand("table", "tabulate numbers or polynomials");
    table
        ->add_option("--what", cfg.what,
                     "bernoulli-numbers | euler-numbers | woodcock | woodcock-poly-A | "
                     "woodcock-poly-C")
        ->required();
    table->add_option("--m-max", cfg.m_max, "largest m (default 6)")->check(CLI::NonNegativeNumber);
    table->add_option("--n-max", cfg.n_max, "largest n (default 6)")->check(CLI::NonNegativeNumber);
    table->add_option("--format", format_name, "text | json | csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    try {
        std::reverse(args.begin(), args.end());  // CLI11 consumes a reversed vector
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n' << app.help();
        return 2;
    }

    cfg.format = parse_format(format_name);
    cfg.subcommand = eval->parsed()     ? Subcommand::eval
                     : verify->parsed() ? Subcommand::verify
                                        : Subcommand::table;
    try {
        switch (cfg.subcommand) {
            case Subcommand::eval: return detail::run_eval(cfg, out);
            case Subcommand::verify: return detail::run_verify(cfg, out);
            case Subcommand::table: return detail::run_table(cfg, out);
        }
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace bepoly::cli
