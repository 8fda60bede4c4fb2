#pragma once

// Command-line front end. Kept in a header so the test suites can drive the
// exact same code path in-process.
//
// Exit codes: 0 success, 1 mismatch or failed identity, 2 usage error.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "rootdiff/report.hpp"
#include "rootdiff/rootdiff.hpp"

namespace rootdiff::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_mismatch = 1;
inline constexpr int exit_usage = 2;

/// n and moduli are capped here so every product of two reduced values fits
/// comfortably in 64 bits.
inline constexpr Int max_cli_value = Int{1} << 31;

enum class Format { json, csv, plain };

namespace detail {

inline void add_format(CLI::App* sub, Format& fmt) {
    const std::map<std::string, Format> names{{"json", Format::json}, {"csv", Format::csv}, {"plain", Format::plain}};
    sub->add_option("--format", fmt, "Output format: json, csv or plain")
        ->transform(CLI::CheckedTransformer(names, CLI::ignore_case));
}

template <class T>
void emit(std::ostream& out, Format fmt, const T& value) {
    switch (fmt) {
        case Format::json: out << to_json(value).dump(2) << '\n'; break;
        case Format::csv: write_csv(out, value); break;
        case Format::plain: write_plain(out, value); break;
    }
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Derivatives of 1 + t + ... + t^(n-1) at roots of unity modulo n"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for all subcommands");

    const auto n_range = CLI::Range(Int{1}, max_cli_value);
    const auto k_range = CLI::Range(Int{0}, max_cli_value);
    Format fmt = Format::json;

    // eval
    Int eval_n = 1, eval_k = 0, eval_alpha = 0, eval_mod = 0;
    auto* eval_cmd = app.add_subcommand("eval", "Residue of the k-th derivative sum at alpha modulo a modulus");
    eval_cmd->add_option("--n", eval_n, "Number of terms n")->required()->check(n_range);
    eval_cmd->add_option("--k", eval_k, "Derivative order k")->required()->check(k_range);
    eval_cmd->add_option("--alpha", eval_alpha, "Evaluation point (any integer)")->required();
    eval_cmd->add_option("--modulus", eval_mod, "Modulus (defaults to n)")->check(n_range);
    detail::add_format(eval_cmd, fmt);

    // roots
    Int roots_n = 1;
    auto* roots_cmd = app.add_subcommand("roots", "All alpha in [0, n) with alpha^n = 1 (mod n)");
    roots_cmd->add_option("--n", roots_n, "Modulus n")->required()->check(n_range);
    detail::add_format(roots_cmd, fmt);

    // check
    Int check_n = 1, check_k = 0, check_alpha = 0;
    auto* check_cmd = app.add_subcommand("check", "Criterion prediction versus direct summation for one case");
    check_cmd->add_option("--n", check_n, "Modulus n")->required()->check(n_range);
    check_cmd->add_option("--k", check_k, "Derivative order k")->required()->check(k_range);
    check_cmd->add_option("--alpha", check_alpha, "Evaluation point (any integer)")->required();
    detail::add_format(check_cmd, fmt);

    // scan
    ScanConfig scan_cfg;
    bool no_timing = false;
    auto* scan_cmd = app.add_subcommand("scan", "Exhaustive check of the criterion over a range");
    scan_cmd->add_option("--max-n", scan_cfg.max_n, "Largest n")->required()->check(n_range);
    scan_cmd->add_option("--max-k", scan_cfg.max_k, "Largest k")->required()->check(CLI::Range(Int{0}, Int{1} << 20));
    scan_cmd->add_option("--jobs", scan_cfg.parallelism, "Worker threads")->check(CLI::Range(1u, 1024u));
    scan_cmd->add_flag("--check-lemmas", scan_cfg.check_lemmas, "Also verify the supporting identities inline");
    scan_cmd->add_flag("--no-timing", no_timing, "Report elapsed_ms as 0 for byte-stable output");
    detail::add_format(scan_cmd, fmt);

    // hunt
    std::string drop_label;
    Int hunt_max_n = 1, hunt_max_k = 0;
    unsigned hunt_jobs = 1;
    auto* hunt_cmd = app.add_subcommand("hunt", "Counterexamples to the criterion with one hypothesis removed");
    hunt_cmd->add_option("--drop", drop_label, "Hypothesis to drop: clause-c-alpha, clause-b or none")->required();
    hunt_cmd->add_option("--max-n", hunt_max_n, "Largest n")->required()->check(CLI::Range(Int{0}, max_cli_value));
    hunt_cmd->add_option("--max-k", hunt_max_k, "Largest k")->required()->check(CLI::Range(Int{0}, Int{1} << 20));
    hunt_cmd->add_option("--jobs", hunt_jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
    detail::add_format(hunt_cmd, fmt);

    // bench
    Int bench_n = 300, bench_k = 12, bench_reps = 100, bench_alpha = 1;
    auto* bench_cmd = app.add_subcommand("bench", "Time direct, CRT and criterion evaluation on one input");
    bench_cmd->add_option("--n", bench_n, "Modulus n")->check(n_range);
    bench_cmd->add_option("--k", bench_k, "Derivative order k")->check(k_range);
    bench_cmd->add_option("--reps", bench_reps, "Repetitions per path")->check(CLI::Range(Int{1}, Int{1} << 30));
    bench_cmd->add_option("--alpha", bench_alpha, "Evaluation point");
    detail::add_format(bench_cmd, fmt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*eval_cmd) {
            const Int m = eval_mod == 0 ? eval_n : eval_mod;
            const Residue r = sum_direct(eval_n, eval_k, eval_alpha, m);
            if (fmt == Format::json) {
                out << Json{{"n", eval_n}, {"k", eval_k}, {"alpha", eval_alpha}, {"modulus", m}, {"residue", r.value()}}
                           .dump(2)
                    << '\n';
            } else if (fmt == Format::csv) {
                out << "n,k,alpha,modulus,residue\n"
                    << eval_n << ',' << eval_k << ',' << eval_alpha << ',' << m << ',' << r.value() << '\n';
            } else {
                out << r << '\n';
            }
            return exit_ok;
        }
        if (*roots_cmd) {
            detail::emit(out, fmt, roots_of_unity(roots_n));
            return exit_ok;
        }
        if (*check_cmd) {
            const auto rec = explain(check_n, check_k, check_alpha);
            detail::emit(out, fmt, rec);
            return rec.hypothesis_ok && !rec.agree ? exit_mismatch : exit_ok;
        }
        if (*scan_cmd) {
            auto rep = scan(scan_cfg);
            if (no_timing) rep.elapsed = std::chrono::milliseconds{0};
            detail::emit(out, fmt, rep);
            return rep.clean() ? exit_ok : exit_mismatch;
        }
        if (*hunt_cmd) {
            const auto drop = parse_drop(drop_label);
            if (!drop) {
                err << "unknown --drop label '" << drop_label << "' (expected clause-c-alpha, clause-b or none)\n";
                return exit_usage;
            }
            const auto records = hunt_weakened(hunt_max_n, hunt_max_k, *drop, hunt_jobs);
            if (fmt == Format::json) {
                out << Json{{"drop", drop_label}, {"max_n", hunt_max_n}, {"max_k", hunt_max_k}, {"records", to_json(records)}}
                           .dump(2)
                    << '\n';
            } else if (fmt == Format::csv) {
                write_csv(out, records);
            } else {
                write_plain(out, records);
            }
            return exit_ok;
        }
        if (*bench_cmd) {
            detail::emit(out, fmt, bench(bench_n, bench_k, bench_reps, bench_alpha));
            return exit_ok;
        }
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

}  // namespace rootdiff::cli
