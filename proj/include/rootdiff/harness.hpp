#pragma once

// Exhaustive verification of the vanishing criterion against direct
// summation, over every n <= max_n, every root of unity alpha mod n and every
// k <= max_k. Work is split by n; per-n results are merged in n order, so the
// report does not depend on the worker count.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "rootdiff/criterion.hpp"
#include "rootdiff/derivsum.hpp"
#include "rootdiff/falling.hpp"
#include "rootdiff/numtheory.hpp"

namespace rootdiff {

struct ScanConfig {
    Int max_n = 1;
    Int max_k = 0;
    unsigned parallelism = 1;
    bool check_lemmas = false;
};

struct MismatchRecord {
    Int n = 1;
    Int k = 0;
    Int alpha = 0;
    ClauseSet clauses;
    bool predicted = false;
    Int oracle_residue = 0;

    friend bool operator==(const MismatchRecord&, const MismatchRecord&) = default;
};

/// A structural identity that failed during a scan with check_lemmas set.
struct LemmaFailure {
    std::string lemma;  ///< "lemma1", "integrality", "lemma2", "claim1"
    Int n = 1;
    Int k = 0;
    std::optional<Int> alpha;
    Int p = 0;

    friend bool operator==(const LemmaFailure&, const LemmaFailure&) = default;
};

struct ScanReport {
    Int max_n = 0;
    Int max_k = 0;
    std::int64_t cases_checked = 0;
    std::int64_t roots_enumerated = 0;
    std::vector<MismatchRecord> mismatches;
    std::vector<LemmaFailure> lemma_failures;
    std::chrono::milliseconds elapsed{0};

    bool clean() const noexcept { return mismatches.empty() && lemma_failures.empty(); }
};

/// Which hypothesis of the criterion to remove when hunting for
/// counterexamples.
enum class Drop {
    none,
    clause_c_alpha_condition,  ///< (c) becomes "k+1 = q prime and q does not divide n"
    clause_b_condition,        ///< (b) becomes "k+1 = 4"
};

inline std::optional<Drop> parse_drop(std::string_view label) {
    if (label == "none") return Drop::none;
    if (label == "clause-c-alpha" || label == "clause_c_alpha_condition") return Drop::clause_c_alpha_condition;
    if (label == "clause-b" || label == "clause_b_condition") return Drop::clause_b_condition;
    return std::nullopt;
}

inline CriterionVerdict predict_weakened(Int n, Int k, Int alpha, Drop drop) {
    CriterionVerdict v = theorem1_predict(n, k, alpha);
    const Int kp1 = k + 1;
    switch (drop) {
        case Drop::none:
            return v;
        case Drop::clause_c_alpha_condition:
            if (is_prime(kp1)) {
                v = {};
                if (n % kp1 != 0) {
                    v.clauses.insert(Clause::c);
                    v.c_witness = ClauseCWitness{kp1, true, floor_mod(alpha, kp1) != 1};
                }
            }
            break;
        case Drop::clause_b_condition:
            if (kp1 == 4) {
                v = {};
                v.clauses.insert(Clause::b);
                v.b_witness = ClauseBWitness{n % 4 != 0};
            }
            break;
    }
    v.vanishes_predicted = !v.clauses.empty();
    return v;
}

namespace detail {

struct PerN {
    std::int64_t roots = 0;
    std::vector<MismatchRecord> mismatches;
    std::vector<LemmaFailure> lemma_failures;
};

inline void check_lemma1(Int n, Int k, std::vector<LemmaFailure>& out) {
    if (k < 1) return;
    const Int kp1 = k + 1;
    for (const auto& [p, e] : factorize(kp1)) {
        const auto b = lemma1_bounds(n, k, p);
        bool ok = true;
        if (b.which == Lemma1Case::not_prime_power) {
            ok = b.v >= b.e;
        } else {
            ok = b.v >= b.e - Valuation(1) && (b.v != b.e - Valuation(1) || n % p == 0);
        }
        const bool in_c = (kp1 == 4 || kp1 == p) && n % kp1 == 0;
        ok = ok && b.fraction_negative == in_c && (!in_c || b.deficit() == Valuation(-1));
        if (!ok) out.push_back({"lemma1", n, k, std::nullopt, p});
    }
    const auto iv = integrality_check(n, k);
    const bool expect_integer = !((kp1 == 4 && n % 4 == 0) || (is_prime(kp1) && n % kp1 == 0));
    if (iv.is_integer != expect_integer) out.push_back({"integrality", n, k, std::nullopt, iv.failing_prime.value_or(0)});
}

inline void check_prime_power_claims(Int n, Int k, Int alpha, const Factorization& fac,
                                     std::vector<LemmaFailure>& out) {
    for (const auto& [p, ell] : fac) {
        if (floor_mod(alpha, p) == 1) {
            if (!lemma2_congruence(n, k, alpha, p).congruent) out.push_back({"lemma2", n, k, alpha, p});
        } else {
            const Int pl = checked_pow(p, ell);
            const Residue via_closed_form = claim1_vanishing(n, k, alpha, p, ell);
            if (!via_closed_form.is_zero() || via_closed_form != sum_direct(n, k, alpha, pl)) {
                out.push_back({"claim1", n, k, alpha, p});
            }
        }
    }
}

inline PerN scan_one(Int n, Int max_k, Drop drop, bool check_lemmas) {
    PerN r;
    const auto roots = roots_of_unity(n).roots;
    r.roots = static_cast<std::int64_t>(roots.size());
    const auto fac = factorize(n);
    for (Int k = 0; k <= max_k; ++k) {
        if (check_lemmas) check_lemma1(n, k, r.lemma_failures);
        for (Int alpha : roots) {
            const auto verdict = predict_weakened(n, k, alpha, drop);
            const Int residue = sum_direct(n, k, alpha, n).value();
            if (verdict.vanishes_predicted != (residue == 0)) {
                r.mismatches.push_back({n, k, alpha, verdict.clauses, verdict.vanishes_predicted, residue});
            }
            if (check_lemmas) check_prime_power_claims(n, k, alpha, fac, r.lemma_failures);
        }
    }
    return r;
}

inline ScanReport run_scan(const ScanConfig& cfg, Drop drop) {
    if (cfg.max_k < 0) throw std::domain_error("scan requires max_k >= 0");
    const auto start = std::chrono::steady_clock::now();
    const Int count = std::max<Int>(cfg.max_n, 0);
    std::vector<PerN> results(static_cast<std::size_t>(count));

    std::atomic<Int> next{0};
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(count));
    auto worker = [&] {
        for (Int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
            try {
                results[static_cast<std::size_t>(i)] = scan_one(i + 1, cfg.max_k, drop, cfg.check_lemmas);
            } catch (...) {
                errors[static_cast<std::size_t>(i)] = std::current_exception();
            }
        }
    };
    const unsigned workers = std::max(1u, std::min<unsigned>(cfg.parallelism, static_cast<unsigned>(std::max<Int>(count, 1))));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }

    ScanReport rep;
    rep.max_n = cfg.max_n;
    rep.max_k = cfg.max_k;
    for (auto& r : results) {
        rep.roots_enumerated += r.roots;
        rep.cases_checked += r.roots * (cfg.max_k + 1);
        rep.mismatches.insert(rep.mismatches.end(), r.mismatches.begin(), r.mismatches.end());
        rep.lemma_failures.insert(rep.lemma_failures.end(), r.lemma_failures.begin(), r.lemma_failures.end());
    }
    rep.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return rep;
}

}  // namespace detail

/// Compares the criterion with direct summation on every (n, alpha, k) in
/// range. Mismatches come back sorted by (n, k, alpha).
inline ScanReport scan(const ScanConfig& cfg) {
    if (cfg.max_n < 1) throw std::domain_error("scan requires max_n >= 1");
    if (cfg.parallelism < 1) throw std::domain_error("scan requires parallelism >= 1");
    return detail::run_scan(cfg, Drop::none);
}

/// Cases where the criterion with one hypothesis removed disagrees with
/// direct summation. An empty range (max_n < 1) yields no records.
inline std::vector<MismatchRecord> hunt_weakened(Int max_n, Int max_k, Drop drop, unsigned parallelism = 1) {
    if (max_n < 1 || max_k < 0) return {};
    ScanConfig cfg{max_n, max_k, std::max(parallelism, 1u), false};
    return detail::run_scan(cfg, drop).mismatches;
}

// ---------------------------------------------------------------------------
// Benchmark

struct BenchResult {
    Int n = 1;
    Int k = 0;
    Int alpha = 1;
    Int repetitions = 0;
    double sum_direct_ns = 0;
    double sum_by_crt_ns = 0;
    double predict_ns = 0;
};

inline BenchResult bench(Int n, Int k, Int repetitions, Int alpha = 1) {
    if (n < 1 || k < 0) throw std::domain_error("bench requires n >= 1, k >= 0");
    BenchResult r{n, k, alpha, std::max<Int>(repetitions, 1)};
    volatile Int sink = 0;
    auto time_ns = [&](auto&& fn) {
        const auto t0 = std::chrono::steady_clock::now();
        for (Int i = 0; i < r.repetitions; ++i) sink = sink + fn();
        const std::chrono::duration<double, std::nano> dt = std::chrono::steady_clock::now() - t0;
        return dt.count() / static_cast<double>(r.repetitions);
    };
    r.sum_direct_ns = time_ns([&] { return sum_direct(n, k, alpha, n).value(); });
    r.sum_by_crt_ns = time_ns([&] { return sum_by_crt(n, k, alpha).value(); });
    r.predict_ns = time_ns([&] { return static_cast<Int>(theorem1_predict(n, k, alpha).vanishes_predicted); });
    return r;
}

}  // namespace rootdiff
