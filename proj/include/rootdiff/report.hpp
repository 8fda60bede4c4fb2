#pragma once

// JSON, CSV and plain-text renderings of criterion and scan results.
//
// JSON field names are stable: n, k, alpha, clauses, predicted,
// oracle_residue, hypothesis_ok, agree; scans add cases, mismatches and
// elapsed_ms. Keys are emitted in a fixed order so output is byte-stable.

#include <nlohmann/json.hpp>

#include <ostream>
#include <sstream>
#include <string>

#include "rootdiff/criterion.hpp"
#include "rootdiff/harness.hpp"

namespace rootdiff {

using Json = nlohmann::ordered_json;

inline Json clauses_json(const ClauseSet& cs) {
    Json arr = Json::array();
    for (Clause c : cs.to_vector()) arr.push_back(std::string(1, to_char(c)));
    return arr;
}

inline Json witness_json(const CriterionVerdict& v) {
    if (v.c_witness) {
        return Json{{"clause", "c"},
                    {"q", v.c_witness->q},
                    {"q_not_dividing_n", v.c_witness->q_not_dividing_n},
                    {"alpha_not_one_mod_q", v.c_witness->alpha_not_one_mod_q}};
    }
    if (v.b_witness) return Json{{"clause", "b"}, {"four_not_dividing_n", v.b_witness->four_not_dividing_n}};
    return nullptr;
}

/// "q = 3; q | n; α ≢ 1 (mod q)"
inline std::string witness_text(const CriterionVerdict& v) {
    if (v.c_witness) {
        const auto& w = *v.c_witness;
        std::string s = "q = " + std::to_string(w.q) + "; ";
        s += w.q_not_dividing_n ? "q ∤ n" : "q | n";
        s += "; ";
        s += w.alpha_not_one_mod_q ? "α ≢ 1 (mod q)" : "α ≡ 1 (mod q)";
        return s;
    }
    if (v.b_witness) return v.b_witness->four_not_dividing_n ? "4 ∤ n" : "4 | n";
    return "none";
}

inline Json to_json(const ExplainRecord& r) {
    return Json{{"n", r.n},
                {"k", r.k},
                {"alpha", r.alpha},
                {"predicted", r.verdict.vanishes_predicted},
                {"clauses", clauses_json(r.verdict.clauses)},
                {"witness", witness_json(r.verdict)},
                {"oracle_residue", r.oracle_residue},
                {"hypothesis_ok", r.hypothesis_ok},
                {"agree", r.agree}};
}

inline Json to_json(const MismatchRecord& m) {
    return Json{{"n", m.n},
                {"k", m.k},
                {"alpha", m.alpha},
                {"clauses", clauses_json(m.clauses)},
                {"predicted", m.predicted},
                {"oracle_residue", m.oracle_residue}};
}

inline Json to_json(const LemmaFailure& f) {
    Json j{{"lemma", f.lemma}, {"n", f.n}, {"k", f.k}};
    j["alpha"] = f.alpha ? Json(*f.alpha) : Json(nullptr);
    j["p"] = f.p;
    return j;
}

inline Json to_json(const std::vector<MismatchRecord>& ms) {
    Json arr = Json::array();
    for (const auto& m : ms) arr.push_back(to_json(m));
    return arr;
}

inline Json to_json(const ScanReport& rep) {
    Json fails = Json::array();
    for (const auto& f : rep.lemma_failures) fails.push_back(to_json(f));
    return Json{{"max_n", rep.max_n},
                {"max_k", rep.max_k},
                {"cases", rep.cases_checked},
                {"roots_enumerated", rep.roots_enumerated},
                {"mismatches", to_json(rep.mismatches)},
                {"lemma_failures", fails},
                {"elapsed_ms", rep.elapsed.count()}};
}

inline Json to_json(const RootSet& rs) { return Json{{"n", rs.modulus}, {"roots", rs.roots}}; }

inline Json to_json(const BenchResult& b) {
    return Json{{"n", b.n},
                {"k", b.k},
                {"alpha", b.alpha},
                {"repetitions", b.repetitions},
                {"sum_direct_ns", b.sum_direct_ns},
                {"sum_by_crt_ns", b.sum_by_crt_ns},
                {"predict_ns", b.predict_ns}};
}

// ---------------------------------------------------------------------------
// CSV

inline std::string csv_clauses(const ClauseSet& cs) {
    std::string s;
    for (Clause c : cs.to_vector()) s += to_char(c);
    return s;
}

inline void write_csv(std::ostream& os, const std::vector<MismatchRecord>& ms) {
    os << "n,k,alpha,clauses,predicted,oracle_residue\n";
    for (const auto& m : ms) {
        os << m.n << ',' << m.k << ',' << m.alpha << ',' << csv_clauses(m.clauses) << ','
           << (m.predicted ? "true" : "false") << ',' << m.oracle_residue << '\n';
    }
}

/// Scan CSV is the mismatch table.
inline void write_csv(std::ostream& os, const ScanReport& rep) { write_csv(os, rep.mismatches); }

inline void write_csv(std::ostream& os, const ExplainRecord& r) {
    os << "n,k,alpha,predicted,clauses,oracle_residue,hypothesis_ok,agree\n";
    os << r.n << ',' << r.k << ',' << r.alpha << ',' << (r.verdict.vanishes_predicted ? "true" : "false") << ','
       << csv_clauses(r.verdict.clauses) << ',' << r.oracle_residue << ',' << (r.hypothesis_ok ? "true" : "false")
       << ',' << (r.agree ? "true" : "false") << '\n';
}

inline void write_csv(std::ostream& os, const RootSet& rs) {
    os << "n,alpha\n";
    for (Int a : rs.roots) os << rs.modulus << ',' << a << '\n';
}

inline void write_csv(std::ostream& os, const BenchResult& b) {
    os << "n,k,alpha,repetitions,sum_direct_ns,sum_by_crt_ns,predict_ns\n";
    os << b.n << ',' << b.k << ',' << b.alpha << ',' << b.repetitions << ',' << b.sum_direct_ns << ','
       << b.sum_by_crt_ns << ',' << b.predict_ns << '\n';
}

// ---------------------------------------------------------------------------
// Plain text

inline void write_plain(std::ostream& os, const ExplainRecord& r) {
    os << "n = " << r.n << ", k = " << r.k << ", alpha = " << r.alpha << '\n';
    if (r.hypothesis_ok) {
        os << "hypothesis alpha^n = 1 (mod n): holds\n";
    } else {
        os << "hypothesis alpha^n = 1 (mod n): violated; theorem silent\n";
    }
    os << "predicted: " << (r.verdict.vanishes_predicted ? "vanishes" : "does not vanish")
       << "  clauses: " << r.verdict.clauses.to_string() << '\n';
    os << "witness: " << witness_text(r.verdict) << '\n';
    os << "oracle residue: " << r.oracle_residue << '\n';
    os << "agree: " << (r.agree ? "true" : "false") << '\n';
}

inline void write_plain(std::ostream& os, const std::vector<MismatchRecord>& ms) {
    for (const auto& m : ms) {
        os << "n=" << m.n << " k=" << m.k << " alpha=" << m.alpha << " clauses=" << m.clauses.to_string()
           << " predicted=" << (m.predicted ? "vanishes" : "nonzero") << " oracle_residue=" << m.oracle_residue
           << '\n';
    }
}

inline void write_plain(std::ostream& os, const ScanReport& rep) {
    os << "scanned n <= " << rep.max_n << ", k <= " << rep.max_k << ": " << rep.cases_checked << " cases over "
       << rep.roots_enumerated << " roots\n";
    os << "mismatches: " << rep.mismatches.size() << '\n';
    write_plain(os, rep.mismatches);
    os << "lemma failures: " << rep.lemma_failures.size() << '\n';
    for (const auto& f : rep.lemma_failures) os << "  " << to_json(f).dump() << '\n';
    os << "elapsed: " << rep.elapsed.count() << " ms\n";
}

inline void write_plain(std::ostream& os, const RootSet& rs) {
    os << "roots of unity mod " << rs.modulus << " (" << rs.roots.size() << "):";
    for (Int a : rs.roots) os << ' ' << a;
    os << '\n';
}

inline void write_plain(std::ostream& os, const BenchResult& b) {
    os << "n = " << b.n << ", k = " << b.k << ", alpha = " << b.alpha << ", " << b.repetitions << " reps\n";
    os << "  sum_direct       " << b.sum_direct_ns << " ns/call\n";
    os << "  sum_by_crt       " << b.sum_by_crt_ns << " ns/call\n";
    os << "  theorem1_predict " << b.predict_ns << " ns/call\n";
}

}  // namespace rootdiff
