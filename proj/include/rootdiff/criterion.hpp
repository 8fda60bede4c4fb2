#pragma once

// Vanishing criterion for S(n, k, alpha) mod n when alpha^n = 1 (mod n).
//
// S vanishes modulo n iff at least one of
//   (a) k+1 is neither 4 nor a prime;
//   (b) k+1 = 4 and 4 does not divide n;
//   (c) k+1 is a prime q, and q does not divide n or alpha != 1 (mod q).

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "rootdiff/derivsum.hpp"
#include "rootdiff/numtheory.hpp"

namespace rootdiff {

enum class Clause : std::uint8_t { a = 1, b = 2, c = 4 };

inline char to_char(Clause c) {
    switch (c) {
        case Clause::a: return 'a';
        case Clause::b: return 'b';
        case Clause::c: return 'c';
    }
    return '?';
}

/// Small set of clauses, iterated in a, b, c order.
class ClauseSet {
public:
    constexpr ClauseSet() = default;
    constexpr ClauseSet(std::initializer_list<Clause> cs) {
        for (Clause c : cs) insert(c);
    }

    constexpr void insert(Clause c) noexcept { bits_ |= static_cast<std::uint8_t>(c); }
    constexpr bool contains(Clause c) const noexcept { return (bits_ & static_cast<std::uint8_t>(c)) != 0; }
    constexpr bool empty() const noexcept { return bits_ == 0; }

    std::vector<Clause> to_vector() const {
        std::vector<Clause> out;
        for (Clause c : {Clause::a, Clause::b, Clause::c}) {
            if (contains(c)) out.push_back(c);
        }
        return out;
    }

    /// "{a}", "{}", ...
    std::string to_string() const {
        std::string s = "{";
        for (Clause c : to_vector()) {
            if (s.size() > 1) s += ',';
            s += to_char(c);
        }
        return s + "}";
    }

    friend constexpr bool operator==(ClauseSet, ClauseSet) = default;

private:
    std::uint8_t bits_ = 0;
};

/// Which disjunct(s) of clause (c) fired.
struct ClauseCWitness {
    Int q = 0;
    bool q_not_dividing_n = false;
    bool alpha_not_one_mod_q = false;
};

struct ClauseBWitness {
    bool four_not_dividing_n = true;
};

struct CriterionVerdict {
    bool vanishes_predicted = false;
    ClauseSet clauses;
    std::optional<ClauseCWitness> c_witness;
    std::optional<ClauseBWitness> b_witness;
};

/// Evaluates the clause arithmetic. The result is meaningful as a prediction
/// only when alpha^n = 1 (mod n), but it is computed for any alpha.
inline CriterionVerdict theorem1_predict(Int n, Int k, Int alpha) {
    if (n < 1 || k < 0) throw std::domain_error("theorem1_predict requires n >= 1, k >= 0");
    const Int kp1 = k + 1;
    CriterionVerdict v;
    if (kp1 == 4) {
        if (n % 4 != 0) {
            v.clauses.insert(Clause::b);
            v.b_witness = ClauseBWitness{};
        }
    } else if (is_prime(kp1)) {
        ClauseCWitness w;
        w.q = kp1;
        w.q_not_dividing_n = n % kp1 != 0;
        w.alpha_not_one_mod_q = floor_mod(alpha, kp1) != 1;
        if (w.q_not_dividing_n || w.alpha_not_one_mod_q) {
            v.clauses.insert(Clause::c);
            v.c_witness = w;
        }
    } else {
        v.clauses.insert(Clause::a);
    }
    v.vanishes_predicted = !v.clauses.empty();
    return v;
}

/// Ground truth: S(n, k, alpha) = 0 (mod n) by direct summation.
inline bool sum_vanishes_oracle(Int n, Int k, Int alpha) { return sum_direct(n, k, alpha, n).is_zero(); }

inline bool is_root_of_unity(Int alpha, Int n) { return mod_pow(alpha, n, n).value() == 1 % n; }

/// All alpha in [0, n) with alpha^n = 1 (mod n), ascending. For n = 1 this is {0}.
struct RootSet {
    Int modulus = 1;
    std::vector<Int> roots;

    bool contains(Int alpha) const { return std::binary_search(roots.begin(), roots.end(), floor_mod(alpha, modulus)); }
};

inline RootSet roots_of_unity(Int n) {
    if (n < 1) throw std::domain_error("roots_of_unity requires n >= 1");
    RootSet rs;
    rs.modulus = n;
    for (Int a = 0; a < n; ++a) {
        if (is_root_of_unity(a, n)) rs.roots.push_back(a);
    }
    return rs;
}

/// Prediction, oracle, and their agreement bundled for one (n, k, alpha).
struct ExplainRecord {
    Int n = 1;
    Int k = 0;
    Int alpha = 0;
    CriterionVerdict verdict;
    Int oracle_residue = 0;
    bool oracle_vanishes = true;
    bool hypothesis_ok = true;  ///< alpha^n = 1 (mod n)
    bool agree = true;          ///< verdict.vanishes_predicted == oracle_vanishes
};

inline ExplainRecord explain(Int n, Int k, Int alpha) {
    ExplainRecord r;
    r.n = n;
    r.k = k;
    r.alpha = alpha;
    r.verdict = theorem1_predict(n, k, alpha);
    r.oracle_residue = sum_direct(n, k, alpha, n).value();
    r.oracle_vanishes = r.oracle_residue == 0;
    r.hypothesis_ok = is_root_of_unity(alpha, n);
    r.agree = r.verdict.vanishes_predicted == r.oracle_vanishes;
    return r;
}

}  // namespace rootdiff
