#pragma once

// Falling factorials n(n-1)...(n-k+1): modular values, p-adic valuations,
// the collapsing sum of i^(k), and integrality of (n-1)^(k)/(k+1).

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

#include "rootdiff/numtheory.hpp"

namespace rootdiff {

/// n falling k. Zero exactly when 0 <= n < k; one when k == 0.
struct FallingFactorial {
    Int base = 0;
    Int depth = 0;

    bool is_zero() const noexcept { return base < depth; }
};

/// n(n-1)...(n-k+1) mod m as a k-term product.
inline Residue falling_mod(Int n, Int k, Int m) {
    detail::require_modulus(m);
    if (n < 0 || k < 0) throw std::domain_error("falling_mod requires n, k >= 0");
    if (n < k) return Residue(0, m);
    Int r = 1 % m;
    for (Int j = 0; j < k && r != 0; ++j) {
        r = detail::mul_reduced(r, floor_mod(n - j, m), m);
    }
    return Residue(r, m);
}

inline Residue falling_mod(const FallingFactorial& f, Int m) { return falling_mod(f.base, f.depth, m); }

/// Sum of nu_p over the factors n, n-1, ..., n-k+1; infinite when n < k.
inline Valuation falling_valuation(Int n, Int k, Int p) {
    detail::require_prime(p);
    if (n < 0 || k < 0) throw std::domain_error("falling_valuation requires n, k >= 0");
    if (n < k) return Valuation::infinity();
    Int total = 0;
    for (Int j = 0; j < k; ++j) total += nu_p(n - j, p).value();
    return total;
}

inline Valuation falling_valuation(const FallingFactorial& f, Int p) { return falling_valuation(f.base, f.depth, p); }

/// Sum of i^(k) for n0 <= i < n1, modulo m, by direct summation.
inline Residue falling_sum(Int n0, Int n1, Int k, Int m) {
    if (n0 < 0 || n1 < n0) throw std::domain_error("falling_sum requires 0 <= n0 <= n1");
    Residue acc(0, m);
    for (Int i = std::max(n0, k); i < n1; ++i) acc += falling_mod(i, k, m);
    return acc;
}

// ---------------------------------------------------------------------------
// Integrality of (n-1)^(k) / (k+1)

enum class IntegralityClause {
    four_divides_n,   ///< (i): k+1 = 4 and 4 | n
    prime_divides_n,  ///< (ii): k+1 = p prime and p | n
};

inline const char* to_string(IntegralityClause c) {
    return c == IntegralityClause::four_divides_n ? "i" : "ii";
}

struct IntegralityVerdict {
    bool is_integer = true;
    std::optional<Int> failing_prime;
    std::optional<IntegralityClause> clause;
};

/// Decides whether (n-1)^(k)/(k+1) is an integer purely from valuations.
inline IntegralityVerdict integrality_check(Int n, Int k) {
    if (n < 1 || k < 0) throw std::domain_error("integrality_check requires n >= 1, k >= 0");
    const Int kp1 = k + 1;
    for (const auto& [p, e] : factorize(kp1)) {
        if (falling_valuation(n - 1, k, p) >= Valuation(e)) continue;
        IntegralityVerdict v;
        v.is_integer = false;
        v.failing_prime = p;
        if (kp1 == 4 && n % 4 == 0) {
            v.clause = IntegralityClause::four_divides_n;
        } else if (kp1 == p && n % p == 0) {
            v.clause = IntegralityClause::prime_divides_n;
        } else {
            throw std::logic_error("non-integral falling quotient outside both clauses: n=" + std::to_string(n) +
                                   " k=" + std::to_string(k));
        }
        return v;
    }
    return {};
}

// ---------------------------------------------------------------------------
// Valuation bounds for (n-1)^(k) at a prime dividing k+1

enum class Lemma1Case {
    not_prime_power,  ///< k+1 is not a power of p: v >= e
    prime_power,      ///< k+1 = p^e: v >= e-1, equality only if p | n
};

struct Lemma1Bounds {
    Valuation e;  ///< nu_p(k+1)
    Valuation v;  ///< nu_p((n-1)^(k))
    Lemma1Case which = Lemma1Case::not_prime_power;
    bool fraction_negative = false;  ///< nu_p((n-1)^(k)/(k+1)) < 0

    /// v - e, or infinity when (n-1)^(k) = 0.
    Valuation deficit() const { return v - e; }
};

inline Lemma1Bounds lemma1_bounds(Int n, Int k, Int p) {
    detail::require_prime(p);
    if (n < 1 || k < 1) throw std::domain_error("lemma1_bounds requires n >= 1, k >= 1");
    if ((k + 1) % p != 0) {
        throw std::domain_error(std::to_string(p) + " does not divide k+1 = " + std::to_string(k + 1));
    }
    Lemma1Bounds b;
    b.e = nu_p(k + 1, p);
    b.v = falling_valuation(n - 1, k, p);
    b.which = checked_pow(p, b.e.value()) == k + 1 ? Lemma1Case::prime_power : Lemma1Case::not_prime_power;
    b.fraction_negative = b.v < b.e;
    return b;
}

}  // namespace rootdiff
