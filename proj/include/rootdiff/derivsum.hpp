#pragma once

// The derivative sum
//
//     S(n, k, alpha) = sum_{i=k}^{n-1} i^(k) alpha^(i-k)
//
// which is the k-th derivative of f(t) = 1 + t + ... + t^(n-1) at t = alpha.
// Terms with i < k vanish (i^(k) = 0), so every exponent is nonnegative and
// alpha need not be invertible.
//
// Besides direct and CRT evaluation, this header carries the two structural
// identities behind the vanishing criterion: the closed form obtained by
// differentiating (t^n - 1)(t - 1)^(-1) with Leibniz's rule, and the
// congruence S = ((n-1)^(k)/(k+1)) n (mod p^l) for alpha = 1 (mod p).

#include <stdexcept>
#include <string>
#include <vector>

#include "rootdiff/falling.hpp"
#include "rootdiff/numtheory.hpp"

namespace rootdiff {

struct SumQuery {
    Int n = 1;
    Int k = 0;
    Int alpha = 0;  ///< any representative; reduced modulo `modulus`
    Int modulus = 1;
};

inline Residue sum_direct(const SumQuery& q) {
    detail::require_modulus(q.modulus);
    if (q.n < 1 || q.k < 0) throw std::domain_error("sum_direct requires n >= 1, k >= 0");
    const Int m = q.modulus;
    const Residue a(q.alpha, m);
    Residue power(1, m);
    Residue acc(0, m);
    for (Int i = q.k; i < q.n; ++i) {
        acc += falling_mod(i, q.k, m) * power;
        power *= a;
    }
    return acc;
}

inline Residue sum_direct(Int n, Int k, Int alpha, Int modulus) { return sum_direct(SumQuery{n, k, alpha, modulus}); }

/// S(n, k, alpha) mod n, evaluated per prime power of n and recombined.
inline Residue sum_by_crt(Int n, Int k, Int alpha) {
    const auto fac = factorize(n);
    std::vector<Residue> parts;
    parts.reserve(fac.size());
    for (const auto& pp : fac) parts.push_back(sum_direct(n, k, alpha, pp.value()));
    return crt_combine(parts);
}

/// Right-hand side of the Leibniz closed form for S(n, k, t) modulo m:
///
///   -(t^n - 1) k! (1-t)^(-1-k) - sum_{i<k} k^(i) n^(k-i) t^(n-k+i) (1-t)^(-1-i)
///
/// Throws unit_required_error when 1 - t is not a unit modulo m.
inline Residue leibnitz_closed_form(Int n, Int k, Int t, Int m) {
    if (n < 1 || k < 0) throw std::domain_error("leibnitz_closed_form requires n >= 1, k >= 0");
    const Residue inv = mod_inv(1 - floor_mod(t, m), m);
    const Residue tn_minus_1 = mod_pow(t, n, m) - Residue(1, m);

    // inv_pow[i] = (1-t)^(-i)
    std::vector<Residue> inv_pow(static_cast<std::size_t>(k) + 2, Residue(1, m));
    for (std::size_t i = 1; i < inv_pow.size(); ++i) inv_pow[i] = inv_pow[i - 1] * inv;

    Residue rhs = -(tn_minus_1 * falling_mod(k, k, m) * inv_pow[static_cast<std::size_t>(k) + 1]);
    for (Int i = 0; i < k; ++i) {
        if (n < k - i) continue;  // n^(k-i) = 0, and t's exponent would be negative
        rhs -= falling_mod(k, i, m) * falling_mod(n, k - i, m) * mod_pow(t, n - k + i, m) * inv_pow[static_cast<std::size_t>(i) + 1];
    }
    return rhs;
}

/// True when both sides of the Leibniz closed form agree modulo m.
inline bool leibnitz_identity_check(Int n, Int k, Int t, Int m) {
    return sum_direct(n, k, t, m) == leibnitz_closed_form(n, k, t, m);
}

/// S(n, k, alpha) mod p^ell through the Leibniz closed form, for
/// alpha != 1 (mod p) with alpha^n = 1 (mod p^ell) and p^ell | n. The result
/// is zero; callers compare it against sum_direct rather than assume it.
inline Residue claim1_vanishing(Int n, Int k, Int alpha, Int p, Int ell) {
    detail::require_prime(p);
    if (ell < 0) throw std::domain_error("claim1_vanishing requires ell >= 0");
    const Int pl = checked_pow(p, ell);
    if (n % pl != 0) {
        throw std::domain_error(std::to_string(pl) + " does not divide n = " + std::to_string(n));
    }
    if (floor_mod(alpha, p) == 1) throw std::domain_error("claim1_vanishing requires alpha != 1 (mod p)");
    if (mod_pow(alpha, n, pl).value() != 1 % pl) {
        throw std::domain_error("claim1_vanishing requires alpha^n = 1 (mod p^ell)");
    }
    return leibnitz_closed_form(n, k, alpha, pl);
}

/// The congruence S = ((n-1)^(k)/(k+1)) n (mod p^ell), ell = nu_p(n), checked
/// after multiplying through by k+1 at modulus p^(ell+e), e = nu_p(k+1).
struct Lemma2Report {
    Int p = 2;
    Valuation ell;  ///< nu_p(n)
    Valuation e;    ///< nu_p(k+1)
    Residue lhs_times_kp1;  ///< (k+1) S mod p^(ell+e)
    Residue rhs_times_kp1;  ///< (n-1)^(k) n mod p^(ell+e)
    bool congruent = false;
};

inline Lemma2Report lemma2_congruence(Int n, Int k, Int alpha, Int p) {
    detail::require_prime(p);
    if (n < 1 || k < 0) throw std::domain_error("lemma2_congruence requires n >= 1, k >= 0");
    if (floor_mod(alpha, p) != 1) throw std::domain_error("lemma2_congruence requires alpha = 1 (mod p)");
    Lemma2Report r;
    r.p = p;
    r.ell = nu_p(n, p);
    r.e = nu_p(k + 1, p);
    const Int m = checked_pow(p, r.ell.value() + r.e.value());
    r.lhs_times_kp1 = Residue(k + 1, m) * sum_direct(n, k, alpha, m);
    r.rhs_times_kp1 = falling_mod(n - 1, k, m) * Residue(n, m);
    r.congruent = r.lhs_times_kp1 == r.rhs_times_kp1;
    return r;
}

/// Valuations of the j >= 1 summands in the binomial expansion of S around
/// alpha = 1 + y:  y^j/j!  and  (n-1)^(k+j)/(k+j+1).
struct E4TermValuation {
    Int j = 0;
    Valuation y_power_over_factorial;  ///< nu_p(y^j / j!)
    Valuation falling_fraction;        ///< nu_p((n-1)^(k+j) / (k+j+1))
    bool y_bound_holds = false;        ///< y_power_over_factorial >= 1
    bool fraction_bound_holds = false; ///< falling_fraction >= -1
};

inline std::vector<E4TermValuation> e4_term_valuations(Int n, Int k, Int alpha, Int p, Int j_max) {
    detail::require_prime(p);
    if (n < 1 || k < 0) throw std::domain_error("e4_term_valuations requires n >= 1, k >= 0");
    if (floor_mod(alpha, p) != 1) throw std::domain_error("e4_term_valuations requires alpha = 1 (mod p)");
    if (j_max < 0 || (j_max > 0 && j_max > n - 1 - k)) {
        throw std::domain_error("e4_term_valuations requires 0 <= j_max <= n-1-k");
    }
    const Int y = alpha - 1;
    const Valuation nu_y = nu_p(y, p);
    std::vector<E4TermValuation> out;
    out.reserve(static_cast<std::size_t>(j_max));
    for (Int j = 1; j <= j_max; ++j) {
        E4TermValuation t;
        t.j = j;
        t.y_power_over_factorial =
            (nu_y.is_infinite() ? Valuation::infinity() : Valuation(j * nu_y.value())) - legendre(j, p);
        t.falling_fraction = falling_valuation(n - 1, k + j, p) - nu_p(k + j + 1, p);
        t.y_bound_holds = t.y_power_over_factorial >= Valuation(1);
        t.fraction_bound_holds = t.falling_fraction >= Valuation(-1);
        out.push_back(t);
    }
    return out;
}

}  // namespace rootdiff
