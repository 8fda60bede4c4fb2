#pragma once

// Exact integer and modular primitives.
//
// All integers are 64-bit. Moduli must stay below 2^62 so that a product of
// two reduced values fits in an unsigned 128-bit intermediate; no
// arbitrary-precision arithmetic is used anywhere.

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rootdiff {

using Int = std::int64_t;

inline constexpr Int max_modulus = Int{1} << 62;

/// Raised when an inverse is requested for a non-unit.
class unit_required_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Mathematical floor-mod: result in [0, m) for any sign of a.
constexpr Int floor_mod(Int a, Int m) {
    Int r = a % m;
    return r < 0 ? r + m : r;
}

constexpr Int gcd(Int a, Int b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

/// Deterministic trial division.
constexpr bool is_prime(Int n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (Int d = 5; d <= n / d; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

namespace detail {

inline void require_modulus(Int m) {
    if (m < 1 || m > max_modulus) {
        throw std::domain_error("modulus out of range: " + std::to_string(m));
    }
}

inline void require_prime(Int p) {
    if (!is_prime(p)) {
        throw std::domain_error("not a prime: " + std::to_string(p));
    }
}

// a, b already reduced into [0, m).
inline Int mul_reduced(Int a, Int b, Int m) {
    if (m <= (Int{1} << 32)) {
        return static_cast<Int>(static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(b) %
                                static_cast<std::uint64_t>(m));
    }
    using u128 = unsigned __int128;
    return static_cast<Int>(static_cast<u128>(a) * static_cast<u128>(b) % static_cast<u128>(m));
}

inline Int add_reduced(Int a, Int b, Int m) {
    Int s = a + b;  // < 2^63 since both < 2^62
    return s >= m ? s - m : s;
}

}  // namespace detail

/// Checked p^e; throws std::overflow_error past max_modulus.
inline Int checked_pow(Int p, Int e) {
    Int r = 1;
    for (Int i = 0; i < e; ++i) {
        if (r > max_modulus / p) {
            throw std::overflow_error("power exceeds modulus bound");
        }
        r *= p;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Residue

/// A residue class: value in [0, modulus), modulus >= 1.
class Residue {
public:
    Residue() = default;

    Residue(Int value, Int modulus) : modulus_(modulus) {
        detail::require_modulus(modulus);
        value_ = floor_mod(value, modulus);
    }

    Int value() const noexcept { return value_; }
    Int modulus() const noexcept { return modulus_; }
    bool is_zero() const noexcept { return value_ == 0; }

    friend Residue operator+(Residue a, const Residue& b) {
        a.check_same(b);
        a.value_ = detail::add_reduced(a.value_, b.value_, a.modulus_);
        return a;
    }
    friend Residue operator-(Residue a, const Residue& b) {
        a.check_same(b);
        a.value_ = detail::add_reduced(a.value_, b.value_ == 0 ? 0 : a.modulus_ - b.value_, a.modulus_);
        return a;
    }
    friend Residue operator-(Residue a) {
        a.value_ = a.value_ == 0 ? 0 : a.modulus_ - a.value_;
        return a;
    }
    friend Residue operator*(Residue a, const Residue& b) {
        a.check_same(b);
        a.value_ = detail::mul_reduced(a.value_, b.value_, a.modulus_);
        return a;
    }
    Residue& operator+=(const Residue& o) { return *this = *this + o; }
    Residue& operator-=(const Residue& o) { return *this = *this - o; }
    Residue& operator*=(const Residue& o) { return *this = *this * o; }

    friend bool operator==(const Residue&, const Residue&) = default;

    friend std::ostream& operator<<(std::ostream& os, const Residue& r) {
        return os << r.value_ << " mod " << r.modulus_;
    }

private:
    void check_same(const Residue& o) const {
        if (modulus_ != o.modulus_) {
            throw std::domain_error("residue moduli differ");
        }
    }

    Int value_ = 0;
    Int modulus_ = 1;
};

// ---------------------------------------------------------------------------
// Valuation

/// A p-adic valuation: a finite integer or +infinity (the valuation of 0).
/// Infinity compares greater than every finite value.
class Valuation {
public:
    constexpr Valuation() = default;
    constexpr Valuation(Int v) : value_(v) {}  // NOLINT(google-explicit-constructor)

    static constexpr Valuation infinity() {
        Valuation v;
        v.value_.reset();
        return v;
    }

    constexpr bool is_infinite() const noexcept { return !value_.has_value(); }
    constexpr bool is_finite() const noexcept { return value_.has_value(); }

    /// Finite value; throws on infinity.
    constexpr Int value() const {
        if (!value_) throw std::domain_error("infinite valuation has no finite value");
        return *value_;
    }

    friend constexpr Valuation operator+(const Valuation& a, const Valuation& b) {
        if (a.is_infinite() || b.is_infinite()) return infinity();
        return Valuation(*a.value_ + *b.value_);
    }

    /// infinity - finite = infinity; subtracting infinity is undefined.
    friend constexpr Valuation operator-(const Valuation& a, const Valuation& b) {
        if (b.is_infinite()) throw std::domain_error("cannot subtract an infinite valuation");
        if (a.is_infinite()) return infinity();
        return Valuation(*a.value_ - *b.value_);
    }

    friend constexpr bool operator==(const Valuation&, const Valuation&) = default;

    friend constexpr std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
        if (a.is_infinite() || b.is_infinite()) {
            return a.is_finite() ? std::strong_ordering::less
                                 : (b.is_finite() ? std::strong_ordering::greater : std::strong_ordering::equal);
        }
        return *a.value_ <=> *b.value_;
    }

    std::string to_string() const { return value_ ? std::to_string(*value_) : std::string("inf"); }

    friend std::ostream& operator<<(std::ostream& os, const Valuation& v) { return os << v.to_string(); }

private:
    std::optional<Int> value_{0};
};

/// Nonzero-denominator rational, unreduced.
struct Rational {
    Int numerator = 0;
    Int denominator = 1;
};

// ---------------------------------------------------------------------------
// Factorization

struct PrimePower {
    Int prime = 0;
    Int exponent = 0;

    Int value() const { return checked_pow(prime, exponent); }

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Primes strictly ascending, exponents >= 1; empty represents 1.
class Factorization {
public:
    Factorization() = default;
    explicit Factorization(std::vector<PrimePower> factors) : factors_(std::move(factors)) {
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            const auto& f = factors_[i];
            if (!is_prime(f.prime) || f.exponent < 1 || (i > 0 && factors_[i - 1].prime >= f.prime)) {
                throw std::domain_error("malformed factorization");
            }
        }
    }

    std::span<const PrimePower> factors() const noexcept { return factors_; }
    std::size_t size() const noexcept { return factors_.size(); }
    bool empty() const noexcept { return factors_.empty(); }
    auto begin() const noexcept { return factors_.begin(); }
    auto end() const noexcept { return factors_.end(); }

    /// Product of prime^exponent.
    Int recompose() const {
        Int n = 1;
        for (const auto& f : factors_) {
            Int pe = f.value();
            if (n > max_modulus / pe) throw std::overflow_error("factorization product overflow");
            n *= pe;
        }
        return n;
    }

    friend bool operator==(const Factorization&, const Factorization&) = default;

private:
    std::vector<PrimePower> factors_;
};

/// Trial division up to sqrt(n).
inline Factorization factorize(Int n) {
    if (n < 1) {
        throw std::domain_error("factorize requires n >= 1, got " + std::to_string(n));
    }
    std::vector<PrimePower> out;
    auto take = [&](Int p) {
        Int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) out.push_back({p, e});
    };
    take(2);
    take(3);
    for (Int d = 5; d <= n / d; d += 6) {
        take(d);
        take(d + 2);
    }
    if (n > 1) out.push_back({n, 1});
    return Factorization(std::move(out));
}

// ---------------------------------------------------------------------------
// Valuations

inline Valuation nu_p(Int x, Int p) {
    detail::require_prime(p);
    if (x == 0) return Valuation::infinity();
    Int e = 0;
    // Divide on the negative side so INT64_MIN is handled.
    Int y = x > 0 ? -x : x;
    while (y % p == 0) {
        y /= p;
        ++e;
    }
    return e;
}

inline Valuation nu_p(const Rational& r, Int p) {
    if (r.denominator == 0) throw std::domain_error("rational with zero denominator");
    return nu_p(r.numerator, p) - nu_p(r.denominator, p);
}

/// Legendre's formula: valuation of j! at p.
inline Valuation legendre(Int j, Int p) {
    detail::require_prime(p);
    if (j < 0) throw std::domain_error("legendre requires j >= 0");
    Int total = 0;
    for (Int q = j / p; q > 0; q /= p) total += q;
    return total;
}

// ---------------------------------------------------------------------------
// Modular arithmetic

inline Residue mod_pow(Int base, Int exp, Int m) {
    detail::require_modulus(m);
    if (exp < 0) throw std::domain_error("mod_pow requires a nonnegative exponent");
    Int b = floor_mod(base, m);
    Int r = 1 % m;
    while (exp > 0) {
        if (exp & 1) r = detail::mul_reduced(r, b, m);
        b = detail::mul_reduced(b, b, m);
        exp >>= 1;
    }
    return Residue(r, m);
}

/// Extended Euclid; throws unit_required_error when gcd(a, m) != 1.
inline Residue mod_inv(Int a, Int m) {
    detail::require_modulus(m);
    Int r0 = m, r1 = floor_mod(a, m);
    Int s0 = 0, s1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        r0 = std::exchange(r1, r0 - q * r1);
        s0 = std::exchange(s1, s0 - q * s1);
    }
    if (r0 != 1 && m != 1) {
        throw unit_required_error(std::to_string(a) + " is not a unit modulo " + std::to_string(m));
    }
    return Residue(s0, m);
}

/// Combines residues with pairwise coprime moduli into one residue modulo
/// their product.
inline Residue crt_combine(std::span<const Residue> residues) {
    Int value = 0;
    Int modulus = 1;
    for (const auto& r : residues) {
        if (gcd(modulus, r.modulus()) != 1) {
            throw std::domain_error("crt_combine requires pairwise coprime moduli");
        }
        if (modulus > max_modulus / r.modulus()) {
            throw std::overflow_error("crt_combine modulus product overflow");
        }
        // value + modulus * t  with  t = (r - value) * modulus^{-1}  mod r.modulus()
        Int mi = r.modulus();
        Int diff = floor_mod(r.value() - value, mi);
        Int t = detail::mul_reduced(diff, mod_inv(modulus, mi).value(), mi);
        Int next = modulus * mi;
        value = detail::add_reduced(value, detail::mul_reduced(modulus % next, t, next), next);
        modulus = next;
    }
    return Residue(value, modulus);
}

inline Residue crt_combine(std::initializer_list<Residue> residues) {
    return crt_combine(std::span<const Residue>(residues.begin(), residues.size()));
}

}  // namespace rootdiff
