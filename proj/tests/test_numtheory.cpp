#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "oracles.hpp"
#include "rootdiff/numtheory.hpp"

namespace rootdiff {
namespace {

std::vector<std::pair<Int, Int>> as_pairs(const Factorization& f) {
    std::vector<std::pair<Int, Int>> out;
    for (const auto& pp : f) out.emplace_back(pp.prime, pp.exponent);
    return out;
}

TEST(Factorize, Examples) {
    EXPECT_TRUE(factorize(1).empty());
    EXPECT_EQ(as_pairs(factorize(12)), (std::vector<std::pair<Int, Int>>{{2, 2}, {3, 1}}));
    // Trial-division oracle: 360 = 2^3 3^2 5.
    EXPECT_EQ(as_pairs(factorize(360)), oracle::factorize(360));
    EXPECT_EQ(as_pairs(factorize(360)), (std::vector<std::pair<Int, Int>>{{2, 3}, {3, 2}, {5, 1}}));
}

TEST(Factorize, RejectsZero) { EXPECT_THROW(factorize(0), std::domain_error); }

TEST(Factorize, LargePrimeAndPrimeSquare) {
    EXPECT_EQ(as_pairs(factorize(2147483647)), (std::vector<std::pair<Int, Int>>{{2147483647, 1}}));
    EXPECT_EQ(as_pairs(factorize(65521LL * 65521LL)), (std::vector<std::pair<Int, Int>>{{65521, 2}}));
}

TEST(Factorize, RoundTripUpToOneMillion) {
    for (Int n = 1; n <= 1'000'000; ++n) {
        const auto f = factorize(n);
        ASSERT_EQ(f.recompose(), n) << n;
        for (std::size_t i = 0; i < f.size(); ++i) {
            ASSERT_GE(f.factors()[i].exponent, 1);
            if (i > 0) {
                ASSERT_LT(f.factors()[i - 1].prime, f.factors()[i].prime);
            }
        }
    }
}

TEST(Factorize, MatchesOracleSmall) {
    for (Int n = 1; n <= 5000; ++n) ASSERT_EQ(as_pairs(factorize(n)), oracle::factorize(n)) << n;
}

TEST(Factorization, RejectsMalformed) {
    EXPECT_THROW(Factorization({{3, 1}, {2, 1}}), std::domain_error);
    EXPECT_THROW(Factorization({{4, 1}}), std::domain_error);
    EXPECT_THROW(Factorization({{2, 0}}), std::domain_error);
}

TEST(Valuation, Examples) {
    EXPECT_EQ(nu_p(12, 2), Valuation(2));
    EXPECT_TRUE(nu_p(0, 3).is_infinite());
    // nu_5(7) - nu_5(50) by a divide-out loop.
    EXPECT_EQ(nu_p(Rational{7, 50}, 5), Valuation(*oracle::valuation(7, 5) - *oracle::valuation(50, 5)));
    EXPECT_EQ(nu_p(Rational{7, 50}, 5), Valuation(-2));
    EXPECT_EQ(nu_p(-24, 2), Valuation(3));
}

TEST(Valuation, RejectsNonPrime) {
    EXPECT_THROW(nu_p(12, 4), std::domain_error);
    EXPECT_THROW(nu_p(12, 1), std::domain_error);
    EXPECT_THROW(nu_p(Rational{1, 0}, 2), std::domain_error);
}

TEST(Valuation, InfinityOrdering) {
    const auto inf = Valuation::infinity();
    EXPECT_GT(inf, Valuation(1'000'000));
    EXPECT_LT(Valuation(-5), inf);
    EXPECT_EQ(inf, Valuation::infinity());
    EXPECT_TRUE((inf + Valuation(3)).is_infinite());
    EXPECT_TRUE((inf - Valuation(3)).is_infinite());
    EXPECT_THROW(Valuation(3) - inf, std::domain_error);
    EXPECT_THROW(inf.value(), std::domain_error);
    EXPECT_EQ(inf.to_string(), "inf");
}

TEST(Valuation, AdditiveOnProducts) {
    std::mt19937_64 rng(1234);
    std::uniform_int_distribution<Int> dist(-100000, 100000);
    for (Int p : {2, 3, 5, 7, 11, 101}) {
        for (int t = 0; t < 2000; ++t) {
            Int a = dist(rng), b = dist(rng);
            if (a == 0 || b == 0) continue;
            ASSERT_EQ(nu_p(a * b, p), nu_p(a, p) + nu_p(b, p)) << a << " " << b << " " << p;
        }
    }
}

TEST(Legendre, Examples) {
    EXPECT_EQ(legendre(0, 2), Valuation(0));
    EXPECT_EQ(legendre(10, 2), Valuation(oracle::factorial_valuation(10, 2)));
    EXPECT_EQ(legendre(10, 2), Valuation(8));
    for (Int p : oracle::primes_up_to(200)) EXPECT_EQ(legendre(p - 1, p), Valuation(0)) << p;
    EXPECT_THROW(legendre(5, 6), std::domain_error);
    EXPECT_THROW(legendre(-1, 2), std::domain_error);
}

TEST(Legendre, MatchesFactorByFactorValuation) {
    for (Int p : oracle::primes_up_to(50)) {
        Int running = 0;
        for (Int j = 0; j <= 5000; ++j) {
            if (j >= 2) running += *oracle::valuation(j, p);
            ASSERT_EQ(legendre(j, p), Valuation(running)) << j << " " << p;
            if (j >= 1) {
                ASSERT_LT(legendre(j, p), Valuation(j));
            }
        }
    }
}

TEST(ModPow, Examples) {
    EXPECT_EQ(mod_pow(5, 6, 6).value(), 1);
    EXPECT_EQ(mod_pow(7, 0, 13).value(), 1);
    EXPECT_EQ(mod_pow(7, 0, 1).value(), 0);
    EXPECT_EQ(mod_pow(2, 10, 1000).value(), 24);
    EXPECT_EQ(mod_pow(-2, 3, 7).value(), 6);
}

TEST(ModPow, MatchesRepeatedMultiplication) {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<Int> base(-1'000'000, 1'000'000);
    std::uniform_int_distribution<Int> mod(1, 1'000'000'007);
    for (int t = 0; t < 2000; ++t) {
        const Int b = base(rng), m = mod(rng);
        for (Int e = 0; e <= 64; e += 7) ASSERT_EQ(mod_pow(b, e, m).value(), oracle::naive_pow(b, e, m));
    }
}

TEST(ModPow, LargeModulusUses128BitProducts) {
    const Int m = (Int{1} << 61) - 1;  // Mersenne prime
    EXPECT_EQ(mod_pow(3, m - 1, m).value(), 1);
}

TEST(ModInv, Examples) {
    EXPECT_EQ(mod_inv(1, 17).value(), 1);
    EXPECT_EQ(mod_inv(1, 1).value(), 0);
    EXPECT_EQ(mod_inv(-1, 7).value(), 6);
    EXPECT_EQ(mod_inv(4, 9).value(), *oracle::inverse_by_search(4, 9));
    EXPECT_EQ(mod_inv(4, 9).value(), 7);
}

TEST(ModInv, NonUnitSignalsUnitRequired) {
    EXPECT_THROW(mod_inv(6, 9), unit_required_error);
    EXPECT_THROW(mod_inv(0, 5), unit_required_error);
}

TEST(ModInv, MatchesSearch) {
    for (Int m = 1; m <= 300; ++m) {
        for (Int a = -m; a < 2 * m; ++a) {
            const auto expect = oracle::inverse_by_search(a, m);
            if (expect) {
                ASSERT_EQ(mod_inv(a, m).value(), *expect) << a << " " << m;
            } else {
                ASSERT_THROW(mod_inv(a, m), unit_required_error) << a << " " << m;
            }
        }
    }
}

TEST(CrtCombine, Examples) {
    EXPECT_EQ(crt_combine({Residue(0, 2), Residue(1, 3)}), Residue(4, 6));
    EXPECT_EQ(crt_combine({Residue(11, 13)}), Residue(11, 13));
    EXPECT_EQ(crt_combine({Residue(2, 4), Residue(2, 9)}), Residue(*oracle::crt_by_search({{2, 4}, {2, 9}}), 36));
    EXPECT_EQ(crt_combine({Residue(2, 4), Residue(2, 9)}).value(), 2);
    EXPECT_EQ(crt_combine(std::span<const Residue>{}), Residue(0, 1));
}

TEST(CrtCombine, RejectsNonCoprime) {
    EXPECT_THROW(crt_combine({Residue(1, 4), Residue(1, 6)}), std::domain_error);
}

TEST(CrtCombine, MatchesExhaustiveSearch) {
    for (Int m1 = 1; m1 <= 100; ++m1) {
        for (Int m2 = 1; m1 * m2 <= 10'000; ++m2) {
            if (gcd(m1, m2) != 1) continue;
            for (Int r1 : {Int{0}, m1 / 2, m1 - 1}) {
                for (Int r2 : {Int{0}, m2 / 3, m2 - 1}) {
                    const auto x = crt_combine({Residue(r1, m1), Residue(r2, m2)});
                    ASSERT_EQ(x.modulus(), m1 * m2);
                    ASSERT_EQ(x.value() % m1, r1);
                    ASSERT_EQ(x.value() % m2, r2);
                }
            }
        }
    }
    for (Int m = 2; m <= 60; ++m) {
        for (Int r = 0; r < m; r += 5) {
            const std::vector<std::pair<Int, Int>> rs{{r % 3, 3}, {r % 7, 7}, {r, m}};
            if (gcd(m, 21) != 1) continue;
            EXPECT_EQ(crt_combine({Residue(r % 3, 3), Residue(r % 7, 7), Residue(r, m)}).value(),
                      *oracle::crt_by_search(rs));
        }
    }
}

TEST(Residue, NormalizesAndChecksModulus) {
    EXPECT_EQ(Residue(-1, 7).value(), 6);
    EXPECT_EQ(Residue(12345, 1).value(), 0);
    EXPECT_THROW(Residue(1, 0), std::domain_error);
    EXPECT_THROW(Residue(1, 5) + Residue(1, 6), std::domain_error);
    EXPECT_EQ(Residue(3, 7) - Residue(5, 7), Residue(5, 7));
    EXPECT_EQ(-Residue(0, 7), Residue(0, 7));
}

TEST(Residue, StaysReducedUnderRandomOps) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<Int> mod(1, max_modulus);
    std::uniform_int_distribution<Int> val(std::numeric_limits<Int>::min() / 2, std::numeric_limits<Int>::max() / 2);
    for (int t = 0; t < 5000; ++t) {
        const Int m = mod(rng);
        Residue a(val(rng), m), b(val(rng), m);
        for (const Residue& r : {a + b, a - b, a * b, -a}) {
            ASSERT_GE(r.value(), 0);
            ASSERT_LT(r.value(), m);
        }
    }
}

}  // namespace
}  // namespace rootdiff
