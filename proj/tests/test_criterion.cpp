#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "rootdiff/criterion.hpp"

namespace rootdiff {
namespace {

TEST(Predict, Examples) {
    auto v = theorem1_predict(6, 2, 5);
    EXPECT_TRUE(v.vanishes_predicted);
    EXPECT_EQ(v.clauses, (ClauseSet{Clause::c}));
    ASSERT_TRUE(v.c_witness.has_value());
    EXPECT_EQ(v.c_witness->q, 3);
    EXPECT_FALSE(v.c_witness->q_not_dividing_n);
    EXPECT_TRUE(v.c_witness->alpha_not_one_mod_q);

    // Oracle: S(4,3,1) = 6 = 2 (mod 4).
    EXPECT_EQ(oracle::mod(oracle::derivative_sum(4, 3, 1), 4), 2);
    v = theorem1_predict(4, 3, 1);
    EXPECT_FALSE(v.vanishes_predicted);
    EXPECT_TRUE(v.clauses.empty());

    // Oracle: S(7,5,1) = 120 + 720 = 840 = 0 (mod 7).
    EXPECT_EQ(oracle::derivative_sum(7, 5, 1), 840);
    v = theorem1_predict(7, 5, 1);
    EXPECT_TRUE(v.vanishes_predicted);
    EXPECT_EQ(v.clauses, (ClauseSet{Clause::a}));

    for (Int k = 0; k <= 40; ++k) {
        for (Int a = -5; a <= 5; ++a) EXPECT_TRUE(theorem1_predict(1, k, a).vanishes_predicted) << k << " " << a;
    }
}

TEST(Predict, ClausesAreExclusiveAndMatchDefinition) {
    for (Int n = 1; n <= 100; ++n) {
        for (Int k = 0; k <= 40; ++k) {
            for (Int a = -3; a <= 10; ++a) {
                const auto v = theorem1_predict(n, k, a);
                const Int q = k + 1;
                ASSERT_EQ(v.vanishes_predicted, !v.clauses.empty());
                ASSERT_EQ(v.clauses.contains(Clause::a), q != 4 && !oracle::is_prime(q));
                ASSERT_EQ(v.clauses.contains(Clause::b), q == 4 && n % 4 != 0);
                ASSERT_EQ(v.clauses.contains(Clause::c),
                          oracle::is_prime(q) && (n % q != 0 || ((a % q) + q) % q != 1));
                ASSERT_LE(v.clauses.to_vector().size(), 1u);
                ASSERT_EQ(v.vanishes_predicted, oracle::criterion(n, k, a));
            }
        }
    }
}

TEST(Predict, ClauseAIndependentOfNAndAlpha) {
    for (Int k : {0, 5, 7, 8, 9, 11, 13, 14, 15}) {
        for (Int n = 1; n <= 60; ++n) {
            for (Int a = 0; a < n; ++a) ASSERT_EQ(theorem1_predict(n, k, a).clauses, (ClauseSet{Clause::a}));
        }
    }
}

TEST(Predict, InvariantUnderShiftByN) {
    for (Int n = 1; n <= 80; ++n) {
        for (Int k = 0; k <= 12; ++k) {
            for (Int a = -n; a < 2 * n; ++a) {
                const auto v = theorem1_predict(n, k, a);
                const auto w = theorem1_predict(n, k, a + n);
                ASSERT_EQ(v.vanishes_predicted, w.vanishes_predicted);
                ASSERT_EQ(v.clauses, w.clauses);
            }
        }
    }
}

TEST(Oracle, Examples) {
    EXPECT_TRUE(sum_vanishes_oracle(6, 2, 5));
    EXPECT_EQ(oracle::mod(oracle::derivative_sum(5, 4, 1), 5), 4);
    EXPECT_FALSE(sum_vanishes_oracle(5, 4, 1));
    for (Int n = 1; n <= 10; ++n) {
        for (Int k = n; k <= n + 3; ++k) EXPECT_TRUE(sum_vanishes_oracle(n, k, 7));
    }
}

TEST(Roots, Examples) {
    EXPECT_EQ(roots_of_unity(1).roots, std::vector<Int>{0});
    EXPECT_EQ(roots_of_unity(6).roots, oracle::roots_by_search(6));
    EXPECT_EQ(roots_of_unity(6).roots, (std::vector<Int>{1, 5}));
    for (Int p : oracle::primes_up_to(300)) EXPECT_EQ(roots_of_unity(p).roots, std::vector<Int>{1}) << p;
    EXPECT_TRUE(roots_of_unity(12).contains(-1));
    EXPECT_THROW(roots_of_unity(0), std::domain_error);
}

TEST(Roots, MatchSearchAndFormGroup) {
    for (Int n = 1; n <= 1000; ++n) {
        const auto rs = roots_of_unity(n);
        ASSERT_EQ(rs.roots, oracle::roots_by_search(n)) << n;
        ASSERT_TRUE(rs.contains(1 % n));
        const std::set<Int> members(rs.roots.begin(), rs.roots.end());
        for (Int a : rs.roots) {
            ASSERT_TRUE(members.count(mod_pow(a, n - 1, n).value())) << n << " " << a;
            ASSERT_EQ((Residue(a, n) * mod_pow(a, n - 1, n)).value(), 1 % n);
            for (Int b : rs.roots) ASSERT_TRUE(members.count(a * b % n)) << n << " " << a << " " << b;
        }
    }
}

TEST(Roots, OddWhenFourDividesN) {
    for (Int n = 4; n <= 300; n += 4) {
        for (Int a : roots_of_unity(n).roots) ASSERT_EQ(a % 2, 1) << n << " " << a;
    }
}

TEST(Explain, Examples) {
    auto r = explain(6, 2, 5);
    EXPECT_TRUE(r.agree);
    EXPECT_TRUE(r.hypothesis_ok);
    EXPECT_EQ(r.oracle_residue, 0);
    EXPECT_EQ(r.verdict.clauses, (ClauseSet{Clause::c}));

    // 4^6 = 4 (mod 6): hypothesis fails.
    EXPECT_EQ(oracle::naive_pow(4, 6, 6), 4);
    r = explain(6, 2, 4);
    EXPECT_FALSE(r.hypothesis_ok);

    r = explain(4, 3, 1);
    EXPECT_TRUE(r.agree);
    EXPECT_EQ(r.oracle_residue, 2);
    EXPECT_TRUE(r.verdict.clauses.empty());
}

TEST(Equivalence, AgreesWithOracleOnRoots) {
    for (Int n = 1; n <= 80; ++n) {
        for (Int a : roots_of_unity(n).roots) {
            for (Int k = 0; k <= 14; ++k) {
                ASSERT_EQ(theorem1_predict(n, k, a).vanishes_predicted, sum_vanishes_oracle(n, k, a))
                    << n << " " << k << " " << a;
                ASSERT_EQ(sum_vanishes_oracle(n, k, a), oracle::derivative_sum_mod(n, k, a, n) == 0);
            }
        }
    }
}

TEST(ClauseSet, Rendering) {
    EXPECT_EQ(ClauseSet{}.to_string(), "{}");
    EXPECT_EQ((ClauseSet{Clause::c, Clause::a}).to_string(), "{a,c}");
}

}  // namespace
}  // namespace rootdiff
