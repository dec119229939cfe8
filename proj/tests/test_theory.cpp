#include "ppzc/corr.hpp"
#include "ppzc/theory.hpp"
#include "ppzc/zcseq.hpp"

#include <gtest/gtest.h>

using namespace ppzc;

TEST(Theorem1, EightExample) {
    const auto q = theorem1_tc(8, 1, 2, 1, 1);
    EXPECT_EQ(q.tc, 4);
    EXPECT_FALSE(q.special_case);
    EXPECT_EQ(q.g3, 8);
    EXPECT_EQ(q.g2, 18);
    EXPECT_EQ(q.g1, 15);
    EXPECT_EQ(q.g3 * 64 + q.g2 * 16 + q.g1 * 4, 860);
    EXPECT_EQ(q.exponent_sum_mod_n, 4);
    EXPECT_EQ(q.c1_exponent, 4);
    EXPECT_TRUE(q.z_constant_one);
    EXPECT_TRUE(q.holds());
    EXPECT_EQ(q.c1_phase(), Phase(8, 16)); // W_8^{-4} = -1
}

TEST(Theorem1, SixSpecialCase) {
    const auto q = theorem1_tc(6, 1, 3, 2, 1);
    EXPECT_TRUE(q.special_case);
    EXPECT_EQ(q.tc, 1);
    EXPECT_TRUE(q.holds());
}

TEST(Theorem1, Errors) {
    EXPECT_THROW(theorem1_tc(8, 1, 2, 2, 1), InvalidQpp);
    EXPECT_THROW(theorem1_tc(8, 1, 2, 1, 8), DZero);
    EXPECT_THROW(theorem1_tc(8, 1, 2, 1, 0), DZero);
    EXPECT_THROW(theorem1_tc(8, 2, 2, 1, 1), BadRoot);
}

TEST(Theorem1, ConsistentWithPacf) {
    for (i64 n = 2; n <= 32; ++n) {
        for (const auto& p : enumerate_qpps(n, false)) {
            for (i64 u : units(n)) {
                bool all = true;
                for (i64 d = 1; d < n; ++d) all = all && theorem1_tc(n, u, p.coeff(2), p.coeff(1), d).holds();
                if (all) {
                    EXPECT_TRUE(is_cazac(interleave(zc_phases(n, u, 0), p))) << n << " " << p.to_string();
                }
                EXPECT_TRUE(all) << n << " u=" << u << " " << p.to_string();
            }
        }
    }
}

TEST(Lemma1, Examples) {
    EXPECT_TRUE(check_lemma1(6, 3, 2, 2, 1));
    EXPECT_TRUE(check_lemma1(8, 2, 1, 3, 2));
    EXPECT_THROW(check_lemma1(6, 3, 2, 1, 1), CaseNotCovered);
    EXPECT_THROW(check_lemma1(8, 2, 2, 1, 1), InvalidQpp);
}

TEST(Lemma2, Examples) {
    EXPECT_TRUE(check_lemma2(8, 2, 1, 2));
    const auto g = g_values(8, 2, 1, 2);
    EXPECT_EQ(static_cast<long long>(g.g3), 16);
    EXPECT_EQ(static_cast<long long>(g.g2), 60);
    EXPECT_EQ(static_cast<long long>(g.g1), 90);
    EXPECT_TRUE(check_lemma2(9, 3, 1, 1));
    EXPECT_THROW(check_lemma2(6, 3, 2, 1), HypothesisNotMet);
}

TEST(Lemma3, Examples) {
    EXPECT_TRUE(check_lemma3(6, 3, 2, 1));
    const auto g = g_values(6, 3, 2, 1);
    EXPECT_EQ(static_cast<long long>(g.g3), 18);
    EXPECT_EQ(static_cast<long long>(2 * g.g2), 90);
    EXPECT_EQ(static_cast<long long>(g.g2 + g.g1) % 6, 1);
    EXPECT_TRUE(check_lemma3(6, 3, 2, 2));
    EXPECT_THROW(check_lemma3(8, 2, 1, 1), HypothesisNotMet);
}

TEST(Lemma4, Examples) {
    EXPECT_TRUE(check_lemma4(8, 1, 6));
    EXPECT_TRUE(check_lemma4(32, 1, 6));
    EXPECT_FALSE(check_lemma4(5, 1, 1)); // 1 + 2*2 = 0 mod 5
    EXPECT_THROW(check_lemma4(8, 2, 6), BadRoot);
}

TEST(Sweep, NoCounterexamplesUpTo40) {
    for (const auto& s : sweep_theory(40, 2)) {
        EXPECT_TRUE(s.passed()) << s.name << " " << s.first_failure;
        EXPECT_GT(s.cases, 0u) << s.name;
    }
}

TEST(Sweep, WorkerInvariant) {
    const auto a = sweep_theory(24, 1);
    const auto b = sweep_theory(24, 3);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].cases, b[i].cases);
        EXPECT_EQ(a[i].not_covered, b[i].not_covered);
    }
}
