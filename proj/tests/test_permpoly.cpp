#include "oracle.hpp"
#include "ppzc/permpoly.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace ppzc;

namespace {

std::vector<i64> tab(const PermArray& p) { return p.table(); }

std::set<std::vector<i64>> as_set(const std::vector<PermPoly>& ps) {
    std::set<std::vector<i64>> s;
    for (const auto& p : ps) s.insert(p.coeffs());
    return s;
}

} // namespace

TEST(Eval, Examples) {
    EXPECT_EQ(eval(PermPoly(8, {0, 1, 2}), 3), 5);
    EXPECT_EQ(eval(PermPoly(32, {0, 1, 2, 8}), 1), 11);
    const PermPoly id(13, {0, 1});
    for (i64 k = 0; k < 13; ++k) EXPECT_EQ(eval(id, k), k);
    EXPECT_EQ(eval(id, 20), 7);
}

TEST(PermutationOf, Examples) {
    EXPECT_EQ(tab(permutation_of(8, {0, 1, 2})), (std::vector<i64>{0, 3, 2, 5, 4, 7, 6, 1}));
    EXPECT_EQ(tab(permutation_of(5, {1, 3})), (std::vector<i64>{1, 4, 2, 0, 3}));
}

TEST(PermutationOf, ReportsFirstCollision) {
    try {
        permutation_of(4, {0, 0, 1});
        FAIL() << "expected NotBijective";
    } catch (const NotBijective& e) {
        EXPECT_EQ(e.first(), 0);
        EXPECT_EQ(e.second(), 2);
        EXPECT_EQ(e.value(), 0);
    }
}

TEST(PermArray, RejectsNonPermutation) {
    EXPECT_THROW(PermArray({0, 0, 1}), PreconditionError);
    EXPECT_THROW(PermArray({0, 3, 1}), PreconditionError);
}

TEST(QppValidity, Examples) {
    EXPECT_TRUE(is_qpp_valid(8, 2, 1));
    EXPECT_FALSE(is_qpp_valid(8, 2, 2));
    for (i64 f2 = 1; f2 < 7; ++f2) {
        for (i64 f1 = 0; f1 < 7; ++f1) EXPECT_FALSE(is_qpp_valid(7, f2, f1));
    }
}

TEST(QppValidity, EqualsBijectivityUpTo64) {
    for (i64 n = 2; n <= 64; ++n) {
        for (i64 f2 = 1; f2 < n; ++f2) {
            for (i64 f1 = 0; f1 < n; ++f1) {
                const bool bij = oracle::bijective(oracle::poly_table(n, {0, f1, f2}));
                ASSERT_EQ(is_qpp_valid(n, f2, f1), bij) << "N=" << n << " f2=" << f2 << " f1=" << f1;
            }
        }
    }
}

TEST(Irreducible, Examples) {
    EXPECT_TRUE(is_irreducible_qpp(8, 2));
    EXPECT_FALSE(is_irreducible_qpp(8, 4));
    EXPECT_FALSE(is_irreducible_qpp(6, 3));
}

TEST(Irreducible, MatchesNoLinearEquivalent) {
    // A QPP is reducible exactly when some LPP gives the same permutation.
    for (i64 n = 2; n <= 40; ++n) {
        std::set<std::vector<i64>> lpp;
        for (i64 f1 = 0; f1 < n; ++f1) {
            for (i64 f0 = 0; f0 < n; ++f0) {
                auto t = oracle::poly_table(n, {f0, f1});
                if (oracle::bijective(t)) lpp.insert(t);
            }
        }
        for (const auto& q : enumerate_qpps(n, false)) {
            const bool linear = lpp.count(q.table().table()) > 0;
            EXPECT_EQ(is_irreducible_qpp(n, q.coeff(2)), !linear) << "N=" << n << " " << q.to_string();
        }
    }
}

TEST(EnumerateQpps, Counts) {
    EXPECT_EQ(enumerate_qpps(8, false).size(), 12u);
    EXPECT_TRUE(enumerate_qpps(7, false).empty());
    const auto q25 = enumerate_qpps(25, false);
    EXPECT_EQ(q25.size(), 80u);
    for (const auto& q : q25) {
        EXPECT_EQ(q.coeff(2) % 5, 0);
        EXPECT_NE(q.coeff(1) % 5, 0);
    }
    EXPECT_EQ(enumerate_qpps(8, true).size(), 96u);
}

TEST(EnumerateQpps, CanonicalOrder) {
    const auto qs = enumerate_qpps(16, true);
    for (std::size_t i = 1; i < qs.size(); ++i) {
        const auto key = [](const PermPoly& p) { return std::tuple(p.coeff(2), p.coeff(1), p.coeff(0)); };
        EXPECT_LT(key(qs[i - 1]), key(qs[i]));
    }
}

TEST(EnumerateCpps, TableCounts) {
    EXPECT_EQ(enumerate_cpps(3, true).size(), 12u);
    EXPECT_EQ(enumerate_cpps(7, true).size(), 0u);
    EXPECT_EQ(enumerate_cpps(5, true).size(), 100u);
    EXPECT_THROW(enumerate_cpps(65, true), CapExceeded);
}

TEST(EnumerateCpps, MatchesBruteForce) {
    for (i64 n = 2; n <= 12; ++n) {
        std::set<std::vector<i64>> brute;
        for (i64 f3 = 1; f3 < n; ++f3) {
            for (i64 f2 = 0; f2 < n; ++f2) {
                for (i64 f1 = 0; f1 < n; ++f1) {
                    for (i64 f0 = 0; f0 < n; ++f0) {
                        if (oracle::bijective(oracle::poly_table(n, {f0, f1, f2, f3}))) brute.insert({f0, f1, f2, f3});
                    }
                }
            }
        }
        EXPECT_EQ(as_set(enumerate_cpps(n, true)), brute) << n;
    }
}

TEST(EnumerateCpps, WorkerInvariant) {
    for (i64 n : {9, 16, 20}) {
        const auto a = enumerate_cpps(n, true, kDefaultPolyCap, 1);
        const auto b = enumerate_cpps(n, true, kDefaultPolyCap, 4);
        ASSERT_EQ(a.size(), b.size());
        for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].coeffs(), b[i].coeffs());
    }
}

TEST(Dedup, TableCounts) {
    EXPECT_EQ(dedup_permutations(enumerate_cpps(6, true)).size(), 12u);
    EXPECT_EQ(dedup_permutations(enumerate_cpps(9, true)).size(), 324u);
    const PermPoly k(6, {0, 1});
    EXPECT_EQ(dedup_permutations({k, PermPoly(6, {0, 1, 0})}).size(), 1u);
}

TEST(Dedup, SmallestGeneratorAndIdempotence) {
    const auto cpps = enumerate_cpps(8, true);
    const auto uniq = dedup_permutations(cpps);
    for (const auto& u : uniq) {
        for (const auto& p : cpps) {
            if (p.table() == u.perm) {
                EXPECT_FALSE(detail::coeffs_less(p.coeffs(), u.generator.coeffs()));
            }
        }
        EXPECT_EQ(u.generator.table(), u.perm);
    }
    std::vector<PermPoly> gens;
    for (const auto& u : uniq) gens.push_back(u.generator);
    auto reversed = gens;
    std::reverse(reversed.begin(), reversed.end());
    const auto again = dedup_permutations(gens);
    const auto rev = dedup_permutations(reversed);
    ASSERT_EQ(again.size(), uniq.size());
    ASSERT_EQ(rev.size(), uniq.size());
    for (std::size_t i = 0; i < uniq.size(); ++i) {
        EXPECT_EQ(again[i].perm, uniq[i].perm);
        EXPECT_EQ(rev[i].perm, uniq[i].perm);
    }
}

TEST(Invert, Examples) {
    EXPECT_EQ(tab(invert_permutation(PermArray({0, 3, 2, 5, 4, 7, 6, 1}))), (std::vector<i64>{0, 7, 2, 1, 4, 3, 6, 5}));
    EXPECT_EQ(invert_permutation(PermArray::identity(9)), PermArray::identity(9));
    EXPECT_EQ(invert_permutation(PermArray({1, 4, 2, 0, 3})), permutation_of(5, {3, 2}));
}

TEST(PolynomialInverses, CubicAtThirtyTwo) {
    const PermPoly cpp(32, {0, 1, 2, 8});
    EXPECT_EQ(as_set(polynomial_inverses(cpp, 2)), (std::set<std::vector<i64>>{{0, 1, 6}, {0, 17, 22}}));
    const PermPoly cpp2(32, {0, 1, 0, 2});
    EXPECT_TRUE(polynomial_inverses(cpp2, 2).empty());
    EXPECT_EQ(as_set(polynomial_inverses(cpp2, 3)),
              (std::set<std::vector<i64>>{{0, 17, 0, 10}, {0, 1, 16, 10}, {0, 1, 0, 26}, {0, 17, 16, 26}}));
}

TEST(PolynomialInverses, IdentityContainsK) {
    for (int d = 1; d <= 3; ++d) {
        const auto inv = polynomial_inverses(PermPoly(12, {0, 1}), d);
        EXPECT_TRUE(as_set(inv).count({0, 1})) << d;
    }
}

TEST(PolynomialInverses, ComposeToIdentityAndMatchBruteForce) {
    for (i64 n : {8, 9, 12, 16}) {
        for (const auto& q : enumerate_qpps(n, true)) {
            const auto inv = polynomial_inverses(q, 2);
            std::set<std::vector<i64>> brute;
            const auto target = invert_permutation(q.table()).table();
            for (i64 h2 = 0; h2 < n; ++h2) {
                for (i64 h1 = 0; h1 < n; ++h1) {
                    for (i64 h0 = 0; h0 < n; ++h0) {
                        if (oracle::poly_table(n, {h0, h1, h2}) == target) {
                            std::vector<i64> c{h0, h1, h2};
                            while (c.size() > 1 && c.back() == 0) c.pop_back();
                            brute.insert(c);
                        }
                    }
                }
            }
            ASSERT_EQ(as_set(inv), brute) << "N=" << n << " " << q.to_string();
            for (const auto& h : inv) EXPECT_EQ(compose(h.table(), q.table()), PermArray::identity(n));
        }
    }
}

TEST(PolynomialInverses, RejectsBadDegree) {
    EXPECT_THROW(polynomial_inverses(PermPoly(8, {0, 1}), 0), PreconditionError);
    EXPECT_THROW(polynomial_inverses(PermPoly(8, {0, 1}), 5), PreconditionError);
}

TEST(PermPoly, ToString) {
    EXPECT_EQ(PermPoly(32, {0, 1, 2, 8}).to_string(), "8k^3+2k^2+k");
    EXPECT_EQ(PermPoly(5, {3, 2}).to_string(), "2k+3");
}
