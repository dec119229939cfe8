#include "oracle.hpp"
#include "ppzc/corr.hpp"
#include "ppzc/equiv.hpp"
#include "ppzc/zcseq.hpp"

#include <gtest/gtest.h>

#include <random>

#include <algorithm>
#include <numeric>

using namespace ppzc;

namespace {

PhaseSeq ones(i64 n) { return PhaseSeq(n, std::vector<i64>(static_cast<std::size_t>(n), 0)); }

} // namespace

TEST(Pacf, ZadoffChuIsIdeal) {
    const auto r = pacf(zc_phases(16, 1, 0)).report;
    EXPECT_TRUE(r.is_cazac);
    EXPECT_LE(r.max_sidelobe, 1e-9);
    EXPECT_NEAR(r.peak, 16.0, 1e-12);
}

TEST(Pacf, AllOnesIsNotCazac) {
    const auto res = pacf(ones(9));
    for (const auto& t : res.theta) EXPECT_NEAR(std::abs(t), 9.0, 1e-12);
    EXPECT_FALSE(res.report.is_cazac);
    EXPECT_NEAR(res.report.max_sidelobe, 1.0, 1e-12);
}

TEST(Pacf, CubicInterleaveAtThirtyTwo) {
    EXPECT_TRUE(is_cazac(interleave(zc_phases(32, 1, 0), PermPoly(32, {0, 1, 2, 8}))));
    EXPECT_TRUE(is_cazac(interleave(zc_phases(32, 1, 0), PermPoly(32, {0, 1, 0, 2}))));
}

TEST(Pacf, PeakAndConjugateSymmetryOnArbitraryPhases) {
    std::mt19937_64 rng(7);
    for (i64 n = 1; n <= 96; n += 5) {
        std::uniform_int_distribution<i64> pick(0, 2 * n - 1);
        std::vector<i64> e(static_cast<std::size_t>(n));
        for (auto& v : e) v = pick(rng);
        const auto th = pacf(PhaseSeq(n, e)).theta;
        EXPECT_NEAR(th[0].real(), static_cast<double>(n), 1e-12 * static_cast<double>(n));
        EXPECT_NEAR(th[0].imag(), 0.0, 1e-12 * static_cast<double>(n));
        for (i64 d = 1; d < n; ++d) {
            EXPECT_LT(std::abs(th[static_cast<std::size_t>(n - d)] - std::conj(th[static_cast<std::size_t>(d)])),
                      1e-12 * static_cast<double>(n));
        }
        EXPECT_NEAR(pacf(PhaseSeq(n, e)).report.max_sidelobe, oracle::max_sidelobe(e, n), 1e-12);
    }
}

TEST(Pccf, EqualsPacfOnSelfAndChecksLength) {
    const auto x = interleave(zc_phases(20, 3, 1), PermPoly(20, {0, 1, 10}));
    const auto a = pacf(x).theta;
    const auto b = pccf(x, x);
    for (std::size_t d = 0; d < a.size(); ++d) EXPECT_LT(std::abs(a[d] - b[d]), 1e-12);
    EXPECT_THROW(pccf(x, zc_phases(21, 1, 0)), LengthMismatch);
}

TEST(Pccf, ThirtyTwoPairOrthogonalAtZeroLag) {
    const auto x = zc_phases(32, 1, 0);
    const auto t = pccf(interleave(x, PermPoly(32, {0, 1, 2})), interleave(x, PermPoly(32, {0, 3, 2})));
    EXPECT_LE(std::abs(t[0]) / 32.0, 1e-9);
}

TEST(Theorem1, QppInterleavesAreCazacUpTo40) {
    for (i64 n = 2; n <= 40; ++n) {
        for (i64 u : units(n)) {
            for (i64 q : {0, 1}) {
                const auto x = zc_phases(n, u, q);
                for (const auto& p : enumerate_qpps(n, false)) {
                    ASSERT_TRUE(is_cazac(interleave(x, p))) << "N=" << n << " u=" << u << " q=" << q << " " << p.to_string();
                    ASSERT_TRUE(is_cazac(interleave(x, invert_permutation(p.table()))))
                        << "inverse N=" << n << " u=" << u << " q=" << q << " " << p.to_string();
                }
            }
        }
    }
}

TEST(Theorem1, AgreesWithReferenceSidelobes) {
    for (i64 n : {12, 18, 25, 27}) {
        const auto x = oracle::zc(n, 1, 0);
        for (const auto& p : enumerate_qpps(n, false)) {
            const auto y = oracle::permute(x, p.table().table());
            EXPECT_LE(oracle::max_sidelobe(y, n), 1e-9) << n << " " << p.to_string();
        }
    }
}

TEST(ZacViaDft, Examples) {
    const auto z = zac_via_dft(zc_phases(12, 1, 0));
    EXPECT_TRUE(z.zac);
    for (double m : z.spectrum.magnitudes) EXPECT_NEAR(m, 1.0, 1e-12);
    const auto spike = zac_via_dft(ones(12));
    EXPECT_FALSE(spike.zac);
    EXPECT_NEAR(spike.spectrum.magnitudes[0], std::sqrt(12.0), 1e-12);
}

TEST(ZacViaDft, ParsevalAndAgreementOnPermutations) {
    const auto x = zc_phases(16, 1, 0);
    std::vector<i64> sigma(16);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 400; ++i) {
        std::shuffle(sigma.begin(), sigma.end(), rng);
        const auto y = interleave(x, PermArray(sigma));
        const auto z = zac_via_dft(y);
        double energy = 0.0;
        for (double m : z.spectrum.magnitudes) energy += m * m;
        EXPECT_NEAR(energy / 16.0, 1.0, 1e-9);
        EXPECT_EQ(z.zac, is_cazac(y));
    }
    for (const auto& p : enumerate_qpps(16, true)) {
        const auto y = interleave(x, p);
        EXPECT_TRUE(zac_via_dft(y).zac);
        EXPECT_TRUE(is_cazac(y));
    }
}

TEST(BasicOps, IdentityCases) {
    const auto x = zc_phases(15, 2, 0);
    EXPECT_EQ(apply_basic_op(x, op::Rotation{0}).phases(), x.phases());
    EXPECT_EQ(apply_basic_op(x, op::Decimation{1}).phases(), x.phases());
    EXPECT_EQ(apply_basic_op(x, op::Translation{0}).phases(), x.phases());
    EXPECT_EQ(apply_basic_op(x, op::LinearFm{0}).phases(), x.phases());
    EXPECT_EQ(apply_basic_op(apply_basic_op(x, op::Conjugation{}), op::Conjugation{}).phases(), x.phases());
    EXPECT_THROW(apply_basic_op(x, op::Decimation{3}), BadDecimation);
}

TEST(BasicOps, ExactPhaseTransforms) {
    const i64 n = 10, m = 20;
    const auto x = zc_phases(n, 3, 1);
    const auto rot = apply_basic_op(x, op::Rotation{7});
    const auto tr = apply_basic_op(x, op::Translation{4});
    const auto dec = apply_basic_op(x, op::Decimation{3});
    const auto fm = apply_basic_op(x, op::LinearFm{2});
    const auto cj = apply_basic_op(x, op::Conjugation{});
    for (i64 k = 0; k < n; ++k) {
        EXPECT_EQ(rot[k], oracle::md(x[k] + 7, m));
        EXPECT_EQ(tr[k], x[(k + 4) % n]);
        EXPECT_EQ(dec[k], x[(3 * k) % n]);
        EXPECT_EQ(fm[k], oracle::md(x[k] + 4 * k, m));
        EXPECT_EQ(cj[k], oracle::md(-x[k], m));
    }
}

TEST(BasicOps, PreserveCazac) {
    for (i64 n = 2; n <= 30; ++n) {
        const auto x = zc_phases(n, 1, 0);
        for (i64 a = 0; a < 2 * n; a += 3) ASSERT_TRUE(is_cazac(apply_basic_op(x, op::Rotation{a})));
        for (i64 t = 0; t < n; ++t) ASSERT_TRUE(is_cazac(apply_basic_op(x, op::Translation{t})));
        for (i64 f1 : units(n)) ASSERT_TRUE(is_cazac(apply_basic_op(x, op::Decimation{f1})));
        for (i64 v = 0; v < n; ++v) ASSERT_TRUE(is_cazac(apply_basic_op(x, op::LinearFm{v})));
        ASSERT_TRUE(is_cazac(apply_basic_op(x, op::Conjugation{})));
    }
}

TEST(BasicOps, LppInterleavesAreReachable) {
    for (i64 n = 2; n <= 30; ++n) {
        const auto x = zc_phases(n, 1, 0);
        for (i64 f1 : units(n)) {
            for (i64 f0 = 0; f0 < n; ++f0) {
                const auto y = interleave(x, PermPoly(n, {f0, f1}));
                const auto via_ops = apply_basic_op(apply_basic_op(x, op::Translation{f0}), op::Decimation{f1});
                ASSERT_EQ(via_ops.phases(), y.phases());
                const auto w = find_witness(y);
                ASSERT_TRUE(w.has_value()) << "N=" << n << " f1=" << f1 << " f0=" << f0;
                ASSERT_EQ(replay(*w, n).phases(), y.phases());
            }
        }
    }
}
