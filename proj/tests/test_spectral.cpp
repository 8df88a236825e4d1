#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "eigenfloor/errors.hpp"
#include "eigenfloor/spectral.hpp"
#include "test_helpers.hpp"

using namespace eigenfloor;
using eigenfloor::testing::rel_diff;

TEST(SpectrumToTracePair, ConstantSpectrum) {
    const TracePair tp = spectrum_to_tracepair(Spectrum({1.0, 1.0, 1.0}));
    EXPECT_EQ(tp.a, 3.0);
    EXPECT_EQ(tp.b, 3.0);
    EXPECT_EQ(tp.m, 3);
}

TEST(SpectrumToTracePair, DirectSums) {
    const TracePair t1 = spectrum_to_tracepair(Spectrum({1.0, 2.0, 4.0}));
    EXPECT_DOUBLE_EQ(t1.a, 1.75);
    EXPECT_DOUBLE_EQ(t1.b, 1.3125);
    const TracePair t2 = spectrum_to_tracepair(Spectrum({1.0, 2.0}));
    EXPECT_DOUBLE_EQ(t2.a, 1.5);
    EXPECT_DOUBLE_EQ(t2.b, 1.25);
}

TEST(Spectrum, SortsNonIncreasingAndValidates) {
    const Spectrum s({2.0, 4.0, 1.0});
    ASSERT_EQ(s.size(), 3u);
    EXPECT_EQ(s.values()[0], 4.0);
    EXPECT_EQ(s.smallest(), 1.0);
    EXPECT_THROW(Spectrum({1.0}), DomainError);
    EXPECT_THROW(Spectrum({1.0, 0.0}), DomainError);
    EXPECT_THROW(Spectrum({1.0, -2.0}), DomainError);
    EXPECT_THROW(Spectrum({1.0, INFINITY}), DomainError);
}

TEST(TracePairFeasibility, Window) {
    EXPECT_TRUE(is_feasible({3.0, 3.0, 3}));            // alpha = 1/m exactly
    EXPECT_TRUE(is_feasible({1.0, 0.999, 4}));
    EXPECT_FALSE(is_feasible({1.0, 2.0, 3}));           // alpha >= 1
    EXPECT_FALSE(is_feasible({1.0, 1.0, 3}));           // alpha == 1
    EXPECT_FALSE(is_feasible({1.0, 0.3, 3}));           // alpha < 1/m
    EXPECT_FALSE(is_feasible({1.0, 0.5, 1}));           // m = 1
    EXPECT_FALSE(is_feasible({-1.0, 0.5, 3}));
    EXPECT_THROW(require_feasible({1.0, 2.0, 3}), DomainError);
    EXPECT_THROW(require_feasible({1.0, 0.5, 1}), DomainError);
    // rounding slack at the lower edge
    EXPECT_TRUE(is_feasible({1.0, (1.0 / 3.0) * (1.0 - 1e-14), 3}));
}

TEST(TracePairFeasibility, RandomSpectraLandInWindow) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        const int m = 2 + static_cast<int>(rng() % 40);
        const TracePair tp = spectrum_to_tracepair(eigenfloor::testing::plain_spectrum(rng, m));
        EXPECT_TRUE(is_feasible(tp));
        EXPECT_GT(tp.b, tp.a * tp.a / m);  // distinct values: strict
        EXPECT_LT(tp.b, tp.a * tp.a);
    }
}

TEST(TracePairFeasibility, LowerEdgeOnlyForConstantSpectra) {
    for (int m : {2, 3, 7, 50}) {
        for (double v : {1e-3, 0.7, 1.0, 123.0}) {
            const TracePair tp = spectrum_to_tracepair(Spectrum(std::vector<double>(m, v)));
            EXPECT_LE(rel_diff(tp.b, tp.a * tp.a / m), 1e-14);
        }
        std::vector<double> v(m, 2.0);
        v[0] = 2.0 * (1 + 1e-6);
        const TracePair tp = spectrum_to_tracepair(Spectrum(v));
        EXPECT_GT(tp.b, tp.a * tp.a / m);
    }
}

TEST(BidiagonalGram, Examples) {
    const SymTridiagonal t1 = bidiagonal_gram(LowerBidiagonal({1.0, 1.0}, {1.0}));
    EXPECT_EQ(t1.diag()[0], 1.0);
    EXPECT_EQ(t1.diag()[1], 2.0);
    EXPECT_EQ(t1.offdiag()[0], 1.0);

    // B B^T for B = [[2,0],[3,1]] is [[4,6],[6,10]]
    const SymTridiagonal t2 = bidiagonal_gram(LowerBidiagonal({2.0, 1.0}, {3.0}));
    EXPECT_EQ(t2.diag()[0], 4.0);
    EXPECT_EQ(t2.diag()[1], 10.0);
    EXPECT_EQ(t2.offdiag()[0], 6.0);

    const SymTridiagonal t3 = bidiagonal_gram(LowerBidiagonal({2.0, -3.0, 0.5}, {0.0, 0.0}));
    EXPECT_EQ(t3.diag()[0], 4.0);
    EXPECT_EQ(t3.diag()[1], 9.0);
    EXPECT_EQ(t3.diag()[2], 0.25);
    EXPECT_EQ(t3.offdiag()[1], 0.0);
}

TEST(BidiagonalGram, MatchesDenseProduct) {
    std::mt19937_64 rng(11);
    std::normal_distribution<double> n01;
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t m = 2 + rng() % 9;
        std::vector<double> d(m), s(m - 1);
        for (double& x : d) x = n01(rng);
        for (double& x : s) x = n01(rng);
        const LowerBidiagonal b(d, s);
        std::vector<std::vector<double>> B(m, std::vector<double>(m, 0.0));
        for (std::size_t i = 0; i < m; ++i) B[i][i] = d[i];
        for (std::size_t i = 0; i + 1 < m; ++i) B[i + 1][i] = s[i];
        const SymTridiagonal t = bidiagonal_gram(b);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                double v = 0.0;
                for (std::size_t k = 0; k < m; ++k) v += B[i][k] * B[j][k];
                double got = 0.0;
                if (i == j) got = t.diag()[i];
                else if (j == i + 1) got = t.offdiag()[i];
                else if (i == j + 1) got = t.offdiag()[j];
                EXPECT_NEAR(got, v, 1e-14 * (1 + std::abs(v)));
            }
        }
    }
}

TEST(BidiagonalGram, NonsingularGivesPositiveDefinite) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t m = 2 + rng() % 60;
        const LowerBidiagonal b = eigenfloor::testing::random_bidiag(rng, m, 0.5, 2.0);
        EXPECT_TRUE(bidiagonal_gram(b).is_positive_definite());
    }
}

TEST(SymTridiagonal, ValidationAndPivots) {
    EXPECT_THROW(SymTridiagonal({1.0}, {}), DomainError);
    EXPECT_THROW(SymTridiagonal({1.0, 2.0}, {}), DomainError);
    const SymTridiagonal t({2.0, 2.0}, {-1.0});
    EXPECT_TRUE(t.is_positive_definite());
    EXPECT_TRUE(t.is_positive_definite(0.999));
    EXPECT_FALSE(t.is_positive_definite(1.0));
    const auto piv = t.ldlt_pivots(0.5);
    ASSERT_EQ(piv.size(), 2u);
    EXPECT_DOUBLE_EQ(piv[0], 1.5);
    EXPECT_DOUBLE_EQ(piv[1], 1.5 - 1.0 / 1.5);
    EXPECT_DOUBLE_EQ(t.gershgorin_lower(), 1.0);
    EXPECT_DOUBLE_EQ(t.gershgorin_upper(), 3.0);
}

TEST(LowerBidiagonal, Singularity) {
    const LowerBidiagonal b({1.0, 0.0, 2.0}, {1.0, 1.0});
    EXPECT_FALSE(b.is_nonsingular());
    try {
        b.require_nonsingular();
        FAIL();
    } catch (const SingularMatrixError& e) {
        EXPECT_EQ(e.index(), 1u);
    }
    EXPECT_TRUE(LowerBidiagonal::identity(4).is_nonsingular());
}

TEST(Normalize, Examples) {
    const Spectrum s = normalize_unit_inverse_trace(Spectrum({1.0, 2.0}));
    EXPECT_DOUBLE_EQ(s.values()[0], 3.0);
    EXPECT_DOUBLE_EQ(s.values()[1], 1.5);
    EXPECT_DOUBLE_EQ(spectrum_to_tracepair(s).a, 1.0);

    const Spectrum n = normalize_unit_inverse_trace(Spectrum({1.75, 3.5, 7.0}));
    EXPECT_DOUBLE_EQ(n.values()[0], 7.0);
    EXPECT_DOUBLE_EQ(n.values()[2], 1.75);

    const Spectrum s3 = normalize_unit_inverse_trace(Spectrum({1.0, 2.0, 4.0}));
    EXPECT_DOUBLE_EQ(s3.values()[0], 7.0);
    EXPECT_DOUBLE_EQ(s3.values()[1], 3.5);
    EXPECT_DOUBLE_EQ(s3.values()[2], 1.75);
    const TracePair tp = spectrum_to_tracepair(s3);
    EXPECT_DOUBLE_EQ(tp.a, 1.0);
    EXPECT_NEAR(tp.b, 3.0 / 7.0, 1e-15);
}

TEST(Normalize, PreservesAlphaAndRatios) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 1000; ++trial) {
        const int m = 2 + static_cast<int>(rng() % 30);
        const Spectrum s = eigenfloor::testing::plain_spectrum(rng, m);
        const TracePair before = spectrum_to_tracepair(s);
        const Spectrum n = normalize_unit_inverse_trace(s);
        const TracePair after = spectrum_to_tracepair(n);
        EXPECT_LE(rel_diff(after.b / (after.a * after.a), before.b / (before.a * before.a)), 1e-14);
        for (std::size_t k = 0; k < s.size(); ++k) {
            EXPECT_EQ(n.values()[k], s.values()[k] * before.a);  // one multiplication each
        }
    }
}

TEST(RandomSpectrum, Deterministic) {
    const Spectrum a = random_spd_spectrum(5, 42);
    const Spectrum b = random_spd_spectrum(5, 42);
    ASSERT_EQ(a.size(), 5u);
    for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(a.values()[i], b.values()[i]);
    const Spectrum c = random_spd_spectrum(5, 43);
    EXPECT_NE(a.values()[0], c.values()[0]);
    EXPECT_THROW(random_spd_spectrum(1, 1), DomainError);
}

TEST(RandomSpectrum, SupportAndOrdering) {
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const Spectrum s = random_spd_spectrum(5, seed);
        ASSERT_EQ(s.size(), 5u);
        for (std::size_t i = 0; i < 5; ++i) {
            EXPECT_GE(s.values()[i], 1e-3 * (1 - 1e-12));
            EXPECT_LE(s.values()[i], 1e3 * (1 + 1e-12));
            if (i) EXPECT_LE(s.values()[i], s.values()[i - 1]);
        }
    }
}

TEST(RandomSpectrum, AlphaCoverage) {
    int below_quarter = 0;
    int above_half = 0;
    double lo = 1.0, hi = 0.0;
    for (std::uint64_t i = 0; i < 10000; ++i) {
        const TracePair tp = spectrum_to_tracepair(random_spd_spectrum(5, mix_seed(99, i)));
        const double al = tp.b / (tp.a * tp.a);
        lo = std::min(lo, al);
        hi = std::max(hi, al);
        below_quarter += al < 0.25;
        above_half += al > 0.5;
    }
    EXPECT_GT(below_quarter, 100);
    EXPECT_GT(above_half, 100);
    EXPECT_LT(lo, 0.2001);
    EXPECT_GT(hi, 0.99);
}
