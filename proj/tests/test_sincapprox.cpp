#include <gtest/gtest.h>

#include <rlimit/sincapprox.hpp>

#include <cmath>

using namespace rlimit;

TEST(SincApprox, LevelPutsReducedBandInLowerThird)
{
    EXPECT_EQ(sinc_level(0.5), 0);
    EXPECT_EQ(sinc_level(1.0), 1);
    EXPECT_EQ(sinc_level(2.9), 1);
    EXPECT_EQ(sinc_level(3.0), 2);
    EXPECT_EQ(sinc_level(20.0), 3);
    EXPECT_EQ(sinc_level(27.0), 4);
    for (double B0 : {1.0, 2.5, 3.0, 8.9, 9.0, 20.0, 80.0, 81.0, 1000.0})
    {
        const double B = B0 / pow3(sinc_level(B0));
        EXPECT_GE(B, 1.0 / 3.0) << B0;
        EXPECT_LT(B, 1.0) << B0;
    }
    EXPECT_THROW(sinc_level(0.0), input_error);
}

// sinc(3y) = sinc(y) (1 + 2 cos 2y) / 3, applied n times.
TEST(SincApprox, ScalingMultiplierTriplesTheBand)
{
    for (int n : {0, 1, 2, 4})
        for (double x : {-1.7, 0.0, 0.3, 2.2})
            EXPECT_NEAR(sinc(0.6 * x) * scaling_multiplier(0.6, n, x), sinc(pow3(n) * 0.6 * x), 1e-14);
}

TEST(SincApprox, ScaledErrorNeverExceedsBaseError)
{
    const auto a = build_sinc_cosine_approx(20.0, 4);
    EXPECT_EQ(a.level, 3);
    EXPECT_NEAR(a.band(), 20.0 / 27.0, 1e-15);
    double worst_base = 0.0;
    for (int i = 0; i <= 2000; ++i)
        worst_base = std::max(worst_base, std::abs(base_error(a, -20.0 + 0.02 * i)));
    EXPECT_GT(worst_base, 1e-10); // M = 4 leaves a visible error
    for (int i = 0; i <= 2000; ++i)
    {
        const double x = -20.0 + 0.02 * i;
        const double e = error_epsilon_B(a, x);
        // Pointwise: eps_B = multiplier * eps_0 and |multiplier| <= 1.
        EXPECT_NEAR(e, scaling_multiplier(a.band(), a.level, x) * base_error(a, x), 1e-14);
        EXPECT_LE(std::abs(e), worst_base + 1e-14);
    }
}

TEST(SincApprox, ExpandedRuleHasBandWeightSum)
{
    const auto a = build_sinc_cosine_approx(20.0, 8);
    ASSERT_TRUE(a.expanded.has_value());
    double s = 0.0;
    for (double w : a.expanded->weights)
        s += w;
    EXPECT_NEAR(s, 1.0, 1e-13);
    EXPECT_NEAR(eval_cosine_sum(a, 0.0), 1.0, 1e-13);
}

// The approximation error at x = m pi / B (B the reduced band)
// equals the base error there since the multiplier is 1 on that lattice.
TEST(SincApprox, MultiplierIsOneOnTheLattice)
{
    const double B = 20.0 / 27.0;
    for (int m = -5; m <= 5; ++m)
        EXPECT_NEAR(scaling_multiplier(B, 3, m * pi / B), 1.0, 1e-12) << m;
}

TEST(SincApprox, ScaleGeneralAppliesMultiplierPointwise)
{
    const SampledField f(PointSet(1, {0.0, 0.5, 1.0}), {complex_t(1.0), complex_t(2.0), complex_t(0.0, 1.0)});
    const auto g = scale_general(f, 0.5, 2);
    for (std::size_t i = 0; i < 3; ++i)
        EXPECT_LT(std::abs(g.values[i] - f.values[i] * scaling_multiplier(0.5, 2, f.points[i][0])), 1e-15);
    EXPECT_THROW(scale_general(f, 0.5, -1), input_error);
}

// The periodic sinc is the (2N+1)-point Riemann sum of (1/2) int_{-1}^{1} cos(B w x) dw.
TEST(SincApprox, PeriodicSincIsTheUniformRiemannSum)
{
    const double B = 2.0;
    for (int N : {0, 3, 10})
        for (double x : {0.0, 0.4, 3.3, 25.0})
        {
            double s = 0.0;
            for (int m = -N; m <= N; ++m)
                s += std::cos(B * x * 2.0 * m / (2.0 * N + 1.0));
            s /= 2.0 * N + 1.0;
            EXPECT_NEAR(periodic_sinc(B, N, x), s, 1e-13) << N << ' ' << x;
        }
    // Period (2N+1) pi / B.
    EXPECT_NEAR(periodic_sinc(B, 4, 0.3), periodic_sinc(B, 4, 0.3 + 9.0 * pi / B), 1e-12);
}

TEST(SincApprox, UniformMaxErrorMatchesDenseScan)
{
    const double B = 1.0;
    for (int N : {5, 20})
    {
        const auto [xm, em] = uniform_max_error(B, N);
        double worst = 0.0;
        const int n = 200000;
        for (int i = 0; i <= n; ++i)
        {
            const double x = xm * i / n;
            worst = std::max(worst, std::abs(sinc(B * x) - periodic_sinc(B, N, x)));
        }
        EXPECT_NEAR(worst, em, 1e-9 * em) << N;
    }
}

TEST(SincApprox, PeriodicSincErrorDecaysQuadratically)
{
    EXPECT_NEAR(periodic_sinc_error_slope(1.0, 0.5, {20, 40, 80, 160, 320}), -2.0, 1e-3);
    EXPECT_THROW(periodic_sinc_error_slope(1.0, 0.5, {20}), input_error);
}

TEST(SincApprox, ChirpletAndCosineApproximationsAgree)
{
    const auto c = build_chirplet_approx(20.0, 6);
    const auto a = build_sinc_cosine_approx(20.0, 6);
    EXPECT_EQ(c.level, a.level);
    for (double x : {-1.0, 0.0, 0.25, 0.9})
    {
        const complex_t v = eval_chirplet_sum(c, x);
        EXPECT_LT(std::abs(v - sinc(20.0 * x)), 1e-4) << x;
        EXPECT_LT(std::abs(v.imag()), 1e-10);
        EXPECT_LT(std::abs(v - complex_t(eval_cosine_sum(a, x))), 1e-4);
    }
}

TEST(SincApprox, RejectsBadArguments)
{
    EXPECT_THROW(build_sinc_cosine_approx(-1.0, 4), input_error);
    EXPECT_THROW(build_sinc_cosine_approx(20.0, 0), input_error);
    EXPECT_THROW(build_sinc_cosine_approx(20.0, 4, 0), input_error);
    EXPECT_THROW(periodic_sinc(0.0, 3, 1.0), input_error);
    EXPECT_THROW(uniform_max_error(1.0, 0), input_error);
}
