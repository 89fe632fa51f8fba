#include <gtest/gtest.h>

#include <rlimit/integrate.hpp>
#include <rlimit/numkit.hpp>

#include <cmath>
#include <random>

using namespace rlimit;

TEST(Numkit, SincMatchesLongDoubleReference)
{
    for (double x : {0.0, 1e-12, 1e-6, 1e-3, 0.1, 0.7, 3.0, -2.5, 100.0})
    {
        const long double lx = x;
        const long double ref = x == 0.0 ? 1.0L : std::sin(lx) / lx;
        EXPECT_NEAR(sinc(x), static_cast<double>(ref), 2e-16) << x;
    }
}

TEST(Numkit, CosincIsOddAndMatchesReference)
{
    for (double x : {1e-9, 1e-4, 0.3, 2.0, 17.0})
    {
        const long double lx = x;
        const long double sh = std::sin(lx / 2.0L);
        const long double ref = 2.0L * sh * sh / lx;
        EXPECT_NEAR(cosinc(x), static_cast<double>(ref), 1e-15) << x;
        EXPECT_DOUBLE_EQ(cosinc(-x), -cosinc(x));
    }
    EXPECT_EQ(cosinc(0.0), 0.0);
}

TEST(Numkit, ExpcMatchesDirectFormulaAwayFromZero)
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int i = 0; i < 200; ++i)
    {
        const complex_t z(u(rng), u(rng));
        if (std::abs(z) < 0.5)
            continue;
        EXPECT_LT(std::abs(expc(z) - (std::exp(z) - 1.0) / z), 1e-14);
    }
    EXPECT_EQ(expc(complex_t(0.0)), complex_t(1.0));
    // Series and direct branches agree across the switch radius.
    const complex_t small(1e-4, 2e-4);
    const complex_t ref = 1.0 + small / 2.0 + small * small / 6.0 + small * small * small / 24.0;
    EXPECT_LT(std::abs(expc(small) - ref), 1e-15);
}

TEST(Numkit, NonFiniteArgumentsThrow)
{
    EXPECT_THROW(sinc(std::nan("")), numerical_error);
    EXPECT_THROW(expc(complex_t(INFINITY, 0.0)), numerical_error);
}

TEST(Numkit, GaussLegendreIntegratesPolynomialsExactly)
{
    for (int n : {1, 2, 5, 16, 33})
    {
        const auto [x, w] = gauss_legendre(n, -1.0, 2.0);
        ASSERT_EQ(x.size(), static_cast<std::size_t>(n));
        EXPECT_TRUE(std::is_sorted(x.begin(), x.end()));
        for (int k = 0; k <= 2 * n - 1; ++k)
        {
            double s = 0.0;
            for (int i = 0; i < n; ++i)
                s += w[static_cast<std::size_t>(i)] * std::pow(x[static_cast<std::size_t>(i)], k);
            const double exact = (std::pow(2.0, k + 1) - std::pow(-1.0, k + 1)) / (k + 1);
            EXPECT_NEAR(s, exact, 1e-12 * std::max(1.0, std::abs(exact))) << n << ' ' << k;
        }
    }
}

TEST(Numkit, OddGaussLegendreHasExactMidpoint)
{
    const auto [x, w] = gauss_legendre(7, 0.0, 1.0);
    EXPECT_EQ(x[3], 0.5);
}

TEST(Numkit, GridOrderingFirstAxisSlowest)
{
    const auto g = make_grid({0.0, 10.0}, {1.0, 12.0}, {2, 3});
    ASSERT_EQ(g.size(), 6u);
    EXPECT_EQ(g[0][0], 0.0);
    EXPECT_EQ(g[0][1], 10.0);
    EXPECT_EQ(g[1][1], 11.0);
    EXPECT_EQ(g[3][0], 1.0);
    EXPECT_EQ(g[5][1], 12.0);
}

TEST(Numkit, PointSetRejectsBadInput)
{
    EXPECT_THROW(PointSet(0), input_error);
    EXPECT_THROW(PointSet(2, {1.0, 2.0, 3.0}), input_error);
    PointSet p(2);
    const double bad[1] = {1.0};
    EXPECT_THROW(p.push_back(bad), input_error);
    EXPECT_THROW(SampledField(PointSet(1, {0.0, 1.0}), {complex_t(1.0)}), input_error);
}

TEST(Numkit, IntegrateHandlesOscillatoryAndComplexIntegrands)
{
    IntegrationOptions o;
    o.piece = 0.25;
    const double I = integrate([](double x) { return std::cos(40.0 * x); }, 0.0, 3.0, o);
    EXPECT_NEAR(I, std::sin(120.0) / 40.0, 1e-12);
    const complex_t J = integrate([](double x) { return std::polar(1.0, 5.0 * x); }, 0.0, 1.0);
    EXPECT_LT(std::abs(J - (std::polar(1.0, 5.0) - 1.0) / complex_t(0.0, 5.0)), 1e-13);
}

TEST(Numkit, ParallelForVisitsEveryIndexOnce)
{
    std::vector<int> hits(1000, 0);
    parallel_for(hits.size(), [&](std::size_t i) { hits[i] += 1; });
    for (int h : hits)
        EXPECT_EQ(h, 1);
}
