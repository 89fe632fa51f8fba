#include <gtest/gtest.h>

#include <rlimit/moments.hpp>

#include <algorithm>
#include <cmath>

using namespace rlimit;

namespace
{

// Closed forms of each moment row via lgamma; the library uses a ratio
// recursion in extended precision.
double reference_moment(MomentPreset p, double B, int n)
{
    const double k = n;
    const double lb = 2.0 * k * std::log(B);
    switch (p)
    {
    case MomentPreset::sinc_cos: return std::exp(lb) / (2 * k + 1);
    case MomentPreset::j0_cos:
        return std::exp(std::lgamma(2 * k + 1) + lb - 2 * (k * std::log(2.0) + std::lgamma(k + 1)));
    case MomentPreset::gauss_cos: return std::exp(std::lgamma(2 * k + 1) + lb - std::lgamma(k + 1));
    case MomentPreset::sinc_gauss: return std::exp(std::lgamma(k + 1) + lb - std::lgamma(2 * k + 2));
    case MomentPreset::j0_sinc:
        return std::exp(std::lgamma(2 * k + 2) + lb - 2 * (k * std::log(2.0) + std::lgamma(k + 1)));
    case MomentPreset::j1_cosinc:
        return std::exp(std::lgamma(2 * k + 3) + (2 * k + 1) * std::log(B) - (2 * k + 1) * std::log(2.0) -
                        std::lgamma(k + 1) - std::lgamma(k + 2));
    }
    return NAN;
}

double max_of(const std::vector<double>& v) { return *std::max_element(v.begin(), v.end()); }

const MomentPreset kAll[] = {MomentPreset::sinc_cos,   MomentPreset::j0_cos,  MomentPreset::gauss_cos,
                             MomentPreset::sinc_gauss, MomentPreset::j0_sinc, MomentPreset::j1_cosinc};

} // namespace

TEST(Moments, PresetRowsMatchClosedForms)
{
    for (auto p : kAll)
        for (double B : {0.3, 1.0, 1.7})
        {
            const auto h = preset_moments(p, B, 30);
            ASSERT_EQ(h.size(), 30u);
            for (int n = 0; n < 30; ++n)
            {
                const double ref = reference_moment(p, B, n);
                EXPECT_NEAR(h.values[static_cast<std::size_t>(n)], ref, 1e-12 * std::abs(ref))
                    << to_string(p) << " B=" << B << " n=" << n;
            }
        }
}

TEST(Moments, PresetNamesRoundTripAndAcceptDashes)
{
    for (auto p : kAll)
        EXPECT_EQ(preset_from_string(to_string(p)), p);
    EXPECT_EQ(preset_from_string("sinc-gauss"), MomentPreset::sinc_gauss);
    EXPECT_THROW(preset_from_string("sinc"), input_error);
}

TEST(Moments, OverflowIsReportedNotSaturated)
{
    EXPECT_THROW(preset_moments(MomentPreset::gauss_cos, 10.0, 200), numerical_error);
    EXPECT_THROW(preset_moments(MomentPreset::sinc_cos, -1.0, 4), input_error);
}

TEST(Moments, GaussLegendreAndChebyshevReproduceTheirRows)
{
    for (int M : {4, 8, 16, 32})
    {
        EXPECT_LT(max_of(verify_moments(gauss_legendre_01(M), preset_moments(MomentPreset::sinc_cos, 1.0, 2 * M))),
                  1e-14);
        EXPECT_LT(max_of(verify_moments(chebyshev_rule_for_j0(M), preset_moments(MomentPreset::j0_cos, 1.0, 2 * M))),
                  1e-14);
    }
}

// The M-term solution of the even sinc row is the Gauss rule for the uniform
// weight in omega, so gamma_m must be the squared Gauss-Legendre nodes.
TEST(Moments, SolverRecoversGaussLegendreNodes)
{
    for (int M : {1, 3, 6, 10})
    {
        const auto r = solve_moment_problem(preset_moments(MomentPreset::sinc_cos, 1.0, 2 * M), M);
        const auto gl = gauss_legendre_01(M);
        ASSERT_EQ(r.size(), static_cast<std::size_t>(M));
        EXPECT_TRUE(r.notice.empty());
        for (int m = 0; m < M; ++m)
        {
            const auto j = static_cast<std::size_t>(m);
            EXPECT_NEAR(r.nodes[j].real(), gl.nodes[j] * gl.nodes[j], 1e-12) << M;
            EXPECT_EQ(r.nodes[j].imag(), 0.0);
            EXPECT_NEAR(r.weights[j].real(), gl.weights[j], 1e-12) << M;
        }
    }
}

TEST(Moments, SolverRecoversChebyshevNodesForJ0)
{
    const int M = 7;
    const auto r = solve_moment_problem(preset_moments(MomentPreset::j0_cos, 1.0, 2 * M), M);
    const auto ch = chebyshev_rule_for_j0(M);
    for (std::size_t j = 0; j < ch.size(); ++j)
    {
        EXPECT_NEAR(r.nodes[j].real(), ch.nodes[j] * ch.nodes[j], 1e-12);
        EXPECT_NEAR(r.weights[j].real(), 1.0 / M, 1e-12);
    }
}

TEST(Moments, SolverRecoversSyntheticRule)
{
    const std::vector<double> g = {0.05, 0.4, 0.9}, a = {0.2, 0.3, 0.5};
    MomentSequence h;
    for (int n = 0; n < 6; ++n)
    {
        double s = 0.0;
        for (int m = 0; m < 3; ++m)
            s += a[static_cast<std::size_t>(m)] * std::pow(g[static_cast<std::size_t>(m)], n);
        h.values.push_back(s);
    }
    const auto r = solve_moment_problem(h, 3);
    for (std::size_t m = 0; m < 3; ++m)
    {
        EXPECT_NEAR(r.nodes[m].real(), g[m], 1e-13);
        EXPECT_NEAR(r.weights[m].real(), a[m], 1e-13);
    }
    EXPECT_FALSE(r.preset.has_value());
}

TEST(Moments, EveryPresetSolvesToTolerance)
{
    for (auto p : kAll)
        for (int M : {2, 5, 8})
        {
            const auto h = preset_moments(p, 0.8, 2 * M);
            const auto r = solve_moment_problem(h, M);
            EXPECT_LE(max_of(r.residuals), 1e-12 * residual_scale(r, h)) << to_string(p) << " M=" << M;
            EXPECT_EQ(r.residuals, verify_moments(r, h));
        }
}

TEST(Moments, ChirpletRuleIsComplexWithPositiveRealNodes)
{
    const auto r = solve_moment_problem(preset_moments(MomentPreset::sinc_gauss, 20.0 / 27.0, 12), 6);
    EXPECT_FALSE(r.is_real(1e-6));
    for (const auto& g : r.nodes)
        EXPECT_GT(g.real(), 0.0);
    // Nodes and weights come in conjugate pairs since the moments are real.
    for (const auto& g : r.nodes)
    {
        const bool paired = std::any_of(r.nodes.begin(), r.nodes.end(),
                                        [&](const complex_t& h) { return std::abs(h - std::conj(g)) < 1e-8; });
        EXPECT_TRUE(paired);
    }
    EXPECT_THROW(to_cosine_rule(r, 1.0), numerical_error);
}

TEST(Moments, SolverRejectsBadArguments)
{
    const auto h = preset_moments(MomentPreset::sinc_cos, 1.0, 4);
    EXPECT_THROW(solve_moment_problem(h, 0), input_error);
    EXPECT_THROW(solve_moment_problem(h, 3), input_error);
    MomentSequence bad;
    bad.values = {1.0, NAN};
    EXPECT_THROW(solve_moment_problem(bad, 1), input_error);
}

TEST(Moments, SymmetricRulesHaveBandWeightSum)
{
    for (double B : {0.5, 2.0})
    {
        for (const auto& q : {gauss_legendre_sinc_rule(B, 6), uniform_rule(B, 5)})
        {
            double s = 0.0;
            for (double w : q.weights)
                s += w;
            EXPECT_NEAR(s, 2.0 * B, 1e-14);
            ASSERT_TRUE(q.symmetric);
            for (std::size_t m = 0; m < q.size(); ++m)
                EXPECT_NEAR(q.nodes[m], -q.nodes[q.size() - 1 - m], 1e-15);
        }
    }
    EXPECT_THROW(symmetric_sinc_rule(uniform_rule(1.0, 2), 1.0), input_error);
}

TEST(Moments, CosineRuleFromSolverMatchesSinc)
{
    const double B = 0.9;
    const auto q = to_cosine_rule(solve_moment_problem(preset_moments(MomentPreset::sinc_cos, B, 16), 8), B);
    for (double x : {0.0, 0.5, 1.3, 2.0})
    {
        double s = 0.0;
        for (std::size_t m = 0; m < q.size(); ++m)
            s += q.weights[m] * std::cos(q.nodes[m] * B * x);
        EXPECT_NEAR(s, sinc(B * x), 1e-12);
    }
}
