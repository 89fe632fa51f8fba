#include <gtest/gtest.h>

#include <rlimit/prolate.hpp>

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

using namespace rlimit;

namespace
{

// Nystrom discretization of mu phi(w) = \int_{-1}^{1} sin(c (w - v)) / (pi (w - v)) phi(v) dv
// with a plain Gauss-Legendre rule and the exact sinc kernel.
std::vector<double> nystrom_sinc_eigenvalues(double c, int n)
{
    const auto [x, w] = gauss_legendre(n, -1.0, 1.0);
    Eigen::MatrixXd H(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
        {
            const double d = x[static_cast<std::size_t>(i)] - x[static_cast<std::size_t>(j)];
            const double k = d == 0.0 ? c / pi : std::sin(c * d) / (pi * d);
            H(i, j) = std::sqrt(w[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(j)]) * k;
        }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H);
    std::vector<double> mu(es.eigenvalues().data(), es.eigenvalues().data() + n);
    std::sort(mu.rbegin(), mu.rend());
    return mu;
}

} // namespace

TEST(Prolate, KernelSpectrumMatchesIndependentNystrom)
{
    const double B = 2.0;
    const auto q = gauss_legendre_sinc_rule(B, 20);
    const auto ref = nystrom_sinc_eigenvalues(2.0 * pi * B, 80);
    for (auto mode : {KernelMode::surrogate, KernelMode::exact})
    {
        const auto eb = pswf_kernel_eigensystem(q, B, mode);
        ASSERT_EQ(eb.size(), 40u);
        // Descending up to the 1e-10 tie tolerance used for deterministic ordering.
        for (std::size_t n = 1; n < eb.size(); ++n)
            EXPECT_LE(eb.mu[n], eb.mu[n - 1] + 1e-10);
        for (std::size_t n = 0; n < 14; ++n)
            EXPECT_NEAR(eb.mu[n], ref[n], 1e-9) << to_string(mode) << ' ' << n;
    }
}

TEST(Prolate, TraceEqualsShannonNumber)
{
    for (double B : {1.0, 5.0})
    {
        const auto eb = pswf_kernel_eigensystem(gauss_legendre_sinc_rule(B, 16), B);
        double s = 0.0;
        for (double m : eb.mu)
            s += m;
        EXPECT_NEAR(s, 4.0 * B, 1e-10 * B);
    }
}

TEST(Prolate, KernelAndExpSystemsShareEigenvalues)
{
    const double B = 2.0;
    const auto q = gauss_legendre_sinc_rule(B, 12);
    const auto ex = pswf_exp_eigensystem(q, B);
    const auto ke = pswf_kernel_eigensystem(q, B);
    EXPECT_TRUE(ex.reflection_symmetric);
    ASSERT_EQ(ex.lambda.size(), ke.size());
    for (std::size_t n = 0; n < ke.size() && ke.mu[n] >= mu_floor; ++n)
        EXPECT_NEAR(ke.mu[n], B * std::norm(ex.lambda[n]), 1e-11 * ke.mu.front()) << n;
    // Exp eigenvalues alternate through the powers of i.
    for (std::size_t n = 0; n < 6; ++n)
    {
        const complex_t unit = ex.lambda[n] / std::abs(ex.lambda[n]);
        EXPECT_LT(std::abs(unit - std::pow(complex_t(0.0, 1.0), static_cast<double>(n))), 1e-8) << n;
    }
}

TEST(Prolate, UniformRuleIsAPerfectSampler)
{
    const int M = 8;
    const double B = (2.0 * M + 1.0) / 4.0;
    const auto q = uniform_rule(B, M);
    for (double mu : pswf_kernel_eigensystem(q, B).mu)
        EXPECT_NEAR(mu, 1.0, 1e-12);
    const auto vals = distinct_values(pswf_exp_eigensystem(q, B).lambda, 1e-8);
    EXPECT_EQ(vals.size(), 4u);
    for (const auto& v : vals)
        EXPECT_NEAR(std::abs(v), 2.0 / std::sqrt(2.0 * M + 1.0), 1e-12);
}

TEST(Prolate, CountAboveHalfIsNearShannonNumber)
{
    const double B = 5.0;
    const auto eb = pswf_kernel_eigensystem(gauss_legendre_sinc_rule(B, 16), B);
    const auto n = static_cast<int>(count_above(eb, 0.5));
    EXPECT_NEAR(n, 20, 1);
}

TEST(Prolate, EigenvectorsAreWeightOrthogonalAndExtendExactly)
{
    const double B = 1.5;
    const auto q = gauss_legendre_sinc_rule(B, 10);
    const auto ke = pswf_kernel_eigensystem(q, B);
    const auto ex = pswf_exp_eigensystem(q, B);
    for (const auto* eb : {&ke, &ex})
    {
        const auto G = discrete_gram(*eb);
        for (Eigen::Index i = 0; i < G.rows(); ++i)
            for (Eigen::Index j = 0; j < G.cols(); ++j)
                if (i != j)
                    EXPECT_LT(std::abs(G(i, j)), 1e-12);
        for (Eigen::Index j = 0; j < eb->vectors.cols(); ++j)
            EXPECT_NEAR(eb->vectors.col(j).norm(), 1.0, 1e-13);
    }
    for (std::size_t n = 0; n < 8; ++n)
        for (std::size_t m = 0; m < q.size(); ++m)
        {
            const auto idx = static_cast<Eigen::Index>(m), col = static_cast<Eigen::Index>(n);
            EXPECT_LT(std::abs(extend_prolate(ke, n, q.nodes[m]) - ke.vectors(idx, col)), 1e-10);
            EXPECT_LT(std::abs(extend_prolate(ex, n, q.nodes[m], ExtensionMode::exp_extension) - ex.vectors(idx, col)),
                      1e-10);
        }
    EXPECT_THROW(extend_prolate(ke, 0, q.nodes[0], ExtensionMode::exp_extension), input_error);
    EXPECT_THROW(extend_prolate(ke, ke.size(), 0.0), input_error);
}

TEST(Prolate, ExtendedEigenfunctionIsBandLimitedSmooth)
{
    // The extension of phi_0 is real up to a global phase and even.
    const double B = 1.0;
    const auto ke = pswf_kernel_eigensystem(gauss_legendre_sinc_rule(B, 10), B);
    for (double t : {0.1, 0.45, 0.8, 1.7})
    {
        const complex_t a = extend_prolate(ke, 0, t), b = extend_prolate(ke, 0, -t);
        EXPECT_LT(std::abs(a - b), 1e-10) << t;
    }
}

TEST(Prolate, SymmetricRegionSatisfiesIdentityInThreeDimensions)
{
    const auto q = ball_quadrature(1.0, 3, 3, 2);
    const Eigen::MatrixXd B = 0.6 * Eigen::MatrixXd::Identity(3, 3);
    const auto ex = rslepian_exp_eigensystem(q, B);
    const auto ke = rslepian_kernel_eigensystem(q, B);
    ASSERT_TRUE(ex.reflection_symmetric);
    const double det = std::abs(B.determinant());
    std::vector<double> from_lambda;
    for (const auto& l : ex.lambda)
        from_lambda.push_back(det * std::norm(l));
    std::sort(from_lambda.rbegin(), from_lambda.rend());
    for (std::size_t n = 0; n < ke.size(); ++n)
        EXPECT_NEAR(ke.mu[n], from_lambda[n], 1e-10 * ke.mu.front()) << n;
}

// Without reflection symmetry the kernel system is still Hermitian positive
// semidefinite, but the exp-system relation need not hold.
TEST(Prolate, AsymmetricRegionStillGivesPsdKernelSystem)
{
    const auto q = triangle_cascade(TriangleSpec{1.0, 1.0, {}}, 4, 4);
    const Eigen::MatrixXd B = Eigen::MatrixXd::Identity(2, 2);
    const auto ke = rslepian_kernel_eigensystem(q, B);
    EXPECT_FALSE(ke.reflection_symmetric);
    for (double mu : ke.mu)
        EXPECT_GT(mu, -1e-12);
    double s = 0.0;
    for (double mu : ke.mu)
        s += mu;
    EXPECT_NEAR(s, q.weight_sum() * q.weight_sum(), 1e-12);
}

TEST(Prolate, RejectsHalfRules)
{
    EXPECT_THROW(pswf_kernel_eigensystem(gauss_legendre_01(4), 1.0), input_error);
    EXPECT_THROW(pswf_exp_eigensystem(gauss_legendre_sinc_rule(1.0, 4), 0.0), input_error);
}
