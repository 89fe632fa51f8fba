#include <gtest/gtest.h>

#include "oracles.hpp"

#include <rlimit/projection.hpp>
#include <rlimit/sincapprox.hpp>

#include <cmath>
#include <random>

using namespace rlimit;

namespace
{

// f(t) = 1 - t^2 on [-1, 1] and its transform.
double parabola(double t) { return std::abs(t) <= 1.0 ? 1.0 - t * t : 0.0; }

complex_t parabola_hat(double nu)
{
    const double a = 2.0 * pi * nu;
    if (std::abs(a) < 1e-3)
        return 4.0 / 3.0 - 2.0 * a * a / 15.0;
    return 4.0 * (std::sin(a) - a * std::cos(a)) / (a * a * a);
}

Eigen::MatrixXd mat2(double a, double b, double c, double d)
{
    Eigen::MatrixXd m(2, 2);
    m << a, b, c, d;
    return m;
}

std::vector<complex_t> hat_at_nodes(const Quadrature1D& q, double B)
{
    std::vector<complex_t> v;
    for (double w : q.nodes)
        v.push_back(parabola_hat(B * w));
    return v;
}

} // namespace

TEST(Projection, OracleMatchesClosedFormSincConvolution)
{
    // Projection of the constant 1 on [-T, T] is (Si(2 pi B (T - t)) + Si(2 pi B (T + t))) / pi.
    const double B = 1.5, T = 1.0;
    for (double t : {0.0, 0.4, 1.8})
    {
        const double ref = (integrate([&](double u) { return sinc(u); }, 0.0, 2 * pi * B * (T - t), oracle::tight()) +
                            integrate([&](double u) { return sinc(u); }, 0.0, 2 * pi * B * (T + t), oracle::tight())) /
                           pi;
        EXPECT_NEAR(bandlimited_projection_oracle([](double) { return 1.0; }, T, B, t), ref, 1e-9);
    }
}

TEST(Projection, DiscreteFourierRepresentationObeysItsBound)
{
    const double T = 1.0;
    for (double B : {1.0, 3.0})
        for (int M : {4, 8, 16})
        {
            const auto q = gauss_legendre_sinc_rule(B, M);
            const auto fhat = hat_at_nodes(q, B);
            const double bound = discrete_fourier_bound_1d(q, B, T, 1.0);
            for (double t : linspace(-T, T, 21))
            {
                const complex_t v = discrete_fourier_repr_1d(fhat, q, B, t);
                const double ref = bandlimited_projection_oracle(parabola, T, B, t);
                EXPECT_LE(std::abs(v - ref), bound + 1e-9) << B << ' ' << M << ' ' << t;
                EXPECT_LT(std::abs(v.imag()), 1e-12);
            }
        }
    // Enough nodes make the representation converge.
    const auto q = gauss_legendre_sinc_rule(3.0, 24);
    EXPECT_LT(discrete_fourier_bound_1d(q, 3.0, T, 1.0), 1e-8);
    EXPECT_NEAR(discrete_fourier_repr_1d(hat_at_nodes(q, 3.0), q, 3.0, 0.3).real(),
                bandlimited_projection_oracle(parabola, T, 3.0, 0.3), 1e-8);
}

TEST(Projection, RuleKernelErrorVanishesAtOriginForSincRules)
{
    const auto q = gauss_legendre_sinc_rule(2.0, 6);
    EXPECT_LT(std::abs(rule_kernel_error_1d(q, 2.0, 0.0)), 1e-14);
    EXPECT_THROW(discrete_fourier_repr_1d(std::vector<complex_t>(3), q, 2.0, 0.0), input_error);
}

TEST(Projection, NyquistDeltaTrainIsRecoveredOnTheLattice)
{
    std::mt19937_64 rng(11);
    std::normal_distribution<double> n01;
    for (int K : {0, 1, 4})
        for (int M = K; M <= K + 3; ++M)
        {
            std::vector<double> f(static_cast<std::size_t>(2 * K + 1));
            for (auto& v : f)
                v = n01(rng);
            const auto r = nyquist_delta_train_check(f, M, 0.75);
            EXPECT_LT(r.max_lattice_error, 1e-12) << K << ' ' << M;
            EXPECT_EQ(r.lattice_values.size(), f.size());
        }
    // A single delta gives 2B at l = 0 and zero at the other lattice points.
    const std::vector<double> kron = {0.0, 0.0, 1.0, 0.0, 0.0};
    const auto r = nyquist_delta_train_check(kron, 2, 1.0);
    EXPECT_NEAR(r.lattice_values[2].real(), 2.0, 1e-13);
    EXPECT_LT(std::abs(r.lattice_values[0]), 1e-13);
    EXPECT_THROW(nyquist_delta_train_check(kron, 1), input_error);
    EXPECT_THROW(nyquist_delta_train_check(std::vector<double>(4), 3), input_error);
}

TEST(Projection, UniformRuleInterpolationIsDirichletInterpolation)
{
    const int M = 6;
    const double B = (2.0 * M + 1.0) / 4.0;
    const auto q = uniform_rule(B, M);
    const auto basis = pswf_kernel_eigensystem(q, B);
    std::vector<complex_t> f;
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (std::size_t m = 0; m < q.size(); ++m)
        f.emplace_back(u(rng), u(rng));
    for (auto mode : {InterpolationMode::spectral_truncated, InterpolationMode::kernel_regularized})
        for (double t : {-0.93, -0.2, 0.0, 0.37, 0.81})
        {
            complex_t ref(0.0);
            for (std::size_t m = 0; m < q.size(); ++m)
                ref += f[m] * periodic_sinc(2.0 * pi * B, M, t - q.nodes[m]);
            EXPECT_LT(std::abs(sampling_interpolation_1d(f, basis, t, mode) - ref), 1e-12) << to_string(mode);
        }
}

TEST(Projection, InterpolationReproducesEigenfunctions)
{
    const double B = 2.0;
    const auto q = gauss_legendre_sinc_rule(B, 12);
    const auto basis = pswf_kernel_eigensystem(q, B);
    for (std::size_t n : {std::size_t{0}, std::size_t{3}, std::size_t{7}})
    {
        std::vector<complex_t> f(q.size());
        for (std::size_t m = 0; m < q.size(); ++m)
            f[m] = basis.vectors(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n));
        for (double t : {-0.77, 0.05, 0.6})
        {
            const complex_t ext = extend_prolate(basis, n, t);
            EXPECT_LT(std::abs(sampling_interpolation_1d(f, basis, t) - ext), 1e-10 * std::abs(ext) + 1e-12);
            // The kernel-regularized variant damps mode n by mu_n^2.
            const complex_t kr = sampling_interpolation_1d(f, basis, t, InterpolationMode::kernel_regularized);
            EXPECT_LT(std::abs(kr - basis.mu[n] * basis.mu[n] * ext), 1e-10);
        }
    }
    EXPECT_GT(sampling_error_constant(basis, B, 0.0, 1e-10), 0.0);
}

TEST(Projection, ScaledInterpolationHandlesWiderSupport)
{
    const double B = 1.0, T = 2.0;
    const auto q = gauss_legendre_sinc_rule(B * T, 12);
    const auto basis = pswf_kernel_eigensystem(q, B * T);
    std::vector<complex_t> f(q.size());
    for (std::size_t m = 0; m < q.size(); ++m)
        f[m] = basis.vectors(static_cast<Eigen::Index>(m), 1);
    const double t = 0.9;
    EXPECT_LT(std::abs(sampling_interpolation_1d_scaled(f, q, B, T, t) - extend_prolate(basis, 1, t / T)), 1e-10);
    EXPECT_THROW(sampling_interpolation_1d_scaled(f, q, B, -1.0, t), input_error);
}

TEST(Projection, ExpSumKernelIn1DMatchesScaledSinc)
{
    const double B = 2.0;
    const auto k = make_exp_sum_kernel(to_quadrature_nd(gauss_legendre_sinc_rule(B, 16), B),
                                       Eigen::MatrixXd::Constant(1, 1, B), TargetBox{{1.0}, {201}});
    for (double x : {0.0, 0.3, -0.8})
    {
        EXPECT_NEAR(k.exact(std::vector<double>{x}).real(), 2.0 * B * sinc(2.0 * pi * B * x), 1e-14);
        EXPECT_LT(std::abs(k.eval(std::vector<double>{x}) - k.exact(std::vector<double>{x})), k.error_profile + 1e-15);
    }
    EXPECT_LT(k.error_profile, 1e-10);
    EXPECT_THROW(to_quadrature_nd(gauss_legendre_01(4), 1.0), input_error);
}

TEST(Projection, PointMassProjectsToTheKernel)
{
    const Eigen::MatrixXd B = 2.0 * Eigen::MatrixXd::Identity(2, 2);
    const auto k = make_exp_sum_kernel(triangle_cascade({1.0, 1.0, {}}, 10, 10), B, TargetBox{{1.0, 1.0}, {5, 5}});
    const double x0[2] = {0.2, -0.1};
    const SupportBox X{{-0.5, -0.5}, {0.5, 0.5}};
    const PointSet pts(2, {0.0, 0.0, 0.3, 0.2, -0.4, 0.1});
    const auto r = rlimited_discrete_fourier(
        [&](std::span<const double> nu) { return std::polar(1.0, -2.0 * pi * (nu[0] * x0[0] + nu[1] * x0[1])); }, k, X,
        1.0, pts);
    for (std::size_t i = 0; i < pts.size(); ++i)
    {
        const std::vector<double> d = {pts[i][0] - x0[0], pts[i][1] - x0[1]};
        EXPECT_LT(std::abs(r.field.values[i] - k.eval(d)), 1e-12);
    }
    EXPECT_NEAR(r.error_bound, X.volume() * k.error_profile, 1e-15);
    const SupportBox wide{{-1.0, -1.0}, {1.0, 1.0}};
    EXPECT_THROW(rlimited_discrete_fourier([](std::span<const double>) { return complex_t(1.0); }, k, wide, 1.0, pts),
                 input_error);
}

// Gaussian bump sampled on a grid against a Fourier-side brute-force
// projection onto the dilated triangle.
TEST(Projection, TrapezoidProjectionOfGaussianMatchesOracle)
{
    const double c = 20.0;
    const Eigen::MatrixXd B = 2.0 * Eigen::MatrixXd::Identity(2, 2);
    const TriangleSpec tri{1.0, 1.0, {}};
    const auto k = make_exp_sum_kernel(triangle_cascade(tri, 16, 16), B, TargetBox{{2.0, 2.0}, {41, 41}});
    const SupportBox X{{-1.0, -1.0}, {1.0, 1.0}};
    const std::vector<int> counts = {41, 41};
    const PointSet grid = make_grid(X.lo, X.hi, counts);
    std::vector<complex_t> v;
    for (std::size_t i = 0; i < grid.size(); ++i)
        v.emplace_back(std::exp(-c * (grid[i][0] * grid[i][0] + grid[i][1] * grid[i][1])));
    const SampledField f(grid, v);
    const PointSet pts(2, {0.0, 0.0, 0.25, -0.1, -0.6, 0.5});
    const auto r = rlimited_discrete_fourier(f, X, counts, k, pts);
    for (std::size_t i = 0; i < pts.size(); ++i)
    {
        const double x = pts[i][0], y = pts[i][1];
        // f_B(x) = |det B| \int_T fhat(B k) e^{i 2 pi B k . x} dk.
        const complex_t ref = 4.0 * oracle::integrate2(
                                        [&](double kx, double ky) {
                                            const double n2 = 4.0 * (kx * kx + ky * ky);
                                            return pi / c * std::exp(-pi * pi * n2 / c) *
                                                   std::polar(1.0, 2.0 * pi * 2.0 * (kx * x + ky * y));
                                        },
                                        0.0, tri.dp, [&](double kx) { return -tri.s * kx; },
                                        [&](double kx) { return tri.s * kx; }, 1e-12);
        EXPECT_LE(std::abs(r.field.values[i] - ref), r.error_bound + 1e-6) << i;
        // The worst-case bound is loose for a smooth bump; the actual error is far smaller.
        EXPECT_LT(std::abs(r.field.values[i] - ref), 1e-4) << i;
    }
}

TEST(Projection, RaSamplingWithIdentityIsPlainInterpolation)
{
    const auto q = triangle_cascade({1.0, 1.0, {}}, 4, 4);
    const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(2, 2);
    const auto basis = rslepian_kernel_eigensystem(q, I);
    std::vector<complex_t> f(basis.weights.size());
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (auto& v : f)
        v = complex_t(u(rng), u(rng));
    const PointSet pts(2, {0.3, 0.1, 0.7, -0.2});
    const auto r = ra_sampling_interpolation(f, basis, I, pts);
    const auto g = interpolation_coefficients(basis, f, InterpolationMode::kernel_regularized);
    for (std::size_t i = 0; i < pts.size(); ++i)
        EXPECT_LT(std::abs(r.field.values[i] - interpolate(basis, g, pts[i])), 1e-13);
    EXPECT_THROW(ra_sampling_interpolation(f, basis, 2.0 * I, pts), input_error);
}

TEST(Projection, RaSamplingReproducesTransformedEigenfunction)
{
    const auto q = triangle_cascade({1.0, 1.0, {}}, 4, 4);
    const Eigen::MatrixXd A = mat2(1.2, 0.3, -0.4, 0.9);
    const auto basis = rslepian_kernel_eigensystem(q, A.transpose() * A);
    std::vector<complex_t> f(basis.weights.size());
    for (std::size_t m = 0; m < f.size(); ++m)
        f[m] = basis.vectors(static_cast<Eigen::Index>(m), 0);
    const PointSet nodes = transformed_sample_nodes(basis, A);
    ASSERT_EQ(nodes.size(), f.size());
    const PointSet pts(2, {0.5, 0.2, 1.0, -0.3});
    const auto r = ra_sampling_interpolation(f, basis, A, pts, InterpolationMode::spectral_truncated);
    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(A);
    for (std::size_t i = 0; i < pts.size(); ++i)
    {
        const Eigen::VectorXd y = lu.solve(Eigen::Vector2d(pts[i][0], pts[i][1]));
        const complex_t ref = extend_prolate(basis, 0, std::vector<double>{y[0], y[1]});
        EXPECT_LT(std::abs(r.field.values[i] - ref), 1e-10);
    }
}

// A and QA share A^T A, so rotating the evaluation points with Q leaves the
// output unchanged for the same sample vector.
TEST(Projection, RaSamplingIsRotationEquivariant)
{
    const auto q = triangle_cascade({1.0, 1.0, {}}, 4, 4);
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 3; ++trial)
    {
        const Eigen::MatrixXd A = mat2(1.0 + 0.3 * u(rng), 0.3 * u(rng), 0.3 * u(rng), 1.0 + 0.3 * u(rng));
        const Eigen::MatrixXd Q = rotation2(pi * u(rng));
        const auto basis = rslepian_kernel_eigensystem(q, A.transpose() * A);
        std::vector<complex_t> f(basis.weights.size());
        for (auto& v : f)
            v = complex_t(u(rng), u(rng));
        const PointSet pts(2, {u(rng), u(rng), u(rng), u(rng)});
        const auto r0 = ra_sampling_interpolation(f, basis, A, pts);
        const auto r1 = ra_sampling_interpolation(f, basis, Q * A, transform_nodes(pts, Q));
        for (std::size_t i = 0; i < pts.size(); ++i)
            EXPECT_LT(std::abs(r0.field.values[i] - r1.field.values[i]), 1e-11);
    }
}

TEST(Projection, SinglePatchEqualsRaSampling)
{
    const auto q = triangle_cascade({1.0, 1.0, {}}, 3, 3);
    const Eigen::MatrixXd A = mat2(1.1, 0.0, 0.2, 0.8);
    PatchPart p{A, rslepian_kernel_eigensystem(q, A.transpose() * A), {}};
    for (std::size_t m = 0; m < p.basis.weights.size(); ++m)
        p.samples.emplace_back(std::cos(static_cast<double>(m)));
    const PointSet pts(2, {0.2, 0.2, -0.5, 0.4});
    const auto a = patched_projection({p}, pts);
    const auto b = ra_sampling_interpolation(p.samples, p.basis, A, pts);
    for (std::size_t i = 0; i < pts.size(); ++i)
        EXPECT_EQ(a.field.values[i], b.field.values[i]);
    EXPECT_THROW(patched_projection({}, pts), input_error);
}

TEST(Projection, FourRotatedTrianglesTileTheSquare)
{
    const Region tri = Region::make_triangle({1.0, 1.0, {}});
    std::vector<std::pair<Eigen::MatrixXd, Region>> parts;
    for (int r = 0; r < 4; ++r)
        parts.emplace_back(rotation2(0.5 * pi * r), tri);
    for (const auto& x : {std::vector<double>{0.0, 0.0}, {0.7, -1.3}, {2.5, 0.4}})
    {
        const complex_t ref = 2.0 * sinc(x[0]) * 2.0 * sinc(x[1]);
        EXPECT_LT(std::abs(patched_kernel(parts, x) - ref), 1e-12);
    }
}

TEST(Projection, BowtieKernelIsReal)
{
    const Region tri = Region::make_triangle({1.0, 0.6, {}});
    const std::vector<std::pair<Eigen::MatrixXd, Region>> parts = {{Eigen::MatrixXd::Identity(2, 2), tri},
                                                                   {-Eigen::MatrixXd::Identity(2, 2), tri}};
    for (const auto& x : {std::vector<double>{0.3, 0.9}, {-1.7, 0.2}})
    {
        const complex_t v = patched_kernel(parts, x);
        EXPECT_LT(std::abs(v.imag()), 1e-14);
        EXPECT_NEAR(v.real(), 2.0 * region_kernel_exact(tri, {x[0], x[1]}).real(), 1e-14);
    }
}

TEST(Projection, TransformRuleScalesWeightsAndNodes)
{
    const auto q = triangle_cascade({1.0, 1.0, {}}, 4, 4);
    const Eigen::MatrixXd A = mat2(2.0, 1.0, 0.0, 0.5);
    const auto r = transform_rule(q, A);
    EXPECT_NEAR(r.weight_sum(), q.weight_sum() * std::abs(A.determinant()), 1e-14);
    EXPECT_NEAR(r.region.measure(), r.weight_sum(), 1e-13);
    const std::vector<double> x = {0.1, 0.2};
    EXPECT_LT(std::abs(eval_exp_sum(r, x) - region_kernel_2pi(r.region, x)), 1e-4);
}

TEST(Projection, TrapezoidWeightsIntegrateLinearFunctionsExactly)
{
    const std::vector<double> lo = {-1.0, 0.0}, hi = {1.0, 3.0};
    const std::vector<int> counts = {5, 7};
    const auto w = trapezoid_weights(lo, hi, counts);
    const auto g = make_grid(lo, hi, counts);
    double s = 0.0, sx = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i)
    {
        s += w[i];
        sx += w[i] * (1.0 + g[i][0] + 2.0 * g[i][1]);
    }
    EXPECT_NEAR(s, 6.0, 1e-14);
    EXPECT_NEAR(sx, 6.0 + 0.0 + 2.0 * 9.0, 1e-13);
}
