#ifndef RLIMIT_PROJECTION_HPP
#define RLIMIT_PROJECTION_HPP

// Band-limited and R-limited projections: discrete Fourier representations,
// sampling and interpolation, transformed regions and patched unions.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cubature.hpp"
#include "integrate.hpp"
#include "moments.hpp"
#include "numkit.hpp"
#include "prolate.hpp"
#include "region.hpp"

namespace rlimit
{

// ------------------------------------------------------------------ kernels

/// |det B| K(2 pi B x) ~ sum_m alpha_m e^{i 2 pi k_m . B x}, alpha = |det B| a.
struct ExpSumKernel
{
    QuadratureND rule;
    Eigen::MatrixXd band;
    double det_band = 1.0;
    std::optional<TargetBox> verified; // set of x where the error was measured
    double error_profile = std::numeric_limits<double>::quiet_NaN();

    std::size_t dim() const { return rule.dim(); }
    std::size_t size() const { return rule.size(); }
    double alpha(std::size_t m) const { return det_band * rule.weights[m]; }

    /// Node B k_m of the spectral samples.
    Eigen::VectorXd spectral_node(std::size_t m) const
    {
        const Eigen::Map<const Eigen::VectorXd> k(rule.nodes[m].data(), static_cast<Eigen::Index>(dim()));
        return band * k;
    }

    complex_t eval(std::span<const double> x) const
    {
        const Eigen::Map<const Eigen::VectorXd> xv(x.data(), static_cast<Eigen::Index>(x.size()));
        const Eigen::VectorXd Bx = band * xv;
        return det_band * eval_exp_sum(rule, std::span<const double>(Bx.data(), x.size()));
    }

    complex_t exact(std::span<const double> x) const
    {
        const Eigen::Map<const Eigen::VectorXd> xv(x.data(), static_cast<Eigen::Index>(x.size()));
        const Eigen::VectorXd Bx = band * xv;
        return det_band * region_kernel_2pi(rule.region, std::span<const double>(Bx.data(), x.size()));
    }

    /// True when the verified box contains X + X for X = [lo, hi].
    bool covers_sumset(std::span<const double> lo, std::span<const double> hi) const
    {
        if (!verified)
            return false;
        for (std::size_t j = 0; j < dim(); ++j)
            if (verified->half[j] + 1e-12 < 2.0 * std::max(std::abs(lo[j]), std::abs(hi[j])))
                return false;
        return true;
    }
};

inline double max_kernel_error(const ExpSumKernel& k, const TargetBox& box)
{
    const PointSet g = box.grid();
    std::vector<double> e(g.size());
    parallel_for(g.size(), [&](std::size_t i) { e[i] = std::abs(k.exact(g[i]) - k.eval(g[i])); });
    return *std::max_element(e.begin(), e.end());
}

inline ExpSumKernel make_exp_sum_kernel(QuadratureND q, const Eigen::MatrixXd& B,
                                        std::optional<TargetBox> verify = std::nullopt)
{
    if (B.rows() != static_cast<Eigen::Index>(q.dim()) || B.cols() != B.rows())
        throw input_error("make_exp_sum_kernel: band matrix dimension mismatch");
    ExpSumKernel k;
    k.rule = std::move(q);
    k.band = B;
    k.det_band = std::abs(B.determinant());
    if (!(k.det_band > 1e-14))
        throw input_error("make_exp_sum_kernel: band matrix is singular");
    if (verify)
    {
        k.verified = verify;
        k.error_profile = max_kernel_error(k, *verify);
    }
    return k;
}

/// A symmetric 1D rule on [-1, 1] (weights summing to 2B) as a rule for the
/// interval region with weights alpha / B.
inline QuadratureND to_quadrature_nd(const Quadrature1D& q, double B)
{
    if (!q.symmetric)
        throw input_error("to_quadrature_nd: expected a symmetric rule");
    QuadratureND r;
    r.region = Region::interval(1.0);
    r.nodes = PointSet(1, q.nodes);
    for (double w : q.weights)
        r.weights.push_back(w / B);
    r.provenance = "1D rule " + q.preset;
    return r;
}

/// Rule for A R: nodes A k_m, weights |det A| a_m.
inline QuadratureND transform_rule(const QuadratureND& q, const Eigen::MatrixXd& A)
{
    QuadratureND r;
    r.region = Region::transformed(q.region, A);
    r.nodes = transform_nodes(q.nodes, A);
    const double d = std::abs(A.determinant());
    for (double w : q.weights)
        r.weights.push_back(d * w);
    r.provenance = q.provenance + "; linearly transformed";
    return r;
}

struct ProjectionResult
{
    SampledField field;
    double error_bound = 0.0;
    std::string provenance;
};

// ----------------------------------------------------------------------- 1D

/// Oracle: \int_{-T}^{T} f(tau) 2B sinc(2 pi B (t - tau)) dtau by adaptive
/// Gauss-Kronrod.
inline double bandlimited_projection_oracle(const std::function<double(double)>& f, double T, double B, double t,
                                            double abs_tol = 1e-10)
{
    if (!(T > 0.0) || !(B > 0.0))
        throw input_error("bandlimited_projection_oracle: T and B must be positive");
    IntegrationOptions opt;
    opt.abs_tol = abs_tol;
    opt.rel_tol = 1e-12;
    opt.piece = 0.5 / B;
    return integrate([&](double tau) { return f(tau) * 2.0 * B * sinc(2.0 * pi * B * (t - tau)); }, -T, T, opt);
}

/// sum_m alpha_m fhat(B w_m) e^{i 2 pi B w_m t}
inline complex_t discrete_fourier_repr_1d(std::span<const complex_t> fhat_at_nodes, const Quadrature1D& q, double B,
                                          double t)
{
    if (fhat_at_nodes.size() != q.size())
        throw input_error("discrete_fourier_repr_1d: node/value length mismatch");
    complex_t s(0.0);
    for (std::size_t m = 0; m < q.size(); ++m)
        s += q.weights[m] * fhat_at_nodes[m] * std::polar(1.0, 2.0 * pi * B * q.nodes[m] * t);
    return s;
}

/// eps_B(2 pi s) = 2B sinc(2 pi B s) - sum_m alpha_m e^{i 2 pi B w_m s}.
inline complex_t rule_kernel_error_1d(const Quadrature1D& q, double B, double s)
{
    complex_t sum(0.0);
    for (std::size_t m = 0; m < q.size(); ++m)
        sum += q.weights[m] * std::polar(1.0, 2.0 * pi * B * q.nodes[m] * s);
    return 2.0 * B * sinc(2.0 * pi * B * s) - sum;
}

/// max |eps_B(2 pi s)| over |s| <= S on a grid resolving the node phases.
inline double max_rule_kernel_error_1d(const Quadrature1D& q, double B, double S, std::size_t points = 0)
{
    if (points == 0)
        points = static_cast<std::size_t>(std::max(2001.0, 80.0 * B * S + 1.0));
    const auto s = linspace(-S, S, points);
    std::vector<double> e(points);
    parallel_for(points, [&](std::size_t i) { e[i] = std::abs(rule_kernel_error_1d(q, B, s[i])); });
    return *std::max_element(e.begin(), e.end());
}

/// Discrete Fourier bound 2T max|f| max_{|s| <= 2T} |eps_B(2 pi s)|.
inline double discrete_fourier_bound_1d(const Quadrature1D& q, double B, double T, double max_f)
{
    return 2.0 * T * max_f * max_rule_kernel_error_1d(q, B, 2.0 * T);
}

struct NyquistReport
{
    double B = 1.0;
    int K = 0;
    int M = 0;
    double max_lattice_error = 0.0;
    std::vector<complex_t> lattice_values; // f_B(l / 2B), l = -K..K
};

/// Delta train f = sum_k f_k delta(t - k/(2B)), k = -K..K, projected with the
/// (2M+1)-point uniform rule and evaluated on the sampling lattice.
inline NyquistReport nyquist_delta_train_check(std::span<const double> f, int M, double B = 1.0)
{
    if (f.empty() || f.size() % 2 == 0)
        throw input_error("nyquist_delta_train_check: need 2K+1 samples");
    const int K = static_cast<int>(f.size() / 2);
    if (M < K)
        throw input_error("nyquist_delta_train_check: M must be >= K");
    const Quadrature1D q = uniform_rule(B, M);
    std::vector<complex_t> fhat(q.size());
    for (std::size_t m = 0; m < q.size(); ++m)
    {
        const double nu = B * q.nodes[m];
        for (int k = -K; k <= K; ++k)
            fhat[m] += f[static_cast<std::size_t>(k + K)] * std::polar(1.0, -2.0 * pi * nu * k / (2.0 * B));
    }
    NyquistReport r{B, K, M, 0.0, {}};
    for (int l = -K; l <= K; ++l)
    {
        const complex_t v = discrete_fourier_repr_1d(fhat, q, B, l / (2.0 * B));
        r.lattice_values.push_back(v);
        r.max_lattice_error = std::max(r.max_lattice_error, std::abs(v - 2.0 * B * f[static_cast<std::size_t>(l + K)]));
    }
    return r;
}

enum class InterpolationMode
{
    spectral_truncated, // R_m from the eigen-expansion with mu_n >= mu_floor
    kernel_regularized  // R_m replaced by G(k - k_m)
};

inline std::string to_string(InterpolationMode m)
{
    return m == InterpolationMode::spectral_truncated ? "spectral_truncated" : "kernel_regularized";
}

/// G(d) = |det B| K(2 pi B d) with the kernel the basis was built on.
inline complex_t basis_kernel(const EigenBasis& eb, std::span<const double> d)
{
    const auto dd = static_cast<Eigen::Index>(d.size());
    const Eigen::Map<const Eigen::VectorXd> dv(d.data(), dd);
    const Eigen::VectorXd Bd = eb.band * dv;
    if (eb.mode == KernelMode::exact)
    {
        const Eigen::VectorXd arg = 2.0 * pi * Bd;
        return eb.det_band * region_kernel_exact(eb.region, std::span<const double>(arg.data(), d.size()));
    }
    complex_t g(0.0);
    for (std::size_t j = 0; j < eb.weights.size(); ++j)
    {
        double ph = 0.0;
        for (std::size_t c = 0; c < d.size(); ++c)
            ph += eb.nodes[j][c] * Bd[static_cast<Eigen::Index>(c)];
        g += eb.weights[j] * std::polar(1.0, 2.0 * pi * ph);
    }
    return eb.det_band * g;
}

/// Interpolation coefficients g_m with f_B(x) ~ sum_m a_m G(x - k_m) g_m,
/// from samples at the nodes.
inline Eigen::VectorXcd interpolation_coefficients(const EigenBasis& eb, std::span<const complex_t> samples,
                                                   InterpolationMode mode)
{
    const auto n = static_cast<Eigen::Index>(eb.weights.size());
    if (samples.size() != eb.weights.size())
        throw input_error("interpolation: sample count does not match the basis nodes");
    if (eb.kind != EigenKind::kernel_system)
        throw input_error("interpolation: basis must come from the kernel system");
    Eigen::VectorXcd Wf(n);
    for (Eigen::Index i = 0; i < n; ++i)
        Wf[i] = eb.weights[static_cast<std::size_t>(i)] * samples[static_cast<std::size_t>(i)];
    Eigen::VectorXcd g = Eigen::VectorXcd::Zero(n);
    if (mode == InterpolationMode::spectral_truncated)
    {
        // R_m(k) = sum_n mu_n^{-1} phi_n(k_m)^* phi_n(k) with W-orthonormal phi_n.
        for (std::size_t j = 0; j < eb.size(); ++j)
        {
            if (eb.mu[j] < mu_floor)
                continue;
            Eigen::VectorXcd phi = eb.vectors.col(static_cast<Eigen::Index>(j));
            double nrm2 = 0.0;
            for (Eigen::Index i = 0; i < n; ++i)
                nrm2 += eb.weights[static_cast<std::size_t>(i)] * std::norm(phi[i]);
            phi /= std::sqrt(nrm2);
            g += phi * (phi.adjoint() * Wf)(0) / eb.mu[j];
        }
        return g;
    }
    const std::size_t d = eb.dim();
    std::vector<double> diff(d);
    for (Eigen::Index m = 0; m < n; ++m)
        for (Eigen::Index l = 0; l < n; ++l)
        {
            for (std::size_t c = 0; c < d; ++c)
                diff[c] = eb.nodes[static_cast<std::size_t>(m)][c] - eb.nodes[static_cast<std::size_t>(l)][c];
            g[m] += basis_kernel(eb, diff) * Wf[l];
        }
    return g;
}

inline complex_t interpolate(const EigenBasis& eb, const Eigen::VectorXcd& g, std::span<const double> x)
{
    const std::size_t d = eb.dim();
    std::vector<double> diff(d);
    complex_t s(0.0);
    for (std::size_t m = 0; m < eb.weights.size(); ++m)
    {
        for (std::size_t c = 0; c < d; ++c)
            diff[c] = x[c] - eb.nodes[m][c];
        s += eb.weights[m] * basis_kernel(eb, diff) * g[static_cast<Eigen::Index>(m)];
    }
    return s;
}

/// f_B(t) = sum_k 2B sinc(2 pi B (t - w_k)) f_k, f_k = sum_m f(w_m) alpha_m R_m(w_k),
/// on the support [-1, 1].
inline complex_t sampling_interpolation_1d(std::span<const complex_t> f_at_nodes, const EigenBasis& basis, double t,
                                           InterpolationMode mode = InterpolationMode::spectral_truncated)
{
    if (basis.dim() != 1)
        throw input_error("sampling_interpolation_1d: basis must be one-dimensional");
    const auto g = interpolation_coefficients(basis, f_at_nodes, mode);
    return interpolate(basis, g, std::span<const double>(&t, 1));
}

/// Wrapper for support [-T, T]: rescales to [-1, 1] with band T B.
inline complex_t sampling_interpolation_1d_scaled(std::span<const complex_t> f_at_nodes, const Quadrature1D& q,
                                                  double B, double T, double t,
                                                  InterpolationMode mode = InterpolationMode::spectral_truncated)
{
    if (!(T > 0.0))
        throw input_error("sampling_interpolation_1d_scaled: T must be positive");
    const auto basis = pswf_kernel_eigensystem(q, T * B);
    return sampling_interpolation_1d(f_at_nodes, basis, t / T, mode);
}

/// Constant C of the sampling error estimate, summed over mu_n >= mu_floor.
inline double sampling_error_constant(const EigenBasis& eb, double B, double eps0, double eps_max)
{
    double C = 0.0;
    for (double mu : eb.mu)
    {
        if (mu < mu_floor)
            continue;
        C += 2.0 / std::sqrt(B) * std::pow(mu, -1.5) * (2.0 * B - eps0) + 8.0 * B / (mu * mu) * eps_max;
    }
    return C;
}

// ----------------------------------------------------------------------- ND

/// Trapezoidal weights of a tensor grid built by make_grid.
inline std::vector<double> trapezoid_weights(std::span<const double> lo, std::span<const double> hi,
                                             std::span<const int> counts)
{
    std::size_t total = 1;
    for (int c : counts)
        total *= static_cast<std::size_t>(c);
    std::vector<double> w(total, 1.0);
    std::size_t stride = total;
    for (std::size_t j = 0; j < counts.size(); ++j)
    {
        const auto c = static_cast<std::size_t>(counts[j]);
        stride /= c;
        const double h = (hi[j] - lo[j]) / static_cast<double>(c - 1);
        for (std::size_t i = 0; i < total; ++i)
        {
            const std::size_t idx = (i / stride) % c;
            w[i] *= (idx == 0 || idx == c - 1) ? 0.5 * h : h;
        }
    }
    return w;
}

/// fhat(nu) = \int f(x) e^{-i 2 pi nu . x} dx from grid samples (trapezoid).
inline complex_t fourier_transform_samples(const SampledField& f, std::span<const double> quad_weights,
                                           std::span<const double> nu)
{
    if (quad_weights.size() != f.size())
        throw input_error("fourier_transform_samples: weight count mismatch");
    complex_t s(0.0);
    for (std::size_t i = 0; i < f.size(); ++i)
    {
        double ph = 0.0;
        for (std::size_t c = 0; c < nu.size(); ++c)
            ph += nu[c] * f.points[i][c];
        s += quad_weights[i] * f.values[i] * std::polar(1.0, -2.0 * pi * ph);
    }
    return s;
}

/// Support box X = [lo, hi] of a compactly supported function.
struct SupportBox
{
    std::vector<double> lo, hi;

    double volume() const
    {
        double v = 1.0;
        for (std::size_t j = 0; j < lo.size(); ++j)
            v *= hi[j] - lo[j];
        return v;
    }
};

/// f_B(x) ~ sum_m alpha_m e^{i 2 pi B k_m . x} fhat(B k_m), evaluated at the
/// points, with the bound |X| max|f| max_{X+X} |eps_K(2 pi x)|.
inline ProjectionResult rlimited_discrete_fourier(const std::function<complex_t(std::span<const double>)>& fhat,
                                                  const ExpSumKernel& k, const SupportBox& X, double max_f,
                                                  const PointSet& points)
{
    if (points.dim() != k.dim() || X.lo.size() != k.dim())
        throw input_error("rlimited_discrete_fourier: dimension mismatch");
    if (!k.covers_sumset(X.lo, X.hi))
        throw input_error("rlimited_discrete_fourier: kernel verification set does not cover X + X");
    std::vector<complex_t> coef(k.size());
    for (std::size_t m = 0; m < k.size(); ++m)
    {
        const Eigen::VectorXd nu = k.spectral_node(m);
        coef[m] = k.alpha(m) * fhat(std::span<const double>(nu.data(), k.dim()));
    }
    std::vector<complex_t> vals(points.size());
    parallel_for(points.size(), [&](std::size_t i) {
        const Eigen::Map<const Eigen::VectorXd> x(points[i].data(), static_cast<Eigen::Index>(k.dim()));
        complex_t s(0.0);
        for (std::size_t m = 0; m < k.size(); ++m)
            s += coef[m] * std::polar(1.0, 2.0 * pi * k.spectral_node(m).dot(x));
        vals[i] = s;
    });
    ProjectionResult r;
    r.field = SampledField(points, std::move(vals), "f_B");
    r.error_bound = X.volume() * max_f * k.error_profile;
    r.provenance = "discrete Fourier representation; kernel " + k.rule.provenance;
    return r;
}

/// Same, with fhat computed from grid samples of f by the trapezoidal rule.
inline ProjectionResult rlimited_discrete_fourier(const SampledField& f, const SupportBox& X,
                                                  std::span<const int> counts, const ExpSumKernel& k,
                                                  const PointSet& points)
{
    const auto w = trapezoid_weights(X.lo, X.hi, counts);
    if (w.size() != f.size())
        throw input_error("rlimited_discrete_fourier: samples do not match the support grid");
    auto r = rlimited_discrete_fourier([&](std::span<const double> nu) { return fourier_transform_samples(f, w, nu); },
                                       k, X, f.max_abs(), points);
    r.provenance += "; fhat from trapezoidal sums";
    return r;
}

/// R_A-limited interpolation from samples f_A(A k_m): the basis is built for
/// the symmetric B = A^T A and evaluated at A^{-1} x.
inline ProjectionResult ra_sampling_interpolation(std::span<const complex_t> f_at_transformed_nodes,
                                                  const EigenBasis& basis, const Eigen::MatrixXd& A,
                                                  const PointSet& points,
                                                  InterpolationMode mode = InterpolationMode::kernel_regularized)
{
    const auto d = static_cast<Eigen::Index>(basis.dim());
    if (A.rows() != d || A.cols() != d)
        throw input_error("ra_sampling_interpolation: matrix dimension mismatch");
    if (std::abs(A.determinant()) <= 1e-14)
        throw input_error("ra_sampling_interpolation: A is singular");
    const Eigen::MatrixXd B = A.transpose() * A;
    if ((B - basis.band).cwiseAbs().maxCoeff() > 1e-10 * std::max(1.0, B.cwiseAbs().maxCoeff()))
        throw input_error("ra_sampling_interpolation: basis was not built for B = A^T A");
    const auto g = interpolation_coefficients(basis, f_at_transformed_nodes, mode);
    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(A);
    std::vector<complex_t> vals(points.size());
    parallel_for(points.size(), [&](std::size_t i) {
        const Eigen::Map<const Eigen::VectorXd> x(points[i].data(), d);
        const Eigen::VectorXd y = lu.solve(x);
        vals[i] = interpolate(basis, g, std::span<const double>(y.data(), static_cast<std::size_t>(d)));
    });
    ProjectionResult r;
    r.field = SampledField(points, std::move(vals), "f_A");
    r.error_bound = std::numeric_limits<double>::quiet_NaN();
    r.provenance = "R_A sampling interpolation (" + to_string(mode) + ")";
    return r;
}

/// Sample locations A k_m of an R_A interpolation.
inline PointSet transformed_sample_nodes(const EigenBasis& basis, const Eigen::MatrixXd& A)
{
    return transform_nodes(basis.nodes, A);
}

struct PatchPart
{
    Eigen::MatrixXd A;
    EigenBasis basis; // built for A^T A
    std::vector<complex_t> samples; // f at A k_m
};

/// Sum of per-part R_A interpolations over a union of transformed regions
/// whose pairwise overlaps the caller asserts to have measure zero.
inline ProjectionResult patched_projection(const std::vector<PatchPart>& parts, const PointSet& points,
                                           InterpolationMode mode = InterpolationMode::kernel_regularized)
{
    if (parts.empty())
        throw input_error("patched_projection: no parts");
    ProjectionResult total;
    total.field = SampledField(points, std::vector<complex_t>(points.size()), "f_union");
    for (const auto& p : parts)
    {
        const auto r = ra_sampling_interpolation(p.samples, p.basis, p.A, points, mode);
        for (std::size_t i = 0; i < points.size(); ++i)
            total.field.values[i] += r.field.values[i];
    }
    total.error_bound = std::numeric_limits<double>::quiet_NaN();
    total.provenance = "patched union of " + std::to_string(parts.size()) +
                       " parts; measure-zero overlap asserted by caller";
    return total;
}

/// K_Sigma(x) = sum_l |det A_l| K_l(A_l^T x), in the no-2pi convention.
inline complex_t patched_kernel(const std::vector<std::pair<Eigen::MatrixXd, Region>>& parts, std::span<const double> x)
{
    std::vector<Region> rs;
    for (const auto& [A, R] : parts)
        rs.push_back(Region::transformed(R, A));
    return region_kernel_exact(Region::union_of(std::move(rs)), x);
}

} // namespace rlimit

#endif // RLIMIT_PROJECTION_HPP
