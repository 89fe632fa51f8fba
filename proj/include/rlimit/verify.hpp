#ifndef RLIMIT_VERIFY_HPP
#define RLIMIT_VERIFY_HPP

// Verification suites: each check compares a measured value against the
// bound it is supposed to respect, using independent oracles.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cubature.hpp"
#include "kernels.hpp"
#include "moments.hpp"
#include "projection.hpp"
#include "prolate.hpp"
#include "sincapprox.hpp"

namespace rlimit
{

struct Check
{
    std::string suite;
    int criterion = 0;
    std::string name;
    double bound = 0.0;
    double measured = 0.0;
    double slack = 0.0;
    bool pass = false;
    std::string note;
};

struct VerifyReport
{
    std::vector<Check> checks;
    double runtime_s = 0.0;

    bool all_pass() const
    {
        return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
    }
};

struct VerifyOptions
{
    int grid = 41;       // points per axis of the 2D projection grid
    double slack = 0.0;  // relative slack applied to every bound
    unsigned seed = 1;   // test-function generation only
};

namespace detail
{
inline Check make_check(std::string suite, int crit, std::string name, double bound, double measured, double slack,
                        std::string note = {})
{
    Check c{std::move(suite), crit, std::move(name), bound, measured, slack, false, std::move(note)};
    c.pass = std::isfinite(measured) && measured <= bound * (1.0 + slack);
    return c;
}

inline double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

/// c_j cos(2 pi nu_j t + phi_j) on [-T, T], zero outside, with its transform.
struct CosineBump
{
    double T = 1.0;
    std::vector<double> c, nu, phase;

    double operator()(double t) const
    {
        if (std::abs(t) > T)
            return 0.0;
        double s = 0.0;
        for (std::size_t j = 0; j < c.size(); ++j)
            s += c[j] * std::cos(2.0 * pi * nu[j] * t + phase[j]);
        return s;
    }

    complex_t hat(double v) const
    {
        complex_t s(0.0);
        for (std::size_t j = 0; j < c.size(); ++j)
            s += 0.5 * c[j] *
                 (std::polar(2.0 * T, phase[j]) * sinc(2.0 * pi * (nu[j] - v) * T) +
                  std::polar(2.0 * T, -phase[j]) * sinc(2.0 * pi * (nu[j] + v) * T));
        return s;
    }

    double max_abs(std::size_t n = 4001) const
    {
        double m = 0.0;
        for (double t : linspace(-T, T, n))
            m = std::max(m, std::abs((*this)(t)));
        return m;
    }

    static CosineBump random(std::mt19937_64& rng, double T, double max_freq, int terms)
    {
        std::uniform_real_distribution<double> u(0.0, 1.0);
        CosineBump f;
        f.T = T;
        for (int j = 0; j < terms; ++j)
        {
            f.c.push_back(2.0 * u(rng) - 1.0);
            f.nu.push_back(max_freq * u(rng));
            f.phase.push_back(2.0 * pi * u(rng));
        }
        return f;
    }
};
} // namespace detail

// ---------------------------------------------------------------- criterion 1

inline std::vector<Check> verify_moments_suite(const VerifyOptions& o)
{
    const auto t0 = std::chrono::steady_clock::now();
    double gl = 0.0, ch = 0.0;
    for (int M = 1; M <= 32; ++M)
    {
        const auto r1 = verify_moments(gauss_legendre_01(M), preset_moments(MomentPreset::sinc_cos, 1.0, 2 * M));
        const auto r2 = verify_moments(chebyshev_rule_for_j0(M), preset_moments(MomentPreset::j0_cos, 1.0, 2 * M));
        gl = std::max(gl, *std::max_element(r1.begin(), r1.end()));
        ch = std::max(ch, *std::max_element(r2.begin(), r2.end()));
    }
    const double t = detail::seconds_since(t0);
    return {detail::make_check("moments", 1, "gauss_legendre_01 moments n <= 2M-1, M = 1..32", 1e-13, gl, o.slack),
            detail::make_check("moments", 1, "chebyshev_rule_for_j0 moments n <= 2M-1, M = 1..32", 1e-13, ch, o.slack),
            detail::make_check("moments", 1, "runtime [s]", 1.0, t, 0.0)};
}

// ---------------------------------------------------------------- criterion 2

inline std::vector<Check> verify_sinc_scaling_suite(const VerifyOptions& o)
{
    const auto t0 = std::chrono::steady_clock::now();
    const auto a = build_sinc_cosine_approx(20.0, 8);
    std::vector<Check> out;
    out.push_back(detail::make_check("sinc-scaling", 2, "level for B0 = 20 equals 3", 0.0, std::abs(a.level - 3), 0.0));
    out.push_back(detail::make_check("sinc-scaling", 2, "reduced band equals 20/27", 0.0,
                                     std::abs(a.band() - 20.0 / 27.0), 0.0));
    double lvl = 0.0, base = 0.0, pointwise = 0.0;
    for (double x : linspace(-2.0, 2.0, 4001))
    {
        const double e = std::abs(error_epsilon_B(a, x));
        const double b = std::abs(base_error(a, x));
        lvl = std::max(lvl, e);
        base = std::max(base, b);
        pointwise = std::max(pointwise, e - b);
    }
    out.push_back(detail::make_check("sinc-scaling", 2, "max level-3 error <= max level-0 error + 1e-14", base + 1e-14,
                                     lvl, o.slack));
    out.push_back(detail::make_check("sinc-scaling", 2, "pointwise |eps_n| - |eps_0| on [-2, 2]", 1e-14, pointwise,
                                     o.slack));
    // Same pointwise bound for the other levels n <= 4.
    double worst = 0.0;
    for (int n = 0; n <= 4; ++n)
    {
        const auto an = build_sinc_cosine_approx(20.0 / 27.0 * pow3(n), 8, n);
        for (double x : linspace(-2.0, 2.0, 1000))
            worst = std::max(worst, std::abs(error_epsilon_B(an, x)) - std::abs(base_error(an, x)));
    }
    out.push_back(detail::make_check("sinc-scaling", 2, "pointwise bound at levels 0..4", 1e-14, worst, o.slack));
    out.push_back(detail::make_check("sinc-scaling", 2, "runtime [s]", 5.0, detail::seconds_since(t0), 0.0));
    return out;
}

// ---------------------------------------------------------------- criterion 3

inline std::vector<Check> verify_sinc_lattice_suite(const VerifyOptions& o)
{
    const double B = 20.0 / 27.0;
    double worst = 0.0;
    for (int n = 0; n <= 3; ++n)
    {
        const auto a = build_sinc_cosine_approx(B * pow3(n + 1), 8, n + 1);
        for (int m = -5; m <= 5; ++m)
        {
            const double x = m * pi / B;
            worst = std::max(worst, std::abs(error_epsilon_B(a, x) - base_error(a, x)));
        }
    }
    return {detail::make_check("sinc-lattice", 3, "lattice identity at m pi / B, m = -5..5, n = 0..3", 1e-12, worst,
                               o.slack)};
}

// ---------------------------------------------------------------- criterion 4

inline std::vector<Check> verify_uniform_sampling_suite(const VerifyOptions& o)
{
    std::vector<Check> out;
    const double B = 20.0 / 27.0;
    for (int N : {5, 13, 40})
    {
        const auto [xmax, predicted] = uniform_max_error(B, N);
        double measured = 0.0;
        for (double x : linspace(0.0, xmax, 200001))
            measured = std::max(measured, std::abs(sinc(B * x) - periodic_sinc(B, N, x)));
        out.push_back(detail::make_check("uniform-sampling", 4,
                                         "max error formula, relative deviation, N = " + std::to_string(N), 1e-6,
                                         std::abs(measured - predicted) / predicted, o.slack));
    }
    const double slope = periodic_sinc_error_slope(B, 0.5, {20, 40, 80, 160, 320});
    out.push_back(detail::make_check("uniform-sampling", 4, "near-zero error slope |s + 2|", 0.1, std::abs(slope + 2.0),
                                     o.slack, "slope " + std::to_string(slope)));
    return out;
}

// ---------------------------------------------------------------- criterion 5

inline std::vector<Check> verify_pswf_suite(const VerifyOptions& o)
{
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<Check> out;
    for (double B : {2.0, 5.0})
    {
        const int M = static_cast<int>(std::ceil(2.0 * B)) + 6;
        const auto q = gauss_legendre_sinc_rule(B, M);
        const auto ex = pswf_exp_eigensystem(q, B);
        const auto ke = pswf_kernel_eigensystem(q, B);
        double rel = 0.0;
        for (std::size_t n = 0; n < ke.size(); ++n)
            rel = std::max(rel, std::abs(ke.mu[n] - B * std::norm(ex.lambda[n])) / ke.mu.front());
        out.push_back(detail::make_check("pswf", 5,
                                         "mu_n = B |lambda_n|^2 across systems, B = " + std::to_string(int(B)), 1e-9,
                                         rel, o.slack, "relative to the largest eigenvalue"));
    }
    const int M = 8;
    const double B = (2.0 * M + 1.0) / 4.0;
    const auto q = uniform_rule(B, M);
    const auto ke = pswf_kernel_eigensystem(q, B);
    double dev = 0.0;
    for (double mu : ke.mu)
        dev = std::max(dev, std::abs(mu - 1.0));
    out.push_back(detail::make_check("pswf", 5, "uniform rule kernel eigenvalues equal 1", 1e-10, dev, o.slack));
    const auto ex = pswf_exp_eigensystem(q, B);
    const auto vals = distinct_values(ex.lambda, 1e-8);
    out.push_back(detail::make_check("pswf", 5, "uniform rule exp spectrum has 4 distinct values", 0.0,
                                     std::abs(static_cast<double>(vals.size()) - 4.0), 0.0));
    // The four values must be {c, -c, ic, -ic} for one magnitude c.
    double shape = 1.0;
    if (vals.size() == 4)
    {
        const double c = std::abs(vals.front());
        shape = 0.0;
        for (const complex_t target : {complex_t(c, 0), complex_t(-c, 0), complex_t(0, c), complex_t(0, -c)})
        {
            double best = 1e300;
            for (const auto& v : vals)
                best = std::min(best, std::abs(v - target));
            shape = std::max(shape, best);
        }
    }
    out.push_back(detail::make_check("pswf", 5, "exp spectrum is {+-c, +-ic}", 1e-10, shape, o.slack,
                                     vals.empty() ? "" : "c = " + std::to_string(std::abs(vals.front()))));
    out.push_back(detail::make_check("pswf", 5, "runtime [s]", 30.0, detail::seconds_since(t0), 0.0));
    return out;
}

// ---------------------------------------------------------------- criterion 6

inline std::vector<Check> verify_eigen_count_suite(const VerifyOptions&)
{
    const double B = 5.0;
    const auto q = gauss_legendre_sinc_rule(B, static_cast<int>(std::ceil(2.0 * B)) + 6);
    const auto eb = pswf_kernel_eigensystem(q, B);
    const auto n = static_cast<double>(count_above(eb, 0.5));
    return {detail::make_check("eigen-count", 6, "|#{mu_n > 0.5} - 20| for B = 5", 3.0, std::abs(n - 20.0), 0.0,
                               "count " + std::to_string(static_cast<int>(n)))};
}

// ---------------------------------------------------------------- criterion 7

inline std::vector<Check> verify_projection_1d_suite(const VerifyOptions& o)
{
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(o.seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double T = 1.0;
    double worst_ratio = 0.0;
    int fails = 0;
    for (int trial = 0; trial < 20; ++trial)
    {
        const double B = 2.0 + 3.0 * u(rng);
        const int M = static_cast<int>(std::ceil(2.0 * B)) + 2 + trial % 8;
        const auto f = detail::CosineBump::random(rng, T, 3.0 * B, 1 + trial % 3);
        const auto q = gauss_legendre_sinc_rule(B, M);
        std::vector<complex_t> fh;
        for (double w : q.nodes)
            fh.push_back(f.hat(B * w));
        const double bound = discrete_fourier_bound_1d(q, B, T, f.max_abs());
        const auto ts = linspace(-T, T, 101);
        std::vector<double> e(ts.size());
        parallel_for(ts.size(), [&](std::size_t i) {
            const double oracle = bandlimited_projection_oracle(f, T, B, ts[i]);
            e[i] = std::abs(discrete_fourier_repr_1d(fh, q, B, ts[i]) - oracle);
        });
        const double err = *std::max_element(e.begin(), e.end());
        worst_ratio = std::max(worst_ratio, err / bound);
        if (err > bound * (1.0 + o.slack))
            ++fails;
    }
    return {detail::make_check("projection-1d", 7, "1D bound, 20 random functions: worst error / bound", 1.0,
                               worst_ratio, o.slack, std::to_string(fails) + " violations"),
            detail::make_check("projection-1d", 7, "runtime [s]", 180.0, detail::seconds_since(t0), 0.0)};
}

/// Fourier-side oracle for a separable f on a box, projected onto B R for a
/// triangle R: |det B| \int_R fhat(B k) e^{i 2 pi B k . x} dk.
inline complex_t triangle_projection_oracle(const std::function<complex_t(double, double)>& fhat,
                                            const TriangleSpec& t, const Eigen::Matrix2d& B, double x, double y,
                                            double tol = 1e-11)
{
    IntegrationOptions opt;
    opt.abs_tol = tol;
    opt.rel_tol = tol;
    const Eigen::Vector2d bx = B.transpose() * Eigen::Vector2d(x, y);
    auto inner = [&](double kx) {
        const double w = t.s * kx;
        if (w <= 0.0)
            return complex_t(0.0);
        return integrate(
            [&](double ky) {
                const Eigen::Vector2d nu = B * Eigen::Vector2d(kx, ky);
                return fhat(nu[0], nu[1]) * std::polar(1.0, 2.0 * pi * (kx * bx[0] + ky * bx[1]));
            },
            -w, w, opt);
    };
    return std::abs(B.determinant()) * integrate(inner, 0.0, t.dp, opt);
}

inline std::vector<Check> verify_projection_2d_suite(const VerifyOptions& o)
{
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(o.seed + 1000);
    const TriangleSpec tri{1.0, 1.0, {}};
    const Eigen::Matrix2d B = 2.0 * Eigen::Matrix2d::Identity();
    auto q = triangle_quadrature(tri, 20, 24, TargetBox{{4.0, 4.0}, {81, 81}});
    const auto K = make_exp_sum_kernel(q, B, TargetBox{{2.0, 2.0}, {161, 161}});
    const SupportBox X{{-1.0, -1.0}, {1.0, 1.0}};
    const int g = std::max(2, o.grid);
    const auto pts = make_grid({-1.0, -1.0}, {1.0, 1.0}, {g, g});
    double worst_ratio = 0.0;
    int fails = 0;
    for (int trial = 0; trial < 5; ++trial)
    {
        const auto g1 = detail::CosineBump::random(rng, 1.0, 3.0, 2);
        const auto g2 = detail::CosineBump::random(rng, 1.0, 3.0, 2);
        const double mf = g1.max_abs() * g2.max_abs();
        auto fhat2 = [&](double a, double b) { return g1.hat(a) * g2.hat(b); };
        const auto r = rlimited_discrete_fourier([&](std::span<const double> nu) { return fhat2(nu[0], nu[1]); }, K,
                                                 X, mf, pts);
        std::vector<double> e(pts.size());
        parallel_for(pts.size(), [&](std::size_t i) {
            e[i] = std::abs(triangle_projection_oracle(fhat2, tri, B, pts[i][0], pts[i][1]) - r.field.values[i]);
        });
        const double err = *std::max_element(e.begin(), e.end());
        worst_ratio = std::max(worst_ratio, err / r.error_bound);
        if (err > r.error_bound * (1.0 + o.slack))
            ++fails;
    }
    return {detail::make_check("projection-2d", 7,
                               "triangle bound, 5 functions, " + std::to_string(g) + "x" + std::to_string(g) +
                                   " grid: worst error / bound",
                               1.0, worst_ratio, o.slack, std::to_string(fails) + " violations"),
            detail::make_check("projection-2d", 7, "runtime [s]", 180.0, detail::seconds_since(t0), 0.0)};
}

// ---------------------------------------------------------------- criterion 8

inline std::vector<Check> verify_nyquist_suite(const VerifyOptions& o)
{
    std::mt19937_64 rng(o.seed + 2000);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const double B = 1.0;
    double worst = 0.0;
    for (int K = 0; K <= 8; ++K)
        for (int M = K; M <= K + 4; ++M)
        {
            std::vector<double> f(static_cast<std::size_t>(2 * K + 1));
            for (auto& v : f)
                v = u(rng);
            worst = std::max(worst, nyquist_delta_train_check(f, M, B).max_lattice_error);
        }
    return {detail::make_check("nyquist", 8, "max |f_B(l/2B) - 2B f_l|, K <= 8, M = K..K+4", 1e-9 * 2.0 * B, worst,
                               o.slack)};
}

// ---------------------------------------------------------------- criterion 9

inline std::vector<Check> verify_triangle_suite(const VerifyOptions& o)
{
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<Check> out;
    std::mt19937_64 rng(o.seed + 3000);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    const TriangleSpec tri{1.0, 1.0, {}};
    double scaling = 0.0;
    for (int i = 0; i < 1000; ++i)
    {
        const double x = u(rng), y = u(rng);
        const complex_t full = k_triangle(tri, x, y);
        const complex_t rhs = triangle_scaling_refine(tri, x, y, k_triangle(tri, 0.5 * x, 0.5 * y),
                                                      k_triangle(tri, -0.5 * x, 0.5 * y));
        scaling = std::max(scaling, std::abs(full - rhs) / std::max(std::abs(full), 1e-3 * tri.area()));
    }
    out.push_back(detail::make_check("triangle", 9, "scaling identity at 1000 random points (relative)", 1e-12,
                                     scaling, o.slack));

    const TargetBox box{{2.0, 2.0}, {41, 41}};
    const auto q = triangle_quadrature(tri, 12, 12, box);
    std::uniform_real_distribution<double> ub(-2.0, 2.0);
    PointSet probe(2);
    for (int i = 0; i < 1000; ++i)
    {
        const double p[2] = {ub(rng), ub(rng)};
        probe.push_back(p);
    }
    const auto e = surrogate_errors(q, probe);
    out.push_back(detail::make_check("triangle", 9, "surrogate error at 1000 random target points vs recorded profile",
                                     q.profile.max_error, *std::max_element(e.begin(), e.end()), 0.05 + o.slack,
                                     q.provenance));
    const auto levels = triangle_refinement_check(q, tri, box, 5);
    double excess = 0.0, growth = 0.0;
    for (std::size_t m = 1; m < levels.size(); ++m)
    {
        excess = std::max(excess, levels[m].bound_excess);
        growth = std::max(growth, levels[m].max_error - levels[m - 1].max_error);
    }
    out.push_back(detail::make_check("triangle", 9, "refinement levels 1..5: combination bound excess", 0.0,
                                     excess, 0.0));
    out.push_back(detail::make_check("triangle", 9, "refinement levels 1..5: growth of grid max error", 1e-12,
                                     growth, 0.0));
    out.push_back(detail::make_check("triangle", 9, "runtime [s]", 60.0, detail::seconds_since(t0), 0.0));
    return out;
}

// --------------------------------------------------------------- criterion 10

inline std::vector<Check> verify_symmetry_suite(const VerifyOptions& o)
{
    std::vector<Check> out;
    const auto eq = equilateral_symmetric_quadrature(12, 12);
    const auto rot = transform_nodes(eq.nodes, rotation2(2.0 * pi / 3.0));
    out.push_back(detail::make_check("symmetry", 10, "equilateral nodes invariant under 2pi/3 rotation", 1e-12,
                                     multiset_match_distance(eq.nodes, eq.weights, rot, eq.weights), o.slack));

    const auto G = tetra_symmetry_group();
    out.push_back(detail::make_check("symmetry", 10, "tetra group has 12 elements", 0.0,
                                     std::abs(static_cast<double>(G.size()) - 12.0), 0.0));
    const auto v = tetra_vertices();
    double orth = 0.0, det = 0.0, perm = 0.0;
    for (const auto& R : G)
    {
        orth = std::max(orth, (R.transpose() * R - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff());
        det = std::max(det, std::abs(R.determinant() - 1.0));
        std::vector<bool> hit(4, false);
        double worst = 0.0;
        for (const auto& vi : v)
        {
            double best = 1e300;
            std::size_t arg = 0;
            for (std::size_t j = 0; j < 4; ++j)
            {
                const double d = (R * vi - v[j]).norm();
                if (d < best)
                {
                    best = d;
                    arg = j;
                }
            }
            worst = std::max(worst, best);
            if (hit[arg])
                worst = 1.0;
            hit[arg] = true;
        }
        perm = std::max(perm, worst);
    }
    out.push_back(detail::make_check("symmetry", 10, "tetra group orthogonality", 1e-12, orth, o.slack));
    out.push_back(detail::make_check("symmetry", 10, "tetra group orientation (det = 1)", 1e-12, det, o.slack));
    out.push_back(detail::make_check("symmetry", 10, "tetra group permutes the vertices", 1e-12, perm, o.slack));
    const auto tq = tetra_symmetric_quadrature(4, 4, 4);
    out.push_back(detail::make_check("symmetry", 10, "tetra nodes invariant under all 12 rotations", 1e-12,
                                     symmetry_invariance_error(tq), o.slack));
    return out;
}

// --------------------------------------------------------------- criterion 11

inline std::vector<Check> verify_cone_suite(const VerifyOptions& o)
{
    std::vector<Check> out;
    const ConeSpec c{1.0, 1.0, 2};
    const auto j1 = j1_cosinc_rule(6);
    const double ls = cone_ls_error(c, j1);
    double gmax = 1.0;
    for (double g : j1.nodes)
        gmax = std::max(gmax, g);
    // Sup bound by Cauchy-Schwarz over the support of the symbol difference.
    const double support = 2.0 * pi * std::pow(c.omega0, 3) * c.pmax * c.pmax * gmax * gmax / 3.0;
    const double bound = std::sqrt(support * ls);
    const auto ts = linspace(-2.5, 2.5, 21);
    const auto rs = linspace(0.0, 5.0, 21);
    std::vector<double> e2(ts.size() * rs.size());
    parallel_for(e2.size(), [&](std::size_t i) {
        const double t = ts[i / rs.size()], r = rs[i % rs.size()];
        const double exact = k_cone(c, t, {r, 0.0}).real();
        const double d = exact - tilde_k_cone(c, j1, t, r);
        e2[i] = d * d;
    });
    double sum = 0.0;
    for (double v : e2)
        sum += v;
    const double rms = std::sqrt(sum / static_cast<double>(e2.size()));
    out.push_back(detail::make_check("cone", 11, "21x21 (t, r) RMS of K - K~ vs sqrt(|supp| LS) (+5%)", bound, rms,
                                     0.05 + o.slack));

    // LS level against a brute-force integral of (J1 - J1~)^2 / z.
    IntegrationOptions opt;
    opt.abs_tol = 1e-9;
    opt.rel_tol = 1e-6;
    opt.max_depth = 10;
    opt.piece = 2.0;
    const double Z = 4000.0;
    const double I = integrate(
                         [&](double z) {
                             double s = 0.0;
                             for (std::size_t m = 0; m < j1.size(); ++m)
                                 s += j1.weights[m] / j1.nodes[m] * cosinc(j1.nodes[m] * z);
                             const double d = std::cyl_bessel_j(1.0, z) - s;
                             return d * d / z;
                         },
                         1e-12, Z, opt) +
                     1.0 / (pi * Z);
    const double Iformula = j1_cosinc_ls_integral(j1);
    out.push_back(detail::make_check("cone", 11, "LS integral vs brute force (relative)", 0.05,
                                     std::abs(Iformula - I) / I, o.slack));

    // Measures by direct integration of the cross-sections.
    IntegrationOptions mo;
    const double cone_measure =
        integrate([&](double w) { return pi * std::pow(std::abs(w) * c.pmax, 2); }, -c.omega0, c.omega0, mo);
    const auto cq = cone_quadrature(c, 8, 8, 8);
    out.push_back(detail::make_check("cone", 11, "cone weight sum vs measure (relative)", 1e-6,
                                     std::abs(cq.weight_sum() - cone_measure) / cone_measure, o.slack));
    const double kmax = 1.0;
    const double ball_measure = integrate([&](double r) { return 4.0 * pi * r * r; }, 0.0, kmax, mo);
    const auto bq = ball_quadrature(kmax, 8, 8, 8);
    out.push_back(detail::make_check("cone", 11, "ball weight sum vs measure (relative)", 1e-6,
                                     std::abs(bq.weight_sum() - ball_measure) / ball_measure, o.slack));
    return out;
}

// -------------------------------------------------------------------- driver

struct Suite
{
    std::string name;
    int criterion;
    std::function<std::vector<Check>(const VerifyOptions&)> run;
};

inline const std::vector<Suite>& verification_suites()
{
    static const std::vector<Suite> s = {
        {"moments", 1, verify_moments_suite},
        {"sinc-scaling", 2, verify_sinc_scaling_suite},
        {"sinc-lattice", 3, verify_sinc_lattice_suite},
        {"uniform-sampling", 4, verify_uniform_sampling_suite},
        {"pswf", 5, verify_pswf_suite},
        {"eigen-count", 6, verify_eigen_count_suite},
        {"projection-1d", 7, verify_projection_1d_suite},
        {"projection-2d", 7, verify_projection_2d_suite},
        {"nyquist", 8, verify_nyquist_suite},
        {"triangle", 9, verify_triangle_suite},
        {"symmetry", 10, verify_symmetry_suite},
        {"cone", 11, verify_cone_suite},
    };
    return s;
}

/// Runs the named suites ("all" or empty selects every suite). Unknown names
/// raise input_error.
inline VerifyReport run_verification(const std::vector<std::string>& names, const VerifyOptions& o = {})
{
    const auto& all = verification_suites();
    const bool every = names.empty() || std::find(names.begin(), names.end(), "all") != names.end();
    for (const auto& n : names)
        if (n != "all" && std::none_of(all.begin(), all.end(), [&](const Suite& s) { return s.name == n; }))
            throw input_error("unknown suite '" + n + "'");
    const auto t0 = std::chrono::steady_clock::now();
    VerifyReport r;
    for (const auto& s : all)
    {
        if (!every && std::find(names.begin(), names.end(), s.name) == names.end())
            continue;
        auto c = s.run(o);
        r.checks.insert(r.checks.end(), c.begin(), c.end());
    }
    r.runtime_s = detail::seconds_since(t0);
    return r;
}

} // namespace rlimit

#endif // RLIMIT_VERIFY_HPP
