#ifndef RLIMIT_SINCAPPROX_HPP
#define RLIMIT_SINCAPPROX_HPP

// Sinc approximations: cosine sums with 3^n band scaling, the periodic sinc
// of uniform sampling, and Gaussian-tapered chirplet sums.

#include <algorithm>
#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "moments.hpp"
#include "numkit.hpp"

namespace rlimit
{

// Level n such that B = B0 / 3^n lies in [1/3, 1): n = floor(log3 floor(B0)) + 1
// for B0 >= 1 and n = 0 below. Integer arithmetic keeps powers of 3 exact.
inline int sinc_level(double B0)
{
    if (!(B0 > 0.0) || !std::isfinite(B0))
        throw input_error("sinc_level: B0 must be positive and finite");
    if (B0 < 1.0)
        return 0;
    const double fl = std::floor(B0);
    int n = 0;
    double p = 1.0;
    while (p * 3.0 <= fl)
    {
        p *= 3.0;
        ++n;
    }
    return n + 1;
}

inline double pow3(int n)
{
    double p = 1.0;
    for (int j = 0; j < n; ++j)
        p *= 3.0;
    return p;
}

struct CosineSumApprox
{
    Quadrature1D base; // half rule at the reduced band, nodes theta in [0, 1]
    int level = 0;
    double B0 = 1.0;
    std::optional<Quadrature1D> expanded;

    double band() const { return base.band; }
};

// Expanded rule: nodes theta + 2k (k = -(3^n-1)/2 .. (3^n-1)/2) in units of the
// reduced band, weights alpha / 3^n. Coinciding nodes are merged.
inline Quadrature1D expand_cosine_rule(const Quadrature1D& base, int level)
{
    const long K = (static_cast<long>(pow3(level)) - 1) / 2;
    const double inv = 1.0 / pow3(level);
    std::vector<std::pair<double, double>> nw;
    for (std::size_t m = 0; m < base.size(); ++m)
        for (long k = -K; k <= K; ++k)
            nw.emplace_back(base.nodes[m] + 2.0 * static_cast<double>(k), base.weights[m] * inv);
    std::sort(nw.begin(), nw.end());
    Quadrature1D q;
    q.band = base.band;
    q.symmetric = false;
    q.preset = base.preset;
    q.M = base.M;
    for (const auto& [node, w] : nw)
    {
        if (!q.nodes.empty() && std::abs(node - q.nodes.back()) <= 1e-12)
        {
            q.weights.back() += w;
            continue;
        }
        q.nodes.push_back(node);
        q.weights.push_back(w);
    }
    return q;
}

inline CosineSumApprox build_sinc_cosine_approx(double B0, int M, std::optional<int> level = std::nullopt,
                                                double tol = 1e-12)
{
    if (!(B0 > 0.0) || !std::isfinite(B0))
        throw input_error("build_sinc_cosine_approx: B0 must be positive");
    if (M < 1)
        throw input_error("build_sinc_cosine_approx: M must be >= 1");
    const int n = level ? *level : sinc_level(B0);
    if (n < 0)
        throw input_error("build_sinc_cosine_approx: level must be >= 0");
    const double B = B0 / pow3(n);
    if (B > 2.0)
        throw input_error("build_sinc_cosine_approx: reduced band exceeds the stable range (0, 2]");
    const auto h = preset_moments(MomentPreset::sinc_cos, B, 2 * M);
    CosineSumApprox a;
    a.base = to_cosine_rule(solve_moment_problem(h, M, tol), B);
    a.level = n;
    a.B0 = B0;
    if (n > 0)
        a.expanded = expand_cosine_rule(a.base, n);
    return a;
}

inline double eval_cosine_rule(const Quadrature1D& q, double x)
{
    double s = 0.0;
    for (std::size_t m = 0; m < q.size(); ++m)
        s += q.weights[m] * std::cos(q.nodes[m] * q.band * x);
    return s;
}

inline double eval_cosine_sum(const CosineSumApprox& a, double x)
{
    if (a.level == 0)
        return eval_cosine_rule(a.base, x);
    if (a.expanded)
        return eval_cosine_rule(*a.expanded, x);
    return eval_cosine_rule(expand_cosine_rule(a.base, a.level), x);
}

/// sinc(B0 x) minus the approximation.
inline double error_epsilon_B(const CosineSumApprox& a, double x)
{
    return sinc(a.B0 * x) - eval_cosine_sum(a, x);
}

/// Error of the unscaled base rule at the reduced band B.
inline double base_error(const CosineSumApprox& a, double x)
{
    return sinc(a.band() * x) - eval_cosine_rule(a.base, x);
}

/// Multiplier prod_j (1 + 2 cos(2 3^j B x)) / 3 taking sinc(Bx) to sinc(3^n Bx).
inline double scaling_multiplier(double B, int n, double x)
{
    double m = 1.0;
    double f = 2.0 * B;
    for (int j = 0; j < n; ++j)
    {
        m *= (1.0 + 2.0 * std::cos(f * x)) / 3.0;
        f *= 3.0;
    }
    return m;
}

/// Applies the 3^n scaling multiplier to samples of any sinc(Bx) approximant.
inline SampledField scale_general(const SampledField& f, double B, int n)
{
    if (f.points.dim() != 1)
        throw input_error("scale_general: grid must be 1-dimensional");
    if (n < 0)
        throw input_error("scale_general: n must be >= 0");
    SampledField out = f;
    for (std::size_t i = 0; i < f.size(); ++i)
        out.values[i] = f.values[i] * scaling_multiplier(B, n, f.points[i][0]);
    return out;
}

/// sin(Bx) / ((2N+1) sin(Bx/(2N+1))), the Riemann sum of sinc(Bx) with 2N+1
/// uniform nodes.
inline double periodic_sinc(double B, int N, double x)
{
    if (!(B > 0.0))
        throw input_error("periodic_sinc: B must be positive");
    if (N < 0)
        throw input_error("periodic_sinc: N must be >= 0");
    const double L = 2.0 * N + 1.0;
    // With L odd the ratio has period pi in u = Bx/L; reduce before dividing.
    const double r = std::remainder(B * x / L, pi);
    return sinc(L * r) / sinc(r);
}

/// Location and value of the maximum of |sinc(Bx) - periodic_sinc| over
/// [0, (2N+1) pi / (2B)].
inline std::pair<double, double> uniform_max_error(double B, int N)
{
    if (!(B > 0.0))
        throw input_error("uniform_max_error: B must be positive");
    if (N < 1)
        throw input_error("uniform_max_error: N must be >= 1");
    const double L = 2.0 * N + 1.0;
    return {L * pi / (2.0 * B), 2.0 / (L * pi) * (pi / 2.0 - 1.0)};
}

/// Least-squares slope of log |sinc(Bx) - periodic_sinc(B, N, x)| against
/// log(2N+1) at a fixed x.
inline double periodic_sinc_error_slope(double B, double x, const std::vector<int>& Ns)
{
    if (Ns.size() < 2)
        throw input_error("periodic_sinc_error_slope: need at least two N");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int N : Ns)
    {
        const double lx = std::log(2.0 * N + 1.0);
        const double ly = std::log(std::abs(sinc(B * x) - periodic_sinc(B, N, x)));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double n = static_cast<double>(Ns.size());
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

struct ChirpletApprox
{
    std::vector<complex_t> weights;
    std::vector<complex_t> gammas; // Re > 0
    double B0 = 1.0;
    double band = 1.0;
    int level = 0;
    std::vector<double> residuals;
};

inline ChirpletApprox build_chirplet_approx(double B0, int M, std::optional<int> level = std::nullopt,
                                            double tol = 1e-12)
{
    if (!(B0 > 0.0) || !std::isfinite(B0))
        throw input_error("build_chirplet_approx: B0 must be positive");
    if (M < 1)
        throw input_error("build_chirplet_approx: M must be >= 1");
    const int n = level ? *level : sinc_level(B0);
    const double B = B0 / pow3(n);
    const auto rule = solve_moment_problem(preset_moments(MomentPreset::sinc_gauss, B, 2 * M), M, tol);
    for (const auto& g : rule.nodes)
        if (!(g.real() > 0.0))
            throw numerical_error("build_chirplet_approx: node with Re(gamma) <= 0");
    ChirpletApprox c;
    c.weights = rule.weights;
    c.gammas = rule.nodes;
    c.B0 = B0;
    c.band = B;
    c.level = n;
    c.residuals = rule.residuals;
    return c;
}

/// 3^-n sum_l e^{i 2 B l x} sum_m alpha_m e^{-gamma_m x^2}.
inline complex_t eval_chirplet_sum(const ChirpletApprox& c, double x)
{
    complex_t g(0.0, 0.0);
    for (std::size_t m = 0; m < c.weights.size(); ++m)
        g += c.weights[m] * std::exp(-c.gammas[m] * (x * x));
    const long K = (static_cast<long>(pow3(c.level)) - 1) / 2;
    complex_t lattice(0.0, 0.0);
    for (long l = -K; l <= K; ++l)
        lattice += std::polar(1.0, 2.0 * c.band * static_cast<double>(l) * x);
    return lattice * g / pow3(c.level);
}

/// Base chirplet error sinc(Bx) - sum alpha e^{-gamma x^2} at the reduced band.
inline complex_t chirplet_base_error(const ChirpletApprox& c, double x)
{
    complex_t g(0.0, 0.0);
    for (std::size_t m = 0; m < c.weights.size(); ++m)
        g += c.weights[m] * std::exp(-c.gammas[m] * (x * x));
    return sinc(c.band * x) - g;
}

} // namespace rlimit

#endif // RLIMIT_SINCAPPROX_HPP
