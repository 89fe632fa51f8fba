#ifndef RLIMIT_MOMENTS_HPP
#define RLIMIT_MOMENTS_HPP

///
/// \file moments.hpp
///
/// Moment problems h_n = sum_m alpha_m gamma_m^n and the quadratures they
/// produce. The general solver is a Prony pipeline (Hankel system for the
/// characteristic polynomial, simultaneous root finding, Vandermonde solve)
/// carried out in 50-digit arithmetic so that Hilbert-like Hankel matrices up
/// to M = 12 and beyond stay numerically full rank.
///

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "numkit.hpp"

namespace rlimit
{

/// Named rows of the moment table. Each row approximates a target function
/// by a sum of basis functions; the comment gives h_n.
enum class MomentPreset
{
    sinc_cos,   // sinc(Bx) by cosines: B^{2n}/(2n+1)
    j0_cos,     // J0(Bx) by cosines: (2n)! B^{2n} / (2^n n!)^2
    gauss_cos,  // exp(-B^2 x^2) by cosines: (2n)! B^{2n} / n!
    sinc_gauss, // sinc(Bx) by Gaussians: n! B^{2n} / (2n+1)!
    j0_sinc,    // J0(Bx) by sincs: (2n+1)! B^{2n} / (2^n n!)^2
    j1_cosinc   // J1(Bx) by cosincs: (2n+2)! B^{2n+1} / (2^{2n+1} n! (n+1)!)
};

inline std::string to_string(MomentPreset p)
{
    switch (p)
    {
    case MomentPreset::sinc_cos: return "sinc_cos";
    case MomentPreset::j0_cos: return "j0_cos";
    case MomentPreset::gauss_cos: return "gauss_cos";
    case MomentPreset::sinc_gauss: return "sinc_gauss";
    case MomentPreset::j0_sinc: return "j0_sinc";
    case MomentPreset::j1_cosinc: return "j1_cosinc";
    }
    return "unknown";
}

inline MomentPreset preset_from_string(std::string_view s)
{
    std::string t(s);
    std::replace(t.begin(), t.end(), '-', '_');
    for (auto p : {MomentPreset::sinc_cos, MomentPreset::j0_cos, MomentPreset::gauss_cos,
                   MomentPreset::sinc_gauss, MomentPreset::j0_sinc, MomentPreset::j1_cosinc})
        if (to_string(p) == t)
            return p;
    throw input_error("unknown moment preset '" + std::string(s) + "'");
}

struct MomentSequence
{
    std::vector<double> values;
    std::optional<MomentPreset> preset;
    double band = 1.0;

    std::size_t size() const noexcept { return values.size(); }
    double max_abs() const
    {
        double m = 0.0;
        for (double v : values)
            m = std::max(m, std::abs(v));
        return m;
    }
};

///
/// A real quadrature. Two layouts are used:
///
/// * half rules (symmetric == false): sum_m alpha_m cos(B omega_m x), with
///   nodes omega_m in [0, 1], the cosine form of the even moment problem;
/// * symmetric rules (symmetric == true): sum_m alpha_m exp(i B omega_m x)
///   with nodes closed under negation, nodes in [-1, 1] and sum alpha = 2B
///   for the sinc rules.
///
struct Quadrature1D
{
    std::vector<double> weights;
    std::vector<double> nodes;
    double band = 1.0;
    bool symmetric = false;
    std::string preset;
    int M = 0;
    std::vector<double> residuals;

    std::size_t size() const noexcept { return nodes.size(); }

    double weight_sum() const
    {
        double s = 0.0;
        for (double a : weights)
            s += a;
        return s;
    }
};

/// Output of the general moment solver; nodes and weights may be complex.
struct MomentRule
{
    std::vector<complex_t> weights;
    std::vector<complex_t> nodes;
    std::vector<double> residuals;
    std::optional<MomentPreset> preset;
    double band = 1.0;
    int requested_M = 0;
    std::string notice;

    std::size_t size() const noexcept { return nodes.size(); }

    bool is_real(double tol = 1e-12) const
    {
        for (std::size_t m = 0; m < nodes.size(); ++m)
        {
            if (std::abs(nodes[m].imag()) > tol * std::max(1.0, std::abs(nodes[m])))
                return false;
            if (std::abs(weights[m].imag()) > tol * std::max(1.0, std::abs(weights[m])))
                return false;
        }
        return true;
    }
};

struct MomentSolveOptions
{
    // Relative pivot threshold of the scaled Hankel matrix in working
    // precision. Pivots below it end the numerical rank.
    double rank_tol = 1e-30;
    int max_iterations = 2000;
};

namespace detail
{
using mp_real = boost::multiprecision::cpp_bin_float_50;
using mp_complex = boost::multiprecision::cpp_complex_50;

inline mp_real preset_h0(MomentPreset p, const mp_real& B)
{
    return p == MomentPreset::j1_cosinc ? B : mp_real(1);
}

// Ratio h_{n+1}/h_n of every preset row; exact rational in n times B^2.
inline mp_real preset_ratio(MomentPreset p, int n, const mp_real& B2)
{
    const mp_real k(n);
    switch (p)
    {
    case MomentPreset::sinc_cos: return B2 * (2 * k + 1) / (2 * k + 3);
    case MomentPreset::j0_cos: return B2 * (2 * k + 1) / (2 * (k + 1));
    case MomentPreset::gauss_cos: return B2 * 2 * (2 * k + 1);
    case MomentPreset::sinc_gauss: return B2 / (2 * (2 * k + 3));
    case MomentPreset::j0_sinc: return B2 * (2 * k + 3) / (2 * (k + 1));
    case MomentPreset::j1_cosinc: return B2 * (2 * k + 3) / (2 * (k + 1));
    }
    return mp_real(0);
}

inline std::vector<mp_real> preset_moments_mp(MomentPreset p, double B, int count)
{
    std::vector<mp_real> h(static_cast<std::size_t>(count));
    const mp_real b(B);
    const mp_real b2 = b * b;
    mp_real v = preset_h0(p, b);
    for (int n = 0; n < count; ++n)
    {
        h[static_cast<std::size_t>(n)] = v;
        v *= preset_ratio(p, n, b2);
    }
    return h;
}

inline mp_complex horner(const std::vector<mp_complex>& c, const mp_complex& z, mp_complex& deriv)
{
    // c holds the monic polynomial coefficients, lowest degree first.
    mp_complex p = c.back();
    deriv = mp_complex(0);
    for (std::size_t j = c.size() - 1; j-- > 0;)
    {
        deriv = deriv * z + p;
        p = p * z + c[j];
    }
    return p;
}

// Aberth-Ehrlich simultaneous iteration on a monic polynomial.
inline std::vector<mp_complex> polynomial_roots(const std::vector<mp_complex>& c, int max_iter)
{
    const std::size_t M = c.size() - 1;
    std::vector<mp_complex> z(M);
    if (M == 0)
        return z;
    mp_real bound(0);
    for (std::size_t k = 1; k <= M; ++k)
    {
        const mp_real a = abs(c[M - k]);
        if (a > 0)
            bound = std::max(bound, mp_real(pow(a, mp_real(1) / mp_real(static_cast<int>(k)))));
    }
    bound = 2 * bound;
    if (bound == 0)
        bound = 1;
    const double two_pi = 2.0 * pi;
    for (std::size_t k = 0; k < M; ++k)
    {
        const double phi = two_pi * static_cast<double>(k) / static_cast<double>(M) + 0.4;
        z[k] = mp_complex(bound * mp_real(0.5 * std::cos(phi)), bound * mp_real(0.5 * std::sin(phi)));
    }
    // Attainable accuracy is limited by the conditioning of the roots, so
    // stop on a tiny step or once the step stops shrinking.
    const mp_real eps = std::numeric_limits<mp_real>::epsilon() * 1000;
    mp_real best = 1;
    int stalled = 0;
    for (int it = 0; it < max_iter; ++it)
    {
        mp_real worst(0);
        for (std::size_t k = 0; k < M; ++k)
        {
            mp_complex dp;
            const mp_complex p = horner(c, z[k], dp);
            if (p == mp_complex(0))
                continue;
            const mp_complex w = p / dp;
            mp_complex s(0);
            for (std::size_t j = 0; j < M; ++j)
                if (j != k)
                    s += mp_complex(1) / (z[k] - z[j]);
            const mp_complex step = w / (mp_complex(1) - w * s);
            z[k] -= step;
            const mp_real rel = abs(step) / std::max(mp_real(1), mp_real(abs(z[k])));
            worst = std::max(worst, rel);
        }
        if (worst < eps)
            return z;
        if (worst < best / 2)
        {
            best = worst;
            stalled = 0;
        }
        else if (++stalled >= 8 && best < mp_real(1e-25))
            return z;
    }
    throw numerical_error("solve_moment_problem: root finder did not converge");
}

// Solves A x = b in place by Gaussian elimination with partial pivoting.
template <class T>
std::vector<T> dense_solve(std::vector<std::vector<T>> A, std::vector<T> b)
{
    const std::size_t n = b.size();
    for (std::size_t k = 0; k < n; ++k)
    {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (abs(A[i][k]) > abs(A[piv][k]))
                piv = i;
        if (abs(A[piv][k]) == 0)
            throw numerical_error("solve_moment_problem: singular Vandermonde system");
        std::swap(A[k], A[piv]);
        std::swap(b[k], b[piv]);
        for (std::size_t i = k + 1; i < n; ++i)
        {
            const T f = A[i][k] / A[k][k];
            for (std::size_t j = k; j < n; ++j)
                A[i][j] -= f * A[k][j];
            b[i] -= f * b[k];
        }
    }
    std::vector<T> x(n);
    for (std::size_t k = n; k-- > 0;)
    {
        T s = b[k];
        for (std::size_t j = k + 1; j < n; ++j)
            s -= A[k][j] * x[j];
        x[k] = s / A[k][k];
    }
    return x;
}

// Full-pivot elimination of the M x M Hankel system H c = -h_{M..2M-1}.
// Returns the numerical rank; on full rank fills the solution.
inline int hankel_solve(const std::vector<mp_real>& h, int M, double rank_tol, std::vector<mp_real>& sol)
{
    const std::size_t n = static_cast<std::size_t>(M);
    std::vector<std::vector<mp_real>> A(n, std::vector<mp_real>(n));
    std::vector<mp_real> b(n);
    for (std::size_t i = 0; i < n; ++i)
    {
        for (std::size_t j = 0; j < n; ++j)
            A[i][j] = h[i + j];
        b[i] = -h[i + n];
    }
    std::vector<std::size_t> col(n);
    for (std::size_t j = 0; j < n; ++j)
        col[j] = j;
    mp_real first(0);
    for (std::size_t k = 0; k < n; ++k)
    {
        std::size_t pr = k, pc = k;
        for (std::size_t i = k; i < n; ++i)
            for (std::size_t j = k; j < n; ++j)
                if (abs(A[i][j]) > abs(A[pr][pc]))
                {
                    pr = i;
                    pc = j;
                }
        const mp_real piv = abs(A[pr][pc]);
        if (k == 0)
            first = piv;
        if (piv == 0 || piv <= mp_real(rank_tol) * first)
            return static_cast<int>(k);
        std::swap(A[k], A[pr]);
        std::swap(b[k], b[pr]);
        for (auto& row : A)
            std::swap(row[k], row[pc]);
        std::swap(col[k], col[pc]);
        for (std::size_t i = k + 1; i < n; ++i)
        {
            const mp_real f = A[i][k] / A[k][k];
            for (std::size_t j = k; j < n; ++j)
                A[i][j] -= f * A[k][j];
            b[i] -= f * b[k];
        }
    }
    std::vector<mp_real> y(n);
    for (std::size_t k = n; k-- > 0;)
    {
        mp_real s = b[k];
        for (std::size_t j = k + 1; j < n; ++j)
            s -= A[k][j] * y[j];
        y[k] = s / A[k][k];
    }
    sol.assign(n, mp_real(0));
    for (std::size_t k = 0; k < n; ++k)
        sol[col[k]] = y[k];
    return M;
}

inline std::vector<double> rule_residuals(const std::vector<complex_t>& w, const std::vector<complex_t>& g,
                                          const std::vector<double>& h)
{
    std::vector<double> eps(h.size());
    for (std::size_t n = 0; n < h.size(); ++n)
    {
        mp_complex s(0);
        for (std::size_t m = 0; m < w.size(); ++m)
        {
            const mp_complex gm(mp_real(g[m].real()), mp_real(g[m].imag()));
            mp_complex pw(1);
            for (std::size_t k = 0; k < n; ++k)
                pw *= gm;
            s += mp_complex(mp_real(w[m].real()), mp_real(w[m].imag())) * pw;
        }
        eps[n] = static_cast<double>(abs(mp_complex(mp_real(h[n])) - s));
    }
    return eps;
}
} // namespace detail

/// Moments h_0..h_{count-1} of a preset row. Values are accumulated in
/// 50-digit arithmetic, so factorial growth cannot overflow before the final
/// conversion, which reports overflow instead of saturating.
inline MomentSequence preset_moments(MomentPreset p, double B, int count)
{
    if (!(B > 0.0) || !std::isfinite(B))
        throw input_error("preset_moments: band must be positive");
    if (count < 1)
        throw input_error("preset_moments: need at least one moment");
    const auto h = detail::preset_moments_mp(p, B, count);
    MomentSequence out;
    out.preset = p;
    out.band = B;
    out.values.reserve(h.size());
    for (std::size_t n = 0; n < h.size(); ++n)
    {
        if (h[n] > detail::mp_real((std::numeric_limits<double>::max)()))
            throw numerical_error("preset_moments: h_" + std::to_string(n) + " of " + to_string(p) +
                                  " overflows double precision");
        out.values.push_back(static_cast<double>(h[n]));
    }
    return out;
}

/// Residuals eps_n = h_n - sum alpha_m gamma_m^n, magnitudes.
inline std::vector<double> verify_moments(const MomentRule& q, const MomentSequence& h)
{
    return detail::rule_residuals(q.weights, q.nodes, h.values);
}

/// Residuals for a real rule. Half rules use gamma = (B omega)^2; symmetric
/// rules are normalized by 2B so that they compare against the sinc row.
inline std::vector<double> verify_moments(const Quadrature1D& q, const MomentSequence& h)
{
    std::vector<complex_t> w, g;
    const double B = q.band;
    for (std::size_t m = 0; m < q.size(); ++m)
    {
        const double om = B * q.nodes[m];
        g.emplace_back(om * om, 0.0);
        w.emplace_back(q.symmetric ? q.weights[m] / (2.0 * B) : q.weights[m], 0.0);
    }
    return detail::rule_residuals(w, g, h.values);
}

/// Magnitude against which residuals are judged: max |h_n|, raised to
/// max_n sum |alpha_m| |gamma_m|^n when the rule relies on cancellation
/// (chirplet rules), since rounding the weights to double then costs that
/// much.
inline double residual_scale(const MomentRule& r, const MomentSequence& h)
{
    double scale = h.max_abs();
    for (std::size_t n = 0; n < h.size(); ++n)
    {
        double s = 0.0;
        for (std::size_t m = 0; m < r.size(); ++m)
            s += std::abs(r.weights[m]) * std::pow(std::abs(r.nodes[m]), static_cast<double>(n));
        scale = std::max(scale, s);
    }
    return scale;
}

/// Prony solution of the moment problem with M terms.
inline MomentRule solve_moment_problem(const MomentSequence& h, int M, double tol = 1e-12,
                                       const MomentSolveOptions& opt = {})
{
    using detail::mp_complex;
    using detail::mp_real;
    if (M < 1)
        throw input_error("solve_moment_problem: M must be >= 1");
    if (h.size() < static_cast<std::size_t>(2 * M))
        throw input_error("solve_moment_problem: need at least 2M moments");
    for (double v : h.values)
        if (!std::isfinite(v))
            throw input_error("solve_moment_problem: non-finite moment");

    std::vector<mp_real> hm;
    if (h.preset)
        hm = detail::preset_moments_mp(*h.preset, h.band, static_cast<int>(h.size()));
    else
        for (double v : h.values)
            hm.emplace_back(v);

    // Scale gamma -> gamma / c so that the Hankel entries are O(h_0).
    double c = 0.0;
    const double h0 = std::abs(h.values[0]);
    for (std::size_t n = 1; n < h.size() && h0 > 0.0; ++n)
    {
        const double r = std::abs(h.values[n]) / h0;
        if (r > 0.0)
            c = std::max(c, std::pow(r, 1.0 / static_cast<double>(n)));
    }
    if (!(c > 0.0) || !std::isfinite(c))
        c = 1.0;
    const mp_real cm(c);
    std::vector<mp_real> hs(hm.size());
    {
        mp_real p(1);
        for (std::size_t n = 0; n < hm.size(); ++n)
        {
            hs[n] = hm[n] / p;
            p *= cm;
        }
    }

    MomentRule out;
    out.preset = h.preset;
    out.band = h.band;
    out.requested_M = M;

    int m = M;
    std::vector<mp_real> coef;
    for (;;)
    {
        const int rank = detail::hankel_solve(hs, m, opt.rank_tol, coef);
        if (rank == m)
            break;
        if (rank == 0)
            throw numerical_error("solve_moment_problem: Hankel matrix has numerical rank 0");
        out.notice = "Hankel numerical rank " + std::to_string(rank) + " < M = " + std::to_string(M) +
                     "; returning the " + std::to_string(rank) + "-term rule";
        m = rank;
    }

    std::vector<mp_complex> poly(static_cast<std::size_t>(m) + 1);
    for (int j = 0; j < m; ++j)
        poly[static_cast<std::size_t>(j)] = mp_complex(coef[static_cast<std::size_t>(j)]);
    poly[static_cast<std::size_t>(m)] = mp_complex(1);
    const auto roots = detail::polynomial_roots(poly, opt.max_iterations);

    const std::size_t n = roots.size();
    std::vector<std::vector<mp_complex>> V(n, std::vector<mp_complex>(n));
    std::vector<mp_complex> rhs(n);
    for (std::size_t j = 0; j < n; ++j)
    {
        mp_complex p(1);
        for (std::size_t i = 0; i < n; ++i)
        {
            V[i][j] = p;
            p *= roots[j];
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        rhs[i] = mp_complex(hs[i]);
    const auto alpha = detail::dense_solve(V, rhs);

    // Order by real part of the node, then imaginary part.
    std::vector<std::size_t> idx(n);
    for (std::size_t j = 0; j < n; ++j)
        idx[j] = j;
    std::vector<complex_t> g(n), a(n);
    for (std::size_t j = 0; j < n; ++j)
    {
        const mp_complex gj = roots[j] * cm;
        // Snap imaginary parts far below working precision to zero.
        double re = static_cast<double>(gj.real());
        double im = static_cast<double>(gj.imag());
        if (std::abs(im) < 1e-40 * std::max(1.0, std::abs(re)))
            im = 0.0;
        g[j] = complex_t(re, im);
        double ar = static_cast<double>(alpha[j].real());
        double ai = static_cast<double>(alpha[j].imag());
        if (std::abs(ai) < 1e-40 * std::max(1.0, std::abs(ar)))
            ai = 0.0;
        a[j] = complex_t(ar, ai);
    }
    std::sort(idx.begin(), idx.end(), [&](std::size_t p, std::size_t q) {
        if (g[p].real() != g[q].real())
            return g[p].real() < g[q].real();
        return g[p].imag() < g[q].imag();
    });
    for (std::size_t j : idx)
    {
        out.nodes.push_back(g[j]);
        out.weights.push_back(a[j]);
    }

    out.residuals = detail::rule_residuals(out.weights, out.nodes, h.values);
    const double worst = *std::max_element(out.residuals.begin(), out.residuals.end());
    if (worst > tol * residual_scale(out, h))
    {
        char buf[160];
        std::snprintf(buf, sizeof buf, "solve_moment_problem: relative residual %.3e exceeds tolerance %.3e",
                      worst / h.max_abs(), tol);
        throw numerical_error(std::string(buf) + "; problem is ill-conditioned beyond recoverable precision");
    }
    return out;
}

/// Converts an even-row rule (gamma = omega^2 real, nonnegative) to a half
/// cosine rule with nodes theta = sqrt(gamma)/B in [0, 1].
inline Quadrature1D to_cosine_rule(const MomentRule& r, double B)
{
    if (!r.is_real(1e-10))
        throw numerical_error("to_cosine_rule: rule has complex nodes or weights");
    Quadrature1D q;
    q.band = B;
    q.symmetric = false;
    q.preset = r.preset ? to_string(*r.preset) : std::string("custom");
    q.M = static_cast<int>(r.size());
    q.residuals = r.residuals;
    for (std::size_t m = 0; m < r.size(); ++m)
    {
        const double gm = r.nodes[m].real();
        if (gm < -1e-12 * std::max(1.0, std::abs(gm)))
            throw numerical_error("to_cosine_rule: negative node gamma");
        q.nodes.push_back(std::sqrt(std::max(gm, 0.0)) / B);
        q.weights.push_back(r.weights[m].real());
    }
    return q;
}

/// Gauss-Legendre rule as the positive half of the 2M-point rule on [-1, 1];
/// nodes in (0, 1), weights summing to 1.
inline Quadrature1D gauss_legendre_01(int M)
{
    if (M < 1)
        throw input_error("gauss_legendre_01: M must be >= 1");
    const int N = 2 * M;
    Quadrature1D q;
    q.band = 1.0;
    q.preset = "gauss_legendre";
    q.M = M;
    q.nodes.resize(static_cast<std::size_t>(M));
    q.weights.resize(static_cast<std::size_t>(M));
    for (int i = 0; i < M; ++i)
    {
        long double z = std::cos(static_cast<long double>(pi) * (i + 0.75L) / (N + 0.5L));
        long double dp = 0.0L;
        for (int it = 0; it < 100; ++it)
        {
            long double p0 = 1.0L, p1 = z;
            for (int k = 2; k <= N; ++k)
            {
                const long double p2 = ((2 * k - 1) * z * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = N * (z * p1 - p0) / (z * z - 1.0L);
            const long double dz = p1 / dp;
            z -= dz;
            if (std::abs(dz) < 1e-19L)
                break;
        }
        // Refresh the derivative at the converged root.
        long double p0 = 1.0L, p1 = z;
        for (int k = 2; k <= N; ++k)
        {
            const long double p2 = ((2 * k - 1) * z * p1 - (k - 1) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = N * (z * p1 - p0) / (z * z - 1.0L);
        const std::size_t j = static_cast<std::size_t>(M - 1 - i);
        q.nodes[j] = static_cast<double>(z);
        q.weights[j] = static_cast<double>(2.0L / ((1.0L - z * z) * dp * dp));
    }
    return q;
}

/// Positive half of the 2M-point Gauss-Chebyshev rule: J0(Bx) is
/// approximated by sum alpha_m cos(B tau_m x).
inline Quadrature1D chebyshev_rule_for_j0(int M)
{
    if (M < 1)
        throw input_error("chebyshev_rule_for_j0: M must be >= 1");
    Quadrature1D q;
    q.band = 1.0;
    q.preset = "chebyshev_j0";
    q.M = M;
    for (int j = M; j >= 1; --j)
    {
        q.nodes.push_back(std::cos((2.0 * j - 1.0) * pi / (4.0 * M)));
        q.weights.push_back(1.0 / M);
    }
    return q;
}

/// Uniform (discrete Fourier) rule: weights 2B/(2M+1), nodes 2m/(2M+1).
inline Quadrature1D uniform_rule(double B, int M)
{
    if (!(B > 0.0))
        throw input_error("uniform_rule: band must be positive");
    if (M < 0)
        throw input_error("uniform_rule: M must be >= 0");
    Quadrature1D q;
    q.band = B;
    q.symmetric = true;
    q.preset = "uniform";
    q.M = M;
    const double n = 2.0 * M + 1.0;
    for (int m = -M; m <= M; ++m)
    {
        q.nodes.push_back(2.0 * m / n);
        q.weights.push_back(2.0 * B / n);
    }
    return q;
}

/// Symmetric exponential rule for 2B sinc(2 pi B t) from a half cosine rule
/// normalized to sum 1: nodes +-omega, each weight B alpha.
inline Quadrature1D symmetric_sinc_rule(const Quadrature1D& half, double B)
{
    if (half.symmetric)
        throw input_error("symmetric_sinc_rule: expected a half rule");
    if (!(B > 0.0))
        throw input_error("symmetric_sinc_rule: band must be positive");
    Quadrature1D q;
    q.band = B;
    q.symmetric = true;
    q.preset = half.preset;
    q.M = half.M;
    const std::size_t n = half.size();
    for (std::size_t m = n; m-- > 0;)
    {
        if (half.nodes[m] == 0.0)
            continue;
        q.nodes.push_back(-half.nodes[m]);
        q.weights.push_back(B * half.weights[m]);
    }
    for (std::size_t m = 0; m < n; ++m)
    {
        if (half.nodes[m] == 0.0)
        {
            q.nodes.push_back(0.0);
            q.weights.push_back(2.0 * B * half.weights[m]);
            continue;
        }
        q.nodes.push_back(half.nodes[m]);
        q.weights.push_back(B * half.weights[m]);
    }
    return q;
}

/// Symmetric Gauss-Legendre rule with 2M nodes for band B.
inline Quadrature1D gauss_legendre_sinc_rule(double B, int M)
{
    return symmetric_sinc_rule(gauss_legendre_01(M), B);
}

} // namespace rlimit

#endif // RLIMIT_MOMENTS_HPP
