#ifndef RLIMIT_KERNELS_HPP
#define RLIMIT_KERNELS_HPP

///
/// \file kernels.hpp
///
/// Closed-form convolution kernels of triangle, tetrahedron, signal-cone and
/// ball regions. Unless noted, kernels use the 2 pi convention
///
///     K(x) = \int_R exp(i 2 pi k . x) dk.
///
/// Triangle and tetrahedron kernels are divided differences of an exponential;
/// they are evaluated through divided_difference_exp, which has no removable
/// singularities to special-case.
///

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <span>
#include <vector>

#include "integrate.hpp"
#include "moments.hpp"
#include "numkit.hpp"

namespace rlimit
{

namespace detail
{
// exp(L)[n-1][0] for the lower bidiagonal L with diagonal u and unit
// subdiagonal, by a plain Taylor series; callers keep |u| small.
inline complex_t opitz_exp(std::span<const complex_t> u)
{
    const std::size_t n = u.size();
    // Column 0 of L^k e_0 evolves as v <- L v.
    std::vector<complex_t> v(n, complex_t(0.0)), acc(n, complex_t(0.0));
    v[0] = 1.0;
    acc[0] = 1.0;
    double fact = 1.0;
    for (int k = 1; k <= 40; ++k)
    {
        std::vector<complex_t> w(n);
        w[0] = u[0] * v[0];
        for (std::size_t i = 1; i < n; ++i)
            w[i] = u[i] * v[i] + v[i - 1];
        v.swap(w);
        fact *= k;
        double mag = 0.0;
        for (std::size_t i = 0; i < n; ++i)
        {
            acc[i] += v[i] / fact;
            mag = std::max(mag, std::abs(v[i]) / fact);
        }
        if (k > static_cast<int>(n) + 2 && mag < 1e-20)
            break;
    }
    return acc[n - 1];
}
} // namespace detail

/// Divided difference exp[u_0, ..., u_{n-1}]. Splits on the widest pair while
/// the point set spans more than a unit, then finishes with a centred Taylor
/// evaluation, so coincident or clustered points need no special handling.
inline complex_t divided_difference_exp(std::span<const complex_t> u)
{
    const std::size_t n = u.size();
    if (n == 0)
        throw input_error("divided_difference_exp: empty point set");
    if (n == 1)
        return std::exp(u[0]);
    std::size_t bi = 0, bj = 1;
    double diam = -1.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (std::abs(u[i] - u[j]) > diam)
            {
                diam = std::abs(u[i] - u[j]);
                bi = i;
                bj = j;
            }
    if (n == 2)
        return std::exp(u[bi]) * expc(u[bj] - u[bi]);
    if (diam > 1.0)
    {
        std::vector<complex_t> wo_i, wo_j;
        for (std::size_t k = 0; k < n; ++k)
        {
            if (k != bi)
                wo_i.push_back(u[k]);
            if (k != bj)
                wo_j.push_back(u[k]);
        }
        return (divided_difference_exp(wo_i) - divided_difference_exp(wo_j)) / (u[bj] - u[bi]);
    }
    complex_t c(0.0);
    for (const auto& z : u)
        c += z;
    c /= static_cast<double>(n);
    std::vector<complex_t> s(u.begin(), u.end());
    for (auto& z : s)
        z -= c;
    return std::exp(c) * detail::opitz_exp(s);
}

inline complex_t divided_difference_exp(std::initializer_list<complex_t> u)
{
    return divided_difference_exp(std::span<const complex_t>(u.begin(), u.size()));
}

// ---------------------------------------------------------------- triangle

/// T = {0 <= k_x <= dp, |k_y| <= s k_x}, optionally shifted by phase_shift
/// along k_x.
struct TriangleSpec
{
    double dp = 1.0;
    double s = 1.0;
    std::optional<double> phase_shift;

    static TriangleSpec equilateral() { return {std::sqrt(3.0) / 2.0, 1.0 / std::sqrt(3.0), {}}; }
    /// One of the three triangles joining the centroid of the unit
    /// equilateral triangle to a side.
    static TriangleSpec isosceles_sub() { return {std::sqrt(3.0) / 6.0, std::sqrt(3.0), {}}; }

    double area() const { return dp * dp * s; }

    void validate() const
    {
        if (!(dp > 0.0) || !(s > 0.0) || !std::isfinite(dp) || !std::isfinite(s))
            throw input_error("TriangleSpec: dp and s must be finite and positive");
    }
};

inline complex_t k_triangle(const TriangleSpec& t, double x, double y)
{
    t.validate();
    detail::require_finite(x, "k_triangle");
    detail::require_finite(y, "k_triangle");
    const complex_t lam(0.0, 2.0 * pi * t.dp);
    const complex_t v = 2.0 * t.s * t.dp * t.dp *
                        divided_difference_exp({complex_t(0.0), lam * (x + t.s * y), lam * (x - t.s * y)});
    if (t.phase_shift)
        return v * std::polar(1.0, -2.0 * pi * *t.phase_shift * x);
    return v;
}

/// The sinc/cosinc closed form, singular at y = 0; used to cross-check.
inline complex_t k_triangle_closed_form(const TriangleSpec& t, double x, double y)
{
    if (y == 0.0)
        throw input_error("k_triangle_closed_form: y = 0 is a removable singularity of this form");
    const double ap = 2.0 * pi * t.dp * (x + t.s * y);
    const double am = 2.0 * pi * t.dp * (x - t.s * y);
    const double f = t.dp / (2.0 * pi * y);
    return f * complex_t(cosinc(ap) - cosinc(am), -(sinc(ap) - sinc(am)));
}

/// Right-hand side of the triangle scaling identity: K(x, y) from
/// K(x/2, y/2) and K(-x/2, y/2).
inline complex_t triangle_scaling_refine(const TriangleSpec& t, double x, double y, complex_t half,
                                         complex_t half_mirror)
{
    const complex_t e = std::polar(1.0, pi * t.dp * x);
    const double c = std::cos(pi * t.dp * t.s * y);
    return 0.25 * (half * (1.0 + 2.0 * e * c) + e * e * half_mirror);
}

/// Inverse of the scaling identity: (K(x/2, y/2), K(-x/2, y/2)) from
/// K(x, y) and K(-x, y).
inline std::pair<complex_t, complex_t> triangle_scaling_invert(const TriangleSpec& t, double x, double y,
                                                               complex_t full, complex_t full_mirror)
{
    const complex_t e = std::polar(1.0, pi * t.dp * x);
    const double c = std::cos(pi * t.dp * t.s * y);
    const double den = c * c + std::cos(pi * t.dp * x) * c;
    if (std::abs(den) <= 1e-8)
        throw numerical_error("triangle_scaling_invert: singular at (" + std::to_string(x) + ", " +
                              std::to_string(y) + ")");
    const complex_t a = 1.0 + 2.0 * e * c;
    const complex_t ab = std::conj(a);
    const complex_t det = 4.0 * den; // a conj(a) - 1
    const complex_t P = (4.0 * ab * full - 4.0 * e * e * full_mirror) / det;
    const complex_t Q = (4.0 * a * full_mirror - 4.0 * std::conj(e * e) * full) / det;
    return {P, Q};
}

// ------------------------------------------------------------- tetrahedron

/// {0 <= k_z <= h, 0 <= k_y <= dp k_z, |k_x| <= s k_y}.
struct TetraSpec
{
    double h = 1.0;
    double dp = 1.0;
    double s = 1.0;

    /// Preset h = sqrt(2/3), dp = (sqrt(3)/6) h, s = sqrt(3). Its volume is not
    /// that of the unit regular tetrahedron; see tetra_symmetric_quadrature.
    static TetraSpec regular()
    {
        const double h = std::sqrt(2.0 / 3.0);
        return {h, std::sqrt(3.0) / 6.0 * h, std::sqrt(3.0)};
    }
    /// Sub-tetrahedron spanned by the centroid of the unit tetrahedron, a face
    /// centroid and one edge of that face; 12 copies tile the tetrahedron.
    static TetraSpec sub() { return {1.0 / std::sqrt(24.0), std::sqrt(2.0), std::sqrt(3.0)}; }

    double volume() const { return s * dp * dp * h * h * h / 3.0; }

    void validate() const
    {
        if (!(h > 0.0) || !(dp > 0.0) || !(s > 0.0))
            throw input_error("TetraSpec: h, dp and s must be positive");
    }
};

inline complex_t k_tetra(const TetraSpec& t, double x, double y, double z)
{
    t.validate();
    const complex_t lam(0.0, 2.0 * pi * t.h);
    return 2.0 * t.s * t.dp * t.dp * t.h * t.h * t.h *
           divided_difference_exp({complex_t(0.0), lam * z, lam * (z + t.dp * (y + t.s * x)),
                                   lam * (z + t.dp * (y - t.s * x))});
}

/// Rotation by theta about the unit axis u (Rodrigues).
inline Eigen::Matrix3d axis_rotation(const Eigen::Vector3d& axis, double theta)
{
    const Eigen::Vector3d u = axis.normalized();
    return Eigen::AngleAxisd(theta, u).toRotationMatrix();
}

/// Vertices of the unit regular tetrahedron centred at the origin.
inline std::array<Eigen::Vector3d, 4> tetra_vertices()
{
    const double r3 = std::sqrt(3.0);
    const double zb = std::sqrt(1.5) / 6.0;
    return {Eigen::Vector3d(-0.5, -r3 / 6.0, -zb), Eigen::Vector3d(0.5, -r3 / 6.0, -zb),
            Eigen::Vector3d(0.0, r3 / 3.0, -zb), Eigen::Vector3d(0.0, 0.0, std::sqrt(2.0 / 3.0) - zb)};
}

/// The 12 proper rotations of the regular tetrahedron.
inline std::vector<Eigen::Matrix3d> tetra_symmetry_group()
{
    const auto v = tetra_vertices();
    std::vector<Eigen::Matrix3d> g;
    for (int n = 0; n < 3; ++n)
    {
        const Eigen::Matrix3d R4 = axis_rotation(v[3], 2.0 * pi * n / 3.0);
        for (int m = 0; m < 3; ++m)
            g.push_back(R4 * axis_rotation(v[0], 2.0 * pi * m / 3.0));
        g.push_back(R4 * axis_rotation(v[1], 4.0 * pi / 3.0));
    }
    return g;
}

// -------------------------------------------------------------- signal cone

/// C = {(omega, k) : |omega| <= omega0, |k| <= |omega| pmax}, k in R^n.
struct ConeSpec
{
    double omega0 = 1.0;
    double pmax = 1.0;
    int n = 2;

    void validate() const
    {
        if (!(omega0 > 0.0) || !(pmax > 0.0))
            throw input_error("ConeSpec: omega0 and pmax must be positive");
        if (n < 1 || n > 3)
            throw input_error("ConeSpec: n must be 1, 2 or 3");
    }

    /// Lebesgue measure of the cone in R^{n+1}.
    double measure() const
    {
        switch (n)
        {
        case 1: return 2.0 * pmax * omega0 * omega0;
        case 2: return 2.0 * pi * pmax * pmax * std::pow(omega0, 3) / 3.0;
        default: return 2.0 * pi * std::pow(pmax, 3) * std::pow(omega0, 4) / 3.0;
        }
    }
};

/// I_j(a) = \int_0^1 u^j e^{i a u} du.
inline complex_t exp_moment(int j, double a)
{
    if (std::abs(a) > std::max(40.0, 2.0 * j))
    {
        const complex_t ia(0.0, a);
        const complex_t e = std::polar(1.0, a);
        complex_t I = expc(ia);
        for (int k = 1; k <= j; ++k)
            I = (e - static_cast<double>(k) * I) / ia;
        return I;
    }
    static const Quadrature1D gl = [] {
        // 64-point Gauss-Legendre on [0, 1].
        const auto half = gauss_legendre_01(32);
        Quadrature1D q;
        for (std::size_t m = half.size(); m-- > 0;)
        {
            q.nodes.push_back(0.5 * (1.0 - half.nodes[m]));
            q.weights.push_back(0.5 * half.weights[m]);
        }
        for (std::size_t m = 0; m < half.size(); ++m)
        {
            q.nodes.push_back(0.5 * (1.0 + half.nodes[m]));
            q.weights.push_back(0.5 * half.weights[m]);
        }
        return q;
    }();
    complex_t s(0.0);
    for (std::size_t m = 0; m < gl.size(); ++m)
        s += gl.weights[m] * std::pow(gl.nodes[m], j) * std::polar(1.0, a * gl.nodes[m]);
    return s;
}

namespace detail
{
inline double j1_over_z(double z)
{
    if (std::abs(z) < 1e-6)
        return 0.5 - z * z / 16.0;
    return std::cyl_bessel_j(1.0, z) / z;
}

inline double cone2_integral(const ConeSpec& c, double t, double r, const IntegrationOptions& opt)
{
    const double cc = 2.0 * pi * c.omega0 * c.pmax;
    const double tau = 2.0 * pi * c.omega0 * t;
    auto f = [&](double u) { return u * u * cc * j1_over_z(cc * u * r) * std::cos(tau * u); };
    IntegrationOptions o = opt;
    const double freq = std::abs(tau) + cc * r;
    o.piece = freq > pi ? pi / freq : 0.0;
    return 2.0 * c.omega0 * c.omega0 * c.pmax * integrate(f, 0.0, 1.0, o);
}

inline double cone3(const ConeSpec& c, double t, double r)
{
    const double tau = 2.0 * pi * c.omega0 * t;
    const double delta = 2.0 * pi * c.omega0 * c.pmax * r;
    if (delta < 0.5)
    {
        const double cc = 2.0 * pi * c.omega0 * c.pmax;
        double sum = 0.0, dpow = 1.0, fact = 6.0; // (2k+1)! at k = 1
        for (int k = 1; k < 30; ++k)
        {
            const double term = (k % 2 == 1 ? 1.0 : -1.0) * 2.0 * k * dpow / fact * exp_moment(2 * k + 1, tau).real();
            sum += term;
            if (std::abs(term) < 1e-18 * std::abs(sum))
                break;
            dpow *= delta * delta;
            fact *= (2.0 * k + 2.0) * (2.0 * k + 3.0);
        }
        return c.omega0 * cc * cc * cc / (pi * pi) * sum;
    }
    const double br = 0.5 * (cosinc(delta + tau) + cosinc(delta - tau)) -
                      0.5 * delta * (exp_moment(1, delta + tau).real() + exp_moment(1, delta - tau).real());
    return c.omega0 / (pi * pi * r * r * r) * br;
}
} // namespace detail

/// Cone kernel at (t, x) with x in R^n: closed forms for n = 1, 3 and adaptive
/// integration of the Bessel representation for n = 2.
inline complex_t k_cone(const ConeSpec& c, double t, std::span<const double> x, const IntegrationOptions& opt = {})
{
    c.validate();
    if (x.size() != static_cast<std::size_t>(c.n))
        throw input_error("k_cone: |x| must equal the cone dimension n");
    double r2 = 0.0;
    for (double v : x)
        r2 += v * v;
    const double r = std::sqrt(r2);
    switch (c.n)
    {
    case 1: {
        const complex_t lam(0.0, 2.0 * pi * c.omega0);
        const double px = c.pmax * x[0];
        const complex_t d = divided_difference_exp({complex_t(0.0), lam * (t + px), lam * (t - px)});
        return 4.0 * c.pmax * c.omega0 * c.omega0 * d.real();
    }
    case 2: return detail::cone2_integral(c, t, r, opt);
    default: return detail::cone3(c, t, r);
    }
}

inline complex_t k_cone(const ConeSpec& c, double t, std::initializer_list<double> x, const IntegrationOptions& opt = {})
{
    return k_cone(c, t, std::span<const double>(x.begin(), x.size()), opt);
}

/// Rule for J1(z) ~ sum_m c_m cosinc(gamma_m z): nodes gamma_m and weights
/// alpha_m = c_m gamma_m solving the j1_cosinc moment problem at B = 1.
inline Quadrature1D j1_cosinc_rule(int M, double tol = 1e-12)
{
    const auto rule = solve_moment_problem(preset_moments(MomentPreset::j1_cosinc, 1.0, 2 * M), M, tol);
    auto q = to_cosine_rule(rule, 1.0);
    q.preset = "j1_cosinc";
    return q;
}

/// Surrogate n = 2 cone kernel built from the J1 cosinc rule; its Fourier
/// transform lives in the cone dilated by max gamma.
inline double tilde_k_cone(const ConeSpec& c, const Quadrature1D& j1, double t, double r)
{
    if (c.n != 2)
        throw input_error("tilde_k_cone: requires n = 2");
    const double cc = 2.0 * pi * c.omega0 * c.pmax;
    const double tau = 2.0 * pi * c.omega0 * t;
    double sum = 0.0;
    for (std::size_t m = 0; m < j1.size(); ++m)
    {
        const double g = j1.nodes[m];
        const double a = j1.weights[m];
        const double b = g * cc * r;
        if (b < 0.1)
        {
            // bracket / b^2 as a series in b.
            double s = 0.0, bp = 1.0, fact = 2.0;
            for (int k = 1; k < 20; ++k)
            {
                const double term = (k % 2 == 1 ? 1.0 : -1.0) * bp / fact * exp_moment(2 * k, tau).real();
                s += term;
                if (std::abs(term) < 1e-18 * std::abs(s))
                    break;
                bp *= b * b;
                fact *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
            }
            sum += c.omega0 / pi * a * cc * cc * s;
        }
        else
        {
            const double br = sinc(tau) - 0.5 * (sinc(b - tau) + sinc(b + tau));
            sum += c.omega0 / (pi * r * r) * a / (g * g) * br;
        }
    }
    return sum;
}

namespace detail
{
// \int_0^inf J1(z) cosinc(g z) / z dz times g.
inline double j1_cosinc_cross(double g)
{
    if (g <= 1.0)
        return 0.5 * g * g;
    const double q = std::sqrt(g * g - 1.0);
    return 0.5 + 0.5 * (g * g - 1.0) - 0.5 * (g * q - std::acosh(g));
}

// \int_0^inf cosinc(g z) cosinc(h z) / z dz.
inline double cosinc_gram(double g, double h)
{
    auto t = [](double l) { return l > 0.0 ? l * l * std::log(l) : 0.0; };
    return 0.5 * (-t(g) - t(h) + 0.5 * t(g + h) + 0.5 * t(std::abs(g - h))) / (g * h);
}
} // namespace detail

/// \int_0^inf (J1(z) - sum c_m cosinc(gamma_m z))^2 dz / z.
inline double j1_cosinc_ls_integral(const Quadrature1D& j1)
{
    double I = 0.5;
    const std::size_t M = j1.size();
    for (std::size_t m = 0; m < M; ++m)
    {
        const double cm = j1.weights[m] / j1.nodes[m];
        I -= 2.0 * cm * detail::j1_cosinc_cross(j1.nodes[m]) / j1.nodes[m];
        for (std::size_t k = 0; k < M; ++k)
            I += cm * (j1.weights[k] / j1.nodes[k]) * detail::cosinc_gram(j1.nodes[m], j1.nodes[k]);
    }
    return std::max(I, 0.0);
}

/// Squared L2 distance between the cone indicator and the Fourier transform
/// of the surrogate kernel, equal to \int |K - K~|^2 by Parseval.
inline double cone_ls_error(const ConeSpec& c, const Quadrature1D& j1)
{
    if (c.n != 2)
        throw input_error("cone_ls_error: requires n = 2");
    return 4.0 * pi * std::pow(c.omega0, 3) * c.pmax * c.pmax / 3.0 * j1_cosinc_ls_integral(j1);
}

// --------------------------------------------------------------------- ball

/// Ball kernel \int_{|k| <= kmax} exp(i 2 pi k . x) dk at radius R = |x|.
inline double k_ball(double kmax, double R)
{
    if (!(kmax > 0.0))
        throw input_error("k_ball: kmax must be positive");
    const double a = 2.0 * pi * kmax * R;
    if (a < 1e-2)
    {
        // 4 pi kmax^3 (1/3 - a^2/30 + a^4/840 - a^6/45360)
        const double a2 = a * a;
        return 4.0 * pi * kmax * kmax * kmax *
               (1.0 / 3.0 + a2 * (-1.0 / 30.0 + a2 * (1.0 / 840.0 - a2 / 45360.0)));
    }
    return (std::sin(a) - a * std::cos(a)) / (2.0 * pi * pi * R * R * R);
}

} // namespace rlimit

#endif // RLIMIT_KERNELS_HPP
