#ifndef RLIMIT_CUBATURE_HPP
#define RLIMIT_CUBATURE_HPP

// Cascaded exponential-sum cubatures for triangles, tetrahedra, cones and
// balls. A rule (a_m, k_m) approximates K(x) = \int_R e^{i 2 pi k.x} dk by
// sum_m a_m e^{i 2 pi k_m . x}.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "integrate.hpp"
#include "kernels.hpp"
#include "numkit.hpp"
#include "region.hpp"

namespace rlimit
{

/// Symmetric verification box [-half, half] sampled with `counts` points per axis.
struct TargetBox
{
    std::vector<double> half;
    std::vector<int> counts;

    PointSet grid() const
    {
        std::vector<double> lo(half.size());
        for (std::size_t j = 0; j < half.size(); ++j)
            lo[j] = -half[j];
        return make_grid(lo, half, counts);
    }
    TargetBox scaled(double f) const
    {
        TargetBox b = *this;
        for (auto& h : b.half)
            h *= f;
        return b;
    }
};

struct ErrorProfile
{
    std::optional<TargetBox> box;
    double max_error = std::numeric_limits<double>::quiet_NaN();

    bool measured() const { return box.has_value() && std::isfinite(max_error); }
};

struct QuadratureND
{
    std::vector<double> weights;
    PointSet nodes;
    Region region;
    std::optional<std::vector<Eigen::MatrixXd>> symmetry_group;
    std::string provenance;
    ErrorProfile profile;

    std::size_t dim() const { return nodes.dim(); }
    std::size_t size() const { return weights.size(); }
    double weight_sum() const
    {
        double s = 0.0;
        for (double w : weights)
            s += w;
        return s;
    }
};

/// sum_m a_m exp(i 2 pi k_m . x)
inline complex_t eval_exp_sum(const QuadratureND& q, std::span<const double> x)
{
    if (x.size() != q.dim())
        throw input_error("eval_exp_sum: point dimension mismatch");
    const std::size_t d = q.dim();
    const double* k = q.nodes.coords().data();
    double re = 0.0, im = 0.0;
    for (std::size_t m = 0; m < q.size(); ++m)
    {
        double ph = 0.0;
        for (std::size_t j = 0; j < d; ++j)
            ph += k[m * d + j] * x[j];
        ph *= 2.0 * pi;
        re += q.weights[m] * std::cos(ph);
        im += q.weights[m] * std::sin(ph);
    }
    return {re, im};
}

inline std::vector<complex_t> eval_exp_sum(const QuadratureND& q, const PointSet& pts)
{
    std::vector<complex_t> out(pts.size());
    parallel_for(pts.size(), [&](std::size_t i) { out[i] = eval_exp_sum(q, pts[i]); });
    return out;
}

/// Exact kernel in the 2 pi convention: \int_R e^{i 2 pi k.x} dk.
inline complex_t region_kernel_2pi(const Region& r, std::span<const double> x)
{
    std::vector<double> y(x.begin(), x.end());
    for (auto& v : y)
        v *= 2.0 * pi;
    return region_kernel_exact(r, y);
}

/// Pointwise |surrogate - exact| on the box grid.
inline std::vector<double> surrogate_errors(const QuadratureND& q, const PointSet& pts)
{
    std::vector<double> e(pts.size());
    parallel_for(pts.size(), [&](std::size_t i) {
        e[i] = std::abs(eval_exp_sum(q, pts[i]) - region_kernel_2pi(q.region, pts[i]));
    });
    return e;
}

inline double measure_max_error(const QuadratureND& q, const TargetBox& box)
{
    if (box.half.size() != q.dim())
        throw input_error("measure_max_error: box dimension mismatch");
    const auto e = surrogate_errors(q, box.grid());
    return *std::max_element(e.begin(), e.end());
}

inline void record_error_profile(QuadratureND& q, const TargetBox& box)
{
    q.profile.box = box;
    q.profile.max_error = measure_max_error(q, box);
}

/// Greedy nearest-neighbour matching of two weighted point multisets. Returns
/// the largest node or weight discrepancy over matched pairs, infinity when
/// the sizes differ.
inline double multiset_match_distance(const PointSet& a, std::span<const double> wa, const PointSet& b,
                                      std::span<const double> wb)
{
    if (a.size() != b.size() || a.dim() != b.dim())
        return std::numeric_limits<double>::infinity();
    const std::size_t n = a.size();
    const std::size_t d = a.dim();
    std::vector<char> used(n, 0);
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i)
    {
        double best = std::numeric_limits<double>::infinity();
        std::size_t bj = n;
        for (std::size_t j = 0; j < n; ++j)
        {
            if (used[j])
                continue;
            double dist = 0.0;
            for (std::size_t c = 0; c < d; ++c)
                dist = std::max(dist, std::abs(a[i][c] - b[j][c]));
            if (dist < best)
            {
                best = dist;
                bj = j;
            }
        }
        used[bj] = 1;
        worst = std::max({worst, best, std::abs(wa[i] - wb[bj])});
    }
    return worst;
}

inline PointSet transform_nodes(const PointSet& p, const Eigen::MatrixXd& R)
{
    const auto d = static_cast<Eigen::Index>(p.dim());
    std::vector<double> out(p.coords().size());
    for (std::size_t i = 0; i < p.size(); ++i)
    {
        const Eigen::Map<const Eigen::VectorXd> v(p[i].data(), d);
        Eigen::Map<Eigen::VectorXd>(out.data() + i * p.dim(), d) = R * v;
    }
    return PointSet(p.dim(), std::move(out));
}

/// Largest matching distance between the rule and its image under each
/// declared group element.
inline double symmetry_invariance_error(const QuadratureND& q)
{
    if (!q.symmetry_group)
        throw input_error("symmetry_invariance_error: rule declares no symmetry group");
    double worst = 0.0;
    for (const auto& R : *q.symmetry_group)
        worst = std::max(worst, multiset_match_distance(q.nodes, q.weights, transform_nodes(q.nodes, R), q.weights));
    return worst;
}

// ---------------------------------------------------------------- triangle

enum class InnerOffset
{
    centered, // v = 2 t - 1 on [-1, 1]
    shifted   // v = 2 t - 2, the offset as it appears after factoring the phase
};

inline std::string to_string(InnerOffset o)
{
    return o == InnerOffset::centered ? "centered" : "shifted";
}

// Outer Gauss-Legendre rule in k_x = dp u, inner rule in k_y = s dp u v with
// N(m) = max(2, ceil(M_inner u_m)) nodes, since the inner band scales with k_x.
inline QuadratureND triangle_cascade(const TriangleSpec& t, int M_outer, int M_inner,
                                     InnerOffset offset = InnerOffset::centered)
{
    t.validate();
    if (M_outer < 1 || M_inner < 1)
        throw input_error("triangle_cascade: orders must be >= 1");
    QuadratureND q;
    q.region = Region::make_triangle(t);
    q.nodes = PointSet(2);
    const double shift = t.phase_shift.value_or(0.0);
    const auto [u, a] = gauss_legendre(M_outer, 0.0, 1.0);
    for (std::size_t m = 0; m < u.size(); ++m)
    {
        const int N = std::max(2, static_cast<int>(std::ceil(M_inner * u[m])));
        const auto [tt, b] = gauss_legendre(N, 0.0, 1.0);
        for (std::size_t n = 0; n < tt.size(); ++n)
        {
            const double v = offset == InnerOffset::centered ? 2.0 * tt[n] - 1.0 : 2.0 * tt[n] - 2.0;
            const double k[2] = {t.dp * u[m] - shift, t.s * t.dp * u[m] * v};
            q.nodes.push_back(k);
            q.weights.push_back(2.0 * t.dp * t.dp * t.s * a[m] * u[m] * b[n]);
        }
    }
    q.provenance = "triangle cascade, Gauss-Legendre outer " + std::to_string(M_outer) + ", inner " +
                   std::to_string(M_inner) + ", inner offset " + to_string(offset);
    return q;
}

/// Builds both inner-offset variants, keeps the one with the smaller error on
/// the target box and records the choice.
inline QuadratureND triangle_quadrature(const TriangleSpec& t, int M_outer, int M_inner, const TargetBox& target)
{
    auto c = triangle_cascade(t, M_outer, M_inner, InnerOffset::centered);
    auto p = triangle_cascade(t, M_outer, M_inner, InnerOffset::shifted);
    record_error_profile(c, target);
    record_error_profile(p, target);
    char buf[160];
    std::snprintf(buf, sizeof buf, "; selected by oracle error (centered %.3e, shifted %.3e)", c.profile.max_error,
                  p.profile.max_error);
    auto& best = p.profile.max_error < c.profile.max_error ? p : c;
    best.provenance += buf;
    return best;
}

/// One scaling refinement: each node spawns four children carrying a quarter
/// of its weight, which subdivides the triangle into four similar copies.
inline QuadratureND refine_triangle_quadrature(const QuadratureND& q, const TriangleSpec& t)
{
    if (q.dim() != 2)
        throw input_error("refine_triangle_quadrature: expected a 2D rule");
    if (t.phase_shift)
        throw input_error("refine_triangle_quadrature: phase-shifted triangles are not supported");
    QuadratureND r;
    r.region = q.region;
    r.nodes = PointSet(2);
    const double h = 0.5 * t.dp;
    const double hs = 0.5 * t.dp * t.s;
    for (std::size_t m = 0; m < q.size(); ++m)
    {
        const double kx = q.nodes[m][0], ky = q.nodes[m][1];
        const double w = 0.25 * q.weights[m];
        const double kids[4][2] = {
            {0.5 * kx, 0.5 * ky}, {0.5 * kx + h, 0.5 * ky + hs}, {0.5 * kx + h, 0.5 * ky - hs}, {t.dp - 0.5 * kx, 0.5 * ky}};
        for (const auto& k : kids)
        {
            r.nodes.push_back(k);
            r.weights.push_back(w);
        }
    }
    r.provenance = q.provenance + "; refined";
    return r;
}

struct RefinementLevel
{
    int level = 0;
    double max_error = 0.0;    // on the base box scaled by 2^level
    double bound_excess = 0.0; // largest violation of the pointwise combination bound
    std::size_t nodes = 0;
};

// Level m is checked on the base grid scaled by 2^m, so the half-arguments
// (x/2, y/2) and (-x/2, y/2) of grid point (i, j) are the points (i, j) and
// (nx-1-i, j) of the level m-1 grid.
inline std::vector<RefinementLevel> triangle_refinement_check(const QuadratureND& q0, const TriangleSpec& t,
                                                              const TargetBox& base, int levels)
{
    if (base.half.size() != 2)
        throw input_error("triangle_refinement_check: expected a 2D box");
    const int nx = base.counts[0], ny = base.counts[1];
    std::vector<RefinementLevel> out;
    QuadratureND q = q0;
    std::vector<double> prev = surrogate_errors(q, base.grid());
    out.push_back({0, *std::max_element(prev.begin(), prev.end()), 0.0, q.size()});
    const double tol = 1e-12 * t.area();
    for (int m = 1; m <= levels; ++m)
    {
        q = refine_triangle_quadrature(q, t);
        const auto e = surrogate_errors(q, base.scaled(std::ldexp(1.0, m)).grid());
        RefinementLevel L{m, 0.0, 0.0, q.size()};
        for (int i = 0; i < nx; ++i)
            for (int j = 0; j < ny; ++j)
            {
                const std::size_t idx = static_cast<std::size_t>(i) * ny + j;
                const std::size_t mir = static_cast<std::size_t>(nx - 1 - i) * ny + j;
                L.max_error = std::max(L.max_error, e[idx]);
                L.bound_excess = std::max(L.bound_excess, e[idx] - (0.25 * (3.0 * prev[idx] + prev[mir]) + tol));
            }
        out.push_back(L);
        prev = e;
    }
    return out;
}

inline Eigen::MatrixXd rotation2(double theta)
{
    Eigen::MatrixXd R(2, 2);
    R << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
    return R;
}

/// Equilateral triangle with unit side centred at its centroid: the rule for
/// one isosceles third, rotated by 0, 2 pi/3 and 4 pi/3.
inline QuadratureND equilateral_symmetric_quadrature(int M_outer, int M_inner, std::optional<TargetBox> target = {})
{
    const TriangleSpec sub = TriangleSpec::isosceles_sub();
    const QuadratureND base = target ? triangle_quadrature(sub, M_outer, M_inner, *target)
                                     : triangle_cascade(sub, M_outer, M_inner);
    QuadratureND q;
    q.nodes = PointSet(2);
    std::vector<Region> parts;
    std::vector<Eigen::MatrixXd> group;
    for (int r = 0; r < 3; ++r)
    {
        const Eigen::MatrixXd R = rotation2(2.0 * pi * r / 3.0);
        group.push_back(R);
        parts.push_back(Region::transformed(base.region, R));
        const PointSet rot = transform_nodes(base.nodes, R);
        for (std::size_t m = 0; m < base.size(); ++m)
        {
            q.nodes.push_back(rot[m]);
            q.weights.push_back(base.weights[m]);
        }
    }
    q.region = Region::union_of(std::move(parts));
    q.symmetry_group = std::move(group);
    q.provenance = "equilateral, three rotated copies of: " + base.provenance;
    if (target)
        record_error_profile(q, *target);
    return q;
}

/// The same centred equilateral triangle as one cascade (apex at the origin,
/// shifted by the centroid offset).
inline TriangleSpec equilateral_centered_spec()
{
    TriangleSpec t = TriangleSpec::equilateral();
    t.phase_shift = t.dp * 2.0 / 3.0;
    return t;
}

// ------------------------------------------------------------- tetrahedron

// k_z = h u, k_y = dp k_z v, k_x = s k_y (2 w - 1) with Gauss-Legendre rules on
// [0, 1] of orders M1, M2, M3.
inline QuadratureND tetra_cascade(const TetraSpec& t, int M1, int M2, int M3)
{
    t.validate();
    if (M1 < 1 || M2 < 1 || M3 < 1)
        throw input_error("tetra_cascade: orders must be >= 1");
    QuadratureND q;
    q.region = Region::make_tetrahedron(t);
    q.nodes = PointSet(3);
    const auto [u, a] = gauss_legendre(M1, 0.0, 1.0);
    const auto [v, b] = gauss_legendre(M2, 0.0, 1.0);
    const auto [w, c] = gauss_legendre(M3, 0.0, 1.0);
    const double pref = 2.0 * t.s * t.dp * t.dp * t.h * t.h * t.h;
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            for (std::size_t l = 0; l < w.size(); ++l)
            {
                const double kz = t.h * u[i];
                const double ky = t.dp * kz * v[j];
                const double k[3] = {t.s * ky * (2.0 * w[l] - 1.0), ky, kz};
                q.nodes.push_back(k);
                q.weights.push_back(pref * a[i] * b[j] * c[l] * u[i] * u[i] * v[j]);
            }
    q.provenance = "tetrahedron cascade, Gauss-Legendre orders " + std::to_string(M1) + "/" + std::to_string(M2) +
                   "/" + std::to_string(M3);
    return q;
}

inline QuadratureND tetra_quadrature(const TetraSpec& t, int M1, int M2, int M3, std::optional<TargetBox> target = {})
{
    auto q = tetra_cascade(t, M1, M2, M3);
    if (target)
        record_error_profile(q, *target);
    return q;
}

/// Local-to-world map placing the sub-tetrahedron as conv(0, face centroid, v1, v2).
inline Eigen::Matrix3d tetra_sub_placement()
{
    return Eigen::Vector3d(1.0, -1.0, -1.0).asDiagonal();
}

/// Unit regular tetrahedron centred at the origin, tiled by the 12 rotated
/// copies of the sub-tetrahedron rule.
inline QuadratureND tetra_symmetric_quadrature(int M1, int M2, int M3, std::optional<TargetBox> target = {})
{
    const QuadratureND base = tetra_cascade(TetraSpec::sub(), M1, M2, M3);
    const Eigen::Matrix3d F = tetra_sub_placement();
    QuadratureND q;
    q.nodes = PointSet(3);
    std::vector<Region> parts;
    std::vector<Eigen::MatrixXd> group;
    for (const auto& G : tetra_symmetry_group())
    {
        const Eigen::MatrixXd RF = G * F;
        group.push_back(G);
        parts.push_back(Region::transformed(base.region, RF));
        const PointSet moved = transform_nodes(base.nodes, RF);
        for (std::size_t m = 0; m < base.size(); ++m)
        {
            q.nodes.push_back(moved[m]);
            q.weights.push_back(base.weights[m]);
        }
    }
    q.region = Region::union_of(std::move(parts));
    q.symmetry_group = std::move(group);
    q.provenance = "regular tetrahedron, 12 rotated copies of the sub-tetrahedron " + base.provenance;
    if (target)
        record_error_profile(q, *target);
    return q;
}

/// Volume of the unit regular tetrahedron from its vertices.
inline double unit_tetra_volume()
{
    const auto v = tetra_vertices();
    Eigen::Matrix3d E;
    E << v[1] - v[0], v[2] - v[0], v[3] - v[0];
    return std::abs(E.determinant()) / 6.0;
}

// ---------------------------------------------------------------- cone, ball

// Nodes (omega0 u, pmax omega0 |u| rho (cos phi, sin phi)): u from a 2 M_w
// point rule on [-1, 1], rho from M_p points on [0, 1] with weight rho, and
// 4 M_t equally spaced angles (the Chebyshev rule for the J0 integral).
inline QuadratureND cone_quadrature(const ConeSpec& c, int M_w, int M_p, int M_t, std::optional<TargetBox> target = {})
{
    c.validate();
    if (c.n != 2)
        throw input_error("cone_quadrature: only n = 2 is supported");
    if (M_w < 1 || M_p < 1 || M_t < 1)
        throw input_error("cone_quadrature: orders must be >= 1");
    QuadratureND q;
    q.region = Region::make_cone(c);
    q.nodes = PointSet(3);
    const auto [u, a] = gauss_legendre(2 * M_w);
    const auto [rho, b] = gauss_legendre(M_p, 0.0, 1.0);
    const int na = 4 * M_t;
    const double dphi = 2.0 * pi / na;
    for (std::size_t i = 0; i < u.size(); ++i)
    {
        const double w = c.omega0 * u[i];
        const double kmax = c.pmax * std::abs(w);
        for (std::size_t j = 0; j < rho.size(); ++j)
            for (int l = 0; l < na; ++l)
            {
                const double phi = (l + 0.5) * dphi;
                const double k[3] = {w, kmax * rho[j] * std::cos(phi), kmax * rho[j] * std::sin(phi)};
                q.nodes.push_back(k);
                q.weights.push_back(c.omega0 * kmax * kmax * rho[j] * a[i] * b[j] * dphi);
            }
    }
    q.provenance = "cone cascade, orders omega " + std::to_string(2 * M_w) + ", radius " + std::to_string(M_p) +
                   ", angles " + std::to_string(na);
    if (target)
        record_error_profile(q, *target);
    return q;
}

inline QuadratureND ball_quadrature(double kmax, int M_r, int M_theta, int M_t, std::optional<TargetBox> target = {})
{
    if (!(kmax > 0.0))
        throw input_error("ball_quadrature: kmax must be positive");
    if (M_r < 1 || M_theta < 1 || M_t < 1)
        throw input_error("ball_quadrature: orders must be >= 1");
    QuadratureND q;
    q.region = Region::ball(kmax);
    q.nodes = PointSet(3);
    const auto [rho, a] = gauss_legendre(M_r, 0.0, 1.0);
    const auto [ct, b] = gauss_legendre(M_theta);
    const int na = 4 * M_t;
    const double dphi = 2.0 * pi / na;
    for (std::size_t i = 0; i < rho.size(); ++i)
        for (std::size_t j = 0; j < ct.size(); ++j)
        {
            const double st = std::sqrt(std::max(0.0, 1.0 - ct[j] * ct[j]));
            const double r = kmax * rho[i];
            for (int l = 0; l < na; ++l)
            {
                const double phi = (l + 0.5) * dphi;
                const double k[3] = {r * st * std::cos(phi), r * st * std::sin(phi), r * ct[j]};
                q.nodes.push_back(k);
                q.weights.push_back(kmax * kmax * kmax * rho[i] * rho[i] * a[i] * b[j] * dphi);
            }
        }
    q.provenance = "ball, orders radius " + std::to_string(M_r) + ", polar " + std::to_string(M_theta) +
                   ", azimuth " + std::to_string(na);
    if (target)
        record_error_profile(q, *target);
    return q;
}

} // namespace rlimit

#endif // RLIMIT_CUBATURE_HPP
