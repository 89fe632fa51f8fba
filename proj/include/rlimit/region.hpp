#ifndef RLIMIT_REGION_HPP
#define RLIMIT_REGION_HPP

// Fourier-support regions and their exact kernels in the convention
// K(x) = \int_R exp(i k . x) dk (no 2 pi in the exponent).

#include <Eigen/Dense>

#include <cmath>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "kernels.hpp"
#include "numkit.hpp"

namespace rlimit
{

enum class RegionKind
{
    interval,
    triangle,
    tetrahedron,
    cone,
    ball,
    transformed,
    union_of
};

inline std::string to_string(RegionKind k)
{
    switch (k)
    {
    case RegionKind::interval: return "interval";
    case RegionKind::triangle: return "triangle";
    case RegionKind::tetrahedron: return "tetrahedron";
    case RegionKind::cone: return "cone";
    case RegionKind::ball: return "ball";
    case RegionKind::transformed: return "transformed";
    case RegionKind::union_of: return "union";
    }
    return "unknown";
}

struct Region
{
    RegionKind kind = RegionKind::interval;
    double half_width = 1.0; // interval [-half_width, half_width]
    TriangleSpec triangle;
    TetraSpec tetra;
    ConeSpec cone;
    double kmax = 1.0;
    // transformed: {A k + offset : k in parts[0]}
    Eigen::MatrixXd A;
    Eigen::VectorXd offset;
    std::vector<Region> parts;
    // Caller assertion for unions; recorded, not checked.
    bool disjoint_asserted = false;

    static Region interval(double half_width = 1.0)
    {
        if (!(half_width > 0.0))
            throw input_error("Region::interval: half width must be positive");
        Region r;
        r.kind = RegionKind::interval;
        r.half_width = half_width;
        return r;
    }
    static Region make_triangle(const TriangleSpec& t)
    {
        t.validate();
        Region r;
        r.kind = RegionKind::triangle;
        r.triangle = t;
        return r;
    }
    static Region make_tetrahedron(const TetraSpec& t)
    {
        t.validate();
        Region r;
        r.kind = RegionKind::tetrahedron;
        r.tetra = t;
        return r;
    }
    static Region make_cone(const ConeSpec& c)
    {
        c.validate();
        Region r;
        r.kind = RegionKind::cone;
        r.cone = c;
        return r;
    }
    static Region ball(double kmax)
    {
        if (!(kmax > 0.0))
            throw input_error("Region::ball: kmax must be positive");
        Region r;
        r.kind = RegionKind::ball;
        r.kmax = kmax;
        return r;
    }
    static Region transformed(const Region& base, const Eigen::MatrixXd& A, Eigen::VectorXd offset = {})
    {
        const auto d = static_cast<Eigen::Index>(base.dim());
        if (A.rows() != d || A.cols() != d)
            throw input_error("Region::transformed: matrix dimension mismatch");
        if (std::abs(A.determinant()) <= 1e-14)
            throw input_error("Region::transformed: matrix is singular");
        if (offset.size() == 0)
            offset = Eigen::VectorXd::Zero(d);
        if (offset.size() != d)
            throw input_error("Region::transformed: offset dimension mismatch");
        Region r;
        r.kind = RegionKind::transformed;
        r.A = A;
        r.offset = std::move(offset);
        r.parts = {base};
        return r;
    }
    static Region union_of(std::vector<Region> parts, bool disjoint_asserted = true)
    {
        if (parts.empty())
            throw input_error("Region::union_of: no parts");
        for (const auto& p : parts)
            if (p.dim() != parts.front().dim())
                throw input_error("Region::union_of: parts differ in dimension");
        Region r;
        r.kind = RegionKind::union_of;
        r.parts = std::move(parts);
        r.disjoint_asserted = disjoint_asserted;
        return r;
    }

    std::size_t dim() const
    {
        switch (kind)
        {
        case RegionKind::interval: return 1;
        case RegionKind::triangle: return 2;
        case RegionKind::tetrahedron: return 3;
        case RegionKind::cone: return static_cast<std::size_t>(cone.n) + 1;
        case RegionKind::ball: return 3;
        case RegionKind::transformed:
        case RegionKind::union_of: return parts.front().dim();
        }
        return 0;
    }

    double measure() const
    {
        switch (kind)
        {
        case RegionKind::interval: return 2.0 * half_width;
        case RegionKind::triangle: return triangle.area();
        case RegionKind::tetrahedron: return tetra.volume();
        case RegionKind::cone: return cone.measure();
        case RegionKind::ball: return 4.0 * pi * kmax * kmax * kmax / 3.0;
        case RegionKind::transformed: return std::abs(A.determinant()) * parts.front().measure();
        case RegionKind::union_of: {
            double m = 0.0;
            for (const auto& p : parts)
                m += p.measure();
            return m;
        }
        }
        return 0.0;
    }

    /// R = -R, known structurally.
    bool symmetric() const
    {
        switch (kind)
        {
        case RegionKind::interval:
        case RegionKind::cone:
        case RegionKind::ball: return true;
        case RegionKind::transformed: return offset.isZero(0.0) && parts.front().symmetric();
        default: return false;
        }
    }
};

/// K(x) = \int_R exp(i k . x) dk.
inline complex_t region_kernel_exact(const Region& r, std::span<const double> x,
                                     const IntegrationOptions& opt = {})
{
    if (x.size() != r.dim())
        throw input_error("region_kernel_exact: point dimension does not match region");
    const double s = 1.0 / (2.0 * pi);
    switch (r.kind)
    {
    case RegionKind::interval: return 2.0 * r.half_width * sinc(r.half_width * x[0]);
    case RegionKind::triangle: {
        TriangleSpec t = r.triangle;
        return k_triangle(t, s * x[0], s * x[1]);
    }
    case RegionKind::tetrahedron: return k_tetra(r.tetra, s * x[0], s * x[1], s * x[2]);
    case RegionKind::cone: {
        std::vector<double> k(x.begin() + 1, x.end());
        for (auto& v : k)
            v *= s;
        return k_cone(r.cone, s * x[0], k, opt);
    }
    case RegionKind::ball: {
        double r2 = 0.0;
        for (double v : x)
            r2 += v * v;
        return k_ball(r.kmax, s * std::sqrt(r2));
    }
    case RegionKind::transformed: {
        const Eigen::Map<const Eigen::VectorXd> xv(x.data(), static_cast<Eigen::Index>(x.size()));
        const Eigen::VectorXd y = r.A.transpose() * xv;
        const complex_t base = region_kernel_exact(r.parts.front(), std::span<const double>(y.data(), y.size()), opt);
        return std::abs(r.A.determinant()) * base * std::polar(1.0, r.offset.dot(xv));
    }
    case RegionKind::union_of: {
        complex_t sum(0.0);
        for (const auto& p : r.parts)
            sum += region_kernel_exact(p, x, opt);
        return sum;
    }
    }
    throw input_error("region_kernel_exact: unsupported region");
}

inline complex_t region_kernel_exact(const Region& r, std::initializer_list<double> x)
{
    return region_kernel_exact(r, std::span<const double>(x.begin(), x.size()));
}

} // namespace rlimit

#endif // RLIMIT_REGION_HPP
