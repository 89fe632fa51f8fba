#pragma once

// Brute-force reference integrals shared by the unit tests. They use plain
// nested adaptive quadrature and none of the closed forms under test.

#include <rlimit/integrate.hpp>
#include <rlimit/numkit.hpp>

#include <functional>

namespace oracle
{

using rlimit::complex_t;

inline rlimit::IntegrationOptions tight(double tol = 1e-11)
{
    rlimit::IntegrationOptions o;
    o.abs_tol = tol;
    o.rel_tol = tol;
    return o;
}

/// \int_a^b \int_{lo(x)}^{hi(x)} f(x, y) dy dx
inline complex_t integrate2(const std::function<complex_t(double, double)>& f, double a, double b,
                            const std::function<double(double)>& lo, const std::function<double(double)>& hi,
                            double tol = 1e-11)
{
    const auto o = tight(tol);
    return rlimit::integrate(
        [&](double x) {
            const double l = lo(x), h = hi(x);
            if (h <= l)
                return complex_t(0.0);
            return rlimit::integrate([&](double y) { return f(x, y); }, l, h, o);
        },
        a, b, o);
}

/// \int_R exp(i 2 pi k . x) dk for the triangle {0 <= kx <= dp, |ky| <= s kx}.
inline complex_t triangle_kernel(double dp, double s, double x, double y)
{
    return integrate2([&](double kx, double ky) { return std::polar(1.0, 2.0 * rlimit::pi * (kx * x + ky * y)); },
                      0.0, dp, [&](double kx) { return -s * kx; }, [&](double kx) { return s * kx; });
}

/// Same for {0 <= kz <= h, 0 <= ky <= dp kz, |kx| <= s ky}; the innermost
/// integral over kx is done analytically as 2 s ky sinc(2 pi s ky x).
inline complex_t tetra_kernel(double h, double dp, double s, double x, double y, double z)
{
    return integrate2(
        [&](double kz, double ky) {
            return 2.0 * s * ky * rlimit::sinc(2.0 * rlimit::pi * s * ky * x) *
                   std::polar(1.0, 2.0 * rlimit::pi * (ky * y + kz * z));
        },
        0.0, h, [](double) { return 0.0; }, [&](double kz) { return dp * kz; }, 1e-10);
}

} // namespace oracle
