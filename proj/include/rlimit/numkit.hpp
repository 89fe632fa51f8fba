#ifndef RLIMIT_NUMKIT_HPP
#define RLIMIT_NUMKIT_HPP

///
/// \file numkit.hpp
///
/// Special functions with removable singularities, point sets and sampled
/// complex fields shared by the rest of the library.
///

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rlimit
{

using complex_t = std::complex<double>;

inline constexpr double pi = 3.141592653589793238462643383279502884;

//
// Error hierarchy. `input_error` covers malformed or inconsistent arguments
// (the CLI maps it to exit code 2); `numerical_error` covers solver or
// integration failures.
//
class error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class input_error : public error
{
public:
    using error::error;
};

class numerical_error : public error
{
public:
    using error::error;
};

namespace detail
{
// Below this magnitude the special functions switch to degree-10 Taylor
// polynomials.
inline constexpr double series_threshold = 1e-3;

inline void require_finite(double x, const char* what)
{
    if (!std::isfinite(x))
        throw numerical_error(std::string(what) + ": non-finite argument");
}
} // namespace detail

/// sin(x)/x with sinc(0) = 1.
inline double sinc(double x)
{
    detail::require_finite(x, "sinc");
    if (std::abs(x) <= detail::series_threshold)
    {
        const double x2 = x * x;
        // 1 - x^2/3! + x^4/5! - ... - x^10/11!
        return 1.0 +
               x2 * (-1.0 / 6.0 +
                     x2 * (1.0 / 120.0 +
                           x2 * (-1.0 / 5040.0 +
                                 x2 * (1.0 / 362880.0 +
                                       x2 * (-1.0 / 39916800.0)))));
    }
    return std::sin(x) / x;
}

/// (1 - cos x)/x, odd, with cosinc(0) = 0.
inline double cosinc(double x)
{
    detail::require_finite(x, "cosinc");
    if (std::abs(x) <= detail::series_threshold)
    {
        const double x2 = x * x;
        // x/2! - x^3/4! + x^5/6! - x^7/8! + x^9/10!
        return x * (0.5 +
                    x2 * (-1.0 / 24.0 +
                          x2 * (1.0 / 720.0 +
                                x2 * (-1.0 / 40320.0 +
                                      x2 * (1.0 / 3628800.0)))));
    }
    // 1 - cos x = 2 sin^2(x/2) avoids cancellation for moderate x.
    const double s = std::sin(0.5 * x);
    return 2.0 * s * s / x;
}

/// (e^z - 1)/z with expc(0) = 1.
inline complex_t expc(complex_t z)
{
    detail::require_finite(z.real(), "expc");
    detail::require_finite(z.imag(), "expc");
    if (std::abs(z) <= detail::series_threshold)
    {
        // sum_{k=0}^{10} z^k / (k+1)!
        complex_t acc = 1.0 / 39916800.0;
        double fact = 39916800.0;
        for (int k = 9; k >= 0; --k)
        {
            fact /= static_cast<double>(k + 2);
            acc = acc * z + 1.0 / fact;
        }
        return acc;
    }
    const double a = z.real();
    const double b = z.imag();
    const double sb2 = std::sin(0.5 * b);
    // e^z - 1 = expm1(a) cos b - 2 sin^2(b/2) + i e^a sin b
    const complex_t em1(std::expm1(a) * std::cos(b) - 2.0 * sb2 * sb2,
                        std::exp(a) * std::sin(b));
    return em1 / z;
}

///
/// A set of points in R^dim, stored row-major.
///
class PointSet
{
public:
    PointSet() = default;

    explicit PointSet(std::size_t dim) : dim_(dim)
    {
        if (dim == 0)
            throw input_error("PointSet: dimension must be >= 1");
    }

    PointSet(std::size_t dim, std::vector<double> coords)
        : dim_(dim), coords_(std::move(coords))
    {
        if (dim == 0)
            throw input_error("PointSet: dimension must be >= 1");
        if (coords_.size() % dim != 0)
            throw input_error("PointSet: coordinate count not a multiple of dim");
        for (double c : coords_)
            detail::require_finite(c, "PointSet");
    }

    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return dim_ == 0 ? 0 : coords_.size() / dim_; }
    bool empty() const noexcept { return coords_.empty(); }

    std::span<const double> operator[](std::size_t i) const
    {
        return {coords_.data() + i * dim_, dim_};
    }

    void push_back(std::span<const double> p)
    {
        if (p.size() != dim_)
            throw input_error("PointSet: point dimension mismatch");
        for (double c : p)
            detail::require_finite(c, "PointSet");
        coords_.insert(coords_.end(), p.begin(), p.end());
    }

    const std::vector<double>& coords() const noexcept { return coords_; }

private:
    std::size_t dim_ = 0;
    std::vector<double> coords_;
};

///
/// Complex values attached to a point set.
///
struct SampledField
{
    PointSet points;
    std::vector<complex_t> values;
    std::string label;

    SampledField() = default;
    SampledField(PointSet p, std::vector<complex_t> v, std::string l = {})
        : points(std::move(p)), values(std::move(v)), label(std::move(l))
    {
        if (points.size() != values.size())
            throw input_error("SampledField: |values| != |points|");
    }

    std::size_t size() const noexcept { return values.size(); }

    double max_abs() const
    {
        double m = 0.0;
        for (const auto& v : values)
            m = std::max(m, std::abs(v));
        return m;
    }
};

/// Tensor-product uniform grid including both endpoints; the first axis
/// varies slowest.
inline PointSet make_grid(std::span<const double> lo, std::span<const double> hi,
                          std::span<const int> counts)
{
    const std::size_t d = lo.size();
    if (d == 0 || hi.size() != d || counts.size() != d)
        throw input_error("make_grid: dimension mismatch");
    std::size_t total = 1;
    for (std::size_t j = 0; j < d; ++j)
    {
        if (!(lo[j] < hi[j]))
            throw input_error("make_grid: require lo < hi componentwise");
        if (counts[j] < 2)
            throw input_error("make_grid: require counts >= 2");
        total *= static_cast<std::size_t>(counts[j]);
    }
    std::vector<double> coords;
    coords.reserve(total * d);
    std::vector<int> idx(d, 0);
    for (std::size_t n = 0; n < total; ++n)
    {
        for (std::size_t j = 0; j < d; ++j)
        {
            const double t = static_cast<double>(idx[j]) / (counts[j] - 1);
            // Pin the last sample to hi exactly.
            coords.push_back(idx[j] == counts[j] - 1 ? hi[j] : lo[j] + t * (hi[j] - lo[j]));
        }
        for (std::size_t j = d; j-- > 0;)
        {
            if (++idx[j] < counts[j])
                break;
            idx[j] = 0;
        }
    }
    return PointSet(d, std::move(coords));
}

inline PointSet make_grid(std::initializer_list<double> lo, std::initializer_list<double> hi,
                          std::initializer_list<int> counts)
{
    return make_grid(std::span<const double>(lo.begin(), lo.size()),
                     std::span<const double>(hi.begin(), hi.size()),
                     std::span<const int>(counts.begin(), counts.size()));
}

/// Uniform 1D grid on [lo, hi].
inline std::vector<double> linspace(double lo, double hi, std::size_t n)
{
    std::vector<double> x(n);
    if (n == 1)
    {
        x[0] = lo;
        return x;
    }
    for (std::size_t i = 0; i < n; ++i)
        x[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    if (n > 1)
        x.back() = hi;
    return x;
}

/// n-point Gauss-Legendre rule on [lo, hi], nodes ascending.
inline std::pair<std::vector<double>, std::vector<double>> gauss_legendre(int n, double lo = -1.0, double hi = 1.0)
{
    if (n < 1)
        throw input_error("gauss_legendre: n must be >= 1");
    std::vector<double> x(static_cast<std::size_t>(n)), w(static_cast<std::size_t>(n));
    const double c = 0.5 * (lo + hi);
    const double h = 0.5 * (hi - lo);
    auto legendre = [n](long double z, long double& dp) {
        long double p0 = 1.0L, p1 = z;
        for (int k = 2; k <= n; ++k)
        {
            const long double p2 = ((2 * k - 1) * z * p1 - (k - 1) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (z * p1 - p0) / (z * z - 1.0L);
        return p1;
    };
    for (int i = 0; i < (n + 1) / 2; ++i)
    {
        long double z = std::cos(3.14159265358979323846264338327950288L * (i + 0.75L) / (n + 0.5L));
        long double dp = 0.0L;
        for (int it = 0; it < 100; ++it)
        {
            const long double dz = legendre(z, dp) / dp;
            z -= dz;
            if (std::abs(dz) < 1e-19L)
                break;
        }
        legendre(z, dp);
        const long double wi = 2.0L / ((1.0L - z * z) * dp * dp);
        const auto hi_idx = static_cast<std::size_t>(n - 1 - i);
        const auto lo_idx = static_cast<std::size_t>(i);
        x[hi_idx] = static_cast<double>(c + h * z);
        x[lo_idx] = static_cast<double>(c - h * z);
        w[hi_idx] = w[lo_idx] = static_cast<double>(h * wi);
    }
    if (n % 2 == 1)
        x[static_cast<std::size_t>(n / 2)] = c;
    return {x, w};
}

} // namespace rlimit

#endif // RLIMIT_NUMKIT_HPP
