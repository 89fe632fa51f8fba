#ifndef RLIMIT_INTEGRATE_HPP
#define RLIMIT_INTEGRATE_HPP

// Adaptive Gauss-Kronrod integration used as the brute-force oracle, plus a
// small thread pool helper honoring RLIMIT_THREADS.

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

#include "numkit.hpp"

namespace rlimit
{

struct IntegrationOptions
{
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    unsigned max_depth = 18;
    // Length of the sub-intervals the domain is cut into before adaptive
    // refinement. Oscillatory integrands need a piece per half period.
    double piece = 0.0;
};

namespace detail
{
template <class R>
double magnitude(const R& r)
{
    using std::abs;
    return static_cast<double>(abs(r));
}
} // namespace detail

// Integrates f over [a, b]. Result type follows f (real or complex).
template <class F>
auto integrate(F&& f, double a, double b, const IntegrationOptions& opt = {})
{
    using boost::math::quadrature::gauss_kronrod;
    using R = decltype(f(a));
    R total{};
    if (a == b)
        return total;
    int pieces = 1;
    if (opt.piece > 0.0)
        pieces = std::max(1, static_cast<int>(std::ceil(std::abs(b - a) / opt.piece)));
    const double h = (b - a) / pieces;
    for (int p = 0; p < pieces; ++p)
    {
        const double lo = a + p * h;
        const double hi = (p + 1 == pieces) ? b : lo + h;
        double err = 0.0;
        // Boost compares an error estimate taken on [-1, 1] against a tolerance
        // scaled by the interval length, which never converges on short
        // intervals. Integrating over [-1, 1] directly keeps the two consistent.
        const double mid = 0.5 * (lo + hi);
        const double half = 0.5 * (hi - lo);
        auto g = [&](double u) { return f(mid + half * u) * half; };
        R part = gauss_kronrod<double, 61>::integrate(g, -1.0, 1.0, opt.max_depth, opt.rel_tol, &err);
        if (!std::isfinite(detail::magnitude(part)))
            throw numerical_error("integrate: non-finite result");
        const double scale = std::max(detail::magnitude(part), 1.0);
        if (err > std::max(opt.abs_tol / pieces, 10.0 * opt.rel_tol * scale) && err > 1e-8 * scale)
            throw numerical_error("integrate: adaptive quadrature did not converge (error estimate " +
                                  std::to_string(err) + ")");
        total += part;
    }
    return total;
}

/// Number of worker threads, capped by the RLIMIT_THREADS environment variable.
inline unsigned thread_count()
{
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("RLIMIT_THREADS"))
    {
        const int cap = std::atoi(env);
        if (cap >= 1)
            n = std::min(n, static_cast<unsigned>(cap));
    }
    return n;
}

/// Runs body(i) for i in [0, n). Iterations must be independent.
template <class Body>
void parallel_for(std::size_t n, Body&& body)
{
    const unsigned nt = static_cast<unsigned>(std::min<std::size_t>(thread_count(), n));
    if (nt <= 1)
    {
        for (std::size_t i = 0; i < n; ++i)
            body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    for (unsigned t = 0; t < nt; ++t)
        pool.emplace_back([&] {
            try
            {
                for (std::size_t i = next++; i < n && !failed; i = next++)
                    body(i);
            }
            catch (...)
            {
                if (!failed.exchange(true))
                    failure = std::current_exception();
            }
        });
    for (auto& th : pool)
        th.join();
    if (failure)
        std::rethrow_exception(failure);
}

} // namespace rlimit

#endif // RLIMIT_INTEGRATE_HPP
