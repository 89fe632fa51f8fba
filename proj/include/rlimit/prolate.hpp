#ifndef RLIMIT_PROLATE_HPP
#define RLIMIT_PROLATE_HPP

// Quadrature-discretized prolate spheroidal functions (1D) and R-Slepian
// functions (ND).
//
// A rule (a_m, k_m) for a region R and a symmetric band matrix B give
//   exp system:    lambda phi(k_l) = sum_m a_m e^{i 2 pi k_l . B k_m} phi(k_m)
//   kernel system: mu phi(k_l)     = sum_m a_m G(k_l - k_m) phi(k_m),
// with G(t) = |det B| K(2 pi B t). Both are solved in the frame
// psi = W^{1/2} phi, W = diag(a), where the kernel system is Hermitian.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cubature.hpp"
#include "moments.hpp"
#include "numkit.hpp"
#include "region.hpp"

namespace rlimit
{

inline constexpr double mu_floor = 1e-8;

enum class EigenKind
{
    exp_system,
    kernel_system
};

/// Kernel used by the kernel system: the rule's own exponential sum, or the
/// region's exact kernel.
enum class KernelMode
{
    surrogate,
    exact
};

inline std::string to_string(EigenKind k)
{
    return k == EigenKind::exp_system ? "exp_system" : "kernel_system";
}
inline std::string to_string(KernelMode k)
{
    return k == KernelMode::surrogate ? "surrogate" : "exact";
}

struct EigenBasis
{
    std::vector<double> mu;          // descending
    std::vector<complex_t> lambda;   // exp system only
    Eigen::MatrixXcd vectors;        // column n is phi_n at the nodes, unit norm
    PointSet nodes;
    std::vector<double> weights;     // a_m
    Eigen::MatrixXd band;
    double det_band = 1.0;
    Region region;
    EigenKind kind = EigenKind::exp_system;
    KernelMode mode = KernelMode::surrogate;
    bool reflection_symmetric = false;

    std::size_t size() const { return mu.size(); }
    std::size_t dim() const { return nodes.dim(); }
};

namespace detail
{

/// Index of -k_m for each node, or empty when the weighted node set is not
/// symmetric under k -> -k.
inline std::vector<std::size_t> reflection_pairs(const PointSet& p, std::span<const double> w, double tol = 1e-12)
{
    const std::size_t n = p.size(), d = p.dim();
    std::vector<std::size_t> J(n, n);
    for (std::size_t i = 0; i < n; ++i)
    {
        double scale = 0.0;
        for (std::size_t c = 0; c < d; ++c)
            scale = std::max(scale, std::abs(p[i][c]));
        for (std::size_t j = 0; j < n; ++j)
        {
            double dist = 0.0;
            for (std::size_t c = 0; c < d; ++c)
                dist = std::max(dist, std::abs(p[i][c] + p[j][c]));
            if (dist <= tol * std::max(1.0, scale) && std::abs(w[i] - w[j]) <= tol * std::abs(w[i]))
            {
                J[i] = j;
                break;
            }
        }
        if (J[i] == n)
            return {};
    }
    return J;
}

/// Orthonormal bases of the even and odd subspaces of the reflection J.
inline std::pair<Eigen::MatrixXd, Eigen::MatrixXd> parity_bases(const std::vector<std::size_t>& J)
{
    const auto n = static_cast<Eigen::Index>(J.size());
    std::vector<Eigen::VectorXd> even, odd;
    const double r = 1.0 / std::sqrt(2.0);
    for (std::size_t i = 0; i < J.size(); ++i)
    {
        if (J[i] < i)
            continue;
        Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
        if (J[i] == i)
        {
            e[static_cast<Eigen::Index>(i)] = 1.0;
            even.push_back(e);
            continue;
        }
        e[static_cast<Eigen::Index>(i)] = r;
        e[static_cast<Eigen::Index>(J[i])] = r;
        even.push_back(e);
        e[static_cast<Eigen::Index>(J[i])] = -r;
        odd.push_back(e);
    }
    Eigen::MatrixXd E(n, static_cast<Eigen::Index>(even.size())), O(n, static_cast<Eigen::Index>(odd.size()));
    for (std::size_t j = 0; j < even.size(); ++j)
        E.col(static_cast<Eigen::Index>(j)) = even[j];
    for (std::size_t j = 0; j < odd.size(); ++j)
        O.col(static_cast<Eigen::Index>(j)) = odd[j];
    return {E, O};
}

/// Phase matrix e^{i 2 pi k_l . B k_m} split into cosine and sine parts.
inline void phase_matrices(const PointSet& p, const Eigen::MatrixXd& B, Eigen::MatrixXd& C, Eigen::MatrixXd& S)
{
    const auto n = static_cast<Eigen::Index>(p.size());
    const auto d = static_cast<Eigen::Index>(p.dim());
    Eigen::MatrixXd K(n, d);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index c = 0; c < d; ++c)
            K(i, c) = p[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
    const Eigen::MatrixXd ph = 2.0 * pi * K * B * K.transpose();
    C = ph.array().cos().matrix();
    S = ph.array().sin().matrix();
}

/// Unit Euclidean norm, dominant component real and positive.
inline void normalize_columns(Eigen::MatrixXcd& V)
{
    for (Eigen::Index j = 0; j < V.cols(); ++j)
    {
        Eigen::Index imax = 0;
        V.col(j).cwiseAbs().maxCoeff(&imax);
        const complex_t d = V(imax, j);
        if (std::abs(d) > 0.0)
            V.col(j) *= std::conj(d) / std::abs(d);
        const double nrm = V.col(j).norm();
        if (nrm > 0.0)
            V.col(j) /= nrm;
    }
}

/// Descending mu; near-equal mu ordered by the index of the dominant
/// eigenvector component.
inline std::vector<std::size_t> eigen_order(const std::vector<double>& mu, const Eigen::MatrixXcd& V)
{
    std::vector<std::size_t> idx(mu.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return mu[a] > mu[b]; });
    auto dominant = [&](std::size_t j) {
        Eigen::Index i = 0;
        V.col(static_cast<Eigen::Index>(j)).cwiseAbs().maxCoeff(&i);
        return i;
    };
    std::size_t g = 0;
    while (g < idx.size())
    {
        std::size_t e = g + 1;
        while (e < idx.size() && mu[idx[g]] - mu[idx[e]] <= 1e-10 * std::max(1.0, mu[idx[g]]))
            ++e;
        std::stable_sort(idx.begin() + static_cast<long>(g), idx.begin() + static_cast<long>(e),
                         [&](std::size_t a, std::size_t b) { return dominant(a) < dominant(b); });
        g = e;
    }
    return idx;
}

inline void finish_basis(EigenBasis& eb, std::vector<double> mu, std::vector<complex_t> lambda, Eigen::MatrixXcd Psi)
{
    const auto n = static_cast<Eigen::Index>(eb.weights.size());
    for (Eigen::Index i = 0; i < n; ++i)
        Psi.row(i) /= std::sqrt(eb.weights[static_cast<std::size_t>(i)]);
    normalize_columns(Psi);
    const auto order = eigen_order(mu, Psi);
    eb.vectors.resize(n, static_cast<Eigen::Index>(order.size()));
    for (std::size_t j = 0; j < order.size(); ++j)
    {
        eb.vectors.col(static_cast<Eigen::Index>(j)) = Psi.col(static_cast<Eigen::Index>(order[j]));
        eb.mu.push_back(mu[order[j]]);
        if (!lambda.empty())
            eb.lambda.push_back(lambda[order[j]]);
    }
}

inline EigenBasis basis_shell(const PointSet& nodes, std::vector<double> weights, const Eigen::MatrixXd& B,
                              const Region& region)
{
    if (nodes.size() != weights.size() || nodes.empty())
        throw input_error("eigensystem: node and weight counts differ or are empty");
    if (B.rows() != static_cast<Eigen::Index>(nodes.dim()) || B.cols() != B.rows())
        throw input_error("eigensystem: band matrix dimension mismatch");
    if ((B - B.transpose()).cwiseAbs().maxCoeff() > 1e-12 * B.cwiseAbs().maxCoeff())
        throw input_error("eigensystem: band matrix must be symmetric");
    for (double w : weights)
        if (!(w > 0.0))
            throw input_error("eigensystem: weights must be positive");
    EigenBasis eb;
    eb.nodes = nodes;
    eb.weights = std::move(weights);
    eb.band = B;
    eb.det_band = std::abs(B.determinant());
    if (!(eb.det_band > 1e-14))
        throw input_error("eigensystem: band matrix is singular");
    eb.region = region;
    return eb;
}

} // namespace detail

/// Exp system for a rule with weights a_m (summing to |R|) and band B.
inline EigenBasis rslepian_exp_eigensystem(const PointSet& nodes, std::vector<double> weights,
                                           const Eigen::MatrixXd& B, const Region& region)
{
    EigenBasis eb = detail::basis_shell(nodes, std::move(weights), B, region);
    eb.kind = EigenKind::exp_system;
    const auto n = static_cast<Eigen::Index>(eb.weights.size());
    Eigen::VectorXd sw(n);
    for (Eigen::Index i = 0; i < n; ++i)
        sw[i] = std::sqrt(eb.weights[static_cast<std::size_t>(i)]);
    Eigen::MatrixXd C, S;
    detail::phase_matrices(nodes, B, C, S);
    const Eigen::MatrixXd X = sw.asDiagonal() * C * sw.asDiagonal();
    const Eigen::MatrixXd Y = sw.asDiagonal() * S * sw.asDiagonal();

    std::vector<double> mu;
    std::vector<complex_t> lambda;
    Eigen::MatrixXcd Psi(n, n);
    const auto J = detail::reflection_pairs(nodes, eb.weights);
    if (!J.empty())
    {
        // Cosine part acts on even vectors only, sine part on odd ones, so
        // X + iY splits into two real symmetric blocks.
        eb.reflection_symmetric = true;
        const auto [E, O] = detail::parity_bases(J);
        Eigen::Index col = 0;
        auto solve_block = [&](const Eigen::MatrixXd& Q, const Eigen::MatrixXd& M, complex_t unit) {
            if (Q.cols() == 0)
                return;
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Q.transpose() * M * Q);
            if (es.info() != Eigen::Success)
                throw numerical_error("rslepian_exp_eigensystem: symmetric eigensolver failed");
            const Eigen::MatrixXd V = Q * es.eigenvectors();
            for (Eigen::Index j = 0; j < V.cols(); ++j)
            {
                const complex_t l = unit * es.eigenvalues()[j];
                lambda.push_back(l);
                mu.push_back(eb.det_band * std::norm(l));
                Psi.col(col++) = V.col(j).cast<complex_t>();
            }
        };
        solve_block(E, X, complex_t(1.0, 0.0));
        solve_block(O, Y, complex_t(0.0, 1.0));
    }
    else
    {
        Eigen::MatrixXcd A(n, n);
        A.real() = X;
        A.imag() = Y;
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(A);
        if (es.info() != Eigen::Success)
            throw numerical_error("rslepian_exp_eigensystem: eigensolver failed");
        Psi = es.eigenvectors();
        for (Eigen::Index j = 0; j < n; ++j)
        {
            lambda.push_back(es.eigenvalues()[j]);
            mu.push_back(eb.det_band * std::norm(es.eigenvalues()[j]));
        }
    }
    detail::finish_basis(eb, std::move(mu), std::move(lambda), std::move(Psi));
    return eb;
}

/// G(k_l - k_m) = |det B| K(2 pi B (k_l - k_m)) for the chosen kernel mode.
inline Eigen::MatrixXcd kernel_matrix(const PointSet& nodes, std::span<const double> weights,
                                      const Eigen::MatrixXd& B, const Region& region, KernelMode mode)
{
    const auto n = static_cast<Eigen::Index>(nodes.size());
    const double det = std::abs(B.determinant());
    Eigen::MatrixXcd G(n, n);
    if (mode == KernelMode::surrogate)
    {
        Eigen::MatrixXd C, S;
        detail::phase_matrices(nodes, B, C, S);
        Eigen::MatrixXcd F(n, n);
        F.real() = C;
        F.imag() = S;
        Eigen::VectorXd w(n);
        for (Eigen::Index i = 0; i < n; ++i)
            w[i] = weights[static_cast<std::size_t>(i)];
        G = det * F * w.asDiagonal() * F.adjoint();
        return G;
    }
    const std::size_t d = nodes.dim();
    const auto dd = static_cast<Eigen::Index>(d);
    for (Eigen::Index l = 0; l < n; ++l)
        for (Eigen::Index m = 0; m <= l; ++m)
        {
            Eigen::VectorXd diff(dd);
            for (Eigen::Index c = 0; c < dd; ++c)
                diff[c] = nodes[static_cast<std::size_t>(l)][static_cast<std::size_t>(c)] -
                          nodes[static_cast<std::size_t>(m)][static_cast<std::size_t>(c)];
            const Eigen::VectorXd x = 2.0 * pi * (B * diff);
            const complex_t v = det * region_kernel_exact(region, std::span<const double>(x.data(), d));
            G(l, m) = v;
            G(m, l) = std::conj(v);
        }
    return G;
}

inline EigenBasis rslepian_kernel_eigensystem(const PointSet& nodes, std::vector<double> weights,
                                              const Eigen::MatrixXd& B, const Region& region,
                                              KernelMode mode = KernelMode::surrogate)
{
    EigenBasis eb = detail::basis_shell(nodes, std::move(weights), B, region);
    eb.kind = EigenKind::kernel_system;
    eb.mode = mode;
    eb.reflection_symmetric = !detail::reflection_pairs(nodes, eb.weights).empty();
    const auto n = static_cast<Eigen::Index>(eb.weights.size());
    Eigen::VectorXd sw(n);
    for (Eigen::Index i = 0; i < n; ++i)
        sw[i] = std::sqrt(eb.weights[static_cast<std::size_t>(i)]);
    const Eigen::MatrixXcd G = kernel_matrix(nodes, eb.weights, B, region, mode);
    Eigen::MatrixXcd H = sw.asDiagonal() * G * sw.asDiagonal();
    H = 0.5 * (H + H.adjoint()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H);
    if (es.info() != Eigen::Success)
        throw numerical_error("rslepian_kernel_eigensystem: eigensolver failed");
    std::vector<double> mu(static_cast<std::size_t>(n));
    for (Eigen::Index j = 0; j < n; ++j)
        mu[static_cast<std::size_t>(j)] = es.eigenvalues()[j];
    detail::finish_basis(eb, std::move(mu), {}, es.eigenvectors());
    return eb;
}

inline EigenBasis rslepian_exp_eigensystem(const QuadratureND& q, const Eigen::MatrixXd& B)
{
    return rslepian_exp_eigensystem(q.nodes, q.weights, B, q.region);
}

inline EigenBasis rslepian_kernel_eigensystem(const QuadratureND& q, const Eigen::MatrixXd& B,
                                              KernelMode mode = KernelMode::surrogate)
{
    return rslepian_kernel_eigensystem(q.nodes, q.weights, B, q.region, mode);
}

namespace detail
{
inline void require_symmetric_rule(const Quadrature1D& q, double B)
{
    if (!q.symmetric)
        throw input_error("pswf: quadrature must be a symmetric rule on [-1, 1]");
    if (!(B > 0.0))
        throw input_error("pswf: band must be positive");
    if (q.size() == 0)
        throw input_error("pswf: empty quadrature");
}
inline PointSet nodes_1d(const Quadrature1D& q)
{
    return PointSet(1, q.nodes);
}
inline std::vector<double> weights_1d(const Quadrature1D& q, double B)
{
    std::vector<double> a(q.weights);
    for (auto& v : a)
        v /= B;
    return a;
}
} // namespace detail

/// 1D exp system: lambda phi(w_k) = (1/B) sum_m alpha_m e^{i 2 pi B w_m w_k} phi(w_m),
/// for a symmetric rule whose weights alpha sum to 2B.
inline EigenBasis pswf_exp_eigensystem(const Quadrature1D& q, double B)
{
    detail::require_symmetric_rule(q, B);
    return rslepian_exp_eigensystem(detail::nodes_1d(q), detail::weights_1d(q, B), Eigen::MatrixXd::Constant(1, 1, B),
                                    Region::interval(1.0));
}

/// 1D kernel system with S[m, k] = (alpha_k / B) 2B sinc(2 pi B (w_m - w_k)).
inline EigenBasis pswf_kernel_eigensystem(const Quadrature1D& q, double B, KernelMode mode = KernelMode::surrogate)
{
    detail::require_symmetric_rule(q, B);
    return rslepian_kernel_eigensystem(detail::nodes_1d(q), detail::weights_1d(q, B),
                                       Eigen::MatrixXd::Constant(1, 1, B), Region::interval(1.0), mode);
}

enum class ExtensionMode
{
    exp_extension,
    kernel_extension
};

/// phi_n at an arbitrary point, exact at the nodes.
inline complex_t extend_prolate(const EigenBasis& eb, std::size_t n, std::span<const double> x,
                                ExtensionMode mode = ExtensionMode::kernel_extension)
{
    if (n >= eb.size())
        throw input_error("extend_prolate: index out of range");
    if (x.size() != eb.dim())
        throw input_error("extend_prolate: point dimension mismatch");
    if (eb.mu[n] < mu_floor)
        throw numerical_error("extend_prolate: eigenvalue below the regularization floor");
    const std::size_t d = eb.dim();
    const auto dd = static_cast<Eigen::Index>(d);
    const Eigen::Map<const Eigen::VectorXd> xv(x.data(), dd);
    const Eigen::VectorXd Bx = eb.band * xv;
    complex_t sum(0.0);
    if (mode == ExtensionMode::exp_extension)
    {
        if (eb.lambda.empty())
            throw input_error("extend_prolate: exp extension needs an exp-system basis");
        for (std::size_t m = 0; m < eb.weights.size(); ++m)
        {
            double ph = 0.0;
            for (std::size_t c = 0; c < d; ++c)
                ph += eb.nodes[m][c] * Bx[static_cast<Eigen::Index>(c)];
            sum += eb.weights[m] * std::polar(1.0, 2.0 * pi * ph) * eb.vectors(static_cast<Eigen::Index>(m),
                                                                               static_cast<Eigen::Index>(n));
        }
        return sum / eb.lambda[n];
    }
    // Kernel extension with G(x - k_m), the kernel the basis was built with.
    for (std::size_t m = 0; m < eb.weights.size(); ++m)
    {
        complex_t g(0.0);
        Eigen::VectorXd diff(dd);
        for (std::size_t c = 0; c < d; ++c)
            diff[static_cast<Eigen::Index>(c)] = x[c] - eb.nodes[m][c];
        if (eb.mode == KernelMode::surrogate)
        {
            const Eigen::VectorXd Bd = eb.band * diff;
            for (std::size_t j = 0; j < eb.weights.size(); ++j)
            {
                double ph = 0.0;
                for (std::size_t c = 0; c < d; ++c)
                    ph += eb.nodes[j][c] * Bd[static_cast<Eigen::Index>(c)];
                g += eb.weights[j] * std::polar(1.0, 2.0 * pi * ph);
            }
        }
        else
        {
            const Eigen::VectorXd arg = 2.0 * pi * (eb.band * diff);
            g = region_kernel_exact(eb.region, std::span<const double>(arg.data(), d));
        }
        sum += eb.weights[m] * eb.det_band * g * eb.vectors(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(n));
    }
    return sum / eb.mu[n];
}

inline complex_t extend_prolate(const EigenBasis& eb, std::size_t n, double t,
                                ExtensionMode mode = ExtensionMode::kernel_extension)
{
    return extend_prolate(eb, n, std::span<const double>(&t, 1), mode);
}

/// Phi^H W Phi, diagonal for an orthogonal basis.
inline Eigen::MatrixXcd discrete_gram(const EigenBasis& eb)
{
    Eigen::VectorXd w(static_cast<Eigen::Index>(eb.weights.size()));
    for (std::size_t i = 0; i < eb.weights.size(); ++i)
        w[static_cast<Eigen::Index>(i)] = eb.weights[i];
    return eb.vectors.adjoint() * w.asDiagonal() * eb.vectors;
}

inline std::size_t count_above(const EigenBasis& eb, double alpha)
{
    return static_cast<std::size_t>(std::count_if(eb.mu.begin(), eb.mu.end(), [&](double m) { return m > alpha; }));
}

/// Distinct values of a complex spectrum up to a tolerance.
inline std::vector<complex_t> distinct_values(const std::vector<complex_t>& v, double tol)
{
    std::vector<complex_t> out;
    for (const auto& z : v)
        if (std::none_of(out.begin(), out.end(), [&](const complex_t& u) { return std::abs(u - z) <= tol; }))
            out.push_back(z);
    return out;
}

} // namespace rlimit

#endif // RLIMIT_PROLATE_HPP
