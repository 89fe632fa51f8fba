// rlimit: build quadratures and kernels, project sampled data, and run the
// verification suites. Exit codes: 0 success, 1 verification or numerical
// failure, 2 input or format error.

#include <CLI11.hpp>

#include <rlimit/cubature.hpp>
#include <rlimit/io.hpp>
#include <rlimit/moments.hpp>
#include <rlimit/projection.hpp>
#include <rlimit/prolate.hpp>
#include <rlimit/sincapprox.hpp>
#include <rlimit/verify.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <set>
#include <string>

namespace fs = std::filesystem;
using namespace rlimit;

namespace
{

struct Common
{
    std::string out = ".";
    int grid = 41;
    double tol = 0.0;
    unsigned seed = 1;
};

std::string out_path(const Common& c, const std::string& name)
{
    fs::create_directories(c.out);
    return (fs::path(c.out) / name).string();
}

void add_common(CLI::App* app, Common& c)
{
    app->add_option("--out", c.out, "Output directory")->capture_default_str();
    app->add_option("--grid", c.grid, "Grid points per axis")->capture_default_str()->check(CLI::Range(2, 100000));
    app->add_option("--tol", c.tol, "Relative slack / tolerance")->capture_default_str()->check(CLI::NonNegativeNumber);
    app->add_option("--seed", c.seed, "Seed for test-function generation")->capture_default_str();
}

SampledField node_cloud(const PointSet& nodes, const std::vector<double>& w, std::string label)
{
    std::vector<complex_t> v(w.begin(), w.end());
    return SampledField(nodes, std::move(v), std::move(label));
}

double max_of(const std::vector<double>& v)
{
    double m = 0.0;
    for (double x : v)
        m = std::max(m, std::abs(x));
    return m;
}

// ------------------------------------------------------------------ quad

struct QuadArgs
{
    std::string preset;
    std::string region;
    int M = 8;
    double band = 1.0;
    bool symmetric = false;
    double dp = 1.0, s = 1.0;
    double omega0 = 1.0, pmax = 1.0, kmax = 1.0;
    std::vector<int> orders;
    double half = 2.0;
};

int cmd_quad(const QuadArgs& a, const Common& c)
{
    if (a.preset.empty() == a.region.empty())
        throw input_error("quad: give exactly one of --preset or --region");
    if (!a.preset.empty())
    {
        std::string p = a.preset;
        std::replace(p.begin(), p.end(), '_', '-');
        json j;
        std::vector<double> res;
        if (p == "gauss-legendre" || p == "chebyshev-j0" || p == "uniform")
        {
            Quadrature1D q;
            if (p == "gauss-legendre")
            {
                q = gauss_legendre_01(a.M);
                q.residuals = verify_moments(q, preset_moments(MomentPreset::sinc_cos, 1.0, 2 * a.M));
            }
            else if (p == "chebyshev-j0")
            {
                q = chebyshev_rule_for_j0(a.M);
                q.residuals = verify_moments(q, preset_moments(MomentPreset::j0_cos, 1.0, 2 * a.M));
            }
            else
            {
                q = uniform_rule(a.band, a.M);
            }
            res = q.residuals;
            j = to_json(q);
            write_field_csv(out_path(c, "nodes.csv"), node_cloud(PointSet(1, q.nodes), q.weights, "weights"));
            std::printf("quad %s: %zu nodes, band %g\n", p.c_str(), q.size(), q.band);
        }
        else
        {
            const auto preset = preset_from_string(p);
            const auto h = preset_moments(preset, a.band, 2 * a.M);
            const auto r = solve_moment_problem(h, a.M, c.tol > 0.0 ? c.tol : 1e-12);
            res = r.residuals;
            j = to_json(r);
            PointSet pts(2);
            std::vector<complex_t> w;
            for (std::size_t m = 0; m < r.size(); ++m)
            {
                const double xy[2] = {r.nodes[m].real(), r.nodes[m].imag()};
                pts.push_back(xy);
                w.push_back(r.weights[m]);
            }
            write_field_csv(out_path(c, "nodes.csv"), SampledField(pts, w, "weights"));
            std::printf("quad %s: %zu nodes, band %g%s\n", p.c_str(), r.size(), a.band,
                        r.notice.empty() ? "" : (" (" + r.notice + ")").c_str());
        }
        write_json(out_path(c, "quad.json"), j);
        std::printf("max moment residual %.3e\n", max_of(res));
        return 0;
    }

    auto ord = [&](std::size_t i, int def) { return i < a.orders.size() ? a.orders[i] : def; };
    QuadratureND q;
    const std::string& r = a.region;
    if (r == "triangle")
    {
        q = triangle_quadrature({a.dp, a.s, {}}, ord(0, 12), ord(1, 12), TargetBox{{a.half, a.half}, {c.grid, c.grid}});
    }
    else if (r == "equilateral")
    {
        const TargetBox box{{a.half, a.half}, {c.grid, c.grid}};
        if (a.symmetric)
            q = equilateral_symmetric_quadrature(ord(0, 12), ord(1, 12), box);
        else
            q = triangle_quadrature(equilateral_centered_spec(), ord(0, 12), ord(1, 12), box);
    }
    else if (r == "tetra")
    {
        const int g = std::min(c.grid, 21);
        const TargetBox box{{a.half, a.half, a.half}, {g, g, g}};
        if (a.symmetric)
            q = tetra_symmetric_quadrature(ord(0, 6), ord(1, 6), ord(2, 6), box);
        else
            q = tetra_quadrature(TetraSpec::regular(), ord(0, 8), ord(1, 8), ord(2, 8), box);
    }
    else if (r == "cone")
    {
        q = cone_quadrature({a.omega0, a.pmax, 2}, ord(0, 8), ord(1, 8), ord(2, 8));
    }
    else if (r == "ball")
    {
        q = ball_quadrature(a.kmax, ord(0, 8), ord(1, 8), ord(2, 8));
    }
    else
    {
        throw input_error("quad: unknown region '" + r + "' (triangle, equilateral, tetra, cone, ball)");
    }
    write_json(out_path(c, "quad.json"), to_json(q));
    write_field_csv(out_path(c, "nodes.csv"), node_cloud(q.nodes, q.weights, "weights"));
    std::printf("quad %s: %zu nodes, weight sum %.15g, region measure %.15g\n", r.c_str(), q.size(), q.weight_sum(),
                q.region.measure());
    if (q.profile.measured())
        std::printf("max kernel error on target box %.3e\n", q.profile.max_error);
    if (q.symmetry_group)
        std::printf("symmetry invariance error %.3e\n", symmetry_invariance_error(q));
    return 0;
}

// ----------------------------------------------------------- approx-sinc

struct SincArgs
{
    double B0 = 20.0;
    int M = 8;
    std::string method = "cosine";
    double range = 2.0;
};

int cmd_approx_sinc(const SincArgs& a, const Common& c)
{
    const auto xs = linspace(-a.range, a.range, static_cast<std::size_t>(c.grid));
    std::ofstream os(out_path(c, "approx_sinc.csv"));
    if (!os)
        throw input_error("cannot write approx_sinc.csv");
    os << "x,approx,exact,error\n";
    double maxerr = 0.0;
    json side;
    auto row = [&](double x, double approx) {
        const double exact = sinc(a.B0 * x);
        maxerr = std::max(maxerr, std::abs(exact - approx));
        os << detail::format_double(x) << ',' << detail::format_double(approx) << ',' << detail::format_double(exact)
           << ',' << detail::format_double(exact - approx) << '\n';
    };
    if (a.method == "cosine")
    {
        const auto s = build_sinc_cosine_approx(a.B0, a.M);
        for (double x : xs)
            row(x, eval_cosine_sum(s, x));
        side = {{"method", "cosine"}, {"level", s.level}, {"reduced_band", s.band()}, {"base", to_json(s.base)}};
    }
    else if (a.method == "chirplet")
    {
        const auto s = build_chirplet_approx(a.B0, a.M);
        for (double x : xs)
            row(x, eval_chirplet_sum(s, x).real());
        side = {{"method", "chirplet"}, {"level", s.level}, {"reduced_band", s.band}, {"residuals", s.residuals}};
    }
    else
    {
        throw input_error("approx-sinc: --method must be cosine or chirplet");
    }
    side["B0"] = a.B0;
    side["M"] = a.M;
    side["max_error"] = maxerr;
    write_json(out_path(c, "approx_sinc.json"), side);
    std::printf("approx-sinc %s B0=%g M=%d: max error %.3e on [-%g, %g]\n", a.method.c_str(), a.B0, a.M, maxerr,
                a.range, a.range);
    return 0;
}

// ------------------------------------------------------------------ pswf

struct PswfArgs
{
    double B = 5.0;
    int M = 0;
    std::string rule = "gauss-legendre";
    std::string system = "kernel";
    int modes = 0;
};

int cmd_pswf(const PswfArgs& a, const Common& c)
{
    const int M = a.M > 0 ? a.M : static_cast<int>(std::ceil(2.0 * a.B)) + 6;
    Quadrature1D q;
    if (a.rule == "gauss-legendre")
        q = gauss_legendre_sinc_rule(a.B, M);
    else if (a.rule == "uniform")
        q = uniform_rule(a.B, M);
    else
        throw input_error("pswf: --rule must be gauss-legendre or uniform");
    EigenBasis eb;
    if (a.system == "kernel")
        eb = pswf_kernel_eigensystem(q, a.B);
    else if (a.system == "exp")
        eb = pswf_exp_eigensystem(q, a.B);
    else
        throw input_error("pswf: --system must be kernel or exp");
    write_json(out_path(c, "pswf_basis.json"), to_json(eb));
    const auto xs = linspace(-1.0, 1.0, static_cast<std::size_t>(c.grid));
    const auto mode = a.system == "kernel" ? ExtensionMode::kernel_extension : ExtensionMode::exp_extension;
    for (int n = 0; n < std::min<int>(a.modes, static_cast<int>(eb.size())); ++n)
    {
        if (eb.mu[static_cast<std::size_t>(n)] < mu_floor)
            break;
        std::vector<complex_t> v;
        for (double x : xs)
            v.push_back(extend_prolate(eb, static_cast<std::size_t>(n), x, mode));
        write_field_csv(out_path(c, "pswf_mode_" + std::to_string(n) + ".csv"),
                        SampledField(PointSet(1, xs), std::move(v), "phi"));
    }
    std::printf("pswf %s system, %s rule, B=%g, %zu nodes; #{mu > 0.5} = %zu\n", a.system.c_str(), a.rule.c_str(),
                a.B, q.size(), count_above(eb, 0.5));
    for (std::size_t n = 0; n < std::min<std::size_t>(eb.size(), 8); ++n)
        std::printf("  mu[%zu] = %.12f\n", n, eb.mu[n]);
    return 0;
}

// ----------------------------------------------------------- kernel-eval

struct KernelArgs
{
    std::string region = "triangle";
    std::string quad;
    double band = 1.0;
    double dp = 75.0, s = 1.0 / std::sqrt(3.0);
    double omega0 = 50.0, pmax = 1.0, kmax = 1.0;
    double half = 0.05;
};

int cmd_kernel_eval(const KernelArgs& a, const Common& c)
{
    if (!a.quad.empty())
    {
        // Surrogate kernel from a rule; also writes a kernel file for `project`.
        const auto q = quadrature_nd_from_json(read_json(a.quad));
        const std::size_t d = q.dim();
        const int g = d == 2 ? c.grid : std::min(c.grid, 21);
        TargetBox box{std::vector<double>(d, a.half), std::vector<int>(d, g)};
        const auto K = make_exp_sum_kernel(q, a.band * Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(d),
                                                                                 static_cast<Eigen::Index>(d)),
                                           box);
        const auto pts = box.grid();
        std::vector<complex_t> ex(pts.size()), sur(pts.size());
        parallel_for(pts.size(), [&](std::size_t i) {
            ex[i] = K.exact(pts[i]);
            sur[i] = K.eval(pts[i]);
        });
        write_field_csv(out_path(c, "kernel_exact.csv"), SampledField(pts, ex, "exact"));
        write_field_csv(out_path(c, "kernel_surrogate.csv"), SampledField(pts, sur, "surrogate"));
        write_json(out_path(c, "kernel.json"), to_json(K));
        std::printf("kernel-eval: %zu nodes, max |K - K~| on [-%g, %g]^%zu = %.3e\n", q.size(), a.half, a.half, d,
                    K.error_profile);
        return 0;
    }
    Region r;
    if (a.region == "triangle")
        r = Region::make_triangle({a.dp, a.s, {}});
    else if (a.region == "equilateral")
        r = Region::make_triangle(equilateral_centered_spec());
    else if (a.region == "tetra")
        r = Region::make_tetrahedron(TetraSpec::regular());
    else if (a.region == "cone")
        r = Region::make_cone({a.omega0, a.pmax, 2});
    else if (a.region == "ball")
        r = Region::ball(a.kmax);
    else if (a.region == "interval")
        r = Region::interval(a.band);
    else
        throw input_error("kernel-eval: unknown region '" + a.region + "'");
    const std::size_t d = r.dim();
    const int g = d <= 2 ? c.grid : std::min(c.grid, 21);
    const auto pts = TargetBox{std::vector<double>(d, a.half), std::vector<int>(d, g)}.grid();
    std::vector<complex_t> v(pts.size());
    parallel_for(pts.size(), [&](std::size_t i) { v[i] = region_kernel_2pi(r, pts[i]); });
    write_field_csv(out_path(c, "kernel_exact.csv"), SampledField(pts, std::move(v), "exact"));
    write_json(out_path(c, "kernel_exact.json"),
               {{"region", to_json(r)}, {"half", a.half}, {"grid", g}, {"convention", "int_R exp(i 2 pi k.x) dk"}});
    std::printf("kernel-eval %s: %zu points\n", a.region.c_str(), pts.size());
    return 0;
}

// --------------------------------------------------------------- project

struct ProjectArgs
{
    std::string input;
    std::string kernel;
    std::string kind = "grid";
    double band = 1.0;
};

// Recovers the tensor grid behind a field written by make_grid.
bool infer_grid(const PointSet& p, std::vector<double>& lo, std::vector<double>& hi, std::vector<int>& counts)
{
    const std::size_t d = p.dim();
    lo.assign(d, 0.0);
    hi.assign(d, 0.0);
    counts.assign(d, 0);
    std::size_t total = 1;
    for (std::size_t j = 0; j < d; ++j)
    {
        std::set<double> v;
        for (std::size_t i = 0; i < p.size(); ++i)
            v.insert(p[i][j]);
        lo[j] = *v.begin();
        hi[j] = *v.rbegin();
        counts[j] = static_cast<int>(v.size());
        total *= v.size();
    }
    if (total != p.size())
        return false;
    const auto g = make_grid(lo, hi, counts);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (std::abs(g[i][j] - p[i][j]) > 1e-9 * std::max(1.0, hi[j] - lo[j]))
                return false;
    return true;
}

ExpSumKernel load_kernel(const json& j, double band, const SupportBox& X, int grid)
{
    if (j.contains("rule"))
        return exp_sum_kernel_from_json(j);
    const std::size_t d = X.lo.size();
    QuadratureND q;
    if (j.contains("region"))
        q = quadrature_nd_from_json(j);
    else
    {
        // Half rules are unfolded at the band given on the command line.
        auto q1 = quadrature1d_from_json(j);
        if (q1.symmetric)
            band = q1.band;
        else
            q1 = symmetric_sinc_rule(q1, band);
        q = to_quadrature_nd(q1, band);
    }
    if (q.dim() != d)
        throw input_error("project: kernel dimension does not match the input field");
    // Verify the rule on X + X itself.
    TargetBox box{std::vector<double>(d), std::vector<int>(d, d == 1 ? 4001 : std::max(grid, 2 * grid - 1))};
    for (std::size_t k = 0; k < d; ++k)
        box.half[k] = 2.0 * std::max(std::abs(X.lo[k]), std::abs(X.hi[k]));
    return make_exp_sum_kernel(std::move(q),
                               band * Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d)),
                               box);
}

int cmd_project(const ProjectArgs& a, const Common& c)
{
    const auto f = read_field_csv(a.input);
    const std::size_t d = f.points.dim();
    SupportBox X{std::vector<double>(d, 0.0), std::vector<double>(d, 0.0)};
    std::vector<int> counts;
    const bool is_grid = infer_grid(f.points, X.lo, X.hi, counts);
    const auto kj = read_json(a.kernel);
    ProjectionResult r;
    if (a.kind == "grid")
    {
        if (!is_grid || f.size() < 2)
            throw input_error("project: --kind grid needs samples on a full tensor grid");
        const auto K = load_kernel(kj, a.band, X, c.grid);
        r = rlimited_discrete_fourier(f, X, counts, K, f.points);
    }
    else if (a.kind == "deltas")
    {
        // f = sum_i f_i delta(x - x_i): fhat is a finite sum and the bound is
        // sum |f_i| max |eps_K| over X + X.
        if (!is_grid)
            for (std::size_t j = 0; j < d; ++j)
            {
                X.lo[j] = f.points[0][j];
                X.hi[j] = f.points[0][j];
                for (std::size_t i = 0; i < f.size(); ++i)
                {
                    X.lo[j] = std::min(X.lo[j], f.points[i][j]);
                    X.hi[j] = std::max(X.hi[j], f.points[i][j]);
                }
            }
        const auto K = load_kernel(kj, a.band, X, c.grid);
        double l1 = 0.0;
        for (const auto& v : f.values)
            l1 += std::abs(v);
        auto fhat = [&](std::span<const double> nu) {
            complex_t s(0.0);
            for (std::size_t i = 0; i < f.size(); ++i)
            {
                double ph = 0.0;
                for (std::size_t j = 0; j < d; ++j)
                    ph += nu[j] * f.points[i][j];
                s += f.values[i] * std::polar(1.0, -2.0 * pi * ph);
            }
            return s;
        };
        r = rlimited_discrete_fourier(fhat, K, X, 1.0, f.points);
        r.error_bound = l1 * K.error_profile;
        r.provenance += "; delta-train input";
    }
    else
    {
        throw input_error("project: --kind must be grid or deltas");
    }
    r.field.label = "f_B";
    write_field_csv(out_path(c, "projection.csv"), r.field);
    write_json(out_path(c, "projection.json"), sidecar_json(r));
    std::printf("project: %zu points, error bound %.3e\n", r.field.size(), r.error_bound);
    return 0;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const std::vector<std::string>& suites_in, const Common& c)
{
    std::vector<std::string> suites;
    for (const auto& s : suites_in)
    {
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty())
                suites.push_back(item);
    }
    VerifyOptions o;
    o.grid = c.grid;
    o.slack = c.tol;
    o.seed = c.seed;
    const auto rep = run_verification(suites, o);
    json checks = json::array();
    std::vector<std::string> failing;
    for (const auto& k : rep.checks)
    {
        std::printf("%s  [%d] %-16s %-72s measured %.3e  bound %.3e\n", k.pass ? "PASS" : "FAIL", k.criterion,
                    k.suite.c_str(), k.name.c_str(), k.measured, k.bound);
        checks.push_back({{"suite", k.suite},
                          {"criterion", k.criterion},
                          {"name", k.name},
                          {"bound_claimed", k.bound},
                          {"value_measured", k.measured},
                          {"slack", k.slack},
                          {"pass", k.pass},
                          {"note", k.note}});
        if (!k.pass)
            failing.push_back(k.suite + ": " + k.name);
    }
    write_json(out_path(c, "verify_report.json"),
               {{"checks", checks}, {"runtime_s", rep.runtime_s}, {"all_pass", rep.all_pass()}, {"seed", c.seed}});
    std::printf("%zu checks, %zu failed, %.1f s\n", rep.checks.size(), failing.size(), rep.runtime_s);
    for (const auto& f : failing)
        std::fprintf(stderr, "failed: %s\n", f.c_str());
    return failing.empty() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Quadratures, prolate bases and projections for R-limited functions"};
    app.require_subcommand(1);

    Common common;
    QuadArgs qa;
    auto* quad = app.add_subcommand("quad", "Build a 1D moment rule or an N-dimensional region quadrature");
    add_common(quad, common);
    quad->add_option("--preset", qa.preset,
                     "gauss-legendre, chebyshev-j0, uniform, sinc-cos, j0-cos, gauss-cos, sinc-gauss, j0-sinc, j1-cosinc");
    quad->add_option("--region", qa.region, "triangle, equilateral, tetra, cone, ball");
    quad->add_option("--M", qa.M, "Number of terms")->capture_default_str()->check(CLI::PositiveNumber);
    quad->add_option("--band", qa.band, "Band B")->capture_default_str()->check(CLI::PositiveNumber);
    quad->add_flag("--symmetric", qa.symmetric, "Symmetric construction (equilateral, tetra)");
    quad->add_option("--dp", qa.dp, "Triangle height")->capture_default_str();
    quad->add_option("--s", qa.s, "Triangle slope")->capture_default_str();
    quad->add_option("--omega0", qa.omega0, "Cone temporal band")->capture_default_str();
    quad->add_option("--pmax", qa.pmax, "Cone slowness")->capture_default_str();
    quad->add_option("--kmax", qa.kmax, "Ball radius")->capture_default_str();
    quad->add_option("--orders", qa.orders, "Per-axis rule orders");
    quad->add_option("--half", qa.half, "Half width of the target box for the error profile")->capture_default_str();

    SincArgs sa;
    auto* asinc = app.add_subcommand("approx-sinc", "Approximate sinc(B0 x) by scaled cosines or chirplets");
    add_common(asinc, common);
    asinc->add_option("--B0", sa.B0, "Target band")->capture_default_str()->check(CLI::PositiveNumber);
    asinc->add_option("--M", sa.M, "Number of terms")->capture_default_str()->check(CLI::PositiveNumber);
    asinc->add_option("--method", sa.method, "cosine or chirplet")->capture_default_str();
    asinc->add_option("--range", sa.range, "Evaluate on [-range, range]")->capture_default_str();

    PswfArgs pa;
    auto* pswf = app.add_subcommand("pswf", "Approximate prolate spheroidal wave functions");
    add_common(pswf, common);
    pswf->add_option("--B", pa.B, "Band")->capture_default_str()->check(CLI::PositiveNumber);
    pswf->add_option("--M", pa.M, "Rule order (default ceil(2B)+6)");
    pswf->add_option("--rule", pa.rule, "gauss-legendre or uniform")->capture_default_str();
    pswf->add_option("--system", pa.system, "kernel or exp")->capture_default_str();
    pswf->add_option("--modes", pa.modes, "Write the first n extended modes as CSV")->capture_default_str();

    KernelArgs ka;
    auto* kev = app.add_subcommand("kernel-eval", "Evaluate a region kernel, or a rule's surrogate, on a grid");
    add_common(kev, common);
    kev->add_option("--region", ka.region, "triangle, equilateral, tetra, cone, ball, interval")->capture_default_str();
    kev->add_option("--quad", ka.quad, "Quadrature JSON; evaluates the surrogate and writes kernel.json");
    kev->add_option("--band", ka.band, "Scalar band B (B = b I)")->capture_default_str();
    kev->add_option("--dp", ka.dp, "Triangle height")->capture_default_str();
    kev->add_option("--s", ka.s, "Triangle slope")->capture_default_str();
    kev->add_option("--omega0", ka.omega0, "Cone temporal band")->capture_default_str();
    kev->add_option("--pmax", ka.pmax, "Cone slowness")->capture_default_str();
    kev->add_option("--kmax", ka.kmax, "Ball radius")->capture_default_str();
    kev->add_option("--half", ka.half, "Half width of the evaluation box")->capture_default_str();

    ProjectArgs pra;
    auto* proj = app.add_subcommand("project", "Project sampled data with a discrete Fourier kernel");
    add_common(proj, common);
    proj->add_option("--input", pra.input, "SampledField CSV")->required();
    proj->add_option("--kernel", pra.kernel, "Kernel or quadrature JSON")->required();
    proj->add_option("--kind", pra.kind, "grid (samples of f) or deltas (point masses)")->capture_default_str();
    proj->add_option("--band", pra.band, "Scalar band for N-dimensional quadrature files")->capture_default_str();

    std::vector<std::string> suites;
    auto* ver = app.add_subcommand("verify", "Run the verification suites");
    add_common(ver, common);
    ver->add_option("--suite", suites, "Suite names (comma separated or repeated); default all");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try
    {
        if (*quad)
            return cmd_quad(qa, common);
        if (*asinc)
            return cmd_approx_sinc(sa, common);
        if (*pswf)
            return cmd_pswf(pa, common);
        if (*kev)
            return cmd_kernel_eval(ka, common);
        if (*proj)
            return cmd_project(pra, common);
        if (*ver)
            return cmd_verify(suites, common);
    }
    catch (const input_error& e)
    {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return 2;
    }
    catch (const numerical_error& e)
    {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return 1;
    }
    catch (const fs::filesystem_error& e)
    {
        std::fprintf(stderr, "input error: %s\n", e.what());
        return 2;
    }
    catch (const std::exception& e)
    {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
