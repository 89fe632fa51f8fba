#ifndef RLIMIT_IO_HPP
#define RLIMIT_IO_HPP

// JSON and CSV interchange. CSV values are written with 17 significant digits
// so files round-trip and identical runs produce identical bytes.

#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cubature.hpp"
#include "moments.hpp"
#include "projection.hpp"
#include "prolate.hpp"

namespace rlimit
{

using json = nlohmann::json;

namespace detail
{
inline json complex_json(complex_t z) { return json::array({z.real(), z.imag()}); }

inline complex_t complex_from(const json& j)
{
    if (j.is_number())
        return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2)
        return {j[0].get<double>(), j[1].get<double>()};
    throw input_error("expected a number or a [re, im] pair");
}

inline json points_json(const PointSet& p)
{
    json a = json::array();
    for (std::size_t i = 0; i < p.size(); ++i)
        a.push_back(std::vector<double>(p[i].begin(), p[i].end()));
    return a;
}

inline PointSet points_from(const json& a)
{
    if (!a.is_array() || a.empty())
        throw input_error("expected a non-empty array of points");
    PointSet p(a.front().size());
    for (const auto& row : a)
        p.push_back(row.get<std::vector<double>>());
    return p;
}

inline json matrix_json(const Eigen::MatrixXd& m)
{
    json a = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i)
    {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            row.push_back(m(i, j));
        a.push_back(row);
    }
    return a;
}

inline Eigen::MatrixXd matrix_from(const json& a)
{
    const auto r = static_cast<Eigen::Index>(a.size());
    if (r == 0)
        throw input_error("expected a non-empty matrix");
    const auto c = static_cast<Eigen::Index>(a[0].size());
    Eigen::MatrixXd m(r, c);
    for (Eigen::Index i = 0; i < r; ++i)
    {
        if (static_cast<Eigen::Index>(a[static_cast<std::size_t>(i)].size()) != c)
            throw input_error("ragged matrix");
        for (Eigen::Index j = 0; j < c; ++j)
            m(i, j) = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].get<double>();
    }
    return m;
}

inline std::string format_double(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}
} // namespace detail

// ---------------------------------------------------------------- quadrature

inline json to_json(const Quadrature1D& q)
{
    return {{"band", q.band},
            {"symmetric", q.symmetric},
            {"weights", q.weights},
            {"nodes", q.nodes},
            {"provenance", {{"preset", q.preset}, {"M", q.M}, {"residuals", q.residuals}}}};
}

inline json to_json(const MomentRule& r)
{
    json w = json::array(), n = json::array();
    for (std::size_t m = 0; m < r.size(); ++m)
    {
        w.push_back(detail::complex_json(r.weights[m]));
        n.push_back(detail::complex_json(r.nodes[m]));
    }
    return {{"band", r.band},
            {"symmetric", false},
            {"weights", w},
            {"nodes", n},
            {"provenance",
             {{"preset", r.preset ? to_string(*r.preset) : std::string("custom")},
              {"M", r.requested_M},
              {"residuals", r.residuals},
              {"notice", r.notice}}}};
}

inline Quadrature1D quadrature1d_from_json(const json& j)
{
    try
    {
        Quadrature1D q;
        q.band = j.at("band").get<double>();
        q.symmetric = j.at("symmetric").get<bool>();
        for (const auto& w : j.at("weights"))
        {
            const complex_t z = detail::complex_from(w);
            if (z.imag() != 0.0)
                throw input_error("quadrature JSON: complex weights are not supported here");
            q.weights.push_back(z.real());
        }
        for (const auto& n : j.at("nodes"))
        {
            const complex_t z = detail::complex_from(n);
            if (z.imag() != 0.0)
                throw input_error("quadrature JSON: complex nodes are not supported here");
            q.nodes.push_back(z.real());
        }
        if (q.nodes.size() != q.weights.size())
            throw input_error("quadrature JSON: |weights| != |nodes|");
        if (j.contains("provenance"))
        {
            const auto& p = j["provenance"];
            q.preset = p.value("preset", std::string());
            q.M = p.value("M", 0);
            if (p.contains("residuals"))
                q.residuals = p["residuals"].get<std::vector<double>>();
        }
        return q;
    }
    catch (const json::exception& e)
    {
        throw input_error(std::string("quadrature JSON: ") + e.what());
    }
}

inline json to_json(const Region& r)
{
    json j = {{"kind", to_string(r.kind)}};
    switch (r.kind)
    {
    case RegionKind::interval: j["half_width"] = r.half_width; break;
    case RegionKind::triangle:
        j["dp"] = r.triangle.dp;
        j["s"] = r.triangle.s;
        if (r.triangle.phase_shift)
            j["phase_shift"] = *r.triangle.phase_shift;
        break;
    case RegionKind::tetrahedron:
        j["h"] = r.tetra.h;
        j["dp"] = r.tetra.dp;
        j["s"] = r.tetra.s;
        break;
    case RegionKind::cone:
        j["omega0"] = r.cone.omega0;
        j["pmax"] = r.cone.pmax;
        j["n"] = r.cone.n;
        break;
    case RegionKind::ball: j["kmax"] = r.kmax; break;
    case RegionKind::transformed:
        j["A"] = detail::matrix_json(r.A);
        j["offset"] = std::vector<double>(r.offset.data(), r.offset.data() + r.offset.size());
        j["base"] = to_json(r.parts.front());
        break;
    case RegionKind::union_of:
        j["disjoint_asserted"] = r.disjoint_asserted;
        j["parts"] = json::array();
        for (const auto& p : r.parts)
            j["parts"].push_back(to_json(p));
        break;
    }
    return j;
}

inline Region region_from_json(const json& j)
{
    const std::string k = j.at("kind").get<std::string>();
    if (k == "interval")
        return Region::interval(j.value("half_width", 1.0));
    if (k == "triangle")
    {
        TriangleSpec t{j.at("dp").get<double>(), j.at("s").get<double>(), {}};
        if (j.contains("phase_shift"))
            t.phase_shift = j["phase_shift"].get<double>();
        return Region::make_triangle(t);
    }
    if (k == "tetrahedron")
        return Region::make_tetrahedron({j.at("h").get<double>(), j.at("dp").get<double>(), j.at("s").get<double>()});
    if (k == "cone")
        return Region::make_cone({j.at("omega0").get<double>(), j.at("pmax").get<double>(), j.value("n", 2)});
    if (k == "ball")
        return Region::ball(j.at("kmax").get<double>());
    if (k == "transformed")
    {
        const auto off = j.value("offset", std::vector<double>{});
        return Region::transformed(region_from_json(j.at("base")), detail::matrix_from(j.at("A")),
                                   Eigen::Map<const Eigen::VectorXd>(off.data(), static_cast<Eigen::Index>(off.size())));
    }
    if (k == "union")
    {
        std::vector<Region> parts;
        for (const auto& p : j.at("parts"))
            parts.push_back(region_from_json(p));
        return Region::union_of(std::move(parts), j.value("disjoint_asserted", true));
    }
    throw input_error("unknown region kind '" + k + "'");
}

inline json to_json(const TargetBox& b) { return {{"half", b.half}, {"counts", b.counts}}; }

inline json to_json(const QuadratureND& q)
{
    json j = {{"dim", q.dim()},
              {"weights", q.weights},
              {"nodes", detail::points_json(q.nodes)},
              {"region", to_json(q.region)},
              {"provenance", q.provenance}};
    if (q.symmetry_group)
    {
        j["symmetry_group"] = json::array();
        for (const auto& g : *q.symmetry_group)
            j["symmetry_group"].push_back(detail::matrix_json(g));
    }
    if (q.profile.measured())
        j["error_profile"] = {{"box", to_json(*q.profile.box)}, {"max_error", q.profile.max_error}};
    return j;
}

inline QuadratureND quadrature_nd_from_json(const json& j)
{
    try
    {
        QuadratureND q;
        q.weights = j.at("weights").get<std::vector<double>>();
        q.nodes = detail::points_from(j.at("nodes"));
        if (q.nodes.size() != q.weights.size())
            throw input_error("quadrature JSON: |weights| != |nodes|");
        q.region = region_from_json(j.at("region"));
        if (q.region.dim() != q.dim())
            throw input_error("quadrature JSON: node dimension does not match the region");
        q.provenance = j.value("provenance", std::string());
        if (j.contains("symmetry_group"))
        {
            q.symmetry_group.emplace();
            for (const auto& g : j["symmetry_group"])
                q.symmetry_group->push_back(detail::matrix_from(g));
        }
        if (j.contains("error_profile"))
        {
            const auto& e = j["error_profile"];
            q.profile.box = TargetBox{e.at("box").at("half").get<std::vector<double>>(),
                                      e.at("box").at("counts").get<std::vector<int>>()};
            q.profile.max_error = e.at("max_error").get<double>();
        }
        return q;
    }
    catch (const json::exception& e)
    {
        throw input_error(std::string("quadrature JSON: ") + e.what());
    }
}

/// Kernel file: an N-dimensional rule plus its band matrix.
inline json to_json(const ExpSumKernel& k)
{
    json j = {{"rule", to_json(k.rule)}, {"band", detail::matrix_json(k.band)}};
    if (k.verified)
        j["verified"] = {{"box", to_json(*k.verified)}, {"max_error", k.error_profile}};
    return j;
}

inline ExpSumKernel exp_sum_kernel_from_json(const json& j)
{
    try
    {
        auto q = quadrature_nd_from_json(j.at("rule"));
        const auto B = detail::matrix_from(j.at("band"));
        if (j.contains("verified"))
        {
            ExpSumKernel k = make_exp_sum_kernel(std::move(q), B);
            const auto& v = j["verified"];
            k.verified = TargetBox{v.at("box").at("half").get<std::vector<double>>(),
                                   v.at("box").at("counts").get<std::vector<int>>()};
            k.error_profile = v.at("max_error").get<double>();
            return k;
        }
        return make_exp_sum_kernel(std::move(q), B);
    }
    catch (const json::exception& e)
    {
        throw input_error(std::string("kernel JSON: ") + e.what());
    }
}

// --------------------------------------------------------------------- bases

inline json to_json(const EigenBasis& eb)
{
    json lam = json::array(), vec = json::array();
    for (const auto& l : eb.lambda)
        lam.push_back(detail::complex_json(l));
    for (Eigen::Index i = 0; i < eb.vectors.rows(); ++i)
    {
        json row = json::array();
        for (Eigen::Index c = 0; c < eb.vectors.cols(); ++c)
            row.push_back(detail::complex_json(eb.vectors(i, c)));
        vec.push_back(row);
    }
    return {{"eigenvalues", eb.mu},
            {"lambda", lam},
            {"nodes", detail::points_json(eb.nodes)},
            {"weights", eb.weights},
            {"eigenvectors", vec},
            {"band", detail::matrix_json(eb.band)},
            {"provenance",
             {{"system", to_string(eb.kind)},
              {"kernel", to_string(eb.mode)},
              {"region", to_json(eb.region)},
              {"reflection_symmetric", eb.reflection_symmetric},
              {"mu_floor", mu_floor}}}};
}

// -------------------------------------------------------------------- fields

/// First row "dim,n_points", then one "x1,...,xd,re,im" row per point.
inline void write_field_csv(std::ostream& os, const SampledField& f)
{
    const std::size_t d = f.points.dim();
    os << d << ',' << f.size() << '\n';
    for (std::size_t i = 0; i < f.size(); ++i)
    {
        for (std::size_t c = 0; c < d; ++c)
            os << detail::format_double(f.points[i][c]) << ',';
        os << detail::format_double(f.values[i].real()) << ',' << detail::format_double(f.values[i].imag()) << '\n';
    }
}

inline void write_field_csv(const std::string& path, const SampledField& f)
{
    std::ofstream os(path);
    if (!os)
        throw input_error("cannot write '" + path + "'");
    write_field_csv(os, f);
}

inline SampledField read_field_csv(std::istream& is)
{
    std::string line;
    if (!std::getline(is, line))
        throw input_error("field CSV: missing header");
    std::size_t d = 0, n = 0;
    {
        std::istringstream hs(line);
        char comma = 0;
        if (!(hs >> d >> comma >> n) || comma != ',' || d == 0)
            throw input_error("field CSV: header must be 'dim,n_points'");
    }
    PointSet p(d);
    std::vector<complex_t> v;
    std::vector<double> row;
    std::size_t lineno = 1;
    while (std::getline(is, line))
    {
        ++lineno;
        if (line.empty() || line == "\r")
            continue;
        row.clear();
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ','))
        {
            try
            {
                if (!cell.empty() && cell.back() == '\r')
                    cell.pop_back();
                std::size_t used = 0;
                row.push_back(std::stod(cell, &used));
                if (used != cell.size())
                    throw std::invalid_argument(cell);
            }
            catch (const std::exception&)
            {
                throw input_error("field CSV: bad number on line " + std::to_string(lineno));
            }
        }
        if (row.size() != d + 2)
            throw input_error("field CSV: line " + std::to_string(lineno) + " has " + std::to_string(row.size()) +
                              " columns, expected " + std::to_string(d + 2));
        p.push_back(std::span<const double>(row.data(), d));
        v.emplace_back(row[d], row[d + 1]);
    }
    if (v.size() != n)
        throw input_error("field CSV: header promises " + std::to_string(n) + " points, found " +
                          std::to_string(v.size()));
    return SampledField(std::move(p), std::move(v));
}

inline SampledField read_field_csv(const std::string& path)
{
    std::ifstream is(path);
    if (!is)
        throw input_error("cannot read '" + path + "'");
    return read_field_csv(is);
}

inline json sidecar_json(const ProjectionResult& r)
{
    return {{"error_bound", r.error_bound}, {"provenance", r.provenance}, {"n_points", r.field.size()}};
}

inline void write_json(const std::string& path, const json& j)
{
    std::ofstream os(path);
    if (!os)
        throw input_error("cannot write '" + path + "'");
    os << j.dump(2) << '\n';
}

inline json read_json(const std::string& path)
{
    std::ifstream is(path);
    if (!is)
        throw input_error("cannot read '" + path + "'");
    try
    {
        return json::parse(is);
    }
    catch (const json::exception& e)
    {
        throw input_error("'" + path + "': " + e.what());
    }
}

} // namespace rlimit

#endif // RLIMIT_IO_HPP
