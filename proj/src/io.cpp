#include "etau/io.hpp"

#include <cmath>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace etau {

namespace {

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json complex_pair(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from(const json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

std::vector<double> params_of(const json& j, std::size_t n, const std::string& family) {
    auto p = j.value("params", std::vector<double>{});
    if (p.size() != n) throw ParameterError(family + " expects " + std::to_string(n) + " params");
    return p;
}

}  // namespace

json to_json(const AmbientPoint& p) {
    return {{"model", to_string(p.model())}, {"x", p.base.x}, {"y", p.base.y}, {"t", p.t}};
}

json to_json(const AmbientIsometry& iso) {
    json j{{"family", iso.family}, {"params", iso.params}, {"model", to_string(iso.model())}};
    // Raw description, enough to rebuild composites and inverses.
    j["mobius"] = {complex_pair(iso.mobius.a), complex_pair(iso.mobius.b), complex_pair(iso.mobius.c),
                   complex_pair(iso.mobius.d)};
    j["orientation"] = iso.orientation == Orientation::Direct ? "direct" : "reversing";
    j["shift"] = iso.shift;
    j["branch_offset"] = iso.branch_offset;
    return j;
}

AmbientIsometry isometry_from_json(const json& j, const SpaceParams& sp) {
    const std::string fam = j.value("family", std::string("generic"));
    const Model m = model_from_string(j.value("model", std::string("HalfSpace")));
    if (fam == "identity") return identity_isometry(m);
    if (fam == "vertical_shift") return vertical_shift(m, params_of(j, 1, fam)[0]);
    if (fam == "scale") return scale_isometry(params_of(j, 1, fam)[0]);
    if (fam == "Ls") return translation_isometry_Ls(params_of(j, 1, fam)[0]);
    if (fam == "Fz0") {
        const auto p = params_of(j, 2, fam);
        return disc_point_isometry_Fz0({Model::Cylinder, p[0], p[1]}, sp);
    }
    if (fam == "G") {
        const auto p = params_of(j, 3, fam);
        return halfplane_graph_isometry_G(p[0], p[1], p[2]);
    }
    if (fam == "rotation") return disc_rotation(params_of(j, 1, fam)[0], sp);
    if (fam == "disc_translation") {
        const auto p = params_of(j, 2, fam);
        return disc_translation({Model::Cylinder, p[0], p[1]});
    }
    if (!j.contains("mobius")) throw ParameterError("unknown isometry family: " + fam);
    const json& mb = j.at("mobius");
    AmbientIsometry r;
    r.mobius = MobiusMap::make(complex_from(mb.at(0)), complex_from(mb.at(1)), complex_from(mb.at(2)),
                               complex_from(mb.at(3)), m);
    r.orientation = j.value("orientation", std::string("direct")) == "reversing" ? Orientation::Reversing
                                                                                  : Orientation::Direct;
    r.shift = j.value("shift", 0.0);
    r.branch_offset = j.value("branch_offset", 0.0);
    r.family = fam;
    r.params = j.value("params", std::vector<double>{});
    return r;
}

json to_json(const BoundingReport& r) {
    return {{"h0", finite_or_null(r.h0)}, {"c", finite_or_null(r.c)}, {"min_gap", finite_or_null(r.min_gap)},
            {"disjoint", r.disjoint}};
}

json to_json(const AnnulusCheck& c) {
    json j{{"p", to_json(c.p)},
           {"placed", c.placed},
           {"distance", finite_or_null(c.distance)},
           {"margin_above", finite_or_null(c.margin_above)},
           {"margin_below", finite_or_null(c.margin_below)},
           {"contains_p", c.contains_p},
           {"boundary_above", c.boundary_above},
           {"boundary_below", c.boundary_below}};
    if (!c.error.empty()) j["error"] = c.error;
    return j;
}

json to_json(const SlabReport& r) {
    json checks = json::array();
    int failed = 0;
    for (const auto& c : r.checks) {
        checks.push_back(to_json(c));
        if (!(c.contains_p && c.boundary_above && c.boundary_below)) ++failed;
    }
    return {{"schema_version", kSchemaVersion},
            {"bounds", to_json(r.bounds)},
            {"points", r.checks.size()},
            {"failed_points", failed},
            {"isometry_spread", finite_or_null(r.isometry_spread)},
            {"isometric", r.isometric},
            {"pass", r.pass},
            {"checks", checks}};
}

json to_json(const Example1Info& info) {
    return {{"slab_height", info.slab_height},
            {"d_eps", info.d_eps},
            {"catenoid_half_height", info.catenoid_half_height},
            {"annulus_half_height", info.annulus_half_height}};
}

json to_json(const AreaReport& a) {
    return {{"graph_area", a.graph_area},
            {"disc_lower_bound", a.disc_lower_bound},
            {"cylinder_area", a.cylinder_area},
            {"threshold", a.threshold},
            {"douglas_pass", a.douglas_pass}};
}

json to_json(const Example2Feasibility& f) {
    json j{{"feasible", f.feasible},
           {"two_C_r", f.two_C_r},
           {"threshold", f.threshold},
           {"gradient_sup", f.gradient_sup},
           {"h_prime", f.h_prime},
           {"douglas", to_json(f.douglas)}};
    if (!f.violated.empty()) j["violated"] = f.violated;
    return j;
}

json to_json(const SolveReport& r) {
    json hist = json::array();
    for (double v : r.residual_history) hist.push_back(finite_or_null(v));
    return {{"schema_version", kSchemaVersion},
            {"converged", r.converged},
            {"iterations", r.iterations},
            {"used_descent", r.used_descent},
            {"final_residual", finite_or_null(r.final_residual)},
            {"residual_history", hist},
            {"message", r.message}};
}

json to_json(const LeafFindResult& r) {
    return {{"lambda", r.lambda}, {"residual", r.residual}, {"iterations", r.iterations}};
}

json grid_header(const GraphDomain& dom) {
    return {{"schema_version", kSchemaVersion},
            {"model", to_string(dom.model)},
            {"chart", dom.model == Model::HalfSpace ? "upper_half_plane" : "poincare_disc"},
            {"bounds", {dom.x0, dom.x1, dom.y0, dom.y1}},
            {"sizes", {dom.nx, dom.ny}}};
}

void write_graph_csv(std::ostream& os, const GraphFunction& u) {
    const GraphDomain& dom = u.domain;
    os << grid_header(dom).dump() << '\n' << "i,j,x,y,u\n";
    os.precision(17);
    for (int j = 0; j < dom.ny; ++j)
        for (int i = 0; i < dom.nx; ++i) {
            if (!dom.in_mask(i, j)) continue;
            const BasePoint b = dom.node(i, j);
            os << i << ',' << j << ',' << b.x << ',' << b.y << ',' << u(i, j) << '\n';
        }
}

GraphFunction read_graph_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw ParameterError("graph csv: missing header");
    const json h = json::parse(line);
    GraphFunction u;
    GraphDomain& dom = u.domain;
    dom.model = model_from_string(h.at("model").get<std::string>());
    const auto bounds = h.at("bounds").get<std::vector<double>>();
    const auto sizes = h.at("sizes").get<std::vector<int>>();
    if (bounds.size() != 4 || sizes.size() != 2 || sizes[0] < 2 || sizes[1] < 2)
        throw ParameterError("graph csv: bad header");
    dom.x0 = bounds[0];
    dom.x1 = bounds[1];
    dom.y0 = bounds[2];
    dom.y1 = bounds[3];
    dom.nx = sizes[0];
    dom.ny = sizes[1];
    dom.mask.assign(dom.size(), 0);
    u.values.assign(dom.size(), std::numeric_limits<double>::quiet_NaN());
    std::getline(is, line);  // column names
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        int i = 0, j = 0;
        double x = 0, y = 0, v = 0;
        char c = 0;
        if (!(row >> i >> c >> j >> c >> x >> c >> y >> c >> v) || i < 0 || j < 0 || i >= dom.nx || j >= dom.ny)
            throw ParameterError("graph csv: bad row: " + line);
        dom.mask[dom.index(i, j)] = 1;
        u.values[dom.index(i, j)] = v;
    }
    return u;
}

}  // namespace etau
