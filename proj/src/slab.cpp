#include "etau/slab.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <random>

#include <boost/math/quadrature/gauss.hpp>

#include "etau/foliation.hpp"
#include "etau/quadrature.hpp"

namespace etau {

namespace {

constexpr double kPi = std::numbers::pi;

GraphDomain window_domain(double window_radius, int n) {
    const double R = std::tanh(0.5 * window_radius);
    return GraphDomain::make(Model::Cylinder, -R, R, -R, R, n, n,
                             [R](const BasePoint& b) { return b.x * b.x + b.y * b.y <= R * R; });
}

BoundingGraph make_graph(const GraphDomain& dom, std::function<double(const BasePoint&)> f) {
    BoundingGraph g;
    g.samples = GraphFunction::sample(dom, f);
    g.exact = std::move(f);
    return g;
}

double min_inverse_W(const GraphFunction& u, const SpaceParams& sp) {
    const CoefficientFields c = horizontal_coefficients(u, sp);
    double m = INFINITY;
    for (double w : c.W.values)
        if (!std::isnan(w)) m = std::min(m, 1.0 / w);
    return m;
}

// Catenoid parameter whose half-height equals `target` (half-height increases with d).
double catenoid_d_for_half_height(double target, const SpaceParams& sp) {
    const auto half = [&](double logd) { return 0.5 * catenoid_height({std::exp(logd), sp}) - target; };
    const double lo = std::log(1e-3), hi = std::log(1e8);
    if (half(lo) >= 0.0 || half(hi) <= 0.0) throw InfeasibleError("no catenoid has the required half-height");
    return std::exp(bisect(half, lo, hi, 1e-12));
}

std::vector<std::array<Vec3, 2>> model_edges(const SurfaceMesh& m) {
    std::vector<std::array<Vec3, 2>> e;
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) {
            if (i + 1 < m.rows) e.push_back({m.at(i, j).coords(), m.at(i + 1, j).coords()});
            const int j1 = (j + 1) % m.cols;
            if (j + 1 < m.cols || m.periodic_cols) e.push_back({m.at(i, j).coords(), m.at(i, j1).coords()});
        }
    return e;
}

SurfaceMesh model_mesh(const SlabSpec& slab) {
    return mesh_catenoid(slab.annulus.catenoid, slab.annulus.rho_max, slab.annulus.rows, slab.annulus.cols);
}

}  // namespace

BoundingReport check_bounding_graphs(const SlabSpec& slab) {
    const GraphFunction& lo = slab.lower.samples;
    const GraphFunction& up = slab.upper.samples;
    const GraphDomain& d = lo.domain;
    if (d.nx != up.domain.nx || d.ny != up.domain.ny || d.x0 != up.domain.x0 || d.y0 != up.domain.y0 ||
        d.x1 != up.domain.x1 || d.y1 != up.domain.y1)
        throw ParameterError("check_bounding_graphs: graphs sampled on different grids");
    BoundingReport r;
    r.min_gap = INFINITY;
    for (int j = 0; j < d.ny; ++j)
        for (int i = 0; i < d.nx; ++i) {
            if (!d.in_mask(i, j)) continue;
            r.h0 = std::max({r.h0, std::abs(lo(i, j)), std::abs(up(i, j))});
            r.min_gap = std::min(r.min_gap, up(i, j) - lo(i, j));
        }
    r.c = std::min(min_inverse_W(lo, slab.sp), min_inverse_W(up, slab.sp));
    r.disjoint = r.min_gap > 0.0;
    return r;
}

AnnulusPlacement place_annulus(const SlabSpec& slab, const AmbientPoint& p) {
    if (p.model() != Model::Cylinder) throw ParameterError("place_annulus expects a cylinder point");
    validate(p);
    const SpaceParams& sp = slab.sp;
    const double mid = 0.5 * (slab.lower.height(p.base) + slab.upper.height(p.base));
    const double tq = p.t - mid;
    const double U = slab.annulus.half_height();
    if (!(std::abs(tq) < U)) throw InfeasibleError("point is out of vertical reach of the model annulus");
    const double rho = catenoid_radius_for_level(slab.annulus.catenoid, std::abs(tq));
    const Complex zp = to_complex(p.base);
    const Complex dir = std::abs(zp) > 1e-14 ? zp / std::abs(zp) : Complex(1.0);
    const AmbientIsometry Tp = disc_translation(p.base);
    const BasePoint zc = apply_base(Tp, from_complex(Model::Cylinder, -std::tanh(0.5 * rho) * dir));
    const AmbientIsometry F = disc_point_isometry_Fz0(zc, sp);
    AnnulusPlacement out;
    out.model_point = {apply_base(F, p.base), tq};
    const AmbientPoint img = apply(F, out.model_point, sp);
    out.iso = compose(vertical_shift(Model::Cylinder, p.t - img.t), F);
    return out;
}

SurfaceMesh annulus_mesh(const SlabSpec& slab, const AnnulusPlacement& placement) {
    const SurfaceMesh m = model_mesh(slab);
    return make_grid_mesh(Model::Cylinder, m.rows, m.cols, true,
                          [&](int i, int j) { return apply(placement.iso, m.at(i, j), slab.sp); }, slab.sp);
}

std::vector<double> edge_length_spectrum(const SlabSpec& slab, const AmbientIsometry& iso, int subdivisions) {
    const SurfaceMesh m = model_mesh(slab);
    std::vector<double> out;
    for (const auto& e : model_edges(m)) {
        const Vec3 dir = e[1] - e[0];
        const auto image = [&](double s) {
            return apply(iso, AmbientPoint::from_coords(Model::Cylinder, e[0] + s * dir), slab.sp).coords();
        };
        // speed of the image curve; velocity by Richardson-extrapolated central differences
        const auto speed = [&](double s) {
            const double h = 1e-3;
            const Vec3 coarse = (image(s + h) - image(s - h)) / (2.0 * h);
            const Vec3 fine = (image(s + 0.5 * h) - image(s - 0.5 * h)) / h;
            const Vec3 v = (4.0 * fine - coarse) / 3.0;
            const AmbientPoint at = AmbientPoint::from_coords(Model::Cylinder, image(s));
            return std::sqrt(v.dot(metric_at(at, slab.sp) * v));
        };
        double len = 0.0;
        for (int k = 0; k < subdivisions; ++k)
            len += boost::math::quadrature::gauss<double, 20>::integrate(speed, static_cast<double>(k) / subdivisions,
                                                                          static_cast<double>(k + 1) / subdivisions);
        out.push_back(len);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<AmbientPoint> sample_interior_points(const SlabSpec& slab, int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::vector<AmbientPoint> pts;
    while (static_cast<int>(pts.size()) < n) {
        const double rho = slab.window_radius * uni(rng);
        const double ang = 2.0 * kPi * uni(rng);
        const double r = std::tanh(0.5 * rho);
        const BasePoint b{Model::Cylinder, r * std::cos(ang), r * std::sin(ang)};
        if (!is_valid(b)) continue;
        const double lo = slab.lower.height(b), hi = slab.upper.height(b);
        if (!(hi > lo)) throw ParameterError("sample_interior_points: graphs are not disjoint");
        const double t = lo + (hi - lo) * (0.02 + 0.96 * uni(rng));
        pts.push_back({b, t});
    }
    return pts;
}

SlabReport check_annulus_family(const SlabSpec& slab, const std::vector<AmbientPoint>& points) {
    SlabReport rep;
    rep.bounds = check_bounding_graphs(slab);
    std::vector<std::vector<double>> spectra;
    const SurfaceMesh model = model_mesh(slab);
    for (const auto& p : points) {
        validate(p);
        if (!(p.t > slab.lower.height(p.base) && p.t < slab.upper.height(p.base)))
            throw ParameterError("check_annulus_family: point is not strictly between the bounding graphs");
        AnnulusCheck c;
        c.p = p;
        try {
            const AnnulusPlacement pl = place_annulus(slab, p);
            c.placed = true;
            c.distance = segment_length(p, apply(pl.iso, pl.model_point, slab.sp), slab.sp, 1);
            c.contains_p = c.distance < 1e-6;
            c.margin_above = INFINITY;
            c.margin_below = INFINITY;
            for (int j = 0; j < model.cols; ++j) {
                const AmbientPoint top = apply(pl.iso, model.at(model.rows - 1, j), slab.sp);
                const AmbientPoint bot = apply(pl.iso, model.at(0, j), slab.sp);
                c.margin_above = std::min(c.margin_above, top.t - slab.upper.height(top.base));
                c.margin_below = std::min(c.margin_below, slab.lower.height(bot.base) - bot.t);
            }
            c.boundary_above = c.margin_above > 0.0;
            c.boundary_below = c.margin_below > 0.0;
            if (spectra.size() < 4) spectra.push_back(edge_length_spectrum(slab, pl.iso));
        } catch (const std::exception& e) {
            c.error = e.what();
        }
        rep.checks.push_back(c);
    }
    rep.isometry_spread = 0.0;
    for (std::size_t k = 1; k < spectra.size(); ++k)
        for (std::size_t e = 0; e < spectra[k].size(); ++e)
            rep.isometry_spread = std::max(rep.isometry_spread,
                                           std::abs(spectra[k][e] - spectra[0][e]) / std::max(spectra[0][e], 1e-300));
    rep.isometric = spectra.size() >= 2 && rep.isometry_spread < 1e-6;
    rep.pass = rep.bounds.disjoint && rep.bounds.c > 0.0 && rep.isometric && !rep.checks.empty();
    for (const auto& c : rep.checks) rep.pass = rep.pass && c.contains_p && c.boundary_above && c.boundary_below;
    return rep;
}

SlabReport audit_slab(const SlabSpec& slab, int n, std::uint64_t seed) {
    const BoundingReport b = check_bounding_graphs(slab);
    if (!b.disjoint) {
        SlabReport rep;
        rep.bounds = b;
        return rep;
    }
    return check_annulus_family(slab, sample_interior_points(slab, n, seed));
}

SlabSpec build_example1(const SpaceParams& sp, double epsilon, Example1Info* info, double window_radius) {
    const double root = std::sqrt(1.0 + 4.0 * sp.tau * sp.tau);
    const double bound = kPi * root - 2.0 * std::abs(sp.tau) * kPi;
    if (!(epsilon > 0.0 && epsilon < bound))
        throw InfeasibleError("example1: need 0 < epsilon < pi sqrt(1 + 4 tau^2) - 2 |tau| pi = " + std::to_string(bound));
    const double height = kPi * root - std::abs(sp.tau) * kPi - epsilon;
    const double k = 0.5 * height;
    SlabSpec s;
    s.sp = sp;
    s.construction = "example1";
    s.window_radius = window_radius;
    s.nominal_height = height;
    const GraphDomain dom = window_domain(window_radius, 65);
    s.lower = make_graph(dom, [k](const BasePoint&) { return -k; });
    s.upper = make_graph(dom, [k](const BasePoint&) { return k; });
    const double cat_half = 0.5 * kPi * root - 0.25 * epsilon;
    const double d = catenoid_d_for_half_height(cat_half, sp);
    s.annulus.catenoid = {d, sp};
    s.annulus.rho_max = catenoid_radius_for_level(s.annulus.catenoid, 0.5 * kPi * root - 0.375 * epsilon);
    if (info) {
        info->slab_height = height;
        info->d_eps = d;
        info->catenoid_half_height = 0.5 * catenoid_height(s.annulus.catenoid);
        info->annulus_half_height = s.annulus.half_height();
    }
    return s;
}

Example2Feasibility example2_feasibility(const Example2Config& cfg) {
    if (!(cfg.r > 0.0) || !(cfg.h > 0.0) || !(cfg.C > 0.0))
        throw ParameterError("example2: r, h and C must be positive");
    Example2Feasibility f;
    f.douglas = douglas_check(cfg.r, cfg.h);
    f.threshold = f.douglas.threshold;
    f.two_C_r = 2.0 * cfg.C * cfg.r;
    f.h_prime = 0.5 * (cfg.h + f.two_C_r);
    if (cfg.graph == GraphChoice::Linear) {
        const GraphDomain dom = window_domain(cfg.window_radius, cfg.grid);
        const GraphFunction u =
            GraphFunction::sample(dom, [&](const BasePoint& b) { return cfg.alpha * b.x + cfg.beta * b.y; });
        for (int j = 1; j + 1 < dom.ny; ++j)
            for (int i = 1; i + 1 < dom.nx; ++i)
                if (dom.interior(i, j)) f.gradient_sup = std::max(f.gradient_sup, hyperbolic_gradient_norm(u, i, j));
    } else {
        // |grad Si(y)| = y |sin y / y| = |sin y| over the window y in [e^-R, e^R]
        const double y0 = std::exp(-cfg.window_radius), y1 = std::exp(cfg.window_radius);
        const int n = 200000;
        for (int k = 0; k <= n; ++k) {
            const double y = y0 + (y1 - y0) * k / n;
            f.gradient_sup = std::max(f.gradient_sup, std::abs(std::sin(y)));
        }
        if (y1 > kPi / 2 && y0 < kPi / 2) f.gradient_sup = 1.0;
    }
    if (!(f.two_C_r < cfg.h)) f.violated = "2 C r < h";
    else if (!(cfg.h < f.threshold)) f.violated = "h < (cosh r - 1)/sinh r";
    else if (!(f.gradient_sup <= cfg.C * (1.0 + 1e-12))) f.violated = "|grad u| <= C";
    f.feasible = f.violated.empty();
    return f;
}

SlabSpec build_example2(const SpaceParams& sp, const Example2Config& cfg, Example2Feasibility* info) {
    const Example2Feasibility f = example2_feasibility(cfg);
    if (info) *info = f;
    if (!f.feasible) throw InfeasibleError("example2 infeasible: violated " + f.violated);
    if (cfg.graph != GraphChoice::Linear) throw InfeasibleError("example2: only the linear disc graph can be built");
    const double root = std::sqrt(1.0 + 4.0 * sp.tau * sp.tau);
    SlabSpec s;
    s.sp = sp;
    s.construction = "example2";
    s.window_radius = cfg.window_radius;
    const GraphDomain dom = window_domain(cfg.window_radius, cfg.grid);
    const double hp = f.h_prime;
    const double al = cfg.alpha, be = cfg.beta;
    s.lower = make_graph(dom, [=](const BasePoint& b) { return al * b.x + be * b.y - hp; });
    s.upper = make_graph(dom, [=](const BasePoint& b) { return al * b.x + be * b.y + hp; });
    s.nominal_height = 2.0 * hp;
    // stand-in annulus: tall enough to clear the graphs over the whole disc
    const double need = 2.0 * std::hypot(al, be) + hp + 0.05;
    const double limit = 0.5 * kPi * root;
    if (!(need < limit)) throw InfeasibleError("example2: no catenoid is tall enough for these graphs");
    const double d = catenoid_d_for_half_height(0.5 * (need + limit), sp);
    s.annulus.catenoid = {d, sp};
    s.annulus.rho_max = catenoid_radius_for_level(s.annulus.catenoid, need);
    return s;
}

SlabSpec shrink_annuli(const SlabSpec& slab, double fraction) {
    SlabSpec s = slab;
    s.annulus.rho_max = catenoid_radius_for_level(s.annulus.catenoid, fraction * slab.annulus.half_height());
    s.construction += "+shrunken";
    return s;
}

SlabSpec overlap_graphs(const SlabSpec& slab) {
    SlabSpec s = slab;
    s.upper = s.lower;
    s.construction += "+overlapping";
    return s;
}

SeparationReport graph_separation_probe(const GraphFunction& S, const LeafSpec& leaf) {
    const GraphDomain& d = S.domain;
    if (d.model != Model::HalfSpace) throw ParameterError("graph_separation_probe expects a half-plane graph");
    std::vector<int> label(d.size(), -1);
    for (int j = 0; j < d.ny; ++j)
        for (int i = 0; i < d.nx; ++i)
            if (d.in_mask(i, j))
                label[d.index(i, j)] = leaf_encloses(leaf.base, leaf.lambda, {d.node(i, j), S(i, j)}) ? 1 : 0;
    SeparationReport rep;
    std::vector<int> comp(d.size(), -1);
    int count[2] = {0, 0};
    const int di[4] = {1, -1, 0, 0}, dj[4] = {0, 0, 1, -1};
    for (int j = 0; j < d.ny; ++j)
        for (int i = 0; i < d.nx; ++i) {
            const std::size_t k = d.index(i, j);
            if (label[k] < 0 || comp[k] >= 0) continue;
            const int id = count[0] + count[1];
            ++count[label[k]];
            std::deque<std::pair<int, int>> q{{i, j}};
            comp[k] = id;
            while (!q.empty()) {
                const auto [ci, cj] = q.front();
                q.pop_front();
                for (int n = 0; n < 4; ++n) {
                    const int ni = ci + di[n], nj = cj + dj[n];
                    if (!d.in_mask(ni, nj)) continue;
                    const std::size_t nk = d.index(ni, nj);
                    if (label[nk] != label[k] || comp[nk] >= 0) continue;
                    comp[nk] = id;
                    q.emplace_back(ni, nj);
                }
            }
        }
    for (int j = 0; j < d.ny; ++j)
        for (int i = 0; i < d.nx; ++i) {
            if (!d.in_mask(i, j)) continue;
            if (d.in_mask(i + 1, j) && label[d.index(i, j)] != label[d.index(i + 1, j)]) ++rep.interface_edges;
            if (d.in_mask(i, j + 1) && label[d.index(i, j)] != label[d.index(i, j + 1)]) ++rep.interface_edges;
        }
    rep.inside_components = count[1];
    rep.outside_components = count[0];
    if (count[1] == 0 || count[0] == 0) rep.status = "no_intersection";
    else if (count[1] == 1 && count[0] == 1) rep.status = "two_components";
    else rep.status = "inconclusive";
    return rep;
}

}  // namespace etau
