#include "etau/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "etau/isometry.hpp"
#include "etau/lift.hpp"
#include "etau/surfaces.hpp"

namespace etau {

namespace {

constexpr double kPi = std::numbers::pi;

struct Sampler {
    std::mt19937_64 gen;
    explicit Sampler(std::uint64_t seed) : gen(seed) {}
    double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(gen); }
    AmbientPoint half_space() { return {{Model::HalfSpace, uniform(-2.0, 2.0), std::exp(uniform(-1.5, 1.5))}, uniform(-3.0, 3.0)}; }
    AmbientPoint cylinder(double rmax) {
        const double r = rmax * std::sqrt(uniform(0.0, 1.0)), a = uniform(0.0, 2.0 * kPi);
        return {{Model::Cylinder, r * std::cos(a), r * std::sin(a)}, uniform(-3.0, 3.0)};
    }
};

double fiber_defect(const std::function<AmbientPoint(const AmbientPoint&)>& f, const AmbientPoint& p, double c) {
    AmbientPoint q = p;
    q.t += c;
    const AmbientPoint fp = f(p), fq = f(q);
    return std::hypot(fq.base.x - fp.base.x, fq.base.y - fp.base.y) + std::abs(std::abs(fq.t - fp.t) - std::abs(c));
}

double sup_diff(const GraphFunction& u, const GraphFunction& v) {
    double m = 0.0;
    for (std::size_t k = 0; k < u.values.size(); ++k)
        if (!std::isnan(u.values[k])) m = std::max(m, std::abs(u.values[k] - v.values[k]));
    return m;
}

}  // namespace

LimitsReport verify_limits(const SpaceParams& sp) {
    LimitsReport r;
    const double root = std::sqrt(1.0 + 4.0 * sp.tau * sp.tau);
    r.tau = sp.tau;
    r.h_large = invariant_height(1e4, sp);
    r.h_limit = 0.5 * kPi * root;
    r.H_large = catenoid_height({1e3, sp});
    r.H_limit = kPi * root;
    r.pass = std::abs(r.h_large - r.h_limit) < 1e-3 && std::abs(r.H_large - r.H_limit) < 5e-2;
    return r;
}

std::vector<PullbackRow> isometry_pullbacks(const SpaceParams& sp, int n, std::uint64_t seed) {
    Sampler rng(seed);
    std::vector<PullbackRow> rows;
    const auto run = [&](const std::string& name, auto&& one) {
        PullbackRow row{name, n, 0.0, 0.0};
        for (int k = 0; k < n; ++k) {
            const auto [res, fib] = one();
            row.max_residual = std::max(row.max_residual, res);
            row.max_fiber_defect = std::max(row.max_fiber_defect, fib);
        }
        rows.push_back(row);
    };
    const auto iso_sample = [&](const AmbientIsometry& iso, const AmbientPoint& p) {
        const double c = rng.uniform(-2.0, 2.0);
        return std::pair{pullback_residual(iso, p, sp),
                         fiber_defect([&](const AmbientPoint& q) { return apply(iso, q, sp); }, p, c)};
    };

    run("Phi", [&] {
        const AmbientPoint p = rng.half_space();
        const CoordinateMap f = [&](const Vec3& c) {
            return to_cylinder(AmbientPoint::from_coords(Model::HalfSpace, c), sp).coords();
        };
        const double c = rng.uniform(-2.0, 2.0);
        return std::pair{pullback_residual(f, p, Model::Cylinder, sp),
                         fiber_defect([&](const AmbientPoint& q) { return to_cylinder(q, sp); }, p, c)};
    });
    run("F_lambda", [&] { return iso_sample(scale_isometry(std::exp(rng.uniform(-1.5, 1.5))), rng.half_space()); });
    run("L_s", [&] { return iso_sample(translation_isometry_Ls(std::exp(rng.uniform(-1.0, 1.0))), rng.half_space()); });
    run("F_z0", [&] {
        const AmbientPoint z0 = rng.cylinder(0.7);
        return iso_sample(disc_point_isometry_Fz0(z0.base, sp), rng.cylinder(0.8));
    });
    run("G", [&] {
        const double x0 = rng.uniform(-2.0, 2.0), y0 = std::exp(rng.uniform(-1.0, 1.0)), u0 = rng.uniform(-2.0, 2.0);
        return iso_sample(halfplane_graph_isometry_G(x0, y0, u0), rng.half_space());
    });
    run("composite", [&] {
        const AmbientIsometry a = translation_isometry_Ls(std::exp(rng.uniform(-1.0, 1.0)));
        const AmbientIsometry b = reversing_isometry(MobiusMap::identity(Model::HalfSpace), rng.uniform(-1.0, 1.0));
        return iso_sample(compose(a, compose(b, scale_isometry(std::exp(rng.uniform(-1.0, 1.0))))), rng.half_space());
    });
    run("inverse", [&] {
        const AmbientIsometry a = translation_isometry_Ls(std::exp(rng.uniform(-1.0, 1.0)));
        return iso_sample(inverse(compose(halfplane_graph_isometry_G(0.5, 1.5, 0.25), a)), rng.half_space());
    });
    return rows;
}

OraclePatch oracle_patch(const std::string& surface, double d, const SpaceParams& sp, int n) {
    OraclePatch out;
    if (surface == "catenoid") {
        const CatenoidSpec cs{d, sp};
        const double r0 = catenoid_neck(d);
        const auto table = ProfileTable::catenoid(cs, r0 + 3.0);
        const double cx = std::tanh((r0 + 1.2) / 2.0), R = 0.06;
        const auto dom = GraphDomain::make(Model::Cylinder, cx - R, cx + R, -R, R, n, n,
                                           [=](const BasePoint& b) { return std::hypot(b.x - cx, b.y) <= R; });
        out.exact = GraphFunction::sample(dom, [&](const BasePoint& b) {
            return table.value_at_base(2.0 * std::atanh(std::hypot(b.x, b.y)), true);
        });
        out.inner = [=](const BasePoint& b) { return std::hypot(b.x - cx, b.y) <= 0.7 * R; };
        return out;
    }
    if (surface == "invariant") {
        const InvariantSurfaceSpec is{d, 0.0, sp, Sheet::Plus, false};
        const auto table = ProfileTable::invariant(is, 1e-3);
        const double th = 0.5 * invariant_angle(d), px = std::cos(th), py = std::sin(th), R = 0.1;
        const auto dom = GraphDomain::make(Model::HalfSpace, px - R, px + R, py - R, py + R, n, n,
                                           [=](const BasePoint& b) { return std::hypot(b.x - px, b.y - py) <= R; });
        out.exact = GraphFunction::sample(
            dom, [&](const BasePoint& b) { return table.value_at_base(std::atan2(b.y, b.x), true); });
        out.inner = [=](const BasePoint& b) { return std::hypot(b.x - px, b.y - py) <= 0.7 * R; };
        return out;
    }
    throw ParameterError("unknown surface '" + surface + "' (catenoid or invariant)");
}

MinimalityStudy minimality_study(const std::string& surface, double d, const SpaceParams& sp, int n0, int refinements) {
    MinimalityStudy st;
    st.surface = surface;
    int n = n0;
    for (int k = 0; k <= refinements; ++k, n = 2 * n - 1) {
        const OraclePatch patch = oracle_patch(surface, d, sp, n);
        st.sizes.push_back(n);
        st.max_h.push_back(mean_curvature(patch.exact, sp).max_abs_where(patch.inner));
        if (k > 0) st.orders.push_back(std::log2(st.max_h[k - 1] / st.max_h[k]));
    }
    return st;
}

SolverOracle solver_oracle(const std::string& surface, double d, const SpaceParams& sp, int n) {
    const OraclePatch patch = oracle_patch(surface, d, sp, n);
    SolverOracle r;
    r.report = solve_dirichlet(patch.exact, sp);
    r.sup_error = sup_diff(patch.exact, r.report.solution);
    return r;
}

LiftReport verify_lifts(const SpaceParams& sp) {
    LiftReport r;
    r.variation_bound = 2.0 * std::abs(sp.tau) * kPi;
    const double t0 = 0.3;
    struct Arc { double R, x0, from, to; };
    for (const Arc a : {Arc{1.0, 0.0, 1e-3, kPi - 1e-3}, Arc{2.5, -1.0, 0.2, 2.9}, Arc{0.4, 3.0, 0.5, 1.0}}) {
        const auto closed = lift_geodesic_semicircle(a.R, a.x0, a.from, a.to, t0, sp, 513);
        const auto curve = PlanarCurve::sample(Model::HalfSpace, CurveForm::Semicircle, {a.R, a.x0}, a.from, a.to, 513);
        const auto quad = horizontal_lift(curve, t0, sp);
        double lo = quad.points[0].t, hi = lo;
        for (std::size_t k = 0; k < quad.points.size(); ++k) {
            r.closed_vs_quadrature = std::max(r.closed_vs_quadrature, std::abs(quad.points[k].t - closed.points[k].t));
            lo = std::min(lo, closed.points[k].t);
            hi = std::max(hi, closed.points[k].t);
        }
        r.max_variation = std::max(r.max_variation, hi - lo);
        r.horizontality = std::max(r.horizontality, horizontality_defect(quad, sp));
    }
    const auto spread = [&](const LiftedCurve& c) {
        double m = 0.0;
        for (const auto& p : c.points) m = std::max(m, std::abs(p.t - t0));
        return m;
    };
    for (double x0 : {-1.0, 0.0, 2.0}) {
        const auto c = horizontal_lift(PlanarCurve::sample(Model::HalfSpace, CurveForm::VerticalLine, {x0}, 0.1, 5.0, 257), t0, sp);
        r.vertical_line_spread = std::max(r.vertical_line_spread, spread(c));
        r.horizontality = std::max(r.horizontality, horizontality_defect(c, sp));
    }
    for (double ang : {0.0, 0.7, 2.0}) {
        const auto c = horizontal_lift(PlanarCurve::sample(Model::Cylinder, CurveForm::RadialLine, {ang}, -0.9, 0.9, 257), t0, sp);
        r.radial_line_spread = std::max(r.radial_line_spread, spread(c));
        r.horizontality = std::max(r.horizontality, horizontality_defect(c, sp));
    }
    return r;
}

double generic_lift_spread(const SpaceParams& sp) {
    PlanarCurve c;
    c.model = Model::HalfSpace;
    for (int k = 0; k < 401; ++k) {
        const double s = 4.0 * k / 400.0;
        c.params.push_back(s);
        c.points.push_back({Model::HalfSpace, s - 2.0 + 0.3 * std::sin(3.0 * s), 1.0 + 0.5 * std::cos(2.0 * s)});
    }
    const auto l = horizontal_lift(c, 0.7, sp);
    double m = 0.0;
    for (const auto& p : l.points) m = std::max(m, std::abs(p.t - 0.7));
    return m;
}

TransversalityReport verify_transversality(double epsilon, double h0, const SpaceParams& sp, double step) {
    TransversalityReport r;
    r.epsilon = epsilon;
    r.h0 = h0;
    r.delta = transversality_delta(epsilon, h0, sp);
    r.lhs = transversality_lhs(r.delta, h0, sp);
    r.inequality = r.lhs < epsilon * epsilon;
    r.d = 1.0 + 0.5 * r.delta;
    r.max_nu = transversality_max_nu(r.d, h0, sp, step);
    r.nu_below = r.max_nu < epsilon;
    return r;
}

FoliationReport verify_foliation(const FoliationParams& fp, const SpaceParams& sp, int n, std::uint64_t seed, double mu) {
    Sampler rng(seed);
    FoliationReport r;
    r.points = n;
    const AmbientIsometry F = scale_isometry(mu);
    for (int k = 0; k < n; ++k) {
        const AmbientPoint p{{Model::HalfSpace, fp.s + rng.uniform(-3.0, 3.0), std::exp(rng.uniform(-2.0, 2.0))},
                             0.98 * fp.h0 * rng.uniform(-1.0, 1.0)};
        try {
            const LeafFindResult a = foliation_leaf_find(p, fp, sp);
            const LeafFindResult b = foliation_leaf_find(apply(F, p, sp), fp, sp);
            ++r.succeeded;
            r.max_residual = std::max({r.max_residual, a.residual, b.residual});
            r.max_equivariance = std::max(r.max_equivariance, std::abs(b.lambda / (mu * a.lambda) - 1.0));
        } catch (const std::exception& e) {
            r.errors.push_back(e.what());
        }
    }
    return r;
}

}  // namespace etau
