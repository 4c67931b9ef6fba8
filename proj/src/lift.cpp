#include "etau/lift.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

#include "etau/quadrature.hpp"

namespace etau {

namespace {

struct Local {
    double x, y, dx, dy;
};

Local closed_form(const PlanarCurve& c, double s) {
    const auto& q = c.form_params;
    switch (c.form) {
        case CurveForm::VerticalLine:
            return {q.at(0), s, 0.0, 1.0};
        case CurveForm::Semicircle:
            return {q.at(0) * std::cos(s) + q.at(1), q.at(0) * std::sin(s), -q.at(0) * std::sin(s),
                    q.at(0) * std::cos(s)};
        case CurveForm::RadialLine:
            return {s * std::cos(q.at(0)), s * std::sin(q.at(0)), std::cos(q.at(0)), std::sin(q.at(0))};
        case CurveForm::Generic:
            break;
    }
    throw ParameterError("curve has no closed form");
}

// Cubic Hermite interpolation with finite-difference tangents on interval k.
Local hermite(const PlanarCurve& c, std::size_t k, double s) {
    const auto& p = c.params;
    const auto& v = c.points;
    const std::size_t n = p.size();
    const auto slope = [&](std::size_t i) {
        const std::size_t lo = i == 0 ? 0 : i - 1;
        const std::size_t hi = std::min(n - 1, i + 1);
        const double h = p[hi] - p[lo];
        return std::array<double, 2>{(v[hi].x - v[lo].x) / h, (v[hi].y - v[lo].y) / h};
    };
    const double h = p[k + 1] - p[k];
    const double u = (s - p[k]) / h;
    const auto m0 = slope(k);
    const auto m1 = slope(k + 1);
    const double h00 = 2 * u * u * u - 3 * u * u + 1, h10 = u * u * u - 2 * u * u + u;
    const double h01 = -2 * u * u * u + 3 * u * u, h11 = u * u * u - u * u;
    const double d00 = 6 * u * u - 6 * u, d10 = 3 * u * u - 4 * u + 1;
    const double d01 = -6 * u * u + 6 * u, d11 = 3 * u * u - 2 * u;
    Local r;
    r.x = h00 * v[k].x + h10 * h * m0[0] + h01 * v[k + 1].x + h11 * h * m1[0];
    r.y = h00 * v[k].y + h10 * h * m0[1] + h01 * v[k + 1].y + h11 * h * m1[1];
    r.dx = (d00 * v[k].x + d01 * v[k + 1].x) / h + d10 * m0[0] + d11 * m1[0];
    r.dy = (d00 * v[k].y + d01 * v[k + 1].y) / h + d10 * m0[1] + d11 * m1[1];
    return r;
}

double lift_rate(Model m, const Local& q, const SpaceParams& sp) {
    if (m == Model::HalfSpace) return 2.0 * sp.tau * q.dx / q.y;
    const double l = 2.0 / (1.0 - q.x * q.x - q.y * q.y);
    return 2.0 * sp.tau * l * (q.x * q.dy - q.dx * q.y);
}

}  // namespace

PlanarCurve PlanarCurve::sample(Model m, CurveForm form, std::vector<double> form_params, double s0, double s1,
                                int n) {
    if (n < 2 || !(s1 > s0)) throw ParameterError("PlanarCurve::sample: need n >= 2 and s1 > s0");
    PlanarCurve c;
    c.model = m;
    c.form = form;
    c.form_params = std::move(form_params);
    for (int k = 0; k < n; ++k) {
        const double s = s0 + (s1 - s0) * k / (n - 1);
        const Local q = closed_form(c, s);
        c.params.push_back(s);
        c.points.push_back({m, q.x, q.y});
    }
    return c;
}

LiftedCurve horizontal_lift(const PlanarCurve& curve, double t0, const SpaceParams& sp) {
    const std::size_t n = curve.params.size();
    if (n < 2 || curve.points.size() != n) throw ParameterError("horizontal_lift: need at least two samples");
    for (std::size_t k = 0; k < n; ++k) {
        if (curve.points[k].model != curve.model) throw ParameterError("horizontal_lift: mixed models");
        validate(curve.points[k]);
        if (k > 0 && !(curve.params[k] > curve.params[k - 1]))
            throw ParameterError("horizontal_lift: parameters must be strictly increasing");
    }
    LiftedCurve out;
    out.params = curve.params;
    QuadratureOptions opt;
    opt.initial_panels = 1;
    double t = t0;
    for (std::size_t k = 0; k < n; ++k) {
        if (k > 0 && sp.tau != 0.0) {
            const ScalarFn rate = [&](double s) {
                const Local q = curve.form == CurveForm::Generic ? hermite(curve, k - 1, s) : closed_form(curve, s);
                return lift_rate(curve.model, q, sp);
            };
            t += adaptive_simpson(rate, curve.params[k - 1], curve.params[k], opt);
        }
        out.points.push_back({curve.points[k], t});
    }
    return out;
}

LiftedCurve lift_geodesic_semicircle(double R, double x0, double theta_from, double theta_to, double t0,
                                     const SpaceParams& sp, int samples) {
    if (!(R > 0.0)) throw ParameterError("lift_geodesic_semicircle: R must be positive");
    if (theta_from == theta_to || samples < 2) throw ParameterError("lift_geodesic_semicircle: degenerate range");
    for (double th : {theta_from, theta_to})
        if (!(th > 0.0 && th < std::numbers::pi)) throw ParameterError("lift_geodesic_semicircle: angles must lie in (0, pi)");
    LiftedCurve out;
    for (int k = 0; k < samples; ++k) {
        const double u = static_cast<double>(k) / (samples - 1);
        const double th = theta_from + u * (theta_to - theta_from);
        out.params.push_back(u);
        out.points.push_back({{Model::HalfSpace, R * std::cos(th) + x0, R * std::sin(th)}, t0 - 2.0 * sp.tau * (th - theta_from)});
    }
    return out;
}

double horizontality_defect(const LiftedCurve& c, const SpaceParams& sp) {
    const std::size_t n = c.points.size();
    double worst = 0.0;
    if (n < 5) return worst;
    for (std::size_t k = 2; k + 2 < n; ++k) {
        const double h = (c.params[k + 2] - c.params[k - 2]) / 4.0;
        const Vec3 d = (c.points[k - 2].coords() - 8.0 * c.points[k - 1].coords() + 8.0 * c.points[k + 1].coords() -
                        c.points[k + 2].coords()) /
                       (12.0 * h);
        const TangentVector v{c.points[k], d.x(), d.y(), d.z()};
        const double norm = std::sqrt(inner(v, v, sp));
        if (norm == 0.0) continue;
        worst = std::max(worst, std::abs(frame_components(v, sp).a3) / norm);
    }
    return worst;
}

void write_csv(std::ostream& os, const LiftedCurve& c) {
    os.precision(17);
    os << "parameter,x,y,t\n";
    for (std::size_t k = 0; k < c.points.size(); ++k)
        os << c.params[k] << ',' << c.points[k].base.x << ',' << c.points[k].base.y << ',' << c.points[k].t << '\n';
}

}  // namespace etau
