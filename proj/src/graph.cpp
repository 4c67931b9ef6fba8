#include "etau/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace etau {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Flux (lambda a / W, lambda b / W) from the Euclidean gradient (p, q) at a point.
std::array<double, 2> flux(const BasePoint& at, double p, double q, const SpaceParams& sp) {
    const double l = conformal_factor(at);
    const auto [A, B] = connection_coefficients(at, sp);
    const double la = -(p + A), lb = -(q + B);
    const double W = std::sqrt(1.0 + (la * la + lb * lb) / (l * l));
    return {la / W, lb / W};
}

NodeField empty_field(const GraphDomain& d) { return {d, std::vector<double>(d.size(), kNaN)}; }

}  // namespace

GraphDomain GraphDomain::make(Model m, double x0, double x1, double y0, double y1, int nx, int ny,
                              const BasePredicate& inside) {
    if (nx < 3 || ny < 3 || !(x1 > x0) || !(y1 > y0)) throw ParameterError("GraphDomain: degenerate grid");
    GraphDomain d;
    d.model = m;
    d.x0 = x0;
    d.x1 = x1;
    d.y0 = y0;
    d.y1 = y1;
    d.nx = nx;
    d.ny = ny;
    d.mask.assign(d.size(), 0);
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) {
            const BasePoint b = d.node(i, j);
            d.mask[d.index(i, j)] = is_valid(b) && (!inside || inside(b));
        }
    return d;
}

bool GraphDomain::interior(int i, int j) const {
    for (int dj = -1; dj <= 1; ++dj)
        for (int di = -1; di <= 1; ++di)
            if (!in_mask(i + di, j + dj)) return false;
    return true;
}

GraphFunction GraphFunction::sample(const GraphDomain& dom, const std::function<double(const BasePoint&)>& f) {
    GraphFunction u{dom, std::vector<double>(dom.size(), kNaN)};
    for (int j = 0; j < dom.ny; ++j)
        for (int i = 0; i < dom.nx; ++i)
            if (dom.in_mask(i, j)) u(i, j) = f(dom.node(i, j));
    return u;
}

double NodeField::max_abs() const { return max_abs_where({}); }

double NodeField::max_abs_where(const BasePredicate& keep) const {
    double m = 0.0;
    for (int j = 0; j < domain.ny; ++j)
        for (int i = 0; i < domain.nx; ++i) {
            const double v = values[domain.index(i, j)];
            if (std::isnan(v)) continue;
            if (keep && !keep(domain.node(i, j))) continue;
            m = std::max(m, std::abs(v));
        }
    return m;
}

CoefficientFields horizontal_coefficients(const GraphFunction& u, const SpaceParams& sp) {
    const GraphDomain& d = u.domain;
    CoefficientFields c{empty_field(d), empty_field(d), empty_field(d)};
    for (int j = 0; j < d.ny; ++j)
        for (int i = 0; i < d.nx; ++i) {
            if (!d.interior(i, j)) continue;
            const BasePoint b = d.node(i, j);
            const double p = (u(i + 1, j) - u(i - 1, j)) / (2.0 * d.hx());
            const double q = (u(i, j + 1) - u(i, j - 1)) / (2.0 * d.hy());
            const double l = conformal_factor(b);
            const auto [A, B] = connection_coefficients(b, sp);
            const double a = -(p + A) / l, bb = -(q + B) / l;
            const std::size_t k = d.index(i, j);
            c.a.values[k] = a;
            c.b.values[k] = bb;
            c.W.values[k] = std::sqrt(1.0 + a * a + bb * bb);
        }
    return c;
}

NodeField mean_curvature(const GraphFunction& u, const SpaceParams& sp) {
    const GraphDomain& d = u.domain;
    NodeField H = empty_field(d);
    const double hx = d.hx(), hy = d.hy();
    for (int j = 0; j < d.ny; ++j)
        for (int i = 0; i < d.nx; ++i) {
            if (!d.interior(i, j)) continue;
            const BasePoint c = d.node(i, j);
            double div = 0.0;
            for (int s : {-1, 1}) {
                // x-face between i and i+s
                const int il = s > 0 ? i : i - 1;
                const BasePoint fx{d.model, c.x + 0.5 * s * hx, c.y};
                const double px = (u(il + 1, j) - u(il, j)) / hx;
                const double qx = (u(il, j + 1) + u(il + 1, j + 1) - u(il, j - 1) - u(il + 1, j - 1)) / (4.0 * hy);
                div += s * flux(fx, px, qx, sp)[0] / hx;
                const int jl = s > 0 ? j : j - 1;
                const BasePoint fy{d.model, c.x, c.y + 0.5 * s * hy};
                const double qy = (u(i, jl + 1) - u(i, jl)) / hy;
                const double py = (u(i + 1, jl) + u(i + 1, jl + 1) - u(i - 1, jl) - u(i - 1, jl + 1)) / (4.0 * hx);
                div += s * flux(fy, py, qy, sp)[1] / hy;
            }
            const double l = conformal_factor(c);
            H.values[d.index(i, j)] = div / (2.0 * l * l);
        }
    return H;
}

namespace {

double area_rule(const GraphDomain& d, const BasePredicate& region, const std::function<double(int, int)>& cell_W) {
    if (!region) throw ParameterError("area: empty region");
    const double hx = d.hx(), hy = d.hy();
    constexpr int kSub = 8;
    double total = 0.0;
    bool any = false;
    for (int j = 0; j + 1 < d.ny; ++j)
        for (int i = 0; i + 1 < d.nx; ++i) {
            if (!(d.in_mask(i, j) && d.in_mask(i + 1, j) && d.in_mask(i, j + 1) && d.in_mask(i + 1, j + 1))) continue;
            int inside = 0;
            for (int c = 0; c < 4; ++c) inside += region(d.node(i + (c & 1), j + (c >> 1)));
            if (inside == 0) continue;
            any = true;
            const double W = cell_W(i, j);
            const BasePoint lo = d.node(i, j);
            if (inside == 4) {
                const double l = conformal_factor({d.model, lo.x + 0.5 * hx, lo.y + 0.5 * hy});
                total += W * l * l * hx * hy;
                continue;
            }
            for (int b = 0; b < kSub; ++b)
                for (int a = 0; a < kSub; ++a) {
                    const BasePoint s{d.model, lo.x + (a + 0.5) * hx / kSub, lo.y + (b + 0.5) * hy / kSub};
                    if (!region(s)) continue;
                    const double l = conformal_factor(s);
                    total += W * l * l * hx * hy / (kSub * kSub);
                }
        }
    if (!any) throw ParameterError("area: region contains no grid cell");
    return total;
}

}  // namespace

double graph_area(const GraphFunction& u, const SpaceParams& sp, const BasePredicate& region) {
    const GraphDomain& d = u.domain;
    const double hx = d.hx(), hy = d.hy();
    return area_rule(d, region, [&](int i, int j) {
        const BasePoint c{d.model, d.x0 + (i + 0.5) * hx, d.y0 + (j + 0.5) * hy};
        const double p = 0.5 * (u(i + 1, j) - u(i, j) + u(i + 1, j + 1) - u(i, j + 1)) / hx;
        const double q = 0.5 * (u(i, j + 1) - u(i, j) + u(i + 1, j + 1) - u(i + 1, j)) / hy;
        const double l = conformal_factor(c);
        const auto [A, B] = connection_coefficients(c, sp);
        const double a = (p + A) / l, b = (q + B) / l;
        return std::sqrt(1.0 + a * a + b * b);
    });
}

double region_area(const GraphDomain& dom, const BasePredicate& region) {
    return area_rule(dom, region, [](int, int) { return 1.0; });
}

double cylinder_area(double r, double h) {
    if (!(r > 0.0) || !(h > 0.0)) throw ParameterError("cylinder_area: r and h must be positive");
    return 4.0 * std::numbers::pi * h * std::sinh(r);
}

AreaReport douglas_check(double r, double h) {
    if (!(r > 0.0) || !(h > 0.0)) throw ParameterError("douglas_check: r and h must be positive");
    AreaReport rep;
    rep.disc_lower_bound = 2.0 * std::numbers::pi * (std::cosh(r) - 1.0);
    rep.graph_area = rep.disc_lower_bound;
    rep.cylinder_area = cylinder_area(r, h);
    const double sh = std::sinh(0.5 * r);
    rep.threshold = 2.0 * sh * sh / std::sinh(r);
    rep.douglas_pass = h < rep.threshold;
    return rep;
}

double variation(const GraphFunction& u, const BasePredicate& region) {
    const GraphDomain& d = u.domain;
    double lo = INFINITY, hi = -INFINITY;
    for (int j = 0; j < d.ny; ++j)
        for (int i = 0; i < d.nx; ++i) {
            if (!d.in_mask(i, j)) continue;
            if (region && !region(d.node(i, j))) continue;
            lo = std::min(lo, u(i, j));
            hi = std::max(hi, u(i, j));
        }
    if (!(hi >= lo)) throw ParameterError("variation: empty region");
    return hi - lo;
}

double hyperbolic_gradient_norm(const GraphFunction& u, int i, int j) {
    const GraphDomain& d = u.domain;
    if (!(d.in_mask(i - 1, j) && d.in_mask(i + 1, j) && d.in_mask(i, j - 1) && d.in_mask(i, j + 1) && d.in_mask(i, j)))
        throw ParameterError("hyperbolic_gradient_norm: boundary node");
    const double p = (u(i + 1, j) - u(i - 1, j)) / (2.0 * d.hx());
    const double q = (u(i, j + 1) - u(i, j - 1)) / (2.0 * d.hy());
    return std::hypot(p, q) / conformal_factor(d.node(i, j));
}

double interpolate(const GraphFunction& u, const BasePoint& b) {
    const GraphDomain& d = u.domain;
    const double fx = (b.x - d.x0) / d.hx(), fy = (b.y - d.y0) / d.hy();
    if (fx < -1e-9 || fy < -1e-9 || fx > d.nx - 1 + 1e-9 || fy > d.ny - 1 + 1e-9)
        throw ParameterError("interpolate: point outside the grid");
    const int i = std::clamp(static_cast<int>(std::floor(fx)), 0, d.nx - 2);
    const int j = std::clamp(static_cast<int>(std::floor(fy)), 0, d.ny - 2);
    const double s = fx - i, t = fy - j;
    return (1 - s) * (1 - t) * u(i, j) + s * (1 - t) * u(i + 1, j) + (1 - s) * t * u(i, j + 1) + s * t * u(i + 1, j + 1);
}

}  // namespace etau
