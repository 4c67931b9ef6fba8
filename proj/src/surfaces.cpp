#include "etau/surfaces.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "etau/isometry.hpp"
#include "etau/quadrature.hpp"

namespace etau {

namespace {

constexpr double kPi = std::numbers::pi;

double sinhc(double x) { return std::abs(x) < 1e-6 ? 1.0 + x * x / 6.0 : std::sinh(x) / x; }
double sinc(double x) { return std::abs(x) < 1e-6 ? 1.0 - x * x / 6.0 : std::sin(x) / x; }

// 1 / sinh r without overflow for large r.
double inv_sinh(double r) {
    if (r > 20.0) {
        const double e = std::exp(-r);
        return 2.0 * e / (1.0 - e * e);
    }
    return 1.0 / std::sinh(r);
}

double catenoid_weight(double tau, double r) {
    const double th = std::tanh(0.5 * r);
    return std::sqrt(1.0 + 4.0 * tau * tau * th * th);
}

// Integrand of u in r, away from the neck.
double catenoid_integrand_r(const CatenoidSpec& s, double r) {
    const double q = s.d * inv_sinh(r);
    return s.d * catenoid_weight(s.sp.tau, r) * inv_sinh(r) / std::sqrt((1.0 - q) * (1.0 + q));
}

// Integrand in sigma, r = neck + sigma^2; the square-root singularity is divided out.
double catenoid_integrand_sigma(const CatenoidSpec& s, double sigma) {
    const double d = s.d;
    const double r0 = catenoid_neck(d);
    const double x = sigma * sigma;
    if (x >= 1.0) return 2.0 * sigma * catenoid_integrand_r(s, r0 + x);
    // sinh(r0 + x) - d = 2 d sinh^2(x/2) + sqrt(1 + d^2) sinh x = x * q
    const double half = sinhc(0.5 * x);
    const double q = 0.5 * d * x * half * half + std::sqrt(1.0 + d * d) * sinhc(x);
    const double sh = d + x * q;
    return 2.0 * d * catenoid_weight(s.sp.tau, r0 + x) / std::sqrt(q * (sh + d));
}

double invariant_integrand_sigma(double d, double tau, double sigma) {
    const double a = invariant_angle(d);
    const double x = sigma * sigma;
    const double psi = a - x;
    // 1 - d sin(a - x) = 2 sin^2(x/2) + sqrt(d^2 - 1) sin x = x * q
    const double half = sinc(0.5 * x);
    const double q = 0.5 * x * half * half + std::sqrt(d * d - 1.0) * sinc(x);
    const double c = std::cos(psi);
    return 2.0 * d * std::sqrt(1.0 + 4.0 * tau * tau * c * c) / std::sqrt(q * (1.0 + d * std::sin(psi)));
}

QuadratureOptions profile_options() {
    QuadratureOptions o;
    o.abs_tol = 1e-12;
    o.initial_panels = 16;
    o.max_depth = 60;
    return o;
}

void check_d_catenoid(double d) {
    if (!(d >= 0.0) || !std::isfinite(d)) throw ParameterError("catenoid: d must be >= 0");
}

void check_d_invariant(double d) {
    if (!(d > 1.0) || !std::isfinite(d)) throw ParameterError("invariant surface: d must be > 1");
}

// I(theta) for 0 <= theta <= a.
double invariant_integral(double d, double tau, double theta) {
    const double a = invariant_angle(d);
    const double sigma = std::sqrt(std::max(0.0, a - theta));
    return adaptive_simpson([&](double s) { return invariant_integrand_sigma(d, tau, s); }, 0.0, sigma,
                            profile_options());
}

}  // namespace

double catenoid_neck(double d) {
    check_d_catenoid(d);
    return std::asinh(d);
}

double catenoid_slope(const CatenoidSpec& spec, double rho) {
    const double r0 = catenoid_neck(spec.d);
    if (rho < r0) throw ParameterError("catenoid_slope: rho below the neck radius");
    if (spec.d == 0.0) return 0.0;
    const double x = rho - r0;
    if (x < 1.0) {
        const double sigma = std::sqrt(x);
        if (sigma == 0.0) return INFINITY;
        return catenoid_integrand_sigma(spec, sigma) / (2.0 * sigma);
    }
    return catenoid_integrand_r(spec, rho);
}

double catenoid_profile(const CatenoidSpec& spec, double rho) {
    const double r0 = catenoid_neck(spec.d);
    if (!(rho >= r0)) throw ParameterError("catenoid_profile: rho below the neck radius arsinh(d)");
    if (spec.d == 0.0) return 0.0;
    const auto gs = [&](double s) { return catenoid_integrand_sigma(spec, s); };
    const double x = rho - r0;
    if (x <= 1.0) return adaptive_simpson(gs, 0.0, std::sqrt(x), profile_options());
    return adaptive_simpson(gs, 0.0, 1.0, profile_options()) +
           adaptive_simpson([&](double r) { return catenoid_integrand_r(spec, r); }, r0 + 1.0, rho, profile_options());
}

double catenoid_height(const CatenoidSpec& spec) {
    if (!(spec.d > 0.0) || !std::isfinite(spec.d)) throw ParameterError("catenoid_height: d must be > 0");
    const double r0 = catenoid_neck(spec.d);
    const double amp = 2.0 * spec.d * std::sqrt(1.0 + 4.0 * spec.sp.tau * spec.sp.tau);
    // integrand ~ amp e^{-r}; cut where it drops below 1e-14 and add the tail
    const double rstar = std::max(r0 + 2.0, std::log(amp / 1e-14));
    QuadratureOptions o = profile_options();
    o.initial_panels = 64;
    const double body =
        adaptive_simpson([&](double s) { return catenoid_integrand_sigma(spec, s); }, 0.0, 1.0, profile_options()) +
        adaptive_simpson([&](double r) { return catenoid_integrand_r(spec, r); }, r0 + 1.0, rstar, o);
    return 2.0 * (body + amp * std::exp(-rstar));
}

double catenoid_radius_for_level(const CatenoidSpec& spec, double level) {
    const double r0 = catenoid_neck(spec.d);
    if (level <= 0.0) return r0;
    if (!(level < 0.5 * catenoid_height(spec))) throw ParameterError("catenoid_radius_for_level: level above the asymptotic height");
    double hi = r0 + 1.0;
    while (catenoid_profile(spec, hi) < level) hi = r0 + 2.0 * (hi - r0);
    return bisect([&](double r) { return catenoid_profile(spec, r) - level; }, r0, hi, 1e-13);
}

double invariant_angle(double d) {
    check_d_invariant(d);
    return std::asin(1.0 / d);
}

double invariant_profile(const InvariantSurfaceSpec& spec, double theta) {
    const double a = invariant_angle(spec.d);
    if (spec.side == Sheet::Both) throw ParameterError("invariant_profile: choose the Plus or Minus sheet");
    double th = theta;
    double sign = 1.0;
    if (spec.mirror) {
        th = kPi - theta;
        sign = -1.0;
    }
    if (!(th > 0.0 && th <= a)) throw ParameterError("invariant_profile: theta outside (0, arcsin(1/d)]");
    const double I = invariant_integral(spec.d, spec.sp.tau, th);
    const double lin = 2.0 * spec.sp.tau * (a - th);
    return sign * ((spec.side == Sheet::Plus ? I : -I) + lin);
}

double invariant_profile_derivative(const InvariantSurfaceSpec& spec, double theta) {
    const double a = invariant_angle(spec.d);
    if (spec.side == Sheet::Both) throw ParameterError("invariant_profile_derivative: choose the Plus or Minus sheet");
    const double th = spec.mirror ? kPi - theta : theta;
    if (!(th > 0.0 && th < a)) throw ParameterError("invariant_profile_derivative: theta outside (0, arcsin(1/d))");
    const double tau = spec.sp.tau;
    const double c = std::cos(th), sn = std::sin(th);
    const double g = spec.d * std::sqrt(1.0 + 4.0 * tau * tau * c * c) / std::sqrt(1.0 - spec.d * spec.d * sn * sn);
    const double v = (spec.side == Sheet::Plus ? -g : g) - 2.0 * tau;
    // u_mirror(theta) = -u(pi - theta) has the same derivative
    return v;
}

double invariant_height(double d, const SpaceParams& sp) {
    check_d_invariant(d);
    return invariant_integral(d, sp.tau, 0.0);
}

double invariant_height_substituted(double d, const SpaceParams& sp) {
    check_d_invariant(d);
    const double t2 = 4.0 * sp.tau * sp.tau;
    // v = -sigma^2, so 1 - (v + 1)^2 = sigma^2 (2 - sigma^2)
    const auto g = [&](double s) {
        const double w = 1.0 - s * s;
        return 2.0 * std::sqrt(d * d * (1.0 + t2) - t2 * w * w) / std::sqrt((d * d - w * w) * (2.0 - s * s));
    };
    return adaptive_simpson(g, 0.0, 1.0, profile_options());
}

double invariant_d_for_height(double h, const SpaceParams& sp) {
    const double floor = 0.5 * kPi * std::sqrt(1.0 + 4.0 * sp.tau * sp.tau);
    if (!(h > floor)) throw ParameterError("invariant_d_for_height: h must exceed (pi/2) sqrt(1 + 4 tau^2)");
    double lo = -30.0, hi = 1.0;  // log(d - 1)
    while (invariant_height(1.0 + std::exp(hi), sp) > h) {
        hi += 2.0;
        if (hi > 60.0) throw ParameterError("invariant_d_for_height: height too close to the limit");
    }
    const double x = bisect([&](double x) { return invariant_height(1.0 + std::exp(x), sp) - h; }, lo, hi, 1e-13);
    return 1.0 + std::exp(x);
}

double normal_vertical_component(const InvariantSurfaceSpec& spec, double theta) {
    const double a = invariant_angle(spec.d);
    if (!(theta > 0.0 && theta <= a)) throw ParameterError("normal_vertical_component: theta outside (0, arcsin(1/d)]");
    const double c = std::cos(theta), sn = std::sin(theta);
    const double inside = std::max(0.0, 1.0 - spec.d * spec.d * sn * sn);
    return std::sqrt(inside) / std::sqrt(1.0 + 4.0 * spec.sp.tau * spec.sp.tau * c * c);
}

std::pair<double, double> tangent_vertical_components(const InvariantSurfaceSpec& spec, double theta) {
    const double a = invariant_angle(spec.d);
    if (!(theta > 0.0 && theta <= a)) throw ParameterError("tangent_vertical_components: theta outside (0, arcsin(1/d)]");
    const double tau = spec.sp.tau;
    const double c = std::cos(theta), sn = std::sin(theta);
    const double cot = c / sn;
    const double w = 1.0 + 4.0 * tau * tau * c * c;
    const double inside = std::max(0.0, 1.0 - spec.d * spec.d * sn * sn);
    const double vV = -spec.d * std::sqrt(w) / std::sqrt((1.0 + cot * cot) * inside + spec.d * spec.d * w);
    const double vW = -2.0 * tau * cot / std::sqrt(1.0 + (1.0 + 4.0 * tau * tau) * cot * cot);
    return {vV, vW};
}

double transversality_lhs(double delta, double h0, const SpaceParams& sp) {
    const double ctau = -2.0 * std::abs(sp.tau) * kPi;
    const double E = std::exp(2.0 * (h0 - ctau));
    const double den = 2.0 + delta * (1.0 + E);
    return 4.0 * (2.0 * delta + delta * delta) * E / (den * den);
}

double transversality_delta(double epsilon, double h0, const SpaceParams& sp) {
    if (!(epsilon > 0.0)) throw ParameterError("transversality_delta: epsilon must be positive");
    if (epsilon >= 1.0) throw ParameterError("transversality_delta: epsilon >= 1 makes the estimate vacuous");
    if (!(h0 > 0.0)) throw ParameterError("transversality_delta: h0 must be positive");
    const double ctau = -2.0 * std::abs(sp.tau) * kPi;
    const double E = std::exp(2.0 * (h0 - ctau));
    // the left side increases on (0, 2/(E-1)) up to its maximum 1
    double lo = 0.0, hi = 2.0 / (E - 1.0);
    const double target = epsilon * epsilon;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (transversality_lhs(mid, h0, sp) < target) lo = mid;
        else hi = mid;
    }
    return lo;
}

double transversality_max_nu(double d, double h0, const SpaceParams& sp, double step) {
    const double a = invariant_angle(d);
    std::vector<double> thetas;
    for (double th = a; th > 0.0; th -= step) thetas.push_back(th);
    std::vector<double> sig;
    for (double th : thetas) sig.push_back(std::sqrt(std::max(0.0, a - th)));
    for (std::size_t k = 1; k < sig.size(); ++k)
        if (!(sig[k] > sig[k - 1])) sig[k] = std::nextafter(sig[k - 1], 1.0);
    QuadratureOptions o = profile_options();
    const auto I = cumulative_integral([&](double s) { return invariant_integrand_sigma(d, sp.tau, s); }, sig, o);
    InvariantSurfaceSpec spec{d, 0.0, sp, Sheet::Plus, false};
    double worst = 0.0;
    for (std::size_t k = 0; k < thetas.size(); ++k) {
        const double lin = 2.0 * sp.tau * (a - thetas[k]);
        const double nu = normal_vertical_component(spec, thetas[k]);
        if (std::abs(I[k] + lin) <= h0 || std::abs(-I[k] + lin) <= h0) worst = std::max(worst, nu);
    }
    return worst;
}

ProfileTable ProfileTable::catenoid(const CatenoidSpec& spec, double rho_max, int intervals) {
    const double r0 = catenoid_neck(spec.d);
    if (!(rho_max > r0)) throw ParameterError("ProfileTable::catenoid: rho_max must exceed the neck radius");
    ProfileTable t;
    t.anchor_ = r0;
    t.orient_ = 1.0;
    const double smax = std::sqrt(rho_max - r0);
    for (int k = 0; k <= intervals; ++k) t.sigma_.push_back(smax * k / intervals);
    const auto g = [&](double s) { return spec.d == 0.0 ? 0.0 : catenoid_integrand_sigma(spec, s); };
    t.value_ = cumulative_integral(g, t.sigma_, profile_options());
    for (double s : t.sigma_) t.slope_.push_back(g(s));
    return t;
}

ProfileTable ProfileTable::invariant(const InvariantSurfaceSpec& spec, double theta_min, int intervals) {
    const double a = invariant_angle(spec.d);
    if (!(theta_min > 0.0 && theta_min < a)) throw ParameterError("ProfileTable::invariant: theta_min outside (0, arcsin(1/d))");
    ProfileTable t;
    t.anchor_ = a;
    t.orient_ = -1.0;
    t.linear_ = 2.0 * spec.sp.tau;
    const double smax = std::sqrt(a - theta_min);
    for (int k = 0; k <= intervals; ++k) t.sigma_.push_back(smax * k / intervals);
    const auto g = [&](double s) { return invariant_integrand_sigma(spec.d, spec.sp.tau, s); };
    t.value_ = cumulative_integral(g, t.sigma_, profile_options());
    for (double s : t.sigma_) t.slope_.push_back(g(s));
    return t;
}

double ProfileTable::at_sigma(double sigma) const {
    const double s = std::abs(sigma);
    const std::size_t n = sigma_.size() - 1;
    if (s > sigma_.back() * (1.0 + 1e-12)) throw ParameterError("ProfileTable: sigma outside the table");
    const double h = sigma_[1] - sigma_[0];
    std::size_t k = std::min(n - 1, static_cast<std::size_t>(s / h));
    const double u = (s - sigma_[k]) / h;
    const double h00 = 2 * u * u * u - 3 * u * u + 1, h10 = u * u * u - 2 * u * u + u;
    const double h01 = -2 * u * u * u + 3 * u * u, h11 = u * u * u - u * u;
    const double odd = h00 * value_[k] + h10 * h * slope_[k] + h01 * value_[k + 1] + h11 * h * slope_[k + 1];
    return (sigma < 0.0 ? -odd : odd) + linear_ * s * s;
}

double ProfileTable::value_at_base(double base, bool upper) const {
    const double x = std::max(0.0, (base - anchor_) / orient_);
    const double s = std::sqrt(x);
    return at_sigma(upper ? s : -s);
}

SurfaceMesh mesh_catenoid(const CatenoidSpec& spec, double rho_max, int rows, int cols) {
    const ProfileTable table = ProfileTable::catenoid(spec, rho_max);
    const double smax = table.sigma_max();
    return make_grid_mesh(
        Model::Cylinder, rows, cols, true,
        [&](int i, int j) {
            const double sigma = -smax + 2.0 * smax * i / (rows - 1);
            const double rho = table.base_variable(sigma);
            const double phi = 2.0 * kPi * j / cols;
            const double r = std::tanh(0.5 * rho);
            return AmbientPoint{{Model::Cylinder, r * std::cos(phi), r * std::sin(phi)}, table.at_sigma(sigma)};
        },
        spec.sp);
}

namespace {

GridVertexFn invariant_vertices(const InvariantSurfaceSpec& spec, const ProfileTable& table, double phi_min,
                                double phi_max, int rows, int cols) {
    const double smax = table.sigma_max();
    double s_lo = -smax, s_hi = smax;
    if (spec.side == Sheet::Plus) s_lo = 0.0;
    if (spec.side == Sheet::Minus) s_hi = 0.0;
    return [=, &table](int i, int j) {
        const double sigma = s_lo + (s_hi - s_lo) * i / (rows - 1);
        const double theta = table.base_variable(sigma);
        const double phi = phi_min + (phi_max - phi_min) * j / (cols - 1);
        const double r = std::exp(phi);
        double u = table.at_sigma(sigma);
        double th = theta;
        if (spec.mirror) {
            th = kPi - theta;
            u = -u;
        }
        return AmbientPoint{{Model::HalfSpace, r * std::cos(th) + spec.s, r * std::sin(th)}, u};
    };
}

}  // namespace

SurfaceMesh mesh_invariant_surface(const InvariantSurfaceSpec& spec, double phi_min, double phi_max,
                                   double theta_min, int rows, int cols) {
    if (!(phi_max > phi_min)) throw ParameterError("mesh_invariant_surface: empty phi range");
    const ProfileTable table = ProfileTable::invariant(spec, theta_min);
    return make_grid_mesh(Model::HalfSpace, rows, cols, false,
                          invariant_vertices(spec, table, phi_min, phi_max, rows, cols), spec.sp);
}

SurfaceMesh leaf_mesh(const LeafSpec& leaf, double phi_min, double phi_max, double theta_min, int rows, int cols) {
    if (!(leaf.lambda > 0.0)) throw ParameterError("leaf_mesh: lambda must be positive");
    if (!(phi_max > phi_min)) throw ParameterError("leaf_mesh: empty phi range");
    const ProfileTable table = ProfileTable::invariant(leaf.base, theta_min);
    const auto base = invariant_vertices(leaf.base, table, phi_min, phi_max, rows, cols);
    const AmbientIsometry iso = compose(scale_isometry(leaf.lambda), translation_isometry_Ls(leaf.base.s));
    const SpaceParams sp = leaf.base.sp;
    return make_grid_mesh(Model::HalfSpace, rows, cols, false, [&](int i, int j) { return apply(iso, base(i, j), sp); },
                          sp);
}

SurfaceMesh convert_surface_to_cylinder(const SurfaceMesh& mesh, const SpaceParams& sp) {
    if (mesh.model != Model::HalfSpace) throw ParameterError("convert_surface_to_cylinder expects a half-space mesh");
    SurfaceMesh out = mesh;
    out.model = Model::Cylinder;
    for (auto& v : out.vertices) v = to_cylinder(v, sp);
    compute_normals(out, sp);
    return out;
}

}  // namespace etau
