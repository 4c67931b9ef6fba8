#include "etau/geometry.hpp"

#include <cmath>
#include <complex>
#include <sstream>

namespace etau {

std::string to_string(Model m) { return m == Model::HalfSpace ? "HalfSpace" : "Cylinder"; }

Model model_from_string(const std::string& s) {
    if (s == "HalfSpace" || s == "half-space" || s == "half") return Model::HalfSpace;
    if (s == "Cylinder" || s == "cylinder" || s == "disc") return Model::Cylinder;
    throw ParameterError("unknown model '" + s + "'");
}

bool is_valid(const BasePoint& b) {
    if (!std::isfinite(b.x) || !std::isfinite(b.y)) return false;
    if (b.model == Model::HalfSpace) return b.y > kBoundaryMargin;
    return b.x * b.x + b.y * b.y < 1.0 - kBoundaryMargin;
}

void validate(const BasePoint& b) {
    if (!is_valid(b)) {
        std::ostringstream os;
        os.precision(17);
        os << "point (" << b.x << ", " << b.y << ") is outside the " << to_string(b.model)
           << " model domain";
        throw InvalidPoint(os.str());
    }
}

void validate(const AmbientPoint& p) {
    validate(p.base);
    if (!std::isfinite(p.t)) throw InvalidPoint("fiber coordinate is not finite");
}

double conformal_factor(const BasePoint& b) {
    validate(b);
    if (b.model == Model::HalfSpace) return 1.0 / b.y;
    return 2.0 / (1.0 - b.x * b.x - b.y * b.y);
}

ConformalData conformal_data(const BasePoint& b) {
    validate(b);
    if (b.model == Model::HalfSpace) {
        return {1.0 / b.y, 0.0, -1.0 / (b.y * b.y)};
    }
    const double l = 2.0 / (1.0 - b.x * b.x - b.y * b.y);
    // lambda_x = x lambda^2, lambda_y = y lambda^2 in the disc
    return {l, b.x * l * l, b.y * l * l};
}

std::array<double, 2> connection_coefficients(const BasePoint& b, const SpaceParams& sp) {
    // A = 2 tau lambda_y / lambda, B = -2 tau lambda_x / lambda, written without the
    // ratio so no cancellation occurs.
    validate(b);
    if (b.model == Model::HalfSpace) return {-2.0 * sp.tau / b.y, 0.0};
    const double l = 2.0 / (1.0 - b.x * b.x - b.y * b.y);
    return {2.0 * sp.tau * b.y * l, -2.0 * sp.tau * b.x * l};
}

Mat3 metric_at(const AmbientPoint& p, const SpaceParams& sp) {
    validate(p);
    const double l = conformal_factor(p.base);
    const auto [A, B] = connection_coefficients(p.base, sp);
    Mat3 g;
    g << l * l + A * A, A * B, A,
         A * B, l * l + B * B, B,
         A, B, 1.0;
    return g;
}

Frame frame_at(const AmbientPoint& p, const SpaceParams& sp) {
    const ConformalData c = conformal_data(p.base);
    const double il = 1.0 / c.lambda;
    const double il2 = il * il;
    Frame f;
    f.e1 = {p, il, 0.0, -2.0 * sp.tau * il2 * c.lambda_y};
    f.e2 = {p, 0.0, il, 2.0 * sp.tau * il2 * c.lambda_x};
    f.e3 = {p, 0.0, 0.0, 1.0};
    return f;
}

FrameComponents frame_components(const TangentVector& v, const SpaceParams& sp) {
    const double l = conformal_factor(v.at.base);
    const auto [A, B] = connection_coefficients(v.at.base, sp);
    return {l * v.dx, l * v.dy, v.dt + A * v.dx + B * v.dy};
}

double inner(const TangentVector& u, const TangentVector& v, const SpaceParams& sp) {
    return u.vec().dot(metric_at(u.at, sp) * v.vec());
}

BasePoint project(const AmbientPoint& p) { return p.base; }

BasePoint half_plane_to_disc(const BasePoint& b) {
    if (b.model != Model::HalfSpace) throw ParameterError("half_plane_to_disc expects a half-plane point");
    validate(b);
    const double den = b.x * b.x + (b.y + 1.0) * (b.y + 1.0);
    return {Model::Cylinder, 2.0 * b.x / den, (b.x * b.x + b.y * b.y - 1.0) / den};
}

BasePoint disc_to_half_plane(const BasePoint& b) {
    if (b.model != Model::Cylinder) throw ParameterError("disc_to_half_plane expects a disc point");
    validate(b);
    // phi(z) = i (z - i) / (z + i); inverse z = i (1 + m) / (1 - m) with m = -i w
    const std::complex<double> w(b.x, b.y);
    const std::complex<double> I(0.0, 1.0);
    const std::complex<double> m = -I * w;
    const std::complex<double> z = I * (1.0 + m) / (1.0 - m);
    return {Model::HalfSpace, z.real(), z.imag()};
}

AmbientPoint to_cylinder(const AmbientPoint& p, const SpaceParams& sp) {
    if (p.model() != Model::HalfSpace) throw ParameterError("to_cylinder expects a half-space point");
    validate(p);
    const double w = p.t - 4.0 * sp.tau * std::atan(p.base.x / (p.base.y + 1.0));
    AmbientPoint q{half_plane_to_disc(p.base), w};
    validate(q);
    return q;
}

AmbientPoint to_half_space(const AmbientPoint& p, const SpaceParams& sp) {
    if (p.model() != Model::Cylinder) throw ParameterError("to_half_space expects a cylinder point");
    validate(p);
    const BasePoint b = disc_to_half_plane(p.base);
    AmbientPoint q{b, p.t + 4.0 * sp.tau * std::atan(b.x / (b.y + 1.0))};
    validate(q);
    return q;
}

AmbientPoint convert_model(const AmbientPoint& p, const SpaceParams& sp) {
    return p.model() == Model::HalfSpace ? to_cylinder(p, sp) : to_half_space(p, sp);
}

double hyperbolic_distance(const BasePoint& b1, const BasePoint& b2) {
    if (b1.model != b2.model) throw ParameterError("hyperbolic_distance: model mismatch");
    validate(b1);
    validate(b2);
    const double dx = b1.x - b2.x;
    const double dy = b1.y - b2.y;
    const double chord = std::sqrt(dx * dx + dy * dy);
    if (b1.model == Model::HalfSpace) {
        return 2.0 * std::asinh(chord / (2.0 * std::sqrt(b1.y * b2.y)));
    }
    const double s1 = 1.0 - b1.x * b1.x - b1.y * b1.y;
    const double s2 = 1.0 - b2.x * b2.x - b2.y * b2.y;
    return 2.0 * std::asinh(chord / std::sqrt(s1 * s2));
}

double distance_to_vertical_geodesic(const BasePoint& b, double s) {
    if (b.model != Model::HalfSpace) throw ParameterError("distance_to_vertical_geodesic expects a half-plane point");
    validate(b);
    return std::asinh(std::abs(b.x - s) / b.y);
}

namespace {

Mat3 central_jacobian(const CoordinateMap& f, const Vec3& at, double base_step) {
    Mat3 j;
    for (int k = 0; k < 3; ++k) {
        const double h = base_step * std::max(1.0, std::abs(at[k]));
        Vec3 plus = at, minus = at;
        plus[k] += h;
        minus[k] -= h;
        j.col(k) = (f(plus) - f(minus)) / (plus[k] - minus[k]);
    }
    return j;
}

}  // namespace

Mat3 numeric_jacobian(const CoordinateMap& f, const Vec3& at, double base_step) {
    const Mat3 coarse = central_jacobian(f, at, base_step);
    const Mat3 fine = central_jacobian(f, at, 0.5 * base_step);
    return (4.0 * fine - coarse) / 3.0;
}

double pullback_residual(const CoordinateMap& f, const AmbientPoint& p, Model target,
                         const SpaceParams& sp) {
    validate(p);
    const Vec3 x = p.coords();
    const Mat3 j = numeric_jacobian(f, x);
    const AmbientPoint image = AmbientPoint::from_coords(target, f(x));
    const Mat3 diff = j.transpose() * metric_at(image, sp) * j - metric_at(p, sp);
    return diff.norm();
}

double segment_length(const AmbientPoint& a, const AmbientPoint& b, const SpaceParams& sp,
                      int pieces) {
    if (a.model() != b.model()) throw ParameterError("segment_length: model mismatch");
    const Vec3 pa = a.coords();
    const Vec3 delta = (b.coords() - pa) / pieces;
    double len = 0.0;
    for (int k = 0; k < pieces; ++k) {
        const AmbientPoint mid = AmbientPoint::from_coords(a.model(), pa + (k + 0.5) * delta);
        len += std::sqrt(delta.dot(metric_at(mid, sp) * delta));
    }
    return len;
}

double polyline_length(const std::vector<AmbientPoint>& pts, const SpaceParams& sp) {
    double len = 0.0;
    for (std::size_t k = 1; k < pts.size(); ++k) len += segment_length(pts[k - 1], pts[k], sp, 1);
    return len;
}

}  // namespace etau
