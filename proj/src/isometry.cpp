#include "etau/isometry.hpp"

#include <cmath>
#include <numbers>

namespace etau {

namespace {

constexpr double kPi = std::numbers::pi;

BasePoint reference_point(Model m) { return m == Model::HalfSpace ? BasePoint{m, 0.0, 1.0} : BasePoint{m, 0.0, 0.0}; }

double generic_arg(const AmbientIsometry& iso, const BasePoint& b) {
    return arg_derivative(iso.mobius, b) + iso.branch_offset;
}

// Builds a Generic-rule isometry whose angle function equals `target` at the reference point.
AmbientIsometry matched(const MobiusMap& f, Orientation o, double shift, double target, const std::string& family) {
    AmbientIsometry r;
    r.mobius = f;
    r.orientation = o;
    r.shift = shift;
    r.family = family;
    r.branch_offset = target - arg_derivative(f, reference_point(f.model));
    return r;
}

}  // namespace

MobiusMap MobiusMap::make(Complex a, Complex b, Complex c, Complex d, Model m) {
    const Complex det = a * d - b * c;
    if (std::abs(det) < 1e-300) throw ParameterError("degenerate Mobius map");
    const Complex k = std::sqrt(det);
    MobiusMap r{a / k, b / k, c / k, d / k, m};
    return r;
}

Complex MobiusMap::derivative(Complex z) const {
    const Complex den = c * z + d;
    return 1.0 / (den * den);
}

MobiusMap MobiusMap::inverse() const { return make(d, -b, -c, a, model); }

MobiusMap MobiusMap::then_after(const MobiusMap& o) const {
    if (model != o.model) throw ParameterError("Mobius composition across models");
    return make(a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d, model);
}

double arg_derivative(const MobiusMap& m, const BasePoint& b) {
    validate(b);
    const Complex z = to_complex(b);
    const Complex w = m.c * z + m.d;
    if (m.model == Model::HalfSpace) {
        return -2.0 * std::arg(w);
    }
    if (std::abs(m.d) == 0.0) throw ParameterError("disc Mobius map with d = 0 is not an automorphism");
    return -2.0 * (std::arg(m.d) + std::arg(w / m.d));
}

Complex reflect(Model m, Complex z) { return m == Model::HalfSpace ? -std::conj(z) : std::conj(z); }

MobiusMap reflect_conjugate(const MobiusMap& f) {
    if (f.model == Model::HalfSpace)
        return MobiusMap::make(std::conj(f.a), -std::conj(f.b), -std::conj(f.c), std::conj(f.d), f.model);
    return MobiusMap::make(std::conj(f.a), std::conj(f.b), std::conj(f.c), std::conj(f.d), f.model);
}

double arg_derivative_Ls(const BasePoint& b) {
    validate(b);
    double v = std::atan2(-2.0 * b.x * b.y, b.x * b.x - b.y * b.y);
    if (v > 0.0) v -= 2.0 * kPi;
    return v;
}

double arg_derivative_Fz0(const BasePoint& z0, const BasePoint& b) {
    validate(b);
    const double X = z0.x * b.x + z0.y * b.y - 1.0;
    const double Y = b.x * z0.y - z0.x * b.y;
    return kPi + std::atan2(2.0 * X * Y, X * X - Y * Y);
}

double arg_derivative(const AmbientIsometry& iso, const BasePoint& b) {
    switch (iso.rule) {
        case AngleRule::TranslationLs:
            return arg_derivative_Ls(b);
        case AngleRule::DiscPointFz0:
            return arg_derivative_Fz0({Model::Cylinder, iso.params.at(0), iso.params.at(1)}, b);
        case AngleRule::Generic:
            break;
    }
    return generic_arg(iso, b);
}

BasePoint apply_base(const AmbientIsometry& iso, const BasePoint& b) {
    if (b.model != iso.model()) throw ParameterError("isometry applied to a point of the other model");
    validate(b);
    Complex w = iso.mobius(to_complex(b));
    if (iso.orientation == Orientation::Reversing) w = reflect(b.model, w);
    const BasePoint r = from_complex(b.model, w);
    validate(r);
    return r;
}

AmbientPoint apply(const AmbientIsometry& iso, const AmbientPoint& p, const SpaceParams& sp) {
    validate(p);
    const BasePoint base = apply_base(iso, p.base);
    const double ang = 2.0 * sp.tau * arg_derivative(iso, p.base);
    const double t = iso.orientation == Orientation::Direct ? p.t - ang + iso.shift : -p.t + ang + iso.shift;
    AmbientPoint r{base, t};
    validate(r);
    return r;
}

AmbientIsometry compose(const AmbientIsometry& A, const AmbientIsometry& B) {
    if (A.model() != B.model()) throw ParameterError("compose: model mismatch");
    const Model m = A.model();
    const BasePoint ref = reference_point(m);
    const BasePoint mid = apply_base(B, ref);
    const double argB = arg_derivative(B, ref);
    const double argA = arg_derivative(A, mid);
    const bool a_dir = A.orientation == Orientation::Direct;
    const bool b_dir = B.orientation == Orientation::Direct;
    const std::string fam = "composite";
    if (a_dir && b_dir)
        return matched(A.mobius.then_after(B.mobius), Orientation::Direct, A.shift + B.shift, argA + argB, fam);
    if (!a_dir && b_dir)
        return matched(A.mobius.then_after(B.mobius), Orientation::Reversing, A.shift - B.shift, argA + argB, fam);
    const MobiusMap ft = reflect_conjugate(A.mobius).then_after(B.mobius);
    if (a_dir)
        return matched(ft, Orientation::Reversing, A.shift + B.shift, argB - argA, fam);
    return matched(ft, Orientation::Direct, A.shift - B.shift, argB - argA, fam);
}

AmbientIsometry inverse(const AmbientIsometry& iso) {
    const Model m = iso.model();
    const BasePoint ref = reference_point(m);
    const MobiusMap finv = iso.mobius.inverse();
    if (iso.orientation == Orientation::Direct) {
        // F^{-1}(w, s) = (f^{-1} w, s + 2 tau arg f'(f^{-1} w) - c)
        const BasePoint z = from_complex(m, finv(to_complex(ref)));
        return matched(finv, Orientation::Direct, -iso.shift, -arg_derivative(iso, z), "inverse");
    }
    // G^{-1}(w, s) = (R f~^{-1} w, -s + 2 tau arg f'(f^{-1} R w) + c)
    const BasePoint z = from_complex(m, finv(reflect(m, to_complex(ref))));
    return matched(reflect_conjugate(finv), Orientation::Reversing, iso.shift, arg_derivative(iso, z), "inverse");
}

AmbientIsometry identity_isometry(Model m) {
    AmbientIsometry r;
    r.mobius = MobiusMap::identity(m);
    r.family = "identity";
    return r;
}

AmbientIsometry vertical_shift(Model m, double c) {
    AmbientIsometry r = identity_isometry(m);
    r.shift = c;
    r.family = "vertical_shift";
    r.params = {c};
    return r;
}

AmbientIsometry scale_isometry(double lambda) {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) throw ParameterError("scale_isometry: lambda must be positive");
    AmbientIsometry r;
    r.mobius = MobiusMap::make(lambda, 0.0, 0.0, 1.0, Model::HalfSpace);
    r.family = "scale";
    r.params = {lambda};
    return r;
}

AmbientIsometry translation_isometry_Ls(double s) {
    if (!(s > 0.0) || !std::isfinite(s)) throw ParameterError("translation_isometry_Ls: s must be positive");
    AmbientIsometry r;
    r.mobius = MobiusMap::make(0.5 * s, -s * s, 1.0, 0.0, Model::HalfSpace);
    r.rule = AngleRule::TranslationLs;
    r.family = "Ls";
    r.params = {s};
    return r;
}

AmbientIsometry disc_point_isometry_Fz0(const BasePoint& z0, const SpaceParams& sp) {
    if (z0.model != Model::Cylinder) throw ParameterError("disc_point_isometry_Fz0: z0 must be a disc point");
    validate(z0);
    const Complex c0 = to_complex(z0);
    AmbientIsometry r;
    r.mobius = MobiusMap::make(1.0, -c0, std::conj(c0), -1.0, Model::Cylinder);
    r.rule = AngleRule::DiscPointFz0;
    r.shift = 2.0 * sp.tau * kPi;
    r.family = "Fz0";
    r.params = {z0.x, z0.y};
    // the generic rule agrees with the closed form once offset by 2 pi
    r.branch_offset = 2.0 * kPi;
    return r;
}

AmbientIsometry halfplane_graph_isometry_G(double x0, double y0, double u0) {
    if (!(y0 > 0.0) || !std::isfinite(y0) || !std::isfinite(x0)) throw ParameterError("halfplane_graph_isometry_G: y0 must be positive");
    AmbientIsometry r;
    r.mobius = MobiusMap::make(y0, x0, 0.0, 1.0, Model::HalfSpace);
    r.shift = u0;
    r.family = "G";
    r.params = {x0, y0, u0};
    return r;
}

AmbientIsometry disc_rotation(double angle, const SpaceParams& sp) {
    AmbientIsometry r;
    r.mobius = MobiusMap::make(std::polar(1.0, angle), 0.0, 0.0, 1.0, Model::Cylinder);
    r.branch_offset = angle - arg_derivative(r.mobius, {Model::Cylinder, 0.0, 0.0});
    r.shift = 2.0 * sp.tau * angle;
    r.family = "rotation";
    r.params = {angle};
    return r;
}

AmbientIsometry disc_translation(const BasePoint& p) {
    if (p.model != Model::Cylinder) throw ParameterError("disc_translation: p must be a disc point");
    validate(p);
    const Complex c0 = to_complex(p);
    AmbientIsometry r;
    r.mobius = MobiusMap::make(1.0, c0, std::conj(c0), 1.0, Model::Cylinder);
    r.family = "disc_translation";
    r.params = {p.x, p.y};
    return r;
}

AmbientIsometry reversing_isometry(const MobiusMap& f, double shift) {
    AmbientIsometry r;
    r.mobius = f;
    r.orientation = Orientation::Reversing;
    r.shift = shift;
    r.family = "reversing";
    return r;
}

double pullback_residual(const AmbientIsometry& iso, const AmbientPoint& p, const SpaceParams& sp) {
    const Model m = iso.model();
    const CoordinateMap f = [&](const Vec3& c) { return apply(iso, AmbientPoint::from_coords(m, c), sp).coords(); };
    return pullback_residual(f, p, m, sp);
}

}  // namespace etau
