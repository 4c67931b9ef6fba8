#pragma once

#include <complex>
#include <string>
#include <vector>

#include "etau/geometry.hpp"

namespace etau {

using Complex = std::complex<double>;

inline Complex to_complex(const BasePoint& b) { return {b.x, b.y}; }
inline BasePoint from_complex(Model m, Complex z) { return {m, z.real(), z.imag()}; }

/// z -> (az + b)/(cz + d), normalized so that ad - bc = 1.
struct MobiusMap {
    Complex a{1.0}, b{0.0}, c{0.0}, d{1.0};
    Model model = Model::HalfSpace;

    static MobiusMap make(Complex a, Complex b, Complex c, Complex d, Model m);
    static MobiusMap identity(Model m) { return make(1.0, 0.0, 0.0, 1.0, m); }

    Complex operator()(Complex z) const { return (a * z + b) / (c * z + d); }
    Complex derivative(Complex z) const;
    MobiusMap inverse() const;
    /// this o other
    MobiusMap then_after(const MobiusMap& other) const;
};

/// Continuous arg f'(z) = -2 arg(cz + d) on the model domain.
double arg_derivative(const MobiusMap& m, const BasePoint& b);

/// Conjugate of f by the model's reflection (z -> -conj z on the half-plane, conj z on the disc).
MobiusMap reflect_conjugate(const MobiusMap& m);
Complex reflect(Model m, Complex z);

enum class Orientation { Direct, Reversing };

/// Which angle function supplies arg f'.
enum class AngleRule { Generic, TranslationLs, DiscPointFz0 };

/// Direct:    (z, t) -> (f(z),     t - 2 tau arg f'(z) + shift)
/// Reversing: (z, t) -> (R f(z), -t + 2 tau arg f'(z) + shift), R the model reflection.
struct AmbientIsometry {
    MobiusMap mobius;
    Orientation orientation = Orientation::Direct;
    double shift = 0.0;
    double branch_offset = 0.0;
    AngleRule rule = AngleRule::Generic;
    std::string family = "generic";
    std::vector<double> params;

    Model model() const { return mobius.model; }
};

double arg_derivative(const AmbientIsometry& iso, const BasePoint& b);
BasePoint apply_base(const AmbientIsometry& iso, const BasePoint& b);
AmbientPoint apply(const AmbientIsometry& iso, const AmbientPoint& p, const SpaceParams& sp);

/// A o B.
AmbientIsometry compose(const AmbientIsometry& A, const AmbientIsometry& B);
AmbientIsometry inverse(const AmbientIsometry& iso);

AmbientIsometry identity_isometry(Model m);
AmbientIsometry vertical_shift(Model m, double c);
/// F_lambda(x, y, t) = (lambda x, lambda y, t) on the half-space.
AmbientIsometry scale_isometry(double lambda);
/// L_s generated by f_s(z) = -s^2/z + s/2 on the half-space.
AmbientIsometry translation_isometry_Ls(double s);
/// F_{z0} generated by f(z) = (z - z0)/(conj(z0) z - 1), shift 2 tau pi.
AmbientIsometry disc_point_isometry_Fz0(const BasePoint& z0, const SpaceParams& sp);
/// (z, t) -> (y0 z + x0, t + u0) on the half-space.
AmbientIsometry halfplane_graph_isometry_G(double x0, double y0, double u0);
/// Rotation of the cylinder about the t-axis; fiber heights are unchanged.
AmbientIsometry disc_rotation(double angle, const SpaceParams& sp);
/// Disc automorphism z -> (z + p)/(1 + conj(p) z) with zero shift.
AmbientIsometry disc_translation(const BasePoint& p);
/// Reversing isometry built from f, e.g. (z, t) -> (-conj z, -t) for f = id on the half-space.
AmbientIsometry reversing_isometry(const MobiusMap& f, double shift);

double pullback_residual(const AmbientIsometry& iso, const AmbientPoint& p, const SpaceParams& sp);

/// Closed-form angle functions of the two special families.
double arg_derivative_Ls(const BasePoint& b);
double arg_derivative_Fz0(const BasePoint& z0, const BasePoint& b);

}  // namespace etau
