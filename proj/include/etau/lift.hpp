#pragma once

#include <iosfwd>
#include <vector>

#include "etau/geometry.hpp"

namespace etau {

enum class CurveForm { Generic, VerticalLine, Semicircle, RadialLine };

/// Sampled base curve. Closed forms, when tagged, are evaluated between samples:
///   VerticalLine {x0}:        (x0, s)                       half-plane
///   Semicircle   {R, x0}:     (R cos s + x0, R sin s)       half-plane
///   RadialLine   {angle}:     (s cos angle, s sin angle)     disc
struct PlanarCurve {
    Model model = Model::HalfSpace;
    std::vector<double> params;
    std::vector<BasePoint> points;
    CurveForm form = CurveForm::Generic;
    std::vector<double> form_params;

    static PlanarCurve sample(Model m, CurveForm form, std::vector<double> form_params, double s0, double s1, int n);
};

struct LiftedCurve {
    std::vector<double> params;
    std::vector<AmbientPoint> points;
};

LiftedCurve horizontal_lift(const PlanarCurve& curve, double t0, const SpaceParams& sp);

/// Closed-form lift of theta -> (R cos theta + x0, R sin theta) for theta running from
/// theta_from to theta_to; t(theta) = t0 - 2 tau (theta - theta_from).
LiftedCurve lift_geodesic_semicircle(double R, double x0, double theta_from, double theta_to, double t0,
                                     const SpaceParams& sp, int samples = 513);

/// max |<c', E3>| / |c'| over samples, tangents by five-point differences on uniform
/// parameters; the first and last two samples are excluded.
double horizontality_defect(const LiftedCurve& c, const SpaceParams& sp);

void write_csv(std::ostream& os, const LiftedCurve& c);

}  // namespace etau
