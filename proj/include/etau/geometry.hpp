#pragma once

#include <array>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace etau {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// Raised for points outside (or within 1e-12 of the boundary of) a model domain.
class InvalidPoint : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised for parameters that violate an operation's precondition.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Bundle curvature of E(-1,tau). tau = 0 is the product H^2 x R.
struct SpaceParams {
    double tau = 0.0;
};

/// The two coordinate models: upper half-plane x R and Poincare disc x R.
enum class Model { HalfSpace, Cylinder };

std::string to_string(Model m);
Model model_from_string(const std::string& s);

struct BasePoint {
    Model model = Model::HalfSpace;
    double x = 0.0;
    double y = 1.0;
};

struct AmbientPoint {
    BasePoint base;
    double t = 0.0;

    Model model() const { return base.model; }
    Vec3 coords() const { return {base.x, base.y, t}; }
    static AmbientPoint from_coords(Model m, const Vec3& c) { return {{m, c.x(), c.y()}, c.z()}; }
};

/// Vector in the coordinate basis (d/dx, d/dy, d/dt) at a point.
struct TangentVector {
    AmbientPoint at;
    double dx = 0.0;
    double dy = 0.0;
    double dt = 0.0;

    Vec3 vec() const { return {dx, dy, dt}; }
};

/// Components with respect to the orthonormal frame E1, E2, E3.
struct FrameComponents {
    double a1 = 0.0;
    double a2 = 0.0;
    double a3 = 0.0;
};

struct Frame {
    TangentVector e1, e2, e3;
};

/// Conformal factor and its first partials at a base point.
struct ConformalData {
    double lambda;
    double lambda_x;
    double lambda_y;
};

inline constexpr double kBoundaryMargin = 1e-12;

bool is_valid(const BasePoint& b);
void validate(const BasePoint& b);
void validate(const AmbientPoint& p);

double conformal_factor(const BasePoint& b);
ConformalData conformal_data(const BasePoint& b);

/// Coefficients (A, B) of the connection one-form dt + A dx + B dy.
std::array<double, 2> connection_coefficients(const BasePoint& b, const SpaceParams& sp);

/// Matrix of ds^2 = lambda^2 (dx^2 + dy^2) + (dt + A dx + B dy)^2 in the coordinate basis.
Mat3 metric_at(const AmbientPoint& p, const SpaceParams& sp);

Frame frame_at(const AmbientPoint& p, const SpaceParams& sp);
FrameComponents frame_components(const TangentVector& v, const SpaceParams& sp);
double inner(const TangentVector& u, const TangentVector& v, const SpaceParams& sp);

BasePoint project(const AmbientPoint& p);

/// Isometry of H^2 from the half-plane to the disc, and its inverse.
BasePoint half_plane_to_disc(const BasePoint& b);
BasePoint disc_to_half_plane(const BasePoint& b);

/// Model-change isometry Phi (half-space -> cylinder) and its inverse.
AmbientPoint to_cylinder(const AmbientPoint& p, const SpaceParams& sp);
AmbientPoint to_half_space(const AmbientPoint& p, const SpaceParams& sp);
/// Dispatches on the model of p: HalfSpace -> Cylinder or Cylinder -> HalfSpace.
AmbientPoint convert_model(const AmbientPoint& p, const SpaceParams& sp);

double hyperbolic_distance(const BasePoint& b1, const BasePoint& b2);
/// Distance in H^2 (half-plane) from b to the vertical geodesic {x = s}.
double distance_to_vertical_geodesic(const BasePoint& b, double s);

using CoordinateMap = std::function<Vec3(const Vec3&)>;

/// Jacobian by Richardson-extrapolated central differences; the base step is
/// scaled by max(1, |coordinate|).
Mat3 numeric_jacobian(const CoordinateMap& f, const Vec3& at, double base_step = 2e-4);

/// Frobenius norm of J^T G(F(p)) J - G(p) for a coordinate map between models.
double pullback_residual(const CoordinateMap& f, const AmbientPoint& p, Model target,
                         const SpaceParams& sp);

/// Metric length of the straight coordinate segment [a, b], midpoint rule with `pieces` subintervals.
double segment_length(const AmbientPoint& a, const AmbientPoint& b, const SpaceParams& sp,
                      int pieces = 16);

/// Metric length of a polyline through the given points (midpoint metric per chord).
double polyline_length(const std::vector<AmbientPoint>& pts, const SpaceParams& sp);

}  // namespace etau
