#pragma once

#include <utility>
#include <vector>

#include "etau/geometry.hpp"
#include "etau/mesh.hpp"

namespace etau {

// ---- rotational catenoids C_d (cylinder model, axis through the origin) ----

struct CatenoidSpec {
    double d = 1.0;
    SpaceParams sp;
};

/// Hyperbolic radius of the neck, arsinh(d).
double catenoid_neck(double d);
/// u'(rho) = d sqrt(1 + 4 tau^2 tanh^2(rho/2)) / sqrt(sinh^2 rho - d^2).
double catenoid_slope(const CatenoidSpec& spec, double rho);
/// u(rho) = integral from the neck to rho of catenoid_slope.
double catenoid_profile(const CatenoidSpec& spec, double rho);
/// Vertical distance between the two asymptotic ends (twice the one-sheet integral).
double catenoid_height(const CatenoidSpec& spec);
/// rho > neck with u(rho) = level; level must be below catenoid_height / 2.
double catenoid_radius_for_level(const CatenoidSpec& spec, double level);

// ---- invariant surfaces M_h(s) (half-space model) ----

enum class Sheet { Plus, Minus, Both };

struct InvariantSurfaceSpec {
    double d = 2.0;
    double s = 1.0;
    SpaceParams sp;
    Sheet side = Sheet::Both;
    /// Reflected variant over the domain pi - arcsin(1/d) < theta < pi.
    bool mirror = false;
};

/// arcsin(1/d), the angle of the equidistant along which the sheets meet.
double invariant_angle(double d);
/// u^+ (side Plus) or u^- (side Minus), normalized so both vanish at theta = arcsin(1/d):
///   u^+ = I(theta) + 2 tau (a - theta),  u^- = -I(theta) + 2 tau (a - theta),
/// I(theta) the integral from theta to a of d sqrt(1 + 4 tau^2 cos^2) / sqrt(1 - d^2 sin^2).
double invariant_profile(const InvariantSurfaceSpec& spec, double theta);
double invariant_profile_derivative(const InvariantSurfaceSpec& spec, double theta);
double invariant_height(double d, const SpaceParams& sp);
/// Same height through the substitution v = d sin(psi) - 1.
double invariant_height_substituted(double d, const SpaceParams& sp);
/// d > 1 with invariant_height(d) = h; needs h > (pi/2) sqrt(1 + 4 tau^2).
double invariant_d_for_height(double h, const SpaceParams& sp);

double normal_vertical_component(const InvariantSurfaceSpec& spec, double theta);
/// (<V, E3>, <W, E3>) for the plus sheet (V flips sign on the minus sheet).
std::pair<double, double> tangent_vertical_components(const InvariantSurfaceSpec& spec, double theta);

/// Left side of the delta-epsilon transversality inequality.
double transversality_lhs(double delta, double h0, const SpaceParams& sp);
double transversality_delta(double epsilon, double h0, const SpaceParams& sp);
/// Largest |nu| over both sheets at angles with |u| <= h0, theta-grid step `step`.
double transversality_max_nu(double d, double h0, const SpaceParams& sp, double step = 1e-4);

// ---- tabulated profiles in the signed variable sigma ----

/// Hermite table of a profile in sigma; sigma >= 0 is the upper (plus) sheet.
class ProfileTable {
public:
    ProfileTable() = default;
    static ProfileTable catenoid(const CatenoidSpec& spec, double rho_max, int intervals = 4096);
    static ProfileTable invariant(const InvariantSurfaceSpec& spec, double theta_min, int intervals = 4096);

    /// Profile value at signed sigma (odd part plus the 2 tau sigma^2 term for M_h).
    double at_sigma(double sigma) const;
    double sigma_max() const { return sigma_.back(); }
    /// Catenoid: rho(sigma) = neck + sigma^2; invariant: theta(sigma) = a - sigma^2.
    double base_variable(double sigma) const { return anchor_ + orient_ * sigma * sigma; }
    double value_at_base(double base, bool upper) const;

private:
    std::vector<double> sigma_, value_, slope_;
    double anchor_ = 0.0;
    double orient_ = 1.0;
    double linear_ = 0.0;  // coefficient of sigma^2 added to both sheets
};

// ---- meshes ----

SurfaceMesh mesh_catenoid(const CatenoidSpec& spec, double rho_max, int rows = 256, int cols = 256);
SurfaceMesh mesh_invariant_surface(const InvariantSurfaceSpec& spec, double phi_min, double phi_max,
                                   double theta_min, int rows = 256, int cols = 256);

struct LeafSpec {
    double lambda = 1.0;
    InvariantSurfaceSpec base;
};

/// Mesh of F_lambda(L_s(M_h(s))).
SurfaceMesh leaf_mesh(const LeafSpec& leaf, double phi_min, double phi_max, double theta_min, int rows = 256,
                      int cols = 256);

SurfaceMesh convert_surface_to_cylinder(const SurfaceMesh& mesh, const SpaceParams& sp);

}  // namespace etau
