#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "etau/foliation.hpp"
#include "etau/graph.hpp"
#include "etau/solver.hpp"

// Property suites shared by the CLI verify command and the test programs.
namespace etau {

struct LimitsReport {
    double tau = 0.0;
    double h_large = 0.0;  // invariant_height(1e4)
    double h_limit = 0.0;  // (pi/2) sqrt(1 + 4 tau^2)
    double H_large = 0.0;  // catenoid_height(1e3)
    double H_limit = 0.0;  // pi sqrt(1 + 4 tau^2)
    bool pass = false;     // |h - limit| < 1e-3 and |H - limit| < 5e-2
};

LimitsReport verify_limits(const SpaceParams& sp);

struct PullbackRow {
    std::string family;
    int samples = 0;
    double max_residual = 0.0;
    double max_fiber_defect = 0.0;  // images of p and p + c E3 share a base point and differ by |c|
};

/// Phi, F_lambda, L_s, F_z0 and G (plus a composite and an inverse) at n random points each,
/// with random family parameters.
std::vector<PullbackRow> isometry_pullbacks(const SpaceParams& sp, int n, std::uint64_t seed);

/// Exact graph of one sheet on a small disc patch: the catenoid (cylinder model, about
/// hyperbolic distance 1.2 beyond the neck) or the plus sheet of M_h(0) (half-space, at
/// half the gluing angle).
struct OraclePatch {
    GraphFunction exact;
    BasePredicate inner;  // concentric disc of 0.7 times the patch radius
};

OraclePatch oracle_patch(const std::string& surface, double d, const SpaceParams& sp, int n);

struct MinimalityStudy {
    std::string surface;
    std::vector<int> sizes;
    std::vector<double> max_h;   // max |H| over the inner disc
    std::vector<double> orders;  // log2 of successive ratios
};

MinimalityStudy minimality_study(const std::string& surface, double d, const SpaceParams& sp, int n0 = 33,
                                 int refinements = 2);

struct SolverOracle {
    SolveReport report;
    double sup_error = 0.0;
};

/// Solves with the exact boundary trace and compares with the exact graph.
SolverOracle solver_oracle(const std::string& surface, double d, const SpaceParams& sp, int n = 65);

struct LiftReport {
    double closed_vs_quadrature = 0.0;  // semicircle lifts, closed form against horizontal_lift
    double max_variation = 0.0;         // of t along semicircle lifts
    double variation_bound = 0.0;       // 2 |tau| pi
    double vertical_line_spread = 0.0;  // half-plane lines x = x0
    double radial_line_spread = 0.0;    // disc lines through the origin
    double horizontality = 0.0;         // worst horizontality_defect
};

LiftReport verify_lifts(const SpaceParams& sp);

/// Max |t - t0| of the lift of a wavy generic curve; zero at tau = 0.
double generic_lift_spread(const SpaceParams& sp);

struct TransversalityReport {
    double epsilon = 0.0;
    double h0 = 0.0;
    double delta = 0.0;
    double lhs = 0.0;     // transversality_lhs(delta), compared with epsilon^2
    double d = 0.0;       // 1 + delta / 2
    double max_nu = 0.0;  // over the slab portion of M_h(s) with that d
    bool inequality = false;
    bool nu_below = false;
};

TransversalityReport verify_transversality(double epsilon, double h0, const SpaceParams& sp, double step = 1e-4);

struct FoliationReport {
    int points = 0;
    int succeeded = 0;
    double max_residual = 0.0;
    double max_equivariance = 0.0;  // |lambda*(F_mu p) / (mu lambda*(p)) - 1|
    std::vector<std::string> errors;
};

/// Random points of H^2 x [-h0, h0] (t in the inner 98%), seeded.
FoliationReport verify_foliation(const FoliationParams& fp, const SpaceParams& sp, int n, std::uint64_t seed,
                                 double mu = 2.5);

}  // namespace etau
