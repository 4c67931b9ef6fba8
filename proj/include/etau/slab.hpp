#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "etau/graph.hpp"
#include "etau/isometry.hpp"
#include "etau/mesh.hpp"
#include "etau/surfaces.hpp"

namespace etau {

class InfeasibleError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An entire graph: grid samples over the window, plus the closed form when known.
struct BoundingGraph {
    GraphFunction samples;
    std::function<double(const BasePoint&)> exact;

    double height(const BasePoint& b) const { return exact ? exact(b) : interpolate(samples, b); }
};

/// Model annulus: the catenoid C_d cut at hyperbolic radius rho_max (cylinder model).
struct AnnulusModel {
    CatenoidSpec catenoid;
    double rho_max = 1.0;
    int rows = 33;
    int cols = 32;

    double half_height() const { return catenoid_profile(catenoid, rho_max); }
};

struct SlabSpec {
    SpaceParams sp;
    Model model = Model::Cylinder;
    BoundingGraph lower, upper;
    AnnulusModel annulus;
    std::string construction;
    double window_radius = 10.0;  // hyperbolic radius of the sampled window about the origin
    double nominal_height = 0.0;
};

struct BoundingReport {
    double h0 = 0.0;
    double c = 0.0;
    double min_gap = 0.0;
    bool disjoint = false;
};

BoundingReport check_bounding_graphs(const SlabSpec& slab);

/// Isometry carrying the model annulus onto C(p), and the model point sent to p.
struct AnnulusPlacement {
    AmbientIsometry iso;
    AmbientPoint model_point;
};

/// Places the model annulus through p: the neck circle is centred so that a point of the
/// catenoid at height t(p) - mid(p) lands on p, mid(p) the mean of the two graphs at p.
AnnulusPlacement place_annulus(const SlabSpec& slab, const AmbientPoint& p);
SurfaceMesh annulus_mesh(const SlabSpec& slab, const AnnulusPlacement& placement);

struct AnnulusCheck {
    AmbientPoint p;
    bool placed = false;
    double distance = 0.0;  // metric distance from p to its image point on C(p)
    double margin_above = 0.0;  // min over the top boundary of t - upper
    double margin_below = 0.0;  // min over the bottom boundary of lower - t
    bool contains_p = false;
    bool boundary_above = false;
    bool boundary_below = false;
    std::string error;
};

struct SlabReport {
    BoundingReport bounds;
    std::vector<AnnulusCheck> checks;
    double isometry_spread = 0.0;  // max relative deviation of paired edge lengths
    bool isometric = false;
    bool pass = false;
};

/// Points strictly between the graphs: hyperbolic radius uniform in [0, window radius].
std::vector<AmbientPoint> sample_interior_points(const SlabSpec& slab, int n, std::uint64_t seed);

/// Runs the annulus conditions at every point and compares edge-length spectra of
/// consecutive annuli. Throws if a point is not strictly between the graphs.
SlabReport check_annulus_family(const SlabSpec& slab, const std::vector<AmbientPoint>& points);

/// Bounding-graph check, then (if disjoint) the annulus family at n seeded points.
SlabReport audit_slab(const SlabSpec& slab, int n, std::uint64_t seed);

/// Sorted metric lengths of the images under iso of the model mesh edges (Gauss-Legendre quadrature of the image speed).
std::vector<double> edge_length_spectrum(const SlabSpec& slab, const AmbientIsometry& iso, int subdivisions = 4);

struct Example1Info {
    double slab_height = 0.0;
    double d_eps = 0.0;
    double catenoid_half_height = 0.0;
    double annulus_half_height = 0.0;
};

/// Flat slab |t| < k with 2k = pi sqrt(1 + 4 tau^2) - |tau| pi - epsilon in the cylinder.
SlabSpec build_example1(const SpaceParams& sp, double epsilon, Example1Info* info = nullptr,
                        double window_radius = 10.0);

enum class GraphChoice { Linear, SineIntegral };

struct Example2Config {
    GraphChoice graph = GraphChoice::Linear;
    double alpha = 0.4;
    double beta = 0.0;
    double r = 1.0;
    double h = 0.45;
    double C = 0.2;
    double window_radius = 10.0;
    int grid = 129;
};

struct Example2Feasibility {
    bool feasible = false;
    std::string violated;
    double two_C_r = 0.0;
    double threshold = 0.0;      // (cosh r - 1)/sinh r
    double gradient_sup = 0.0;   // measured sup |grad u| over the window
    double h_prime = 0.0;        // (h + V)/2 with V = 2 C r
    AreaReport douglas;
};

Example2Feasibility example2_feasibility(const Example2Config& cfg);
/// Slab between u - h' and u + h'. Throws InfeasibleError naming the violated inequality.
SlabSpec build_example2(const SpaceParams& sp, const Example2Config& cfg, Example2Feasibility* info = nullptr);

/// Annulus cut so that its half-height is `fraction` of the original.
SlabSpec shrink_annuli(const SlabSpec& slab, double fraction);
/// Replaces the upper graph by the lower one.
SlabSpec overlap_graphs(const SlabSpec& slab);

struct SeparationReport {
    std::string status;  // two_components, no_intersection or inconclusive
    int inside_components = 0;
    int outside_components = 0;
    int interface_edges = 0;
};

SeparationReport graph_separation_probe(const GraphFunction& S, const LeafSpec& leaf);

}  // namespace etau
