#pragma once

#include <functional>
#include <vector>

#include "etau/geometry.hpp"

namespace etau {

using BasePredicate = std::function<bool(const BasePoint&)>;

/// Uniform Cartesian grid on [x0, x1] x [y0, y1] with a node mask. Nodes whose eight
/// neighbours all lie in the mask are interior; other mask nodes carry Dirichlet data.
struct GraphDomain {
    Model model = Model::HalfSpace;
    double x0 = 0.0, x1 = 1.0, y0 = 0.5, y1 = 1.5;
    int nx = 2, ny = 2;
    std::vector<unsigned char> mask;

    /// Mask = valid model points satisfying `inside` (all valid points if empty).
    static GraphDomain make(Model m, double x0, double x1, double y0, double y1, int nx, int ny,
                            const BasePredicate& inside = {});

    double hx() const { return (x1 - x0) / (nx - 1); }
    double hy() const { return (y1 - y0) / (ny - 1); }
    std::size_t index(int i, int j) const { return static_cast<std::size_t>(j) * nx + i; }
    BasePoint node(int i, int j) const { return {model, x0 + i * hx(), y0 + j * hy()}; }
    bool in_mask(int i, int j) const {
        return i >= 0 && j >= 0 && i < nx && j < ny && mask[index(i, j)] != 0;
    }
    bool interior(int i, int j) const;
    std::size_t size() const { return static_cast<std::size_t>(nx) * ny; }
};

struct GraphFunction {
    GraphDomain domain;
    std::vector<double> values;

    /// Samples f at mask nodes; other nodes hold NaN.
    static GraphFunction sample(const GraphDomain& dom, const std::function<double(const BasePoint&)>& f);
    double operator()(int i, int j) const { return values[domain.index(i, j)]; }
    double& operator()(int i, int j) { return values[domain.index(i, j)]; }
};

/// Pointwise fields on the grid; NaN where undefined.
struct NodeField {
    GraphDomain domain;
    std::vector<double> values;

    double max_abs() const;
    double max_abs_where(const BasePredicate& keep) const;
};

struct CoefficientFields {
    NodeField a, b, W;
};

/// a = -u_x/lambda - 2 tau lambda_y/lambda^2, b = -u_y/lambda + 2 tau lambda_x/lambda^2,
/// W = sqrt(1 + a^2 + b^2), at interior nodes by central differences.
CoefficientFields horizontal_coefficients(const GraphFunction& u, const SpaceParams& sp);

/// H = (1/(2 lambda^2)) [d_x(lambda a/W) + d_y(lambda b/W)], fluxes at cell-face midpoints.
NodeField mean_curvature(const GraphFunction& u, const SpaceParams& sp);

/// Integral of W lambda^2 over the region (midpoint rule, boundary cells supersampled 8 x 8).
double graph_area(const GraphFunction& u, const SpaceParams& sp, const BasePredicate& region);
/// Hyperbolic area of the region by the same rule with W = 1.
double region_area(const GraphDomain& dom, const BasePredicate& region);

double cylinder_area(double r, double h);

struct AreaReport {
    double graph_area = 0.0;        // lower bound 2 pi (cosh r - 1) per disc
    double disc_lower_bound = 0.0;  // 2 pi (cosh r - 1)
    double cylinder_area = 0.0;     // 4 pi h sinh r
    double threshold = 0.0;         // (cosh r - 1)/sinh r
    bool douglas_pass = false;
};

AreaReport douglas_check(double r, double h);

/// max - min of u over mask nodes in the region.
double variation(const GraphFunction& u, const BasePredicate& region);

/// |grad u| in the hyperbolic metric at an interior node: Euclidean gradient / lambda.
double hyperbolic_gradient_norm(const GraphFunction& u, int i, int j);

/// Bilinear interpolation at an arbitrary point of the grid rectangle.
double interpolate(const GraphFunction& u, const BasePoint& b);

}  // namespace etau
