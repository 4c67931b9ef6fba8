#pragma once

#include <stdexcept>

#include "etau/geometry.hpp"
#include "etau/surfaces.hpp"

namespace etau {

class NotInSlab : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct FoliationParams {
    double d = 1.5;   // invariant surface parameter, h = invariant_height(d)
    double s = 1.0;   // ideal point of the translation axis
    double h0 = 1.0;  // half-height of the foliated slab, h0 < h
};

/// True when p lies in the region enclosed by F_lambda(L_s(M_h(s))): with
/// q = L_s^{-1} F_{1/lambda}(p) and theta the angle of q about (s, 0),
/// theta < arcsin(1/d) and u^-(theta) < t(q) < u^+(theta).
bool leaf_encloses(const InvariantSurfaceSpec& base, double lambda, const AmbientPoint& p);

struct LeafFindResult {
    double lambda = 1.0;
    double residual = 0.0;  // bracket width in log(lambda) times the metric length of the scaling field at p
    int iterations = 0;
};

/// Leaf through p, by bracketing in log(lambda) over [1e-6, 1e6] and bisection.
LeafFindResult foliation_leaf_find(const AmbientPoint& p, const FoliationParams& fp, const SpaceParams& sp,
                                   double tol = 1e-9);

}  // namespace etau
