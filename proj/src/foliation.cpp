#include "etau/foliation.hpp"

#include <cmath>

#include "etau/isometry.hpp"

namespace etau {

bool leaf_encloses(const InvariantSurfaceSpec& base, double lambda, const AmbientPoint& p) {
    const SpaceParams& sp = base.sp;
    const AmbientIsometry back = inverse(compose(scale_isometry(lambda), translation_isometry_Ls(base.s)));
    const AmbientPoint q = apply(back, p, sp);
    const double theta = std::atan2(q.base.y, q.base.x - base.s);
    const double a = invariant_angle(base.d);
    if (!(theta < a)) return false;
    InvariantSurfaceSpec sheet = base;
    sheet.mirror = false;
    sheet.side = Sheet::Plus;
    if (!(q.t < invariant_profile(sheet, theta))) return false;
    sheet.side = Sheet::Minus;
    return q.t > invariant_profile(sheet, theta);
}

LeafFindResult foliation_leaf_find(const AmbientPoint& p, const FoliationParams& fp, const SpaceParams& sp,
                                   double tol) {
    if (p.model() != Model::HalfSpace) throw ParameterError("foliation_leaf_find expects a half-space point");
    validate(p);
    const double h = invariant_height(fp.d, sp);
    if (!(fp.h0 < h)) throw ParameterError("foliation_leaf_find: h0 must be below h(d)");
    if (std::abs(p.t) > fp.h0) throw NotInSlab("foliation_leaf_find: |t| exceeds h0");
    const InvariantSurfaceSpec base{fp.d, fp.s, sp, Sheet::Both, false};
    const auto inside = [&](double loglam) { return leaf_encloses(base, std::exp(loglam), p); };

    const double lo_end = std::log(1e-6), hi_end = std::log(1e6);
    const int steps = 96;
    double lo = lo_end;
    bool prev = inside(lo);
    double hi = lo;
    bool found = false;
    for (int k = 1; k <= steps; ++k) {
        const double x = lo_end + (hi_end - lo_end) * k / steps;
        const bool cur = inside(x);
        if (cur != prev) {
            lo = lo_end + (hi_end - lo_end) * (k - 1) / steps;
            hi = x;
            found = true;
            break;
        }
        prev = cur;
    }
    if (!found) throw NotInSlab("foliation_leaf_find: no leaf change for lambda in [1e-6, 1e6]");

    const bool lo_inside = inside(lo);
    const TangentVector X{p, p.base.x, p.base.y, 0.0};
    const double speed = std::sqrt(inner(X, X, sp));
    LeafFindResult r;
    while ((hi - lo) * speed > tol && r.iterations < 200) {
        const double m = 0.5 * (lo + hi);
        if (inside(m) == lo_inside) lo = m;
        else hi = m;
        ++r.iterations;
    }
    r.lambda = std::exp(0.5 * (lo + hi));
    r.residual = (hi - lo) * speed;
    return r;
}

}  // namespace etau
