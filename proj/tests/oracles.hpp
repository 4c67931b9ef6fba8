#pragma once

// Reference values computed independently of the library.

#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/quadrature/tanh_sinh.hpp>

namespace oracle {

/// K(k) = pi / (2 AGM(1, sqrt(1 - k^2))).
inline double elliptic_K(double k) {
    double a = 1.0, b = std::sqrt(1.0 - k * k);
    for (int i = 0; i < 64 && std::abs(a - b) > 1e-16 * a; ++i) {
        const double m = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = m;
    }
    return std::numbers::pi / (2.0 * a);
}

/// integral over (0, a) of d sqrt(1 + 4 tau^2 cos^2 t) / sqrt(1 - d^2 sin^2 t), a = arcsin(1/d).
inline double invariant_half_height(double d, double tau) {
    boost::math::quadrature::tanh_sinh<double> ts;
    const double a = std::asin(1.0 / d);
    return ts.integrate(
        [&](double t, double tc) {
            const double c = std::cos(t);
            // near the upper end use the complement: 1 - d^2 sin^2 t = (d sin a)^2 - (d sin t)^2
            const double s = std::sin(t);
            const double gap = tc > 0.0 && t > 0.5 * a ? d * d * std::sin(tc) * std::sin(2.0 * a - tc) : 1.0 - d * d * s * s;
            return d * std::sqrt(1.0 + 4.0 * tau * tau * c * c) / std::sqrt(gap);
        },
        0.0, a);
}

/// integral over (r0, inf) of d sqrt(1 + 4 tau^2 tanh^2(r/2)) / sqrt(sinh^2 r - d^2), r0 = arsinh d.
inline double catenoid_half_height(double d, double tau) {
    boost::math::quadrature::tanh_sinh<double> ts;
    const double r0 = std::asinh(d);
    // r = r0 + x, sinh^2 r - d^2 = sinh(x) sinh(2 r0 + x)
    const auto f = [&](double x) {
        const double th = std::tanh(0.5 * (r0 + x));
        return d * std::sqrt(1.0 + 4.0 * tau * tau * th * th) / std::sqrt(std::sinh(x) * std::sinh(2.0 * r0 + x));
    };
    return ts.integrate(f, 0.0, std::numeric_limits<double>::infinity());
}

}  // namespace oracle
