#pragma once

#include <functional>
#include <vector>

namespace etau {

using ScalarFn = std::function<double(double)>;

struct QuadratureOptions {
    double abs_tol = 1e-10;
    int max_depth = 48;
    int initial_panels = 8;
    long max_evaluations = 1'000'000;  // refinement stops once spent
};

/// Adaptive Simpson with Richardson correction on each accepted panel.
double adaptive_simpson(const ScalarFn& f, double a, double b, const QuadratureOptions& opt = {});

/// Integrals from params[0] to every params[k] of f; result[0] = 0.
std::vector<double> cumulative_integral(const ScalarFn& f, const std::vector<double>& params,
                                        const QuadratureOptions& opt = {});

/// Si(x) = integral of sin(t)/t from 0 to x.
double sine_integral(double x);

/// Bisection for a sign change of f on [a, b]; f(a) and f(b) must differ in sign.
double bisect(const ScalarFn& f, double a, double b, double xtol = 1e-14, int max_iter = 200);

}  // namespace etau
