#include "etau/quadrature.hpp"

#include <cmath>
#include <stdexcept>

#include "etau/geometry.hpp"

namespace etau {

namespace {

struct Panel {
    double a, m, b;
    double fa, fm, fb;
    double whole;
};

double simpson(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double refine(const ScalarFn& f, const Panel& p, double tol, int depth, long& budget) {
    const double lm = 0.5 * (p.a + p.m);
    const double rm = 0.5 * (p.m + p.b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(p.a, p.m, p.fa, flm, p.fm);
    const double right = simpson(p.m, p.b, p.fm, frm, p.fb);
    const double delta = left + right - p.whole;
    budget -= 2;
    if (depth <= 0 || budget <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return refine(f, {p.a, lm, p.m, p.fa, flm, p.fm, left}, 0.5 * tol, depth - 1, budget) +
           refine(f, {p.m, rm, p.b, p.fm, frm, p.fb, right}, 0.5 * tol, depth - 1, budget);
}

}  // namespace

double adaptive_simpson(const ScalarFn& f, double a, double b, const QuadratureOptions& opt) {
    if (!std::isfinite(a) || !std::isfinite(b)) throw ParameterError("adaptive_simpson: infinite limits");
    if (a == b) return 0.0;
    const int n = std::max(1, opt.initial_panels);
    const double h = (b - a) / n;
    double total = 0.0;
    long budget = opt.max_evaluations;
    double fa = f(a);
    for (int k = 0; k < n; ++k) {
        const double pa = a + k * h;
        const double pb = (k + 1 == n) ? b : a + (k + 1) * h;
        const double pm = 0.5 * (pa + pb);
        const double fm = f(pm);
        const double fb = f(pb);
        const Panel panel{pa, pm, pb, fa, fm, fb, simpson(pa, pb, fa, fm, fb)};
        total += refine(f, panel, opt.abs_tol / n, opt.max_depth, budget);
        fa = fb;
    }
    return total;
}

std::vector<double> cumulative_integral(const ScalarFn& f, const std::vector<double>& params,
                                        const QuadratureOptions& opt) {
    std::vector<double> out(params.size(), 0.0);
    QuadratureOptions local = opt;
    local.initial_panels = 1;
    for (std::size_t k = 1; k < params.size(); ++k) {
        if (!(params[k] > params[k - 1])) throw ParameterError("cumulative_integral: parameters must increase");
        out[k] = out[k - 1] + adaptive_simpson(f, params[k - 1], params[k], local);
    }
    return out;
}

double sine_integral(double x) {
    if (x == 0.0) return 0.0;
    const auto sinc = [](double t) { return std::abs(t) < 1e-8 ? 1.0 - t * t / 6.0 : std::sin(t) / t; };
    QuadratureOptions opt;
    opt.abs_tol = 1e-13;
    opt.initial_panels = std::max(8, static_cast<int>(std::abs(x) * 2.0));
    return adaptive_simpson(sinc, 0.0, x, opt);
}

double bisect(const ScalarFn& f, double a, double b, double xtol, int max_iter) {
    double fa = f(a);
    double fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0) == (fb > 0)) throw ParameterError("bisect: no sign change on the bracket");
    for (int it = 0; it < max_iter && std::abs(b - a) > xtol; ++it) {
        const double m = 0.5 * (a + b);
        const double fm = f(m);
        if (fm == 0.0) return m;
        if ((fm > 0) == (fa > 0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

}  // namespace etau
