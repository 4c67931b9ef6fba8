// Acceptance criteria 1-11. One PASS/FAIL line per criterion; exit status is the number of failures.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>

#include "etau/graph.hpp"
#include "etau/slab.hpp"
#include "etau/surfaces.hpp"
#include "etau/verify.hpp"
#include "oracles.hpp"

using namespace etau;

namespace {

constexpr double kPi = std::numbers::pi;

// Pinned tolerances.
constexpr double kEllipticTol = 1e-8;
constexpr double kInvariantLimitTol = 1e-3;
constexpr double kCatenoidLimitTol = 5e-2;
constexpr double kCrossQuadTol = 1e-8;
constexpr double kMaxH = 1e-3;
constexpr double kOrderLo = 1.7, kOrderHi = 2.3;
constexpr double kPullbackTol = 1e-9;
constexpr double kFiberTol = 1e-12;
constexpr double kLiftTol = 1e-10;
constexpr double kVariationSlack = 1e-12;
constexpr double kLeafTol = 1e-6;
constexpr double kSolverTol = 1e-3;
constexpr double kDouglasTol = 1e-12;

struct Outcome {
    bool pass = true;
    std::ostringstream note;
};

int failures = 0;

void criterion(int id, const char* title, double time_limit, const std::function<void(Outcome&)>& body) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.pass = false;
        o.note << " exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (time_limit > 0.0 && secs >= time_limit) {
        o.pass = false;
        o.note << " over time limit " << time_limit << " s;";
    }
    std::printf("[%s] %2d %s (%.2f s):%s\n", o.pass ? "PASS" : "FAIL", id, title, secs, o.note.str().c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
}

double elapsed(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
    criterion(1, "invariant height equals K(1/d) at tau = 0", 1.0, [](Outcome& o) {
        double worst = 0.0;
        for (double d : {1.1, 2.0, 10.0, 100.0}) worst = std::max(worst, std::abs(invariant_height(d, {0.0}) - oracle::elliptic_K(1.0 / d)));
        o.pass = worst < kEllipticTol;
        o.note << " max |h - K| = " << worst;
    });

    criterion(2, "limits of h(d) and H(d)", 10.0, [](Outcome& o) {
        for (double tau : {0.0, 0.5, 1.0}) {
            const LimitsReport r = verify_limits({tau});
            const double eh = std::abs(r.h_large - r.h_limit), eH = std::abs(r.H_large - r.H_limit);
            o.pass = o.pass && eh < kInvariantLimitTol && eH < kCatenoidLimitTol;
            o.note << " tau=" << tau << ": |h-lim|=" << eh << " |H-lim|=" << eH << ";";
        }
    });

    criterion(3, "direct and substituted height quadratures agree", 0.0, [](Outcome& o) {
        double worst = 0.0;
        for (double d : {1.1, 2.0, 10.0})
            for (double tau : {0.0, 0.5, 1.0})
                worst = std::max(worst, std::abs(invariant_height(d, {tau}) - invariant_height_substituted(d, {tau})));
        o.pass = worst < kCrossQuadTol;
        o.note << " max difference " << worst;
    });

    criterion(4, "minimality residuals and convergence order", 60.0, [](Outcome& o) {
        for (double tau : {0.0, 0.5})
            for (const char* surface : {"catenoid", "invariant"}) {
                const MinimalityStudy st = minimality_study(surface, 2.0, {tau});
                o.pass = o.pass && st.max_h.front() < kMaxH;
                o.note << " " << surface << " tau=" << tau << ": |H|=" << st.max_h.front() << " orders";
                for (double p : st.orders) {
                    o.pass = o.pass && p >= kOrderLo && p <= kOrderHi;
                    o.note << " " << p;
                }
                o.note << ";";
            }
    });

    criterion(5, "isometry pullbacks and fiber preservation", 0.0, [](Outcome& o) {
        for (double tau : {0.0, 0.5, -0.5}) {
            double res = 0.0, fib = 0.0;
            for (const auto& row : isometry_pullbacks({tau}, 1000, 2024)) {
                res = std::max(res, row.max_residual);
                fib = std::max(fib, row.max_fiber_defect);
            }
            o.pass = o.pass && res < kPullbackTol && fib < kFiberTol;
            o.note << " tau=" << tau << ": residual " << res << " fiber " << fib << ";";
        }
    });

    criterion(6, "horizontal lifts", 0.0, [](Outcome& o) {
        for (double tau : {0.0, 0.5, -0.5, 1.0}) {
            const LiftReport r = verify_lifts({tau});
            o.pass = o.pass && r.closed_vs_quadrature < kLiftTol && r.max_variation <= r.variation_bound + kVariationSlack;
            o.note << " tau=" << tau << ": closed-vs-quad " << r.closed_vs_quadrature << " variation " << r.max_variation
                   << "/" << r.variation_bound << ";";
        }
        const double spread = std::max(generic_lift_spread({0.0}), verify_lifts({0.0}).max_variation);
        o.pass = o.pass && spread == 0.0;
        o.note << " tau=0 spread " << spread;
    });

    criterion(7, "transversality estimate", 0.0, [](Outcome& o) {
        for (double tau : {0.0, 0.5}) {
            const TransversalityReport r = verify_transversality(0.5, 1.0, {tau}, 1e-4);
            o.pass = o.pass && r.inequality && r.nu_below;
            o.note << " tau=" << tau << ": delta " << r.delta << " lhs " << r.lhs << " < " << r.epsilon * r.epsilon
                   << ", max nu " << r.max_nu << ";";
        }
    });

    criterion(8, "foliation leaf finding and F_mu equivariance", 0.0, [](Outcome& o) {
        for (double tau : {0.0, 0.5}) {
            const FoliationReport r = verify_foliation({1.5, 1.0, 1.0}, {tau}, 100, 8);
            o.pass = o.pass && r.succeeded == r.points && r.max_residual < kLeafTol && r.max_equivariance < kLeafTol;
            o.note << " tau=" << tau << ": " << r.succeeded << "/" << r.points << " residual " << r.max_residual
                   << " equivariance " << r.max_equivariance << ";";
        }
    });

    criterion(9, "Dirichlet solver against explicit graphs", 0.0, [](Outcome& o) {
        for (double tau : {0.0, 0.5})
            for (const char* surface : {"catenoid", "invariant"}) {
                const auto t0 = std::chrono::steady_clock::now();
                const SolverOracle r = solver_oracle(surface, 2.0, {tau}, 65);
                const double secs = elapsed(t0);
                o.pass = o.pass && r.report.converged && r.sup_error < kSolverTol && secs < 120.0;
                o.note << " " << surface << " tau=" << tau << ": error " << r.sup_error << " in " << r.report.iterations
                       << " it;";
            }
        const GraphDomain dom = GraphDomain::make(Model::HalfSpace, -0.5, 0.5, 0.5, 1.5, 65, 65,
                                                  [](const BasePoint& b) { return std::hypot(b.x, b.y - 1.0) <= 0.5; });
        const SolveReport z = solve_dirichlet(GraphFunction::sample(dom, [](const BasePoint&) { return 0.0; }), {0.0});
        double sup = 0.0;
        for (double v : z.solution.values)
            if (!std::isnan(v)) sup = std::max(sup, std::abs(v));
        o.pass = o.pass && z.converged && sup == 0.0;
        o.note << " zero boundary sup " << sup;
    });

    criterion(10, "Douglas threshold", 0.0, [](Outcome& o) {
        const double thr = douglas_check(1.0, 0.3).threshold;
        const double hc = 0.462117;
        const bool below = douglas_check(1.0, hc - 0.05).douglas_pass, above = douglas_check(1.0, hc + 0.05).douglas_pass;
        o.pass = std::abs(thr - std::tanh(0.5)) < kDouglasTol && below && !above;
        o.note << " |threshold - tanh(1/2)| = " << std::abs(thr - std::tanh(0.5)) << ", pass below " << below
               << ", pass above " << above;
    });

    criterion(11, "slab audits and negative controls", 0.0, [](Outcome& o) {
        const SlabSpec s1 = build_example1({0.0}, 0.1);
        const SlabReport r1 = audit_slab(s1, 20, 0);
        Example2Feasibility f;
        const SlabSpec s2 = build_example2({0.0}, Example2Config{}, &f);
        const SlabReport r2 = audit_slab(s2, 20, 0);
        const SlabReport shrunk = audit_slab(shrink_annuli(s1, 0.6), 20, 0);
        const SlabReport overlap = audit_slab(overlap_graphs(s1), 20, 0);
        o.pass = r1.pass && r1.checks.size() == 20 && f.feasible && r2.pass && r2.checks.size() == 20 && !shrunk.pass &&
                 !overlap.pass;
        o.note << " example1 " << r1.pass << " (spread " << r1.isometry_spread << "), example2 " << r2.pass
               << ", shrunken " << shrunk.pass << ", overlapping " << overlap.pass;
    });

    std::printf("%d criteria failed\n", failures);
    return failures;
}
