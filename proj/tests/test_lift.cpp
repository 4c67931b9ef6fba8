#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "etau/lift.hpp"
#include "etau/verify.hpp"

using namespace etau;

TEST_CASE("semicircle lift closed form") {
    const SpaceParams sp{0.5};
    const double pi = std::numbers::pi;
    const auto c = lift_geodesic_semicircle(1.0, 0.0, pi / 2, pi / 4, 0.0, sp, 9);
    CHECK(c.points.back().t - c.points.front().t == doctest::Approx(pi / 4));
    const auto flat = lift_geodesic_semicircle(2.0, 1.0, 0.1, 3.0, 0.4, {0.0}, 33);
    for (const auto& p : flat.points) CHECK(p.t == 0.4);
    CHECK_THROWS_AS(lift_geodesic_semicircle(1.0, 0.0, 0.5, 0.5, 0.0, sp), ParameterError);
    CHECK_THROWS_AS(lift_geodesic_semicircle(-1.0, 0.0, 0.5, 1.0, 0.0, sp), ParameterError);
    CHECK_THROWS_AS(lift_geodesic_semicircle(1.0, 0.0, 0.0, 1.0, 0.0, sp), ParameterError);
}

TEST_CASE("lift suite") {
    for (double tau : {0.0, 0.5, -0.5, 1.0}) {
        const LiftReport r = verify_lifts({tau});
        INFO("tau=" << tau);
        CHECK(r.closed_vs_quadrature < 1e-10);
        CHECK(r.max_variation <= r.variation_bound + 1e-12);
        CHECK(r.vertical_line_spread < 1e-12);
        CHECK(r.radial_line_spread < 1e-12);
        CHECK(r.horizontality < 1e-8);
    }
    CHECK(generic_lift_spread({0.0}) == 0.0);
    CHECK(generic_lift_spread({0.5}) > 1e-3);
}

TEST_CASE("perturbed vertical lines pick up height of the order of the perturbation") {
    const SpaceParams sp{0.5};
    double prev = 0.0;
    for (double eps : {1e-1, 1e-2, 1e-3}) {
        PlanarCurve c;
        c.model = Model::HalfSpace;
        for (int k = 0; k < 201; ++k) {
            const double s = 0.5 + 2.0 * k / 200.0;
            c.params.push_back(s);
            c.points.push_back({Model::HalfSpace, eps * std::sin(4.0 * s), s});
        }
        const auto l = horizontal_lift(c, 0.0, sp);
        double var = 0.0;
        for (const auto& p : l.points) var = std::max(var, std::abs(p.t));
        CHECK(var > 0.0);
        if (prev > 0.0) CHECK(prev / var == doctest::Approx(10.0).epsilon(0.05));
        prev = var;
    }
}

TEST_CASE("bad curves are rejected and lifts export") {
    PlanarCurve c;
    c.model = Model::HalfSpace;
    c.params = {0.0, 1.0, 0.5};
    c.points = {{Model::HalfSpace, 0, 1}, {Model::HalfSpace, 0, 2}, {Model::HalfSpace, 0, 3}};
    CHECK_THROWS_AS(horizontal_lift(c, 0.0, {0.5}), ParameterError);
    c.params = {0.0, 1.0, 2.0};
    c.points[1].y = -1.0;
    CHECK_THROWS_AS(horizontal_lift(c, 0.0, {0.5}), InvalidPoint);
    std::ostringstream os;
    write_csv(os, lift_geodesic_semicircle(1.0, 0.0, 1.0, 2.0, 0.0, {0.5}, 3));
    CHECK(os.str().rfind("parameter,x,y,t\n", 0) == 0);
}
