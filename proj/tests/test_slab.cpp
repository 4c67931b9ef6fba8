#include <doctest.h>

#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "etau/quadrature.hpp"
#include "etau/slab.hpp"

using namespace etau;

TEST_CASE("sine integral") {
    for (double x : {0.5, 2.0, 10.0, 40.0}) {
        const double ref = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
            [](double t) { return t == 0.0 ? 1.0 : std::sin(t) / t; }, 0.0, x, 12, 1e-14);
        CHECK(sine_integral(x) == doctest::Approx(ref).epsilon(1e-10));
    }
    CHECK(sine_integral(-2.0) == doctest::Approx(-sine_integral(2.0)));
}

TEST_CASE("example 1 geometry") {
    Example1Info info;
    const SlabSpec s = build_example1({0.0}, 0.1, &info);
    CHECK(info.slab_height == doctest::Approx(std::numbers::pi - 0.1));
    CHECK(info.annulus_half_height > 0.5 * info.slab_height);
    const BoundingReport b = check_bounding_graphs(s);
    CHECK(b.disjoint);
    CHECK(b.h0 == doctest::Approx(0.5 * info.slab_height));
    CHECK_THROWS_AS(build_example1({0.0}, 4.0), InfeasibleError);
    CHECK_THROWS_AS(build_example1({0.0}, -0.1), InfeasibleError);
}

TEST_CASE("sampling is seeded") {
    const SlabSpec s = build_example1({0.0}, 0.1);
    const auto a = sample_interior_points(s, 5, 7), b = sample_interior_points(s, 5, 7), c = sample_interior_points(s, 5, 8);
    for (int k = 0; k < 5; ++k) {
        CHECK(a[k].base.x == b[k].base.x);
        CHECK(a[k].t == b[k].t);
    }
    CHECK(a[0].base.x != c[0].base.x);
}

TEST_CASE("annulus placement passes through the point") {
    const SlabSpec s = build_example1({0.0}, 0.1);
    const SlabReport r = check_annulus_family(s, sample_interior_points(s, 4, 1));
    for (const auto& c : r.checks) {
        CHECK(c.placed);
        CHECK(c.distance < 1e-9);
        CHECK(c.contains_p);
        CHECK(c.boundary_above);
        CHECK(c.boundary_below);
    }
    CHECK(r.isometric);
    CHECK_THROWS_AS(check_annulus_family(s, {AmbientPoint{{Model::Cylinder, 0.0, 0.0}, 10.0}}), ParameterError);
}

TEST_CASE("edge spectra are invariant under rotations") {
    const SlabSpec s = build_example1({0.5}, 0.5);
    const auto a = edge_length_spectrum(s, identity_isometry(Model::Cylinder));
    const auto b = edge_length_spectrum(s, disc_rotation(1.1, {0.5}));
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); k += 17) CHECK(b[k] == doctest::Approx(a[k]).epsilon(1e-6));
}

TEST_CASE("example 2 feasibility chain") {
    Example2Config cfg;
    const Example2Feasibility ok = example2_feasibility(cfg);
    CHECK(ok.feasible);
    CHECK(ok.two_C_r == doctest::Approx(0.4));
    CHECK(ok.gradient_sup == doctest::Approx(0.2).epsilon(1e-6));
    CHECK(ok.h_prime == doctest::Approx(0.425));
    CHECK(ok.douglas.douglas_pass);

    Example2Config wide = cfg;
    wide.C = 0.25;
    const Example2Feasibility bad = example2_feasibility(wide);
    CHECK_FALSE(bad.feasible);
    CHECK(bad.violated.find("2 C r < h") != std::string::npos);
    CHECK_THROWS_AS(build_example2({0.0}, wide), InfeasibleError);

    Example2Config si = cfg;
    si.graph = GraphChoice::SineIntegral;
    const Example2Feasibility fs = example2_feasibility(si);
    CHECK_FALSE(fs.feasible);
    CHECK(fs.gradient_sup == doctest::Approx(1.0).epsilon(1e-3));

    Example2Config tall = cfg;
    tall.h = 0.6;
    tall.C = 0.29;
    CHECK_FALSE(example2_feasibility(tall).feasible);
}

TEST_CASE("negative controls") {
    const SlabSpec s = build_example1({0.0}, 0.1);
    CHECK_FALSE(audit_slab(shrink_annuli(s, 0.6), 4, 0).pass);
    const SlabReport o = audit_slab(overlap_graphs(s), 4, 0);
    CHECK_FALSE(o.bounds.disjoint);
    CHECK_FALSE(o.pass);
}

TEST_CASE("graph separation probe") {
    const LeafSpec leaf{1.0, {1.5, 1.0, {0.0}, Sheet::Both, false}};
    const GraphDomain dom = GraphDomain::make(Model::HalfSpace, -3.0, 3.0, 0.05, 4.0, 61, 41);
    const GraphFunction flat = GraphFunction::sample(dom, [](const BasePoint&) { return 0.0; });
    const SeparationReport r = graph_separation_probe(flat, leaf);
    CHECK(r.interface_edges > 0);
    CHECK(r.inside_components >= 1);
    const GraphFunction high = GraphFunction::sample(dom, [](const BasePoint&) { return 10.0; });
    CHECK(graph_separation_probe(high, leaf).status == "no_intersection");
}
