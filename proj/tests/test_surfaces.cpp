#include <doctest.h>

#include <cmath>
#include <numbers>

#include "etau/isometry.hpp"
#include "etau/surfaces.hpp"
#include "oracles.hpp"

using namespace etau;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("invariant height against independent quadrature") {
    for (double d : {1.05, 1.5, 3.0, 20.0}) {
        CHECK(std::abs(invariant_height(d, {0.0}) - oracle::elliptic_K(1.0 / d)) < 1e-9);
        for (double tau : {0.5, -1.0}) {
            INFO("d=" << d << " tau=" << tau);
            CHECK(std::abs(invariant_height(d, {tau}) - oracle::invariant_half_height(d, tau)) < 1e-8);
            CHECK(std::abs(invariant_height_substituted(d, {tau}) - oracle::invariant_half_height(d, tau)) < 1e-8);
        }
    }
    CHECK_THROWS_AS(invariant_height(1.0, {}), ParameterError);
    CHECK_THROWS_AS(invariant_height(0.5, {}), ParameterError);
}

TEST_CASE("catenoid height is twice the one-sheet integral") {
    for (double d : {0.2, 1.0, 4.0})
        for (double tau : {0.0, 0.5}) {
            INFO("d=" << d << " tau=" << tau);
            CHECK(catenoid_height({d, {tau}}) == doctest::Approx(2.0 * oracle::catenoid_half_height(d, tau)).epsilon(1e-8));
        }
}

TEST_CASE("catenoid profile") {
    const CatenoidSpec cs{1.5, {0.5}};
    const double r0 = catenoid_neck(1.5);
    CHECK(r0 == doctest::Approx(std::asinh(1.5)));
    CHECK(catenoid_profile(cs, r0) == 0.0);
    double prev = 0.0;
    for (double x : {0.01, 0.1, 1.0, 3.0}) {
        const double u = catenoid_profile(cs, r0 + x);
        CHECK(u > prev);
        CHECK(u < 0.5 * catenoid_height(cs));
        CHECK(catenoid_radius_for_level(cs, u) == doctest::Approx(r0 + x).epsilon(1e-9));
        prev = u;
    }
    const double rho = r0 + 0.7, h = 1e-5;
    const double fd = (catenoid_profile(cs, rho + h) - catenoid_profile(cs, rho - h)) / (2 * h);
    CHECK(fd == doctest::Approx(catenoid_slope(cs, rho)).epsilon(1e-7));
    CHECK_THROWS_AS(catenoid_profile(cs, r0 - 0.1), ParameterError);
}

TEST_CASE("invariant sheets") {
    for (double tau : {0.0, 0.5, -0.5}) {
        const SpaceParams sp{tau};
        const double d = 1.7, a = invariant_angle(d), h = invariant_height(d, sp);
        InvariantSurfaceSpec plus{d, 1.0, sp, Sheet::Plus, false}, minus = plus;
        minus.side = Sheet::Minus;
        CHECK(std::abs(invariant_profile(plus, a)) < 1e-12);
        CHECK(std::abs(invariant_profile(minus, a)) < 1e-12);
        // asymptotic levels +-h + 2 tau a
        const double th = 1e-7;
        CHECK(invariant_profile(plus, th) == doctest::Approx(h + 2 * tau * a).epsilon(1e-6));
        CHECK(invariant_profile(minus, th) == doctest::Approx(-h + 2 * tau * a).epsilon(1e-6));
        const double t0 = 0.4, e = 1e-6;
        const double fd = (invariant_profile(plus, t0 + e) - invariant_profile(plus, t0 - e)) / (2 * e);
        CHECK(fd == doctest::Approx(invariant_profile_derivative(plus, t0)).epsilon(1e-7));
        CHECK(std::abs(normal_vertical_component(plus, a)) < 1e-6);
        for (double t : {0.01, 0.2, 0.5}) {
            const double nu = normal_vertical_component(plus, t);
            CHECK(nu > 0.0);
            CHECK(nu <= 1.0);
            const auto [v, w] = tangent_vertical_components(plus, t);
            CHECK(std::abs(v) <= 1.0);
            CHECK(std::abs(w) <= 1.0);
        }
        CHECK_THROWS_AS(invariant_profile(plus, a + 0.01), ParameterError);
    }
}

TEST_CASE("height inversion") {
    for (double tau : {0.0, 0.5}) {
        const double d = invariant_d_for_height(2.5, {tau});
        CHECK(invariant_height(d, {tau}) == doctest::Approx(2.5).epsilon(1e-10));
    }
    CHECK_THROWS_AS(invariant_d_for_height(1.0, {0.0}), ParameterError);
}

TEST_CASE("transversality delta") {
    for (double tau : {0.0, 0.5}) {
        const double delta = transversality_delta(0.5, 1.0, {tau});
        CHECK(delta > 0.0);
        CHECK(transversality_lhs(delta, 1.0, {tau}) <= 0.25);
        CHECK(transversality_lhs(delta * 1.001, 1.0, {tau}) > 0.25);
    }
    CHECK_THROWS_AS(transversality_delta(0.0, 1.0, {}), ParameterError);
}

TEST_CASE("catenoid mesh") {
    const CatenoidSpec cs{1.0, {0.5}};
    const double rho_max = catenoid_neck(1.0) + 2.0;
    const SurfaceMesh m = mesh_catenoid(cs, rho_max, 41, 24);
    CHECK(m.vertices.size() == 41u * 24u);
    CHECK(m.model == Model::Cylinder);
    CHECK(m.periodic_cols);
    for (const auto& v : m.vertices) {
        const double rho = std::max(catenoid_neck(1.0), 2.0 * std::atanh(std::hypot(v.base.x, v.base.y)));
        CHECK(std::abs(std::abs(v.t) - catenoid_profile(cs, rho)) < 1e-7);
    }
}

TEST_CASE("invariant surface mesh and leaves") {
    const SpaceParams sp{0.5};
    const InvariantSurfaceSpec spec{1.4, 1.0, sp, Sheet::Both, false};
    const double a = invariant_angle(1.4);
    const SurfaceMesh m = mesh_invariant_surface(spec, -1.0, 1.0, 0.05, 33, 17);
    CHECK(m.vertices.size() == 33u * 17u);
    for (const auto& v : m.vertices) {
        const double th = std::atan2(v.base.y, v.base.x - 1.0);
        CHECK(th >= 0.05 - 1e-12);
        CHECK(th <= a + 1e-12);
    }
    // nu from mesh normals against the closed form
    InvariantSurfaceSpec plus = spec;
    plus.side = Sheet::Plus;
    const SurfaceMesh fine = mesh_invariant_surface(plus, -0.5, 0.5, 0.05, 257, 9);
    double worst = 0.0;
    for (int i = 2; i < fine.rows - 2; ++i) {
        const auto& v = fine.at(i, 4);
        const double th = std::atan2(v.base.y, v.base.x - 1.0);
        if (th > 0.95 * a) continue;
        worst = std::max(worst, std::abs(std::abs(fine.nu[i * fine.cols + 4]) - normal_vertical_component(plus, th)));
    }
    CHECK(worst < 5e-4);

    const SurfaceMesh l1 = leaf_mesh({1.0, spec}, -1.0, 1.0, 0.05, 33, 17);
    const AmbientIsometry L = translation_isometry_Ls(1.0);
    for (std::size_t k = 0; k < m.vertices.size(); ++k) {
        const AmbientPoint q = apply(L, m.vertices[k], sp);
        CHECK(std::abs(q.t - l1.vertices[k].t) < 1e-12);
    }
    const SurfaceMesh l3 = leaf_mesh({3.0, spec}, -1.0, 1.0, 0.05, 33, 17);
    const AmbientIsometry F = scale_isometry(3.0);
    for (std::size_t k = 0; k < l1.vertices.size(); ++k) {
        const AmbientPoint q = apply(F, l1.vertices[k], sp);
        CHECK(std::abs(q.base.x - l3.vertices[k].base.x) < 1e-9);
        CHECK(std::abs(q.base.y - l3.vertices[k].base.y) < 1e-9);
        CHECK(std::abs(q.t - l3.vertices[k].t) < 1e-9);
    }
    const SurfaceMesh c = convert_surface_to_cylinder(m, sp);
    CHECK(c.model == Model::Cylinder);
    for (std::size_t k = 0; k < c.vertices.size(); ++k) CHECK(std::abs(std::abs(c.nu[k]) - std::abs(m.nu[k])) < 1e-3);
    CHECK_THROWS_AS(leaf_mesh({0.0, spec}, -1.0, 1.0, 0.05, 9, 9), ParameterError);
}
