#include <doctest.h>

#include <cmath>

#include "etau/foliation.hpp"
#include "etau/isometry.hpp"
#include "etau/verify.hpp"

using namespace etau;

TEST_CASE("points of a leaf find that leaf") {
    for (double tau : {0.0, 0.5}) {
        const SpaceParams sp{tau};
        const FoliationParams fp{1.5, 1.0, 1.0};
        const InvariantSurfaceSpec base{fp.d, fp.s, sp, Sheet::Both, false};
        const SurfaceMesh m = leaf_mesh({1.0, base}, -1.0, 1.0, 0.05, 21, 7);
        int used = 0;
        for (const auto& v : m.vertices) {
            if (std::abs(v.t) > 0.9 * fp.h0) continue;
            const LeafFindResult r = foliation_leaf_find(v, fp, sp);
            CHECK(std::abs(r.lambda - 1.0) < 1e-6);
            ++used;
        }
        CHECK(used > 20);
    }
}

TEST_CASE("foliation suite") {
    for (double tau : {0.0, 0.5}) {
        const FoliationReport r = verify_foliation({1.5, 1.0, 1.0}, {tau}, 25, 4);
        INFO("tau=" << tau);
        CHECK(r.succeeded == r.points);
        CHECK(r.max_residual < 1e-6);
        CHECK(r.max_equivariance < 1e-6);
    }
}

TEST_CASE("enclosure flips across the leaf") {
    const InvariantSurfaceSpec base{1.5, 1.0, {0.0}, Sheet::Both, false};
    const AmbientPoint p{{Model::HalfSpace, 0.2, 0.9}, 0.1};
    CHECK(leaf_encloses(base, 1e-6, p) != leaf_encloses(base, 1e6, p));
}

TEST_CASE("points outside the slab") {
    const FoliationParams fp{1.5, 1.0, 1.0};
    CHECK_THROWS_AS(foliation_leaf_find({{Model::HalfSpace, 0.0, 1.0}, 1.5}, fp, {}), NotInSlab);
    CHECK_THROWS_AS(foliation_leaf_find({{Model::Cylinder, 0.0, 0.0}, 0.0}, fp, {}), ParameterError);
    CHECK_THROWS_AS(foliation_leaf_find({{Model::HalfSpace, 0.0, 1.0}, 0.0}, {1.5, 1.0, 5.0}, {}), ParameterError);
}
