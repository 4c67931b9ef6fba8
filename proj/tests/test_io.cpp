#include <doctest.h>

#include <cmath>
#include <sstream>

#include "etau/io.hpp"

using namespace etau;

TEST_CASE("isometries round-trip through JSON") {
    const SpaceParams sp{0.5};
    const AmbientPoint p{{Model::HalfSpace, 0.3, 0.7}, 0.2};
    const AmbientPoint c{{Model::Cylinder, -0.2, 0.4}, 0.2};
    for (const AmbientIsometry& iso :
         {scale_isometry(2.0), translation_isometry_Ls(1.3), halfplane_graph_isometry_G(0.5, 2.0, 1.0),
          compose(translation_isometry_Ls(0.7), reversing_isometry(MobiusMap::identity(Model::HalfSpace), 0.3)),
          inverse(translation_isometry_Ls(2.0))}) {
        const json j = json::parse(to_json(iso).dump());
        const AmbientPoint a = apply(iso, p, sp), b = apply(isometry_from_json(j, sp), p, sp);
        CHECK(std::abs(a.base.x - b.base.x) < 1e-14);
        CHECK(std::abs(a.t - b.t) < 1e-14);
    }
    for (const AmbientIsometry& iso : {disc_point_isometry_Fz0({Model::Cylinder, 0.3, 0.1}, sp), disc_rotation(0.4, sp),
                                       disc_translation({Model::Cylinder, 0.1, 0.5})}) {
        const AmbientPoint a = apply(iso, c, sp), b = apply(isometry_from_json(to_json(iso), sp), c, sp);
        CHECK(std::abs(a.base.y - b.base.y) < 1e-14);
        CHECK(std::abs(a.t - b.t) < 1e-14);
    }
    CHECK(to_json(scale_isometry(2.0))["family"] == "scale");
    CHECK_THROWS_AS(isometry_from_json(json{{"family", "warp"}}, sp), ParameterError);
    CHECK_THROWS_AS(isometry_from_json(json{{"family", "Ls"}, {"params", {1.0, 2.0}}}, sp), ParameterError);
}

TEST_CASE("graph CSV round trip") {
    const GraphDomain dom = GraphDomain::make(Model::Cylinder, -0.5, 0.5, -0.5, 0.5, 11, 9,
                                              [](const BasePoint& b) { return std::hypot(b.x, b.y) < 0.45; });
    const GraphFunction u = GraphFunction::sample(dom, [](const BasePoint& b) { return std::exp(b.x) * b.y; });
    std::stringstream ss;
    write_graph_csv(ss, u);
    const std::string text = ss.str();
    const json header = json::parse(text.substr(0, text.find('\n')));
    CHECK(header["schema_version"] == kSchemaVersion);
    CHECK(header["chart"] == "poincare_disc");
    const GraphFunction v = read_graph_csv(ss);
    CHECK(v.domain.nx == 11);
    CHECK(v.domain.ny == 9);
    CHECK(v.domain.mask == dom.mask);
    for (std::size_t k = 0; k < u.values.size(); ++k) {
        if (std::isnan(u.values[k])) CHECK(std::isnan(v.values[k]));
        else CHECK(v.values[k] == u.values[k]);
    }
    std::istringstream bad("{\"model\":\"Cylinder\",\"bounds\":[0,1],\"sizes\":[3,3]}\n");
    CHECK_THROWS_AS(read_graph_csv(bad), ParameterError);
}

TEST_CASE("reports serialize with a schema version") {
    SolveReport r;
    r.converged = true;
    r.residual_history = {1.0, std::nan("")};
    const json j = to_json(r);
    CHECK(j["schema_version"] == kSchemaVersion);
    CHECK(j["residual_history"][1].is_null());
    SlabReport s;
    s.checks.resize(2);
    s.checks[0].contains_p = s.checks[0].boundary_above = s.checks[0].boundary_below = true;
    const json js = to_json(s);
    CHECK(js["failed_points"] == 1);
    CHECK(js["checks"].size() == 2);
}
