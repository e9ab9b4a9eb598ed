#include <catch2/catch_amalgamated.hpp>

#include "minsurf/hexagon.hpp"
#include "minsurf/io.hpp"

using namespace minsurf;

TEST_CASE("weierstrass data round-trips through JSON bit-exactly") {
    const HexagonModel model = build_hexagon();
    const json j = to_json(model.data);
    CHECK(j["p"]["kind"] == "rational");
    CHECK(j["q"]["kind"] == "series");

    const WeierstrassData back = weierstrass_from_json(j);
    CHECK(back.domain_radius() == model.data.domain_radius());
    Rng rng(307);
    for (int i = 0; i < 200; ++i) {
        const complex z = rng.disk_point(0.95);
        CHECK(back.p()(z) == model.data.p()(z));
        CHECK(back.q()(z) == model.data.q()(z));
    }
}

TEST_CASE("json text round-trips coefficients exactly") {
    // decimal round-trip through the serialized text, not just the DOM
    std::vector<complex> coef{complex{1.0 / 3.0, -2.0 / 7.0}, complex{1e-17, 0.1},
                              complex{0.12345678901234567, 3.0}};
    const WeierstrassData data(AnalyticFunction::constant(1.0), AnalyticFunction::polynomial({0.0, 0.0, 0.25}),
                               0.9);
    json j = to_json(data);
    j["q"]["coefficients"] = detail::coeffs_to_json(coef);
    const json reparsed = json::parse(j.dump());
    const auto back = detail::coeffs_from_json(reparsed["q"]["coefficients"]);
    REQUIRE(back.size() == coef.size());
    for (std::size_t i = 0; i < coef.size(); ++i) CHECK(back[i] == coef[i]);
}

TEST_CASE("curvature report serialization carries provenance strings") {
    const CurvatureReport rep = hexagon_report();
    const json j = to_json(rep);
    CHECK(j["margin_general"]["bound_provenance"] == "256*pi^4/729");
    CHECK(j["margin_flat"]["bound_provenance"] == "16*pi^4/81");
    CHECK(j["hall"]["constant_provenance"] == "27/(4*pi^2)");
    CHECK(j["rate_closed_form"].get<double>() == rep.rate_closed);
    CHECK(j["annotation"].get<std::string>().find("extremal") != std::string::npos);
}

TEST_CASE("correspondence files round-trip") {
    const json j = {{"target", "disk"},
                    {"symmetry_order", 6},
                    {"epsilons", {0.02, -0.005}},
                    {"deltas", {0.4, 1.9}}};
    const BoundaryCorrespondence bc = correspondence_from_json(j);
    CHECK(bc.symmetry_order == 6);
    CHECK(bc.target == Target::disk);
    const json back = to_json(bc);
    CHECK(back["epsilons"] == j["epsilons"]);
    CHECK(back["deltas"] == j["deltas"]);
    CHECK(back["target"] == "disk");
}

TEST_CASE("malformed inputs are rejected") {
    CHECK_THROWS_AS(detail::function_from_json(json{{"kind", "fourier"}}), std::invalid_argument);
    CHECK_THROWS_AS(correspondence_from_json(json{{"target", "square"},
                                                  {"symmetry_order", 4},
                                                  {"epsilons", json::array()},
                                                  {"deltas", json::array()}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(load_json_file("/nonexistent/path.json"), std::invalid_argument);
}
