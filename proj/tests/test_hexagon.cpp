#include <catch2/catch_amalgamated.hpp>

#include "minsurf/hexagon.hpp"
#include "minsurf/rng.hpp"

using namespace minsurf;

TEST_CASE("build_hexagon: centre jets") {
    const HexagonModel model = build_hexagon();
    CHECK_THAT(std::abs(model.data.p()(complex{})), Catch::Matchers::WithinRel(3.0 / kPi, 1e-15));
    const Jet qj = model.data.q().jet(complex{}, 2);
    CHECK(qj.value() == complex{0.0});
    CHECK(qj.derivative(1) == complex{0.0});
    CHECK_THAT(std::abs(qj.derivative(2)), Catch::Matchers::WithinRel(2.0, 1e-15));
}

TEST_CASE("g at 0.5: series, alternating sum, hypergeometric and quadrature agree") {
    const HexagonModel model = build_hexagon();
    CompensatedSum partial;
    for (int m = 0; m < 80; ++m)
        partial.add((m % 2 == 0 ? 1.0 : -1.0) * std::pow(0.5, 6.0 * m + 1.0) / (6.0 * m + 1.0));
    const double expect = 3.0 / kPi * partial.value();

    CHECK_THAT(model.g_series.eval(complex{0.5}).real(), Catch::Matchers::WithinRel(expect, 1e-13));

    const complex hyp = 3.0 * 0.5 * hyp2f1(1.0 / 6.0, 1.0, 7.0 / 6.0, -std::pow(0.5, 6)) / kPi;
    CHECK_THAT(hyp.real(), Catch::Matchers::WithinRel(expect, 1e-12));

    const complex quad = integrate_radial(model.data.p(), {.endpoint = complex{0.5}});
    CHECK_THAT(quad.real(), Catch::Matchers::WithinRel(expect, 1e-12));
}

TEST_CASE("series derivative of g matches p on a thousand points") {
    const HexagonModel model = build_hexagon();
    const PowerSeries gp = model.g_series.derivative();
    Rng rng(109);
    for (int i = 0; i < 1000; ++i) {
        const complex z = rng.disk_point(0.95);
        const complex a = gp.eval(z);
        const complex b = model.data.p()(z);
        CHECK(std::abs(a - b) <= 1e-10 * (1.0 + std::abs(b)));
    }
}

TEST_CASE("omega = h'/g' equals z^4") {
    const HexagonModel model = build_hexagon();
    const PowerSeries gp = model.g_series.derivative();
    const PowerSeries hp = model.h_series.derivative();
    Rng rng(113);
    for (int i = 0; i < 300; ++i) {
        const complex z = rng.disk_point(0.95);
        const complex omega = hp.eval(z) / gp.eval(z);
        CHECK(std::abs(omega - std::pow(z, 4)) <= 1e-12 * (1.0 + std::abs(omega)));
    }
}

TEST_CASE("closed-form height: symmetry values") {
    CHECK(hexagon_height(complex{0.37}) == 0.0);
    CHECK_THAT(hexagon_height(complex{-0.8}), Catch::Matchers::WithinAbs(0.0, 1e-15));

    const double r = 0.5;
    const complex z = std::polar(r, kPi / 6.0);
    const double expect = std::log((1.0 - r * r * r) / (1.0 + r * r * r)) / kPi;
    CHECK_THAT(hexagon_height(z), Catch::Matchers::WithinRel(expect, 1e-14));

    CHECK_THROWS_AS(hexagon_height(complex{1.0}), std::domain_error);
}

TEST_CASE("closed-form height equals the quadrature height") {
    const HexagonModel model = build_hexagon();
    const complex z0 = 0.6 * std::exp(complex{0.0, 0.4});
    const SurfacePoint pt = surface_point(model.data, z0);
    CHECK_THAT(hexagon_height(z0), Catch::Matchers::WithinAbs(pt.position[2], 1e-10));

    Rng rng(127);
    for (int i = 0; i < 100; ++i) {
        const complex z = rng.disk_point(0.9);
        const complex t = integrate_radial_fn(
            [&](complex w) { return 2.0 * model.data.p()(w) * model.data.q()(w); }, {.endpoint = z}, 1e-12);
        CHECK_THAT(hexagon_height(z), Catch::Matchers::WithinAbs(t.imag(), 1e-10));
    }
}

TEST_CASE("six-fold equivariance of f") {
    const HexagonModel model = build_hexagon();
    const complex rot = std::polar(1.0, kPi / 3.0);
    Rng rng(131);
    for (int i = 0; i < 200; ++i) {
        const complex z = rng.disk_point(0.95);
        const complex lhs = model.f(rot * z);
        const complex rhs = rot * model.f(z);
        CHECK(std::abs(lhs - rhs) <= 1e-10 * (1.0 + std::abs(rhs)));
    }
}

TEST_CASE("jacobian is positive on the sampled interior") {
    const HexagonModel model = build_hexagon();
    Rng rng(137);
    for (int i = 0; i < 500; ++i) {
        const complex z = rng.disk_point(0.99);
        CHECK(jacobian(model.data, z) > 0.0);
    }
}

TEST_CASE("hexagon report: extremal values and annotations") {
    const CurvatureReport rep = hexagon_report();
    CHECK_THAT(rep.rate_closed, Catch::Matchers::WithinRel(-16.0 * std::pow(kPi, 4) / 81.0, 1e-12));
    CHECK(std::abs(rep.rate_closed) < general_rate_bound());
    CHECK_THAT(rep.rate_limit, Catch::Matchers::WithinRel(rep.rate_closed, 1e-3));
    REQUIRE(rep.margin_flat.has_value());
    CHECK(std::abs(*rep.margin_flat) <= 1e-10);
    CHECK(rep.margin_general > 0.0);
    CHECK(!rep.annotation.empty());
    CHECK_FALSE(rep.hall.run);
}

TEST_CASE("minimal surface PDE residual at random interior points") {
    const HexagonModel model = build_hexagon();
    Rng rng(139);
    for (int i = 0; i < 100; ++i) {
        const complex z = rng.disk_point(0.40);
        const NumericJetResult r = numeric_jet(model.data, z);
        CHECK(std::abs(pde_residual(r.jet)) <= 1e-6);
    }
}

TEST_CASE("boundary geometry: hexagon distances and the two angle families") {
    const HexagonModel model = build_hexagon();
    const BoundaryGeometry bg = boundary_geometry(model, 720);
    CHECK(bg.samples.size() > 600);
    CHECK(bg.max_distance <= 0.01);

    for (int k = 0; k < 6; ++k) {
        CHECK_THAT(std::abs(bg.vertex_images[k]), Catch::Matchers::WithinAbs(1.0, 0.01));
        CHECK_THAT(std::abs(bg.midpoint_images[k]), Catch::Matchers::WithinAbs(std::sqrt(3.0) / 2.0, 0.01));
    }
    // vertex images sit at the ideal vertices e^{i k pi/3}
    for (int k = 0; k < 6; ++k) {
        const complex ideal = std::polar(1.0, k * kPi / 3.0);
        CHECK(std::abs(bg.vertex_images[k] - ideal) <= 0.01);
    }
}

TEST_CASE("boundary images are equivariant under rotation by pi/3") {
    const HexagonModel model = build_hexagon();
    const complex rot = std::polar(1.0, kPi / 3.0);
    for (double theta : {0.05, 0.3, 0.45}) {
        const complex a = hexagon_boundary_image(model, theta + kPi / 3.0);
        const complex b = rot * hexagon_boundary_image(model, theta);
        CHECK(std::abs(a - b) <= 1e-8);
    }
}

TEST_CASE("mesh: counting, symmetry and determinism") {
    const HexagonModel model = build_hexagon();
    const MeshArtifact mesh = hexagon_mesh(model, 2, 6, 0.5);
    CHECK(mesh.vertices.size() == 13);
    CHECK(mesh.faces.size() == 18);

    // heights vanish on the six symmetry rays sin(3s) = 0
    for (const auto& v : mesh.vertices) {
        if (std::abs(std::sin(3.0 * v.s)) < 1e-12) CHECK(std::abs(v.t) < 1e-12);
    }

    // antisymmetry under s -> -s
    const MeshArtifact fine = hexagon_mesh(model, 3, 16, 0.8);
    for (const auto& v : fine.vertices) {
        const complex z = std::polar(v.r, -v.s);
        CHECK_THAT(hexagon_height(z), Catch::Matchers::WithinAbs(-v.t, 1e-13));
    }

    CHECK(obj_string(mesh) == obj_string(hexagon_mesh(model, 2, 6, 0.5)));
    CHECK(csv_string(mesh) == csv_string(hexagon_mesh(model, 2, 6, 0.5)));
    const std::string obj = obj_string(mesh);
    CHECK(obj.substr(0, 2) == "v ");
    CHECK(obj.find("f 1 2 3") != std::string::npos);
}

TEST_CASE("mesh rejects bad grids") {
    const HexagonModel model = build_hexagon();
    CHECK_THROWS_AS(hexagon_mesh(model, 0, 6, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(hexagon_mesh(model, 2, 6, 1.0), std::invalid_argument);
}
