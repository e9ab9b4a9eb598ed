#include <catch2/catch_amalgamated.hpp>

#include "minsurf/analytic.hpp"
#include "minsurf/rng.hpp"

using namespace minsurf;

namespace {

AnalyticFunction hexagon_p() {
    // 3/(pi (1 + z^6))
    std::vector<complex> den(7);
    den[0] = kPi;
    den[6] = kPi;
    return AnalyticFunction::rational({3.0}, den, 0.999);
}

} // namespace

TEST_CASE("integrate_radial of a constant") {
    const auto one = AnalyticFunction::constant(1.0);
    const complex z{0.7, 0.1};
    const complex v = integrate_radial(one, {.endpoint = z});
    CHECK(std::abs(v - z) < 1e-14);
}

TEST_CASE("integrate_radial of the hexagon derivative matches its series") {
    const auto p = hexagon_p();
    const double z = 0.5;
    CompensatedSum expect;
    for (int m = 0; m < 60; ++m)
        expect.add((m % 2 == 0 ? 1.0 : -1.0) * std::pow(z, 6.0 * m + 1.0) / (6.0 * m + 1.0));
    const complex v = integrate_radial(p, {.endpoint = z});
    CHECK_THAT(v.real(), Catch::Matchers::WithinAbs(3.0 / kPi * expect.value(), 1e-12));
    CHECK_THAT(v.imag(), Catch::Matchers::WithinAbs(0.0, 1e-14));
}

TEST_CASE("integrate_radial is additive under path splitting") {
    const auto p = hexagon_p();
    Rng rng(5);
    for (int i = 0; i < 20; ++i) {
        const complex z = rng.disk_point(0.9);
        const complex whole = integrate_radial(p, {.endpoint = z});
        const complex first = integrate_segment([&](complex w) { return p(w); }, complex{0.0}, z * 0.5);
        const complex second = integrate_segment([&](complex w) { return p(w); }, z * 0.5, z);
        CHECK(std::abs(whole - (first + second)) <= 1e-12 * (1.0 + std::abs(whole)));
    }
}

TEST_CASE("quadrature reproduces polynomials exactly up to node-count degree") {
    std::vector<complex> coef(40, 0.0);
    coef[39] = 2.5;
    coef[7] = complex{0.0, -1.0};
    const auto f = AnalyticFunction::polynomial(coef, 2.0);
    const complex z{0.4, 0.6};
    complex exact = 0.0;
    for (std::size_t k = 0; k < coef.size(); ++k) exact += coef[k] * std::pow(z, static_cast<double>(k + 1)) / (k + 1.0);
    const complex got = detail::gl_segment([&](complex w) { return f(w); }, complex{0.0}, z, 32);
    CHECK(std::abs(got - exact) < 1e-14 * (1.0 + std::abs(exact)));
}

TEST_CASE("jet: monomial cases") {
    const auto q = AnalyticFunction::polynomial({0.0, 0.0, 1.0});
    auto j = q.jet(complex{0.0}, 2);
    CHECK(j.derivative(0) == complex{0.0});
    CHECK(j.derivative(1) == complex{0.0});
    CHECK(j.derivative(2) == complex{2.0});

    const auto w = AnalyticFunction::polynomial({0.0, 0.0, 0.0, 0.0, 1.0});
    auto jw = w.jet(complex{0.0}, 2);
    CHECK(jw.derivative(0) == complex{0.0});
    CHECK(jw.derivative(1) == complex{0.0});
    CHECK(jw.derivative(2) == complex{0.0});
}

TEST_CASE("jet of the hexagon p matches the hand-differentiated rational") {
    const auto p = hexagon_p();
    const complex z{0.0, 0.4};
    const Jet j = p.jet(z, 1);
    const complex expect = -18.0 * std::pow(z, 5) / (kPi * std::pow(1.0 + std::pow(z, 6), 2));
    CHECK(std::abs(j.derivative(1) - expect) <= 1e-10 * std::abs(expect));
}

TEST_CASE("backend jets agree with Cauchy-integral differentiation") {
    const auto p = hexagon_p();
    Rng rng(17);
    for (int i = 0; i < 25; ++i) {
        const complex z = rng.disk_point(0.7);
        const Jet a = p.jet(z, 3);
        const Jet c = cauchy_jet(p, z, 3);
        for (int k = 0; k <= 3; ++k) {
            CHECK(std::abs(a.coeff(k) - c.coeff(k)) <= 1e-9 * (1.0 + std::abs(a.coeff(k))));
        }
    }
}

TEST_CASE("backend first derivatives agree with Richardson finite differences") {
    const auto p = hexagon_p();
    Rng rng(23);
    for (int i = 0; i < 50; ++i) {
        const complex z = rng.disk_point(0.6);
        const complex d = p.jet(z, 1).derivative(1);
        const double h = 1e-4;
        auto diff = [&](double step) { return (p(z + step) - p(z - step)) / (2.0 * step); };
        const complex fd = (4.0 * diff(h / 2) - diff(h)) / 3.0;
        CHECK(std::abs(d - fd) <= 1e-7 * (1.0 + std::abs(d)));
    }
}

TEST_CASE("sqrt_branch: monomial, constant and scaled omegas") {
    const auto z4 = AnalyticFunction::polynomial({0.0, 0.0, 0.0, 0.0, 1.0});
    const auto q = sqrt_branch(z4, 4);
    CHECK(std::abs(q(complex{0.3, 0.2}) - std::pow(complex{0.3, 0.2}, 2)) < 1e-12);

    const auto c = sqrt_branch(AnalyticFunction::constant(0.25), 0);
    CHECK(std::abs(c(complex{0.1, 0.7}) - complex{0.5}) < 1e-14);

    const auto scaled = sqrt_branch(AnalyticFunction::polynomial({0.0, 0.0, 0.0, 0.0, 0.25}), 4);
    CHECK(std::abs(scaled(complex{0.5}) - 0.5 * 0.25) < 1e-13);
}

TEST_CASE("sqrt_branch squares back to omega at random points") {
    // omega = z^4 * (1 + z^2/4 + z^3/8): nonvanishing psi on the disk
    const auto omega = AnalyticFunction::polynomial({0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.25, 0.125});
    const auto q = sqrt_branch(omega, 4);
    Rng rng(29);
    const double rad = 0.98 * q.domain_radius();
    for (int i = 0; i < 1000; ++i) {
        const complex z = rng.disk_point(rad);
        const complex qq = q(z) * q(z);
        const complex om = omega(z);
        CHECK(std::abs(qq - om) <= 1e-9 * (1.0 + std::abs(om)));
    }
}

TEST_CASE("sqrt_branch rejects odd vanishing order and interior zeros") {
    const auto z3 = AnalyticFunction::polynomial({0.0, 0.0, 0.0, 1.0});
    CHECK_THROWS_AS(sqrt_branch(z3, 3), std::domain_error);
    // psi = 1 - 4 z^2 has zeros at +-1/2 inside the working radius
    const auto blocked = AnalyticFunction::polynomial({0.0, 0.0, 1.0, 0.0, -4.0});
    CHECK_THROWS_AS(sqrt_branch(blocked, 2), std::domain_error);
}

TEST_CASE("sqrt_branch picks the right-half-plane branch at 0") {
    const auto omega = AnalyticFunction::polynomial({complex{-0.25, 0.0}, 0.0, 0.05});
    const auto q = sqrt_branch(omega, 0);
    const complex q0 = q(complex{0.0});
    CHECK(q0.real() >= 0.0);
    CHECK(std::abs(q0 * q0 - complex{-0.25}) < 1e-12);
}
