#pragma once

#include <chrono>
#include <functional>

#include "minsurf/hexagon.hpp"
#include "minsurf/io.hpp"
#include "minsurf/rkc.hpp"

namespace minsurf {

struct CheckResult {
    std::string name;
    bool pass = false;
    double value = 0.0;     // measured quantity (worst case over the check)
    double threshold = 0.0; // tolerance or bound it is compared against
    std::string detail;
    double seconds = 0.0;
};

struct VerifyOptions {
    std::uint64_t seed = 7;
    int rkc_instances = 200;
    double limit_spread_tol = 1e-6;
    double fd_third_tol = 1e-4;
};

namespace detail {

class CheckRunner {
  public:
    explicit CheckRunner(std::vector<CheckResult>& out) : out_(out) {}

    /// fn fills value/threshold/detail and returns pass/fail; thrown
    /// exceptions fail the check with the message as detail.
    void run(const std::string& name, const std::function<bool(CheckResult&)>& fn) {
        CheckResult r;
        r.name = name;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            r.pass = fn(r);
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out_.push_back(std::move(r));
    }

  private:
    std::vector<CheckResult>& out_;
};

} // namespace detail

/// The module invariant suites as one deterministic, seed-driven run.
inline std::vector<CheckResult> run_verification(const VerifyOptions& opts = {}) {
    std::vector<CheckResult> results;
    detail::CheckRunner run(results);
    const HexagonModel hexagon = build_hexagon();
    const Rng base(opts.seed);

    run.run("hypergeometric-vs-quadrature", [&](CheckResult& r) {
        const double x = -std::pow(0.5, 6);
        const double a = hyp2f1(1.0 / 6.0, 1.0, 7.0 / 6.0, x).real();
        const double oracle = integrate_segment([](complex t) { return 1.0 / (1.0 + std::pow(t, 6)); },
                                                complex{0.0}, complex{0.5}, 1e-14)
                                  .real() /
                              0.5;
        r.value = std::abs(a - oracle);
        r.threshold = 1e-10;
        return r.value <= r.threshold;
    });

    run.run("series-derivative-matches-p", [&](CheckResult& r) {
        const PowerSeries gp = hexagon.g_series.derivative();
        Rng rng = base.fork(1);
        r.value = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const complex z = rng.disk_point(0.95);
            const complex b = hexagon.data.p()(z);
            r.value = std::max(r.value, std::abs(gp.eval(z) - b) / (1.0 + std::abs(b)));
        }
        r.threshold = 1e-10;
        return r.value <= r.threshold;
    });

    run.run("radial-quadrature-additivity", [&](CheckResult& r) {
        Rng rng = base.fork(2);
        r.value = 0.0;
        const auto& p = hexagon.data.p();
        for (int i = 0; i < 20; ++i) {
            const complex z = rng.disk_point(0.9);
            const complex whole = integrate_radial(p, {.endpoint = z});
            const complex split = integrate_segment([&](complex w) { return p(w); }, complex{0.0}, 0.5 * z) +
                                  integrate_segment([&](complex w) { return p(w); }, 0.5 * z, z);
            r.value = std::max(r.value, std::abs(whole - split) / (1.0 + std::abs(whole)));
        }
        r.threshold = 1e-12;
        return r.value <= r.threshold;
    });

    run.run("backend-jets-vs-cauchy", [&](CheckResult& r) {
        Rng rng = base.fork(3);
        r.value = 0.0;
        for (int i = 0; i < 20; ++i) {
            const complex z = rng.disk_point(0.7);
            const Jet a = hexagon.data.p().jet(z, 3);
            const Jet c = cauchy_jet(hexagon.data.p(), z, 3);
            for (int k = 0; k <= 3; ++k)
                r.value = std::max(r.value, std::abs(a.coeff(k) - c.coeff(k)) / (1.0 + std::abs(a.coeff(k))));
        }
        r.threshold = 1e-9;
        return r.value <= r.threshold;
    });

    run.run("sqrt-branch-squares-to-omega", [&](CheckResult& r) {
        const auto omega = AnalyticFunction::polynomial({0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.25, 0.125});
        const auto q = sqrt_branch(omega, 4);
        Rng rng = base.fork(4);
        r.value = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const complex z = rng.disk_point(0.98 * q.domain_radius());
            const complex om = omega(z);
            r.value = std::max(r.value, std::abs(q(z) * q(z) - om) / (1.0 + std::abs(om)));
        }
        r.threshold = 1e-9;
        return r.value <= r.threshold;
    });

    run.run("weierstrass-null-quadratic-sum", [&](CheckResult& r) {
        Rng rng = base.fork(5);
        r.value = 0.0;
        for (int i = 0; i < 100; ++i) {
            const auto phi = ew_components(hexagon.data, rng.disk_point(0.9));
            const complex s = phi[0] * phi[0] + phi[1] * phi[1] + phi[2] * phi[2];
            r.value = std::max(r.value, std::abs(s) / (1.0 + std::norm(phi[0])));
        }
        r.threshold = 1e-14;
        return r.value <= r.threshold;
    });

    run.run("conformality-of-parametrization", [&](CheckResult& r) {
        Rng rng = base.fork(6);
        r.value = 0.0;
        auto coords = [&](complex z) {
            const complex f = hexagon.data.f_value(z);
            return std::array<double, 3>{f.real(), f.imag(), hexagon.data.height(z)};
        };
        for (int i = 0; i < 25; ++i) {
            const complex z = rng.disk_point(0.55);
            const double h = 1e-4;
            std::array<double, 3> xu{}, xv{};
            for (int k = 0; k < 3; ++k) {
                auto du = [&](double s) { return (coords(z + s)[k] - coords(z - s)[k]) / (2 * s); };
                auto dv = [&](double s) {
                    return (coords(z + complex{0, s})[k] - coords(z - complex{0, s})[k]) / (2 * s);
                };
                xu[k] = (4 * du(h / 2) - du(h)) / 3;
                xv[k] = (4 * dv(h / 2) - dv(h)) / 3;
            }
            const double nu = std::hypot(xu[0], xu[1], xu[2]);
            const double nv = std::hypot(xv[0], xv[1], xv[2]);
            const double dot = xu[0] * xv[0] + xu[1] * xv[1] + xu[2] * xv[2];
            r.value = std::max({r.value, std::abs(nu - nv) / (1.0 + nu), std::abs(dot) / (1.0 + nu * nv)});
        }
        r.threshold = 1e-8;
        return r.value <= r.threshold;
    });

    run.run("harmonicity-laplacian-decay", [&](CheckResult& r) {
        Rng rng = base.fork(7);
        r.value = 1e9;
        auto lap = [&](complex z, double h, bool imag) {
            auto pr = [&](complex f) { return imag ? f.imag() : f.real(); };
            return (pr(hexagon.data.f_value(z + h)) + pr(hexagon.data.f_value(z - h)) +
                    pr(hexagon.data.f_value(z + complex{0, h})) + pr(hexagon.data.f_value(z - complex{0, h})) -
                    4.0 * pr(hexagon.data.f_value(z))) /
                   (h * h);
        };
        for (int i = 0; i < 8; ++i) {
            const complex z = rng.disk_point(0.5);
            for (bool imag : {false, true}) {
                const double c1 = lap(z, 1e-2, imag), c2 = lap(z, 5e-3, imag);
                if (std::abs(c1) > 1e-9) r.value = std::min(r.value, std::abs(c1) / std::abs(c2));
            }
        }
        r.threshold = 3.9; // refinement ratio must be at least this
        return r.value >= r.threshold;
    });

    run.run("curvature-sign", [&](CheckResult& r) {
        Rng rng = base.fork(8);
        r.value = -1e300;
        for (int i = 0; i < 500; ++i) r.value = std::max(r.value, curvature(hexagon.data, rng.disk_point(0.95)));
        r.threshold = 0.0;
        return r.value <= r.threshold;
    });

    run.run("gradient-vs-fd-of-reconstruction", [&](CheckResult& r) {
        Rng rng = base.fork(9);
        r.value = 0.0;
        auto height_at = [&](complex w) { return hexagon.data.height(invert_projection(hexagon.data, w)); };
        for (int i = 0; i < 10; ++i) {
            const complex w0 = hexagon.data.f_value(rng.disk_point(0.35));
            const auto grad = gradient_f(hexagon.data, invert_projection(hexagon.data, w0));
            const double h = 1e-5;
            const double fu = (height_at(w0 + h) - height_at(w0 - h)) / (2 * h);
            const double fv = (height_at(w0 + complex{0, h}) - height_at(w0 - complex{0, h})) / (2 * h);
            r.value = std::max({r.value, std::abs(fu - grad[0]), std::abs(fv - grad[1])});
        }
        r.threshold = 1e-6;
        return r.value <= r.threshold;
    });

    run.run("newton-inversion-roundtrip", [&](CheckResult& r) {
        Rng rng = base.fork(10);
        r.value = 0.0;
        for (int i = 0; i < 50; ++i) {
            const complex z0 = rng.disk_point(0.4);
            const complex w = hexagon.data.f_value(z0);
            r.value = std::max(r.value, std::abs(invert_projection(hexagon.data, w) - z0));
        }
        r.threshold = 1e-10;
        return r.value <= r.threshold;
    });

    run.run("third-jet-closure-identities", [&](CheckResult& r) {
        Rng rng = base.fork(11);
        r.value = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const double fu = rng.uniform(-0.5, 0.5), fv = rng.uniform(-0.5, 0.5);
            const double a = rng.uniform(-3, 3), b = rng.uniform(-3, 3);
            const MixedThirds m = close_third_jet(fu, fv, a, b);
            const double r1 = (1 + fu * fu) * m.f_uvv - 2 * fv * fu * m.f_uuv + (1 + fv * fv) * a;
            const double r2 = b * (1 + fu * fu) - 2 * fv * fu * m.f_uvv + (1 + fv * fv) * m.f_uuv;
            const double scale = 1.0 + std::abs(a) + std::abs(b);
            r.value = std::max({r.value, std::abs(r1) / scale, std::abs(r2) / scale});
        }
        r.threshold = 1e-12;
        return r.value <= r.threshold;
    });

    run.run("closure-vs-fd-thirds-hexagon", [&](CheckResult& r) {
        const NumericJetResult nj = numeric_jet(hexagon.data, complex{0.0});
        const MixedThirds m = close_third_jet(nj.jet.f_u, nj.jet.f_v, nj.jet.f_uuu, nj.jet.f_vvv);
        r.value = std::max(std::abs(m.f_uvv - nj.jet.f_uvv), std::abs(m.f_uuv - nj.jet.f_uuv));
        r.threshold = opts.fd_third_tol;
        return r.value <= r.threshold;
    });

    run.run("hessian-vs-fd-hessian", [&](CheckResult& r) {
        const NumericJetResult nj = numeric_jet(hexagon.data, complex{0.0});
        const HessianK H = hessian_of_K(nj.jet);
        auto K_at = [&](complex w) { return graph_curvature(hexagon.data, w); };
        auto fd = [&](double h) {
            return std::array<double, 3>{
                (K_at({h, 0}) - 2 * K_at({0, 0}) + K_at({-h, 0})) / (h * h),
                (K_at({h, h}) - K_at({h, -h}) - K_at({-h, h}) + K_at({-h, -h})) / (4 * h * h),
                (K_at({0, h}) - 2 * K_at({0, 0}) + K_at({0, -h})) / (h * h)};
        };
        const auto c1 = fd(4e-3), c2 = fd(2e-3);
        const std::array<double, 3> got{H.K_uu, H.K_uv, H.K_vv};
        r.value = 0.0;
        for (int k = 0; k < 3; ++k) {
            const double rich = (4 * c2[k] - c1[k]) / 3;
            r.value = std::max(r.value, std::abs(got[k] - rich) / (1.0 + std::abs(rich)));
        }
        r.threshold = 1e-5;
        return r.value <= r.threshold;
    });

    run.run("direction-independence-of-R", [&](CheckResult& r) {
        Rng rng = base.fork(12);
        r.value = 0.0;
        for (int i = 0; i < 20; ++i) {
            const SurfaceJet j = closed_flat_jet(rng.uniform(-0.4, 0.4), rng.uniform(-0.4, 0.4),
                                                 rng.uniform(-2, 2), rng.uniform(-2, 2));
            const double r0 = direction_profile(j, 0.0).R;
            for (int k = 1; k < 16; ++k)
                r.value = std::max(r.value,
                                   std::abs(direction_profile(j, k * kPi / 8.0).R - r0) / std::abs(r0));
        }
        r.threshold = 1e-9;
        return r.value <= r.threshold;
    });

    run.run("rate-closed-form-hexagon", [&](CheckResult& r) {
        const double v = curvature_rate_closed_form(complex{3.0 / kPi}, complex{0.0}, complex{2.0});
        r.value = std::abs(v - flat_rate_bound()) / flat_rate_bound();
        r.threshold = 1e-12;
        r.detail = "16*pi^4/81";
        return r.value <= r.threshold;
    });

    run.run("rate-limit-hexagon", [&](CheckResult& r) {
        RateLimitOptions lo;
        lo.spread_tol = opts.limit_spread_tol;
        const RateLimitResult lim = curvature_rate_limit(hexagon.data, lo);
        r.value = std::abs(lim.value + flat_rate_bound()) / flat_rate_bound();
        r.threshold = 1e-3;
        r.detail = "spread " + std::to_string(lim.spread);
        return r.value <= r.threshold && lim.spread <= opts.limit_spread_tol;
    });

    run.run("rate-consistency-tilted-datum", [&](CheckResult& r) {
        const WeierstrassData tilted(AnalyticFunction::constant(1.0, 0.80),
                                     AnalyticFunction::polynomial({0.3, 0.0, 1.0}, 0.80));
        const RateLimitResult lim = curvature_rate_limit(tilted);
        const NumericJetResult nj = numeric_jet(tilted, complex{0.0});
        r.value = std::abs(curvature_rate_from_jet(nj.jet) - lim.value) / std::abs(lim.value);
        r.threshold = 1e-4;
        return r.value <= r.threshold;
    });

    run.run("pde-residual-hexagon", [&](CheckResult& r) {
        Rng rng = base.fork(13);
        r.value = 0.0;
        for (int i = 0; i < 100; ++i) {
            const NumericJetResult nj = numeric_jet(hexagon.data, rng.disk_point(0.40));
            r.value = std::max(r.value, std::abs(pde_residual(nj.jet)));
        }
        r.threshold = 1e-6;
        return r.value <= r.threshold;
    });

    run.run("height-closed-vs-quadrature", [&](CheckResult& r) {
        Rng rng = base.fork(14);
        r.value = 0.0;
        for (int i = 0; i < 100; ++i) {
            const complex z = rng.disk_point(0.9);
            const complex t = integrate_radial_fn(
                [&](complex w) { return 2.0 * hexagon.data.p()(w) * hexagon.data.q()(w); }, {.endpoint = z},
                1e-12);
            r.value = std::max(r.value, std::abs(hexagon_height(z) - t.imag()));
        }
        r.threshold = 1e-10;
        return r.value <= r.threshold;
    });

    run.run("flat-point-identity-measured", [&](CheckResult& r) {
        const NumericJetResult nj = numeric_jet(hexagon.data, complex{0.0});
        const double sum = sqr(nj.jet.f_uuu) + sqr(nj.jet.f_vvv);
        r.value = std::abs(sum - flat_rate_bound());
        r.threshold = opts.fd_third_tol;
        r.detail = "f_uuu^2+f_vvv^2 vs 16*pi^4/81";
        return r.value <= r.threshold;
    });

    run.run("schwarz-bound-equality-and-random", [&](CheckResult& r) {
        const BoundCheck eq = schwarz_bound_check(AnalyticFunction::polynomial({0.0, 0.0, 1.0}));
        if (!eq.ok || std::abs(eq.lhs - eq.rhs) > 1e-12) return false;
        Rng rng = base.fork(15);
        r.value = 0.0;
        for (int i = 0; i < 50; ++i) {
            const complex a = rng.disk_point(0.7);
            const double sc = rng.uniform(0.1, 1.0);
            std::vector<complex> num{a, 0.0, std::polar(sc, rng.uniform(0.0, 2 * kPi))};
            std::vector<complex> den{1.0, 0.0, std::conj(a) * num[2]};
            const BoundCheck c = schwarz_bound_check(AnalyticFunction::rational(num, den));
            if (!c.ok) return false;
            r.value = std::max(r.value, c.lhs - c.rhs);
        }
        r.threshold = 1e-12;
        r.detail = "equality case gap and 50 random admissible";
        return r.value <= r.threshold;
    });

    run.run("theorem-constants-ordering", [&](CheckResult& r) {
        r.value = flat_rate_bound();
        r.threshold = general_rate_bound();
        return r.value < r.threshold;
    });

    run.run("rkc-bound-suite", [&](CheckResult& r) {
        Rng rng = base.fork(16);
        r.value = 0.0; // worst |rate| / bound ratio observed
        for (int i = 0; i < opts.rkc_instances; ++i) {
            Rng sub = rng.fork(i);
            const int order = (i % 5 < 3) ? 6 : 2;
            const FamilyInstance inst = random_family_instance(sub, order, Target::disk);
            const CurvatureReport rep = family_report(inst.bc);
            if (!rep.hall.ok || !rep.schwarz.ok) return false;
            const double rel = std::abs(rep.rate_closed) / general_rate_bound();
            r.value = std::max(r.value, rel);
            if (std::abs(rep.rate_closed) >= general_rate_bound()) return false;
            if (rep.q0_abs <= 1e-12 && std::abs(rep.rate_closed) >= flat_rate_bound()) return false;
            if (std::abs(rep.rate_limit - rep.rate_closed) >
                1e-3 * std::max(1e-8, std::abs(rep.rate_closed)))
                return false;
        }
        r.threshold = 1.0;
        r.detail = std::to_string(opts.rkc_instances) + " seeded instances, zero violations";
        return r.value < r.threshold;
    });

    run.run("hexagon-extremal-margin", [&](CheckResult& r) {
        const CurvatureReport rep = hexagon_report(hexagon);
        r.value = rep.margin_flat ? std::abs(*rep.margin_flat) : 1e300;
        r.threshold = 1e-10;
        r.detail = "margin_flat ~ 0, annotated: " + rep.annotation;
        return r.value <= r.threshold;
    });

    run.run("hexagon-boundary-geometry", [&](CheckResult& r) {
        const BoundaryGeometry bg = boundary_geometry(hexagon, 360);
        r.value = bg.max_distance;
        r.threshold = 0.01;
        for (int k = 0; k < 6; ++k) {
            if (std::abs(std::abs(bg.vertex_images[k]) - 1.0) > 0.01) return false;
            if (std::abs(std::abs(bg.midpoint_images[k]) - std::sqrt(3.0) / 2.0) > 0.01) return false;
        }
        return r.value <= r.threshold;
    });

    run.run("mesh-counting-and-determinism", [&](CheckResult& r) {
        const MeshArtifact mesh = hexagon_mesh(hexagon, 2, 6, 0.5);
        if (mesh.vertices.size() != 13 || mesh.faces.size() != 18) return false;
        r.value = static_cast<double>(mesh.vertices.size());
        r.threshold = 13;
        return obj_string(mesh) == obj_string(hexagon_mesh(hexagon, 2, 6, 0.5));
    });

    run.run("serialization-roundtrip", [&](CheckResult& r) {
        const json j = to_json(hexagon.data);
        const WeierstrassData back = weierstrass_from_json(json::parse(j.dump()));
        Rng rng = base.fork(17);
        r.value = 0.0;
        for (int i = 0; i < 100; ++i) {
            const complex z = rng.disk_point(0.95);
            r.value = std::max(r.value, std::abs(back.p()(z) - hexagon.data.p()(z)));
            r.value = std::max(r.value, std::abs(back.q()(z) - hexagon.data.q()(z)));
        }
        r.threshold = 0.0;
        return r.value <= r.threshold;
    });

    return results;
}

} // namespace minsurf
