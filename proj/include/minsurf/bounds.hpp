#pragma once

#include <optional>
#include <string>
#include <vector>

#include "minsurf/graph_jets.hpp"

namespace minsurf {

/// Bound constants, kept as pi-expressions and realized in floating point at
/// comparison time.
inline double general_rate_bound() { return 256.0 * std::pow(kPi, 4) / 729.0; }
inline double flat_rate_bound() { return 16.0 * std::pow(kPi, 4) / 81.0; }
inline double hall_constant() { return 27.0 / (4.0 * kPi * kPi); }

inline constexpr const char* kGeneralRateBoundProvenance = "256*pi^4/729";
inline constexpr const char* kFlatRateBoundProvenance = "16*pi^4/81";
inline constexpr const char* kHallConstantProvenance = "27/(4*pi^2)";

/// |K''(O)| in closed form from the centre jets of (p, q), valid when
/// q'(0) = 0: 4 |q''(0)|^2 / (|p(0)|^4 (1 + |q(0)|^2)^6).
inline double curvature_rate_closed_form(complex p0, complex q0, complex q2) {
    if (p0 == complex{}) throw std::domain_error("curvature_rate_closed_form: p(0) = 0");
    if (std::abs(q0) >= 1.0) throw std::domain_error("curvature_rate_closed_form: |q(0)| must be < 1");
    return 4.0 * std::norm(q2) / (sqr(std::norm(p0)) * std::pow(1.0 + std::norm(q0), 6));
}

/// Schwarz-type bound consumed by the rate estimates together with Hall's:
/// |K''| <= 16 (1-|q0|^2)^2 / (|p0|^4 (1+|q0|^2)^6).
inline double intermediate_rate_bound(complex p0, complex q0) {
    return 16.0 * sqr(1.0 - std::norm(q0)) / (sqr(std::norm(p0)) * std::pow(1.0 + std::norm(q0), 6));
}

struct RateLimitOptions {
    double r0_factor = 0.05;           // r0 = factor * trust radius
    int radii = 7;                     // r_j = r0 2^{-j}, j = 0..radii-1
    int directions = 8;
    double spread_tol = 1e-6;          // max relative cross-direction spread
    double centre_tol = 1e-10;         // |K(0)| must be below this
    bool include_gradient_term = true; // denominator |w|^2 + <grad f(w), w>^2
};

struct RateLimitResult {
    double value = 0.0;  // signed limit (nonpositive)
    double spread = 0.0; // relative cross-direction spread
    std::vector<double> per_direction;
};

/// Richardson estimate of the unrestricted limit of
/// K(w) / (|w|^2 + <grad f(w), w>^2) at a zero-curvature centre.
inline RateLimitResult curvature_rate_limit(const WeierstrassData& data, const RateLimitOptions& opts = {}) {
    if (std::abs(curvature(data, complex{})) > opts.centre_tol)
        throw std::domain_error("curvature_rate_limit: centre curvature is not zero");
    const double r0 = opts.r0_factor * trust_radius(data);

    RateLimitResult out;
    out.per_direction.resize(opts.directions);
    for (int k = 0; k < opts.directions; ++k) {
        const double t = 2.0 * kPi * k / opts.directions;
        const complex e = std::polar(1.0, t);
        std::vector<double> seq(opts.radii);
        for (int j = 0; j < opts.radii; ++j) {
            const double r = r0 * std::pow(2.0, -j);
            const complex w = r * e;
            const complex z = invert_projection(data, w);
            double den = r * r;
            if (opts.include_gradient_term) {
                const auto grad = gradient_f(data, z);
                den *= 1.0 + sqr(grad[0] * std::cos(t) + grad[1] * std::sin(t));
            }
            seq[j] = curvature(data, z) / den;
        }
        // iterated Richardson, eliminating r, r^2, ... error terms
        for (int lev = 1; lev < opts.radii; ++lev) {
            const double w2 = std::pow(2.0, lev);
            for (int j = 0; j + lev < opts.radii; ++j) seq[j] = (w2 * seq[j + 1] - seq[j]) / (w2 - 1.0);
        }
        out.per_direction[k] = seq[0];
    }

    double lo = out.per_direction[0], hi = out.per_direction[0];
    CompensatedSum mean;
    for (double v : out.per_direction) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
        mean.add(v);
    }
    out.value = mean.value() / opts.directions;
    out.spread = (hi - lo) / std::max(std::abs(out.value), 1e-30);
    if (std::abs(out.value) < 1e-12) out.spread = hi - lo; // flat-to-third-order data
    if (out.spread > opts.spread_tol)
        throw convergence_error("curvature_rate_limit: direction dependence beyond tolerance");
    return out;
}

struct BoundCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    bool ok = false;
    bool run = false;
};

/// |q''(0)| <= 2 (1 - |q(0)|^2) for holomorphic self-maps of the disk with
/// q'(0) = 0.
inline BoundCheck schwarz_bound_check(const AnalyticFunction& q, double tol = 1e-12) {
    const Jet j = q.jet(complex{}, 2);
    if (std::abs(j.derivative(1)) > 1e-8)
        throw std::domain_error("schwarz_bound_check: q'(0) must vanish");
    BoundCheck c;
    c.lhs = std::abs(j.derivative(2));
    c.rhs = 2.0 * (1.0 - std::norm(j.value()));
    c.ok = c.lhs <= c.rhs + tol;
    c.run = true;
    return c;
}

/// Hall's gradient bound for harmonic diffeomorphisms of the disk onto
/// itself with f(0) = 0: |p(0)|^2 >= (27/(4 pi^2)) / (1 + |q(0)|^4).
inline BoundCheck hall_bound_check(complex p0, complex q0, double tol = 1e-12) {
    BoundCheck c;
    c.lhs = std::norm(p0);
    c.rhs = hall_constant() / (1.0 + sqr(std::norm(q0)));
    c.ok = c.lhs >= c.rhs - tol;
    c.run = true;
    return c;
}

/// Everything the library can say about the centre of one datum.
struct CurvatureReport {
    double K_at_origin = 0.0;
    double rate_closed = 0.0;       // signed K''(O) from the closed form
    double rate_limit = 0.0;        // signed K''(O) from the Richardson limit
    double limit_spread = 0.0;
    bool limit_run = false;
    double p0_abs = 0.0;
    double q0_abs = 0.0;
    BoundCheck schwarz;
    BoundCheck hall;
    double margin_general = 0.0;
    std::optional<double> margin_flat; // only when q(0) = 0
    std::string annotation;
};

/// Fill the margins against the two theorem constants from |rate_closed|.
inline CurvatureReport& bound_margins(CurvatureReport& report) {
    const double magnitude = std::abs(report.rate_closed);
    report.margin_general = general_rate_bound() - magnitude;
    if (report.q0_abs <= 1e-12)
        report.margin_flat = flat_rate_bound() - magnitude;
    else
        report.margin_flat.reset();
    return report;
}

struct ReportOptions {
    bool run_hall = false; // caller asserts the datum maps the disk onto the disk
    bool run_limit = true;
    RateLimitOptions limit;
    std::string annotation;
};

inline CurvatureReport make_report(const WeierstrassData& data, const ReportOptions& opts = {}) {
    CurvatureReport rep;
    rep.annotation = opts.annotation;
    const Jet qj = data.q().jet(complex{}, 2);
    const complex p0 = data.p()(complex{});
    rep.K_at_origin = curvature(data, complex{});
    rep.p0_abs = std::abs(p0);
    rep.q0_abs = std::abs(qj.value());
    rep.rate_closed = -curvature_rate_closed_form(p0, qj.value(), qj.derivative(2));
    if (opts.run_limit) {
        const RateLimitResult lim = curvature_rate_limit(data, opts.limit);
        rep.rate_limit = lim.value;
        rep.limit_spread = lim.spread;
        rep.limit_run = true;
    }
    rep.schwarz = schwarz_bound_check(data.q());
    if (opts.run_hall) rep.hall = hall_bound_check(p0, qj.value());
    return bound_margins(rep);
}

} // namespace minsurf
