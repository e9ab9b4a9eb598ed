#pragma once

#include <array>
#include <string>

#include "minsurf/analytic.hpp"
#include "minsurf/rng.hpp"

namespace minsurf {

/// Point of the minimal graph over the parameter z: position (u, v, t) and
/// the unit normal.
struct SurfacePoint {
    complex z;
    std::array<double, 3> position;
    std::array<double, 3> normal;
};

struct DataDiagnostics {
    bool ok = true;
    double min_abs_p = 0.0;
    double max_abs_q = 0.0;
    double min_jacobian = 0.0;
    std::string message;
};

namespace detail {

struct DerivedSeries {
    PowerSeries h;      // antiderivative of p
    PowerSeries g;      // antiderivative of p q^2
    PowerSeries height; // antiderivative of 2 p q
    double radius = 0.0;
};

inline std::vector<complex> convolve(const std::vector<complex>& a, const std::vector<complex>& b, int n) {
    std::vector<complex> out(n);
    for (int k = 0; k < n; ++k) {
        complex acc = 0.0;
        const int jmax = std::min<int>(k, static_cast<int>(a.size()) - 1);
        for (int j = 0; j <= jmax; ++j) {
            const int i = k - j;
            if (i < static_cast<int>(b.size())) acc += a[j] * b[i];
        }
        out[k] = acc;
    }
    return out;
}

} // namespace detail

/// Enneper-Weierstrass generator pair (p, q): p = f_z, q the square root of
/// the second Beltrami coefficient.  Derived views (omega = q^2, the two
/// analytic parts, the height integrand) are built from the pair.
class WeierstrassData {
  public:
    WeierstrassData(AnalyticFunction p, AnalyticFunction q, double domain_radius = 0.0,
                    std::optional<AnalyticFunction> omega_exact = std::nullopt)
        : p_(std::move(p)), q_(std::move(q)), omega_exact_(std::move(omega_exact)) {
        radius_ = std::min(p_.domain_radius(), q_.domain_radius());
        if (domain_radius > 0.0) radius_ = std::min(radius_, domain_radius);
        build_series();
    }

    const AnalyticFunction& p() const { return p_; }
    const AnalyticFunction& q() const { return q_; }
    double domain_radius() const { return radius_; }
    double series_radius() const { return derived_ ? derived_->radius : 0.0; }

    /// |omega(z)| = |q(z)|^2, available beyond q's series radius when the
    /// datum carries the exact second Beltrami coefficient.
    double omega_abs(complex z) const {
        if (omega_exact_ && std::abs(z) < omega_exact_->domain_radius()) return std::abs((*omega_exact_)(z));
        return std::norm(q_(z));
    }
    double omega_radius() const { return omega_exact_ ? omega_exact_->domain_radius() : q_.domain_radius(); }

    /// The datum for the mirrored surface (q -> -q flips the height sign).
    WeierstrassData mirrored() const {
        return WeierstrassData(p_, AnalyticFunction::scaled(q_, -1.0), radius_, omega_exact_);
    }

    /// Sampled validation of the orientation-preserving graph invariants.
    DataDiagnostics validate(int samples = 1000, std::uint64_t seed = 2026) const {
        DataDiagnostics d;
        d.min_abs_p = std::numeric_limits<double>::max();
        d.min_jacobian = std::numeric_limits<double>::max();
        Rng rng(seed);
        const double r = 0.995 * radius_;
        std::vector<complex> probes = {complex{0.0}, complex{r / 2}, complex{-r / 2}, complex{0.0, r / 2},
                                       complex{0.0, -r / 2}};
        for (int i = 0; i < samples; ++i) {
            const complex z = i < static_cast<int>(probes.size()) ? probes[i] : rng.disk_point(r);
            const double ap = std::abs(p_(z));
            const double aq = std::abs(q_(z));
            d.min_abs_p = std::min(d.min_abs_p, ap);
            d.max_abs_q = std::max(d.max_abs_q, aq);
            d.min_jacobian = std::min(d.min_jacobian, ap * ap * (1.0 - aq * aq * aq * aq));
        }
        if (d.min_abs_p <= 1e-12) {
            d.ok = false;
            d.message = "p vanishes on the working radius";
        } else if (d.max_abs_q >= 1.0) {
            d.ok = false;
            d.message = "|q| reaches 1 on the working radius (not orientation preserving)";
        }
        return d;
    }

    static WeierstrassData checked(AnalyticFunction p, AnalyticFunction q, double domain_radius = 0.0) {
        WeierstrassData d(std::move(p), std::move(q), domain_radius);
        const DataDiagnostics diag = d.validate();
        if (!diag.ok) throw std::domain_error("WeierstrassData: " + diag.message);
        return d;
    }

    /// f(z) - f(0) for the harmonic projection f = h + conj(g).
    complex f_value(complex z, double tol = 1e-13) const {
        if (within_series(z)) return derived_->h.eval(z) + std::conj(derived_->g.eval(z));
        const complex h = integrate_radial(p_, {.endpoint = z}, tol);
        const complex g = integrate_radial_fn([this](complex w) { return p_(w) * sqr_q(w); }, {.endpoint = z}, tol);
        return h + std::conj(g);
    }

    /// Height t(z) = Im of the integral of 2 p q from 0 to z.
    double height(complex z, double tol = 1e-13) const {
        if (within_series(z)) return derived_->height.eval(z).imag();
        const complex t = integrate_radial_fn([this](complex w) { return 2.0 * p_(w) * q_(w); }, {.endpoint = z}, tol);
        return t.imag();
    }

  private:
    bool within_series(complex z) const { return derived_ && std::abs(z) <= derived_->radius; }
    complex sqr_q(complex w) const {
        const complex qv = q_(w);
        return qv * qv;
    }

    void build_series() {
        for (int len = 128; len <= 4096; len *= 2) {
            auto tp = p_.taylor(len);
            auto tq = q_.taylor(len);
            if (!tp || !tq) return; // quadrature-only data
            auto q2 = detail::convolve(*tq, *tq, len);
            auto pq2 = detail::convolve(*tp, q2, len);
            auto pq = detail::convolve(*tp, *tq, len);
            for (auto& c : pq) c *= 2.0;

            double r = 0.85 * radius_;
            const auto worst_tail = [&](double rr) {
                return std::max({PowerSeries::estimate_tail(*tp, rr), PowerSeries::estimate_tail(pq2, rr),
                                 PowerSeries::estimate_tail(pq, rr)});
            };
            if (worst_tail(r) > 1e-13 && len < 4096) continue;
            while (r > 0.2 * radius_ && worst_tail(r) > 1e-13) r *= 0.9;
            if (worst_tail(r) > 1e-13) return;

            auto anti = [r](const std::vector<complex>& c) {
                std::vector<complex> a(c.size() + 1);
                for (std::size_t k = 0; k < c.size(); ++k) a[k + 1] = c[k] / static_cast<double>(k + 1);
                const double tail = PowerSeries::estimate_tail(a, r);
                return PowerSeries(std::move(a), r, tail);
            };
            derived_ = std::make_shared<detail::DerivedSeries>(
                detail::DerivedSeries{anti(*tp), anti(pq2), anti(pq), r});
            return;
        }
    }

    AnalyticFunction p_, q_;
    std::optional<AnalyticFunction> omega_exact_;
    double radius_;
    std::shared_ptr<const detail::DerivedSeries> derived_;
};

/// The triple (phi1, phi2, phi3) = (p(1+q^2), -i p(1-q^2), -2 i p q).
inline std::array<complex, 3> ew_components(const WeierstrassData& data, complex z) {
    const complex p = data.p()(z);
    const complex q = data.q()(z);
    const complex i{0.0, 1.0};
    return {p * (1.0 + q * q), -i * p * (1.0 - q * q), -2.0 * i * p * q};
}

/// Gauss map under stereographic projection from (0,0,-1).
inline complex gauss_map(const WeierstrassData& data, complex z) {
    return complex{0.0, 1.0} * data.q()(z);
}

/// Gaussian curvature of the graph at the point over f(z).
inline double curvature(const WeierstrassData& data, complex z) {
    const Jet qj = data.q().jet(z, 1);
    const double qp = std::abs(qj.derivative(1));
    const double aq = std::abs(qj.value());
    const double ap = std::abs(data.p()(z));
    const double den = ap * ap * sqr(sqr(1.0 + aq * aq));
    return -4.0 * qp * qp / den;
}

/// Curvature through the second Beltrami coefficient, with the unsquared
/// |h'g'| that makes the omega-form consistent with the (p,q)-form.
inline double curvature_omega_form(const WeierstrassData& data, complex z) {
    const Jet qj = data.q().jet(z, 1);
    const complex q = qj.value();
    const complex omega = q * q;
    const complex omega_p = 2.0 * q * qj.derivative(1);
    const complex p = data.p()(z);
    const complex hp = p;
    const complex gp = p * omega;
    const double den = std::abs(hp * gp) * sqr(sqr(1.0 + std::abs(omega)));
    if (den == 0.0) throw std::domain_error("curvature_omega_form: needs q != 0");
    return -std::abs(omega_p) * std::abs(omega_p) / den;
}

/// Graph gradient (f_u, f_v) of the height function from the value of q.
/// Equivalently 2 i conj(q) / (1 - |q|^2) as f_u + i f_v; the sign is the one
/// consistent with the height convention t = Im integral of 2 p q (checked
/// against finite differences of the reconstructed height).
inline std::array<double, 2> gradient_from_q(complex q) {
    const double a = q.real(), b = q.imag();
    const double den = 1.0 - (a * a + b * b);
    if (std::abs(den) < 1e-14) throw std::domain_error("gradient_from_q: |q| = 1, graph gradient blows up");
    return {2.0 * b / den, 2.0 * a / den};
}

inline std::array<double, 2> gradient_f(const WeierstrassData& data, complex z) {
    return gradient_from_q(data.q()(z));
}

/// Jacobian of the harmonic projection, |p|^2 (1 - |q|^4) > 0.
inline double jacobian(const WeierstrassData& data, complex z) {
    const double ap = std::abs(data.p()(z));
    const double aq = std::abs(data.q()(z));
    return ap * ap * (1.0 - aq * aq * aq * aq);
}

/// Conservative radius in the image plane on which Newton inversion of the
/// projection is trusted.
inline double trust_radius(const WeierstrassData& data) {
    return 0.5 * std::abs(data.p()(complex{})) * data.domain_radius();
}

struct NewtonOptions {
    double tol = 1e-12;
    int max_iter = 64;
    double trust = 0.0; // 0: use trust_radius(data)
};

/// Solve f(z) = w by Newton iteration on the real 2x2 system with the exact
/// Jacobian from (h', g') = (p, p q^2).
inline complex invert_projection(const WeierstrassData& data, complex w, const NewtonOptions& opts = {}) {
    const double trust = opts.trust > 0.0 ? opts.trust : trust_radius(data);
    if (std::abs(w) > trust) throw std::domain_error("invert_projection: target outside trust radius");
    complex z = w / data.p()(complex{});
    for (int it = 0; it < opts.max_iter; ++it) {
        const complex r = w - data.f_value(z);
        if (std::abs(r) <= opts.tol) return z;
        const complex a = data.p()(z);
        const complex qv = data.q()(z);
        const complex b = std::conj(a * qv * qv);
        const double det = std::norm(a) - std::norm(b);
        if (det <= 1e-15) throw std::domain_error("invert_projection: degenerate Jacobian");
        z += (std::conj(a) * r - b * std::conj(r)) / det;
        if (std::abs(z) >= data.domain_radius())
            throw convergence_error("invert_projection: iterate left the domain");
    }
    throw convergence_error("invert_projection: no convergence within iteration budget");
}

/// Surface point by radial integration of the Weierstrass components, plus
/// the closed-form unit normal.
inline SurfacePoint surface_point(const WeierstrassData& data, complex z, RadialPath path = {}, double tol = 1e-12) {
    path.endpoint = z;
    const complex f = integrate_radial(data.p(), path, tol) +
                      std::conj(integrate_radial_fn(
                          [&data](complex w) {
                              const complex qv = data.q()(w);
                              return data.p()(w) * qv * qv;
                          },
                          path, tol));
    const complex tint = integrate_radial_fn([&data](complex w) { return 2.0 * data.p()(w) * data.q()(w); }, path, tol);
    const complex qv = data.q()(z);
    const double a = qv.real(), b = qv.imag();
    const double n2 = 1.0 + a * a + b * b;
    SurfacePoint pt;
    pt.z = z;
    pt.position = {f.real(), f.imag(), tint.imag()};
    pt.normal = {-2.0 * b / n2, -2.0 * a / n2, (1.0 - (a * a + b * b)) / n2};
    return pt;
}

} // namespace minsurf
