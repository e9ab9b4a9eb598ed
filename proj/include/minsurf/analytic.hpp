#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "minsurf/jet.hpp"
#include "minsurf/quadrature.hpp"
#include "minsurf/series.hpp"

namespace minsurf {

namespace detail {

struct AnalyticBackend {
    virtual ~AnalyticBackend() = default;
    virtual Jet jet(complex z, int order) const = 0;
    virtual double radius() const = 0;
    /// Taylor coefficients about 0, length n; empty optional when the backend
    /// has no cheap exact expansion.
    virtual std::optional<std::vector<complex>> taylor(int n) const = 0;
};

inline void poly_jet_accumulate(const std::vector<complex>& coef, complex z, Jet& out) {
    // Horner evaluation of the polynomial and all retained derivatives as
    // Taylor coefficients about z.
    const int len = out.length();
    for (auto it = coef.rbegin(); it != coef.rend(); ++it) {
        for (int k = len - 1; k >= 1; --k) out.coeff_ref(k) = out.coeff(k) * z + out.coeff(k - 1);
        out.coeff_ref(0) = out.coeff(0) * z + *it;
    }
}

struct PolynomialBackend final : AnalyticBackend {
    std::vector<complex> coef;
    double rad;
    PolynomialBackend(std::vector<complex> c, double r) : coef(std::move(c)), rad(r) {
        if (coef.empty()) coef.push_back(complex{});
    }
    Jet jet(complex z, int order) const override {
        Jet out(order + 1);
        poly_jet_accumulate(coef, z, out);
        return out;
    }
    double radius() const override { return rad; }
    std::optional<std::vector<complex>> taylor(int n) const override {
        std::vector<complex> t(n);
        for (int k = 0; k < n && k < static_cast<int>(coef.size()); ++k) t[k] = coef[k];
        return t;
    }
};

struct RationalBackend final : AnalyticBackend {
    std::vector<complex> num, den;
    double rad;
    RationalBackend(std::vector<complex> n, std::vector<complex> d, double r)
        : num(std::move(n)), den(std::move(d)), rad(r) {
        if (num.empty()) num.push_back(complex{});
        if (den.empty() || (den.size() == 1 && den[0] == complex{}))
            throw std::invalid_argument("rational: zero denominator");
    }
    Jet jet(complex z, int order) const override {
        Jet n(order + 1), d(order + 1);
        poly_jet_accumulate(num, z, n);
        poly_jet_accumulate(den, z, d);
        return n / d;
    }
    double radius() const override { return rad; }
    std::optional<std::vector<complex>> taylor(int n) const override {
        if (den[0] == complex{}) return std::nullopt;
        std::vector<complex> t(n);
        for (int k = 0; k < n; ++k) {
            complex acc = k < static_cast<int>(num.size()) ? num[k] : complex{};
            for (int j = 1; j <= k && j < static_cast<int>(den.size()); ++j) acc -= den[j] * t[k - j];
            t[k] = acc / den[0];
        }
        return t;
    }
};

struct SeriesBackend final : AnalyticBackend {
    PowerSeries s;
    explicit SeriesBackend(PowerSeries ps) : s(std::move(ps)) {}
    Jet jet(complex z, int order) const override { return s.jet(z, order); }
    double radius() const override { return s.radius(); }
    std::optional<std::vector<complex>> taylor(int n) const override {
        std::vector<complex> t(n);
        for (int k = 0; k < n && k <= s.degree(); ++k) t[k] = s.coefficients()[k];
        return t;
    }
};

struct ProductBackend;
struct ScaledBackend;

} // namespace detail

/// Holomorphic-function handle: value and derivatives up to order 4 at any
/// interior point, plus an exact Taylor expansion about 0 where the backend
/// admits one.  Immutable after construction, safe to share across threads.
class AnalyticFunction {
  public:
    AnalyticFunction() = default;

    complex operator()(complex z) const { return jet(z, 0).value(); }

    Jet jet(complex z, int order) const {
        require(order >= 0 && order + 1 <= Jet::kMaxLen, "jet order out of range");
        if (std::abs(z) > radius_checked() * (1.0 + 1e-12))
            throw std::domain_error("AnalyticFunction: point outside domain radius");
        return impl_->jet(z, order);
    }

    double domain_radius() const { return radius_checked(); }

    std::optional<std::vector<complex>> taylor(int n) const { return impl_->taylor(n); }

    /// Backend introspection for serialization.
    const detail::AnalyticBackend* backend() const { return impl_.get(); }

    static AnalyticFunction constant(complex c, double radius = 0.999) {
        return wrap(std::make_shared<detail::PolynomialBackend>(std::vector<complex>{c}, radius));
    }
    static AnalyticFunction polynomial(std::vector<complex> coef, double radius = 0.999) {
        return wrap(std::make_shared<detail::PolynomialBackend>(std::move(coef), radius));
    }
    static AnalyticFunction rational(std::vector<complex> num, std::vector<complex> den, double radius = 0.999) {
        return wrap(std::make_shared<detail::RationalBackend>(std::move(num), std::move(den), radius));
    }
    static AnalyticFunction series(PowerSeries s) {
        return wrap(std::make_shared<detail::SeriesBackend>(std::move(s)));
    }
    static AnalyticFunction product(AnalyticFunction a, AnalyticFunction b);
    static AnalyticFunction scaled(AnalyticFunction a, complex factor);

  private:
    static AnalyticFunction wrap(std::shared_ptr<const detail::AnalyticBackend> b) {
        AnalyticFunction f;
        f.impl_ = std::move(b);
        return f;
    }
    double radius_checked() const {
        if (!impl_) throw std::logic_error("empty AnalyticFunction");
        return impl_->radius();
    }
    static void require(bool ok, const char* msg) {
        if (!ok) throw std::invalid_argument(msg);
    }

    std::shared_ptr<const detail::AnalyticBackend> impl_;

    friend struct detail::ProductBackend;
    friend struct detail::ScaledBackend;
};

namespace detail {

struct ProductBackend final : AnalyticBackend {
    AnalyticFunction a, b;
    ProductBackend(AnalyticFunction x, AnalyticFunction y) : a(std::move(x)), b(std::move(y)) {}
    Jet jet(complex z, int order) const override { return a.jet(z, order) * b.jet(z, order); }
    double radius() const override { return std::min(a.domain_radius(), b.domain_radius()); }
    std::optional<std::vector<complex>> taylor(int n) const override {
        auto ta = a.taylor(n);
        auto tb = b.taylor(n);
        if (!ta || !tb) return std::nullopt;
        std::vector<complex> t(n);
        for (int k = 0; k < n; ++k) {
            complex acc = 0.0;
            for (int j = 0; j <= k; ++j) acc += (*ta)[j] * (*tb)[k - j];
            t[k] = acc;
        }
        return t;
    }
};

struct ScaledBackend final : AnalyticBackend {
    AnalyticFunction a;
    complex s;
    ScaledBackend(AnalyticFunction x, complex f) : a(std::move(x)), s(f) {}
    Jet jet(complex z, int order) const override { return s * a.jet(z, order); }
    double radius() const override { return a.domain_radius(); }
    std::optional<std::vector<complex>> taylor(int n) const override {
        auto t = a.taylor(n);
        if (!t) return std::nullopt;
        for (auto& c : *t) c *= s;
        return t;
    }
};

} // namespace detail

inline AnalyticFunction AnalyticFunction::product(AnalyticFunction a, AnalyticFunction b) {
    return wrap(std::make_shared<detail::ProductBackend>(std::move(a), std::move(b)));
}
inline AnalyticFunction AnalyticFunction::scaled(AnalyticFunction a, complex factor) {
    return wrap(std::make_shared<detail::ScaledBackend>(std::move(a), factor));
}

/// Derivatives through the Cauchy integral on a circle around z; the
/// cross-check (and fallback) for the backend jets.
template <class Fn>
Jet cauchy_jet(const Fn& fn, complex z, int order, double circle_radius) {
    Jet out(order + 1);
    for (int m = 64; m <= 4096; m *= 2) {
        Jet cur(order + 1);
        std::vector<CompensatedComplexSum> acc(order + 1);
        for (int i = 0; i < m; ++i) {
            const double t = 2.0 * kPi * i / m;
            const complex w = std::polar(circle_radius, t);
            const complex fw = fn(z + w);
            complex wpow = 1.0;
            for (int k = 0; k <= order; ++k) {
                acc[k].add(fw / wpow);
                wpow *= w;
            }
        }
        for (int k = 0; k <= order; ++k) cur.coeff_ref(k) = acc[k].value() / static_cast<double>(m);
        if (m > 64) {
            double diff = 0.0, scale = 0.0;
            for (int k = 0; k <= order; ++k) {
                diff = std::max(diff, std::abs(cur.coeff(k) - out.coeff(k)));
                scale = std::max(scale, std::abs(cur.coeff(k)));
            }
            if (diff <= 1e-13 * (1.0 + scale)) return cur;
        }
        out = cur;
    }
    return out;
}

inline Jet cauchy_jet(const AnalyticFunction& fn, complex z, int order) {
    const double rho = std::min(0.1, (fn.domain_radius() - std::abs(z)) / 2.0);
    if (rho <= 0.0) throw std::domain_error("cauchy_jet: no room around the point");
    return cauchy_jet([&fn](complex w) { return fn(w); }, z, order, rho);
}

/// Integral of fn from 0 to path.endpoint; rejects endpoints outside the
/// function's domain.
inline complex integrate_radial(const AnalyticFunction& fn, const RadialPath& path, double tol = 1e-12) {
    if (std::abs(path.endpoint) >= fn.domain_radius() * (1.0 + 1e-12))
        throw std::domain_error("integrate_radial: endpoint outside domain radius");
    return integrate_radial_fn([&fn](complex z) { return fn(z); }, path, tol);
}

/// Winding number of fn along the circle |z| = r, by accumulating argument
/// increments over a refining sample until the result is stable.  Used to
/// detect zeros (branch obstructions) inside the circle.
inline int winding_number(const AnalyticFunction& fn, double r, int min_samples = 2048) {
    for (int m = min_samples; m <= 1 << 16; m *= 2) {
        double total = 0.0;
        bool fine = true;
        complex prev = fn(std::polar(r, 0.0));
        if (prev == complex{}) return std::numeric_limits<int>::max();
        for (int i = 1; i <= m; ++i) {
            const complex cur = fn(std::polar(r, 2.0 * kPi * i / m));
            if (cur == complex{}) return std::numeric_limits<int>::max();
            const double d = std::arg(cur / prev);
            if (std::abs(d) > 2.5) {
                fine = false;
                break;
            }
            total += d;
            prev = cur;
        }
        if (fine) return static_cast<int>(std::lround(total / (2.0 * kPi)));
    }
    throw convergence_error("winding_number: argument could not be tracked");
}

/// Holomorphic square root of omega = z^v * psi(z) with psi nonvanishing on
/// the working radius: returns q with q^2 = omega and the branch fixed by
/// taking sqrt(psi(0)) in the closed right half-plane.
inline AnalyticFunction sqrt_branch(const AnalyticFunction& omega, int vanishing_order, int series_terms = 256) {
    if (vanishing_order < 0 || vanishing_order % 2 != 0)
        throw std::domain_error("sqrt_branch: vanishing order must be even and nonnegative");

    const int half = vanishing_order / 2;
    const int need = series_terms + vanishing_order;
    auto tay = omega.taylor(need);
    if (!tay) {
        // No exact expansion rule; take a Cauchy expansion about 0 instead.
        const double rho = 0.5 * omega.domain_radius();
        std::vector<complex> t(need);
        const int m = 1 << 14;
        std::vector<CompensatedComplexSum> acc(need);
        for (int i = 0; i < m; ++i) {
            const complex w = std::polar(rho, 2.0 * kPi * i / m);
            const complex fw = omega(w);
            complex wpow = 1.0;
            for (int k = 0; k < need; ++k) {
                acc[k].add(fw / wpow);
                wpow *= w;
            }
        }
        for (int k = 0; k < need; ++k) t[k] = acc[k].value() / static_cast<double>(m);
        tay = std::move(t);
    }

    // Leading coefficients below the stated vanishing order must be noise.
    for (int k = 0; k < vanishing_order; ++k)
        if (std::abs((*tay)[k]) > 1e-9)
            throw std::domain_error("sqrt_branch: stated vanishing order disagrees with the data");
    std::vector<complex> psi(tay->begin() + vanishing_order, tay->end());
    if (psi.empty() || psi[0] == complex{})
        throw std::domain_error("sqrt_branch: psi(0) vanishes; odd-order zero at the origin");

    // Zeros of psi inside the working radius obstruct a single-valued root.
    const double guard_r = 0.98 * omega.domain_radius();
    const int wind = winding_number(omega, guard_r);
    if (wind != vanishing_order)
        throw std::domain_error("sqrt_branch: branch obstruction (zero of psi inside working radius)");

    complex s0 = std::sqrt(psi[0]);
    if (s0.real() < 0.0 || (s0.real() == 0.0 && s0.imag() < 0.0)) s0 = -s0;
    std::vector<complex> root(psi.size());
    root[0] = s0;
    for (std::size_t n = 1; n < psi.size(); ++n) {
        complex acc = psi[n];
        for (std::size_t j = 1; j < n; ++j) acc -= root[j] * root[n - j];
        root[n] = acc / (2.0 * s0);
    }

    std::vector<complex> q(root.size() + half);
    for (std::size_t n = 0; n < root.size(); ++n) q[n + half] = root[n];

    // Usable radius: shrink until the root series visibly contracts.
    double rad = omega.domain_radius();
    while (rad > 0.05 && PowerSeries::estimate_tail(q, rad) > 1e-10) rad *= 0.9;
    const double tail = PowerSeries::estimate_tail(q, rad);
    return AnalyticFunction::series(PowerSeries(std::move(q), rad, tail));
}

} // namespace minsurf
