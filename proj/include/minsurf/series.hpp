#pragma once

#include <algorithm>
#include <vector>

#include "minsurf/jet.hpp"
#include "minsurf/numeric.hpp"

namespace minsurf {

/// Finite complex power series a0 + a1 z + ... + aN z^N together with the
/// radius on which it stands in for the underlying function and a bound for
/// the discarded tail on that radius.
class PowerSeries {
  public:
    PowerSeries() : radius_(1.0), tail_bound_(0.0) {}

    PowerSeries(std::vector<complex> coefficients, double radius, double tail_bound)
        : coef_(std::move(coefficients)), radius_(radius), tail_bound_(tail_bound) {
        if (radius_ <= 0.0) throw std::invalid_argument("PowerSeries: radius must be positive");
        if (tail_bound_ < 0.0) throw std::invalid_argument("PowerSeries: negative tail bound");
        if (coef_.empty()) coef_.push_back(complex{});
    }

    /// Polynomial constructor: the series is exact, any radius is valid.
    static PowerSeries polynomial(std::vector<complex> coefficients, double radius = 1.0) {
        return PowerSeries(std::move(coefficients), radius, 0.0);
    }

    const std::vector<complex>& coefficients() const { return coef_; }
    int degree() const { return static_cast<int>(coef_.size()) - 1; }
    double radius() const { return radius_; }
    double tail_bound() const { return tail_bound_; }

    complex eval(complex z) const {
        check_radius(z);
        complex acc = 0.0;
        for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) acc = acc * z + *it;
        return acc;
    }

    /// Value and derivatives 1..order by termwise differentiation.
    std::vector<complex> eval_jet(complex z, int order) const {
        check_radius(z);
        if (order < 0 || order > 4) throw std::invalid_argument("eval_jet: order must be in [0,4]");
        std::vector<complex> out(order + 1);
        for (int d = 0; d <= order; ++d) {
            CompensatedComplexSum sum;
            // Horner is not applicable once the falling factorial enters; sum
            // low-to-high with compensation instead.
            complex zp = 1.0;
            for (std::size_t k = d; k < coef_.size(); ++k) {
                double fall = 1.0;
                for (int j = 0; j < d; ++j) fall *= static_cast<double>(k - j);
                sum.add(coef_[k] * fall * zp);
                zp *= z;
            }
            out[d] = sum.value();
        }
        return out;
    }

    Jet jet(complex z, int order) const {
        auto v = eval_jet(z, order);
        Jet j(order + 1);
        double fact = 1.0;
        for (int k = 0; k <= order; ++k) {
            if (k >= 2) fact *= k;
            j.coeff_ref(k) = v[k] / fact;
        }
        return j;
    }

    PowerSeries derivative() const {
        std::vector<complex> d;
        d.reserve(std::max<std::size_t>(coef_.size(), 2) - 1);
        for (std::size_t k = 1; k < coef_.size(); ++k) d.push_back(coef_[k] * static_cast<double>(k));
        if (d.empty()) d.push_back(complex{});
        // Differentiating the tail multiplies the bound by at most N/r in the
        // worst Cauchy estimate; keep a crude but safe factor.
        const double grow = static_cast<double>(coef_.size()) / radius_;
        return PowerSeries(std::move(d), radius_, tail_bound_ * grow);
    }

    PowerSeries antiderivative() const {
        std::vector<complex> a(coef_.size() + 1);
        a[0] = 0.0;
        for (std::size_t k = 0; k < coef_.size(); ++k) a[k + 1] = coef_[k] / static_cast<double>(k + 1);
        return PowerSeries(std::move(a), radius_, tail_bound_ * radius_);
    }

    PowerSeries truncated(int new_degree) const {
        std::vector<complex> c(coef_.begin(), coef_.begin() + std::min<std::size_t>(new_degree + 1, coef_.size()));
        double extra = 0.0;
        for (std::size_t k = new_degree + 1; k < coef_.size(); ++k)
            extra += std::abs(coef_[k]) * std::pow(radius_, static_cast<double>(k));
        return PowerSeries(std::move(c), radius_, tail_bound_ + extra);
    }

    /// Geometric-extrapolation estimate for the tail of a coefficient stream
    /// that has been cut at its last element.
    static double estimate_tail(const std::vector<complex>& coef, double radius) {
        const std::size_t n = coef.size();
        if (n < 8) return 0.0;
        double last = 0.0, prev = 0.0;
        for (std::size_t k = n - 4; k < n; ++k) last = std::max(last, std::abs(coef[k]));
        for (std::size_t k = n - 8; k < n - 4; ++k) prev = std::max(prev, std::abs(coef[k]));
        const double rN = std::pow(radius, static_cast<double>(n - 1));
        if (last == 0.0) return prev * rN * 1e-12;
        double ratio = (prev > 0.0) ? std::min(0.99, last / prev) : 0.5;
        ratio = std::max(ratio, 1e-6);
        const double r4 = std::pow(ratio, 0.25) * radius; // per-index decay estimate
        if (r4 >= 0.999) return last * rN * 1e3;           // no contraction: give up loudly
        return last * rN / (1.0 - r4);
    }

  private:
    void check_radius(complex z) const {
        if (std::abs(z) > radius_ * (1.0 + 1e-12))
            throw std::domain_error("PowerSeries: evaluation outside validity radius");
    }

    std::vector<complex> coef_;
    double radius_;
    double tail_bound_;
};

} // namespace minsurf
