#pragma once

#include <array>
#include <functional>
#include <vector>

#include "minsurf/numeric.hpp"

namespace minsurf {

/// Gauss-Legendre nodes and weights on [-1, 1], computed once per order by
/// Newton iteration on the Legendre recurrence.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

inline const GaussRule& gauss_legendre(int n) {
    static constexpr int kMaxCached = 65;
    static const std::array<GaussRule, kMaxCached> cache = [] {
        std::array<GaussRule, kMaxCached> rules{};
        for (int n = 1; n < kMaxCached; ++n) {
            GaussRule& r = rules[n];
            r.nodes.resize(n);
            r.weights.resize(n);
            for (int i = 0; i < n; ++i) {
                double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
                double dp = 0.0;
                for (int iter = 0; iter < 100; ++iter) {
                    double p0 = 1.0, p1 = x;
                    for (int k = 2; k <= n; ++k) {
                        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                        p0 = p1;
                        p1 = p2;
                    }
                    dp = n * (x * p1 - p0) / (x * x - 1.0);
                    const double dx = p1 / dp;
                    x -= dx;
                    if (std::abs(dx) < 1e-15) break;
                }
                r.nodes[n - 1 - i] = x;
                r.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
            }
        }
        return rules;
    }();
    if (n < 1 || n >= kMaxCached) throw std::invalid_argument("gauss_legendre: unsupported order");
    return cache[n];
}

/// Straight path from the origin to an interior endpoint, with the composite
/// quadrature configuration used along it.
struct RadialPath {
    complex endpoint;
    int segments = 1;
    int nodes_per_segment = 32;
};

namespace detail {

template <class Fn>
complex gl_segment(const Fn& fn, complex a, complex b, int nodes) {
    const GaussRule& rule = gauss_legendre(nodes);
    const complex mid = 0.5 * (a + b);
    const complex half = 0.5 * (b - a);
    CompensatedComplexSum acc;
    for (int i = 0; i < nodes; ++i) acc.add(rule.weights[i] * fn(mid + rule.nodes[i] * half));
    return half * acc.value();
}

} // namespace detail

/// Integral of an analytic integrand over the straight segment [a, b],
/// refined by segment doubling until two refinement levels agree.
template <class Fn>
complex integrate_segment(const Fn& fn, complex a, complex b, double tol = 1e-12, int start_segments = 1,
                          int nodes = 32, int max_segments = 1 << 10) {
    complex prev = 0.0;
    bool have_prev = false;
    for (int segs = start_segments; segs <= max_segments; segs *= 2) {
        CompensatedComplexSum acc;
        for (int s = 0; s < segs; ++s) {
            const complex sa = a + (b - a) * (static_cast<double>(s) / segs);
            const complex sb = a + (b - a) * (static_cast<double>(s + 1) / segs);
            acc.add(detail::gl_segment(fn, sa, sb, nodes));
        }
        const complex cur = acc.value();
        if (have_prev && std::abs(cur - prev) <= tol * (1.0 + std::abs(cur))) return cur;
        prev = cur;
        have_prev = true;
    }
    throw convergence_error("integrate_segment: tolerance not reached at max refinement");
}

/// Integral of fn from 0 to path.endpoint along the straight segment.
template <class Fn>
complex integrate_radial_fn(const Fn& fn, const RadialPath& path, double tol = 1e-12) {
    return integrate_segment(fn, complex{0.0, 0.0}, path.endpoint, tol, path.segments, path.nodes_per_segment);
}

} // namespace minsurf
