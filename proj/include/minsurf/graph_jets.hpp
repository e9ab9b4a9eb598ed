#pragma once

#include "minsurf/weierstrass.hpp"

namespace minsurf {

/// Partials of the height function of a minimal graph at one point, through
/// order three.
struct SurfaceJet {
    double f_u = 0.0, f_v = 0.0;
    double f_uu = 0.0, f_uv = 0.0, f_vv = 0.0;
    double f_uuu = 0.0, f_uuv = 0.0, f_uvv = 0.0, f_vvv = 0.0;
};

/// Second partials of the Gaussian curvature (with respect to u, v) at a
/// zero-curvature point.
struct HessianK {
    double K_uu = 0.0, K_uv = 0.0, K_vv = 0.0;
};

struct DirectionProfile {
    double Q = 0.0;       // <H e^{it}, e^{it}>
    double Y = 0.0;       // -2 (1 + <grad f, e^{it}>^2)
    double Y_prime = 0.0; // closed-form derivative of Y in t
    double R = 0.0;       // Q / (1 + <grad f, e^{it}>^2)
};

/// Residual of the minimal surface equation on the jet.
inline double pde_residual(const SurfaceJet& j) {
    return (1.0 + j.f_u * j.f_u) * j.f_vv - 2.0 * j.f_u * j.f_v * j.f_uv + (1.0 + j.f_v * j.f_v) * j.f_uu;
}

inline bool is_flat(const SurfaceJet& j, double tol = 1e-6) {
    return std::abs(j.f_uu) <= tol && std::abs(j.f_uv) <= tol && std::abs(j.f_vv) <= tol;
}

namespace detail {
inline void require_flat(const SurfaceJet& j, const char* who) {
    if (!is_flat(j)) throw std::domain_error(std::string(who) + ": jet is not flat (second partials nonzero)");
}
} // namespace detail

struct MixedThirds {
    double f_uvv = 0.0;
    double f_uuv = 0.0;
};

/// At a zero-curvature point the differentiated minimal-surface equation
/// determines the mixed third partials from the pure ones.
inline MixedThirds close_third_jet(double f_u, double f_v, double f_uuu, double f_vvv) {
    const double den = -1.0 - f_u * f_u + f_v * f_v * (-1.0 + 3.0 * f_u * f_u);
    if (std::abs(den) < 1e-12)
        throw std::domain_error("close_third_jet: singular slope configuration (denominator vanishes)");
    const double f_uvv = (2.0 * f_v * f_vvv * (f_u + f_u * f_u * f_u) + sqr(1.0 + f_v * f_v) * f_uuu) / den;
    const double f_uuv = (f_vvv * sqr(1.0 + f_u * f_u) + 2.0 * (f_v + f_v * f_v * f_v) * f_u * f_uuu) / den;
    return {f_uvv, f_uuv};
}

inline SurfaceJet closed_flat_jet(double f_u, double f_v, double f_uuu, double f_vvv) {
    const MixedThirds m = close_third_jet(f_u, f_v, f_uuu, f_vvv);
    SurfaceJet j;
    j.f_u = f_u;
    j.f_v = f_v;
    j.f_uuu = f_uuu;
    j.f_vvv = f_vvv;
    j.f_uvv = m.f_uvv;
    j.f_uuv = m.f_uuv;
    return j;
}

/// Hessian of K at a flat point, in terms of the third jet.
inline HessianK hessian_of_K(const SurfaceJet& j) {
    detail::require_flat(j, "hessian_of_K");
    const double den = sqr(1.0 + j.f_u * j.f_u + j.f_v * j.f_v);
    return {(-2.0 * sqr(j.f_uuv) + 2.0 * j.f_uvv * j.f_uuu) / den,
            (-j.f_uvv * j.f_uuv + j.f_vvv * j.f_uuu) / den,
            (-2.0 * sqr(j.f_uvv) + 2.0 * j.f_vvv * j.f_uuv) / den};
}

/// Direction functions of the flat-point analysis along e^{it}.
inline DirectionProfile direction_profile(const SurfaceJet& j, double t) {
    detail::require_flat(j, "direction_profile");
    const double c = std::cos(t), s = std::sin(t);
    const double A = -2.0 * s * s * sqr(j.f_uvv) + 2.0 * s * (s * j.f_vvv - c * j.f_uvv) * j.f_uuv;
    const double B = -2.0 * c * c * sqr(j.f_uuv) + 2.0 * c * (s * j.f_vvv + c * j.f_uvv) * j.f_uuu;
    DirectionProfile out;
    const double slope = j.f_u * c + j.f_v * s;
    out.Q = (A + B) / sqr(1.0 + j.f_u * j.f_u + j.f_v * j.f_v);
    out.Y = -2.0 * (1.0 + slope * slope);
    out.Y_prime = -4.0 * std::cos(2.0 * t) * j.f_v * j.f_u + 2.0 * std::sin(2.0 * t) * (sqr(j.f_u) - sqr(j.f_v));
    out.R = out.Q / (1.0 + slope * slope);
    return out;
}

/// Closed form of the second-order curvature rate at a flat point:
/// the unrestricted limit of K(w) / (|w|^2 + <grad f(w), w>^2).
inline double curvature_rate_from_jet(const SurfaceJet& j) {
    detail::require_flat(j, "curvature_rate_from_jet");
    const double fu2 = sqr(j.f_u), fv2 = sqr(j.f_v);
    const double cross = fv2 * (3.0 - fu2) + 3.0 * (1.0 + fu2);
    const double num = std::pow(1.0 + fu2, 3) * sqr(j.f_vvv) +
                       2.0 * j.f_v * j.f_vvv * j.f_u * cross * j.f_uuu + std::pow(1.0 + fv2, 3) * sqr(j.f_uuu);
    const double d2 = 1.0 + fu2 + fv2 * (1.0 - 3.0 * fu2);
    if (std::abs(d2) < 1e-12)
        throw std::domain_error("curvature_rate_from_jet: singular slope configuration");
    return -num / (sqr(1.0 + fv2 + fu2) * sqr(d2));
}

/// Exact third jet at the centre of a graph with q(0) = 0 and q'(0) = 0:
/// the height is Im(C w^3) + higher order with C = q''(0) / (3 p(0)^2).
inline SurfaceJet flat_centre_jet(complex p0, complex q2) {
    const complex C = q2 / (3.0 * p0 * p0);
    SurfaceJet j;
    j.f_uuu = 6.0 * C.imag();
    j.f_vvv = -6.0 * C.real();
    j.f_uuv = -j.f_vvv;
    j.f_uvv = -j.f_uuu;
    return j;
}

/// Height of the graph over the image plane: t at f^{-1}(w).
inline double graph_height(const WeierstrassData& data, complex w, const NewtonOptions& opts = {}) {
    return data.height(invert_projection(data, w, opts));
}

/// Gaussian curvature of the graph as a function of the image point.
inline double graph_curvature(const WeierstrassData& data, complex w, const NewtonOptions& opts = {}) {
    return curvature(data, invert_projection(data, w, opts));
}

struct NumericJetOptions {
    double base_step = 0.0; // 0: 1e-2 * trust radius
    double third_derivative_tol = 1e-4;
};

struct NumericJetResult {
    SurfaceJet jet;
    double err_second = 0.0; // Richardson discrepancy, second partials
    double err_third = 0.0;  // Richardson discrepancy, third partials
};

/// Brute-force jet of the height function at the point over f(z0): central
/// stencils on 7x7 grids at steps h, h/2, h/4 with two Richardson levels.
inline NumericJetResult numeric_jet(const WeierstrassData& data, complex z0, const NumericJetOptions& opts = {}) {
    const double trust = trust_radius(data);
    const double h0 = opts.base_step > 0.0 ? opts.base_step : 1e-2 * trust;
    const complex w0 = data.f_value(z0);
    if (std::abs(w0) + 3.0 * h0 * std::sqrt(2.0) > trust)
        throw std::domain_error("numeric_jet: grid does not fit inside the Newton trust radius");

    // jet entries ordered: f_u f_v f_uu f_uv f_vv f_uuu f_uuv f_uvv f_vvv
    auto stencil = [&](double h) {
        double G[7][7];
        for (int i = -3; i <= 3; ++i)
            for (int j = -3; j <= 3; ++j)
                G[i + 3][j + 3] = graph_height(data, w0 + complex{i * h, j * h});
        auto g = [&](int i, int j) { return G[i + 3][j + 3]; };
        std::array<double, 9> d{};
        d[0] = (g(1, 0) - g(-1, 0)) / (2 * h);
        d[1] = (g(0, 1) - g(0, -1)) / (2 * h);
        d[2] = (g(1, 0) - 2 * g(0, 0) + g(-1, 0)) / (h * h);
        d[3] = (g(1, 1) - g(1, -1) - g(-1, 1) + g(-1, -1)) / (4 * h * h);
        d[4] = (g(0, 1) - 2 * g(0, 0) + g(0, -1)) / (h * h);
        d[5] = (g(2, 0) - 2 * g(1, 0) + 2 * g(-1, 0) - g(-2, 0)) / (2 * h * h * h);
        d[6] = ((g(1, 1) - 2 * g(0, 1) + g(-1, 1)) - (g(1, -1) - 2 * g(0, -1) + g(-1, -1))) / (2 * h * h * h);
        d[7] = ((g(1, 1) - 2 * g(1, 0) + g(1, -1)) - (g(-1, 1) - 2 * g(-1, 0) + g(-1, -1))) / (2 * h * h * h);
        d[8] = (g(0, 2) - 2 * g(0, 1) + 2 * g(0, -1) - g(0, -2)) / (2 * h * h * h);
        return d;
    };

    const auto d1 = stencil(h0), d2 = stencil(h0 / 2), d3 = stencil(h0 / 4);
    NumericJetResult out;
    std::array<double, 9> val{};
    for (int k = 0; k < 9; ++k) {
        const double r1 = (4.0 * d2[k] - d1[k]) / 3.0;
        const double r2 = (4.0 * d3[k] - d2[k]) / 3.0;
        val[k] = (16.0 * r2 - r1) / 15.0;
        const double disc = std::abs(r2 - r1);
        if (k >= 5)
            out.err_third = std::max(out.err_third, disc);
        else if (k >= 2)
            out.err_second = std::max(out.err_second, disc);
    }
    if (out.err_third > opts.third_derivative_tol)
        throw convergence_error("numeric_jet: third-derivative error estimate above tolerance");
    out.jet = SurfaceJet{val[0], val[1], val[2], val[3], val[4], val[5], val[6], val[7], val[8]};
    return out;
}

} // namespace minsurf
