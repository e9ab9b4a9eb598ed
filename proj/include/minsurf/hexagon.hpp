#pragma once

#include "minsurf/bounds.hpp"
#include "minsurf/hyp2f1.hpp"
#include "minsurf/mesh.hpp"

namespace minsurf {

/// The explicit extremal: the Scherk-type minimal graph over the regular
/// hexagon inscribed in the unit disk, with p = 3/(pi (1 + z^6)) and
/// omega = z^4.  The square-root branch is q = -z^2, the one for which the
/// closed-form height below equals Im of the integral of 2 p q.
struct HexagonModel {
    WeierstrassData data;
    PowerSeries g_series; // analytic part with g' = p     (exponents 1 mod 6)
    PowerSeries h_series; // conjugated part, h' = p z^4   (exponents 5 mod 6)
    std::array<double, 6> vertex_angles;   // prevertices: k pi/3, |f| = 1
    std::array<double, 6> singular_angles; // poles of p:  pi/6 + k pi/3, side midpoints

    complex f(complex z) const { return g_series.eval(z) + std::conj(h_series.eval(z)); }
};

inline AnalyticFunction hexagon_p_function(double radius = 0.99999) {
    std::vector<complex> den(7);
    den[0] = kPi;
    den[6] = kPi;
    return AnalyticFunction::rational({3.0}, den, radius);
}

/// Closed-form height of the hexagon graph at z = r e^{is}.
inline double hexagon_height(complex z) {
    const double r = std::abs(z);
    if (r >= 1.0) throw std::domain_error("hexagon_height: |z| must be < 1");
    const double s = std::arg(z);
    const double r3 = r * r * r, r6 = r3 * r3;
    const double sin3s = std::sin(3.0 * s);
    return std::log((1.0 + r6 - 2.0 * r3 * sin3s) / (1.0 + r6 + 2.0 * r3 * sin3s)) / (2.0 * kPi);
}

/// Series realizations of 3 z F(1/6,1;7/6;-z^6)/pi and
/// 3 z^5 F(5/6,1;11/6;-z^6)/(5 pi); with b = 1 the Pochhammer ratio
/// telescopes, so the coefficients reduce to +-1/(6m+a) streams.
/// 96 terms keep even the differentiated series below 1e-12 on |z| <= 0.95
/// (the derivative loses the 1/(6m+1) damping, so 64 terms would not).
inline HexagonModel build_hexagon(int terms = 96, double series_radius = 0.95) {
    const int degree = 6 * terms + 5;
    std::vector<complex> g(degree + 1), h(degree + 1);
    for (int m = 0; m <= terms; ++m) {
        const double sign = (m % 2 == 0) ? 1.0 : -1.0;
        g[6 * m + 1] = sign * 3.0 / (kPi * (6.0 * m + 1.0));
        if (6 * m + 5 <= degree) h[6 * m + 5] = sign * 3.0 / (kPi * (6.0 * m + 5.0));
    }
    const double r6 = std::pow(series_radius, 6.0);
    const double gtail = 3.0 / kPi * std::pow(series_radius, 6.0 * (terms + 1) + 1.0) /
                         ((6.0 * (terms + 1) + 1.0) * (1.0 - r6));
    const double htail = 3.0 / kPi * std::pow(series_radius, 6.0 * (terms + 1) + 5.0) /
                         ((6.0 * (terms + 1) + 5.0) * (1.0 - r6));

    HexagonModel model{
        .data = WeierstrassData(hexagon_p_function(), AnalyticFunction::polynomial({0.0, 0.0, -1.0}, 0.99999),
                                0.999),
        .g_series = PowerSeries(std::move(g), series_radius, gtail),
        .h_series = PowerSeries(std::move(h), series_radius, htail),
        .vertex_angles = {},
        .singular_angles = {},
    };
    for (int k = 0; k < 6; ++k) {
        model.vertex_angles[k] = k * kPi / 3.0;
        model.singular_angles[k] = kPi / 6.0 + k * kPi / 3.0;
    }
    return model;
}

/// Centre report of the extremal datum.  Hall's check is skipped: the image
/// is the hexagon, not the disk, so the disk-onto-disk premise fails.
inline CurvatureReport hexagon_report(const HexagonModel& model) {
    ReportOptions opts;
    opts.annotation = "extremal datum: graph over the hexagon (not the disk); "
                      "attains the flat-centre constant 16*pi^4/81 exactly";
    return make_report(model.data, opts);
}

inline CurvatureReport hexagon_report() { return hexagon_report(build_hexagon()); }

/// Closed form of the analytic parts by partial fractions over the six
/// poles z_k = e^{i pi (2k+1)/6}: g = (3/pi) sum (-z_k/6) log(1 - z/z_k),
/// h = (3/pi) sum (1/(6 z_k)) log(1 - z/z_k).  Valid on |z| <= 1 away from
/// the poles; the principal branch is the radial-path continuation since
/// Re(1 - z/z_k) >= 0 there.
inline complex hexagon_f_closed(complex z) {
    complex g = 0.0, h = 0.0;
    for (int k = 0; k < 6; ++k) {
        const complex zk = std::polar(1.0, kPi * (2.0 * k + 1.0) / 6.0);
        const complex lg = std::log(1.0 - z / zk);
        g += (-zk / 6.0) * lg;
        h += (1.0 / (6.0 * zk)) * lg;
    }
    return 3.0 / kPi * (g + std::conj(h));
}

/// f(r e^{i theta}) by radial quadrature of (p, p z^4); usable at radii
/// beyond the series validity, up to the guard band around the poles of p.
inline complex hexagon_boundary_image(const HexagonModel& model, double theta, double r = 0.999,
                                      double tol = 1e-9) {
    const complex z = std::polar(r, theta);
    const auto& p = model.data.p();
    const complex g = integrate_segment([&](complex w) { return p(w); }, complex{0.0}, z, tol);
    const complex h =
        integrate_segment([&](complex w) { return p(w) * w * w * w * w; }, complex{0.0}, z, tol);
    return g + std::conj(h);
}

/// Distance from a point to the boundary of the regular hexagon with
/// vertices e^{i k pi/3}.
inline double distance_to_hexagon_boundary(complex w) {
    double best = std::numeric_limits<double>::max();
    for (int k = 0; k < 6; ++k) {
        const complex a = std::polar(1.0, k * kPi / 3.0);
        const complex b = std::polar(1.0, (k + 1) * kPi / 3.0);
        const complex ab = b - a;
        const double t = std::clamp(((w - a) * std::conj(ab)).real() / std::norm(ab), 0.0, 1.0);
        best = std::min(best, std::abs(w - (a + t * ab)));
    }
    return best;
}

struct BoundarySample {
    double angle;
    complex image;
    double distance; // to the ideal hexagon boundary
};

struct BoundaryGeometry {
    std::vector<BoundarySample> samples;
    double max_distance = 0.0;
    // radial estimates of the images of the two distinguished angle families
    std::array<complex, 6> vertex_images{};   // at k pi/3: moduli 1
    std::array<complex, 6> midpoint_images{}; // near pi/6 + k pi/3: moduli sqrt(3)/2
};

/// Boundary study at radius 0.999: distances of the images to the ideal
/// hexagon, with a guard band of 1e-3 radians around the singular angles.
inline BoundaryGeometry boundary_geometry(const HexagonModel& model, int samples, double guard = 1e-3) {
    if (samples < 6) throw std::invalid_argument("boundary_geometry: need at least 6 samples");
    BoundaryGeometry out;
    out.samples.reserve(samples);
    for (int i = 0; i < samples; ++i) {
        const double theta = 2.0 * kPi * i / samples;
        bool guarded = false;
        for (double s : model.singular_angles) {
            double d = std::remainder(theta - s, 2.0 * kPi);
            if (std::abs(d) < guard) guarded = true;
        }
        if (guarded) continue;
        const complex w = hexagon_boundary_image(model, theta);
        const double dist = distance_to_hexagon_boundary(w);
        out.samples.push_back({theta, w, dist});
        out.max_distance = std::max(out.max_distance, dist);
    }
    for (int k = 0; k < 6; ++k) {
        out.vertex_images[k] = hexagon_boundary_image(model, model.vertex_angles[k], 0.9995);
        const complex lo = hexagon_boundary_image(model, model.singular_angles[k] - guard, 0.9995);
        const complex hi = hexagon_boundary_image(model, model.singular_angles[k] + guard, 0.9995);
        out.midpoint_images[k] = 0.5 * (lo + hi);
    }
    return out;
}

/// Polar-grid mesh of the hexagon graph: centre plus n_radial rings of
/// n_angular nodes; (u,v) from the series parts, t from the closed form.
inline MeshArtifact hexagon_mesh(const HexagonModel& model, int n_radial, int n_angular, double r_max) {
    if (n_radial < 1 || n_angular < 3) throw std::invalid_argument("hexagon_mesh: grid too small");
    if (r_max >= 1.0) throw std::invalid_argument("hexagon_mesh: r_max must be < 1");
    if (r_max > model.g_series.radius())
        throw std::invalid_argument("hexagon_mesh: r_max beyond the series radius");

    MeshArtifact mesh;
    mesh.vertices.reserve(1 + n_radial * n_angular);
    mesh.vertices.push_back({0.0, 0.0, 0.0, 0.0, 0.0});
    for (int i = 1; i <= n_radial; ++i) {
        const double r = r_max * i / n_radial;
        for (int j = 0; j < n_angular; ++j) {
            const double s = 2.0 * kPi * j / n_angular;
            const complex z = std::polar(r, s);
            const complex w = model.f(z);
            mesh.vertices.push_back({r, s, w.real(), w.imag(), hexagon_height(z)});
        }
    }
    auto ring_index = [&](int ring, int j) { return 1 + (ring - 1) * n_angular + (j % n_angular); };
    for (int j = 0; j < n_angular; ++j) mesh.faces.push_back({0, ring_index(1, j), ring_index(1, j + 1)});
    for (int i = 1; i < n_radial; ++i) {
        for (int j = 0; j < n_angular; ++j) {
            const int a = ring_index(i, j), b = ring_index(i, j + 1);
            const int c = ring_index(i + 1, j), d = ring_index(i + 1, j + 1);
            mesh.faces.push_back({a, c, d});
            mesh.faces.push_back({a, d, b});
        }
    }
    return mesh;
}

} // namespace minsurf
