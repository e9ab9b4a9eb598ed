#pragma once

#include "minsurf/bounds.hpp"
#include "minsurf/hexagon.hpp"

namespace minsurf {

enum class Target { disk, hexagon };

inline const char* target_name(Target t) { return t == Target::disk ? "disk" : "hexagon"; }

/// Point of the target curve at boundary parameter phi.  Both curves are
/// star-shaped about 0, so the polar angle serves as the parameter.
inline complex target_point(Target target, double phi) {
    if (target == Target::disk) return std::polar(1.0, phi);
    // regular hexagon with vertices e^{i k pi/3}
    const double local = std::remainder(phi - kPi / 6.0, kPi / 3.0);
    const double rho = (std::sqrt(3.0) / 2.0) / std::cos(local);
    return std::polar(rho, phi);
}

/// Monotone circle-to-boundary parameter correspondence, sampled at 4096
/// uniform angles.  Harmonic extension of theta -> target_point(phi(theta))
/// is a diffeomorphism onto the convex target whenever phi is monotone.
struct BoundaryCorrespondence {
    static constexpr int kSamples = 4096;

    std::vector<double> phi;
    int symmetry_order = 1;
    Target target = Target::disk;
    // generating parameters when the correspondence is parametric
    std::vector<double> epsilons, deltas;

    double total_increase() const { return phi.front() + 2.0 * kPi - phi.back(); }
};

namespace detail {
inline double param_phi(double theta, const std::vector<double>& eps, const std::vector<double>& del, int m) {
    double out = theta;
    for (std::size_t j = 0; j < eps.size(); ++j)
        out += eps[j] * std::sin(m * (static_cast<double>(j) + 1.0) * theta + del[j]);
    return out;
}
} // namespace detail

/// Build phi(theta) = theta + sum_j eps_j sin(m j theta + delta_j), checking
/// strict monotonicity and the stated symmetry on the samples.
inline BoundaryCorrespondence correspondence_from_params(Target target, std::vector<double> epsilons,
                                                         std::vector<double> deltas, int symmetry_order) {
    if (epsilons.size() != deltas.size())
        throw std::invalid_argument("correspondence_from_params: epsilons/deltas size mismatch");
    if (symmetry_order < 1) throw std::invalid_argument("correspondence_from_params: bad symmetry order");
    BoundaryCorrespondence bc;
    bc.symmetry_order = symmetry_order;
    bc.target = target;
    bc.epsilons = std::move(epsilons);
    bc.deltas = std::move(deltas);
    bc.phi.resize(BoundaryCorrespondence::kSamples);
    for (int i = 0; i < BoundaryCorrespondence::kSamples; ++i)
        bc.phi[i] = detail::param_phi(2.0 * kPi * i / BoundaryCorrespondence::kSamples, bc.epsilons, bc.deltas,
                                      symmetry_order);
    for (int i = 0; i + 1 < BoundaryCorrespondence::kSamples; ++i)
        if (bc.phi[i + 1] <= bc.phi[i])
            throw std::domain_error("correspondence_from_params: correspondence is not strictly monotone");
    if (bc.total_increase() <= 0.0)
        throw std::domain_error("correspondence_from_params: total increase must be 2 pi");
    // stated symmetry, checked at off-grid angles
    Rng probe(12021);
    for (int i = 0; i < 32; ++i) {
        const double t = probe.uniform(0.0, 2.0 * kPi);
        const double a = detail::param_phi(t + 2.0 * kPi / symmetry_order, bc.epsilons, bc.deltas, symmetry_order);
        const double b = detail::param_phi(t, bc.epsilons, bc.deltas, symmetry_order) + 2.0 * kPi / symmetry_order;
        if (std::abs(a - b) > 1e-12)
            throw std::domain_error("correspondence_from_params: symmetry violated");
    }
    return bc;
}

inline BoundaryCorrespondence identity_correspondence(Target target, int symmetry_order = 6) {
    return correspondence_from_params(target, {}, {}, symmetry_order);
}

/// Sampled correspondences are admitted weakly monotone: polygon-target
/// boundary maps have genuine plateaus (whole arcs mapping to a vertex), the
/// Scherk-type limit of the strictly monotone family.
inline BoundaryCorrespondence correspondence_from_samples(Target target, std::vector<double> phi,
                                                          int symmetry_order) {
    if (static_cast<int>(phi.size()) != BoundaryCorrespondence::kSamples)
        throw std::invalid_argument("correspondence_from_samples: need exactly 4096 samples");
    BoundaryCorrespondence bc;
    bc.phi = std::move(phi);
    bc.symmetry_order = symmetry_order;
    bc.target = target;
    for (int i = 0; i + 1 < BoundaryCorrespondence::kSamples; ++i)
        if (bc.phi[i + 1] < bc.phi[i] - 1e-12)
            throw std::domain_error("correspondence_from_samples: not monotone");
    // seam increase may be exactly zero when a vertex plateau spans theta = 0
    if (bc.total_increase() < -1e-12 || bc.total_increase() > 2.0 * kPi + 1e-12)
        throw std::domain_error("correspondence_from_samples: total increase must be 2 pi");
    return bc;
}

struct AnalyticParts {
    PowerSeries A; // z^k side, k >= 0 (includes the centering constant)
    PowerSeries B; // conj-analytic side, coefficients conj(c_{-k}) on z^k
};

/// Fourier split of the boundary map into the two analytic parts of the
/// harmonic extension f = A + conj(B), by trapezoid quadrature on the 4096
/// samples (spectrally accurate for smooth correspondences).
///
/// An order-m equivariant map has frequencies exactly 1 mod m; since the
/// sample count is not divisible by 3, grid aliasing of jump-bearing
/// correspondences leaks across the classes.  With enforce_symmetry the
/// off-class coefficients (pure aliasing noise for a verified-symmetric
/// correspondence) are projected out.
inline AnalyticParts analytic_parts(const BoundaryCorrespondence& bc, int modes, bool enforce_symmetry = true) {
    constexpr int N = BoundaryCorrespondence::kSamples;
    if (modes < 1 || modes > N / 2) throw std::invalid_argument("analytic_parts: modes would alias (need <= 2048)");
    std::vector<complex> F(N);
    for (int n = 0; n < N; ++n) F[n] = target_point(bc.target, bc.phi[n]);

    auto coeff = [&](int k) {
        CompensatedComplexSum acc;
        for (int n = 0; n < N; ++n) {
            const double ang = -2.0 * kPi * k * n / N;
            acc.add(F[n] * std::polar(1.0, ang));
        }
        return acc.value() / static_cast<double>(N);
    };
    const int m = bc.symmetry_order;
    auto in_class = [&](long long k) { return !enforce_symmetry || m <= 1 || ((k - 1) % m + m) % m == 0; };

    std::vector<complex> a(modes + 1), b(modes + 1);
    for (int k = 0; k <= modes; ++k) a[k] = in_class(k) ? coeff(k) : complex{};
    b[0] = 0.0;
    for (int k = 1; k <= modes; ++k) b[k] = in_class(-k) ? std::conj(coeff(-k)) : complex{};
    return {PowerSeries::polynomial(std::move(a), 0.99999), PowerSeries::polynomial(std::move(b), 0.99999)};
}

/// Weierstrass pair from the analytic parts: p = A', omega = B'/A',
/// q = sqrt_branch(omega).  Rejects data that cannot carry a single-valued
/// square root or fail the orientation gate |omega| < 1.
inline WeierstrassData weierstrass_from_parts(const AnalyticParts& parts, double validation_radius = 0.99) {
    const PowerSeries Ap = parts.A.derivative();
    const PowerSeries Bp = parts.B.derivative();
    const auto p = AnalyticFunction::polynomial(Ap.coefficients(), 0.99999);
    if (std::abs(Ap.eval(complex{})) < 1e-12)
        throw std::domain_error("weierstrass_from_parts: p(0) = 0 (degenerate centre)");

    double bscale = 0.0;
    for (const auto& c : Bp.coefficients()) bscale = std::max(bscale, std::abs(c));
    if (bscale < 1e-13) {
        // analytic map: omega = 0
        return WeierstrassData(p, AnalyticFunction::constant(0.0, 0.99999), 0.999);
    }

    int vanishing = 0;
    while (vanishing <= Bp.degree() && std::abs(Bp.coefficients()[vanishing]) <= 1e-11 * bscale) ++vanishing;
    if (vanishing % 2 != 0)
        throw std::domain_error("weierstrass_from_parts: odd vanishing order, no single-valued square root");

    const auto omega = AnalyticFunction::rational(Bp.coefficients(), Ap.coefficients(), validation_radius + 0.005);

    // orientation gate: |omega| < 1 through the validation radius
    Rng rng(40901);
    for (int i = 0; i < 2000; ++i) {
        const complex z = (i < 64) ? std::polar(validation_radius, 2.0 * kPi * i / 64.0)
                                   : rng.disk_point(validation_radius);
        if (std::abs(omega(z)) >= 1.0)
            throw std::domain_error("weierstrass_from_parts: |omega| >= 1 (not orientation preserving)");
    }

    const AnalyticFunction q = sqrt_branch(omega, vanishing, 384);
    return WeierstrassData(p, q, std::min(0.999, q.domain_radius()), omega);
}

/// Jump-bearing correspondences (polygon vertices, blends toward them) make
/// the truncated Fourier data Gibbs-oscillate near the circle; validate
/// those on a smaller disk, where the centre quantities live anyway.
inline WeierstrassData weierstrass_from_correspondence(const BoundaryCorrespondence& bc, int modes = 64,
                                                       double validation_radius = 0.99) {
    return weierstrass_from_parts(analytic_parts(bc, modes), validation_radius);
}

struct DiffeoCheck {
    bool ok = false;
    double min_jacobian = 0.0;
    double radius = 0.0; // radius actually sampled
};

/// Jacobian positivity on a polar grid.  Sampling reaches radius 0.99 when
/// the datum's p and omega admit it, else the datum's own working radius.
inline DiffeoCheck validate_diffeo(const WeierstrassData& data, int grid) {
    DiffeoCheck out;
    out.radius = std::min({0.99, 0.999 * data.p().domain_radius(), 0.999 * data.omega_radius()});
    out.min_jacobian = std::numeric_limits<double>::max();
    for (int i = 1; i <= grid; ++i) {
        const double r = out.radius * i / grid;
        for (int j = 0; j < grid; ++j) {
            const complex z = std::polar(r, 2.0 * kPi * j / grid);
            const double ap2 = std::norm(data.p()(z));
            const double om = data.omega_abs(z);
            out.min_jacobian = std::min(out.min_jacobian, ap2 * (1.0 - om * om));
        }
    }
    out.ok = out.min_jacobian > 0.0;
    return out;
}

/// Full centre report for one correspondence.  Hall's check runs only for
/// disk targets (its premise is a harmonic diffeomorphism onto the disk).
inline CurvatureReport family_report(const BoundaryCorrespondence& bc, int modes = 64) {
    const WeierstrassData data = weierstrass_from_correspondence(bc, modes);
    ReportOptions opts;
    opts.run_hall = (bc.target == Target::disk);
    if (bc.target == Target::hexagon)
        opts.annotation = "hexagon-target datum: graph over the hexagon, disk-graph bounds reported for reference";
    return make_report(data, opts);
}

/// Seeded generator of admissible correspondences.  Order 6 gives flat
/// centres (q(0) = q'(0) = 0); order 2 gives tilted centres with q'(0) = 0
/// via the even spectrum, with a dominant first harmonic keeping omega
/// zero-free.
inline BoundaryCorrespondence random_correspondence(Rng& rng, int symmetry_order, Target target) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<double> eps, del;
        const int harmonics = 2 + static_cast<int>(rng.next() % 2);
        // Dominant first harmonic: it controls the leading coefficient of
        // psi = omega / z^{2k}, keeping psi zero-free so the square root
        // exists on the whole disk.  Checked downstream, not assumed.
        const double lead_lo = (symmetry_order == 2) ? 0.10 : 0.03;
        const double lead_hi = (symmetry_order == 2) ? 0.24 : 0.11;
        const double lead = rng.uniform(lead_lo, lead_hi) * (rng.uniform() < 0.5 ? -1.0 : 1.0);
        eps.push_back(lead);
        for (int j = 2; j <= harmonics; ++j)
            eps.push_back(std::abs(lead) / (6.0 * j * j) * rng.uniform(-1.0, 1.0));
        for (std::size_t j = 0; j < eps.size(); ++j) del.push_back(rng.uniform(0.0, 2.0 * kPi));

        double slope_budget = 0.0;
        for (std::size_t j = 0; j < eps.size(); ++j)
            slope_budget += std::abs(eps[j]) * symmetry_order * (static_cast<double>(j) + 1.0);
        if (slope_budget >= 0.85) continue;
        try {
            return correspondence_from_params(target, eps, del, symmetry_order);
        } catch (const std::domain_error&) {
            continue; // monotonicity or symmetry rejection; redraw
        }
    }
    throw convergence_error("random_correspondence: no admissible draw in 64 attempts");
}

struct FamilyInstance {
    BoundaryCorrespondence bc;
    WeierstrassData data;
};

/// Draw until the correspondence lifts to a valid minimal-graph datum; the
/// branch-obstruction and orientation gates reject the rest.
inline FamilyInstance random_family_instance(Rng& rng, int symmetry_order, Target target, int modes = 64) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        BoundaryCorrespondence bc = random_correspondence(rng, symmetry_order, target);
        try {
            WeierstrassData data = weierstrass_from_correspondence(bc, modes);
            return {std::move(bc), std::move(data)};
        } catch (const std::domain_error&) {
            continue;
        }
    }
    throw convergence_error("random_family_instance: no liftable draw in 64 attempts");
}

/// The extremal hexagon's own boundary correspondence: phi*(theta) is the
/// polar angle of the boundary values of f, from the exact partial-fraction
/// form.  Feeding it back through the pipeline reproduces the hexagon datum.
inline BoundaryCorrespondence hexagon_extremal_correspondence() {
    constexpr int N = BoundaryCorrespondence::kSamples;
    std::vector<double> phi(N);
    // The boundary map is a step function: arcs around k pi/3 sit exactly on
    // the vertices, with jumps of pi/3 at the singular angles.  Unwrap by
    // nearest-representative increments so the plateau roundoff (arg of -1
    // flipping between +-pi) cannot run the angle away, then clamp the
    // roundoff-scale decreases that weak monotonicity permits.
    auto sample_arg = [](double theta) {
        const complex w = hexagon_f_closed(std::polar(1.0, theta));
        // A grid angle landing exactly on a pole of p takes the Abel-limit
        // value, the side midpoint, whose polar angle is the angle itself.
        if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) return std::remainder(theta, 2.0 * kPi);
        return std::arg(w);
    };
    double prev_raw = sample_arg(0.0);
    phi[0] = prev_raw;
    for (int i = 1; i < N; ++i) {
        const double theta = 2.0 * kPi * i / N;
        const double raw = sample_arg(theta);
        phi[i] = phi[i - 1] + std::remainder(raw - prev_raw, 2.0 * kPi);
        prev_raw = raw;
        if (phi[i] < phi[i - 1]) phi[i] = phi[i - 1];
    }
    return correspondence_from_samples(Target::hexagon, std::move(phi), 6);
}

/// Convex blend of the identity-parameter correspondence with the extremal
/// one; lambda = 1 reproduces the hexagon datum.
inline BoundaryCorrespondence blended_hexagon_correspondence(const BoundaryCorrespondence& extremal,
                                                             double lambda) {
    std::vector<double> phi(BoundaryCorrespondence::kSamples);
    for (int i = 0; i < BoundaryCorrespondence::kSamples; ++i) {
        const double theta = 2.0 * kPi * i / BoundaryCorrespondence::kSamples;
        phi[i] = (1.0 - lambda) * theta + lambda * extremal.phi[i];
    }
    return correspondence_from_samples(Target::hexagon, std::move(phi), 6);
}

} // namespace minsurf
