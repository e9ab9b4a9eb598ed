#pragma once

#include "minsurf/numeric.hpp"

namespace minsurf {

/// Gauss hypergeometric series F(a,b;c;x) summed forward with compensated
/// accumulation.  Valid for |x| <= 0.999; this library never needs analytic
/// continuation, the quantities of interest live well inside the disk.
inline complex hyp2f1(double a, double b, double c, complex x) {
    if (c <= 0.0 && c == std::floor(c))
        throw std::invalid_argument("hyp2f1: c must not be a nonpositive integer");
    if (std::abs(x) >= 0.9995)
        throw std::domain_error("hyp2f1: |x| too close to 1 for direct summation");

    CompensatedComplexSum sum;
    complex term = 1.0;
    sum.add(term);
    int quiet = 0;
    double sum_mag = 1.0;
    for (int m = 0; m < 200000; ++m) {
        const double dm = static_cast<double>(m);
        term *= (a + dm) * (b + dm) / ((c + dm) * (dm + 1.0)) * x;
        sum.add(term);
        sum_mag = std::max(sum_mag, std::abs(sum.value()));
        if (std::abs(term) < 1e-16 * std::max(1e-300, std::abs(sum.value()))) {
            if (++quiet >= 3) return sum.value();
        } else {
            quiet = 0;
        }
    }
    throw convergence_error("hyp2f1: series did not converge");
}

} // namespace minsurf
