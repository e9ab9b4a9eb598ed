#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>

namespace minsurf {

using complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi_v<double>;

/// Thrown when an iterative numeric procedure fails to reach its tolerance.
struct convergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline bool close_rel(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

inline bool close_abs(double a, double b, double tol) { return std::abs(a - b) <= tol; }

/// Neumaier-compensated accumulator. Keeps series summation error near one ulp
/// of the result even for tens of thousands of terms.
class CompensatedSum {
  public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

class CompensatedComplexSum {
  public:
    void add(complex x) {
        re_.add(x.real());
        im_.add(x.imag());
    }
    complex value() const { return {re_.value(), im_.value()}; }

  private:
    CompensatedSum re_, im_;
};

inline double sqr(double x) { return x * x; }

} // namespace minsurf
