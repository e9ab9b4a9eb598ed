#pragma once

#include <array>
#include <cassert>

#include "minsurf/numeric.hpp"

namespace minsurf {

/// Truncated Taylor expansion of an analytic function about a point: the
/// coefficient c[k] equals f^(k)/k!.  Arithmetic on jets is the exact
/// differentiation rule used by every closed-form function backend.
class Jet {
  public:
    static constexpr int kMaxLen = 8;

    Jet() : len_(1) {}
    explicit Jet(int len) : len_(len) { assert(len >= 1 && len <= kMaxLen); }

    static Jet constant(complex c, int order) {
        Jet j(order + 1);
        j.c_[0] = c;
        return j;
    }

    /// The identity function z, expanded about the point z0.
    static Jet variable(complex z0, int order) {
        Jet j(order + 1);
        j.c_[0] = z0;
        if (order >= 1) j.c_[1] = 1.0;
        return j;
    }

    int length() const { return len_; }
    int order() const { return len_ - 1; }

    complex coeff(int k) const { return k < len_ ? c_[k] : complex{}; }
    complex& coeff_ref(int k) { return c_[k]; }

    complex value() const { return c_[0]; }

    /// k-th derivative (k! times the Taylor coefficient).
    complex derivative(int k) const {
        double fact = 1.0;
        for (int i = 2; i <= k; ++i) fact *= i;
        return coeff(k) * fact;
    }

    friend Jet operator+(const Jet& a, const Jet& b) {
        Jet r(std::min(a.len_, b.len_));
        for (int k = 0; k < r.len_; ++k) r.c_[k] = a.c_[k] + b.c_[k];
        return r;
    }
    friend Jet operator-(const Jet& a, const Jet& b) {
        Jet r(std::min(a.len_, b.len_));
        for (int k = 0; k < r.len_; ++k) r.c_[k] = a.c_[k] - b.c_[k];
        return r;
    }
    friend Jet operator*(const Jet& a, const Jet& b) {
        Jet r(std::min(a.len_, b.len_));
        for (int k = 0; k < r.len_; ++k) {
            complex acc = 0.0;
            for (int j = 0; j <= k; ++j) acc += a.c_[j] * b.c_[k - j];
            r.c_[k] = acc;
        }
        return r;
    }
    friend Jet operator*(complex s, const Jet& a) {
        Jet r = a;
        for (int k = 0; k < r.len_; ++k) r.c_[k] *= s;
        return r;
    }
    friend Jet operator/(const Jet& a, const Jet& b) {
        if (b.c_[0] == complex{}) throw std::domain_error("jet division by zero value");
        Jet r(std::min(a.len_, b.len_));
        for (int k = 0; k < r.len_; ++k) {
            complex acc = a.c_[k];
            for (int j = 1; j <= k; ++j) acc -= b.c_[j] * r.c_[k - j];
            r.c_[k] = acc / b.c_[0];
        }
        return r;
    }

    /// Square root with the branch fixed by the supplied root of the value.
    static Jet sqrt(const Jet& a, complex root_of_value) {
        if (root_of_value == complex{}) throw std::domain_error("jet sqrt at a zero value");
        Jet r(a.len_);
        r.c_[0] = root_of_value;
        for (int k = 1; k < r.len_; ++k) {
            complex acc = a.c_[k];
            for (int j = 1; j < k; ++j) acc -= r.c_[j] * r.c_[k - j];
            r.c_[k] = acc / (2.0 * r.c_[0]);
        }
        return r;
    }

    Jet pow_int(int n) const {
        Jet r = Jet::constant(1.0, order());
        Jet base = *this;
        int e = n;
        while (e > 0) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

  private:
    std::array<complex, kMaxLen> c_{};
    int len_;
};

} // namespace minsurf
