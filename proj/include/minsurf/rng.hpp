#pragma once

#include <cstdint>

#include "minsurf/numeric.hpp"

namespace minsurf {

/// xoshiro256++ with a splitmix64 seeder. Self-contained so that seeded runs
/// reproduce bit-identically across standard libraries and platforms.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& si : s_) {
            x += 0x9e3779b97f4a7c15ULL;
            std::uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            si = z ^ (z >> 31);
        }
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform over the closed disk of the given radius.
    complex disk_point(double radius) {
        const double r = radius * std::sqrt(uniform());
        const double t = uniform(0.0, 2.0 * kPi);
        return std::polar(r, t);
    }

    /// Derive an independent stream; used to make per-instance draws
    /// insensitive to evaluation order.
    Rng fork(std::uint64_t stream) const {
        Rng child = *this;
        child.s_[0] ^= 0xd1342543de82ef95ULL * (stream + 1);
        child.s_[2] ^= 0xaf251af3b0f025b5ULL * (stream + 11);
        child.next();
        child.next();
        return child;
    }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::uint64_t s_[4];
};

} // namespace minsurf
