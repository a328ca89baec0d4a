#ifndef DENSITYLAB_RNG_HPP
#define DENSITYLAB_RNG_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "densitylab/geometry.hpp"

namespace densitylab {

/// Deterministic random source. The engine (mt19937_64) is fully specified by
/// the standard and the variate transforms below are spelled out explicitly,
/// so a fixed seed replays bitwise-identically on any platform. The standard
/// library distributions are implementation-defined and would break that
/// contract.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }

    /// Sub-stream with a seed derived by splitmix64 mixing; used to give each
    /// Metropolis chain its own independent state.
    Rng derive(std::uint64_t stream) const {
        std::uint64_t z = seed_ + 0x9e3779b97f4a7c15ULL * (stream + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return Rng(z ^ (z >> 31));
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double mag = std::sqrt(-2.0 * std::log(u1));
        spare_ = mag * std::sin(2.0 * std::numbers::pi * u2);
        have_spare_ = true;
        return mag * std::cos(2.0 * std::numbers::pi * u2);
    }

    double exponential(double rate) {
        double u = uniform();
        while (u <= 0.0) u = uniform();
        return -std::log(u) / rate;
    }

    Vec3 isotropic_normal(double scale) {
        return {scale * normal(), scale * normal(), scale * normal()};
    }

    Vec3 uniform_direction() {
        // Marsaglia rejection on the unit ball surface.
        for (;;) {
            const double a = uniform(-1.0, 1.0);
            const double b = uniform(-1.0, 1.0);
            const double s = a * a + b * b;
            if (s >= 1.0 || s == 0.0) continue;
            const double f = 2.0 * std::sqrt(1.0 - s);
            return {a * f, b * f, 1.0 - 2.0 * s};
        }
    }

    Vec3 uniform_in_ball(double radius) {
        const double u = uniform();
        return std::cbrt(u) * radius * uniform_direction();
    }

    /// Radius with density proportional to r^2 exp(-rate r): Gamma(3, 1/rate).
    double gamma3_radius(double rate) {
        return exponential(rate) + exponential(rate) + exponential(rate);
    }

  private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace densitylab

#endif
