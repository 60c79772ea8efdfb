#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "cyclekit/cycle.hpp"

namespace cyclekit {

/// Deterministic generator used by the verification suites.
struct Rng {
    std::mt19937_64 engine;

    explicit Rng(std::uint64_t seed) : engine(seed) {}

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(engine);
    }
    int pick(int n) { return static_cast<int>(engine() % static_cast<std::uint64_t>(n)); }
    bool coin() { return (engine() & 1u) != 0; }
};

/// (a, b, c) uniform in [-2, 2], |a| >= 0.1, d = (1 + bc)/a.
inline GroupElement random_group_element(Rng& rng) {
    for (;;) {
        const double a = rng.uniform(-2.0, 2.0);
        if (std::abs(a) < 0.1) continue;
        const double b = rng.uniform(-2.0, 2.0);
        const double c = rng.uniform(-2.0, 2.0);
        return {a, b, c, (1.0 + b * c) / a};
    }
}

inline Sigma random_sigma(Rng& rng) { return Sigma(rng.pick(3) - 1); }

inline Point random_point(Rng& rng, double lo = -2.0, double hi = 2.0) {
    return {rng.uniform(lo, hi), rng.uniform(lo, hi)};
}

/// Random cycle with components in [-2, 2]; k (and optionally n) bounded away
/// from zero when required.
inline Cycle random_cycle(Rng& rng, bool need_k = true, bool need_n = false) {
    for (;;) {
        Cycle c{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0),
                rng.uniform(-2.0, 2.0)};
        if (need_k && std::abs(c.k) < 0.2) continue;
        if (need_n && std::abs(c.n) < 0.2) continue;
        if (c.max_abs() < 0.2) continue;
        return c;
    }
}

/// A point of the sigma-drawing of c, or nothing when the drawing is empty at
/// the sampled parameter (imaginary circle, rootless vertical pair, ...).
std::optional<Point> random_point_on(const Cycle& c, Sigma sigma, Rng& rng);

}  // namespace cyclekit
