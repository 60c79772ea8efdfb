#include "cyclekit/sampling.hpp"

#include <cmath>

namespace cyclekit {

std::optional<Point> random_point_on(const Cycle& cy, Sigma sigma, Rng& rng) {
    const Cycle c = normalize(cy);

    if (std::abs(c.k) < 1e-12) {
        if (c.l == 0.0 && c.n == 0.0) return std::nullopt;
        const double d = c.l * c.l + c.n * c.n;
        const Point base{c.m * c.l / (2.0 * d), c.m * c.n / (2.0 * d)};
        const double t = rng.uniform(-4.0, 4.0);
        const double len = std::sqrt(d);
        return Point{base.u - t * c.n / len, base.v + t * c.l / len};
    }

    const double u0 = c.l / c.k;
    if (sigma.elliptic()) {
        const double v0 = c.n / c.k;
        const double r2 = (c.l * c.l + c.n * c.n - c.m * c.k) / (c.k * c.k);
        if (r2 <= 0.0) return std::nullopt;
        const double r = std::sqrt(r2);
        const double t = rng.uniform(0.0, 2.0 * M_PI);
        return Point{u0 + r * std::cos(t), v0 + r * std::sin(t)};
    }
    if (sigma.parabolic()) {
        if (std::abs(c.n) < 1e-12) {
            std::array<double, 2> roots{};
            const int cnt = real_roots(c, roots);
            if (cnt == 0) return std::nullopt;
            return Point{roots[rng.pick(cnt)], rng.uniform(-4.0, 4.0)};
        }
        const double u = u0 + rng.uniform(-3.0, 3.0);
        return Point{u, (c.k * u * u - 2.0 * c.l * u + c.m) / (2.0 * c.n)};
    }

    const double v0 = -c.n / c.k;
    const double R = (c.l * c.l - c.n * c.n - c.m * c.k) / (c.k * c.k);
    const double t = rng.uniform(-2.0, 2.0);
    const double branch = rng.coin() ? 1.0 : -1.0;
    if (R == 0.0) return Point{u0 + t, v0 + branch * t};
    const double r = std::sqrt(std::abs(R));
    if (R > 0.0) return Point{u0 + branch * r * std::cosh(t), v0 + r * std::sinh(t)};
    return Point{u0 + r * std::sinh(t), v0 + branch * r * std::cosh(t)};
}

}  // namespace cyclekit
