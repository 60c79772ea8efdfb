#include "cyclekit/metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace cyclekit {

namespace {

constexpr double kGolden = 0.6180339887498949;

HyperNumber to_number(const Point& p, Sigma sigma) { return {p.u, p.v, sigma}; }
Point to_point(const HyperNumber& z) { return {z.re, z.im}; }

// Golden-section refinement of an interior extremum of f on [lo, hi].
// `maximize` flips the sense.
double golden_refine(double lo, double hi, bool maximize, const auto& f) {
    const double sign = maximize ? -1.0 : 1.0;
    double x1 = hi - kGolden * (hi - lo);
    double x2 = lo + kGolden * (hi - lo);
    double f1 = sign * f(x1), f2 = sign * f(x2);
    for (int it = 0; it < 80 && hi - lo > 1e-12; ++it) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - kGolden * (hi - lo);
            f1 = sign * f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + kGolden * (hi - lo);
            f2 = sign * f(x2);
        }
    }
    return f(0.5 * (lo + hi));
}

double signed_sqrt(double x) { return x >= 0.0 ? std::sqrt(x) : -std::sqrt(-x); }

}  // namespace

double distance_sq(const Point& p, const Point& q, Sigma sigma) {
    const double du = q.u - p.u;
    const double dv = q.v - p.v;
    return du * du - sigma.real() * dv * dv;
}

std::array<Cycle, 2> pencil_through(const Point& p, const Point& q, Sigma sigma) {
    // Rows of the incidence constraints in the coordinates (k, l, n, m).
    const std::array<double, 4> r1{p.u * p.u - sigma.real() * p.v * p.v, -2.0 * p.u, -2.0 * p.v, 1.0};
    const std::array<double, 4> r2{q.u * q.u - sigma.real() * q.v * q.v, -2.0 * q.u, -2.0 * q.v, 1.0};

    // Pivot on the largest 2x2 minor, solve for the pivot coordinates in
    // terms of the two free ones.
    int pi = 0, pj = 1;
    double best = -1.0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            const double minor = std::abs(r1[i] * r2[j] - r1[j] * r2[i]);
            if (minor > best) {
                best = minor;
                pi = i;
                pj = j;
            }
        }
    if (best <= 0.0) throw Error("degenerate point pair for the pencil");

    const double det = r1[pi] * r2[pj] - r1[pj] * r2[pi];
    std::array<Cycle, 2> basis;
    int slot = 0;
    for (int f = 0; f < 4; ++f) {
        if (f == pi || f == pj) continue;
        std::array<double, 4> x{0, 0, 0, 0};
        x[f] = 1.0;
        // Solve r1[pi] xi + r1[pj] xj = -r1[f], same for r2.
        const double b1 = -r1[f], b2 = -r2[f];
        x[pi] = (b1 * r2[pj] - b2 * r1[pj]) / det;
        x[pj] = (r1[pi] * b2 - r2[pi] * b1) / det;
        basis[slot++] = Cycle{x[0], x[1], x[2], x[3]};
    }
    return basis;
}

double extremal_distance_sq(const Point& p, const Point& q, Sigma sigma, const FsccParams& params) {
    const double du = q.u - p.u, dv = q.v - p.v;
    if (du * du + dv * dv == 0.0) return 0.0;

    const auto basis = pencil_through(p, q, sigma);
    const double kscale =
        std::max({std::abs(basis[0].k), std::abs(basis[1].k), 1e-30});

    const auto diameter_sq = [&](double theta) {
        const Cycle c = std::cos(theta) * basis[0] + std::sin(theta) * basis[1];
        return 4.0 * radius_sq(c, params);
    };
    const auto k_at = [&](double theta) {
        return std::cos(theta) * basis[0].k + std::sin(theta) * basis[1].k;
    };

    // The pencil has period pi; scan it, skipping the neighbourhood of the
    // straight-line member k = 0.
    const int steps = 720;
    std::vector<double> thetas(steps), values(steps);
    std::vector<bool> valid(steps);
    for (int i = 0; i < steps; ++i) {
        thetas[i] = M_PI * i / steps;
        valid[i] = std::abs(k_at(thetas[i])) > 1e-7 * kscale;
        values[i] = valid[i] ? diameter_sq(thetas[i]) : 0.0;
    }

    double vmin = std::numeric_limits<double>::infinity(), vmax = -vmin;
    for (int i = 0; i < steps; ++i)
        if (valid[i]) {
            vmin = std::min(vmin, values[i]);
            vmax = std::max(vmax, values[i]);
        }
    if (!(vmin <= vmax)) throw NoExtremumError("no finite member in the pencil");
    // Constant diameter over the family (degenerate but well-defined).
    if (vmax - vmin < 1e-9 * (1.0 + std::abs(vmax))) return 0.5 * (vmin + vmax);

    std::vector<double> criticals;
    for (int i = 0; i < steps; ++i) {
        const int a = (i + steps - 1) % steps, b = (i + 1) % steps;
        if (!valid[a] || !valid[i] || !valid[b]) continue;
        // Wrap-around neighbours continue with period pi.
        const bool is_min = values[i] <= values[a] && values[i] <= values[b];
        const bool is_max = values[i] >= values[a] && values[i] >= values[b];
        if (!is_min && !is_max) continue;
        criticals.push_back(golden_refine(thetas[i] - M_PI / steps, thetas[i] + M_PI / steps,
                                          is_max, diameter_sq));
    }
    if (criticals.empty()) throw NoExtremumError("diameter has no critical point on the pencil");
    return *std::min_element(criticals.begin(), criticals.end(),
                             [](double a, double b) { return std::abs(a) < std::abs(b); });
}

Cycle length_cycle(const Point& a, const Point& b, const LengthKind& kind, Sigma sigma,
                   const FsccParams& params) {
    const double s2 = params.s * params.s;
    const double sb = params.sigma_breve.real();
    const double du = b.u - a.u;
    const double w_b = b.u * b.u - sigma.real() * b.v * b.v;
    const auto through_b = [&](double l, double n) {
        // k = 1; incidence at b fixes m.
        return Cycle{1.0, l, n, 2.0 * l * b.u + 2.0 * n * b.v - w_b};
    };

    switch (kind.variant) {
        case LengthKind::Variant::distance:
            throw Error("distance kind has no defining cycle");
        case LengthKind::Variant::from_centre: {
            const double l = a.u;
            if (!kind.centre_kind.parabolic()) {
                const double n = -a.v / kind.centre_kind.real();
                return through_b(l, n);
            }
            // Parabolic centre kind: the centre's second coordinate is
            // identically zero, so a must be on the axis; n stays free and
            // the smaller |radius_sq| candidate is taken.
            if (std::abs(a.v) > 1e-12) throw NoSuchCycleError("parabolic centre cannot sit off-axis");
            const double r0 = du * du - sigma.real() * b.v * b.v;  // radius_sq at n=0
            if (sb != 0.0) {
                // radius_sq(n) = r0 - 2 n b.v - sb s^2 n^2; critical point of
                // the quadratic, or its roots when it attains zero.
                const double A = -sb * s2, B = -2.0 * b.v;
                const double disc = B * B - 4.0 * A * r0;
                if (disc >= 0.0 && A != 0.0) {
                    const double n = (-B - std::sqrt(disc)) / (2.0 * A);
                    return through_b(l, n);
                }
                return through_b(l, A != 0.0 ? -B / (2.0 * A) : 0.0);
            }
            if (std::abs(b.v) > 1e-12) return through_b(l, r0 / (2.0 * b.v));
            return through_b(l, 0.0);
        }
        case LengthKind::Variant::from_focus: {
            const double l = a.u;
            const double cc = du * du - sigma.real() * b.v * b.v;
            const double vsum = a.v + b.v;
            const auto radius_of = [&](double n) { return std::abs(radius_sq(through_b(l, n), params)); };
            if (sb != 0.0) {
                const double A = sb * s2;
                const double disc = vsum * vsum - A * cc;
                if (disc < 0.0) throw NoSuchCycleError("no real cycle with the required focus");
                const double sq = std::sqrt(disc);
                const double n1 = (vsum + sq) / A;
                const double n2 = (vsum - sq) / A;
                const bool ok1 = std::abs(n1) > 1e-12, ok2 = std::abs(n2) > 1e-12;
                if (!ok1 && !ok2) throw NoSuchCycleError("focal constraint degenerates to n = 0");
                if (ok1 && ok2) return through_b(l, radius_of(n1) <= radius_of(n2) ? n1 : n2);
                return through_b(l, ok1 ? n1 : n2);
            }
            if (std::abs(vsum) < 1e-12) throw NoSuchCycleError("focal constraint is inconsistent");
            return through_b(l, cc / (2.0 * vsum));
        }
    }
    throw Error("unreachable");
}

double length(const Point& a, const Point& b, const LengthKind& kind, Sigma sigma,
              const FsccParams& params) {
    if (a.u == b.u && a.v == b.v) return 0.0;
    if (kind.variant == LengthKind::Variant::distance)
        return signed_sqrt(distance_sq(a, b, sigma));
    return signed_sqrt(radius_sq(length_cycle(a, b, kind, sigma, params), params));
}

bool is_perpendicular(const Point& a, const Point& b, const Point& dir, const LengthKind& kind,
                      Sigma sigma, const FsccParams& params, double deriv_tol, double step) {
    if (dir.u == 0.0 && dir.v == 0.0) throw Error("direction must be nonzero");
    const auto f = [&](double eps) {
        return length(a, {b.u + eps * dir.u, b.v + eps * dir.v}, kind, sigma, params);
    };
    const auto central = [&](double h) { return (f(h) - f(-h)) / (2.0 * h); };
    const double d1 = central(step);
    const double d2 = central(step / 10.0);
    const double big = std::max(std::abs(d1), std::abs(d2));
    const double small = std::min(std::abs(d1), std::abs(d2));
    if (big > deriv_tol && small < big / 10.0)
        throw NonSmoothError("derivative estimates disagree across step sizes");
    return std::abs(d1) < deriv_tol && std::abs(d2) < deriv_tol;
}

double conformal_ratio(const GroupElement& g, const Point& y, const Point& yp, double t,
                       const LengthKind& kind, Sigma sigma, const FsccParams& params) {
    const auto ratio = [&](double tau) {
        const Point y2{y.u + tau * yp.u, y.v + tau * yp.v};
        const Point gy = to_point(moebius(g, to_number(y, sigma)));
        const Point gy2 = to_point(moebius(g, to_number(y2, sigma)));
        const double den = length(y, y2, kind, sigma, params);
        if (den == 0.0) throw Error("length vanishes at this scale");
        return length(gy, gy2, kind, sigma, params) / den;
    };
    const double r1 = ratio(t);
    const double r2 = ratio(t / 2.0);
    const double r4 = ratio(t / 4.0);
    // Two Richardson stages assuming error c1 t + c2 t^2.
    const double e1 = 2.0 * r2 - r1;
    const double e2 = 2.0 * r4 - r2;
    return (4.0 * e2 - e1) / 3.0;
}

}  // namespace cyclekit
