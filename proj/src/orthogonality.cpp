#include "cyclekit/orthogonality.hpp"

#include <cmath>

namespace cyclekit {

namespace {

double pairing_of(const Cycle& a, const Cycle& b, const FsccParams& params) {
    const double s2 = params.s * params.s;
    return 2.0 * a.l * b.l - 2.0 * params.sigma_breve.real() * s2 * a.n * b.n - a.m * b.k -
           b.m * a.k;
}

}  // namespace

double pairing(const Cycle& c1, const Cycle& c2, const FsccParams& params) {
    return pairing_of(normalize(c1), normalize(c2), params);
}

bool is_orthogonal(const Cycle& c1, const Cycle& c2, const FsccParams& params, double tol) {
    const Cycle a = normalize(c1);
    const Cycle b = normalize(c2);
    const double scale = std::max(1.0, a.max_abs()) * std::max(1.0, b.max_abs());
    return std::abs(pairing_of(a, b, params)) < tol * scale;
}

Cycle reflect(const Cycle& mirror, const Cycle& c, const FsccParams& params) {
    // M conj(C) M with the cycle-space conjugation n -> -n in the middle;
    // M conj(M) = -det(M) I makes this involutive up to scale. The
    // unconjugated product is the inversion of the conjugated cycle (it would
    // fix every cycle when the mirror is the real line).
    const FsccMatrix M = to_matrix(mirror, params);
    const Cycle cbar{c.k, c.l, -c.n, c.m};
    const FsccMatrix P = M * to_matrix(cbar, params) * M;
    return from_matrix(P);
}

double s_orthogonality_value(const Cycle& c1, const Cycle& c2, const FsccParams& params) {
    const FsccMatrix M1 = to_matrix(normalize(c1), params);
    const FsccMatrix M2 = to_matrix(normalize(c2), params);
    const FsccMatrix P = M2 * M1 * M2 * to_matrix(Cycle::real_line(), params);
    const HyperNumber tr = P(0, 0) + P(1, 1);
    return tr.re;
}

bool is_s_orthogonal(const Cycle& c1, const Cycle& c2, const FsccParams& params, double tol) {
    const Cycle a = normalize(c1);
    const Cycle b = normalize(c2);
    const double sb = std::max(1.0, b.max_abs());
    const double scale = std::max(1.0, a.max_abs()) * sb * sb;
    return std::abs(s_orthogonality_value(a, b, params)) < tol * scale;
}

Cycle ghost(const Cycle& c, Sigma sigma, const FsccParams& params) {
    if (c.k == 0.0) throw DegenerateCycleError("ghost needs k != 0");
    const double s2 = params.s * params.s;
    return {c.k, c.l, heaviside(sigma) * params.sigma_breve.real() * s2 * c.n, c.m};
}

Cycle s_ghost(const Cycle& c, Sigma sigma, const FsccParams& params) {
    const double s2 = params.s * params.s;
    const double q = params.sigma_breve.real() * s2 * c.n * c.n + c.l * c.l - c.m * c.k;
    const Cycle g{2.0 * c.n * c.k, 2.0 * c.n * c.l, -heaviside(sigma) * q, 2.0 * c.n * c.m};
    return normalize(g);
}

double drawing_pairing(const Cycle& c1, const Cycle& c2, Sigma sigma) {
    return pairing(c1, c2, FsccParams(sigma, 1.0));
}

bool is_drawing_orthogonal(const Cycle& c1, const Cycle& c2, Sigma sigma, double tol) {
    return is_orthogonal(c1, c2, FsccParams(sigma, 1.0), tol);
}

}  // namespace cyclekit
