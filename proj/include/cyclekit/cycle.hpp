#pragma once

#include <array>
#include <cmath>

#include "cyclekit/hypercomplex.hpp"

namespace cyclekit {

struct Point {
    double u = 0.0;
    double v = 0.0;
};

/// Cycle-space parameters: the unit of the cycle space and the sign s.
struct FsccParams {
    Sigma sigma_breve = kElliptic;
    double s = 1.0;

    FsccParams() = default;
    FsccParams(Sigma sb, double s_ = 1.0) : sigma_breve(sb), s(s_) {
        if (s == 0.0) throw Error("parameter s must be nonzero");
    }
};

/// Projective quadruple (k, l, n, m); the same cycle up to a common scale.
///
/// The point set in the sigma-drawing is k(u^2 - sigma v^2) - 2lu - 2nv + m = 0.
struct Cycle {
    double k = 0.0, l = 0.0, n = 0.0, m = 0.0;

    constexpr Cycle() = default;
    constexpr Cycle(double k_, double l_, double n_, double m_) : k(k_), l(l_), n(n_), m(m_) {}

    double max_abs() const {
        return std::max(std::max(std::abs(k), std::abs(l)), std::max(std::abs(n), std::abs(m)));
    }

    constexpr bool is_line() const { return k == 0.0; }

    static constexpr Cycle real_line() { return {0, 0, 1, 0}; }
    static constexpr Cycle unit_circle() { return {1, 0, 0, -1}; }
};

inline constexpr Cycle operator*(double t, const Cycle& c) {
    return {t * c.k, t * c.l, t * c.n, t * c.m};
}

inline constexpr Cycle operator+(const Cycle& a, const Cycle& b) {
    return {a.k + b.k, a.l + b.l, a.n + b.n, a.m + b.m};
}

/// 2x2 matrix (l + breve-iota s n, -m; k, -l + breve-iota s n) over the
/// sigma_breve plane.
struct FsccMatrix {
    std::array<std::array<HyperNumber, 2>, 2> e;
    FsccParams params;

    const HyperNumber& operator()(int r, int c) const { return e[r][c]; }
    HyperNumber& operator()(int r, int c) { return e[r][c]; }
};

FsccMatrix operator*(const FsccMatrix& A, const FsccMatrix& B);

/// Left-hand side of the cycle equation at p; zero iff p lies on the drawing.
double incidence(const Cycle& c, const Point& p, Sigma sigma);

FsccMatrix to_matrix(const Cycle& c, const FsccParams& params);

/// Reads the quadruple back; rejects matrices that are not of the cycle shape.
Cycle from_matrix(const FsccMatrix& M);

/// Transport of a cycle by matrix similarity g C g^{-1}.
///
/// For real group elements the result does not depend on params (the
/// imaginary part of the matrix is a multiple of the identity); the
/// parameters are kept in the signature to state the contract.
Cycle transform(const Cycle& c, const GroupElement& g, const FsccParams& params = {});

/// Centre of the given kind: (l/k, -kind * n/k).
Point centre(const Cycle& c, Sigma kind);

/// Focus (l/k, (sigma_breve s^2 n^2 + l^2 - mk)/(2nk)); independent of the sign of s.
Point focus(const Cycle& c, const FsccParams& params);

/// Determinant of the cycle matrix: sigma_breve s^2 n^2 - l^2 + mk.
double determinant(const Cycle& c, const FsccParams& params);

/// Squared radius (l^2 - sigma_breve s^2 n^2 - mk)/k^2; the unit circle gives +1
/// in the elliptic cycle space.
double radius_sq(const Cycle& c, const FsccParams& params);

/// Cycle (1, u, v, u^2 - sigma_breve v^2); its determinant vanishes for s = +-1.
Cycle zero_radius_at(const Point& p, const FsccParams& params);

/// Scale-free representative: k-normalized when |k| is not negligible,
/// otherwise the first significant of (l, n, m) is scaled to one. Idempotent.
Cycle normalize(const Cycle& c);

/// Equality of normalized representatives, componentwise to 1e-9.
bool projectively_equal(const Cycle& a, const Cycle& b, double tol = 1e-9);

/// Roots: intersections with the real axis, i.e. solutions of k u^2 - 2lu + m = 0.
/// Returns the number of real roots (0, 1 or 2) found.
int real_roots(const Cycle& c, std::array<double, 2>& roots);

}  // namespace cyclekit
