#include "cyclekit/cycle.hpp"

#include <algorithm>
#include <cmath>

namespace cyclekit {

namespace {
constexpr double kShapeTol = 1e-9;
}

FsccMatrix operator*(const FsccMatrix& A, const FsccMatrix& B) {
    FsccMatrix R;
    R.params = A.params;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) R.e[i][j] = A.e[i][0] * B.e[0][j] + A.e[i][1] * B.e[1][j];
    return R;
}

double incidence(const Cycle& c, const Point& p, Sigma sigma) {
    return c.k * (p.u * p.u - sigma.real() * p.v * p.v) - 2.0 * c.l * p.u - 2.0 * c.n * p.v + c.m;
}

FsccMatrix to_matrix(const Cycle& c, const FsccParams& params) {
    FsccMatrix M;
    M.params = params;
    const Sigma sb = params.sigma_breve;
    M.e[0][0] = HyperNumber(c.l, params.s * c.n, sb);
    M.e[0][1] = HyperNumber(-c.m, 0.0, sb);
    M.e[1][0] = HyperNumber(c.k, 0.0, sb);
    M.e[1][1] = HyperNumber(-c.l, params.s * c.n, sb);
    return M;
}

Cycle from_matrix(const FsccMatrix& M) {
    const double scale = std::max({std::abs(M(0, 0).re), std::abs(M(0, 0).im), std::abs(M(0, 1).re),
                                   std::abs(M(1, 0).re), 1.0});
    const bool shape_ok = std::abs(M(0, 0).re + M(1, 1).re) < kShapeTol * scale &&
                          std::abs(M(0, 0).im - M(1, 1).im) < kShapeTol * scale &&
                          std::abs(M(0, 1).im) < kShapeTol * scale &&
                          std::abs(M(1, 0).im) < kShapeTol * scale;
    if (!shape_ok) throw BadMatrixShapeError("matrix is not of the cycle shape");
    Cycle c;
    c.k = M(1, 0).re;
    c.l = M(0, 0).re;
    c.n = M(0, 0).im / M.params.s;
    c.m = -M(0, 1).re;
    return c;
}

Cycle transform(const Cycle& c, const GroupElement& g, const FsccParams& /*params*/) {
    // g (L + iota s n I) g^{-1} = g L g^{-1} + iota s n I for the real traceless
    // part L = (l, -m; k, -l), so n is carried over unchanged.
    const GroupElement gi = g.inverse();
    const double L00 = c.l, L01 = -c.m, L10 = c.k, L11 = -c.l;
    const double t00 = g.a * L00 + g.b * L10, t01 = g.a * L01 + g.b * L11;
    const double t10 = g.c * L00 + g.d * L10, t11 = g.c * L01 + g.d * L11;
    const double r00 = t00 * gi.a + t01 * gi.c;
    const double r01 = t00 * gi.b + t01 * gi.d;
    const double r10 = t10 * gi.a + t11 * gi.c;
    return {r10, r00, c.n, -r01};
}

Point centre(const Cycle& c, Sigma kind) {
    if (c.k == 0.0) throw DegenerateCycleError("straight line: centre at infinity");
    return {c.l / c.k, -kind.real() * c.n / c.k};
}

double determinant(const Cycle& c, const FsccParams& params) {
    const double s2 = params.s * params.s;
    return params.sigma_breve.real() * s2 * c.n * c.n - c.l * c.l + c.m * c.k;
}

Point focus(const Cycle& c, const FsccParams& params) {
    if (c.k == 0.0) throw DegenerateCycleError("straight line has no focus");
    if (c.n == 0.0) throw UndefinedFocusError("focus needs n != 0");
    const double s2 = params.s * params.s;
    const double num = params.sigma_breve.real() * s2 * c.n * c.n + c.l * c.l - c.m * c.k;
    return {c.l / c.k, num / (2.0 * c.n * c.k)};
}

double radius_sq(const Cycle& c, const FsccParams& params) {
    if (c.k == 0.0) throw DegenerateCycleError("straight line has no radius");
    return -determinant(c, params) / (c.k * c.k);
}

Cycle zero_radius_at(const Point& p, const FsccParams& params) {
    return {1.0, p.u, p.v, p.u * p.u - params.sigma_breve.real() * p.v * p.v};
}

Cycle normalize(const Cycle& c) {
    const double scale = c.max_abs();
    if (scale == 0.0) throw ZeroCycleError("all-zero quadruple");
    const double tol = 1e-12 * scale;
    double pivot = 0.0;
    if (std::abs(c.k) > tol)
        pivot = c.k;
    else if (std::abs(c.l) > tol)
        pivot = c.l;
    else if (std::abs(c.n) > tol)
        pivot = c.n;
    else
        pivot = c.m;
    // direct division keeps the pivot component exactly one, so normalize is
    // bitwise idempotent
    return {c.k / pivot, c.l / pivot, c.n / pivot, c.m / pivot};
}

bool projectively_equal(const Cycle& a, const Cycle& b, double tol) {
    const Cycle na = normalize(a);
    const Cycle nb = normalize(b);
    return std::abs(na.k - nb.k) < tol && std::abs(na.l - nb.l) < tol &&
           std::abs(na.n - nb.n) < tol && std::abs(na.m - nb.m) < tol;
}

int real_roots(const Cycle& c, std::array<double, 2>& roots) {
    if (c.k == 0.0) {
        if (c.l == 0.0) return 0;
        roots[0] = c.m / (2.0 * c.l);
        return 1;
    }
    const double disc = c.l * c.l - c.k * c.m;
    if (disc < 0.0) return 0;
    const double sq = std::sqrt(disc);
    roots[0] = (c.l - sq) / c.k;
    roots[1] = (c.l + sq) / c.k;
    return disc == 0.0 ? 1 : 2;
}

}  // namespace cyclekit
