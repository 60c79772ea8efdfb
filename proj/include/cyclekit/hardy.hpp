#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "cyclekit/errors.hpp"
#include "cyclekit/jets.hpp"

namespace cyclekit {

/// Samples of a function on the unit circle at N equispaced angles,
/// N a power of two, N >= 16.
struct CircleFunction {
    std::vector<Complex> samples;

    explicit CircleFunction(std::vector<Complex> s);

    int size() const { return static_cast<int>(samples.size()); }

    static double angle(int j, int n) { return 2.0 * M_PI * j / n; }
    static Complex node(int j, int n) { return std::polar(1.0, angle(j, n)); }

    static CircleFunction sample(int n, const std::function<Complex(Complex)>& f);

    /// (1/N) sum |f_j|^2, the discrete squared circle norm.
    double norm_sq() const;
};

/// Point of the open unit disk (kept strictly inside the boundary guard).
struct DiskPoint {
    Complex u;

    explicit DiskPoint(Complex u_) : u(u_) {
        if (std::abs(u) > 1.0 - 1e-9) throw Error("point must lie inside the unit disk");
    }
};

/// Trapezoidal value of the boundary integral with kernel (u - z)^{-1},
/// i.e. (1/N) sum f_j z_j / (u - z_j). Gives -p(u) on polynomial data.
Complex cauchy_transform_raw(const CircleFunction& f, const DiskPoint& u);

/// Sign-calibrated transform: recovers +p(u) on polynomial boundary data.
Complex cauchy_transform(const CircleFunction& f, const DiskPoint& u);

/// Samples of z -> (u - z)^{-1}.
CircleFunction coherent_state(const DiskPoint& u, int n);

/// Contour pairing (1/(2 pi i)) of f g dz = (1/N) sum f_j g_j z_j; pairing f
/// against a coherent state reproduces cauchy_transform_raw.
Complex contour_pairing(const CircleFunction& f, const CircleFunction& g);

/// Weight-one action f(z) -> (alpha - beta z)^{-1} f((conj(alpha) z - conj(beta)) / (alpha - beta z)),
/// resampled on the grid by trigonometric interpolation.
CircleFunction rho1_apply(const SuElement& g, const CircleFunction& f);

/// Boundary image (conj(alpha) u - conj(beta)) / (alpha - beta u) of a disk point.
DiskPoint disk_moebius(const SuElement& g, const DiskPoint& u);

/// Coefficients sqrt(1-|a|^2) conj(a)^(n-1), n = 1..count.
std::vector<Complex> taylor_coeffs(const DiskPoint& a, int count);

/// Uniform grid on a half-plane patch, equal spacing in both directions.
struct HalfPlanePatch {
    double u0 = -2.0, u1 = 2.0;
    double v0 = 0.1, v1 = 4.1;
    int nu = 129, nv = 129;

    double du() const { return (u1 - u0) / (nu - 1); }
    double dv() const { return (v1 - v0) / (nv - 1); }
    Complex point(int i, int j) const { return {u0 + i * du(), v0 + j * dv()}; }
    int index(int i, int j) const { return j * nu + i; }

    std::vector<Complex> sample(const std::function<Complex(Complex)>& f) const;
};

/// Value of -2 i v * (d/d conj(z)) f at the (i, j) grid point by second-order
/// central differences; zero (to O(h^2)) exactly on analytic data.
Complex dirac_residual(const HalfPlanePatch& patch, const std::vector<Complex>& f, int i, int j);

/// Radix-2 FFT (forward: sign -1); n must be a power of two.
void fft_inplace(std::vector<Complex>& a, int sign);

}  // namespace cyclekit
