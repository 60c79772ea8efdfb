#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "cyclekit/errors.hpp"

namespace cyclekit {

/// Square of the imaginary unit: -1 (elliptic), 0 (parabolic), +1 (hyperbolic).
class Sigma {
  public:
    constexpr Sigma() : value_(-1) {}
    constexpr explicit Sigma(int v) : value_(v) {
        if (v != -1 && v != 0 && v != 1) throw Error("sigma must be -1, 0 or +1");
    }

    constexpr int value() const { return value_; }
    constexpr double real() const { return static_cast<double>(value_); }

    constexpr bool elliptic() const { return value_ == -1; }
    constexpr bool parabolic() const { return value_ == 0; }
    constexpr bool hyperbolic() const { return value_ == 1; }

    friend constexpr bool operator==(Sigma a, Sigma b) { return a.value_ == b.value_; }
    friend constexpr bool operator!=(Sigma a, Sigma b) { return a.value_ != b.value_; }

    static constexpr Sigma elliptic_unit() { return Sigma(-1); }
    static constexpr Sigma parabolic_unit() { return Sigma(0); }
    static constexpr Sigma hyperbolic_unit() { return Sigma(1); }

  private:
    int value_;
};

inline constexpr Sigma kElliptic = Sigma::elliptic_unit();
inline constexpr Sigma kParabolic = Sigma::parabolic_unit();
inline constexpr Sigma kHyperbolic = Sigma::hyperbolic_unit();

/// chi(t): +1 for t >= 0, -1 for t < 0.
inline constexpr double heaviside(double t) { return t >= 0.0 ? 1.0 : -1.0; }
inline constexpr int heaviside(Sigma s) { return s.value() >= 0 ? 1 : -1; }

/// A number x + iota*y in the plane with iota^2 = sigma.
struct HyperNumber {
    double re = 0.0;
    double im = 0.0;
    Sigma sigma = kElliptic;

    constexpr HyperNumber() = default;
    constexpr HyperNumber(double x, double y, Sigma s) : re(x), im(y), sigma(s) {}

    /// x - iota*y.
    constexpr HyperNumber conj() const { return {re, -im, sigma}; }

    /// Modulus form x^2 - sigma*y^2 (can be negative or zero off the elliptic case).
    constexpr double modulus_sq() const { return re * re - sigma.real() * im * im; }

    /// Euclidean size used for scale-aware tolerances.
    constexpr double size_sq() const { return re * re + im * im; }
};

inline constexpr double kZeroDivisorTol = 1e-12;

inline void require_same_sigma(const HyperNumber& a, const HyperNumber& b) {
    if (a.sigma != b.sigma) throw SigmaMismatchError("operands live in different planes");
}

inline constexpr HyperNumber operator+(const HyperNumber& a, const HyperNumber& b) {
    return {a.re + b.re, a.im + b.im, a.sigma};
}

inline constexpr HyperNumber operator-(const HyperNumber& a, const HyperNumber& b) {
    return {a.re - b.re, a.im - b.im, a.sigma};
}

inline constexpr HyperNumber operator-(const HyperNumber& a) { return {-a.re, -a.im, a.sigma}; }

inline constexpr HyperNumber operator*(double k, const HyperNumber& a) {
    return {k * a.re, k * a.im, a.sigma};
}

/// (x1 + iota y1)(x2 + iota y2) = (x1 x2 + sigma y1 y2) + iota (x1 y2 + x2 y1).
inline HyperNumber mul(const HyperNumber& a, const HyperNumber& b) {
    require_same_sigma(a, b);
    return {a.re * b.re + a.sigma.real() * a.im * b.im, a.re * b.im + a.im * b.re, a.sigma};
}

inline HyperNumber operator*(const HyperNumber& a, const HyperNumber& b) { return mul(a, b); }

/// True when a is (numerically) a zero divisor at the given reference scale.
inline bool is_zero_divisor(const HyperNumber& a, double scale_sq = 1.0) {
    return std::abs(a.modulus_sq()) < kZeroDivisorTol * (1.0 + scale_sq);
}

/// Inverse conj(a)/(x^2 - sigma y^2); rejects zero divisors.
inline HyperNumber inv(const HyperNumber& a, double scale_sq) {
    const double n = a.modulus_sq();
    if (std::abs(n) < kZeroDivisorTol * (1.0 + scale_sq))
        throw ZeroDivisorError("inverse of a zero divisor");
    return (1.0 / n) * a.conj();
}

inline HyperNumber inv(const HyperNumber& a) { return inv(a, a.size_sq()); }

inline HyperNumber div(const HyperNumber& a, const HyperNumber& b) {
    require_same_sigma(a, b);
    return a * inv(b);
}

/// Real 2x2 matrix (a b; c d) of determinant one.
struct GroupElement {
    double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

    constexpr GroupElement() = default;
    constexpr GroupElement(double a_, double b_, double c_, double d_) : a(a_), b(b_), c(c_), d(d_) {}

    constexpr double det() const { return a * d - b * c; }

    /// Rescales so the determinant is exactly one; the input must have det > 0.
    static GroupElement normalized(double a, double b, double c, double d) {
        const double det = a * d - b * c;
        if (!(det > 0.0)) throw Error("matrix is not in the group (det <= 0)");
        const double s = 1.0 / std::sqrt(det);
        return {a * s, b * s, c * s, d * s};
    }

    constexpr GroupElement inverse() const { return {d, -b, -c, a}; }

    static constexpr GroupElement identity() { return {1, 0, 0, 1}; }

    /// Dilation z -> alpha^2 z.
    static GroupElement dilation(double alpha) { return {alpha, 0, 0, 1.0 / alpha}; }

    /// Shift z -> z + nu.
    static constexpr GroupElement shift(double nu) { return {1, nu, 0, 1}; }

    /// Rotation subgroup member (cos phi, sin phi; -sin phi, cos phi).
    static GroupElement rotation(double phi) {
        return {std::cos(phi), std::sin(phi), -std::sin(phi), std::cos(phi)};
    }
};

inline constexpr GroupElement operator*(const GroupElement& g, const GroupElement& h) {
    return {g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.d,
            g.c * h.a + g.d * h.c, g.c * h.b + g.d * h.d};
}

/// Factors of g = A(alpha) N(nu) K(phi) with alpha > 0 and phi in (-pi, pi].
struct IwasawaFactors {
    double alpha = 1.0;
    double nu = 0.0;
    double phi = 0.0;

    GroupElement recompose() const {
        return GroupElement::dilation(alpha) * GroupElement::shift(nu) * GroupElement::rotation(phi);
    }
};

/// Linear-fractional action (a z + b) * (c z + d)^{-1} in the plane of z.
HyperNumber moebius(const GroupElement& g, const HyperNumber& z);

/// Decomposes g into diagonal, unipotent and rotation factors.
IwasawaFactors iwasawa(const GroupElement& g);

/// Rotation-subgroup orbit of z0; entries are empty where the action is undefined.
std::vector<std::optional<HyperNumber>> k_orbit(const HyperNumber& z0, const std::vector<double>& phis);

}  // namespace cyclekit
