#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "cyclekit/errors.hpp"

namespace cyclekit {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Disk-model group element (alpha, conj(beta); beta, conj(alpha)),
/// |alpha|^2 - |beta|^2 = 1.
struct SuElement {
    Complex alpha{1.0, 0.0};
    Complex beta{0.0, 0.0};

    SuElement() = default;
    SuElement(Complex a, Complex b) : alpha(a), beta(b) {}

    double unit_defect() const {
        return std::abs(std::norm(alpha) - std::norm(beta) - 1.0);
    }

    SuElement inverse() const { return {std::conj(alpha), -beta}; }

    Eigen::Matrix2cd matrix() const {
        Eigen::Matrix2cd m;
        m << alpha, std::conj(beta), beta, std::conj(alpha);
        return m;
    }

    static SuElement from_matrix(const Eigen::Matrix2cd& m) { return {m(0, 0), m(1, 0)}; }

    /// Normalizes (a, b) with |a| > |b| onto the unit-defect-zero slice.
    static SuElement normalized(Complex a, Complex b);
};

inline SuElement operator*(const SuElement& g, const SuElement& h) {
    return SuElement::from_matrix(g.matrix() * h.matrix());
}

double operator_norm(const CMatrix& a);

/// Fractional-linear action (conj(alpha) a - conj(beta) e)(alpha e - beta a)^{-1}.
///
/// As a function of the parameter g this is the transformation the group
/// element g^{-1} induces, so the maps compose as
/// matrix_moebius(g2, matrix_moebius(g1, a)) == matrix_moebius(g1*g2, a).
CMatrix matrix_moebius(const SuElement& g, const CMatrix& a);

/// Resolvent factor (alpha e - beta a)^{-1}; satisfies the cocycle identity
/// resolvent(g1, a) * resolvent(g2, matrix_moebius(g1, a)) == resolvent(g1*g2, a).
CMatrix resolvent(const SuElement& g, const CMatrix& a);

/// One spectral point: an eigenvalue in the closed disk and the length of its
/// block, i.e. the order of the jet attached to it.
struct JetPoint {
    Complex lambda;
    int order = 1;
};

struct JetSpectrum {
    std::vector<JetPoint> points;

    int total_order() const {
        int s = 0;
        for (const auto& p : points) s += p.order;
        return s;
    }
};

/// Full similarity invariant of the matrix: eigenvalues clustered at
/// tol * ||a||, block lengths recovered from the rank staircase of the
/// cluster-projected triangular factor. Throws IllConditionedError when two
/// clusters approach within 10x the clustering radius.
JetSpectrum jet_spectrum(const CMatrix& a, double tol = 1e-7, int max_order = 64);

/// Polynomial map of the disk, coefficients in ascending degree.
struct HoloMap {
    std::vector<Complex> coeffs;

    explicit HoloMap(std::vector<Complex> c) : coeffs(std::move(c)) {}

    int degree() const;
    Complex eval(Complex z) const;
    HoloMap derivative() const;

    /// Polynomial with the prescribed orders of zeros of phi - phi(root_i)
    /// at the given points: the integral of prod (z - root_i)^(order_i - 1),
    /// scaled by `scale`.
    static HoloMap with_zero_orders(const std::vector<Complex>& roots,
                                    const std::vector<int>& orders, Complex scale);
};

/// Smallest j >= 1 with the j-th derivative of phi nonzero at lambda.
int zero_order(const HoloMap& phi, Complex lambda, double tol = 1e-10);

/// Horner evaluation of phi at the matrix.
CMatrix apply_poly(const HoloMap& phi, const CMatrix& a);

struct MappedJetPoint {
    Complex lambda;
    int order = 1;
    bool clamped = false;  // true when floor(k / deg) was 0 and got lifted to 1
};

struct SpectralMapResult {
    std::vector<MappedJetPoint> points;

    JetSpectrum spectrum() const {
        JetSpectrum s;
        for (const auto& p : points) s.points.push_back({p.lambda, p.order});
        return s;
    }
    bool any_clamped() const {
        for (const auto& p : points)
            if (p.clamped) return true;
        return false;
    }
};

/// Image multiset {(phi(lambda_i), floor(k_i / deg))}; a zero integer part is
/// clamped to 1 and flagged.
SpectralMapResult spectral_map(const JetSpectrum& spec, const HoloMap& phi);

CMatrix jordan_block(int order, Complex lambda);
CMatrix direct_sum(const std::vector<CMatrix>& blocks);

/// Dimension of span{m, a m, ..., a^{count-1} m}.
int krylov_rank(const CMatrix& a, const CVector& m, int count);

}  // namespace cyclekit
