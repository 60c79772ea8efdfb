#include "cyclekit/jets.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>

namespace cyclekit {

namespace {

constexpr double kCondLimit = 1e12;

int numerical_rank(const CMatrix& m, double threshold) {
    Eigen::JacobiSVD<CMatrix> svd(m);
    int r = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) > threshold) ++r;
    return r;
}

/// Unitary similarity on adjacent rows/columns (i, i+1) of the triangular T
/// that swaps the two diagonal entries, keeping T upper triangular.
void swap_adjacent(CMatrix& T, int i) {
    const Complex x = T(i, i + 1);
    const Complex y = T(i + 1, i + 1) - T(i, i);
    const double r = std::sqrt(std::norm(x) + std::norm(y));
    if (r == 0.0) return;  // equal eigenvalues, decoupled: nothing to do
    const Complex c = x / r, s = y / r;
    Eigen::Matrix2cd U;
    U << c, -std::conj(s), s, std::conj(c);
    T.middleRows(i, 2) = U.adjoint() * T.middleRows(i, 2);
    T.middleCols(i, 2) = T.middleCols(i, 2) * U;
    T(i + 1, i) = Complex(0, 0);
}

struct Cluster {
    Complex centroid;
    std::vector<int> members;  // positions on the Schur diagonal
    double spread = 0.0;
};

std::vector<Cluster> cluster_diagonal(const CVector& eig, double radius) {
    const int n = static_cast<int>(eig.size());
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    const auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(eig(i) - eig(j)) <= radius) parent[find(i)] = find(j);

    std::vector<Cluster> clusters;
    std::vector<int> idx(n, -1);
    for (int i = 0; i < n; ++i) {
        const int root = find(i);
        if (idx[root] < 0) {
            idx[root] = static_cast<int>(clusters.size());
            clusters.push_back({});
        }
        clusters[idx[root]].members.push_back(i);
    }
    for (auto& c : clusters) {
        Complex sum(0, 0);
        for (int i : c.members) sum += eig(i);
        c.centroid = sum / static_cast<double>(c.members.size());
        for (int i : c.members) c.spread = std::max(c.spread, std::abs(eig(i) - c.centroid));
    }
    return clusters;
}

/// Block lengths of the cluster from the rank staircase of its triangular
/// restriction shifted by the centroid.
std::vector<int> block_lengths(const CMatrix& T11, Complex centroid, double tol_abs, double spread,
                               double norm_a) {
    const int m = static_cast<int>(T11.rows());
    CMatrix B = T11 - centroid * CMatrix::Identity(m, m);
    const double normB = std::max(1.0, operator_norm(B));
    const double base = std::max({tol_abs, 50.0 * m * spread, 1e3 * norm_a *
                                  std::numeric_limits<double>::epsilon()});

    std::vector<int> ranks{m};
    CMatrix P = CMatrix::Identity(m, m);
    double thr = base;
    for (int j = 1; j <= m; ++j) {
        P = P * B;
        const int r = numerical_rank(P, thr);
        if (r >= ranks.back()) break;
        ranks.push_back(r);
        if (r == 0) break;
        thr *= normB;
    }
    if (ranks.back() != 0)
        throw IllConditionedError("rank staircase does not terminate at this tolerance");

    // Weyr characteristic w_j = r_{j-1} - r_j; block-of-size-j count is w_j - w_{j+1}.
    std::vector<int> weyr;
    for (std::size_t j = 1; j < ranks.size(); ++j) weyr.push_back(ranks[j - 1] - ranks[j]);
    for (std::size_t j = 1; j < weyr.size(); ++j)
        if (weyr[j] > weyr[j - 1])
            throw IllConditionedError("rank staircase is not monotone at this tolerance");

    std::vector<int> lengths;
    const int depth = static_cast<int>(weyr.size());
    for (int size = depth; size >= 1; --size) {
        const int count = weyr[size - 1] - (size < depth ? weyr[size] : 0);
        for (int c = 0; c < count; ++c) lengths.push_back(size);
    }
    return lengths;
}

}  // namespace

SuElement SuElement::normalized(Complex a, Complex b) {
    const double d = std::norm(a) - std::norm(b);
    if (!(d > 0.0)) throw Error("not a disk-model element (|alpha| <= |beta|)");
    const double s = 1.0 / std::sqrt(d);
    return {a * s, b * s};
}

double operator_norm(const CMatrix& a) {
    if (a.rows() == 0) return 0.0;
    Eigen::JacobiSVD<CMatrix> svd(a);
    return svd.singularValues()(0);
}

namespace {

// Inverse of alpha e - beta a; singular when the condition number blows up or
// the whole denominator collapses relative to the coefficient scale.
CMatrix inverse_denominator(const SuElement& g, const CMatrix& a) {
    const int n = static_cast<int>(a.rows());
    const CMatrix den = g.alpha * CMatrix::Identity(n, n) - g.beta * a;
    Eigen::JacobiSVD<CMatrix> svd(den, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    const double scale = std::abs(g.alpha) + std::abs(g.beta) * operator_norm(a);
    if (sv(sv.size() - 1) <= 0.0 || sv(0) < 1e-13 * scale ||
        sv(0) / sv(sv.size() - 1) > kCondLimit)
        throw SingularResolventError("alpha e - beta a is numerically singular");
    return svd.solve(CMatrix::Identity(n, n));
}

}  // namespace

CMatrix matrix_moebius(const SuElement& g, const CMatrix& a) {
    if (g.unit_defect() > 1e-10) throw Error("group element off the unit-defect slice");
    if (operator_norm(a) >= 1.0) throw Error("matrix norm must be below one");
    const int n = static_cast<int>(a.rows());
    const CMatrix num = std::conj(g.alpha) * a - std::conj(g.beta) * CMatrix::Identity(n, n);
    return num * inverse_denominator(g, a);
}

CMatrix resolvent(const SuElement& g, const CMatrix& a) {
    return inverse_denominator(g, a);
}

JetSpectrum jet_spectrum(const CMatrix& a, double tol, int max_order) {
    const int n = static_cast<int>(a.rows());
    if (n == 0 || a.rows() != a.cols()) throw Error("matrix must be square and nonempty");
    if (n > max_order) throw Error("matrix order exceeds the configured bound");

    const double norm_a = std::max(operator_norm(a), 1e-300);
    const double radius = tol * norm_a;

    Eigen::ComplexSchur<CMatrix> schur(a, /*computeU=*/false);
    if (schur.info() != Eigen::Success) throw IllConditionedError("Schur iteration failed");
    const CMatrix T0 = schur.matrixT();
    const CVector eig = T0.diagonal();

    const auto clusters = cluster_diagonal(eig, radius);
    for (std::size_t i = 0; i < clusters.size(); ++i)
        for (std::size_t j = i + 1; j < clusters.size(); ++j)
            if (std::abs(clusters[i].centroid - clusters[j].centroid) -
                    clusters[i].spread - clusters[j].spread <
                10.0 * radius)
                throw IllConditionedError("eigenvalue clusters are ambiguous at this tolerance");

    JetSpectrum spec;
    for (const auto& cluster : clusters) {
        // Bubble this cluster's eigenvalues to the leading positions.
        CMatrix T = T0;
        std::vector<bool> in_cluster(n, false);
        for (int i : cluster.members) in_cluster[i] = true;
        std::vector<bool> tag(n);
        for (int i = 0; i < n; ++i) tag[i] = in_cluster[i];
        int target = 0;
        for (int i = 0; i < n; ++i) {
            if (!tag[i]) continue;
            for (int p = i; p > target; --p) {
                swap_adjacent(T, p - 1);
                std::swap(tag[p - 1], tag[p]);
            }
            ++target;
        }
        const int m = static_cast<int>(cluster.members.size());
        const auto lengths =
            block_lengths(T.topLeftCorner(m, m), cluster.centroid, radius, cluster.spread, norm_a);
        for (int len : lengths) spec.points.push_back({cluster.centroid, len});
    }

    std::sort(spec.points.begin(), spec.points.end(), [](const JetPoint& a, const JetPoint& b) {
        if (a.lambda.real() != b.lambda.real()) return a.lambda.real() < b.lambda.real();
        if (a.lambda.imag() != b.lambda.imag()) return a.lambda.imag() < b.lambda.imag();
        return a.order < b.order;
    });
    return spec;
}

int HoloMap::degree() const {
    double scale = 1.0;
    for (const auto& c : coeffs) scale = std::max(scale, std::abs(c));
    for (int d = static_cast<int>(coeffs.size()) - 1; d >= 0; --d)
        if (std::abs(coeffs[d]) > 1e-14 * scale) return d;
    return 0;
}

Complex HoloMap::eval(Complex z) const {
    Complex acc(0, 0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

HoloMap HoloMap::derivative() const {
    std::vector<Complex> d;
    for (std::size_t i = 1; i < coeffs.size(); ++i) d.push_back(static_cast<double>(i) * coeffs[i]);
    if (d.empty()) d.push_back(Complex(0, 0));
    return HoloMap(std::move(d));
}

HoloMap HoloMap::with_zero_orders(const std::vector<Complex>& roots, const std::vector<int>& orders,
                                  Complex scale) {
    // Build the derivative prod (z - root_i)^{order_i - 1}, then integrate.
    std::vector<Complex> d{scale};
    for (std::size_t i = 0; i < roots.size(); ++i) {
        for (int rep = 1; rep < orders[i]; ++rep) {
            std::vector<Complex> next(d.size() + 1, Complex(0, 0));
            for (std::size_t j = 0; j < d.size(); ++j) {
                next[j + 1] += d[j];
                next[j] -= roots[i] * d[j];
            }
            d = std::move(next);
        }
    }
    std::vector<Complex> p(d.size() + 1, Complex(0, 0));
    for (std::size_t j = 0; j < d.size(); ++j) p[j + 1] = d[j] / static_cast<double>(j + 1);
    return HoloMap(std::move(p));
}

int zero_order(const HoloMap& phi, Complex lambda, double tol) {
    if (phi.degree() < 1) throw ConstantMapError("zero order of a constant map");
    double scale = 1.0;
    for (const auto& c : phi.coeffs) scale = std::max(scale, std::abs(c));
    HoloMap d = phi.derivative();
    for (int j = 1; j <= phi.degree(); ++j) {
        if (std::abs(d.eval(lambda)) > tol * scale) return j;
        d = d.derivative();
    }
    return phi.degree();
}

CMatrix apply_poly(const HoloMap& phi, const CMatrix& a) {
    const int n = static_cast<int>(a.rows());
    CMatrix acc = CMatrix::Zero(n, n);
    for (auto it = phi.coeffs.rbegin(); it != phi.coeffs.rend(); ++it)
        acc = acc * a + *it * CMatrix::Identity(n, n);
    return acc;
}

SpectralMapResult spectral_map(const JetSpectrum& spec, const HoloMap& phi) {
    SpectralMapResult out;
    for (const auto& p : spec.points) {
        const Complex image = phi.eval(p.lambda);
        if (std::abs(image) > 1.0 + 1e-9)
            throw Error("map sends a spectrum point outside the closed disk");
        const int deg = zero_order(phi, p.lambda);
        const int q = p.order / deg;
        out.points.push_back({image, std::max(q, 1), q < 1});
    }
    return out;
}

CMatrix jordan_block(int order, Complex lambda) {
    CMatrix j = lambda * CMatrix::Identity(order, order);
    for (int i = 0; i + 1 < order; ++i) j(i, i + 1) = Complex(1, 0);
    return j;
}

CMatrix direct_sum(const std::vector<CMatrix>& blocks) {
    int n = 0;
    for (const auto& b : blocks) n += static_cast<int>(b.rows());
    CMatrix out = CMatrix::Zero(n, n);
    int at = 0;
    for (const auto& b : blocks) {
        const int m = static_cast<int>(b.rows());
        out.block(at, at, m, m) = b;
        at += m;
    }
    return out;
}

int krylov_rank(const CMatrix& a, const CVector& m, int count) {
    const int n = static_cast<int>(a.rows());
    CMatrix kry(n, count);
    CVector v = m;
    for (int j = 0; j < count; ++j) {
        kry.col(j) = v;
        v = a * v;
    }
    const double scale = std::max(1.0, kry.norm());
    return numerical_rank(kry, 1e-9 * scale);
}

}  // namespace cyclekit
