#include "cyclekit/verify.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>

#include "cyclekit/hardy.hpp"
#include "cyclekit/jets.hpp"
#include "cyclekit/metric.hpp"
#include "cyclekit/orthogonality.hpp"
#include "cyclekit/sampling.hpp"

namespace cyclekit::verify {

namespace {

long count_of(const Options& opts, long dflt) { return opts.samples > 0 ? opts.samples : dflt; }
double tol_of(const Options& opts, double dflt) { return opts.tol > 0.0 ? opts.tol : dflt; }

// Least-squares cycle through sample points in the sigma drawing; returns the
// worst scale-normalized incidence residual.
Cycle fit_cycle(const std::vector<Point>& pts, Sigma sigma, double* residual) {
    Eigen::MatrixXd design(static_cast<int>(pts.size()), 4);
    for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
        const Point& p = pts[i];
        design(i, 0) = p.u * p.u - sigma.real() * p.v * p.v;
        design(i, 1) = -2.0 * p.u;
        design(i, 2) = -2.0 * p.v;
        design(i, 3) = 1.0;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(design, Eigen::ComputeThinV);
    const Eigen::VectorXd v = svd.matrixV().col(3);
    const Cycle c{v(0), v(1), v(2), v(3)};
    if (residual) {
        double worst = 0.0;
        for (const Point& p : pts)
            worst = std::max(worst, std::abs(incidence(c, p, sigma)) / (1.0 + p.u * p.u + p.v * p.v));
        *residual = worst;
    }
    return c;
}

Cycle line_through(const Point& p, const Point& dir) {
    return Cycle{0.0, dir.v / 2.0, -dir.u / 2.0, dir.v * p.u - dir.u * p.v};
}

Cycle circle(double cu, double cv, double r_sq) {
    return Cycle{1.0, cu, cv, cu * cu + cv * cv - r_sq};
}

SuElement random_su(Rng& rng, double tmax = 1.0) {
    const double t = rng.uniform(0.05, tmax);
    return {std::polar(std::cosh(t), rng.uniform(-M_PI, M_PI)),
            std::polar(std::sinh(t), rng.uniform(-M_PI, M_PI))};
}

CMatrix random_contraction(Rng& rng, int n, double target_norm) {
    CMatrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
    return a * (target_norm / operator_norm(a));
}

bool multiset_equal(const JetSpectrum& a, const JetSpectrum& b, double eig_tol, double* worst) {
    if (a.points.size() != b.points.size()) return false;
    std::vector<bool> used(b.points.size(), false);
    for (const auto& p : a.points) {
        bool found = false;
        for (std::size_t j = 0; j < b.points.size(); ++j) {
            if (used[j] || b.points[j].order != p.order) continue;
            const double d = std::abs(b.points[j].lambda - p.lambda);
            if (d <= eig_tol) {
                used[j] = true;
                found = true;
                if (worst) *worst = std::max(*worst, d);
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

// Jordan type of the image of one block of length k under a map with zero
// order d: (k mod d) blocks of ceil(k/d) and d - (k mod d) blocks of
// floor(k/d), zero lengths dropped.
std::vector<int> image_block_lengths(int k, int d) {
    std::vector<int> out;
    const int q = k / d, r = k % d;
    for (int i = 0; i < r; ++i) out.push_back(q + 1);
    for (int i = 0; i < d - r; ++i)
        if (q > 0) out.push_back(q);
    if (out.empty()) out.push_back(1);  // d > k: the image is scalar on the block
    return out;
}

const Complex kEx1 = std::polar(0.75, M_PI / 4);
const Complex kEx2 = std::polar(2.0 / 3.0, 5.0 * M_PI / 6.0);
const Complex kEx3 = std::polar(0.4, -3.0 * M_PI / 4.0);
const Complex kEx4 = std::polar(0.6, -M_PI / 3.0);

CMatrix example_jet_matrix() {
    return direct_sum({jordan_block(3, kEx1), jordan_block(4, kEx2), jordan_block(1, kEx3),
                       jordan_block(2, kEx4)});
}

}  // namespace

bool all_pass(const std::vector<Verdict>& verdicts) {
    return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.pass; });
}

// ---------------------------------------------------------------------------
// moebius
// ---------------------------------------------------------------------------

std::vector<Verdict> suite_moebius(const Options& opts) {
    std::vector<Verdict> out;
    Rng rng(opts.seed);
    const long n_main = count_of(opts, 1000);

    {
        double worst = 0.0;
        for (int si = -1; si <= 1; ++si) {
            const HyperNumber unit{0.0, 1.0, Sigma(si)};
            const HyperNumber sq = unit * unit;
            worst = std::max(worst, std::abs(sq.re - si) + std::abs(sq.im));
        }
        out.push_back(Verdict::of("unit-square-is-sigma", worst, 1e-15));
    }
    {
        double worst = 0.0;
        for (int si = -1; si <= 1; ++si) {
            const Sigma sg(si);
            for (long i = 0; i < n_main; ++i) {
                const HyperNumber a{rng.uniform(-2, 2), rng.uniform(-2, 2), sg};
                const HyperNumber b{rng.uniform(-2, 2), rng.uniform(-2, 2), sg};
                const HyperNumber c{rng.uniform(-2, 2), rng.uniform(-2, 2), sg};
                const HyperNumber ab = a * b, ba = b * a;
                const HyperNumber l = (a * b) * c, r = a * (b * c);
                worst = std::max({worst, std::abs(ab.re - ba.re), std::abs(ab.im - ba.im),
                                  std::abs(l.re - r.re), std::abs(l.im - r.im)});
            }
        }
        out.push_back(Verdict::of("mul-commutative-associative", worst, 1e-12));
    }
    {
        double worst = 0.0;
        for (int si = -1; si <= 1; ++si) {
            const Sigma sg(si);
            for (long i = 0; i < n_main; ++i) {
                const GroupElement g1 = random_group_element(rng), g2 = random_group_element(rng);
                const HyperNumber z{rng.uniform(-2, 2), rng.uniform(-2, 2), sg};
                try {
                    const HyperNumber inner = moebius(g2, z);
                    if (inner.size_sq() > 2500.0) continue;
                    const HyperNumber lhs = moebius(g1, inner);
                    if (lhs.size_sq() > 2500.0) continue;
                    const HyperNumber rhs = moebius(g1 * g2, z);
                    worst = std::max(worst, std::hypot(lhs.re - rhs.re, lhs.im - rhs.im) /
                                                (1.0 + std::sqrt(rhs.size_sq())));
                } catch (const ZeroDivisorError&) {
                }
            }
        }
        out.push_back(Verdict::of("moebius-homomorphism", worst, tol_of(opts, 1e-9)));
    }
    {
        double worst = 0.0;
        long branch_bad = 0;
        for (long i = 0; i < n_main; ++i) {
            const GroupElement g = random_group_element(rng);
            const IwasawaFactors f = iwasawa(g);
            if (!(f.alpha > 0.0) || f.phi <= -M_PI || f.phi > M_PI) ++branch_bad;
            const GroupElement r = f.recompose();
            worst = std::max({worst, std::abs(r.a - g.a), std::abs(r.b - g.b),
                              std::abs(r.c - g.c), std::abs(r.d - g.d)});
        }
        out.push_back(Verdict::of("iwasawa-roundtrip", worst, tol_of(opts, 1e-12)));
        out.push_back(Verdict::of("iwasawa-branch", static_cast<double>(branch_bad), 0.0));
    }
    {
        long violations = 0;
        for (long i = 0; i < 500; ++i) {
            const GroupElement g = random_group_element(rng);
            const HyperNumber z{rng.uniform(-2, 2), rng.uniform(0.05, 3), kElliptic};
            try {
                if (moebius(g, z).im <= 0.0) ++violations;
            } catch (const ZeroDivisorError&) {
            }
        }
        out.push_back(Verdict::of("half-plane-preserved", static_cast<double>(violations), 0.0));
    }
    {
        double worst = 0.0;
        for (int si = -1; si <= 1; ++si) {
            const Sigma sg(si);
            for (int rep = 0; rep < 8; ++rep) {
                const HyperNumber z0{rng.uniform(-1.5, 1.5),
                                     rng.uniform(0.3, 2.0) * (rng.coin() ? 1 : -1), sg};
                std::vector<double> phis;
                for (int j = 0; j < 36; ++j) phis.push_back(-M_PI / 2 + M_PI * (j + 0.5) / 36);
                std::vector<Point> pts;
                for (const auto& w : k_orbit(z0, phis))
                    if (w && w->size_sq() < 1e4) pts.push_back({w->re, w->im});
                if (pts.size() < 12) continue;
                double res = 0.0;
                fit_cycle(pts, sg, &res);
                worst = std::max(worst, res);
            }
        }
        out.push_back(Verdict::of("k-orbit-conic-fit", worst, 1e-8));
    }
    {
        double worst = 0.0;
        for (int j = 0; j < 24; ++j) {
            const double phi = -M_PI + 2 * M_PI * (j + 0.5) / 24;
            const HyperNumber w = moebius(GroupElement::rotation(phi), HyperNumber{0, 1, kElliptic});
            worst = std::max(worst, std::hypot(w.re, w.im - 1.0));
        }
        out.push_back(Verdict::of("k-orbit-elliptic-fixed-point", worst, 1e-12));
    }
    return out;
}

// ---------------------------------------------------------------------------
// fscc
// ---------------------------------------------------------------------------

std::vector<Verdict> suite_fscc(const Options& opts) {
    std::vector<Verdict> out;
    Rng rng(opts.seed + 1);
    const long n_pairs = count_of(opts, 500);

    {
        double worst = 0.0;
        long used = 0;
        for (int si = -1; si <= 1; ++si) {
            const Sigma sg(si);
            for (int bi = -1; bi <= 1; ++bi) {
                const FsccParams params(Sigma(bi), 1.0);
                for (long trial = 0; trial < n_pairs; ++trial) {
                    Cycle c;
                    if (rng.uniform(0, 1) < 0.8) {
                        c = random_cycle(rng, true);
                    } else {
                        c = Cycle{0, rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
                        if (c.l * c.l + c.n * c.n < 0.04) continue;
                    }
                    const GroupElement g = random_group_element(rng);
                    const Cycle tc = normalize(transform(c, g, params));
                    for (int pt = 0; pt < 20; ++pt) {
                        const auto p = random_point_on(c, sg, rng);
                        if (!p) break;
                        try {
                            const HyperNumber w = moebius(g, {p->u, p->v, sg});
                            const double wsz = w.size_sq();
                            if (wsz > 1e8) continue;
                            worst = std::max(worst,
                                             std::abs(incidence(tc, {w.re, w.im}, sg)) /
                                                 ((1.0 + wsz) * std::max(1.0, tc.max_abs())));
                            ++used;
                        } catch (const ZeroDivisorError&) {
                        }
                    }
                }
            }
        }
        out.push_back(Verdict::of("intertwining-master", worst, tol_of(opts, 1e-8)));
        out.push_back(
            Verdict::of("intertwining-coverage",
                        used >= 9L * n_pairs * 10 ? 0.0 : 1.0, 0.0));
    }
    {
        double worst = 0.0;
        for (long i = 0; i < 500; ++i) {
            const Cycle c = random_cycle(rng, true);
            const Point ce = centre(c, kElliptic), ch = centre(c, kHyperbolic),
                        cp = centre(c, kParabolic);
            worst = std::max({worst, std::abs(ce.u - ch.u), std::abs(ce.v + ch.v),
                              std::abs(cp.u - 0.5 * (ce.u + ch.u)),
                              std::abs(cp.v - 0.5 * (ce.v + ch.v))});
        }
        out.push_back(Verdict::of("centre-identities", worst, 1e-12));
    }
    {
        double worst = 0.0;
        for (long i = 0; i < 500; ++i) {
            const Cycle c = random_cycle(rng, true, true);
            const Sigma sb = random_sigma(rng);
            const Point f1 = focus(c, FsccParams(sb, 1.0));
            const Point f2 = focus(c, FsccParams(sb, -1.0));
            worst = std::max({worst, std::abs(f1.u - f2.u), std::abs(f1.v - f2.v)});
        }
        out.push_back(Verdict::of("focus-s-sign-independent", worst, 1e-12));
    }
    {
        double worst = 0.0;
        for (long i = 0; i < 500; ++i) {
            const Cycle c = random_cycle(rng, false);
            const FsccParams params(random_sigma(rng), rng.coin() ? 1.0 : -1.0);
            const Cycle back = from_matrix(to_matrix(c, params));
            const Cycle cn = normalize(c), bn = normalize(back);
            worst = std::max({worst, std::abs(cn.k - bn.k), std::abs(cn.l - bn.l),
                              std::abs(cn.n - bn.n), std::abs(cn.m - bn.m)});
        }
        out.push_back(Verdict::of("matrix-roundtrip", worst, 1e-12));
    }
    {
        double worst = 0.0, worst_comp = 0.0;
        for (long i = 0; i < 300; ++i) {
            const Cycle c = random_cycle(rng, rng.coin());
            const FsccParams params(random_sigma(rng), 1.0);
            const GroupElement g1 = random_group_element(rng), g2 = random_group_element(rng);
            worst = std::max(worst, std::abs(determinant(transform(c, g1, params), params) -
                                             determinant(c, params)));
            const Cycle lhs = transform(transform(c, g1, params), g2, params);
            const Cycle rhs = transform(c, g2 * g1, params);
            const Cycle ln = normalize(lhs), rn = normalize(rhs);
            worst_comp = std::max({worst_comp, std::abs(ln.k - rn.k), std::abs(ln.l - rn.l),
                                   std::abs(ln.n - rn.n), std::abs(ln.m - rn.m)});
        }
        out.push_back(Verdict::of("transform-det-invariant", worst, 1e-9));
        out.push_back(Verdict::of("transform-composition", worst_comp, 1e-9));
    }
    {
        double worst = 0.0;
        for (long i = 0; i < 300; ++i) {
            const Point p = random_point(rng);
            const Sigma sb = random_sigma(rng);
            const FsccParams params(sb, rng.coin() ? 1.0 : -1.0);
            const Cycle z = zero_radius_at(p, params);
            worst = std::max(worst, std::abs(determinant(z, params)));
            if (sb.elliptic()) {
                worst = std::max(worst, std::abs(incidence(z, p, kElliptic)));
                const Point ce = centre(z, kElliptic);
                worst = std::max({worst, std::abs(ce.u - p.u), std::abs(ce.v - p.v)});
            }
            if (sb.hyperbolic()) {
                // the null cone sits at the hyperbolic centre (u, -v)
                const Point vertex = centre(z, kHyperbolic);
                const double t = rng.uniform(-2, 2);
                const double branch = rng.coin() ? 1.0 : -1.0;
                worst = std::max(
                    worst, std::abs(incidence(z, {vertex.u + t, vertex.v + branch * t},
                                              kHyperbolic)) /
                               (1.0 + p.u * p.u + p.v * p.v + t * t));
            }
        }
        out.push_back(Verdict::of("zero-radius-properties", worst, 1e-10));
    }
    {
        const double r1 = radius_sq(Cycle::unit_circle(), FsccParams(kElliptic, 1.0));
        const double r2 = radius_sq(circle(2, 3, 25), FsccParams(kElliptic, 1.0));
        out.push_back(Verdict::of("radius-anchors",
                                  std::max(std::abs(r1 - 1.0), std::abs(r2 - 25.0)), 1e-12));
    }
    {
        // Orbits through (0, t) across the three drawings land on one 2-plane
        // of the cycle space.
        std::vector<Point> quadruples_rows;
        Eigen::MatrixXd rows(15, 4);
        int r = 0;
        for (int si = -1; si <= 1; ++si) {
            const Sigma sg(si);
            for (double t : {0.4, 0.9, 1.7, 2.6, 3.3}) {
                std::vector<double> phis;
                for (int j = 0; j < 40; ++j) phis.push_back(-M_PI / 2 + M_PI * (j + 0.5) / 40);
                std::vector<Point> pts;
                for (const auto& w : k_orbit({0.0, t, sg}, phis))
                    if (w && w->size_sq() < 1e4) pts.push_back({w->re, w->im});
                const Cycle c = normalize(fit_cycle(pts, sg, nullptr));
                rows(r, 0) = c.k;
                rows(r, 1) = c.l;
                rows(r, 2) = c.n;
                rows(r, 3) = c.m;
                ++r;
            }
        }
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(rows.topRows(r));
        const double ratio = svd.singularValues()(3) / svd.singularValues()(0);
        out.push_back(Verdict::of("k-orbit-cone-plane", ratio, 1e-7));
    }
    return out;
}

// ---------------------------------------------------------------------------
// orthogonality
// ---------------------------------------------------------------------------

std::vector<Verdict> suite_orthogonality(const Options& opts) {
    std::vector<Verdict> out;
    Rng rng(opts.seed + 2);
    const long n_main = count_of(opts, 1000);
    const FsccParams euclid(kElliptic, 1.0);

    {
        long disagree = 0, used = 0;
        for (long i = 0; i < n_main; ++i) {
            Cycle c1, c2;
            double diff;
            if (i % 2 == 0) {
                // constructed orthogonal pair
                const Point a = random_point(rng), b = random_point(rng);
                const double d2 = distance_sq(a, b, kElliptic);
                if (d2 < 0.2) continue;
                const double r1 = rng.uniform(0.04, d2 - 0.04);
                c1 = circle(a.u, a.v, r1);
                c2 = circle(b.u, b.v, d2 - r1);
                diff = 0.0;
            } else {
                const Point a = random_point(rng), b = random_point(rng);
                const double r1 = rng.uniform(0.04, 9.0), r2 = rng.uniform(0.04, 9.0);
                c1 = circle(a.u, a.v, r1);
                c2 = circle(b.u, b.v, r2);
                diff = distance_sq(a, b, kElliptic) - r1 - r2;
            }
            if (std::abs(diff) > 0.0 && std::abs(diff) < 1e-7) continue;  // borderline per spec
            const bool oracle = std::abs(diff) < 1e-9;
            if (is_orthogonal(c1, c2, euclid) != oracle) ++disagree;
            ++used;
        }
        out.push_back(Verdict::of("euclid-calibration", static_cast<double>(disagree), 0.0));
        out.push_back(Verdict::of("euclid-calibration-coverage",
                                  used > n_main / 2 ? 0.0 : 1.0, 0.0));
    }
    {
        long disagree = 0;
        for (long i = 0; i < 500; ++i) {
            const Sigma sg = random_sigma(rng);
            const FsccParams params(sg, 1.0);
            const Point p = random_point(rng);
            const Cycle z = zero_radius_at(p, params);
            const Point q = centre(z, sg);
            Cycle c;
            if (i % 2 == 0) {
                const double l = rng.uniform(-2, 2), n = rng.uniform(-2, 2);
                const double w = q.u * q.u - sg.real() * q.v * q.v;
                c = Cycle{1.0, l, n, 2 * l * q.u + 2 * n * q.v - w};
            } else {
                c = random_cycle(rng, false);
            }
            const double inc = incidence(normalize(c), q, sg);
            if (std::abs(inc) > 0.0 && std::abs(inc) < 1e-7) continue;
            const bool oracle = std::abs(inc) < 1e-9;
            if (is_orthogonal(c, z, params) != oracle) ++disagree;
        }
        out.push_back(Verdict::of("zero-radius-incidence", static_cast<double>(disagree), 0.0));
    }
    {
        long disagree = 0;
        double identity_worst = 0.0;
        for (long i = 0; i < 500; ++i) {
            const FsccParams params(random_sigma(rng), 1.0);
            const Cycle c =
                i % 2 == 0 ? zero_radius_at(random_point(rng), params) : random_cycle(rng, false);
            const Cycle cn = normalize(c);
            const double det = determinant(cn, params);
            const double scale = 1.0 + cn.max_abs() * cn.max_abs();
            identity_worst =
                std::max(identity_worst, std::abs(pairing(c, c, params) + 2.0 * det) / scale);
            if (std::abs(det) > 0.0 && std::abs(det) < 1e-7) continue;
            const bool oracle = std::abs(det) < 1e-9;
            if (is_orthogonal(c, c, params) != oracle) ++disagree;
        }
        out.push_back(Verdict::of("self-orthogonal-iff-det-zero", static_cast<double>(disagree), 0.0));
        out.push_back(Verdict::of("self-pairing-is-minus-2det", identity_worst, 1e-12));
    }
    {
        double worst = 0.0;
        for (long i = 0; i < 200; ++i) {
            const FsccParams params(random_sigma(rng), 1.0);
            const Cycle a = random_cycle(rng, false), b = random_cycle(rng, false);
            worst = std::max(worst, std::abs(pairing(a, b, params) - pairing(b, a, params)));
        }
        out.push_back(Verdict::of("pairing-symmetric", worst, 1e-12));
    }
    {
        long disagree = 0;
        for (long i = 0; i < 500; ++i) {
            const FsccParams params(random_sigma(rng), 1.0);
            const Cycle c1 = random_cycle(rng, false), c2 = random_cycle(rng, false);
            const GroupElement g = random_group_element(rng);
            const double p0 = std::abs(pairing(c1, c2, params));
            if (p0 > 1e-12 && p0 < 1e-6) continue;
            if (is_orthogonal(c1, c2, params) !=
                is_orthogonal(transform(c1, g, params), transform(c2, g, params), params))
                ++disagree;
            const double s0 = std::abs(s_orthogonality_value(c1, c2, params));
            if (s0 > 1e-12 && s0 < 1e-6) continue;
            if (is_s_orthogonal(c1, c2, params) !=
                is_s_orthogonal(transform(c1, g, params), transform(c2, g, params), params))
                ++disagree;
        }
        out.push_back(Verdict::of("predicate-moebius-invariance", static_cast<double>(disagree), 0.0));
    }
    {
        // mirror image across the real axis
        double worst = 0.0;
        for (long i = 0; i < 100; ++i) {
            const Point a = random_point(rng);
            const double r = rng.uniform(0.2, 3.0);
            const Cycle got = reflect(Cycle::real_line(), circle(a.u, a.v, r * r), euclid);
            const Cycle want = circle(a.u, -a.v, r * r);
            const Cycle gn = normalize(got), wn = normalize(want);
            worst = std::max({worst, std::abs(gn.k - wn.k), std::abs(gn.l - wn.l),
                              std::abs(gn.n - wn.n), std::abs(gn.m - wn.m)});
        }
        out.push_back(Verdict::of("reflect-real-line-mirror", worst, 1e-10));
    }
    {
        double worst_inv = 0.0, worst_self = 0.0;
        long shape_fail = 0;
        for (long i = 0; i < 200; ++i) {
            const FsccParams params(random_sigma(rng), rng.coin() ? 1.0 : -1.0);
            const Cycle mirror = random_cycle(rng, rng.coin());
            if (std::abs(determinant(normalize(mirror), params)) < 1e-3) continue;
            const Cycle c = random_cycle(rng, false);
            try {
                const Cycle once = reflect(mirror, c, params);
                const Cycle twice = reflect(mirror, once, params);
                const Cycle tn = normalize(twice), cn = normalize(c);
                worst_inv = std::max({worst_inv, std::abs(tn.k - cn.k), std::abs(tn.l - cn.l),
                                      std::abs(tn.n - cn.n), std::abs(tn.m - cn.m)});
                const Cycle self = reflect(mirror, mirror, params);
                const Cycle sn = normalize(self), mn = normalize(mirror);
                worst_self = std::max({worst_self, std::abs(sn.k - mn.k), std::abs(sn.l - mn.l),
                                       std::abs(sn.n - mn.n), std::abs(sn.m - mn.m)});
            } catch (const BadMatrixShapeError&) {
                ++shape_fail;
            }
        }
        out.push_back(Verdict::of("reflect-involutive", worst_inv, 1e-7));
        out.push_back(Verdict::of("reflect-self-proportional", worst_self, 1e-9));
        out.push_back(Verdict::of("reflect-shape-preserved", static_cast<double>(shape_fail), 0.0));
    }
    {
        // s-orthogonality is not symmetric: vertical focal line witness.
        const FsccParams params(kElliptic, 1.0);
        const Cycle parab{1.0, 0.4, 0.7, -0.3};
        const Cycle focal_line{0.0, 1.0, 0.0, 2.0 * 0.4};  // u = l/k = 0.4
        const Cycle off_line{0.0, 1.0, 0.0, 2.0 * 0.9};
        const bool ok = is_s_orthogonal(focal_line, parab, params) &&
                        !is_s_orthogonal(parab, focal_line, params) &&
                        !is_s_orthogonal(off_line, parab, params);
        out.push_back(Verdict::of("s-orthogonality-asymmetry-witness", ok ? 0.0 : 1.0, 0.0));
    }
    {
        out.push_back(Verdict::of(
            "real-line-self-s-orthogonal-parabolic",
            std::abs(s_orthogonality_value(Cycle::real_line(), Cycle::real_line(),
                                           FsccParams(kParabolic, 1.0))),
            1e-12));
    }
    {
        // every line s-orthogonal to c passes the focus, and conversely
        long disagree = 0;
        for (long i = 0; i < 300; ++i) {
            const Sigma sb = rng.coin() ? kElliptic : kHyperbolic;
            const FsccParams params(sb, 1.0);
            const Cycle c = random_cycle(rng, true, true);
            const Point f = focus(c, params);
            Cycle line;
            if (i % 2 == 0) {
                line = line_through(f, {std::cos(rng.uniform(0, M_PI)), std::sin(rng.uniform(0, M_PI))});
            } else {
                line = line_through(random_point(rng),
                                    {std::cos(rng.uniform(0, M_PI)), std::sin(rng.uniform(0, M_PI))});
            }
            const double inc = incidence(normalize(line), f, kParabolic);
            if (std::abs(inc) > 0.0 && std::abs(inc) < 1e-7) continue;
            const bool through_focus = std::abs(inc) < 1e-9;
            if (is_s_orthogonal(line, c, params) != through_focus) ++disagree;
        }
        out.push_back(Verdict::of("s-orthogonal-lines-pass-focus", static_cast<double>(disagree), 0.0));
    }
    return out;
}

// ---------------------------------------------------------------------------
// ghosts
// ---------------------------------------------------------------------------

std::vector<Verdict> suite_ghosts(const Options& opts) {
    std::vector<Verdict> out;
    Rng rng(opts.seed + 3);
    const long n_main = count_of(opts, 200);

    {
        double value_worst = 0.0;
        long bool_disagree = 0;
        for (long i = 0; i < n_main; ++i) {
            const Sigma sg = rng.coin() ? kElliptic : kHyperbolic;
            const FsccParams params(random_sigma(rng), rng.coin() ? 1.0 : -1.0);
            const Cycle c = random_cycle(rng, true);
            const Cycle x = random_cycle(rng, false);
            const double v1 = pairing(x, c, params);
            const double v2 = drawing_pairing(x, ghost(c, sg, params), sg);
            value_worst = std::max(value_worst, std::abs(v1 - v2) / (1.0 + std::abs(v1)));
            if (is_orthogonal(x, c, params) != is_drawing_orthogonal(x, ghost(c, sg, params), sg))
                ++bool_disagree;
        }
        out.push_back(Verdict::of("ghost-reduction-value", value_worst, 1e-12));
        out.push_back(Verdict::of("ghost-reduction-boolean", static_cast<double>(bool_disagree), 0.0));
    }
    {
        double worst = 0.0;
        for (long i = 0; i < n_main; ++i) {
            const Sigma sg = rng.coin() ? kElliptic : kHyperbolic;
            const FsccParams params(random_sigma(rng), 1.0);
            const Cycle c = random_cycle(rng, true);
            const Cycle gh = ghost(c, sg, params);
            // roots shared
            std::array<double, 2> roots{};
            const int cnt = real_roots(c, roots);
            for (int j = 0; j < cnt; ++j)
                worst = std::max(worst, std::abs(incidence(gh, {roots[j], 0.0}, sg)) /
                                            (1.0 + roots[j] * roots[j]));
            // chi(sigma)-centre of ghost = sigma_breve-centre of c
            const Point gc = centre(gh, Sigma(heaviside(sg)));
            const Point cc = centre(c, params.sigma_breve);
            worst = std::max({worst, std::abs(gc.u - cc.u), std::abs(gc.v - cc.v)});
        }
        out.push_back(Verdict::of("ghost-roots-and-centre", worst, 1e-9));
    }
    {
        double worst = 0.0;
        for (long i = 0; i < 100; ++i) {
            const Sigma sg = rng.coin() ? kElliptic : kHyperbolic;
            const Cycle c = random_cycle(rng, true);
            const Cycle gh = ghost(c, sg, FsccParams(sg, 1.0));
            const Cycle gn = normalize(gh), cn = normalize(c);
            worst = std::max({worst, std::abs(gn.k - cn.k), std::abs(gn.l - cn.l),
                              std::abs(gn.n - cn.n), std::abs(gn.m - cn.m)});
        }
        out.push_back(Verdict::of("ghost-matched-units-identity", worst, 1e-12));
    }
    {
        // constructed tangent-orthogonal circles in the elliptic drawing are
        // sigma_breve-orthogonal to the source cycle
        long fails = 0;
        for (long i = 0; i < 100; ++i) {
            const FsccParams params(random_sigma(rng), 1.0);
            const Cycle c = random_cycle(rng, true);
            const Cycle gh = ghost(c, kElliptic, params);
            const double r2 = (gh.l * gh.l + gh.n * gh.n - gh.m * gh.k) / (gh.k * gh.k);
            if (r2 < 0.05) continue;
            const Point q = centre(gh, kElliptic);
            const double r = std::sqrt(r2), t = rng.uniform(0, 2 * M_PI);
            const Point p{q.u + r * std::cos(t), q.v + r * std::sin(t)};
            const double w = rng.uniform(0.3, 2.0) * (rng.coin() ? 1 : -1);
            const Point cx{p.u - w * std::sin(t), p.v + w * std::cos(t)};
            const Cycle x = circle(cx.u, cx.v, w * w);
            if (!is_orthogonal(x, c, params, 1e-7)) ++fails;
        }
        out.push_back(Verdict::of("ghost-euclid-tangent-oracle", static_cast<double>(fails), 0.0));
    }
    {
        long bool_disagree = 0;
        for (long i = 0; i < n_main; ++i) {
            const Sigma sg = rng.coin() ? kElliptic : kHyperbolic;
            const FsccParams params(rng.coin() ? kElliptic : kHyperbolic, 1.0);
            const Cycle c = random_cycle(rng, true, true);
            const Cycle x = random_cycle(rng, false);
            const double s0 = std::abs(s_orthogonality_value(x, c, params));
            if (s0 > 1e-12 && s0 < 1e-6) continue;
            if (is_s_orthogonal(x, c, params) !=
                is_drawing_orthogonal(x, s_ghost(c, sg, params), sg))
                ++bool_disagree;
        }
        out.push_back(Verdict::of("s-ghost-reduction-boolean", static_cast<double>(bool_disagree), 0.0));
    }
    {
        // matched hyperbolic units: the pairing predicate agrees with
        // tangent-angle orthogonality in the split form (tangents t1, t2 at a
        // shared point with t1u t2u - t1v t2v = 0)
        const FsccParams params(kHyperbolic, 1.0);
        long fails = 0, done = 0, guard = 0;
        while (done < 100 && guard < 5000) {
            ++guard;
            const Cycle c = random_cycle(rng, true);
            const auto p = random_point_on(c, kHyperbolic, rng);
            if (!p || p->u * p->u + p->v * p->v > 16.0) continue;
            // tangent of c at p, then the split-orthogonal direction (swap)
            const double gu = 2 * c.k * p->u - 2 * c.l;
            const double gv = -2 * c.k * p->v - 2 * c.n;
            if (gu * gu + gv * gv < 1e-4) continue;
            const Point t1{-gv, gu};
            const Point d{t1.v, t1.u};
            // cycle through p whose gradient is euclid-normal to d
            const double tau = rng.uniform(0.3, 1.5) * (rng.coin() ? 1 : -1);
            const double lx = p->u - tau * d.v;
            const double nx = tau * d.u - p->v;
            const double w = p->u * p->u - p->v * p->v;
            const Cycle x{1.0, lx, nx, 2 * lx * p->u + 2 * nx * p->v - w};
            ++done;
            if (!is_orthogonal(x, c, params, 1e-7)) ++fails;
        }
        out.push_back(Verdict::of("hyperbolic-tangent-oracle",
                                  static_cast<double>(fails) + (done < 100 ? 1.0 : 0.0), 0.0));
    }
    {
        // constructed drawing-orthogonal circles to the s-ghost are s-orthogonal
        long fails = 0;
        for (long i = 0; i < 100; ++i) {
            const FsccParams params(rng.coin() ? kElliptic : kHyperbolic, 1.0);
            const Cycle c = random_cycle(rng, true, true);
            const Cycle gh = s_ghost(c, kElliptic, params);
            if (std::abs(gh.k) < 1e-6) continue;
            const double r2 = (gh.l * gh.l + gh.n * gh.n - gh.m * gh.k) / (gh.k * gh.k);
            if (r2 < 0.05) continue;
            const Point q = centre(gh, kElliptic);
            const double r = std::sqrt(r2), t = rng.uniform(0, 2 * M_PI);
            const Point p{q.u + r * std::cos(t), q.v + r * std::sin(t)};
            const double w = rng.uniform(0.3, 2.0) * (rng.coin() ? 1 : -1);
            const Point cx{p.u - w * std::sin(t), p.v + w * std::cos(t)};
            const Cycle x = circle(cx.u, cx.v, w * w);
            if (!is_s_orthogonal(x, c, params, 1e-7)) ++fails;
        }
        out.push_back(Verdict::of("s-ghost-euclid-tangent-oracle", static_cast<double>(fails), 0.0));
    }
    {
        double worst = 0.0;
        for (long i = 0; i < n_main; ++i) {
            const Sigma sg = random_sigma(rng);
            const FsccParams params(random_sigma(rng), rng.coin() ? 1.0 : -1.0);
            const Cycle c = random_cycle(rng, true, true);
            const Cycle gh = s_ghost(c, sg, params);
            const Point gc = centre(gh, Sigma(heaviside(sg)));
            const Point f = focus(c, params);
            worst = std::max({worst, std::abs(gc.u - f.u), std::abs(gc.v - f.v)});
            std::array<double, 2> roots{};
            const int cnt = real_roots(c, roots);
            for (int j = 0; j < cnt; ++j)
                worst = std::max(worst, std::abs(incidence(normalize(gh), {roots[j], 0.0}, sg)) /
                                            (1.0 + roots[j] * roots[j]));
        }
        out.push_back(Verdict::of("s-ghost-centre-is-focus", worst, 1e-9));
    }
    {
        const FsccParams params(kElliptic, 1.0);
        const Cycle axis_centred = circle(0.7, 0.0, 2.0);
        const Cycle gh = s_ghost(axis_centred, kElliptic, params);
        const Cycle gn = normalize(gh), rn = normalize(Cycle::real_line());
        const double worst = std::max({std::abs(gn.k - rn.k), std::abs(gn.l - rn.l),
                                       std::abs(gn.n - rn.n), std::abs(gn.m - rn.m)});
        out.push_back(Verdict::of("s-ghost-of-axis-cycle-is-real-line", worst, 1e-12));
    }
    return out;
}

// ---------------------------------------------------------------------------
// metric
// ---------------------------------------------------------------------------

namespace {

bool admissible_conformal(const GroupElement& g, const Point& y, const Point& d, Sigma sg,
                          bool focal) {
    const HyperNumber den{g.c * y.u + g.d, g.c * y.v, sg};
    if (std::abs(den.modulus_sq()) < 0.5) return false;
    HyperNumber w;
    try {
        w = moebius(g, {y.u, y.v, sg});
    } catch (const Error&) {
        return false;
    }
    if (w.size_sq() > 9.0) return false;
    const auto qform = [&](double du, double dv) { return du * du - sg.real() * dv * dv; };
    if (std::abs(qform(d.u, d.v)) < 0.3) return false;
    const double eps = 1e-4;
    HyperNumber w2;
    try {
        w2 = moebius(g, {y.u + eps * d.u, y.v + eps * d.v, sg});
    } catch (const Error&) {
        return false;
    }
    const Point push{(w2.re - w.re) / eps, (w2.im - w.im) / eps};
    const double pl = std::hypot(push.u, push.v);
    if (pl < 0.05 || pl > 50.0) return false;
    if (std::abs(qform(push.u / pl, push.v / pl)) < 0.15) return false;
    if (focal && (std::abs(d.v) < 0.25 || std::abs(push.v / pl) < 0.15)) return false;
    if (focal && (std::abs(y.v) < 0.4 || std::abs(w.im) < 0.4)) return false;
    return true;
}

}  // namespace

std::vector<Verdict> suite_metric(const Options& opts) {
    std::vector<Verdict> out;
    Rng rng(opts.seed + 4);

    {
        long violations = 0;
        for (long i = 0; i < 300; ++i) {
            const Point p = random_point(rng), q = random_point(rng);
            if (std::abs(q.v - p.v) < 1e-6) continue;
            const double de = distance_sq(p, q, kElliptic), dp = distance_sq(p, q, kParabolic),
                         dh = distance_sq(p, q, kHyperbolic);
            if (!(dh <= dp && dp <= de)) ++violations;
        }
        out.push_back(Verdict::of("eph-distance-ordering", static_cast<double>(violations), 0.0));
    }
    {
        double worst = 0.0;
        const long n = count_of(opts, 100);
        for (int si : {-1, 1}) {
            const Sigma sg(si);
            long done = 0;
            while (done < n) {
                const Point p = random_point(rng), q = random_point(rng);
                const double d2 = distance_sq(p, q, sg);
                if (std::hypot(q.u - p.u, q.v - p.v) < 0.3 || std::abs(d2) < 0.05) continue;
                const double x = extremal_distance_sq(p, q, sg, FsccParams(sg, 1.0));
                worst = std::max(worst, std::abs(x - d2) / (1.0 + std::abs(d2)));
                ++done;
            }
        }
        // parabolic: pairs symmetric about the real axis (see decisions ledger)
        for (long i = 0; i < n / 2; ++i) {
            const double u1 = rng.uniform(-2, 2), u2 = rng.uniform(-2, 2), v = rng.uniform(0.3, 2);
            if (std::abs(u2 - u1) < 0.3) continue;
            const Point p{u1, v}, q{u2, -v};
            const double d2 = distance_sq(p, q, kParabolic);
            const double x = extremal_distance_sq(p, q, kParabolic, FsccParams(kParabolic, 1.0));
            worst = std::max(worst, std::abs(x - d2) / (1.0 + std::abs(d2)));
        }
        out.push_back(Verdict::of("extremal-distance-matches", worst, tol_of(opts, 1e-6)));
    }
    {
        double worst = 0.0;
        for (long i = 0; i < 200; ++i) {
            const Point a = random_point(rng), b = random_point(rng);
            const double got =
                length(a, b, LengthKind::from_centre(kElliptic), kElliptic, FsccParams(kElliptic, 1.0));
            worst = std::max(worst, std::abs(got - std::hypot(b.u - a.u, b.v - a.v)));
        }
        out.push_back(Verdict::of("length-from-centre-euclidean", worst, 1e-12));
    }
    {
        double worst = 0.0;
        for (const auto kind :
             {LengthKind::distance(), LengthKind::from_centre(kElliptic), LengthKind::from_focus()}) {
            const Point a = random_point(rng);
            worst = std::max(worst, std::abs(length(a, a, kind, kElliptic, FsccParams(kElliptic, 1.0))));
        }
        out.push_back(Verdict::of("length-null-interval", worst, 0.0));
    }
    {
        // focal length is not symmetric
        const FsccParams params(kElliptic, 1.0);
        const Point a{0.2, 0.9}, b{1.4, 0.3};
        const double ab = length(a, b, LengthKind::from_focus(), kElliptic, params);
        const double ba = length(b, a, LengthKind::from_focus(), kElliptic, params);
        out.push_back(Verdict::of("focal-length-asymmetry-witness",
                                  std::abs(ab - ba) > 1e-3 ? 0.0 : 1.0, 0.0));
    }
    {
        long disagree = 0;
        for (long i = 0; i < 200; ++i) {
            const Point a = random_point(rng), b = random_point(rng);
            if (std::hypot(b.u - a.u, b.v - a.v) < 0.3) continue;
            Point d;
            bool want;
            if (i % 2 == 0) {
                d = Point{-(b.v - a.v), b.u - a.u};
                want = true;
            } else {
                d = Point{std::cos(rng.uniform(0, M_PI)), std::sin(rng.uniform(0, M_PI))};
                const double dot = d.u * (b.u - a.u) + d.v * (b.v - a.v);
                if (std::abs(dot) < 1e-3) continue;
                want = false;
            }
            try {
                if (is_perpendicular(a, b, d, LengthKind::from_centre(kElliptic), kElliptic,
                                     FsccParams(kElliptic, 1.0)) != want)
                    ++disagree;
            } catch (const NonSmoothError&) {
                ++disagree;
            }
        }
        out.push_back(Verdict::of("perpendicular-classical", static_cast<double>(disagree), 0.0));
    }
    {
        const Point a{0.1, 0.2}, b{1.3, 0.9};
        const Point d{b.u - a.u, b.v - a.v};
        bool perp = true;
        try {
            perp = is_perpendicular(a, b, d, LengthKind::distance(), kElliptic,
                                    FsccParams(kElliptic, 1.0));
        } catch (const NonSmoothError&) {
            perp = true;
        }
        out.push_back(Verdict::of("parallel-not-perpendicular", perp ? 1.0 : 0.0, 0.0));
    }
    {
        // focal perpendicularity vs s-orthogonality (see decisions ledger):
        // the s-orthogonal directions at B of the focal cycle are exactly the
        // routes through the focus A.
        long disagree = 0;
        for (long i = 0; i < 150; ++i) {
            const Sigma sb = rng.coin() ? kElliptic : kHyperbolic;
            const FsccParams params(sb, 1.0);
            const Point a = random_point(rng), b = random_point(rng);
            if (std::hypot(b.u - a.u, b.v - a.v) < 0.4 || std::abs(a.v + b.v) < 0.2) continue;
            Cycle cb;
            try {
                cb = length_cycle(a, b, LengthKind::from_focus(), kElliptic, params);
            } catch (const NoSuchCycleError&) {
                continue;
            }
            if (std::abs(cb.n) < 0.05) continue;
            Point d;
            bool want;
            const double ru = b.u - a.u, rv = b.v - a.v;
            if (i % 2 == 0) {
                d = Point{ru, rv};
                want = true;
            } else {
                d = Point{std::cos(rng.uniform(0, M_PI)), std::sin(rng.uniform(0, M_PI))};
                if (std::abs(d.u * rv - d.v * ru) < 1e-2) continue;
                want = false;
            }
            const Cycle line = line_through(b, d);
            const double s0 = std::abs(s_orthogonality_value(line, cb, params));
            if (s0 > 1e-12 && s0 < 1e-6) continue;
            if (is_s_orthogonal(line, cb, params) != want) ++disagree;
        }
        out.push_back(
            Verdict::of("focal-route-s-orthogonality", static_cast<double>(disagree), 0.0));
    }
    {
        // at the focal foot on a line the length is extremal, off the foot it
        // is not; the route to the foot spans an s-orthogonal line
        long fails = 0, done = 0;
        while (done < 25) {
            const FsccParams params(kElliptic, 1.0);
            const Point a = random_point(rng);
            const Point base = random_point(rng);
            const double th = rng.uniform(0, M_PI);
            const Point dir{std::cos(th), std::sin(th)};
            if (std::abs(dir.v) < 0.2) continue;
            if (std::abs(a.v) < 0.3 || std::abs(base.v) < 0.3) continue;
            const auto at = [&](double t) { return Point{base.u + t * dir.u, base.v + t * dir.v}; };
            const auto f = [&](double t) {
                return std::abs(length(a, at(t), LengthKind::from_focus(), kElliptic, params));
            };
            // coarse scan + golden refinement for the foot
            double best_t = 0, best_v = 1e300;
            for (int j = 0; j <= 200; ++j) {
                const double t = -2.0 + 4.0 * j / 200.0;
                try {
                    const double v = f(t);
                    if (v < best_v) {
                        best_v = v;
                        best_t = t;
                    }
                } catch (const Error&) {
                }
            }
            if (best_v > 1e200 || std::abs(best_t) > 1.9) continue;
            double lo = best_t - 0.02, hi = best_t + 0.02;
            for (int it = 0; it < 200; ++it) {
                const double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
                try {
                    if (f(m1) < f(m2))
                        hi = m2;
                    else
                        lo = m1;
                } catch (const Error&) {
                    break;
                }
            }
            const double foot_t = 0.5 * (lo + hi);
            const Point foot = at(foot_t);
            ++done;
            try {
                if (!is_perpendicular(a, foot, dir, LengthKind::from_focus(), kElliptic, params,
                                      1e-4))
                    ++fails;
                const Point off = at(foot_t + 0.5);
                if (is_perpendicular(a, off, dir, LengthKind::from_focus(), kElliptic, params, 1e-4))
                    ++fails;
                const Cycle cb = length_cycle(a, foot, LengthKind::from_focus(), kElliptic, params);
                const Cycle route = line_through(a, {foot.u - a.u, foot.v - a.v});
                if (!is_s_orthogonal(route, cb, params, 1e-5)) ++fails;
            } catch (const Error&) {
                // branch-crossing kink at the foot: skip, do not count
            }
        }
        out.push_back(Verdict::of("focal-foot-extremal", static_cast<double>(fails), 0.0));
    }
    {
        double worst = 0.0;
        for (double alpha : {0.7, 1.3}) {
            const double got = conformal_ratio(GroupElement::dilation(alpha), {0.4, 0.9}, {1.0, 0.4},
                                               0.02, LengthKind::distance(), kElliptic,
                                               FsccParams(kElliptic, 1.0));
            worst = std::max(worst, std::abs(got - alpha * alpha));
        }
        out.push_back(Verdict::of("conformal-dilation-limit", worst, 1e-10));
    }
    {
        const long n = count_of(opts, 50);
        double worst = 0.0;
        long done = 0, guard = 0;
        while (done < n && guard < 100000) {
            ++guard;
            const Sigma sg = random_sigma(rng);
            const int kindcase = rng.pick(3);
            if (kindcase == 1 && sg.parabolic()) continue;
            const LengthKind kind = kindcase == 0   ? LengthKind::distance()
                                    : kindcase == 1 ? LengthKind::from_centre(sg)
                                                    : LengthKind::from_focus();
            const FsccParams params(sg, 1.0);
            const GroupElement g = random_group_element(rng);
            Point y = random_point(rng);
            if (std::abs(y.v) < 0.4) y.v = y.v < 0 ? y.v - 0.4 : y.v + 0.4;
            const double t1 = rng.uniform(0, M_PI), t2 = rng.uniform(0, M_PI);
            const Point d1{std::cos(t1), std::sin(t1)}, d2{std::cos(t2), std::sin(t2)};
            if (!admissible_conformal(g, y, d1, sg, kindcase == 2) ||
                !admissible_conformal(g, y, d2, sg, kindcase == 2))
                continue;
            try {
                const double e1 = conformal_ratio(g, y, d1, 0.02, kind, sg, params);
                const double e2 = conformal_ratio(g, y, d2, 0.02, kind, sg, params);
                worst = std::max(worst, std::abs(e1 - e2) / (1e-9 + std::abs(e1)));
                ++done;
            } catch (const Error&) {
            }
        }
        out.push_back(Verdict::of("conformal-direction-independence", worst, tol_of(opts, 1e-4)));
    }
    return out;
}

// ---------------------------------------------------------------------------
// spectrum
// ---------------------------------------------------------------------------

std::vector<Verdict> suite_spectrum(const Options& opts) {
    std::vector<Verdict> out;
    Rng rng(opts.seed + 5);
    const long n_triples = count_of(opts, 200);

    {
        double worst_act = 0.0, worst_coc = 0.0;
        for (long i = 0; i < n_triples; ++i) {
            const int n = 2 + rng.pick(5);
            const CMatrix a = random_contraction(rng, n, rng.uniform(0.2, 0.7));
            const SuElement g1 = random_su(rng), g2 = random_su(rng);
            try {
                const CMatrix lhs = matrix_moebius(g2, matrix_moebius(g1, a));
                const CMatrix rhs = matrix_moebius(g1 * g2, a);
                worst_act = std::max(worst_act, (lhs - rhs).norm() / (1.0 + rhs.norm()));
                const CMatrix c_lhs = resolvent(g1, a) * resolvent(g2, matrix_moebius(g1, a));
                const CMatrix c_rhs = resolvent(g1 * g2, a);
                worst_coc = std::max(worst_coc, (c_lhs - c_rhs).norm() / (1.0 + c_rhs.norm()));
            } catch (const Error&) {
            }
        }
        out.push_back(Verdict::of("algebra-action-law", worst_act, tol_of(opts, 1e-9)));
        out.push_back(Verdict::of("resolvent-cocycle", worst_coc, tol_of(opts, 1e-9)));
    }
    {
        double worst = 0.0;
        for (long i = 0; i < 50; ++i) {
            const SuElement g = random_su(rng);
            const Complex z(rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5));
            CMatrix a(1, 1);
            a(0, 0) = z;
            const Complex got = matrix_moebius(g, a)(0, 0);
            const Complex want = (std::conj(g.alpha) * z - std::conj(g.beta)) /
                                 (g.alpha - g.beta * z);
            worst = std::max(worst, std::abs(got - want));
            // a = 0
            const CMatrix z3 = CMatrix::Zero(3, 3);
            const CMatrix m0 = matrix_moebius(g, z3);
            worst = std::max(worst, (m0 + (std::conj(g.beta) / g.alpha) * CMatrix::Identity(3, 3))
                                        .norm());
            // diagonal resolvent
            CMatrix d = CMatrix::Zero(3, 3);
            for (int j = 0; j < 3; ++j)
                d(j, j) = Complex(rng.uniform(-0.4, 0.4), rng.uniform(-0.4, 0.4));
            const CMatrix r = resolvent(g, d);
            for (int j = 0; j < 3; ++j)
                worst = std::max(worst, std::abs(r(j, j) - 1.0 / (g.alpha - g.beta * d(j, j))));
        }
        out.push_back(Verdict::of("algebra-action-anchors", worst, 1e-10));
    }
    {
        const CMatrix a = example_jet_matrix();
        const auto spec = jet_spectrum(a, 1e-7);
        JetSpectrum want;
        want.points = {{kEx1, 3}, {kEx2, 4}, {kEx3, 1}, {kEx4, 2}};
        double worst = 0.0;
        const bool ok = multiset_equal(spec, want, 1e-8, &worst);
        out.push_back(Verdict::of("jet-spectrum-block-example", ok ? worst : 1.0, 1e-8));

        CMatrix d = CMatrix::Zero(4, 4);
        d(0, 0) = kEx1, d(1, 1) = kEx2, d(2, 2) = kEx3, d(3, 3) = kEx4;
        const auto dspec = jet_spectrum(d, 1e-7);
        bool all_one = dspec.points.size() == 4;
        for (const auto& p : dspec.points) all_one = all_one && p.order == 1;
        out.push_back(Verdict::of("jet-spectrum-diagonal-distinct", all_one ? 0.0 : 1.0, 0.0));

        const auto zspec = jet_spectrum(CMatrix::Zero(5, 5), 1e-7);
        bool zok = zspec.points.size() == 5;
        for (const auto& p : zspec.points) zok = zok && p.order == 1 && std::abs(p.lambda) < 1e-14;
        out.push_back(Verdict::of("jet-spectrum-zero-matrix", zok ? 0.0 : 1.0, 0.0));
    }
    {
        // fixed mapping example: zero orders (1,3,2,1) at the four eigenvalues
        const CMatrix a = example_jet_matrix();
        const HoloMap phi = HoloMap::with_zero_orders({kEx2, kEx3}, {3, 2}, Complex(0.35, 0.1));
        double worst = 0.0;
        bool ok = zero_order(phi, kEx1) == 1 && zero_order(phi, kEx2) == 3 &&
                  zero_order(phi, kEx3) == 2 && zero_order(phi, kEx4) == 1;
        const auto mapped = spectral_map(jet_spectrum(a, 1e-7), phi);
        // the clamp must fire exactly at the third point (k=1 < deg=2)
        int clamp_count = 0;
        for (const auto& p : mapped.points) clamp_count += p.clamped ? 1 : 0;
        ok = ok && clamp_count == 1;
        const auto full = jet_spectrum(apply_poly(phi, a), 1e-6);
        // per-eigenvalue minimal order of the image must match the mapped orders
        const std::vector<std::pair<Complex, int>> source = {
            {kEx1, 3}, {kEx2, 4}, {kEx3, 1}, {kEx4, 2}};
        const std::vector<int> degs = {1, 3, 2, 1};
        for (std::size_t i = 0; i < source.size(); ++i) {
            const Complex img = phi.eval(source[i].first);
            int min_order = 1 << 20;
            for (const auto& p : full.points)
                if (std::abs(p.lambda - img) < 1e-6) min_order = std::min(min_order, p.order);
            const int eq30 = std::max(source[i].second / degs[i], 1);
            if (min_order != eq30) ok = false;
            // and the mapped spectrum carries the same eigenvalue
            bool found = false;
            for (const auto& p : mapped.points)
                if (std::abs(p.lambda - img) < 1e-9 && p.order == eq30) found = true;
            if (!found) ok = false;
        }
        // full fine structure: the image splits into ceil/floor blocks per source block
        JetSpectrum expect;
        for (std::size_t i = 0; i < source.size(); ++i)
            for (int len : image_block_lengths(source[i].second, degs[i]))
                expect.points.push_back({phi.eval(source[i].first), len});
        ok = ok && multiset_equal(full, expect, 1e-6, &worst);
        out.push_back(Verdict::of("spectral-map-block-example", ok ? worst : 1.0, 1e-6));
    }
    {
        // random pairs with simple zeros at the spectrum: image multiset equality
        const long n = count_of(opts, 50);
        double worst = 0.0;
        long done = 0, fails = 0, guard = 0;
        while (done < n && guard < 10000) {
            ++guard;
            std::vector<CMatrix> blocks;
            std::vector<Complex> lams;
            std::vector<int> sizes;
            int total = 0;
            const int target = 4 + rng.pick(7);  // order 4..10
            bool bad = false;
            while (total < target) {
                const int k = 1 + rng.pick(3);
                const Complex lam = std::polar(rng.uniform(0.1, 0.85), rng.uniform(-M_PI, M_PI));
                bool clash = false;
                for (const auto& l : lams)
                    if (std::abs(l - lam) < 0.12) clash = true;
                if (clash) continue;
                lams.push_back(lam);
                sizes.push_back(std::min(k, target - total));
                blocks.push_back(jordan_block(sizes.back(), lam));
                total += sizes.back();
            }
            // random polynomial of degree <= 5, kept small on the disk
            std::vector<Complex> coeffs(1 + 1 + rng.pick(5));
            for (auto& c : coeffs) c = Complex(rng.uniform(-0.3, 0.3), rng.uniform(-0.3, 0.3));
            coeffs.back() += Complex(0.15, 0.0);
            const HoloMap phi{coeffs};
            if (phi.degree() < 1) continue;
            for (const auto& l : lams)
                if (zero_order(phi, l) != 1 || std::abs(phi.eval(l)) > 0.98) bad = true;
            for (std::size_t i = 0; i < lams.size() && !bad; ++i)
                for (std::size_t j = i + 1; j < lams.size(); ++j)
                    if (std::abs(phi.eval(lams[i]) - phi.eval(lams[j])) < 5e-3) bad = true;
            if (bad) continue;

            const CMatrix a = direct_sum(blocks);
            try {
                const auto img = jet_spectrum(apply_poly(phi, a), 1e-6);
                const auto mapped = spectral_map(jet_spectrum(a, 1e-7), phi).spectrum();
                if (!multiset_equal(img, mapped, 1e-6, &worst)) ++fails;
                ++done;
            } catch (const IllConditionedError&) {
            }
        }
        out.push_back(Verdict::of("spectral-map-random", fails + (done < n ? 1.0 : 0.0), 0.0));
        out.push_back(Verdict::of("spectral-map-random-eigtol", worst, 1e-6));
    }
    {
        const long n = count_of(opts, 30);
        long fails = 0, done = 0, guard = 0;
        double worst = 0.0;
        while (done < n && guard < 4000) {
            ++guard;
            std::vector<CMatrix> blocks;
            std::vector<Complex> lams;
            int total = 0;
            const int target = 5 + rng.pick(4);
            while (total < target) {
                const int k = 1 + rng.pick(3);
                const Complex lam = std::polar(rng.uniform(0.1, 0.85), rng.uniform(-M_PI, M_PI));
                bool clash = false;
                for (const auto& l : lams)
                    if (std::abs(l - lam) < 0.15) clash = true;
                if (clash) continue;
                lams.push_back(lam);
                blocks.push_back(jordan_block(std::min(k, target - total), lam));
                total += blocks.back().rows();
            }
            const CMatrix b = direct_sum(blocks);
            const int dim = static_cast<int>(b.rows());
            CMatrix P;
            double cond = 1e9;
            int tries = 0;
            do {
                P = random_contraction(rng, dim, 1.0);
                Eigen::JacobiSVD<CMatrix> svd(P);
                cond = svd.singularValues()(0) / svd.singularValues()(dim - 1);
            } while (cond > 60.0 && ++tries < 50);
            if (cond > 60.0) continue;
            const CMatrix m = P * b * P.inverse();
            try {
                const auto s1 = jet_spectrum(b, 1e-7);
                const auto s2 = jet_spectrum(m, 1e-3 / operator_norm(m));
                if (!multiset_equal(s1, s2, 1e-6, &worst)) ++fails;
                ++done;
            } catch (const IllConditionedError&) {
            }
        }
        out.push_back(Verdict::of("jet-similarity-invariance", fails + (done < n ? 1.0 : 0.0), 0.0));
        out.push_back(Verdict::of("jet-similarity-eigtol", worst, 1e-6));
    }
    {
        long fails = 0;
        for (int k : {2, 3, 5}) {
            const CMatrix a = jordan_block(k, Complex(0, 0));
            CVector m = CVector::Zero(k);
            m(k - 1) = Complex(1, 0);
            if (krylov_rank(a, m, k) != k) ++fails;
            CVector power = m;
            for (int j = 0; j < k; ++j) power = a * power;
            if (power.norm() > 1e-14) ++fails;
        }
        out.push_back(Verdict::of("jordan-root-vector-krylov", static_cast<double>(fails), 0.0));
    }
    {
        long fails = 0;
        const HoloMap id{{Complex(0, 0), Complex(1, 0)}};
        if (zero_order(id, Complex(0.3, 0.1)) != 1) ++fails;
        const HoloMap cube = HoloMap::with_zero_orders({Complex(0.2, -0.1)}, {3}, Complex(1, 0));
        if (zero_order(cube, Complex(0.2, -0.1)) != 3) ++fails;
        const HoloMap sq{{Complex(0, 0), Complex(0, 0), Complex(1, 0)}};
        if (zero_order(sq, Complex(0, 0)) != 2 || zero_order(sq, Complex(1, 0)) != 1) ++fails;
        JetSpectrum s;
        s.points = {{Complex(0.5, 0), 3}};
        const auto mapped = spectral_map(s, id);
        if (mapped.points.size() != 1 || mapped.points[0].order != 3 || mapped.points[0].clamped)
            ++fails;
        out.push_back(Verdict::of("zero-order-anchors", static_cast<double>(fails), 0.0));
    }
    return out;
}

// ---------------------------------------------------------------------------
// analytic
// ---------------------------------------------------------------------------

std::vector<Verdict> suite_analytic(const Options& opts) {
    std::vector<Verdict> out;
    Rng rng(opts.seed + 6);
    const int n_grid = 1024;

    {
        double worst = 0.0;
        for (int d = 0; d <= 8; ++d) {
            const auto f = CircleFunction::sample(
                n_grid, [&](Complex z) { return std::pow(z, d); });
            for (double r : {0.2, 0.5, 0.8}) {
                for (int j = 0; j < 8; ++j) {
                    const DiskPoint u(std::polar(r, 2 * M_PI * j / 8 + 0.3));
                    worst = std::max(worst,
                                     std::abs(cauchy_transform(f, u) - std::pow(u.u, d)));
                }
            }
        }
        out.push_back(Verdict::of("monomial-recovery", worst, tol_of(opts, 1e-8)));
    }
    {
        const auto f = CircleFunction::sample(n_grid, [](Complex z) { return std::conj(z); });
        double worst = 0.0;
        for (double r : {0.0, 0.4, 0.8})
            worst = std::max(worst, std::abs(cauchy_transform(f, DiskPoint(Complex(r, 0.05)))));
        out.push_back(Verdict::of("antiholomorphic-vanishes", worst, 1e-10));
    }
    {
        double worst = 0.0;
        const auto f = CircleFunction::sample(
            256, [](Complex z) { return z * z * z - Complex(0.2, 0.4) * z + 1.0; });
        for (int j = 0; j < 6; ++j) {
            const DiskPoint u(std::polar(0.6, 2 * M_PI * j / 6 + 0.1));
            worst = std::max(worst, std::abs(contour_pairing(f, coherent_state(u, 256)) -
                                             cauchy_transform_raw(f, u)));
        }
        out.push_back(Verdict::of("coherent-state-pairing", worst, 1e-13));
    }
    {
        // geometric accuracy of the boundary quadrature
        const auto sample_at = [](int n) {
            return CircleFunction::sample(n, [](Complex z) { return 1.0 / (z - 2.0); });
        };
        const DiskPoint u(Complex(0.55, 0.35));
        const Complex want = 1.0 / (u.u - 2.0);
        const double e16 = std::abs(cauchy_transform(sample_at(16), u) - want);
        const double e32 = std::abs(cauchy_transform(sample_at(32), u) - want);
        const double e64 = std::abs(cauchy_transform(sample_at(64), u) - want);
        const double r1 = e32 / std::max(e16, 1e-18), r2 = e64 / std::max(e32, 1e-18);
        out.push_back(Verdict::of("quadrature-geometric-decay", std::max(r1, r2), 1e-2));
    }
    {
        const auto f = CircleFunction::sample(
            256, [](Complex z) { return z * z + Complex(0, 1) * z - 0.3; });
        const auto g = rho1_apply(SuElement(Complex(1, 0), Complex(0, 0)), f);
        double worst = 0.0;
        for (int j = 0; j < 256; ++j) worst = std::max(worst, std::abs(g.samples[j] - f.samples[j]));
        out.push_back(Verdict::of("weight-action-identity", worst, 1e-12));
    }
    {
        double worst_comp = 0.0, worst_norm = 0.0, worst_intw = 0.0;
        for (int i = 0; i < 20; ++i) {
            const SuElement g1 = random_su(rng, 0.8), g2 = random_su(rng, 0.8);
            const Complex lin(rng.uniform(-1, 1), rng.uniform(-1, 1));
            const auto f = CircleFunction::sample(
                512, [&](Complex z) { return std::pow(z, 3) + lin * z + 0.7; });
            const auto lhs = rho1_apply(g1, rho1_apply(g2, f));
            const auto rhs = rho1_apply(g1 * g2, f);
            for (int j = 0; j < 512; ++j)
                worst_comp = std::max(worst_comp, std::abs(lhs.samples[j] - rhs.samples[j]));
            worst_norm = std::max(worst_norm,
                                  std::abs(rho1_apply(g1, f).norm_sq() - f.norm_sq()));
            const DiskPoint u(std::polar(rng.uniform(0, 0.6), rng.uniform(-M_PI, M_PI)));
            const Complex lhs_c = cauchy_transform_raw(rho1_apply(g1, f), u);
            const Complex rhs_c =
                cauchy_transform_raw(f, disk_moebius(g1, u)) / (g1.alpha - g1.beta * u.u);
            worst_intw = std::max(worst_intw, std::abs(lhs_c - rhs_c));
        }
        out.push_back(Verdict::of("weight-action-composition", worst_comp, 1e-6));
        out.push_back(Verdict::of("weight-action-unitary", worst_norm, 1e-6));
        out.push_back(Verdict::of("weight-action-intertwines-transform", worst_intw, 1e-8));
    }
    {
        double worst = 0.0;
        for (int i = 0; i < 12; ++i) {
            const DiskPoint a(std::polar(rng.uniform(0, 0.9), rng.uniform(-M_PI, M_PI)));
            const auto closed = taylor_coeffs(a, 12);
            const double lead = std::sqrt(1.0 - std::norm(a.u));
            for (int n = 1; n <= 12; ++n) {
                Complex acc(0, 0);
                for (int j = 0; j < n_grid; ++j) {
                    const double phi = CircleFunction::angle(j, n_grid);
                    const Complex fa = lead / (1.0 - std::conj(a.u) * std::polar(1.0, phi));
                    acc += fa * std::polar(1.0, -(n - 1) * phi);
                }
                acc /= static_cast<double>(n_grid);
                worst = std::max(worst, std::abs(acc - closed[n - 1]));
            }
        }
        out.push_back(Verdict::of("taylor-closed-vs-quadrature", worst, tol_of(opts, 1e-10)));
    }
    {
        const auto v = taylor_coeffs(DiskPoint(Complex(0, 0)), 5);
        double worst = std::abs(v[0] - 1.0);
        for (int i = 1; i < 5; ++i) worst = std::max(worst, std::abs(v[i]));
        const auto w = taylor_coeffs(DiskPoint(Complex(0.5, 0)), 5);
        for (int i = 0; i < 5; ++i)
            worst = std::max(worst, std::abs(w[i] - std::sqrt(0.75) * std::pow(0.5, i)));
        out.push_back(Verdict::of("taylor-anchors", worst, 1e-14));
    }
    {
        const HalfPlanePatch patch;
        const auto fz = patch.sample([](Complex) { return Complex(2.5, 0); });
        const auto fzbar = patch.sample([](Complex z) { return std::conj(z); });
        double worst_const = 0.0, worst_zbar = 0.0;
        for (int j = 3; j < patch.nv - 3; j += 11)
            for (int i = 3; i < patch.nu - 3; i += 11) {
                worst_const = std::max(worst_const, std::abs(dirac_residual(patch, fz, i, j)));
                const Complex want = Complex(0, -2) * patch.point(i, j).imag();
                worst_zbar =
                    std::max(worst_zbar, std::abs(dirac_residual(patch, fzbar, i, j) - want));
            }
        out.push_back(Verdict::of("dirac-constant-kernel", worst_const, 1e-13));
        out.push_back(Verdict::of("dirac-antiholomorphic-value", worst_zbar, 1e-10));
    }
    {
        // Residuals compared at the same physical points across three grid
        // refinements; the observed order on analytic data must reach 2.
        const auto order_floor = [](const std::function<Complex(Complex)>& fn,
                                    const HalfPlanePatch& base) {
            HalfPlanePatch coarse = base, mid = base, fine = base;
            coarse.nu = coarse.nv = 33;
            mid.nu = mid.nv = 65;
            fine.nu = fine.nv = 129;
            const auto fc = coarse.sample(fn), fm = mid.sample(fn), ff = fine.sample(fn);
            double r1 = 0.0, r2 = 0.0, r3 = 0.0;
            for (int j = 2; j <= 30; ++j)
                for (int i = 2; i <= 30; ++i) {
                    r1 = std::max(r1, std::abs(dirac_residual(coarse, fc, i, j)));
                    r2 = std::max(r2, std::abs(dirac_residual(mid, fm, 2 * i, 2 * j)));
                    r3 = std::max(r3, std::abs(dirac_residual(fine, ff, 4 * i, 4 * j)));
                }
            return std::min(std::log2(r1 / r2), std::log2(r2 / r3));
        };
        const double o_poly = order_floor(
            [](Complex z) { return std::pow(z, 3) + Complex(0.4, 0.7) * std::pow(z, 4); },
            HalfPlanePatch{});
        out.push_back(Verdict::of("dirac-analytic-order", 1.8 - o_poly, 0.0));

        // boundary integral images pulled to the half-plane lie in the kernel
        const auto f = CircleFunction::sample(
            256, [](Complex z) { return std::pow(z, 3) + z - Complex(0.3, 0.2); });
        HalfPlanePatch narrow;
        narrow.u0 = -1.0;
        narrow.u1 = 1.0;
        narrow.v0 = 0.5;
        narrow.v1 = 2.5;
        const double o_cauchy = order_floor(
            [&](Complex z) {
                return cauchy_transform(f, DiskPoint((z - Complex(0, 1)) / (z + Complex(0, 1))));
            },
            narrow);
        out.push_back(Verdict::of("cauchy-image-in-dirac-kernel", 1.8 - o_cauchy, 0.0));
    }
    return out;
}

std::vector<std::string> suite_names() {
    return {"moebius", "fscc", "orthogonality", "ghosts", "metric", "spectrum", "analytic"};
}

std::vector<Verdict> run_suite(const std::string& name, const Options& opts) {
    if (name == "moebius") return suite_moebius(opts);
    if (name == "fscc") return suite_fscc(opts);
    if (name == "orthogonality") return suite_orthogonality(opts);
    if (name == "ghosts") return suite_ghosts(opts);
    if (name == "metric") return suite_metric(opts);
    if (name == "spectrum") return suite_spectrum(opts);
    if (name == "analytic") return suite_analytic(opts);
    throw UnknownSuiteError("unknown suite: " + name);
}

}  // namespace cyclekit::verify
