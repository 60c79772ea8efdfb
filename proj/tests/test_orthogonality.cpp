#include <doctest.h>

#include "cyclekit/orthogonality.hpp"
#include "cyclekit/sampling.hpp"

using namespace cyclekit;

namespace {
Cycle circle_at(double cu, double cv, double r_sq) {
    return Cycle{1, cu, cv, cu * cu + cv * cv - r_sq};
}
}  // namespace

TEST_CASE("pairing anchors") {
    const FsccParams el(kElliptic, 1.0);
    // a diameter line is orthogonal to the circle it crosses
    CHECK(pairing(Cycle::unit_circle(), Cycle::real_line(), el) == doctest::Approx(0.0));
    CHECK(is_orthogonal(Cycle::unit_circle(), Cycle::real_line(), el));
    // concentric distinct circles are not orthogonal
    CHECK(std::abs(pairing(circle_at(0, 0, 1), circle_at(0, 0, 4), el)) > 0.1);
    // zero-radius cycles are isotropic
    const Cycle z = zero_radius_at({0.3, -1.2}, el);
    CHECK(is_orthogonal(z, z, el));
    CHECK(pairing(z, z, el) == doctest::Approx(-2.0 * determinant(normalize(z), el)).epsilon(1e-12));
}

TEST_CASE("euclidean calibration") {
    // |c1 - c2|^2 = r1^2 + r2^2 pairs are orthogonal, others are not
    const FsccParams el(kElliptic, 1.0);
    const Cycle c1 = circle_at(0, 0, 1);
    const Cycle c2 = circle_at(2, 0, 3);  // 4 = 1 + 3
    CHECK(is_orthogonal(c1, c2, el));
    const Cycle c3 = circle_at(2, 0, 2.9);
    CHECK(!is_orthogonal(c1, c3, el));

    Rng rng(8);
    for (int i = 0; i < 200; ++i) {
        const Point a = random_point(rng), b = random_point(rng);
        const double d2 = (b.u - a.u) * (b.u - a.u) + (b.v - a.v) * (b.v - a.v);
        if (d2 < 0.2) continue;
        const double r1 = rng.uniform(0.04, d2 - 0.04);
        CHECK(is_orthogonal(circle_at(a.u, a.v, r1), circle_at(b.u, b.v, d2 - r1), el));
    }
}

TEST_CASE("reflections") {
    const FsccParams el(kElliptic, 1.0);
    // reflection in the real line is the mirror image across it
    const Cycle mirrored = reflect(Cycle::real_line(), circle_at(0.7, 1.1, 2.0), el);
    CHECK(projectively_equal(mirrored, circle_at(0.7, -1.1, 2.0), 1e-12));

    Rng rng(9);
    for (int i = 0; i < 100; ++i) {
        const FsccParams params(random_sigma(rng), rng.coin() ? 1.0 : -1.0);
        const Cycle mirror = random_cycle(rng, rng.coin());
        if (std::abs(determinant(normalize(mirror), params)) < 1e-3) continue;
        const Cycle c = random_cycle(rng, false);
        CHECK(projectively_equal(reflect(mirror, reflect(mirror, c, params), params), c, 1e-8));
        CHECK(projectively_equal(reflect(mirror, mirror, params), mirror, 1e-9));
    }
}

TEST_CASE("s-orthogonality") {
    // vertical line through the focus is s-orthogonal to the cycle
    for (int sb : {-1, 1}) {
        const FsccParams params(Sigma(sb), 1.0);
        const Cycle c{1, 0.4, 0.7, -0.3};
        const Cycle focal_line{0, 1, 0, 2 * 0.4};
        const Cycle off_line{0, 1, 0, 2 * 0.9};
        CHECK(is_s_orthogonal(focal_line, c, params));
        CHECK(!is_s_orthogonal(off_line, c, params));
        // asymmetry
        CHECK(!is_s_orthogonal(c, focal_line, params));
    }
    // real line against itself: isotropic in the parabolic cycle space only
    CHECK(s_orthogonality_value(Cycle::real_line(), Cycle::real_line(),
                                FsccParams(kParabolic, 1.0)) == doctest::Approx(0.0));
    CHECK(s_orthogonality_value(Cycle::real_line(), Cycle::real_line(),
                                FsccParams(kElliptic, 1.0)) == doctest::Approx(2.0));
}

TEST_CASE("ghost cycles") {
    Rng rng(10);
    for (int i = 0; i < 100; ++i) {
        const Sigma sg = rng.coin() ? kElliptic : kHyperbolic;
        const FsccParams params(random_sigma(rng), 1.0);
        const Cycle c = random_cycle(rng, true);
        const Cycle gh = ghost(c, sg, params);
        // reduction: the two pairings agree identically
        const Cycle x = random_cycle(rng, false);
        CHECK(pairing(x, c, params) ==
              doctest::Approx(drawing_pairing(x, gh, sg)).epsilon(1e-12));
        // roots shared
        std::array<double, 2> roots{};
        const int cnt = real_roots(c, roots);
        for (int j = 0; j < cnt; ++j)
            CHECK(std::abs(incidence(gh, {roots[j], 0}, sg)) / (1 + roots[j] * roots[j]) < 1e-10);
    }
    // matched units: the ghost is the cycle itself
    const Cycle c{1, 0.3, -0.8, -0.5};
    CHECK(projectively_equal(ghost(c, kElliptic, FsccParams(kElliptic, 1.0)), c, 1e-14));
    // parabolic cycle space: the ghost drops the n component
    const Cycle gp = ghost(c, kElliptic, FsccParams(kParabolic, 1.0));
    CHECK(gp.n == doctest::Approx(0.0));
    CHECK_THROWS_AS(ghost(Cycle::real_line(), kElliptic, FsccParams(kElliptic, 1.0)),
                    DegenerateCycleError);
}

TEST_CASE("s-ghost cycles") {
    Rng rng(11);
    for (int i = 0; i < 100; ++i) {
        const Sigma sg = random_sigma(rng);
        const FsccParams params(random_sigma(rng), rng.coin() ? 1.0 : -1.0);
        const Cycle c = random_cycle(rng, true, true);
        const Cycle gh = s_ghost(c, sg, params);
        const Point gc = centre(gh, Sigma(heaviside(sg)));
        const Point f = focus(c, params);
        CHECK(gc.u == doctest::Approx(f.u).epsilon(1e-12));
        CHECK(gc.v == doctest::Approx(f.v).epsilon(1e-12));
    }
    // a cycle centred on the axis reflects the real line onto itself
    CHECK(projectively_equal(
        s_ghost(circle_at(0.7, 0.0, 2.0), kElliptic, FsccParams(kElliptic, 1.0)),
        Cycle::real_line(), 1e-12));
}
