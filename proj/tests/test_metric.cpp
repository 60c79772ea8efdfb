#include <doctest.h>

#include "cyclekit/metric.hpp"
#include "cyclekit/sampling.hpp"

using namespace cyclekit;

TEST_CASE("plane distances") {
    CHECK(distance_sq({1, 1}, {1, 1}, kElliptic) == doctest::Approx(0.0));
    CHECK(distance_sq({0, 0}, {3, 4}, kElliptic) == doctest::Approx(25.0));
    CHECK(distance_sq({0, 0}, {3, 4}, kParabolic) == doctest::Approx(9.0));
    CHECK(distance_sq({0, 0}, {3, 4}, kHyperbolic) == doctest::Approx(-7.0));  // signed
}

TEST_CASE("extremal distance") {
    const FsccParams el(kElliptic, 1.0);
    CHECK(extremal_distance_sq({0.4, 0.2}, {0.4, 0.2}, kElliptic, el) == doctest::Approx(0.0));

    // points symmetric about the v-axis: the minimizing circle has the pair
    // as a diameter
    const Point p{-1.2, 0.8}, q{1.2, 0.8};
    CHECK(extremal_distance_sq(p, q, kElliptic, el) ==
          doctest::Approx(distance_sq(p, q, kElliptic)).epsilon(1e-9));

    // doubly parabolic pair at equal nonzero heights: the diameter is an
    // unbounded monotone function of the pencil parameter
    CHECK_THROWS_AS(
        extremal_distance_sq({0, 0.5}, {1.3, 0.5}, kParabolic, FsccParams(kParabolic, 1.0)),
        NoExtremumError);
    // symmetric about the axis: exact agreement with the plane distance
    CHECK(extremal_distance_sq({-0.4, 0.7}, {1.1, -0.7}, kParabolic, FsccParams(kParabolic, 1.0)) ==
          doctest::Approx(1.5 * 1.5).epsilon(1e-9));

    Rng rng(12);
    for (int i = 0; i < 40; ++i) {
        for (int si : {-1, 1}) {
            const Sigma sg(si);
            const Point a = random_point(rng), b = random_point(rng);
            const double d2 = distance_sq(a, b, sg);
            if (std::hypot(b.u - a.u, b.v - a.v) < 0.3 || std::abs(d2) < 0.05) continue;
            CHECK(extremal_distance_sq(a, b, sg, FsccParams(sg, 1.0)) ==
                  doctest::Approx(d2).epsilon(1e-7));
        }
    }
}

TEST_CASE("lengths") {
    const FsccParams el(kElliptic, 1.0);
    Rng rng(13);
    for (int i = 0; i < 50; ++i) {
        const Point a = random_point(rng), b = random_point(rng);
        CHECK(length(a, b, LengthKind::from_centre(kElliptic), kElliptic, el) ==
              doctest::Approx(std::hypot(b.u - a.u, b.v - a.v)).epsilon(1e-12));
    }
    const Point a{0.2, 0.9};
    for (const auto& kind :
         {LengthKind::distance(), LengthKind::from_centre(kElliptic), LengthKind::from_focus()})
        CHECK(length(a, a, kind, kElliptic, el) == doctest::Approx(0.0));

    // focal length is directed
    const Point b{1.4, 0.3};
    CHECK(std::abs(length(a, b, LengthKind::from_focus(), kElliptic, el) -
                   length(b, a, LengthKind::from_focus(), kElliptic, el)) > 1e-3);

    // a parabolic centre cannot sit off the axis
    CHECK_THROWS_AS(length({0.3, 0.5}, b, LengthKind::from_centre(kParabolic), kElliptic, el),
                    NoSuchCycleError);
}

TEST_CASE("perpendicularity") {
    const FsccParams el(kElliptic, 1.0);
    const Point a{0.1, 0.2}, b{1.3, 0.9};
    const Point ab{b.u - a.u, b.v - a.v};
    CHECK(is_perpendicular(a, b, {-ab.v, ab.u}, LengthKind::from_centre(kElliptic), kElliptic, el));
    CHECK(!is_perpendicular(a, b, ab, LengthKind::from_centre(kElliptic), kElliptic, el));
    CHECK(!is_perpendicular(a, b, ab, LengthKind::distance(), kElliptic, el));
    CHECK_THROWS_AS(is_perpendicular(a, b, {0, 0}, LengthKind::distance(), kElliptic, el), Error);
}

TEST_CASE("conformal ratio") {
    const FsccParams el(kElliptic, 1.0);
    CHECK(conformal_ratio(GroupElement::identity(), {0.4, 0.9}, {1, 0.4}, 0.05,
                          LengthKind::distance(), kElliptic, el) == doctest::Approx(1.0));
    for (double alpha : {0.8, 1.6})
        CHECK(conformal_ratio(GroupElement::dilation(alpha), {0.4, 0.9}, {0.6, 1.0}, 0.02,
                              LengthKind::distance(), kElliptic, el) ==
              doctest::Approx(alpha * alpha).epsilon(1e-9));
}

TEST_CASE("pencil basis spans incident cycles") {
    Rng rng(14);
    for (int i = 0; i < 50; ++i) {
        const Sigma sg = random_sigma(rng);
        const Point p = random_point(rng), q = random_point(rng);
        if (std::hypot(q.u - p.u, q.v - p.v) < 0.2) continue;
        const auto basis = pencil_through(p, q, sg);
        for (const auto& c : basis) {
            CHECK(std::abs(incidence(c, p, sg)) < 1e-9 * (1 + c.max_abs()));
            CHECK(std::abs(incidence(c, q, sg)) < 1e-9 * (1 + c.max_abs()));
        }
    }
}
