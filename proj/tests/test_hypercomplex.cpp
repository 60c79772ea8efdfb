#include <doctest.h>

#include "cyclekit/hypercomplex.hpp"
#include "cyclekit/sampling.hpp"

using namespace cyclekit;

TEST_CASE("imaginary unit squares to sigma") {
    for (int si : {-1, 0, 1}) {
        const HyperNumber unit{0, 1, Sigma(si)};
        const HyperNumber sq = unit * unit;
        CHECK(sq.re == doctest::Approx(si).epsilon(1e-15));
        CHECK(sq.im == doctest::Approx(0.0));
    }
}

TEST_CASE("multiplication") {
    const HyperNumber a{1, 2, kHyperbolic}, b{3, 1, kHyperbolic};
    const HyperNumber p = a * b;
    CHECK(p.re == doctest::Approx(5.0));  // 1*3 + 1*2*1
    CHECK(p.im == doctest::Approx(7.0));
    CHECK_THROWS_AS(mul({1, 0, kElliptic}, {1, 0, kParabolic}), SigmaMismatchError);
}

TEST_CASE("inverse") {
    for (int si : {-1, 0, 1}) {
        const HyperNumber half = inv(HyperNumber{2, 0, Sigma(si)});
        CHECK(half.re == doctest::Approx(0.5));
        CHECK(half.im == doctest::Approx(0.0));
    }
    const HyperNumber dual_inv = inv(HyperNumber{1, 1, kParabolic});
    CHECK(dual_inv.re == doctest::Approx(1.0));
    CHECK(dual_inv.im == doctest::Approx(-1.0));
    CHECK_THROWS_AS(inv(HyperNumber{1, 1, kHyperbolic}), ZeroDivisorError);

    Rng rng(1);
    for (int i = 0; i < 200; ++i) {
        const Sigma sg = random_sigma(rng);
        const HyperNumber z{rng.uniform(-2, 2), rng.uniform(-2, 2), sg};
        if (std::abs(z.modulus_sq()) < 1e-3) continue;
        const HyperNumber prod = z * inv(z);
        CHECK(prod.re == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(prod.im == doctest::Approx(0.0).epsilon(1e-12));
    }
}

TEST_CASE("moebius anchors") {
    Rng rng(2);
    for (int si : {-1, 0, 1}) {
        const Sigma sg(si);
        const HyperNumber z{rng.uniform(-2, 2), rng.uniform(-2, 2), sg};
        const HyperNumber fixed = moebius(GroupElement::identity(), z);
        CHECK(fixed.re == doctest::Approx(z.re));
        CHECK(fixed.im == doctest::Approx(z.im));

        const HyperNumber shifted = moebius(GroupElement::shift(1.7), z);
        CHECK(shifted.re == doctest::Approx(z.re + 1.7));
        CHECK(shifted.im == doctest::Approx(z.im));

        const HyperNumber dilated = moebius(GroupElement::dilation(1.3), z);
        CHECK(dilated.re == doctest::Approx(1.69 * z.re));
        CHECK(dilated.im == doctest::Approx(1.69 * z.im));
    }
}

TEST_CASE("moebius zero divisor is typed, not NaN") {
    // sigma = +1, z on the light cone of the denominator
    const GroupElement g{1, 0, 1, 1};  // cz + d = z + 1
    const HyperNumber z{-1 + 0.5, 0.5, kHyperbolic};
    CHECK_THROWS_AS(moebius(g, z), ZeroDivisorError);
}

TEST_CASE("iwasawa factors") {
    const IwasawaFactors id = iwasawa(GroupElement::identity());
    CHECK(id.alpha == doctest::Approx(1.0));
    CHECK(id.nu == doctest::Approx(0.0));
    CHECK(id.phi == doctest::Approx(0.0));

    const IwasawaFactors rot = iwasawa(GroupElement::rotation(0.77));
    CHECK(rot.alpha == doctest::Approx(1.0));
    CHECK(rot.nu == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(rot.phi == doctest::Approx(0.77));

    Rng rng(3);
    for (int i = 0; i < 500; ++i) {
        const GroupElement g = random_group_element(rng);
        const IwasawaFactors f = iwasawa(g);
        CHECK(f.alpha > 0.0);
        CHECK(f.phi > -M_PI);
        CHECK(f.phi <= M_PI);
        const GroupElement r = f.recompose();
        CHECK(std::abs(r.a - g.a) < 1e-12);
        CHECK(std::abs(r.b - g.b) < 1e-12);
        CHECK(std::abs(r.c - g.c) < 1e-12);
        CHECK(std::abs(r.d - g.d) < 1e-12);
    }
}

TEST_CASE("rotation orbit") {
    // the elliptic unit point is fixed by the whole rotation subgroup
    const auto orbit = k_orbit({0, 1, kElliptic}, {-1.2, -0.3, 0.0, 0.4, 1.5});
    for (const auto& w : orbit) {
        REQUIRE(w.has_value());
        CHECK(w->re == doctest::Approx(0.0).epsilon(1e-13));
        CHECK(w->im == doctest::Approx(1.0).epsilon(1e-13));
    }
    // phi = 0 returns the base point
    const auto base = k_orbit({0.7, -0.4, kHyperbolic}, {0.0});
    REQUIRE(base[0].has_value());
    CHECK(base[0]->re == doctest::Approx(0.7));
    CHECK(base[0]->im == doctest::Approx(-0.4));
    // parabolic orbit of (0, t) lies on v = t(1 + u^2)
    const auto par = k_orbit({0, 0.8, kParabolic}, {-0.9, -0.4, 0.2, 0.7, 1.1});
    for (const auto& w : par) {
        REQUIRE(w.has_value());
        CHECK(w->im == doctest::Approx(0.8 * (1 + w->re * w->re)).epsilon(1e-12));
    }
}

TEST_CASE("group element normalization") {
    const GroupElement g = GroupElement::normalized(2, 1, 1, 1);
    CHECK(g.det() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS(GroupElement::normalized(1, 2, 1, 1), Error);  // det < 0
}
