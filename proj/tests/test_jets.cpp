#include <doctest.h>

#include "cyclekit/jets.hpp"

using namespace cyclekit;

TEST_CASE("algebra moebius map") {
    const SuElement id(Complex(1, 0), Complex(0, 0));
    CMatrix a(2, 2);
    a << Complex(0.1, 0.2), Complex(0.0, 0.3), Complex(-0.2, 0.0), Complex(0.25, -0.1);
    CHECK((matrix_moebius(id, a) - a).norm() < 1e-14);

    const SuElement g = SuElement::normalized(Complex(1.2, 0.3), Complex(0.5, -0.4));
    // a = 0 maps to (-conj(beta)/alpha) e
    const CMatrix m0 = matrix_moebius(g, CMatrix::Zero(3, 3));
    const Complex want = -std::conj(g.beta) / g.alpha;
    for (int i = 0; i < 3; ++i) CHECK(std::abs(m0(i, i) - want) < 1e-14);

    // the 1x1 case is the scalar disk map
    CMatrix z(1, 1);
    z(0, 0) = Complex(0.3, -0.2);
    const Complex got = matrix_moebius(g, z)(0, 0);
    const Complex scalar = (std::conj(g.alpha) * z(0, 0) - std::conj(g.beta)) /
                           (g.alpha - g.beta * z(0, 0));
    CHECK(std::abs(got - scalar) < 1e-14);

    CHECK_THROWS_AS(matrix_moebius(g, 2.0 * CMatrix::Identity(2, 2)), Error);  // norm >= 1
}

TEST_CASE("resolvent") {
    const SuElement id(Complex(1, 0), Complex(0, 0));
    CHECK((resolvent(id, CMatrix::Zero(2, 2)) - CMatrix::Identity(2, 2)).norm() < 1e-14);

    const SuElement g = SuElement::normalized(Complex(1.5, -0.2), Complex(0.7, 0.1));
    CMatrix d = CMatrix::Zero(3, 3);
    d(0, 0) = Complex(0.2, 0.1);
    d(1, 1) = Complex(-0.3, 0.2);
    d(2, 2) = Complex(0.0, -0.4);
    const CMatrix r = resolvent(g, d);
    for (int i = 0; i < 3; ++i)
        CHECK(std::abs(r(i, i) - 1.0 / (g.alpha - g.beta * d(i, i))) < 1e-13);

    // singular when alpha/beta is an eigenvalue
    const Complex pole = g.alpha / g.beta;
    CHECK_THROWS_AS(resolvent(g, pole * CMatrix::Identity(2, 2)), SingularResolventError);
}

TEST_CASE("jet spectrum structure") {
    const auto z = jet_spectrum(CMatrix::Zero(4, 4));
    REQUIRE(z.points.size() == 4);
    for (const auto& p : z.points) {
        CHECK(p.order == 1);
        CHECK(std::abs(p.lambda) < 1e-14);
    }

    const Complex l1(0.3, 0.4), l2(-0.5, 0.1);
    const CMatrix a = direct_sum({jordan_block(3, l1), jordan_block(2, l2)});
    const auto spec = jet_spectrum(a);
    REQUIRE(spec.points.size() == 2);
    CHECK(spec.points[0].order + spec.points[1].order == 5);
    CHECK(spec.total_order() == 5);
    for (const auto& p : spec.points) {
        if (std::abs(p.lambda - l1) < 1e-9) CHECK(p.order == 3);
        if (std::abs(p.lambda - l2) < 1e-9) CHECK(p.order == 2);
    }

    // ambiguous clusters are reported, not guessed
    CMatrix near = CMatrix::Zero(2, 2);
    near(0, 0) = Complex(0.5, 0);
    near(1, 1) = Complex(0.5 + 4e-7, 0);
    CHECK_THROWS_AS(jet_spectrum(near, 1e-7), IllConditionedError);

    CHECK_THROWS_AS(jet_spectrum(CMatrix::Zero(65, 65)), Error);  // order bound
}

TEST_CASE("zero orders of polynomial maps") {
    const HoloMap identity{{Complex(0, 0), Complex(1, 0)}};
    CHECK(zero_order(identity, Complex(0.4, 0.1)) == 1);

    const Complex l0(0.2, -0.3);
    const HoloMap cubic = HoloMap::with_zero_orders({l0}, {3}, Complex(1, 0));
    CHECK(zero_order(cubic, l0) == 3);
    CHECK(zero_order(cubic, l0 + Complex(0.3, 0)) == 1);

    const HoloMap square{{Complex(0, 0), Complex(0, 0), Complex(1, 0)}};
    CHECK(zero_order(square, Complex(0, 0)) == 2);
    CHECK(zero_order(square, Complex(1, 0)) == 1);

    CHECK_THROWS_AS(zero_order(HoloMap{{Complex(0.7, 0)}}, Complex(0, 0)), ConstantMapError);
}

TEST_CASE("polynomial evaluation on matrices") {
    const HoloMap identity{{Complex(0, 0), Complex(1, 0)}};
    CMatrix a(2, 2);
    a << Complex(0.2, 0), Complex(0, 0.4), Complex(0.1, 0), Complex(-0.3, 0);
    CHECK((apply_poly(identity, a) - a).norm() < 1e-14);

    const HoloMap square{{Complex(0, 0), Complex(0, 0), Complex(1, 0)}};
    CHECK(apply_poly(square, jordan_block(2, Complex(0, 0))).norm() < 1e-14);

    const HoloMap constant{{Complex(0.3, -0.2)}};
    const CMatrix c = apply_poly(constant, a);
    CHECK(std::abs(c(0, 0) - Complex(0.3, -0.2)) < 1e-14);
    CHECK(std::abs(c(0, 1)) < 1e-14);
}

TEST_CASE("spectral map") {
    JetSpectrum s;
    s.points = {{Complex(0.5, 0), 4}, {Complex(-0.3, 0.1), 1}};

    const HoloMap identity{{Complex(0, 0), Complex(1, 0)}};
    const auto same = spectral_map(s, identity);
    CHECK(same.points[0].order == 4);
    CHECK(same.points[1].order == 1);
    CHECK(!same.any_clamped());

    // deg 3 at the first point: floor(4/3) = 1; the second clamps 0 -> 1
    const HoloMap crush = HoloMap::with_zero_orders({Complex(0.5, 0), Complex(-0.3, 0.1)}, {3, 2},
                                                    Complex(0.2, 0));
    const auto mapped = spectral_map(s, crush);
    CHECK(mapped.points[0].order == 1);
    CHECK(!mapped.points[0].clamped);
    CHECK(mapped.points[1].order == 1);
    CHECK(mapped.points[1].clamped);
}

TEST_CASE("krylov span of a root vector") {
    for (int k : {2, 4}) {
        const CMatrix a = jordan_block(k, Complex(0, 0));
        CVector m = CVector::Zero(k);
        m(k - 1) = Complex(1, 0);
        CHECK(krylov_rank(a, m, k) == k);
    }
}
