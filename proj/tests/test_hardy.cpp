#include <doctest.h>

#include "cyclekit/hardy.hpp"

using namespace cyclekit;

TEST_CASE("boundary integral recovers polynomials") {
    const auto one = CircleFunction::sample(64, [](Complex) { return Complex(1, 0); });
    CHECK(std::abs(cauchy_transform(one, DiskPoint(Complex(0, 0))) - 1.0) < 1e-13);
    CHECK(std::abs(cauchy_transform_raw(one, DiskPoint(Complex(0, 0))) + 1.0) < 1e-13);

    const auto cube = CircleFunction::sample(256, [](Complex z) { return z * z * z; });
    CHECK(std::abs(cauchy_transform(cube, DiskPoint(Complex(0.3, 0))) - 0.027) < 1e-12);

    const auto anti = CircleFunction::sample(256, [](Complex z) { return std::conj(z); });
    CHECK(std::abs(cauchy_transform(anti, DiskPoint(Complex(0.5, 0.2)))) < 1e-12);
}

TEST_CASE("coherent states") {
    const auto v0 = coherent_state(DiskPoint(Complex(0, 0)), 64);
    for (int j = 0; j < 64; j += 7) {
        const Complex z = CircleFunction::node(j, 64);
        CHECK(std::abs(v0.samples[j] + 1.0 / z) < 1e-14);
    }
    const auto f = CircleFunction::sample(128, [](Complex z) { return z * z + 0.5 * z; });
    const DiskPoint u(Complex(0.4, -0.3));
    CHECK(std::abs(contour_pairing(f, coherent_state(u, 128)) - cauchy_transform_raw(f, u)) <
          1e-13);
    CHECK_THROWS_AS(DiskPoint(Complex(1.0, 0)), Error);
}

TEST_CASE("grid validation") {
    CHECK_THROWS_AS(CircleFunction(std::vector<Complex>(8)), Error);    // too small
    CHECK_THROWS_AS(CircleFunction(std::vector<Complex>(100)), Error);  // not a power of two
    std::vector<Complex> bad(16);
    bad[3] = Complex(std::nan(""), 0);
    CHECK_THROWS_AS(CircleFunction(std::move(bad)), Error);  // non-finite sample
}

TEST_CASE("weight-one action") {
    const auto f = CircleFunction::sample(128, [](Complex z) { return z * z - 0.3 * z; });
    const auto same = rho1_apply(SuElement(Complex(1, 0), Complex(0, 0)), f);
    for (int j = 0; j < 128; ++j) CHECK(std::abs(same.samples[j] - f.samples[j]) < 1e-13);

    const SuElement g = SuElement::normalized(Complex(1.1, 0.1), Complex(0.3, -0.2));
    CHECK(rho1_apply(g, f).norm_sq() == doctest::Approx(f.norm_sq()).epsilon(1e-9));
}

TEST_CASE("taylor coefficients") {
    const auto at0 = taylor_coeffs(DiskPoint(Complex(0, 0)), 4);
    CHECK(std::abs(at0[0] - 1.0) < 1e-15);
    for (int i = 1; i < 4; ++i) CHECK(std::abs(at0[i]) < 1e-15);

    const auto at_half = taylor_coeffs(DiskPoint(Complex(0.5, 0)), 6);
    for (int n = 1; n <= 6; ++n)
        CHECK(std::abs(at_half[n - 1] - std::sqrt(0.75) * std::pow(0.5, n - 1)) < 1e-15);
}

TEST_CASE("half-plane first-order operator") {
    HalfPlanePatch patch;
    const auto constant = patch.sample([](Complex) { return Complex(1.5, -2.0); });
    CHECK(std::abs(dirac_residual(patch, constant, 20, 20)) < 1e-14);

    // z^2 has a vanishing third derivative: the stencil is exact on it
    const auto zsq = patch.sample([](Complex z) { return z * z; });
    CHECK(std::abs(dirac_residual(patch, zsq, 30, 40)) < 1e-11);

    const auto zbar = patch.sample([](Complex z) { return std::conj(z); });
    const Complex want = Complex(0, -2) * patch.point(25, 35).imag();
    CHECK(std::abs(dirac_residual(patch, zbar, 25, 35) - want) < 1e-12);

    CHECK_THROWS_AS(dirac_residual(patch, constant, 1, 20), OutOfPatchError);
    CHECK_THROWS_AS(dirac_residual(patch, constant, 20, patch.nv - 2), OutOfPatchError);
}

TEST_CASE("fft round trip") {
    std::vector<Complex> data(64);
    for (int i = 0; i < 64; ++i) data[i] = Complex(std::sin(0.3 * i), std::cos(0.11 * i));
    auto copy = data;
    fft_inplace(copy, -1);
    fft_inplace(copy, +1);
    for (int i = 0; i < 64; ++i) CHECK(std::abs(copy[i] / 64.0 - data[i]) < 1e-12);
}
