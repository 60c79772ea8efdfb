#include "cyclekit/hardy.hpp"

#include <cmath>

namespace cyclekit {

namespace {

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

CircleFunction::CircleFunction(std::vector<Complex> s) : samples(std::move(s)) {
    const int n = static_cast<int>(samples.size());
    if (n < 16 || !power_of_two(n)) throw Error("grid size must be a power of two, at least 16");
    for (const auto& v : samples)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw Error("samples must be finite");
}

CircleFunction CircleFunction::sample(int n, const std::function<Complex(Complex)>& f) {
    std::vector<Complex> s(n);
    for (int j = 0; j < n; ++j) s[j] = f(node(j, n));
    return CircleFunction(std::move(s));
}

double CircleFunction::norm_sq() const {
    double acc = 0.0;
    for (const auto& v : samples) acc += std::norm(v);
    return acc / samples.size();
}

Complex cauchy_transform_raw(const CircleFunction& f, const DiskPoint& u) {
    const int n = f.size();
    Complex acc(0, 0);
    for (int j = 0; j < n; ++j) {
        const Complex z = CircleFunction::node(j, n);
        acc += f.samples[j] * z / (u.u - z);
    }
    return acc / static_cast<double>(n);
}

Complex cauchy_transform(const CircleFunction& f, const DiskPoint& u) {
    return -cauchy_transform_raw(f, u);
}

CircleFunction coherent_state(const DiskPoint& u, int n) {
    return CircleFunction::sample(n, [&](Complex z) { return 1.0 / (u.u - z); });
}

Complex contour_pairing(const CircleFunction& f, const CircleFunction& g) {
    if (f.size() != g.size()) throw Error("grids must match");
    const int n = f.size();
    Complex acc(0, 0);
    for (int j = 0; j < n; ++j) acc += f.samples[j] * g.samples[j] * CircleFunction::node(j, n);
    return acc / static_cast<double>(n);
}

void fft_inplace(std::vector<Complex>& a, int sign) {
    const int n = static_cast<int>(a.size());
    if (!power_of_two(n)) throw Error("fft size must be a power of two");
    for (int i = 1, j = 0; i < n; ++i) {
        int bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j |= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (int len = 2; len <= n; len <<= 1) {
        const double ang = sign * 2.0 * M_PI / len;
        const Complex wl = std::polar(1.0, ang);
        for (int i = 0; i < n; i += len) {
            Complex w(1, 0);
            for (int j = 0; j < len / 2; ++j) {
                const Complex x = a[i + j];
                const Complex y = a[i + j + len / 2] * w;
                a[i + j] = x + y;
                a[i + j + len / 2] = x - y;
                w *= wl;
            }
        }
    }
}

DiskPoint disk_moebius(const SuElement& g, const DiskPoint& u) {
    return DiskPoint((std::conj(g.alpha) * u.u - std::conj(g.beta)) / (g.alpha - g.beta * u.u));
}

CircleFunction rho1_apply(const SuElement& g, const CircleFunction& f) {
    if (g.unit_defect() > 1e-10) throw Error("group element off the unit-defect slice");
    const int n = f.size();

    // Laurent coefficients by forward FFT; frequencies k in [-n/2, n/2).
    std::vector<Complex> coeff = f.samples;
    fft_inplace(coeff, -1);
    for (auto& c : coeff) c /= static_cast<double>(n);

    std::vector<Complex> out(n);
    for (int j = 0; j < n; ++j) {
        const Complex z = CircleFunction::node(j, n);
        const Complex den = g.alpha - g.beta * z;
        const Complex w = (std::conj(g.alpha) * z - std::conj(g.beta)) / den;
        Complex acc(0, 0);
        Complex wp(1, 0);  // w^k for k = 0..n/2-1
        for (int k = 0; k < n / 2; ++k) {
            acc += coeff[k] * wp;
            wp *= w;
        }
        const Complex wi = 1.0 / w;
        Complex wn = wi;  // w^{-k} for k = 1..n/2
        for (int k = 1; k <= n / 2; ++k) {
            acc += coeff[(n - k) % n] * wn;
            wn *= wi;
        }
        out[j] = acc / den;
    }
    return CircleFunction(std::move(out));
}

std::vector<Complex> taylor_coeffs(const DiskPoint& a, int count) {
    if (count < 1) throw Error("count must be positive");
    std::vector<Complex> v(count);
    const double lead = std::sqrt(1.0 - std::norm(a.u));
    Complex p(1, 0);
    for (int i = 0; i < count; ++i) {
        v[i] = lead * p;
        p *= std::conj(a.u);
    }
    return v;
}

std::vector<Complex> HalfPlanePatch::sample(const std::function<Complex(Complex)>& f) const {
    std::vector<Complex> out(static_cast<std::size_t>(nu) * nv);
    for (int j = 0; j < nv; ++j)
        for (int i = 0; i < nu; ++i) out[index(i, j)] = f(point(i, j));
    return out;
}

Complex dirac_residual(const HalfPlanePatch& patch, const std::vector<Complex>& f, int i, int j) {
    if (i < 2 || j < 2 || i > patch.nu - 3 || j > patch.nv - 3)
        throw OutOfPatchError("stencil point too close to the patch boundary");
    if (std::abs(patch.du() - patch.dv()) > 1e-12 * patch.du())
        throw Error("patch spacing must be isotropic");
    const double h = patch.du();
    const Complex d1 = (f[patch.index(i + 1, j)] - f[patch.index(i - 1, j)]) / (2.0 * h);
    const Complex d2 = (f[patch.index(i, j + 1)] - f[patch.index(i, j - 1)]) / (2.0 * h);
    const double y = patch.point(i, j).imag();
    // -2 i y * (1/2)(d1 + i d2)
    return Complex(0, -1) * y * (d1 + Complex(0, 1) * d2);
}

}  // namespace cyclekit
