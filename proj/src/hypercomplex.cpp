#include "cyclekit/hypercomplex.hpp"

#include <cmath>

namespace cyclekit {

HyperNumber moebius(const GroupElement& g, const HyperNumber& z) {
    const HyperNumber num{g.a * z.re + g.b, g.a * z.im, z.sigma};
    const HyperNumber den{g.c * z.re + g.d, g.c * z.im, z.sigma};
    // Zero-divisor test is scale-aware in z so points near the light-cone
    // do not trip it spuriously.
    return num * inv(den, z.size_sq());
}

IwasawaFactors iwasawa(const GroupElement& g) {
    IwasawaFactors f;
    const double r = std::hypot(g.c, g.d);
    f.alpha = 1.0 / r;
    f.phi = std::atan2(-g.c, g.d);
    f.nu = (g.b * std::cos(f.phi) - g.a * std::sin(f.phi)) / f.alpha;
    return f;
}

std::vector<std::optional<HyperNumber>> k_orbit(const HyperNumber& z0, const std::vector<double>& phis) {
    std::vector<std::optional<HyperNumber>> orbit;
    orbit.reserve(phis.size());
    for (double phi : phis) {
        try {
            orbit.push_back(moebius(GroupElement::rotation(phi), z0));
        } catch (const ZeroDivisorError&) {
            orbit.push_back(std::nullopt);
        }
    }
    return orbit;
}

}  // namespace cyclekit
