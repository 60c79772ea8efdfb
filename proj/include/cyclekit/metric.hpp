#pragma once

#include <array>

#include "cyclekit/cycle.hpp"

namespace cyclekit {

/// Which length notion governs an evaluation.
struct LengthKind {
    enum class Variant { distance, from_centre, from_focus };

    Variant variant = Variant::distance;
    Sigma centre_kind = kElliptic;  // used by from_centre only

    static LengthKind distance() { return {Variant::distance, kElliptic}; }
    static LengthKind from_centre(Sigma kind) { return {Variant::from_centre, kind}; }
    static LengthKind from_focus() { return {Variant::from_focus, kElliptic}; }
};

/// Signed squared distance (du)^2 - sigma (dv)^2 between p and q.
double distance_sq(const Point& p, const Point& q, Sigma sigma);

/// Extremum of squared diameters over the pencil of cycles through p and q.
/// Agrees with distance_sq for matched units (away from the doubly parabolic
/// degeneracy). Throws NoExtremumError when the diameter function has no
/// critical point on the pencil.
double extremal_distance_sq(const Point& p, const Point& q, Sigma sigma, const FsccParams& params);

/// The cycle used by the from_centre / from_focus lengths: centre (of the
/// given kind) or focus at a, passing through b in the sigma-drawing. Among
/// several candidates the one with smaller |radius_sq| is chosen.
Cycle length_cycle(const Point& a, const Point& b, const LengthKind& kind, Sigma sigma,
                   const FsccParams& params);

/// Length of the directed interval a->b: the radius of the defining cycle,
/// as a signed square root (sign of the squared value is kept). b == a gives 0.
double length(const Point& a, const Point& b, const LengthKind& kind, Sigma sigma,
              const FsccParams& params);

/// Central-difference test for a local extremum of
/// eps -> length(a, b + eps*dir) at eps = 0, confirmed at step and step/10.
/// Throws NonSmoothError when the two steps disagree by more than 10x.
bool is_perpendicular(const Point& a, const Point& b, const Point& dir, const LengthKind& kind,
                      Sigma sigma, const FsccParams& params, double deriv_tol = 1e-6,
                      double step = 1e-4);

/// Richardson-extrapolated limit of l(g y, g(y + t y')) / l(y, y + t y')
/// over t, t/2, t/4.
double conformal_ratio(const GroupElement& g, const Point& y, const Point& yp, double t,
                       const LengthKind& kind, Sigma sigma, const FsccParams& params);

/// Basis of the pencil (2-parameter family) of cycles through p and q.
std::array<Cycle, 2> pencil_through(const Point& p, const Point& q, Sigma sigma);

}  // namespace cyclekit
