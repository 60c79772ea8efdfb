#pragma once

#include "cyclekit/cycle.hpp"

namespace cyclekit {

/// Trace pairing of two cycles, computed on normalized representatives:
///
///   2 l1 l2 - 2 sigma_breve s^2 n1 n2 - m1 k2 - m2 k1
///
/// equal to Re tr(C1 * conj(C2)) with the cycle-space conjugation n -> -n.
/// The n-term sign is calibrated so that for the elliptic/elliptic case the
/// vanishing set is exactly Euclidean orthogonality |c1-c2|^2 = r1^2 + r2^2,
/// and pairing(c, c) = -2 det(C).
double pairing(const Cycle& c1, const Cycle& c2, const FsccParams& params);

/// |pairing| below a scale-aware threshold.
bool is_orthogonal(const Cycle& c1, const Cycle& c2, const FsccParams& params, double tol = 1e-9);

/// Reflection of c in the mirror: the cycle of the matrix M C M.
Cycle reflect(const Cycle& mirror, const Cycle& c, const FsccParams& params);

/// Value of tr(C2 C1 C2 R) with R the real line; the mirror is the second
/// argument, which is the reading under which every line s-orthogonal to c2
/// passes through the focus of c2.
double s_orthogonality_value(const Cycle& c1, const Cycle& c2, const FsccParams& params);

/// c1 is s-orthogonal to c2: the reflection of c1 in c2 is orthogonal to the
/// real line. Not symmetric.
bool is_s_orthogonal(const Cycle& c1, const Cycle& c2, const FsccParams& params, double tol = 1e-9);

/// Auxiliary cycle reducing sigma_breve-orthogonality to the matched-unit
/// pairing of the sigma-drawing: (k, l, chi(sigma) sigma_breve s^2 n, m).
/// Shares the roots of c; its chi(sigma)-centre is the sigma_breve-centre of c.
Cycle ghost(const Cycle& c, Sigma sigma, const FsccParams& params);

/// Auxiliary cycle reducing s-orthogonality to the matched-unit pairing:
/// (2nk, 2nl, -chi(sigma)(sigma_breve s^2 n^2 + l^2 - mk), 2nm), the
/// reflection of the real line in c. Shares the roots of c; its
/// chi(sigma)-centre is the sigma_breve-focus of c.
Cycle s_ghost(const Cycle& c, Sigma sigma, const FsccParams& params);

/// Pairing with the unit of the drawing plane (sigma_breve := sigma, s := 1);
/// for an elliptic drawing this is literal Euclidean tangent orthogonality.
double drawing_pairing(const Cycle& c1, const Cycle& c2, Sigma sigma);
bool is_drawing_orthogonal(const Cycle& c1, const Cycle& c2, Sigma sigma, double tol = 1e-9);

}  // namespace cyclekit
