// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>

#include "liepolar/linalg.hpp"
#include "liepolar/matrix.hpp"
#include "liepolar/vec3.hpp"

namespace liepolar {

/// Canonical axis-angle pair: theta in [0, pi], unit axis.
/// theta == 0 carries the conventional axis (0,0,1); at theta == pi the
/// axis sign is fixed so its first nonzero component is positive, since
/// (pi, n) and (pi, -n) describe the same rotation.
struct AxisAngle {
  double theta = 0.0;
  Vec3 axis = kUnitZ;
};

/// Canonicalize an arbitrary (theta, axis) pair. The axis is normalized;
/// theta is wrapped into [0, pi] with the axis flipped as needed.
AxisAngle make_axis_angle(double theta, const Vec3& axis);

/// Rotation generators t1, t2, t3 with (t_i)(j,k) = -epsilon_{ijk}.
const std::array<MatR, 3>& rotation_generators();

/// n . t, the cross-product matrix of n: (n.t) x = n x x.
MatR so3_hat(const Vec3& n);

/// Rodrigues form R = I + sin(theta) N + (1 - cos(theta)) N^2.
MatR exp_so3(const AxisAngle& a);
MatR exp_so3(double theta, const Vec3& axis);

/// Inverse of exp_so3, canonicalized. Throws NotRotationError when r is
/// not orthogonal with determinant 1 within tol.
AxisAngle log_so3(const MatR& r, double tol = kDefaultTol);

/// Max over theta in {0.1, 1.0, 3.0} of |u exp(theta, n) u^t - exp(theta, u n)|.
/// Zero in exact arithmetic for any rotation u.
double conjugation_residual(const MatR& u, const Vec3& n, double tol = kDefaultTol);

}  // namespace liepolar
