// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>

#include "liepolar/linalg.hpp"
#include "liepolar/matrix.hpp"
#include "liepolar/rng.hpp"
#include "liepolar/so3.hpp"

namespace liepolar {

/// Minkowski metric diag(-1, 1, 1, 1).
const MatR& minkowski_metric();

/// Residuals recorded when a matrix is checked against the group
/// SO(1,3)^up: |m eta m^t - eta|, |det m - 1| and max(0, 1 - m(0,0)).
struct LorentzResiduals {
  double metric = 0.0;
  double det = 0.0;
  double orientation = 0.0;
};

/// A 4x4 matrix together with its membership residuals. Construct through
/// validate_lorentz or one of the exact-form builders below.
struct LorentzMat {
  MatR m = MatR::identity(4);
  LorentzResiduals residuals;
};

LorentzResiduals lorentz_residuals(const MatR& m);

/// Membership check; rejects rather than repairs. Throws
/// MetricViolationError / NotOrthochronousError / DetNotOneError,
/// naming the residual that failed.
LorentzMat validate_lorentz(const MatR& m, double tol = kDefaultTol);

/// Canonical boost coordinates: rapidity chi >= 0, unit axis; the axis
/// carries the direction since (chi, n) and (-chi, -n) are the same boost.
/// chi == 0 carries the conventional axis (0,0,1).
struct BoostParams {
  double chi = 0.0;
  Vec3 axis = kUnitZ;
};

BoostParams make_boost_params(double chi, const Vec3& axis);

/// Boost generators k1, k2, k3 (symmetric) and the spatial-rotation
/// generators s1, s2, s3 (antisymmetric, t_i in the lower-right block).
const std::array<MatR, 3>& boost_generators();
const std::array<MatR, 3>& rotation_generators4();

/// exp(chi n.k) in closed form: cosh(chi) time entry, sinh(chi) n mixing
/// row/column, spatial block I + (cosh(chi) - 1) n n^t.
LorentzMat boost_matrix(const BoostParams& b);
LorentzMat boost_matrix(double chi, const Vec3& axis);

/// exp(theta m.s): block-diagonal embedding of exp_so3, fixing the time axis.
LorentzMat rotation_matrix4(const AxisAngle& a);
LorentzMat rotation_matrix4(double theta, const Vec3& axis);

/// Extract (chi, axis) from a symmetric positive group element.
/// Throws NotBoostError when the spatial block is not I + B B^t / (1 + g).
BoostParams boost_params(const MatR& p, double tol = kDefaultTol);

/// Factors of l = u * p = pprime * u: u a spatial proper rotation, p and
/// pprime boosts, pprime = u * p * u^t. rotation/boost are the extracted
/// coordinates of u and p.
struct LorentzPolarFactors {
  LorentzMat u;
  LorentzMat p;
  LorentzMat pprime;
  AxisAngle rotation;
  BoostParams boost;
  double reconstruction_residual = 0.0;
};

/// Polar decomposition inside the group: p = sqrt_spd(l^t l) is a boost,
/// u = l * (eta p eta) a spatial rotation. Factor membership and structure
/// are re-validated; throws DecompositionResidualError if the relative
/// reconstruction error exceeds tol.
LorentzPolarFactors polar_decompose(const LorentzMat& l, double tol = kDefaultTol);

/// boost_matrix(b.chi, exp_so3(a) b.axis); equals the conjugation
/// rotation_matrix4(a) * boost_matrix(b) * rotation_matrix4(a)^t.
LorentzMat conjugate_boost(const AxisAngle& a, const BoostParams& b);

/// v = c sinh(chi) axis: the celerity (proper velocity) of the frame
/// change, not the coordinate velocity c tanh(chi) axis.
Vec3 rapidity_to_velocity(const BoostParams& b, double light_speed);

/// exp(a.s + b.k) for coefficients drawn uniformly from [-2, 2]^3.
LorentzMat random_lorentz(SplitMix64& rng);
LorentzMat random_lorentz(std::uint64_t seed);

}  // namespace liepolar
