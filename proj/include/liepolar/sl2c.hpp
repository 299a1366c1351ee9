// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>

#include "liepolar/lorentz.hpp"
#include "liepolar/mat2c.hpp"
#include "liepolar/rng.hpp"
#include "liepolar/vec3.hpp"

namespace liepolar {

/// sigma0 = I and the Pauli matrices sigma1, sigma2, sigma3.
const std::array<MatC2, 4>& pauli_basis();

/// n . sigma = [[n3, n1 - i n2], [n1 + i n2, -n3]].
MatC2 pauli_dot(const Vec3& n);

/// Checks |det l - 1| <= tol; throws DetNotOneError.
void validate_spinor(const MatC2& l, double tol = 1e-10);

/// e^{chi n.sigma/2} = cosh(chi/2) I + sinh(chi/2) n.sigma:
/// Hermitian, positive, det 1. The input axis is normalized.
MatC2 exp_herm(double chi, const Vec3& axis);

/// e^{-i theta m.sigma/2} = cos(theta/2) I - i sin(theta/2) m.sigma:
/// an SU(2) element. exp_su2(theta + 2 pi, m) = -exp_su2(theta, m).
MatC2 exp_su2(double theta, const Vec3& axis);

/// Closed-form positive root of a positive Hermitian 2x2 matrix:
/// (h + sqrt(det h) I) / sqrt(tr h + 2 sqrt(det h)).
MatC2 sqrt_hermitian2(const MatC2& h);

/// (chi, axis) with p = exp_herm(chi, axis); chi >= 0, axis carries direction.
struct HermParams {
  double chi = 0.0;
  Vec3 axis = kUnitZ;
};
HermParams herm_params(const MatC2& p, double tol = kDefaultTol);

/// (theta, axis) with u = exp_su2(theta, axis), theta in [0, 2 pi] so the
/// two preimages L and -L of a rotation stay distinguishable.
struct Su2Params {
  double theta = 0.0;
  Vec3 axis = kUnitZ;
};
Su2Params su2_params(const MatC2& u, double tol = kDefaultTol);

/// l = p * u = u * pprime with p = sqrt(l l*) Hermitian positive,
/// u in SU(2), pprime = u* p u; all three have det 1.
struct SpinorPolarFactors {
  MatC2 p;
  MatC2 u;
  MatC2 pprime;
  HermParams herm;
  Su2Params su2;
  double reconstruction_residual = 0.0;
};

SpinorPolarFactors polar_decompose_sl2c(const MatC2& l, double tol = 1e-10);

/// The two-to-one covering SL(2,C) -> SO(1,3)^up:
/// Pi(l)(i,j) = Re tr(l sigma_j l* sigma_i) / 2. The imaginary parts of the
/// traces are checked to vanish and the image is validated as a group
/// member; a failure there indicates a bug, not bad input.
LorentzMat covering_map(const MatC2& l, double tol = kDefaultTol);

/// Decompose l, push each factor through the covering map, and compare
/// with the factors of the decomposed image. The left-positive spinor
/// factor corresponds to the left boost (pprime) of the image.
struct CoveringCompatibility {
  double boost_residual = 0.0;
  double rotation_residual = 0.0;
};

CoveringCompatibility check_polar_compatibility(const MatC2& l);

/// exp_herm(chi in [0,2]) * exp_su2(theta in [0, 2 pi)), random axes.
MatC2 random_spinor(SplitMix64& rng);

}  // namespace liepolar
