// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "liepolar/mat2c.hpp"
#include "liepolar/matrix.hpp"

namespace liepolar {

/// Default tolerance wherever a caller does not override one.
inline constexpr double kDefaultTol = 1e-9;

/// Result of a symmetric eigendecomposition: s = basis * diag(eigenvalues) * basis^t,
/// eigenvalues ascending, basis orthogonal.
struct EigDecomp {
  std::vector<double> eigenvalues;
  MatR basis;
};

/// Cyclic Jacobi eigendecomposition of a symmetric matrix.
/// Throws NotSymmetricError / NoConvergenceError (sweep limit 100).
EigDecomp jacobi_eigh(const MatR& s, double tol = kDefaultTol);

/// Unique symmetric positive semidefinite square root, via jacobi_eigh.
/// Eigenvalues in [-tol, 0] (scaled by max(1, |s|)) are clamped to zero;
/// anything below that throws NegativeEigenvalueError.
MatR sqrt_spd(const MatR& s, double tol = kDefaultTol);

/// Closed-form positive root of I + b*b^t: returns I + b*b^t / (1 + g)
/// with g = sqrt(1 + b.b). The caller's g is cross-checked to 1e-12.
MatR sqrt_boost_closed_form(double g, const Vec3& b);

/// Matrix exponential by scaling-and-squaring with a truncated series.
/// Serves as the independent oracle for every closed-form exponential here.
MatR expm(const MatR& x);
MatC2 expm(const MatC2& x);

/// t = u * p = pprime * u with u orthogonal, p = sqrt(t^t * t) positive,
/// pprime = u * p * u^t.
struct PolarFactors {
  MatR u;
  MatR p;
  MatR pprime;
};

/// Polar decomposition of a bijective real matrix. Throws SingularError
/// when |det t| <= tol.
PolarFactors polar(const MatR& t, double tol = kDefaultTol);

}  // namespace liepolar
