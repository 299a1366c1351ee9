// SPDX-License-Identifier: Apache-2.0
#include "liepolar/so3.hpp"

#include <cmath>
#include <string>

namespace liepolar {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTwoPi = 2.0 * kPi;

Vec3 first_nonzero_positive(const Vec3& v) {
  const double comps[3] = {v.x, v.y, v.z};
  for (double c : comps) {
    if (std::fabs(c) > 1e-12) return c < 0.0 ? -v : v;
  }
  return v;
}

void require_rotation(const MatR& r, double tol, const char* who) {
  if (r.dim() != 3) throw NotRotationError(std::string(who) + ": expected a 3x3 matrix");
  const double ortho = max_abs_diff(r.transposed() * r, MatR::identity(3));
  if (ortho > tol) {
    throw NotRotationError(std::string(who) + ": orthogonality residual " + std::to_string(ortho));
  }
  const double det = r.determinant();
  if (std::fabs(det - 1.0) > tol) {
    throw NotRotationError(std::string(who) + ": determinant " + std::to_string(det));
  }
}

}  // namespace

AxisAngle make_axis_angle(double theta, const Vec3& axis) {
  Vec3 n = axis.normalized();
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  if (t > kPi) {
    t = kTwoPi - t;
    n = -n;
  }
  if (t == 0.0) n = kUnitZ;
  if (t == kPi) n = first_nonzero_positive(n);
  return {t, n};
}

const std::array<MatR, 3>& rotation_generators() {
  static const std::array<MatR, 3> gens = [] {
    std::array<MatR, 3> t{MatR(3), MatR(3), MatR(3)};
    t[0](1, 2) = -1.0;
    t[0](2, 1) = 1.0;
    t[1](0, 2) = 1.0;
    t[1](2, 0) = -1.0;
    t[2](0, 1) = -1.0;
    t[2](1, 0) = 1.0;
    return t;
  }();
  return gens;
}

MatR so3_hat(const Vec3& n) {
  MatR m(3);
  m(0, 1) = -n.z;
  m(0, 2) = n.y;
  m(1, 0) = n.z;
  m(1, 2) = -n.x;
  m(2, 0) = -n.y;
  m(2, 1) = n.x;
  return m;
}

MatR exp_so3(const AxisAngle& a) {
  const MatR n = so3_hat(a.axis);
  const double s = std::sin(a.theta);
  const double half = std::sin(0.5 * a.theta);
  const double ver = 2.0 * half * half;  // 1 - cos(theta), stable near 0
  return MatR::identity(3) + s * n + ver * (n * n);
}

MatR exp_so3(double theta, const Vec3& axis) { return exp_so3(make_axis_angle(theta, axis)); }

AxisAngle log_so3(const MatR& r, double tol) {
  require_rotation(r, tol, "log_so3");

  const double c = std::fmin(1.0, std::fmax(-1.0, 0.5 * (r.trace() - 1.0)));
  const Vec3 w{r(2, 1) - r(1, 2), r(0, 2) - r(2, 0), r(1, 0) - r(0, 1)};
  const double s = 0.5 * w.norm();  // sin(theta), nonnegative on [0, pi]
  const double theta = std::atan2(s, c);

  if (s > 1e-6) {
    return {theta, w / (2.0 * s)};
  }
  if (c > 0.0) {
    // theta near zero: the axis is numerically indeterminate.
    return {theta, kUnitZ};
  }

  // theta near pi: recover n n^t from the symmetric part, which stays
  // well conditioned where the antisymmetric part vanishes.
  const double ver = 1.0 - c;
  MatR outer(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      outer(i, j) = (0.5 * (r(i, j) + r(j, i)) - (i == j ? c : 0.0)) / ver;
  int dominant = 0;
  for (int j = 1; j < 3; ++j)
    if (outer(j, j) > outer(dominant, dominant)) dominant = j;
  Vec3 n{outer(0, dominant), outer(1, dominant), outer(2, dominant)};
  n = n / std::sqrt(std::fmax(outer(dominant, dominant), 1e-300));
  n = n.normalized();

  if (w.norm() > 1e-12) {
    if (w.dot(n) < 0.0) n = -n;
  } else {
    n = first_nonzero_positive(n);
  }
  return {theta, n};
}

double conjugation_residual(const MatR& u, const Vec3& n, double tol) {
  require_rotation(u, tol, "conjugation_residual");
  const Vec3 axis = n.normalized();
  const Vec3 rotated = apply3(u, axis);
  const MatR ut = u.transposed();
  double worst = 0.0;
  for (double theta : {0.1, 1.0, 3.0}) {
    const MatR lhs = u * exp_so3(theta, axis) * ut;
    const MatR rhs = exp_so3(theta, rotated);
    worst = std::fmax(worst, max_abs_diff(lhs, rhs));
  }
  return worst;
}

}  // namespace liepolar
