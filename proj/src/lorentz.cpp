// SPDX-License-Identifier: Apache-2.0
#include "liepolar/lorentz.hpp"

#include <cmath>
#include <string>

namespace liepolar {

namespace {

MatR spatial_block(const MatR& m4) {
  MatR m(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = m4(i + 1, j + 1);
  return m;
}

}  // namespace

const MatR& minkowski_metric() {
  static const MatR eta = MatR::diagonal({-1.0, 1.0, 1.0, 1.0});
  return eta;
}

LorentzResiduals lorentz_residuals(const MatR& m) {
  const MatR& eta = minkowski_metric();
  LorentzResiduals r;
  r.metric = max_abs_diff(m * eta * m.transposed(), eta);
  r.det = std::fabs(m.determinant() - 1.0);
  r.orientation = std::fmax(0.0, 1.0 - m(0, 0));
  return r;
}

LorentzMat validate_lorentz(const MatR& m, double tol) {
  if (m.dim() != 4) throw DimensionMismatchError("validate_lorentz: expected a 4x4 matrix");
  if (!m.all_finite()) throw Error("validate_lorentz: matrix has non-finite entries");
  const LorentzResiduals r = lorentz_residuals(m);
  if (r.metric > tol) {
    throw MetricViolationError("metric residual " + std::to_string(r.metric) +
                               " exceeds tolerance");
  }
  // Time reversal passes the metric check; flag it before the determinant
  // so pure reversals are reported as non-orthochronous.
  if (m(0, 0) <= 0.0 || r.orientation > tol) {
    throw NotOrthochronousError("entry (0,0) = " + std::to_string(m(0, 0)) +
                                " is not in the orthochronous branch");
  }
  if (r.det > tol) {
    throw DetNotOneError("determinant residual " + std::to_string(r.det) + " exceeds tolerance");
  }
  return {m, r};
}

BoostParams make_boost_params(double chi, const Vec3& axis) {
  if (chi == 0.0) return {0.0, kUnitZ};
  Vec3 n = axis.normalized();
  if (chi < 0.0) {
    chi = -chi;
    n = -n;
  }
  return {chi, n};
}

const std::array<MatR, 3>& boost_generators() {
  static const std::array<MatR, 3> gens = [] {
    std::array<MatR, 3> k{MatR(4), MatR(4), MatR(4)};
    for (int i = 0; i < 3; ++i) {
      k[static_cast<std::size_t>(i)](0, i + 1) = 1.0;
      k[static_cast<std::size_t>(i)](i + 1, 0) = 1.0;
    }
    return k;
  }();
  return gens;
}

const std::array<MatR, 3>& rotation_generators4() {
  static const std::array<MatR, 3> gens = [] {
    std::array<MatR, 3> s{MatR(4), MatR(4), MatR(4)};
    const auto& t = rotation_generators();
    for (std::size_t g = 0; g < 3; ++g)
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s[g](i + 1, j + 1) = t[g](i, j);
    return s;
  }();
  return gens;
}

LorentzMat boost_matrix(const BoostParams& b) {
  const double ch = std::cosh(b.chi);
  const double sh = std::sinh(b.chi);
  const double n[3] = {b.axis.x, b.axis.y, b.axis.z};
  MatR m = MatR::identity(4);
  m(0, 0) = ch;
  for (int i = 0; i < 3; ++i) {
    m(0, i + 1) = sh * n[i];
    m(i + 1, 0) = sh * n[i];
    for (int j = 0; j < 3; ++j) m(i + 1, j + 1) = (i == j ? 1.0 : 0.0) + (ch - 1.0) * n[i] * n[j];
  }
  return {m, lorentz_residuals(m)};
}

LorentzMat boost_matrix(double chi, const Vec3& axis) {
  return boost_matrix(make_boost_params(chi, axis));
}

LorentzMat rotation_matrix4(const AxisAngle& a) {
  const MatR r3 = exp_so3(a);
  MatR m = MatR::identity(4);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i + 1, j + 1) = r3(i, j);
  return {m, lorentz_residuals(m)};
}

LorentzMat rotation_matrix4(double theta, const Vec3& axis) {
  return rotation_matrix4(make_axis_angle(theta, axis));
}

BoostParams boost_params(const MatR& p, double tol) {
  if (p.dim() != 4) throw DimensionMismatchError("boost_params: expected a 4x4 matrix");
  const double scale = std::fmax(1.0, p.max_abs());
  double asym = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) asym = std::fmax(asym, std::fabs(p(i, j) - p(j, i)));
  if (asym > tol * scale) {
    throw NotBoostError("boost_params: asymmetry " + std::to_string(asym));
  }
  const double g = p(0, 0);
  if (g < 1.0 - tol) {
    throw NotBoostError("boost_params: entry (0,0) = " + std::to_string(g) + " is below 1");
  }

  const Vec3 bvec{p(1, 0), p(2, 0), p(3, 0)};
  const double bnorm = bvec.norm();

  // The structure of a boost: g = sqrt(1 + B.B) and spatial block
  // I + B B^t / (1 + g).
  const double g_expected = std::sqrt(1.0 + bvec.dot(bvec));
  if (std::fabs(g - g_expected) > tol * scale) {
    throw NotBoostError("boost_params: entry (0,0) = " + std::to_string(g) +
                        " disagrees with sqrt(1 + B.B) = " + std::to_string(g_expected));
  }
  const MatR expected = sqrt_boost_closed_form(g_expected, bvec);
  const double structure = max_abs_diff(spatial_block(p), expected);
  if (structure > tol * scale) {
    throw NotBoostError("boost_params: spatial block residual " + std::to_string(structure));
  }

  if (bnorm <= 1e-9) {
    // Near the identity acosh(g) amplifies rounding; asinh of the mixing
    // column keeps the round trip within tolerance.
    return {std::asinh(bnorm), kUnitZ};
  }
  return {std::acosh(std::fmax(1.0, g)), bvec / bnorm};
}

LorentzPolarFactors polar_decompose(const LorentzMat& l, double tol) {
  const MatR& eta = minkowski_metric();
  const MatR p_m = sqrt_spd(l.m.transposed() * l.m, tol);

  LorentzPolarFactors out;
  out.p = validate_lorentz(p_m, tol);
  out.boost = boost_params(p_m, tol);

  // Group-theoretic inverse of a boost: p^{-1} = eta p eta.
  const MatR u_m = l.m * (eta * p_m * eta);
  out.u = validate_lorentz(u_m, tol);
  double block = std::fabs(u_m(0, 0) - 1.0);
  for (int i = 1; i < 4; ++i) {
    block = std::fmax(block, std::fabs(u_m(0, i)));
    block = std::fmax(block, std::fabs(u_m(i, 0)));
  }
  if (block > tol) {
    throw DecompositionResidualError("rotation factor is not block-diagonal: residual " +
                                     std::to_string(block));
  }
  out.rotation = log_so3(spatial_block(u_m), tol);

  const MatR pprime_m = u_m * p_m * u_m.transposed();
  out.pprime = validate_lorentz(pprime_m, tol);

  const double scale = std::fmax(1.0, l.m.max_abs());
  out.reconstruction_residual =
      std::fmax(max_abs_diff(u_m * p_m, l.m), max_abs_diff(pprime_m * u_m, l.m)) / scale;
  if (out.reconstruction_residual > tol) {
    throw DecompositionResidualError("reconstruction residual " +
                                     std::to_string(out.reconstruction_residual));
  }
  return out;
}

LorentzMat conjugate_boost(const AxisAngle& a, const BoostParams& b) {
  const Vec3 rotated = apply3(exp_so3(a), b.axis);
  return boost_matrix(b.chi, rotated);
}

Vec3 rapidity_to_velocity(const BoostParams& b, double light_speed) {
  if (light_speed <= 0.0) throw Error("rapidity_to_velocity: light speed must be positive");
  return light_speed * std::sinh(b.chi) * b.axis;
}

LorentzMat random_lorentz(SplitMix64& rng) {
  double a[3];
  double b[3];
  for (double& v : a) v = rng.uniform(-2.0, 2.0);
  for (double& v : b) v = rng.uniform(-2.0, 2.0);
  MatR x(4);
  const auto& s = rotation_generators4();
  const auto& k = boost_generators();
  for (std::size_t i = 0; i < 3; ++i) {
    x += a[i] * s[i];
    x += b[i] * k[i];
  }
  return validate_lorentz(expm(x), 1e-10);
}

LorentzMat random_lorentz(std::uint64_t seed) {
  SplitMix64 rng(seed);
  return random_lorentz(rng);
}

}  // namespace liepolar
