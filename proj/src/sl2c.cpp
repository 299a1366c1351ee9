// SPDX-License-Identifier: Apache-2.0
#include "liepolar/sl2c.hpp"

#include <cmath>
#include <string>

namespace liepolar {

namespace {

constexpr Complex kI{0.0, 1.0};

// Re tr(a * b) for 2x2 matrices.
double re_trace_product(const MatC2& a, const MatC2& b) {
  Complex t = a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0) + a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1);
  return t.real();
}

double im_trace_product(const MatC2& a, const MatC2& b) {
  Complex t = a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0) + a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1);
  return t.imag();
}

// Axis vector of a matrix of the form s * (n . sigma); |result| = s.
Vec3 sigma_components(const MatC2& m) {
  return {m(0, 1).real(), -m(0, 1).imag(), m(0, 0).real()};
}

}  // namespace

const std::array<MatC2, 4>& pauli_basis() {
  static const std::array<MatC2, 4> sigma = [] {
    std::array<MatC2, 4> s;
    s[0] = MatC2::identity();
    s[1].a = {Complex(0.0), Complex(1.0), Complex(1.0), Complex(0.0)};
    s[2].a = {Complex(0.0), Complex(0.0, -1.0), Complex(0.0, 1.0), Complex(0.0)};
    s[3].a = {Complex(1.0), Complex(0.0), Complex(0.0), Complex(-1.0)};
    return s;
  }();
  return sigma;
}

MatC2 pauli_dot(const Vec3& n) {
  MatC2 m;
  m.a = {Complex(n.z), Complex(n.x, -n.y), Complex(n.x, n.y), Complex(-n.z)};
  return m;
}

void validate_spinor(const MatC2& l, double tol) {
  if (!l.all_finite()) throw Error("validate_spinor: matrix has non-finite entries");
  const double res = std::abs(l.det() - Complex(1.0));
  if (res > tol) {
    throw DetNotOneError("spinor determinant residual " + std::to_string(res) +
                         " exceeds tolerance");
  }
}

MatC2 exp_herm(double chi, const Vec3& axis) {
  const Vec3 n = axis.normalized();
  MatC2 m = std::cosh(0.5 * chi) * MatC2::identity();
  m += std::sinh(0.5 * chi) * pauli_dot(n);
  return m;
}

MatC2 exp_su2(double theta, const Vec3& axis) {
  const Vec3 n = axis.normalized();
  MatC2 m = std::cos(0.5 * theta) * MatC2::identity();
  m += Complex(0.0, -std::sin(0.5 * theta)) * pauli_dot(n);
  return m;
}

MatC2 sqrt_hermitian2(const MatC2& h) {
  const double d = std::fmax(0.0, h.det().real());
  const double s = std::sqrt(d);
  const double denom_sq = h.trace().real() + 2.0 * s;
  if (denom_sq <= 0.0) throw NegativeEigenvalueError("sqrt_hermitian2: matrix is not positive");
  const double denom = std::sqrt(denom_sq);
  MatC2 root = h + s * MatC2::identity();
  root *= Complex(1.0 / denom);
  return root;
}

HermParams herm_params(const MatC2& p, double tol) {
  const double herm_res = max_abs_diff(p, p.adjoint());
  if (herm_res > tol) {
    throw NotBoostError("herm_params: Hermitian residual " + std::to_string(herm_res));
  }
  const double det_res = std::abs(p.det() - Complex(1.0));
  if (det_res > std::fmax(tol, 1e-8)) {
    throw DetNotOneError("herm_params: determinant residual " + std::to_string(det_res));
  }
  const double tr = 0.5 * p.trace().real();
  if (tr < 1.0 - tol) {
    throw NotBoostError("herm_params: half trace " + std::to_string(tr) + " is below 1");
  }
  // Traceless part is sinh(chi/2) n.sigma.
  MatC2 traceless = p;
  traceless -= 0.5 * p.trace() * MatC2::identity();
  const Vec3 v = sigma_components(traceless);
  const double s = v.norm();
  if (s <= 1e-9) return {2.0 * std::asinh(s), kUnitZ};
  return {2.0 * std::acosh(std::fmax(1.0, tr)), v / s};
}

Su2Params su2_params(const MatC2& u, double tol) {
  const double unitary_res = max_abs_diff(u * u.adjoint(), MatC2::identity());
  if (unitary_res > tol) {
    throw NotRotationError("su2_params: unitarity residual " + std::to_string(unitary_res));
  }
  const double det_res = std::abs(u.det() - Complex(1.0));
  if (det_res > std::fmax(tol, 1e-8)) {
    throw DetNotOneError("su2_params: determinant residual " + std::to_string(det_res));
  }
  const double c = std::fmin(1.0, std::fmax(-1.0, 0.5 * u.trace().real()));
  // i (u - cos(theta/2) I) = sin(theta/2) m.sigma.
  MatC2 anti = u;
  anti -= Complex(c) * MatC2::identity();
  anti *= kI;
  const Vec3 v = sigma_components(anti);
  const double s = v.norm();
  const double theta = 2.0 * std::acos(c);
  if (s <= 1e-9) return {theta, kUnitZ};
  return {theta, v / s};
}

SpinorPolarFactors polar_decompose_sl2c(const MatC2& l, double tol) {
  validate_spinor(l, tol);
  const MatC2 h = l * l.adjoint();

  SpinorPolarFactors out;
  out.p = sqrt_hermitian2(h);
  out.u = inverse2(out.p) * l;
  out.pprime = out.u.adjoint() * out.p * out.u;
  out.herm = herm_params(out.p);
  out.su2 = su2_params(out.u);

  const double scale = std::fmax(1.0, l.max_abs());
  out.reconstruction_residual =
      std::fmax(max_abs_diff(out.p * out.u, l), max_abs_diff(out.u * out.pprime, l)) / scale;
  if (out.reconstruction_residual > std::fmax(tol, 1e-10)) {
    throw DecompositionResidualError("spinor reconstruction residual " +
                                     std::to_string(out.reconstruction_residual));
  }
  return out;
}

LorentzMat covering_map(const MatC2& l, double tol) {
  if (!l.all_finite()) throw Error("covering_map: matrix has non-finite entries");
  const auto& sigma = pauli_basis();
  const double scale = std::fmax(1.0, l.max_abs() * l.max_abs());
  MatR m(4);
  for (int j = 0; j < 4; ++j) {
    const MatC2 column = l * sigma[static_cast<std::size_t>(j)] * l.adjoint();
    for (int i = 0; i < 4; ++i) {
      const double re = 0.5 * re_trace_product(column, sigma[static_cast<std::size_t>(i)]);
      const double im = 0.5 * im_trace_product(column, sigma[static_cast<std::size_t>(i)]);
      if (std::fabs(im) > 1e-12 * scale) {
        throw Error("covering_map: trace has non-vanishing imaginary part " + std::to_string(im));
      }
      m(i, j) = re;
    }
  }
  return validate_lorentz(m, tol);
}

CoveringCompatibility check_polar_compatibility(const MatC2& l) {
  const SpinorPolarFactors spinor = polar_decompose_sl2c(l);
  const LorentzMat image = covering_map(l);
  const LorentzPolarFactors lorentz = polar_decompose(image);

  // l = p u maps to Pi(p) Pi(u), the boost-on-the-left reading of the
  // image, so Pi(p) matches pprime and Pi(u) matches u.
  CoveringCompatibility rep;
  rep.boost_residual = max_abs_diff(covering_map(spinor.p).m, lorentz.pprime.m);
  rep.rotation_residual = max_abs_diff(covering_map(spinor.u).m, lorentz.u.m);
  return rep;
}

MatC2 random_spinor(SplitMix64& rng) {
  const double chi = rng.uniform(0.0, 2.0);
  const Vec3 n = rng.unit_vector();
  const double theta = rng.uniform(0.0, 6.283185307179586476925286766559);
  const Vec3 m = rng.unit_vector();
  return exp_herm(chi, n) * exp_su2(theta, m);
}

}  // namespace liepolar
