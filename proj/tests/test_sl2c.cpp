// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include "doctest.h"

#include "liepolar/lorentz.hpp"
#include "liepolar/rng.hpp"
#include "liepolar/sl2c.hpp"

using namespace liepolar;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

MatC2 herm_generator(double chi, const Vec3& n) {
  MatC2 x = pauli_dot(n);
  x *= Complex(0.5 * chi);
  return x;
}

MatC2 su2_generator(double theta, const Vec3& m) {
  MatC2 x = pauli_dot(m);
  x *= Complex(0.0, -0.5 * theta);
  return x;
}
}  // namespace

TEST_CASE("pauli basis: hermitian, involutive, traceless") {
  const auto& sigma = pauli_basis();
  CHECK(max_abs_diff(sigma[0], MatC2::identity()) == 0.0);
  for (int i = 1; i < 4; ++i) {
    const MatC2& s = sigma[static_cast<std::size_t>(i)];
    CHECK(max_abs_diff(s, s.adjoint()) == 0.0);
    CHECK(max_abs_diff(s * s, MatC2::identity()) == 0.0);
    CHECK(std::abs(s.trace()) == 0.0);
  }
  // sigma1 sigma2 = i sigma3.
  MatC2 expected = sigma[3];
  expected *= Complex(0.0, 1.0);
  CHECK(max_abs_diff(sigma[1] * sigma[2], expected) == 0.0);
}

TEST_CASE("exp_herm: identity, diagonal spot value, series oracle") {
  CHECK(max_abs_diff(exp_herm(0.0, kUnitX), MatC2::identity()) == 0.0);

  const MatC2 p = exp_herm(2.0 * std::log(2.0), kUnitZ);
  CHECK(p(0, 0).real() == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(p(1, 1).real() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(std::abs(p(0, 1)) == 0.0);
  CHECK(std::abs(p.det() - Complex(1.0)) < 1e-15);

  const Vec3 n = Vec3{1.0, 1.0, 1.0}.normalized();
  CHECK(max_abs_diff(exp_herm(1.0, n), expm(herm_generator(1.0, n))) < 1e-13);
}

TEST_CASE("exp_su2: identity, the -I point, quarter/half turns") {
  CHECK(max_abs_diff(exp_su2(0.0, kUnitY), MatC2::identity()) == 0.0);

  // One full turn downstairs is -I upstairs: the double-cover hallmark.
  MatC2 minus_one = MatC2::identity();
  minus_one *= Complex(-1.0);
  CHECK(max_abs_diff(exp_su2(2.0 * kPi, kUnitX), minus_one) < 1e-15);

  // theta = pi about e2: -i sigma2 = [[0,-1],[1,0]].
  const MatC2 u = exp_su2(kPi, kUnitY);
  CHECK(std::abs(u(0, 0)) < 1e-16);
  CHECK(u(0, 1).real() == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(u(1, 0).real() == doctest::Approx(1.0).epsilon(1e-15));

  const Vec3 m = Vec3{2.0, -1.0, 2.0}.normalized();
  CHECK(max_abs_diff(exp_su2(1.3, m), expm(su2_generator(1.3, m))) < 1e-13);
}

TEST_CASE("validate_spinor enforces det 1") {
  CHECK_NOTHROW(validate_spinor(exp_herm(1.0, kUnitZ)));
  MatC2 bad = MatC2::identity();
  bad(0, 0) = Complex(2.0);
  CHECK_THROWS_AS(validate_spinor(bad), DetNotOneError);
}

TEST_CASE("polar_decompose_sl2c: identity and hermitian fixed points") {
  const SpinorPolarFactors fi = polar_decompose_sl2c(MatC2::identity());
  CHECK(max_abs_diff(fi.p, MatC2::identity()) == 0.0);
  CHECK(max_abs_diff(fi.u, MatC2::identity()) == 0.0);
  CHECK(fi.herm.chi == 0.0);
  CHECK(fi.su2.theta == 0.0);

  // Uniqueness forces u = I on a Hermitian positive element.
  const MatC2 l = exp_herm(1.4, kUnitX);
  const SpinorPolarFactors f = polar_decompose_sl2c(l);
  CHECK(max_abs_diff(f.u, MatC2::identity()) < 1e-14);
  CHECK(max_abs_diff(f.p, l) < 1e-14);
  CHECK(f.herm.chi == doctest::Approx(1.4).epsilon(1e-13));
}

TEST_CASE("polar_decompose_sl2c: recovers both exponents, seed 5") {
  SplitMix64 rng(5);
  const Vec3 n = rng.unit_vector();
  const Vec3 m = rng.unit_vector();
  const MatC2 l = exp_herm(0.8, n) * exp_su2(1.9, m);
  const SpinorPolarFactors f = polar_decompose_sl2c(l);
  CHECK(f.herm.chi == doctest::Approx(0.8).epsilon(1e-12));
  CHECK((f.herm.axis - n).norm() < 1e-12);
  CHECK(f.su2.theta == doctest::Approx(1.9).epsilon(1e-12));
  CHECK((f.su2.axis - m).norm() < 1e-12);
  CHECK(std::abs(f.p.det() - Complex(1.0)) < 1e-12);
  CHECK(std::abs(f.u.det() - Complex(1.0)) < 1e-12);
  CHECK(max_abs_diff(f.p * f.u, l) < 1e-14);
  CHECK(max_abs_diff(f.u * f.pprime, l) < 1e-14);
}

TEST_CASE("sqrt_hermitian2 matches the series route") {
  SplitMix64 rng(23);
  for (int i = 0; i < 50; ++i) {
    const double chi = rng.uniform(0.0, 3.0);
    const Vec3 n = rng.unit_vector();
    // sqrt of exp_herm(2 chi) is exp_herm(chi).
    CHECK(max_abs_diff(sqrt_hermitian2(exp_herm(2.0 * chi, n)), exp_herm(chi, n)) < 1e-13);
  }
}

TEST_CASE("covering_map: kernel and the boost correspondence") {
  CHECK(max_abs_diff(covering_map(MatC2::identity()).m, MatR::identity(4)) == 0.0);

  MatC2 minus_one = MatC2::identity();
  minus_one *= Complex(-1.0);
  CHECK(max_abs_diff(covering_map(minus_one).m, MatR::identity(4)) == 0.0);

  // Hermitian exponentials map onto boosts with the same rapidity and axis.
  CHECK(max_abs_diff(covering_map(exp_herm(0.6, kUnitZ)).m, boost_matrix(0.6, kUnitZ).m) <
        1e-14);

  // diag(2, 1/2) is exp_herm(2 ln 2, e3).
  const MatR image = covering_map(exp_herm(2.0 * std::log(2.0), kUnitZ)).m;
  CHECK(image(0, 0) == doctest::Approx(std::cosh(2.0 * std::log(2.0))).epsilon(1e-15));
}

TEST_CASE("covering_map: unitary exponentials land on +theta rotations") {
  SplitMix64 rng(31);
  for (int i = 0; i < 25; ++i) {
    const double theta = rng.uniform(0.0, 2.0 * kPi);
    const Vec3 m = rng.unit_vector();
    CHECK(max_abs_diff(covering_map(exp_su2(theta, m)).m, rotation_matrix4(theta, m).m) < 1e-13);
  }
}

TEST_CASE("covering_map is a homomorphism on a small sweep") {
  SplitMix64 rng(13);
  for (int i = 0; i < 50; ++i) {
    const MatC2 l1 = random_spinor(rng);
    const MatC2 l2 = random_spinor(rng);
    CHECK(max_abs_diff(covering_map(l1 * l2).m, covering_map(l1).m * covering_map(l2).m) <
          1e-11);
  }
}

TEST_CASE("check_polar_compatibility: trivial, rotation-only, and random cases") {
  const CoveringCompatibility at_identity = check_polar_compatibility(MatC2::identity());
  CHECK(at_identity.boost_residual == 0.0);
  CHECK(at_identity.rotation_residual == 0.0);

  // A pure SU(2) element maps to a pure rotation; the boost legs compare I to I.
  const CoveringCompatibility rot_only = check_polar_compatibility(exp_su2(1.0, kUnitX));
  CHECK(rot_only.boost_residual < 1e-12);
  CHECK(rot_only.rotation_residual < 1e-12);

  SplitMix64 rng(19);
  for (int i = 0; i < 50; ++i) {
    const CoveringCompatibility rep = check_polar_compatibility(random_spinor(rng));
    CHECK(rep.boost_residual < 1e-9);
    CHECK(rep.rotation_residual < 1e-9);
  }
}
