// SPDX-License-Identifier: Apache-2.0
#include "liepolar/verify.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "liepolar/linalg.hpp"
#include "liepolar/lorentz.hpp"
#include "liepolar/pseudo.hpp"
#include "liepolar/rng.hpp"
#include "liepolar/sl2c.hpp"
#include "liepolar/so3.hpp"

namespace liepolar {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Sweep sizes are written for samples == 1000 and scale linearly.
long long scaled(long long base, long long samples) {
  return std::max<long long>(1, (base * samples + 500) / 1000);
}

// Decorrelated per-property stream so properties can be reordered freely.
SplitMix64 stream(std::uint64_t seed, std::uint64_t salt) {
  return SplitMix64(seed + 0x9e3779b97f4a7c15ULL * (salt + 1));
}

class Collector {
 public:
  explicit Collector(SuiteReport& report) : report_(report) {}

  void add(std::string name, long long samples, double max_residual, double tolerance) {
    const bool pass = max_residual <= tolerance;
    report_.properties.push_back({std::move(name), samples, max_residual, tolerance, pass});
  }

 private:
  SuiteReport& report_;
};

int levi_civita(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  // parity of the permutation (i j k) of (0 1 2)
  return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

MatR random_matrix(SplitMix64& rng, int dim, double lo, double hi) {
  MatR m(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = rng.uniform(lo, hi);
  return m;
}

MatR random_rotation(SplitMix64& rng) {
  MatR r = MatR::identity(3);
  for (int k = 0; k < 3; ++k) r = r * exp_so3(rng.uniform(0.0, 2.0 * kPi), rng.unit_vector());
  return r;
}

// ---------------------------------------------------------------------------

void run_linalg(Collector& out, long long samples, std::uint64_t seed) {
  {
    // Rebuilding the root from a reversed eigen-order must give the same root.
    SplitMix64 rng = stream(seed, 101);
    const long long n = scaled(1000, samples);
    double worst = 0.0;
    for (long long i = 0; i < n; ++i) {
      const int dim = 2 + static_cast<int>(i % 3);
      const MatR a = random_matrix(rng, dim, -1.0, 1.0);
      const MatR s = a.transposed() * a;
      const MatR root = sqrt_spd(s);
      const EigDecomp eig = jacobi_eigh(s);
      MatR alt(dim);
      for (int c = dim - 1; c >= 0; --c) {
        const double lambda = std::sqrt(std::fmax(eig.eigenvalues[static_cast<std::size_t>(c)], 0.0));
        for (int r = 0; r < dim; ++r)
          for (int q = 0; q < dim; ++q) alt(r, q) += lambda * eig.basis(r, c) * eig.basis(q, c);
      }
      worst = std::fmax(worst, max_abs_diff(root, alt));
    }
    out.add("spd sqrt unique across eigen orderings", n, worst, 1e-10);
  }
  {
    // Closed-form root of I + B B^t against the eigendecomposition root.
    SplitMix64 rng = stream(seed, 102);
    const long long n = scaled(500, samples);
    const double bmax = std::sinh(5.0);
    double worst = 0.0;
    for (long long i = 0; i < n; ++i) {
      const Vec3 b = rng.uniform(0.0, bmax) * rng.unit_vector();
      const MatR closed = sqrt_boost_closed_form(std::sqrt(1.0 + b.dot(b)), b);
      MatR s = MatR::identity(3);
      const double bv[3] = {b.x, b.y, b.z};
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) s(r, c) += bv[r] * bv[c];
      worst = std::fmax(worst, max_abs_diff(closed, sqrt_spd(s)));
    }
    out.add("closed-form boost-block root matches eigh root", n, worst, 1e-10);
  }
  {
    SplitMix64 rng = stream(seed, 103);
    const long long n = scaled(1000, samples);
    double worst_recon = 0.0;
    double worst_ortho = 0.0;
    double worst_stable = 0.0;
    for (long long i = 0; i < n; ++i) {
      MatR t = random_matrix(rng, 4, -1.0, 1.0);
      while (std::fabs(t.determinant()) < 0.1) t = random_matrix(rng, 4, -1.0, 1.0);
      const PolarFactors f = polar(t);
      const double scale = t.max_abs();
      worst_recon = std::fmax(worst_recon, max_abs_diff(f.u * f.p, t) / scale);
      worst_recon = std::fmax(worst_recon, max_abs_diff(f.pprime * f.u, t) / scale);
      worst_ortho =
          std::fmax(worst_ortho, max_abs_diff(f.u.transposed() * f.u, MatR::identity(4)));
      // Redecomposition is bit-stable and u agrees with t p^{-1} by LU.
      const PolarFactors again = polar(t);
      worst_stable = std::fmax(worst_stable, max_abs_diff(f.u, again.u));
      worst_stable = std::fmax(worst_stable, max_abs_diff(f.p, again.p));
      worst_stable = std::fmax(worst_stable, max_abs_diff(f.u, t * f.p.inverse()));
    }
    out.add("polar reconstruction u p = t and p' u = t", n, worst_recon, 1e-10);
    out.add("polar rotation factor orthogonal", n, worst_ortho, 1e-11);
    out.add("polar factors reproducible, u = t inv(p)", n, worst_stable, 1e-10);
  }
  {
    SplitMix64 rng = stream(seed, 104);
    const long long n = scaled(500, samples);
    double worst = 0.0;
    for (long long i = 0; i < n; ++i) {
      const double theta = rng.uniform(0.0, kPi);
      const Vec3 axis = rng.unit_vector();
      worst = std::fmax(worst, max_abs_diff(expm(theta * so3_hat(axis)), exp_so3(theta, axis)));
    }
    out.add("series exponential matches Rodrigues form", n, worst, 1e-12);
  }
}

void run_so3(Collector& out, long long samples, std::uint64_t seed) {
  {
    const auto& t = rotation_generators();
    double worst = 0.0;
    for (int g = 0; g < 3; ++g)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
          worst = std::fmax(worst, std::fabs(t[static_cast<std::size_t>(g)](j, k) +
                                             levi_civita(g, j, k)));
    out.add("generator entries equal -epsilon_ijk", 1, worst, 0.0);
  }
  {
    SplitMix64 rng = stream(seed, 201);
    const long long n = scaled(1000, samples);
    double worst = 0.0;
    for (long long i = 0; i < n; ++i) {
      // Every 20th sample is a forced half-turn, the degenerate branch.
      const MatR r = (i % 20 == 0) ? exp_so3(kPi, rng.unit_vector()) : random_rotation(rng);
      worst = std::fmax(worst, max_abs_diff(exp_so3(log_so3(r)), r));
    }
    out.add("exp/log round trip over random rotations", n, worst, 1e-9);
  }
  {
    SplitMix64 rng = stream(seed, 202);
    const long long n = scaled(500, samples);
    double worst = 0.0;
    for (long long i = 0; i < n; ++i) {
      const AxisAngle a = make_axis_angle(rng.uniform(0.0, 2.0 * kPi), rng.unit_vector());
      const MatR r = exp_so3(a);
      worst = std::fmax(worst, max_abs_diff(r.transposed() * r, MatR::identity(3)));
      worst = std::fmax(worst, max_abs_diff(r.transposed(), exp_so3(-a.theta, a.axis)));
    }
    out.add("transpose inverts a rotation", n, worst, 1e-12);
  }
  {
    SplitMix64 rng = stream(seed, 203);
    const long long n = scaled(200, samples);
    double worst = 0.0;
    for (long long i = 0; i < n; ++i) {
      worst = std::fmax(worst, conjugation_residual(random_rotation(rng), rng.unit_vector()));
    }
    out.add("conjugation moves the rotation axis", n, worst, 1e-11);
  }
}

void run_lorentz(Collector& out, long long samples, std::uint64_t seed) {
  {
    const auto& k = boost_generators();
    const auto& s = rotation_generators4();
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) {
      worst = std::fmax(worst, max_abs_diff(k[static_cast<std::size_t>(i)],
                                            k[static_cast<std::size_t>(i)].transposed()));
      worst = std::fmax(worst, max_abs_diff(s[static_cast<std::size_t>(i)],
                                            (-1.0) * s[static_cast<std::size_t>(i)].transposed()));
      for (int j = 0; j < 3; ++j) {
        MatR bracket = s[static_cast<std::size_t>(i)] * k[static_cast<std::size_t>(j)] -
                       k[static_cast<std::size_t>(j)] * s[static_cast<std::size_t>(i)];
        for (int l = 0; l < 3; ++l) {
          const int eps = levi_civita(i, j, l);
          if (eps != 0) bracket -= static_cast<double>(eps) * k[static_cast<std::size_t>(l)];
        }
        worst = std::fmax(worst, bracket.max_abs());
      }
    }
    out.add("generator symmetry and [s_i, k_j] brackets", 1, worst, 0.0);
  }
  {
    // cosh(ln 2) = 5/4 and sinh(ln 2) = 3/4.
    const MatR b = boost_matrix(std::log(2.0), kUnitZ).m;
    double worst = std::fabs(b(0, 0) - 1.25);
    worst = std::fmax(worst, std::fabs(b(0, 3) - 0.75));
    worst = std::fmax(worst, std::fabs(b(3, 0) - 0.75));
    worst = std::fmax(worst, std::fabs(b(3, 3) - 1.25));
    MatR rest = b;
    rest(0, 0) = 1.0;
    rest(0, 3) = 0.0;
    rest(3, 0) = 0.0;
    rest(3, 3) = 1.0;
    worst = std::fmax(worst, max_abs_diff(rest, MatR::identity(4)));
    out.add("boost spot values at chi = ln 2", 1, worst, 1e-14);
  }
  {
    SplitMix64 rng = stream(seed, 301);
    const long long n = scaled(200, samples);
    const auto& k = boost_generators();
    const auto& s = rotation_generators4();
    double worst = 0.0;
    for (long long i = 0; i < n; ++i) {
      const double chi = rng.uniform(0.0, 3.0);
      const Vec3 axis = rng.unit_vector();
      MatR xk(4);
      MatR xs(4);
      const double nv[3] = {axis.x, axis.y, axis.z};
      for (std::size_t g = 0; g < 3; ++g) {
        xk += (chi * nv[g]) * k[g];
      }
      const double theta = rng.uniform(0.0, kPi);
      const Vec3 maxis = rng.unit_vector();
      const double mv[3] = {maxis.x, maxis.y, maxis.z};
      for (std::size_t g = 0; g < 3; ++g) xs += (theta * mv[g]) * s[g];
      worst = std::fmax(worst, max_abs_diff(boost_matrix(chi, axis).m, expm(xk)));
      worst = std::fmax(worst, max_abs_diff(rotation_matrix4(theta, maxis).m, expm(xs)));
    }
    out.add("boost/rotation builders match series exponential", n, worst, 1e-12);
  }
  {
    SplitMix64 rng = stream(seed, 302);
    const long long n = scaled(2000, samples);
    double worst_elem = 0.0;
    double worst_member = 0.0;
    double worst_structure = 0.0;
    double worst_recon = 0.0;
    double worst_eta = 0.0;
    for (long long i = 0; i < n; ++i) {
      const LorentzMat lam = random_lorentz(rng);
      worst_elem = std::fmax(worst_elem, std::fmax(lam.residuals.metric,
                                                   std::fmax(lam.residuals.det,
                                                             lam.residuals.orientation)));
      const LorentzPolarFactors f = polar_decompose(lam);
      for (const LorentzMat* fac : {&f.u, &f.p, &f.pprime}) {
        worst_member = std::fmax(worst_member,
                                 std::fmax(fac->residuals.metric,
                                           std::fmax(fac->residuals.det,
                                                     fac->residuals.orientation)));
      }
      // Boost structure of p and p', block-diagonal rotation structure of u.
      worst_structure =
          std::fmax(worst_structure, max_abs_diff(boost_matrix(f.boost).m, f.p.m));
      const BoostParams bp2 = boost_params(f.pprime.m);
      worst_structure =
          std::fmax(worst_structure, max_abs_diff(boost_matrix(bp2).m, f.pprime.m));
      double block = std::fabs(f.u.m(0, 0) - 1.0);
      for (int c = 1; c < 4; ++c) {
        block = std::fmax(block, std::fabs(f.u.m(0, c)));
        block = std::fmax(block, std::fabs(f.u.m(c, 0)));
      }
      worst_structure = std::fmax(worst_structure, block);
      worst_structure =
          std::fmax(worst_structure, max_abs_diff(rotation_matrix4(f.rotation).m, f.u.m));
      worst_recon = std::fmax(worst_recon, f.reconstruction_residual);
      // eta p eta must invert p from both sides; u must commute with eta.
      const MatR& eta = minkowski_metric();
      const MatR p_inv_group = eta * f.p.m * eta;
      worst_eta = std::fmax(worst_eta, max_abs_diff(p_inv_group * f.p.m, MatR::identity(4)));
      worst_eta = std::fmax(worst_eta, max_abs_diff(f.p.m * p_inv_group, MatR::identity(4)));
      worst_eta = std::fmax(worst_eta, max_abs_diff(f.u.m * eta, eta * f.u.m));
    }
    out.add("random group elements validate", n, worst_elem, 1e-10);
    out.add("polar factors stay in the group", n, worst_member, 1e-9);
    out.add("polar factors are a boost pair and a rotation", n, worst_structure, 1e-9);
    out.add("polar reconstruction residual", n, worst_recon, 1e-9);
    out.add("boost inverse is eta p eta; rotation commutes with eta", n, worst_eta, 1e-10);
  }
  {
    SplitMix64 rng = stream(seed, 303);
    const long long n = scaled(500, samples);
    double worst_chi = 0.0;
    double worst_axis = 0.0;
    double worst_theta = 0.0;
    for (long long i = 0; i < n; ++i) {
      const double chi = rng.uniform(0.1, 3.0);
      const Vec3 naxis = rng.unit_vector();
      const double theta = rng.uniform(0.1, kPi - 0.1);
      const Vec3 maxis = rng.unit_vector();
      const LorentzMat rot = rotation_matrix4(theta, maxis);
      const LorentzMat boo = boost_matrix(chi, naxis);
      // rot * boo reads as u p: the typed factors come back unchanged.
      const LorentzPolarFactors f1 =
          polar_decompose(validate_lorentz(rot.m * boo.m, kDefaultTol));
      worst_chi = std::fmax(worst_chi, std::fabs(f1.boost.chi - chi));
      worst_axis = std::fmax(worst_axis, angle_between(f1.boost.axis, naxis));
      worst_theta = std::fmax(worst_theta, std::fabs(f1.rotation.theta - theta));
      worst_axis = std::fmax(worst_axis, angle_between(f1.rotation.axis, maxis));
      // boo * rot reads as p' u: the boost comes back as pprime.
      const LorentzPolarFactors f2 =
          polar_decompose(validate_lorentz(boo.m * rot.m, kDefaultTol));
      const BoostParams left = boost_params(f2.pprime.m);
      worst_chi = std::fmax(worst_chi, std::fabs(left.chi - chi));
      worst_axis = std::fmax(worst_axis, angle_between(left.axis, naxis));
      worst_theta = std::fmax(worst_theta, std::fabs(f2.rotation.theta - theta));
    }
    out.add("compose/decompose recovers rapidity", n, worst_chi, 1e-9);
    out.add("compose/decompose recovers axes (angular)", n, worst_axis, 1e-8);
    out.add("compose/decompose recovers rotation angle", n, worst_theta, 1e-9);
  }
  {
    // Degenerate angles, checked against canonical expectations at the
    // matrix level: pure boosts (theta = 0), half-turns (theta = pi) and
    // pure rotations (chi = 0).
    SplitMix64 rng = stream(seed, 304);
    const long long n = scaled(40, samples);
    double worst = 0.0;
    for (long long i = 0; i < n; ++i) {
      const double chi = rng.uniform(0.5, 2.0);
      const Vec3 naxis = rng.unit_vector();
      const Vec3 maxis = rng.unit_vector();
      if (i % 3 == 0) {
        const LorentzPolarFactors f = polar_decompose(boost_matrix(chi, naxis));
        worst = std::fmax(worst, max_abs_diff(f.u.m, MatR::identity(4)));
        worst = std::fmax(worst, std::fabs(f.rotation.theta));
        worst = std::fmax(worst, std::fabs(f.boost.chi - chi));
      } else if (i % 3 == 1) {
        const LorentzMat rot = rotation_matrix4(kPi, maxis);
        const LorentzMat boo = boost_matrix(chi, naxis);
        const LorentzPolarFactors f =
            polar_decompose(validate_lorentz(rot.m * boo.m, kDefaultTol));
        worst = std::fmax(worst, max_abs_diff(exp_so3(f.rotation), exp_so3(kPi, maxis)));
        worst = std::fmax(worst, std::fabs(f.rotation.theta - kPi));
        worst = std::fmax(worst, std::fabs(f.boost.chi - chi));
      } else {
        const LorentzPolarFactors f =
            polar_decompose(rotation_matrix4(rng.uniform(0.1, kPi - 0.1), maxis));
        worst = std::fmax(worst, max_abs_diff(f.p.m, MatR::identity(4)));
        worst = std::fmax(worst, std::fabs(f.boost.chi));
      }
    }
    out.add("degenerate-angle decompositions are canonical", n, worst, 1e-9);
  }
  {
    SplitMix64 rng = stream(seed, 305);
    const long long n = scaled(300, samples);
    double worst = 0.0;
    for (long long i = 0; i < n; ++i) {
      const AxisAngle a = make_axis_angle(rng.uniform(0.0, 2.0 * kPi), rng.unit_vector());
      const BoostParams b = make_boost_params(rng.uniform(0.0, 3.0), rng.unit_vector());
      const MatR rot = rotation_matrix4(a).m;
      const MatR lhs = conjugate_boost(a, b).m;
      const MatR rhs = rot * boost_matrix(b).m * rot.transposed();
      worst = std::fmax(worst, max_abs_diff(lhs, rhs));
    }
    out.add("rotating a boost rotates its axis", n, worst, 1e-11);
  }
}

void run_sl2c(Collector& out, long long samples, std::uint64_t seed) {
  {
    const auto& sigma = pauli_basis();
    double worst = 0.0;
    for (int i = 1; i < 4; ++i) {
      const MatC2& s = sigma[static_cast<std::size_t>(i)];
      worst = std::fmax(worst, max_abs_diff(s, s.adjoint()));
      worst = std::fmax(worst, max_abs_diff(s * s, MatC2::identity()));
      worst = std::fmax(worst, std::abs(s.trace()));
    }
    out.add("pauli matrices hermitian, squares, traceless", 1, worst, 0.0);
  }
  {
    const MatC2 p = exp_herm(2.0 * std::log(2.0), kUnitZ);
    MatC2 expected;
    expected.a = {Complex(2.0), Complex(0.0), Complex(0.0), Complex(0.5)};
    out.add("hermitian exponential spot value diag(2, 1/2)", 1, max_abs_diff(p, expected), 1e-14);
  }
  {
    SplitMix64 rng = stream(seed, 401);
    const long long n = scaled(500, samples);
    double worst = 0.0;
    for (long long i = 0; i < n; ++i) {
      const MatC2 l1 = random_spinor(rng);
      const MatC2 l2 = random_spinor(rng);
      worst = std::fmax(worst,
                        max_abs_diff(covering_map(l1 * l2).m, covering_map(l1).m * covering_map(l2).m));
    }
    out.add("covering map is a homomorphism", n, worst, 1e-10);
  }
  {
    SplitMix64 rng = stream(seed, 402);
    const long long n = scaled(200, samples);
    double worst = 0.0;
    for (long long i = 0; i < n; ++i) {
      const MatC2 l = random_spinor(rng);
      MatC2 neg = l;
      neg *= Complex(-1.0);
      worst = std::fmax(worst, max_abs_diff(covering_map(l).m, covering_map(neg).m));
      const double theta = rng.uniform(0.0, 2.0 * kPi);
      const Vec3 axis = rng.unit_vector();
      MatC2 flipped = exp_su2(theta, axis);
      flipped *= Complex(-1.0);
      worst = std::fmax(worst, max_abs_diff(exp_su2(theta + 2.0 * kPi, axis), flipped));
    }
    out.add("kernel is {I, -I}: Pi(l) = Pi(-l), su2 period 4 pi", n, worst, 1e-12);
  }
  {
    SplitMix64 rng = stream(seed, 403);
    const long long n = scaled(200, samples);
    double worst = 0.0;
    for (long long i = 0; i < n; ++i) {
      const double chi = rng.uniform(0.0, 3.0);
      const Vec3 axis = rng.unit_vector();
      worst = std::fmax(worst,
                        max_abs_diff(covering_map(exp_herm(chi, axis)).m, boost_matrix(chi, axis).m));
    }
    out.add("hermitian exponentials cover boosts", n, worst, 1e-10);
  }
  {
    // The realized sign: exp_su2(theta, m) covers the spatial rotation by
    // +theta about m. Comparing against that fixed sign across the sweep
    // asserts the sign never flips.
    SplitMix64 rng = stream(seed, 404);
    const long long n = scaled(200, samples);
    double worst = 0.0;
    for (long long i = 0; i < n; ++i) {
      const double theta = rng.uniform(0.0, 2.0 * kPi);
      const Vec3 axis = rng.unit_vector();
      const MatR image = covering_map(exp_su2(theta, axis)).m;
      worst = std::fmax(worst, max_abs_diff(image, rotation_matrix4(theta, axis).m));
    }
    out.add("unitary exponentials cover rotations by +theta", n, worst, 1e-10);
  }
  {
    SplitMix64 rng = stream(seed, 405);
    const long long n = scaled(1000, samples);
    double worst_compat = 0.0;
    double worst_det = 0.0;
    for (long long i = 0; i < n; ++i) {
      const MatC2 l = random_spinor(rng);
      const CoveringCompatibility rep = check_polar_compatibility(l);
      worst_compat = std::fmax(worst_compat, std::fmax(rep.boost_residual, rep.rotation_residual));
      const SpinorPolarFactors f = polar_decompose_sl2c(l);
      for (const MatC2* fac : {&f.p, &f.u, &f.pprime}) {
        worst_det = std::fmax(worst_det, std::abs(fac->det() - Complex(1.0)));
      }
    }
    out.add("covering map preserves polar factors", n, worst_compat, 1e-9);
    out.add("spinor polar factors keep det 1", n, worst_det, 1e-10);
  }
}

void run_pseudo(Collector& out, long long samples, std::uint64_t seed) {
  const std::vector<std::vector<int>> signatures = {
      {-1, 1, 1, 1}, {-1, -1, 1, 1, 1}, {-1, 1, 1, 1, 1, 1}, {-1, -1, -1, 1, 1, 1}};
  std::uint64_t salt = 501;
  for (const auto& signs : signatures) {
    const Signature sig = make_signature(signs);
    SplitMix64 rng = stream(seed, salt++);
    const long long n = scaled(500, samples);
    double worst = 0.0;
    for (long long i = 0; i < n; ++i) {
      const MatR g = random_ge(sig, rng);
      worst = std::fmax(worst, ge_residual(g, sig));
      const GEPolarFactors f = polar_decompose_ge(g, sig);
      worst = std::fmax(worst, f.membership_residual);
      worst = std::fmax(worst, f.commutation_residual);
      // u splits into one orthogonal block per sign class.
      for (int r = 0; r < sig.dim; ++r)
        for (int c = 0; c < sig.dim; ++c)
          if (signs[static_cast<std::size_t>(r)] != signs[static_cast<std::size_t>(c)])
            worst = std::fmax(worst, std::fabs(f.u(r, c)));
    }
    std::string label = "polar factors stay in G_E, signature ";
    for (int s : signs) label += (s < 0 ? '-' : '+');
    out.add(std::move(label), n, worst, 1e-9);
  }
  {
    // Same factors as the dedicated Minkowski decomposition.
    const Signature sig = make_signature({-1, 1, 1, 1});
    SplitMix64 rng = stream(seed, 510);
    const long long n = scaled(100, samples);
    double worst = 0.0;
    for (long long i = 0; i < n; ++i) {
      const MatR g = random_ge(sig, rng);
      const GEPolarFactors fg = polar_decompose_ge(g, sig);
      const LorentzPolarFactors fl = polar_decompose(validate_lorentz(g, 1e-8));
      worst = std::fmax(worst, max_abs_diff(fg.u, fl.u.m));
      worst = std::fmax(worst, max_abs_diff(fg.p, fl.p.m));
      worst = std::fmax(worst, max_abs_diff(fg.pprime, fl.pprime.m));
    }
    out.add("signature -+++ matches the Minkowski decomposition", n, worst, 1e-10);
  }
}

}  // namespace

std::optional<Suite> suite_from_name(std::string_view name) {
  if (name == "all") return Suite::All;
  if (name == "linalg") return Suite::Linalg;
  if (name == "so3") return Suite::So3;
  if (name == "lorentz") return Suite::Lorentz;
  if (name == "sl2c") return Suite::Sl2c;
  if (name == "pseudo") return Suite::Pseudo;
  return std::nullopt;
}

const char* suite_name(Suite s) {
  switch (s) {
    case Suite::All: return "all";
    case Suite::Linalg: return "linalg";
    case Suite::So3: return "so3";
    case Suite::Lorentz: return "lorentz";
    case Suite::Sl2c: return "sl2c";
    case Suite::Pseudo: return "pseudo";
  }
  return "?";
}

bool SuiteReport::all_pass() const {
  for (const PropertyResult& p : properties)
    if (!p.pass) return false;
  return true;
}

SuiteReport run_suite(Suite suite, long long samples, std::uint64_t seed) {
  if (samples < 1) throw Error("run_suite: samples must be >= 1");
  SuiteReport report;
  Collector out(report);
  if (suite == Suite::All || suite == Suite::Linalg) run_linalg(out, samples, seed);
  if (suite == Suite::All || suite == Suite::So3) run_so3(out, samples, seed);
  if (suite == Suite::All || suite == Suite::Lorentz) run_lorentz(out, samples, seed);
  if (suite == Suite::All || suite == Suite::Sl2c) run_sl2c(out, samples, seed);
  if (suite == Suite::All || suite == Suite::Pseudo) run_pseudo(out, samples, seed);
  return report;
}

void print_report(const SuiteReport& report, std::ostream& os) {
  char line[160];
  std::snprintf(line, sizeof(line), "%-56s %8s %14s %12s %7s", "property", "samples",
                "max residual", "tolerance", "result");
  os << line << "\n";
  for (const PropertyResult& p : report.properties) {
    std::snprintf(line, sizeof(line), "%-56s %8lld %14.3e %12.1e %7s", p.name.c_str(), p.samples,
                  p.max_residual, p.tolerance, p.pass ? "pass" : "FAIL");
    os << line << "\n";
  }
  os << "overall: " << (report.all_pass() ? "PASS" : "FAIL") << " ("
     << report.properties.size() << " properties)\n";
}

}  // namespace liepolar
