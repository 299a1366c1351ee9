// SPDX-License-Identifier: Apache-2.0
#include "liepolar/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace liepolar {

namespace {

constexpr int kMaxSweeps = 100;

double scale_of(const MatR& m) { return std::fmax(1.0, m.max_abs()); }

void require_symmetric(const MatR& s, double tol, const char* who) {
  double asym = 0.0;
  for (int i = 0; i < s.dim(); ++i)
    for (int j = i + 1; j < s.dim(); ++j) asym = std::fmax(asym, std::fabs(s(i, j) - s(j, i)));
  if (asym > tol * scale_of(s)) {
    throw NotSymmetricError(std::string(who) + ": asymmetry " + std::to_string(asym) +
                            " exceeds tolerance");
  }
}

// One Jacobi rotation zeroing a(p,q); accumulates the basis in v.
void jacobi_rotate(MatR& a, MatR& v, int p, int q) {
  const double apq = a(p, q);
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  double t;
  if (std::fabs(theta) > 1e150) {
    t = 1.0 / (2.0 * theta);
  } else {
    t = 1.0 / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
    if (theta < 0.0) t = -t;
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const int n = a.dim();

  const double app = a(p, p);
  const double aqq = a(q, q);
  a(p, p) = app - t * apq;
  a(q, q) = aqq + t * apq;
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  for (int i = 0; i < n; ++i) {
    if (i == p || i == q) continue;
    const double aip = a(i, p);
    const double aiq = a(i, q);
    a(i, p) = c * aip - s * aiq;
    a(p, i) = a(i, p);
    a(i, q) = s * aip + c * aiq;
    a(q, i) = a(i, q);
  }
  for (int i = 0; i < n; ++i) {
    const double vip = v(i, p);
    const double viq = v(i, q);
    v(i, p) = c * vip - s * viq;
    v(i, q) = s * vip + c * viq;
  }
}

// Max column absolute sum; submultiplicative, so scaling to 0.5 keeps
// every series term below 0.5^k / k! and the sum cancellation-free.
double one_norm(const MatR& m) {
  double worst = 0.0;
  for (int j = 0; j < m.dim(); ++j) {
    double col = 0.0;
    for (int i = 0; i < m.dim(); ++i) col += std::fabs(m(i, j));
    worst = std::fmax(worst, col);
  }
  return worst;
}

double one_norm(const MatC2& m) {
  return std::fmax(std::abs(m(0, 0)) + std::abs(m(1, 0)), std::abs(m(0, 1)) + std::abs(m(1, 1)));
}

template <typename M>
M expm_series(const M& y, const M& one) {
  M result = one;
  M term = one;
  for (int k = 1; k <= 64; ++k) {
    term = term * y;
    term *= 1.0 / static_cast<double>(k);
    result += term;
    if (term.max_abs() <= 5e-17 * std::fmax(1.0, result.max_abs())) break;
  }
  return result;
}

template <typename M>
M expm_impl(const M& x, const M& one) {
  int squarings = 0;
  const double norm = one_norm(x);
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  M y = x;
  y *= std::ldexp(1.0, -squarings);
  M result = expm_series(y, one);
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

}  // namespace

EigDecomp jacobi_eigh(const MatR& s, double tol) {
  require_symmetric(s, tol, "jacobi_eigh");
  const int n = s.dim();

  // Work on the exactly symmetric average.
  MatR a(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = 0.5 * (s(i, j) + s(j, i));
  MatR v = MatR::identity(n);

  const double threshold = std::numeric_limits<double>::epsilon() * scale_of(a);
  bool converged = (n == 1);
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    bool rotated = false;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (std::fabs(a(p, q)) > threshold) {
          jacobi_rotate(a, v, p, q);
          rotated = true;
        }
      }
    }
    if (!rotated) converged = true;
  }
  if (!converged) throw NoConvergenceError("jacobi_eigh: no convergence after 100 sweeps");

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return a(i, i) < a(j, j); });

  EigDecomp out{std::vector<double>(static_cast<std::size_t>(n)), MatR(n)};
  for (int j = 0; j < n; ++j) {
    const int src = order[static_cast<std::size_t>(j)];
    out.eigenvalues[static_cast<std::size_t>(j)] = a(src, src);
    for (int i = 0; i < n; ++i) out.basis(i, j) = v(i, src);
  }
  return out;
}

MatR sqrt_spd(const MatR& s, double tol) {
  EigDecomp eig = jacobi_eigh(s, tol);
  const double floor_val = -tol * scale_of(s);
  for (double& lambda : eig.eigenvalues) {
    if (lambda < floor_val) {
      throw NegativeEigenvalueError("sqrt_spd: eigenvalue " + std::to_string(lambda) +
                                    " is negative beyond tolerance");
    }
    lambda = std::sqrt(std::fmax(lambda, 0.0));
  }
  const int n = s.dim();
  MatR r(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      double acc = 0.0;
      for (int k = 0; k < n; ++k)
        acc += eig.basis(i, k) * eig.eigenvalues[static_cast<std::size_t>(k)] * eig.basis(j, k);
      r(i, j) = acc;
      r(j, i) = acc;
    }
  }
  return r;
}

MatR sqrt_boost_closed_form(double g, const Vec3& b) {
  const double g_check = std::sqrt(1.0 + b.dot(b));
  if (std::fabs(g - g_check) > 1e-12 * std::fmax(1.0, g_check)) {
    throw InconsistentGammaError("sqrt_boost_closed_form: g = " + std::to_string(g) +
                                 " disagrees with sqrt(1 + b.b) = " + std::to_string(g_check));
  }
  MatR a = MatR::identity(3);
  const double f = 1.0 / (1.0 + g_check);
  const double bv[3] = {b.x, b.y, b.z};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a(i, j) += f * bv[i] * bv[j];
  return a;
}

MatR expm(const MatR& x) { return expm_impl(x, MatR::identity(x.dim())); }
MatC2 expm(const MatC2& x) { return expm_impl(x, MatC2::identity()); }

PolarFactors polar(const MatR& t, double tol) {
  const double det = t.determinant();
  if (std::fabs(det) <= tol) {
    throw SingularError("polar: |det| = " + std::to_string(std::fabs(det)) +
                        " is at or below tolerance");
  }
  const int n = t.dim();
  const MatR s = t.transposed() * t;
  EigDecomp eig = jacobi_eigh(s, tol);

  std::vector<double> root(eig.eigenvalues.size());
  std::vector<double> inv_root(eig.eigenvalues.size());
  for (std::size_t k = 0; k < eig.eigenvalues.size(); ++k) {
    const double lambda = std::fmax(eig.eigenvalues[k], 0.0);
    root[k] = std::sqrt(lambda);
    if (root[k] <= 0.0) throw SingularError("polar: vanishing singular value");
    inv_root[k] = 1.0 / root[k];
  }

  MatR p(n);
  MatR p_inv(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      double acc = 0.0;
      double acc_inv = 0.0;
      for (int k = 0; k < n; ++k) {
        const double w = eig.basis(i, k) * eig.basis(j, k);
        acc += w * root[static_cast<std::size_t>(k)];
        acc_inv += w * inv_root[static_cast<std::size_t>(k)];
      }
      p(i, j) = acc;
      p(j, i) = acc;
      p_inv(i, j) = acc_inv;
      p_inv(j, i) = acc_inv;
    }
  }

  PolarFactors out{t * p_inv, p, MatR(n)};
  out.pprime = out.u * p * out.u.transposed();
  return out;
}

}  // namespace liepolar
