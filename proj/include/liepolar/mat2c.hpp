// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "liepolar/errors.hpp"

namespace liepolar {

using Complex = std::complex<double>;

/// 2x2 complex matrix, row-major. Hosts SL(2,C) elements and Hermitian blocks.
struct MatC2 {
  std::array<Complex, 4> a{};

  static MatC2 identity() {
    MatC2 m;
    m.a = {Complex(1.0), Complex(0.0), Complex(0.0), Complex(1.0)};
    return m;
  }

  Complex& operator()(int i, int j) { return a[static_cast<std::size_t>(2 * i + j)]; }
  Complex operator()(int i, int j) const { return a[static_cast<std::size_t>(2 * i + j)]; }

  MatC2 adjoint() const {
    MatC2 m;
    m.a = {std::conj(a[0]), std::conj(a[2]), std::conj(a[1]), std::conj(a[3])};
    return m;
  }

  Complex det() const { return a[0] * a[3] - a[1] * a[2]; }
  Complex trace() const { return a[0] + a[3]; }

  double max_abs() const {
    double m = 0.0;
    for (const Complex& v : a) m = std::fmax(m, std::abs(v));
    return m;
  }

  bool all_finite() const {
    for (const Complex& v : a)
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
  }

  MatC2& operator+=(const MatC2& o) {
    for (std::size_t i = 0; i < 4; ++i) a[i] += o.a[i];
    return *this;
  }
  MatC2& operator-=(const MatC2& o) {
    for (std::size_t i = 0; i < 4; ++i) a[i] -= o.a[i];
    return *this;
  }
  MatC2& operator*=(Complex s) {
    for (Complex& v : a) v *= s;
    return *this;
  }
};

inline MatC2 operator+(MatC2 a, const MatC2& b) { return a += b; }
inline MatC2 operator-(MatC2 a, const MatC2& b) { return a -= b; }

inline MatC2 operator*(const MatC2& x, const MatC2& y) {
  MatC2 m;
  m.a = {x.a[0] * y.a[0] + x.a[1] * y.a[2], x.a[0] * y.a[1] + x.a[1] * y.a[3],
         x.a[2] * y.a[0] + x.a[3] * y.a[2], x.a[2] * y.a[1] + x.a[3] * y.a[3]};
  return m;
}

inline MatC2 operator*(Complex s, MatC2 m) { return m *= s; }
inline MatC2 operator*(MatC2 m, Complex s) { return m *= s; }
inline MatC2 operator*(double s, MatC2 m) { return m *= Complex(s); }
inline MatC2 operator*(MatC2 m, double s) { return m *= Complex(s); }

inline double max_abs_diff(const MatC2& x, const MatC2& y) {
  double m = 0.0;
  for (std::size_t i = 0; i < 4; ++i) m = std::fmax(m, std::abs(x.a[i] - y.a[i]));
  return m;
}

/// Inverse via the adjugate; throws SingularError when det is numerically zero.
inline MatC2 inverse2(const MatC2& m) {
  const Complex d = m.det();
  if (std::abs(d) < 1e-300) throw SingularError("2x2 matrix is singular to working precision");
  MatC2 inv;
  inv.a = {m.a[3] / d, -m.a[1] / d, -m.a[2] / d, m.a[0] / d};
  return inv;
}

}  // namespace liepolar
