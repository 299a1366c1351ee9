// SPDX-License-Identifier: Apache-2.0
// Test-only oracles, independent of the library paths they check.
#pragma once

#include <cmath>
#include <utility>

#include "liepolar/matrix.hpp"

namespace oracles {

// Closed-form eigenpairs of a symmetric 2x2 matrix, ascending.
// Straight from the characteristic polynomial.
struct Eig2 {
  double lo = 0.0;
  double hi = 0.0;
  liepolar::Vec3 lo_vec;  // z unused
  liepolar::Vec3 hi_vec;
};

inline Eig2 eig_sym2(double a, double b, double d) {
  const double mean = 0.5 * (a + d);
  const double disc = std::sqrt(0.25 * (a - d) * (a - d) + b * b);
  Eig2 out;
  out.lo = mean - disc;
  out.hi = mean + disc;
  if (b == 0.0) {
    const bool a_low = a <= d;
    out.lo_vec = a_low ? liepolar::Vec3{1, 0, 0} : liepolar::Vec3{0, 1, 0};
    out.hi_vec = a_low ? liepolar::Vec3{0, 1, 0} : liepolar::Vec3{1, 0, 0};
  } else {
    liepolar::Vec3 lo{b, out.lo - a, 0};
    liepolar::Vec3 hi{b, out.hi - a, 0};
    const double nl = std::sqrt(lo.x * lo.x + lo.y * lo.y);
    const double nh = std::sqrt(hi.x * hi.x + hi.y * hi.y);
    out.lo_vec = {lo.x / nl, lo.y / nl, 0};
    out.hi_vec = {hi.x / nh, hi.y / nh, 0};
  }
  return out;
}

inline int levi_civita(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

}  // namespace oracles
