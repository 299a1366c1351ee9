// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "liepolar/errors.hpp"
#include "liepolar/vec3.hpp"

namespace liepolar {

/// Dense square real matrix, row-major, dimension fixed at construction.
/// Dimensions 1..16 are supported; everything in this library is small.
class MatR {
 public:
  static constexpr int kMaxDim = 16;

  explicit MatR(int dim);

  static MatR identity(int dim);
  static MatR diagonal(const std::vector<double>& d);
  static MatR from_rows(const std::vector<std::vector<double>>& rows);

  int dim() const { return dim_; }

  double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * dim_ + j]; }
  double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * dim_ + j]; }

  MatR transposed() const;
  double trace() const;
  double max_abs() const;
  bool all_finite() const;

  // Cofactor expansion up to dim 4, LU with partial pivoting beyond.
  double determinant() const;

  // Gauss-Jordan with partial pivoting; throws SingularError.
  MatR inverse() const;

  std::vector<std::vector<double>> rows() const;

  MatR& operator+=(const MatR& o);
  MatR& operator-=(const MatR& o);
  MatR& operator*=(double s);

 private:
  int dim_;
  std::vector<double> a_;
};

MatR operator+(MatR a, const MatR& b);
MatR operator-(MatR a, const MatR& b);
MatR operator*(const MatR& a, const MatR& b);
MatR operator*(double s, MatR a);
MatR operator*(MatR a, double s);

/// Largest entrywise difference; the residual norm used throughout.
double max_abs_diff(const MatR& a, const MatR& b);

/// Apply a 3x3 matrix to a vector.
Vec3 apply3(const MatR& m, const Vec3& v);

}  // namespace liepolar
