// SPDX-License-Identifier: Apache-2.0
#include "liepolar/matrix.hpp"

#include <cmath>
#include <string>

namespace liepolar {

namespace {

void check_dim(int dim) {
  if (dim < 1 || dim > MatR::kMaxDim) {
    throw DimensionMismatchError("matrix dimension " + std::to_string(dim) +
                                 " out of range 1.." + std::to_string(MatR::kMaxDim));
  }
}

void check_same_dim(const MatR& a, const MatR& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatchError("matrix dimensions differ: " + std::to_string(a.dim()) +
                                 " vs " + std::to_string(b.dim()));
  }
}

double det2(const MatR& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

double det3(const MatR& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

double det4(const MatR& m) {
  double det = 0.0;
  for (int j = 0; j < 4; ++j) {
    MatR minor(3);
    for (int r = 1; r < 4; ++r) {
      int cc = 0;
      for (int c = 0; c < 4; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = m(r, c);
      }
    }
    const double cofactor = (j % 2 == 0 ? 1.0 : -1.0) * m(0, j) * det3(minor);
    det += cofactor;
  }
  return det;
}

double det_lu(const MatR& m) {
  const int n = m.dim();
  MatR a = m;
  double det = 1.0;
  for (int k = 0; k < n; ++k) {
    int pivot = k;
    for (int i = k + 1; i < n; ++i) {
      if (std::fabs(a(i, k)) > std::fabs(a(pivot, k))) pivot = i;
    }
    if (a(pivot, k) == 0.0) return 0.0;
    if (pivot != k) {
      for (int j = 0; j < n; ++j) std::swap(a(pivot, j), a(k, j));
      det = -det;
    }
    det *= a(k, k);
    for (int i = k + 1; i < n; ++i) {
      const double f = a(i, k) / a(k, k);
      for (int j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

}  // namespace

MatR::MatR(int dim) : dim_(dim), a_(static_cast<std::size_t>(dim) * dim, 0.0) { check_dim(dim); }

MatR MatR::identity(int dim) {
  MatR m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

MatR MatR::diagonal(const std::vector<double>& d) {
  MatR m(static_cast<int>(d.size()));
  for (int i = 0; i < m.dim(); ++i) m(i, i) = d[static_cast<std::size_t>(i)];
  return m;
}

MatR MatR::from_rows(const std::vector<std::vector<double>>& rows) {
  MatR m(static_cast<int>(rows.size()));
  for (int i = 0; i < m.dim(); ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != m.dim()) {
      throw DimensionMismatchError("row " + std::to_string(i) + " has " +
                                   std::to_string(rows[static_cast<std::size_t>(i)].size()) +
                                   " entries, expected " + std::to_string(m.dim()));
    }
    for (int j = 0; j < m.dim(); ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return m;
}

MatR MatR::transposed() const {
  MatR t(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

double MatR::trace() const {
  double t = 0.0;
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double MatR::max_abs() const {
  double m = 0.0;
  for (double v : a_) m = std::fmax(m, std::fabs(v));
  return m;
}

bool MatR::all_finite() const {
  for (double v : a_)
    if (!std::isfinite(v)) return false;
  return true;
}

double MatR::determinant() const {
  switch (dim_) {
    case 1: return (*this)(0, 0);
    case 2: return det2(*this);
    case 3: return det3(*this);
    case 4: return det4(*this);
    default: return det_lu(*this);
  }
}

MatR MatR::inverse() const {
  const int n = dim_;
  MatR a = *this;
  MatR inv = MatR::identity(n);
  for (int k = 0; k < n; ++k) {
    int pivot = k;
    for (int i = k + 1; i < n; ++i) {
      if (std::fabs(a(i, k)) > std::fabs(a(pivot, k))) pivot = i;
    }
    if (std::fabs(a(pivot, k)) < 1e-300) throw SingularError("matrix is singular to working precision");
    if (pivot != k) {
      for (int j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(k, j));
        std::swap(inv(pivot, j), inv(k, j));
      }
    }
    const double d = a(k, k);
    for (int j = 0; j < n; ++j) {
      a(k, j) /= d;
      inv(k, j) /= d;
    }
    for (int i = 0; i < n; ++i) {
      if (i == k) continue;
      const double f = a(i, k);
      if (f == 0.0) continue;
      for (int j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

std::vector<std::vector<double>> MatR::rows() const {
  std::vector<std::vector<double>> out(static_cast<std::size_t>(dim_));
  for (int i = 0; i < dim_; ++i) {
    out[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(dim_));
    for (int j = 0; j < dim_; ++j) out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (*this)(i, j);
  }
  return out;
}

MatR& MatR::operator+=(const MatR& o) {
  check_same_dim(*this, o);
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

MatR& MatR::operator-=(const MatR& o) {
  check_same_dim(*this, o);
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

MatR& MatR::operator*=(double s) {
  for (double& v : a_) v *= s;
  return *this;
}

MatR operator+(MatR a, const MatR& b) { return a += b; }
MatR operator-(MatR a, const MatR& b) { return a -= b; }

MatR operator*(const MatR& a, const MatR& b) {
  check_same_dim(a, b);
  const int n = a.dim();
  MatR c(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

MatR operator*(double s, MatR a) { return a *= s; }
MatR operator*(MatR a, double s) { return a *= s; }

double max_abs_diff(const MatR& a, const MatR& b) {
  check_same_dim(a, b);
  double m = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) m = std::fmax(m, std::fabs(a(i, j) - b(i, j)));
  return m;
}

Vec3 apply3(const MatR& m, const Vec3& v) {
  if (m.dim() != 3) throw DimensionMismatchError("apply3 requires a 3x3 matrix");
  return {m(0, 0) * v.x + m(0, 1) * v.y + m(0, 2) * v.z,
          m(1, 0) * v.x + m(1, 1) * v.y + m(1, 2) * v.z,
          m(2, 0) * v.x + m(2, 1) * v.y + m(2, 2) * v.z};
}

}  // namespace liepolar
