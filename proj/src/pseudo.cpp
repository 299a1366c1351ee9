// SPDX-License-Identifier: Apache-2.0
#include "liepolar/pseudo.hpp"

#include <cmath>
#include <string>

namespace liepolar {

MatR Signature::involution() const {
  MatR e(dim);
  for (int i = 0; i < dim; ++i) e(i, i) = static_cast<double>(signs[static_cast<std::size_t>(i)]);
  return e;
}

Signature make_signature(std::vector<int> signs) {
  const int dim = static_cast<int>(signs.size());
  if (dim < 2 || dim > MatR::kMaxDim) {
    throw DimensionMismatchError("signature dimension " + std::to_string(dim) +
                                 " out of range 2.." + std::to_string(MatR::kMaxDim));
  }
  for (int s : signs) {
    if (s != 1 && s != -1) throw Error("signature entries must be +1 or -1");
  }
  return {dim, std::move(signs)};
}

Signature signature_from_string(std::string_view text) {
  std::vector<int> signs;
  signs.reserve(text.size());
  for (char c : text) {
    if (c == '+') {
      signs.push_back(1);
    } else if (c == '-') {
      signs.push_back(-1);
    } else {
      throw ParseError(std::string("signs: unexpected character '") + c + "', expected + or -");
    }
  }
  return make_signature(std::move(signs));
}

double ge_residual(const MatR& m, const Signature& sig) {
  if (m.dim() != sig.dim) {
    throw DimensionMismatchError("ge_residual: matrix dimension " + std::to_string(m.dim()) +
                                 " does not match signature dimension " + std::to_string(sig.dim));
  }
  const MatR e = sig.involution();
  return max_abs_diff(m * e * m.transposed(), e);
}

MatR random_ge(const Signature& sig, SplitMix64& rng) {
  const int n = sig.dim;
  MatR m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = rng.uniform(-1.0, 1.0);
  const MatR e = sig.involution();
  const MatR x = 0.5 * (m - e * m.transposed() * e);
  return expm(x);
}

MatR random_ge(const Signature& sig, std::uint64_t seed) {
  SplitMix64 rng(seed);
  return random_ge(sig, rng);
}

GEPolarFactors polar_decompose_ge(const MatR& m, const Signature& sig, double tol) {
  const double input_res = ge_residual(m, sig);
  if (input_res > tol) {
    throw MetricViolationError("polar_decompose_ge: input residual " + std::to_string(input_res) +
                               " exceeds tolerance");
  }
  const PolarFactors f = polar(m, tol);

  GEPolarFactors out{f.u, f.p, f.pprime, 0.0, 0.0};
  out.membership_residual = std::fmax(ge_residual(f.u, sig),
                                      std::fmax(ge_residual(f.p, sig), ge_residual(f.pprime, sig)));
  if (out.membership_residual > tol) {
    throw DecompositionResidualError("polar factor left the group: residual " +
                                     std::to_string(out.membership_residual));
  }
  const MatR e = sig.involution();
  out.commutation_residual = max_abs_diff(out.u * e, e * out.u);
  return out;
}

}  // namespace liepolar
