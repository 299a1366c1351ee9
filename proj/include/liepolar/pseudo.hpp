// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "liepolar/linalg.hpp"
#include "liepolar/matrix.hpp"
#include "liepolar/rng.hpp"

namespace liepolar {

/// A signature involution E = diag(signs) with E = E^t = E^{-1}.
/// Defines the group G_E = { m : m E m^t = E }.
struct Signature {
  int dim = 0;
  std::vector<int> signs;

  MatR involution() const;
};

/// Validates dimension 2..16 and entries +/-1.
Signature make_signature(std::vector<int> signs);

/// Parse "-+++"-style strings (CLI surface).
Signature signature_from_string(std::string_view text);

/// Membership residual |m E m^t - E|_max; membership iff <= tol.
double ge_residual(const MatR& m, const Signature& sig);

/// exp(x) for a random x with x E + E x^t = 0, built as
/// x = (m - E m^t E) / 2: antisymmetric within like-sign blocks,
/// symmetric across blocks.
MatR random_ge(const Signature& sig, SplitMix64& rng);
MatR random_ge(const Signature& sig, std::uint64_t seed);

/// m = u * p = pprime * u with every factor in G_E. The commutation
/// residual |u E - E u| is the assertable form of "the eigenspaces of E
/// are invariant under u", E being a self-adjoint involution.
struct GEPolarFactors {
  MatR u;
  MatR p;
  MatR pprime;
  double membership_residual = 0.0;
  double commutation_residual = 0.0;
};

GEPolarFactors polar_decompose_ge(const MatR& m, const Signature& sig, double tol = kDefaultTol);

}  // namespace liepolar
