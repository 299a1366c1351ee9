// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>

namespace liepolar {

// Base class for every failure this library reports.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Linear algebra kernel.
class DimensionMismatchError : public Error { public: using Error::Error; };
class NotSymmetricError : public Error { public: using Error::Error; };
class NoConvergenceError : public Error { public: using Error::Error; };
class NegativeEigenvalueError : public Error { public: using Error::Error; };
class InconsistentGammaError : public Error { public: using Error::Error; };
class SingularError : public Error { public: using Error::Error; };

// Group membership checks. Each names the residual that failed.
class NotRotationError : public Error { public: using Error::Error; };
class MetricViolationError : public Error { public: using Error::Error; };
class DetNotOneError : public Error { public: using Error::Error; };
class NotOrthochronousError : public Error { public: using Error::Error; };
class NotBoostError : public Error { public: using Error::Error; };

// Factorizations.
class DecompositionResidualError : public Error { public: using Error::Error; };

// Document I/O.
class ParseError : public Error { public: using Error::Error; };

}  // namespace liepolar
