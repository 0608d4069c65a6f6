#pragma once

#include <stdexcept>
#include <string>

namespace tfrde {

/// Base class for all solver-specific failures.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The 2x2 boundary-condition system for (A_k, B_k) is numerically singular.
class SingularBoundarySystem : public SolverError {
 public:
  using SolverError::SolverError;
};

/// The derivative-expansion coefficient system is numerically singular.
class BasisDependence : public SolverError {
 public:
  using SolverError::SolverError;
};

/// Condition estimate of the collocation matrix exceeds the hard limit.
class IllConditionedCollocation : public SolverError {
 public:
  using SolverError::SolverError;
};

/// First graded step underflows the floating-point range.
class GradedUnderflow : public SolverError {
 public:
  using SolverError::SolverError;
};

/// A series evaluation failed to reach its tolerance within the term cap.
class NonConvergentSeries : public SolverError {
 public:
  using SolverError::SolverError;
};

/// The blended-iteration spectrum matrix has a zero eigenvalue.
class ZeroEigenvalue : public SolverError {
 public:
  using SolverError::SolverError;
};

/// An inner stage iteration did not converge within the iteration cap.
class NoConvergence : public SolverError {
 public:
  using SolverError::SolverError;
};

/// Neither Mittag-Leffler expansion reaches the requested accuracy.
class UnsupportedRegime : public SolverError {
 public:
  using SolverError::SolverError;
};

/// A memory term was requested before the required history was computed.
class MissingHistory : public SolverError {
 public:
  using SolverError::SolverError;
};

}  // namespace tfrde
