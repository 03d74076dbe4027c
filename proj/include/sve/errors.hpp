#pragma once

#include <stdexcept>
#include <string>

namespace sve {

/// The estimand is undefined at the observed data (both arms event-free,
/// so SVE is 0/0 and the trial carries no information about the effect).
class UndefinedEffectError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The plug-in variance is undefined (both empirical risks are zero).
class UndefinedVarianceError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A quantity diverges at the edge of the parameter space, e.g. atanh(+-1)
/// when an arm has zero events. Profile intervals remain available there.
class BoundaryError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Optimizer or root-finder failure (non-convergence, inconsistent values).
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// find_root was called on an interval without a sign change.
class BracketingError : public NumericError {
 public:
  using NumericError::NumericError;
};

}  // namespace sve
