#pragma once

#include <stdexcept>
#include <string>

namespace slnr {

/// Cholesky pivot <= 0: the matrix is not positive definite. Callers must
/// not regularize silently; with noise_var > 0 this never fires.
class NotPositiveDefinite : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The Jacobi sweep budget was exhausted before the off-diagonal mass
/// reached tolerance.
class ConvergenceFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// ||H_k V_k||_F fell below the degeneracy floor; the drop must be resampled.
class DegenerateChannel : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptySamples : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed config document (bad JSON, wrong type, unknown key).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Well-formed config that violates a scenario invariant.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace slnr
