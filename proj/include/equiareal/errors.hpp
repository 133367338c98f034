#pragma once

#include <stdexcept>
#include <string>

namespace equiareal {

/// Invalid or degenerate input (CLI exit code 2).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A parameter value whose solution has a zero entry or phi = 0.
class DegenerateError : public InputError {
 public:
  using InputError::InputError;
};

/// Squared sides exist but violate a strict triangle inequality.
class NotTriangleError : public InputError {
 public:
  using InputError::InputError;
};

class SingularCurveError : public InputError {
 public:
  using InputError::InputError;
};

/// Specializing a rational function at one of its poles.
class PoleError : public InputError {
 public:
  using InputError::InputError;
};

/// An identity that must hold exactly did not (CLI exit code 1).
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FactorizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace equiareal
