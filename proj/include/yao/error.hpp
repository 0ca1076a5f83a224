#pragma once

#include <stdexcept>
#include <string>

namespace yao {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inadmissible input data (duplicate points, bad files).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A direction was requested between two coincident points.
class DegenerateDirection : public Error {
 public:
  DegenerateDirection() : Error("degenerate direction") {}
};

/// Unsupported combination of construction parameters.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A caller violated an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of a closed-form bound.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A guarantee that the constructions rely on did not hold. Never expected
/// on well-formed inputs; raising it means a proof obligation failed.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace yao
