#pragma once

#include <stdexcept>
#include <string>

namespace eqarea {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad user input: unknown names, malformed expressions, invalid parameters.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A numerical procedure could not complete (malformed fold, non-termination,
/// unmatched shocks across a time stencil).
class NumericalError : public Error {
 public:
  using Error::Error;
};

class MalformedFoldError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class NonTerminationError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class UnmatchedShockError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace eqarea
