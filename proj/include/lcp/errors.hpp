#pragma once

#include <stdexcept>
#include <string>

namespace lcp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the domain of an operation (exterior point, m >= 1, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Evaluation at (or numerically on top of) a pole of a meromorphic function.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Query point too close to a triangle boundary for a reliable result.
class BoundaryError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An iterative method ran out of iterations.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace lcp
