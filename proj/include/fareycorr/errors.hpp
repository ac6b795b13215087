#pragma once

#include <stdexcept>
#include <string>

namespace fareycorr {

/// Base for every error raised by the library. Each subclass maps onto one
/// CLI exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed argument: wrong dimension, unsorted input, non-positive size.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Query outside a precomputed table or a supported parameter range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// A request that would exceed a configured memory or work budget.
class SizingError : public Error {
 public:
  using Error::Error;
};

/// Adaptive quadrature could not reach the requested tolerance.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}

  /// Width of the uncertified area bracket when refinement stopped.
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace fareycorr
