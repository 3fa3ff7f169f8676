#pragma once

#include <stdexcept>
#include <string>

namespace driftmax {

/// Base of every exception thrown by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation (nonpositive variance,
/// theta outside the MGF domain, malformed distribution spec, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A precondition of one of the intermediate bounds does not hold for the given
/// parameters, so the requested quantity is undefined.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An iterative method stopped before reaching its tolerance. Carries the
/// best estimate seen so far.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double best_estimate, double error_estimate)
      : Error(what), best_estimate_(best_estimate), error_estimate_(error_estimate) {}

  double best_estimate() const noexcept { return best_estimate_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double best_estimate_;
  double error_estimate_;
};

}  // namespace driftmax
