#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace covsteer {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition was violated: shape mismatch, non-finite input,
/// out-of-range parameter.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The dense eigenvalue iteration did not converge.
class EigenvalueFailure : public Error {
 public:
  using Error::Error;
};

/// An operation that requires spectral radius < 1 was given a matrix at or
/// outside the unit circle.
class UnstableMatrix : public Error {
 public:
  using Error::Error;
};

/// A solve finished without meeting its accuracy contract, or the underlying
/// linear system is singular.
class SolveFailure : public Error {
 public:
  using Error::Error;
};

/// A covariance input failed the positive-definiteness check. which() names
/// the offending argument.
class NotPositiveDefinite : public Error {
 public:
  NotPositiveDefinite(std::string which, const std::string& message)
      : Error(message), which_(std::move(which)) {}
  const std::string& which() const noexcept { return which_; }

 private:
  std::string which_;
};

/// The initial intervention does not stabilize the system.
class InfeasibleStart : public Error {
 public:
  using Error::Error;
};

/// A configuration document failed to parse or validate. Messages are
/// anchored to the source (file:line:column for syntax errors, key path for
/// semantic ones).
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace covsteer
