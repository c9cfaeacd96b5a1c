#pragma once

#include <stdexcept>
#include <string>

namespace qillum {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

class HermiticityError : public Error {
 public:
  using Error::Error;
};

class NonPsdError : public Error {
 public:
  using Error::Error;
};

/// An iterative routine did not converge. Carries the best value reached.
class NumericalFailure : public Error {
 public:
  NumericalFailure(const std::string& what, double best_value)
      : Error(what), best_value_(best_value) {}

  double best_value() const noexcept { return best_value_; }

 private:
  double best_value_;
};

/// Direction with fewer than two non-zero components handed to the
/// high-noise expansion, where the discord vanishes identically.
class DegenerateDirectionError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Second-order expansion requested off the |c1| = max branch.
class BranchError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// File could not be opened, written or read back.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Malformed record file or other serialized input.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// Request that does not fit the operation, such as figure data of the
/// wrong kind.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace qillum
