#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ribbonforge {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid parameters or a violated precondition (bad m/n, unknown family, ...).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Division by an exact zero.
class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// Operands that live in different cyclotomic fields or different algebras.
class MismatchError : public Error {
 public:
  using Error::Error;
};

/// A mathematical identity that must hold for a correct construction did not.
/// Raised only for hard failures; ordinary axiom failures are report entries.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

/// A computation was refused because it exceeds the configured size budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::size_t dimension)
      : Error(what), dimension_(dimension) {}
  std::size_t dimension() const noexcept { return dimension_; }

 private:
  std::size_t dimension_;
};

}  // namespace ribbonforge
