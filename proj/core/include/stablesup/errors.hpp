#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace stablesup {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation. `field()` names it.
class DomainError : public Error {
 public:
  DomainError(std::string field, const std::string& what)
      : Error(field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// The result would overflow or leave the representable range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// A quadrature or acceleration scheme failed to reach its tolerance.
class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& what, double achieved_error)
      : Error(what), achieved_error_(achieved_error) {}

  double achieved_error() const noexcept { return achieved_error_; }

 private:
  double achieved_error_;
};

/// A least-squares fit could not be formed (sign change, too few points).
class FitError : public Error {
 public:
  using Error::Error;
};

/// Throws DomainError unless 1 < alpha < 2 (open interval; NaN rejected).
void require_index(double alpha);

}  // namespace stablesup
