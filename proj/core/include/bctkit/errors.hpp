#pragma once

#include <stdexcept>
#include <string>

namespace bctkit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed arguments: wrong degree, reducible modulus, bad LUT file, ...
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Mathematically undefined operation, e.g. inverting zero.
class DomainError : public Error {
 public:
  using Error::Error;
};

// The operation is only defined for a narrower class of functions
// (power maps, permutations).
class UnsupportedInput : public Error {
 public:
  using Error::Error;
};

// A verification was asked to check a claim whose hypotheses do not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// The requested computation is refused because it exceeds the size policy.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, double estimated_operations)
      : Error(what), estimated_operations_(estimated_operations) {}

  double estimated_operations() const noexcept { return estimated_operations_; }

 private:
  double estimated_operations_;
};

}  // namespace bctkit
