#pragma once

#include <stdexcept>
#include <string>

namespace sjtheta {

/// Bad argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input that fails a structural invariant (non-symplectic matrix,
/// asymmetric Omega, odd-diagonal translation, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Base for failures of a numerical procedure on otherwise valid input.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SingularMatrixError : public NumericError {
 public:
  SingularMatrixError(const std::string& what, double pivot)
      : NumericError(what), pivot_(pivot) {}
  double pivot() const { return pivot_; }

 private:
  double pivot_;
};

class BudgetExceededError : public NumericError {
 public:
  BudgetExceededError(const std::string& what, double estimated_terms)
      : NumericError(what), estimated_(estimated_terms) {}
  double estimated_terms() const { return estimated_; }

 private:
  double estimated_;
};

class ThetaTooSmallError : public NumericError {
 public:
  using NumericError::NumericError;
};

class OverflowError : public NumericError {
 public:
  using NumericError::NumericError;
};

}  // namespace sjtheta
