#ifndef SUBGAUSS_ERRORS_HPP
#define SUBGAUSS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace subgauss {

/// Parameter or argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Requested a variance proxy of a variable that has none (e.g. an
/// exponential truncated with b = +inf).
class NotSubGaussianError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A numeric evaluation produced a non-finite value or failed to converge.
/// Carries the argument at which evaluation failed.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(const std::string& what, double theta)
      : std::runtime_error(what), theta_(theta) {}
  double theta() const { return theta_; }

 private:
  double theta_;
};

/// Bisection bracket precondition violated (lower end holds or upper end
/// fails the domination check).
class BracketError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace subgauss

#endif  // SUBGAUSS_ERRORS_HPP
