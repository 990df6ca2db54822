#pragma once

#include <stdexcept>
#include <string>

namespace skewbrane {

/// Point outside a non-periodic coordinate range.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Violated precondition on dimensions, parity, or argument shape.
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Rank deficiency of a frame or Jacobian.
class DegeneratePointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Restricted Hessian of a support function is (nearly) singular.
class ConvexityLossError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A construction was requested with a perturbation size above its budget.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(const std::string& what, double eps_max)
      : std::runtime_error(what), eps_max_(eps_max) {}
  double eps_max() const { return eps_max_; }

 private:
  double eps_max_;
};

/// Sampled functions do not satisfy the positivity hypothesis of the
/// perturbation bound.
class HypothesisViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid surface or run configuration (unknown name, unknown parameter).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace skewbrane
