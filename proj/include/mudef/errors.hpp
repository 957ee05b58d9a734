#pragma once

#include <stdexcept>
#include <string>

namespace mudef {

/// Raised when an input lies outside the region where a quantity is defined
/// (e.g. mu <= -1/2, or the eta_mu representation requested for mu <= 0).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a numerical evaluation cannot meet its accuracy budget.
/// Carries the best available estimate so callers can still report it.
class EvaluationError : public std::runtime_error {
 public:
  explicit EvaluationError(const std::string& what, double best_value = 0.0,
                           double best_error = 0.0)
      : std::runtime_error(what), best_value_(best_value), best_error_(best_error) {}

  double best_value() const noexcept { return best_value_; }
  double best_error() const noexcept { return best_error_; }

 private:
  double best_value_;
  double best_error_;
};

}  // namespace mudef
