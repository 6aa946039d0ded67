#pragma once

#include <stdexcept>
#include <string>

namespace losdof {

/// Argument outside the domain of an operation (bad geometry, out-of-range arc length, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Orientation for which a model is undefined (the receiver points along e_y).
class DegenerateOrientationError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Two power-law segments with equal exponents never intersect.
class ParallelSegmentsError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A numerical routine failed to reach its tolerance. Carries the best estimate it had.
class ComputationError : public std::runtime_error {
 public:
  ComputationError(const std::string& what, double best_estimate)
      : std::runtime_error(what), best_estimate_(best_estimate) {}

  double best_estimate() const noexcept { return best_estimate_; }

 private:
  double best_estimate_;
};

}  // namespace losdof
