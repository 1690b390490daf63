#pragma once

#include <stdexcept>
#include <string>

namespace peo {

// Precondition or argument-domain violation (exit code 3 in the CLI).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Argument sits on a pole of Gamma.
class PoleError : public DomainError {
 public:
  explicit PoleError(const std::string& what) : DomainError(what) {}
};

// A series did not meet its termination rule within the term budget.
class NonConvergenceError : public std::runtime_error {
 public:
  explicit NonConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// Eigenvalues too close for the Cayley-Hamilton formula.
class ConditioningError : public std::runtime_error {
 public:
  explicit ConditioningError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace peo
