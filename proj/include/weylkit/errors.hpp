#pragma once

#include <stdexcept>
#include <string>

namespace weylkit {

/// Input outside the domain where an operation is defined (λ on the cut,
/// z = 0, a point outside the convergence disk, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// λ sits on (or numerically at) a pole of a finite Weyl function.
class PoleError : public std::runtime_error {
 public:
  explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

/// Requested accuracy needs more series terms than the hard cap allows.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace weylkit
