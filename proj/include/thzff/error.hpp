#pragma once

#include <stdexcept>
#include <string>

namespace thzff {

/// Thrown when an argument lies outside the documented domain of an operation.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// No array pair can satisfy the far-field condition for the requested Rx size.
class NoFarFieldDesign : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A bisection did not reach its tolerance within the iteration budget.
class NonConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

void require_finite(double value, const char* what);
void require_positive(double value, const char* what);
void require_non_negative(double value, const char* what);
void require_at_least(double value, double bound, const char* what);

}  // namespace detail
}  // namespace thzff
