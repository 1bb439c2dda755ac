#include "thzff/error.hpp"

#include <cmath>

namespace thzff::detail {

void require_finite(double value, const char* what) {
  if (!std::isfinite(value)) {
    throw DomainError(std::string(what) + " must be finite");
  }
}

void require_positive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw DomainError(std::string(what) + " must be positive and finite");
  }
}

void require_non_negative(double value, const char* what) {
  if (!(value >= 0.0) || !std::isfinite(value)) {
    throw DomainError(std::string(what) + " must be non-negative and finite");
  }
}

void require_at_least(double value, double bound, const char* what) {
  if (!(value >= bound) || !std::isfinite(value)) {
    throw DomainError(std::string(what) + " must be >= " + std::to_string(bound));
  }
}

}  // namespace thzff::detail
