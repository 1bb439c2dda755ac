#include "thzff/geometry.hpp"

#include <cmath>

#include "thzff/error.hpp"

namespace thzff {

SquareArray SquareArray::from_side(double side_m, double wavelength_m) {
  return SquareArray(side_m, elements_from_size(side_m, wavelength_m), wavelength_m);
}

SquareArray SquareArray::from_elements(double elements_per_side, double wavelength_m) {
  return SquareArray(size_from_elements(elements_per_side, wavelength_m), elements_per_side,
                     wavelength_m);
}

long long SquareArray::realizable_elements() const {
  // Guard against 2D/lambda landing a few ulp below an integer.
  return static_cast<long long>(std::floor(elements_ * (1.0 + 1e-12)));
}

std::optional<double> ArrayPair::inequality() const {
  if (rx.side_m() > 0.0) {
    return tx.side_m() / rx.side_m();
  }
  return std::nullopt;
}

double fraunhofer_classic(double side_m, double wavelength_m) {
  detail::require_non_negative(side_m, "aperture size");
  detail::require_positive(wavelength_m, "wavelength");
  return 2.0 * side_m * side_m / wavelength_m;
}

double fraunhofer_two_arrays(double d1_m, double d2_m, double wavelength_m) {
  detail::require_non_negative(d1_m, "Tx array size");
  detail::require_non_negative(d2_m, "Rx array size");
  detail::require_positive(wavelength_m, "wavelength");
  const double sum = d1_m + d2_m;
  return 4.0 * sum * sum / wavelength_m;
}

double fraunhofer_from_elements(double n1, double n2, double wavelength_m) {
  detail::require_non_negative(n1, "Tx element count");
  detail::require_non_negative(n2, "Rx element count");
  detail::require_positive(wavelength_m, "wavelength");
  const double sum = n1 + n2;
  return wavelength_m * sum * sum;
}

double elements_from_size(double side_m, double wavelength_m) {
  detail::require_non_negative(side_m, "array size");
  detail::require_positive(wavelength_m, "wavelength");
  return 2.0 * side_m / wavelength_m;
}

double size_from_elements(double elements_per_side, double wavelength_m) {
  detail::require_non_negative(elements_per_side, "element count");
  detail::require_positive(wavelength_m, "wavelength");
  return wavelength_m * elements_per_side / 2.0;
}

}  // namespace thzff
