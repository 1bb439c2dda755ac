#pragma once

#include <optional>

namespace thzff {

/// Planar N x N array with half-wavelength element spacing.
///
/// Element counts are kept continuous: the closed forms optimise over the
/// physical side length, and rounding to whole elements would perturb them.
/// Use realizable_elements() when an integer count is needed for reporting.
class SquareArray {
 public:
  static SquareArray from_side(double side_m, double wavelength_m);
  static SquareArray from_elements(double elements_per_side, double wavelength_m);

  double side_m() const { return side_m_; }
  double elements_per_side() const { return elements_; }
  double wavelength_m() const { return wavelength_m_; }

  /// Largest whole element count that fits in the side length.
  long long realizable_elements() const;

 private:
  SquareArray(double side_m, double elements, double wavelength_m)
      : side_m_(side_m), elements_(elements), wavelength_m_(wavelength_m) {}

  double side_m_;
  double elements_;
  double wavelength_m_;
};

/// Tx (access point) and Rx (user equipment) arrays of one link.
struct ArrayPair {
  SquareArray tx;
  SquareArray rx;

  /// D1 / D2; empty when the Rx array has zero size.
  std::optional<double> inequality() const;
};

/// Single-aperture Fraunhofer distance 2 D^2 / lambda.
double fraunhofer_classic(double side_m, double wavelength_m);

/// Far-field boundary of two broadside square arrays, 4 (D1 + D2)^2 / lambda.
/// The lambda^2/256 residual of the exact phase-error solution is dropped.
double fraunhofer_two_arrays(double d1_m, double d2_m, double wavelength_m);

/// Same boundary expressed in elements per side: lambda (N1 + N2)^2.
double fraunhofer_from_elements(double n1, double n2, double wavelength_m);

/// 2 D / lambda, continuous.
double elements_from_size(double side_m, double wavelength_m);

/// Side length for a continuous element count, lambda N / 2.
double size_from_elements(double elements_per_side, double wavelength_m);

}  // namespace thzff
