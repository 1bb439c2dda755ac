#include "thzff/linkbudget.hpp"

#include <cmath>
#include <numbers>

#include "thzff/error.hpp"
#include "thzff/geometry.hpp"
#include "thzff/units.hpp"

namespace thzff {

void RadioParams::validate() const {
  detail::require_finite(ptx_dbm, "ptx_dbm");
  detail::require_finite(snr_threshold_db, "snr_db");
  detail::require_finite(noise_figure_db, "nf_db");
  detail::require_positive(temperature_k, "temperature_k");
}

void LinkGeometry::validate() const {
  detail::require_positive(frequency_hz, "frequency_hz");
  detail::require_positive(d_min_m, "d_min_m");
  detail::require_positive(d_max_m, "d_max_m");
  if (d_max_m < d_min_m) {
    throw DomainError("d_max_m must be >= d_min_m");
  }
}

double LinkGeometry::wavelength_m() const { return wavelength(frequency_hz); }

double array_gain(double side_m, double wavelength_m) {
  detail::require_non_negative(side_m, "array size");
  detail::require_positive(wavelength_m, "wavelength");
  return 4.0 * std::numbers::pi * side_m * side_m / (wavelength_m * wavelength_m);
}

double noise_power(double noise_factor_linear, double temperature_k, double bandwidth_hz) {
  detail::require_at_least(noise_factor_linear, 1.0, "noise factor");
  detail::require_positive(temperature_k, "temperature");
  detail::require_positive(bandwidth_hz, "bandwidth");
  return bandwidth_hz * noise_factor_linear * constants::kBoltzmann * temperature_k;
}

double snr_at_distance_db(const RadioParams& radio, double wavelength_m, double d1_m,
                          double d2_m, double bandwidth_hz, double distance_m) {
  radio.validate();
  detail::require_positive(wavelength_m, "wavelength");
  detail::require_positive(d1_m, "Tx array size");
  detail::require_positive(d2_m, "Rx array size");
  detail::require_positive(bandwidth_hz, "bandwidth");
  detail::require_positive(distance_m, "distance");

  const double ptx_w = dbm_to_watts(Dbm{radio.ptx_dbm});
  const double g1 = array_gain(d1_m, wavelength_m);
  const double g2 = array_gain(d2_m, wavelength_m);
  const double spreading = wavelength_m / (4.0 * std::numbers::pi * distance_m);
  const double n0 = noise_power(db_to_linear(Db{radio.noise_figure_db}), radio.temperature_k,
                                bandwidth_hz);
  return linear_to_db(ptx_w * g1 * g2 * spreading * spreading / n0).value;
}

bool condition1_holds(const LinkGeometry& geom, double d1_m, double d2_m) {
  geom.validate();
  const double d_far = fraunhofer_two_arrays(d1_m, d2_m, geom.wavelength_m());
  return d_far <= geom.d_min_m * (1.0 + kFarFieldRelSlack);
}

bool condition2_holds(const RadioParams& radio, const LinkGeometry& geom, double d1_m,
                      double d2_m, double bandwidth_hz) {
  geom.validate();
  detail::require_non_negative(d1_m, "Tx array size");
  detail::require_non_negative(d2_m, "Rx array size");
  if (d1_m == 0.0 || d2_m == 0.0) {
    return false;
  }
  const double snr = snr_at_distance_db(radio, geom.wavelength_m(), d1_m, d2_m, bandwidth_hz,
                                        geom.d_max_m);
  return snr >= radio.snr_threshold_db - kSnrSlackDb;
}

bool condition2_product_form(const RadioParams& radio, const LinkGeometry& geom, double d1_m,
                             double d2_m, double bandwidth_hz) {
  radio.validate();
  geom.validate();
  detail::require_non_negative(d1_m, "Tx array size");
  detail::require_non_negative(d2_m, "Rx array size");
  detail::require_positive(bandwidth_hz, "bandwidth");

  const double nf = db_to_linear(Db{radio.noise_figure_db});
  const double ptx_w = dbm_to_watts(Dbm{radio.ptx_dbm});
  const double z = nf * constants::kBoltzmann * radio.temperature_k * bandwidth_hz / ptx_w;
  const double required = geom.wavelength_m() * geom.d_max_m * std::sqrt(z) *
                          std::pow(10.0, radio.snr_threshold_db / 20.0);
  // SNR scales with (D1 D2)^2, so the dB slack maps to half of it on the product.
  return d1_m * d2_m >= required * std::pow(10.0, -kSnrSlackDb / 20.0);
}

}  // namespace thzff
