#pragma once

namespace thzff {

/// Radio-side inputs of the link budget. dB quantities stay in dB here and
/// are converted to linear scale at the point of use.
struct RadioParams {
  double ptx_dbm = 23.0;
  double snr_threshold_db = 20.0;
  double noise_figure_db = 10.0;
  double temperature_k = 296.0;

  /// Throws DomainError unless every field is finite and temperature_k > 0.
  void validate() const;
};

/// Carrier and the range of distances the link must serve.
struct LinkGeometry {
  double frequency_hz = 300e9;
  double d_min_m = 10.0;
  double d_max_m = 10.0;

  /// Throws DomainError unless frequency > 0 and 0 < d_min <= d_max.
  void validate() const;

  double wavelength_m() const;
  /// M = d_max / d_min.
  double mobility() const { return d_max_m / d_min_m; }
};

/// Relative slack on the Fraunhofer comparison so that designs sitting
/// exactly on the boundary are not rejected by rounding.
inline constexpr double kFarFieldRelSlack = 1e-12;
/// Absolute slack on the SNR-threshold comparison, in dB.
inline constexpr double kSnrSlackDb = 1e-10;

/// Aperture gain of a D x D array, 4 pi D^2 / lambda^2 (pi N^2 at lambda/2 spacing).
double array_gain(double side_m, double wavelength_m);

/// Thermal noise power B * NF * k * T in watts.
double noise_power(double noise_factor_linear, double temperature_k, double bandwidth_hz);

/// Friis SNR in dB at distance d for two square arrays; flat PSD over B.
double snr_at_distance_db(const RadioParams& radio, double wavelength_m, double d1_m,
                          double d2_m, double bandwidth_hz, double distance_m);

/// Far-field requirement d_min >= 4 (D1 + D2)^2 / lambda (inclusive).
bool condition1_holds(const LinkGeometry& geom, double d1_m, double d2_m);

/// Reliability requirement SNR(d_max) >= S_L, evaluated through the Friis chain.
/// Zero-size arrays never satisfy it.
bool condition2_holds(const RadioParams& radio, const LinkGeometry& geom, double d1_m,
                      double d2_m, double bandwidth_hz);

/// Condition 2 in its reduced product form
/// D1 D2 >= lambda d_max sqrt(NF k T B / P_Tx) 10^(S_L/20).
bool condition2_product_form(const RadioParams& radio, const LinkGeometry& geom, double d1_m,
                             double d2_m, double bandwidth_hz);

}  // namespace thzff
