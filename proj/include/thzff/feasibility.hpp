#pragma once

#include <optional>
#include <string_view>

#include "thzff/linkbudget.hpp"

namespace thzff {

/// Outcome of solving the joint far-field + SNR system for the Tx side D1.
///
/// With D2 eliminated through the Condition-1 boundary, D1 must satisfy the
/// monic quadratic D1^2 + p D1 + q <= 0. When a root exists both roots are
/// non-negative (q > 0 and x1 + x2 = -p >= 0), so [x1, x2] is the admissible set.
struct FeasibilityReport {
  double p = 0.0;             // m
  double q = 0.0;             // m^2
  double discriminant = 0.0;  // (p/2)^2 - q, m^2
  std::optional<double> root_low_m;
  std::optional<double> root_high_m;
  bool feasible = false;
};

enum class Regime { stationary, mobile_ratio, mobile_fixed_rx, general };

std::string_view to_string(Regime regime);

struct BandwidthLimit {
  double max_bandwidth_hz = 0.0;
  Regime regime = Regime::general;
  std::optional<double> optimal_d1_m;
  std::optional<double> optimal_d2_m;
};

/// Relative slack below zero within which a discriminant is treated as a double root.
inline constexpr double kDiscriminantRelSlack = 1e-12;

FeasibilityReport solve_d1_interval(const RadioParams& radio, const LinkGeometry& geom,
                                    double bandwidth_hz);

/// Largest bandwidth for which some (D1, D2) meets both conditions.
/// Independent of the carrier frequency; depends on the distances only through M.
BandwidthLimit max_bandwidth_general(const RadioParams& radio, const LinkGeometry& geom);

/// Limit for d_min = d_max with equal arrays on both ends.
BandwidthLimit max_bandwidth_stationary(const RadioParams& radio);

/// sqrt(lambda d_min) / 4: the equal-array optimum, sitting exactly on the
/// far-field boundary.
double optimal_symmetric_size(double wavelength_m, double d_min_m);

/// Sizes (D1, D2) with D1 = l D2 and D1 + D2 on the far-field boundary.
struct SizePair {
  double d1_m;
  double d2_m;
};
SizePair ratio_split_sizes(double wavelength_m, double d_min_m, double inequality_l);

/// Limit when the Rx array side is capped at d2_max. Throws NoFarFieldDesign
/// unless 0 < d2_max < sqrt(lambda d_min) / 2.
BandwidthLimit max_bandwidth_mobile_fixed_rx(const RadioParams& radio, const LinkGeometry& geom,
                                             double d2_max_m);

/// M^2 (L+1)^4 / (16 L^2): the factor separating the mobile and stationary limits.
double mobility_penalty(double mobility_m, double inequality_l);

BandwidthLimit max_bandwidth_mobile(const RadioParams& radio, double mobility_m,
                                    double inequality_l);

/// Transmit power in dBm needed to reach bandwidth_hz on a mobile far-field link.
/// Exact inverse of max_bandwidth_mobile.
double required_tx_power_dbm(double bandwidth_hz, double mobility_m, double inequality_l,
                             double snr_threshold_db, double noise_figure_db,
                             double temperature_k);

/// Shannon rate B log2(1 + S) at the threshold SNR.
double max_capacity_bps(double bandwidth_hz, double snr_threshold_db);

}  // namespace thzff
