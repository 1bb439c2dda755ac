#include "thzff/feasibility.hpp"

#include <cmath>

#include "thzff/error.hpp"
#include "thzff/units.hpp"

namespace thzff {
namespace {

// 10^((P_Tx,dBm - S_L,dB - N_F,dB - 30) / 10): transmit power in watts over
// the linear SNR threshold and noise factor.
double power_margin_w(const RadioParams& radio) {
  return std::pow(10.0, (radio.ptx_dbm - radio.snr_threshold_db - radio.noise_figure_db - 30.0) /
                            10.0);
}

void require_penalty_domain(double mobility_m, double inequality_l) {
  detail::require_at_least(mobility_m, 1.0, "mobility coefficient M");
  detail::require_at_least(inequality_l, 1.0, "inequality coefficient L");
}

}  // namespace

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::stationary:
      return "stationary";
    case Regime::mobile_ratio:
      return "mobile_ratio";
    case Regime::mobile_fixed_rx:
      return "mobile_fixed_rx";
    case Regime::general:
      return "general";
  }
  return "unknown";
}

FeasibilityReport solve_d1_interval(const RadioParams& radio, const LinkGeometry& geom,
                                    double bandwidth_hz) {
  radio.validate();
  geom.validate();
  detail::require_positive(bandwidth_hz, "bandwidth");

  const double lambda = geom.wavelength_m();
  const double nf = db_to_linear(Db{radio.noise_figure_db});
  const double ptx_w = dbm_to_watts(Dbm{radio.ptx_dbm});
  const double z = nf * constants::kBoltzmann * radio.temperature_k * bandwidth_hz / ptx_w;

  FeasibilityReport report;
  report.p = -std::sqrt(lambda * geom.d_min_m) / 2.0;
  report.q = lambda * geom.d_max_m * std::sqrt(z) * std::pow(10.0, radio.snr_threshold_db / 20.0);

  const double half_p = report.p / 2.0;
  const double half_p_sq = half_p * half_p;
  double disc = half_p_sq - report.q;
  if (disc < 0.0 && disc >= -kDiscriminantRelSlack * half_p_sq) {
    disc = 0.0;
  }
  report.discriminant = disc;
  report.feasible = disc >= 0.0;
  if (report.feasible) {
    // -p/2 > 0, so the larger root never cancels; take the smaller from x1 x2 = q.
    const double high = -half_p + std::sqrt(disc);
    report.root_high_m = high;
    report.root_low_m = report.q / high;
  }
  return report;
}

BandwidthLimit max_bandwidth_general(const RadioParams& radio, const LinkGeometry& geom) {
  radio.validate();
  geom.validate();
  const double m = geom.mobility();
  const double snr = db_to_linear(Db{radio.snr_threshold_db});
  const double nf = db_to_linear(Db{radio.noise_figure_db});
  const double ptx_w = dbm_to_watts(Dbm{radio.ptx_dbm});

  BandwidthLimit limit;
  limit.regime = Regime::general;
  limit.max_bandwidth_hz =
      ptx_w / (256.0 * m * m * snr * nf * constants::kBoltzmann * radio.temperature_k);
  const double side = optimal_symmetric_size(geom.wavelength_m(), geom.d_min_m);
  limit.optimal_d1_m = side;
  limit.optimal_d2_m = side;
  return limit;
}

BandwidthLimit max_bandwidth_stationary(const RadioParams& radio) {
  radio.validate();
  BandwidthLimit limit;
  limit.regime = Regime::stationary;
  limit.max_bandwidth_hz =
      power_margin_w(radio) / (256.0 * constants::kBoltzmann * radio.temperature_k);
  return limit;
}

double optimal_symmetric_size(double wavelength_m, double d_min_m) {
  detail::require_positive(wavelength_m, "wavelength");
  detail::require_positive(d_min_m, "d_min");
  return std::sqrt(wavelength_m * d_min_m) / 4.0;
}

SizePair ratio_split_sizes(double wavelength_m, double d_min_m, double inequality_l) {
  detail::require_positive(wavelength_m, "wavelength");
  detail::require_positive(d_min_m, "d_min");
  detail::require_at_least(inequality_l, 1.0, "inequality coefficient L");
  const double sum = std::sqrt(wavelength_m * d_min_m) / 2.0;
  const double d2 = sum / (inequality_l + 1.0);
  return SizePair{inequality_l * d2, d2};
}

BandwidthLimit max_bandwidth_mobile_fixed_rx(const RadioParams& radio, const LinkGeometry& geom,
                                             double d2_max_m) {
  radio.validate();
  geom.validate();
  const double lambda = geom.wavelength_m();
  const double aperture = std::sqrt(lambda * geom.d_min_m);
  if (!(d2_max_m > 0.0) || !(d2_max_m < aperture / 2.0)) {
    throw NoFarFieldDesign("no far-field design: d2_max_m must lie in (0, sqrt(lambda d_min)/2 = " +
                           std::to_string(aperture / 2.0) + " m)");
  }
  const double q = d2_max_m * (aperture - 2.0 * d2_max_m);

  BandwidthLimit limit;
  limit.regime = Regime::mobile_fixed_rx;
  limit.max_bandwidth_hz = q * q /
                           (4.0 * constants::kBoltzmann * radio.temperature_k * lambda * lambda *
                            geom.d_max_m * geom.d_max_m) *
                           power_margin_w(radio);
  limit.optimal_d1_m = aperture / 2.0 - d2_max_m;
  limit.optimal_d2_m = d2_max_m;
  return limit;
}

double mobility_penalty(double mobility_m, double inequality_l) {
  require_penalty_domain(mobility_m, inequality_l);
  const double lp1_sq = (inequality_l + 1.0) * (inequality_l + 1.0);
  return mobility_m * mobility_m * lp1_sq * lp1_sq / (16.0 * inequality_l * inequality_l);
}

BandwidthLimit max_bandwidth_mobile(const RadioParams& radio, double mobility_m,
                                    double inequality_l) {
  const double penalty = mobility_penalty(mobility_m, inequality_l);
  BandwidthLimit limit = max_bandwidth_stationary(radio);
  limit.regime = Regime::mobile_ratio;
  limit.max_bandwidth_hz /= penalty;
  return limit;
}

double required_tx_power_dbm(double bandwidth_hz, double mobility_m, double inequality_l,
                             double snr_threshold_db, double noise_figure_db,
                             double temperature_k) {
  detail::require_positive(bandwidth_hz, "bandwidth");
  require_penalty_domain(mobility_m, inequality_l);
  detail::require_finite(snr_threshold_db, "snr_db");
  detail::require_finite(noise_figure_db, "nf_db");
  detail::require_positive(temperature_k, "temperature");

  // 30 + 10 log10(256) = 54.0824 dB; kept exact rather than rounded.
  const double offset_db = 30.0 + 10.0 * std::log10(256.0);
  const double lp1 = inequality_l + 1.0;
  return offset_db + snr_threshold_db + noise_figure_db +
         10.0 * std::log10(constants::kBoltzmann * temperature_k) +
         10.0 * std::log10(bandwidth_hz) + 20.0 * std::log10(mobility_m) +
         20.0 * std::log10(lp1 * lp1 / (4.0 * inequality_l));
}

double max_capacity_bps(double bandwidth_hz, double snr_threshold_db) {
  detail::require_non_negative(bandwidth_hz, "bandwidth");
  return bandwidth_hz * std::log2(1.0 + db_to_linear(Db{snr_threshold_db}));
}

}  // namespace thzff
