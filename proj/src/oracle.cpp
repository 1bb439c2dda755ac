#include "thzff/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "thzff/error.hpp"
#include "thzff/feasibility.hpp"
#include "thzff/units.hpp"

namespace thzff {
namespace {

constexpr double kBracketLowHz = 1.0;
constexpr double kBracketHighHz = 1e16;
constexpr double kBracketExpansionLog2 = 16.0;

constexpr double kPowerBracketLowDbm = -100.0;
constexpr double kPowerBracketHighDbm = 100.0;
constexpr double kPowerBracketExpansionDb = 100.0;

// Canonical link for the power oracle; the required power depends on the
// distances only through M and not at all on the wavelength.
constexpr double kPowerOracleWavelengthM = 1e-3;
constexpr double kPowerOracleDminM = 1.0;

double grid_value(double extent, std::size_t index, std::size_t points) {
  return extent * static_cast<double>(index) / static_cast<double>(points - 1);
}

struct Candidate {
  double snr_db = -std::numeric_limits<double>::infinity();
  Witness pair;
  bool found = false;
};

void consider(Candidate& best, double snr_db, double d1, double d2) {
  if (!best.found || snr_db > best.snr_db) {
    best.snr_db = snr_db;
    best.pair = Witness{d1, d2};
    best.found = true;
  }
}

OracleProbe finish_probe(const RadioParams& radio, const LinkGeometry& geom, double bandwidth_hz,
                         const Candidate& best) {
  OracleProbe probe;
  if (!best.found) {
    return probe;
  }
  probe.best = best.pair;
  probe.margin_db = best.snr_db - radio.snr_threshold_db;
  probe.feasible = condition2_holds(radio, geom, best.pair.d1_m, best.pair.d2_m, bandwidth_hz);
  return probe;
}

void bracket_failure(const char* what, std::size_t iterations) {
  throw NonConvergence(std::string(what) + " did not converge within " +
                       std::to_string(iterations) + " iterations");
}

}  // namespace

void OracleConfig::validate() const {
  if (d_grid_points < 64) {
    throw DomainError("d_grid_points must be >= 64");
  }
  if (!(b_rel_tolerance > 0.0) || !(b_rel_tolerance <= 1e-3)) {
    throw DomainError("b_rel_tolerance must lie in (0, 1e-3]");
  }
  if (max_iterations == 0) {
    throw DomainError("max_iterations must be positive");
  }
}

OracleProbe oracle_feasible(const RadioParams& radio, const LinkGeometry& geom,
                            double bandwidth_hz, const OracleConfig& cfg) {
  radio.validate();
  geom.validate();
  cfg.validate();
  detail::require_positive(bandwidth_hz, "bandwidth");

  const double lambda = geom.wavelength_m();
  const double extent = std::sqrt(lambda * geom.d_min_m) / 2.0;
  const std::size_t n = cfg.d_grid_points;

  // Index 0 is a zero-size array, which can never meet the SNR condition.
  Candidate best;
  std::size_t frontier = n - 1;
  for (std::size_t i = 1; i < n; ++i) {
    const double d1 = grid_value(extent, i, n);
    if (cfg.prune_dominated) {
      // The far-field frontier only moves down as D1 grows.
      while (frontier >= 1 && !condition1_holds(geom, d1, grid_value(extent, frontier, n))) {
        --frontier;
      }
      if (frontier == 0) {
        break;
      }
      const double d2 = grid_value(extent, frontier, n);
      consider(best, snr_at_distance_db(radio, lambda, d1, d2, bandwidth_hz, geom.d_max_m), d1,
               d2);
      continue;
    }
    for (std::size_t j = 1; j < n; ++j) {
      const double d2 = grid_value(extent, j, n);
      if (!condition1_holds(geom, d1, d2)) {
        continue;
      }
      consider(best, snr_at_distance_db(radio, lambda, d1, d2, bandwidth_hz, geom.d_max_m), d1,
               d2);
    }
  }
  return finish_probe(radio, geom, bandwidth_hz, best);
}

OracleVerdict oracle_max_bandwidth(const RadioParams& radio, const LinkGeometry& geom,
                                   const OracleConfig& cfg) {
  cfg.validate();
  std::size_t iterations = 0;
  auto probe_at = [&](double log2_b) {
    ++iterations;
    if (iterations > cfg.max_iterations) {
      bracket_failure("bandwidth oracle", cfg.max_iterations);
    }
    return oracle_feasible(radio, geom, std::exp2(log2_b), cfg);
  };

  double lo = std::log2(kBracketLowHz);
  double hi = std::log2(kBracketHighHz);

  OracleProbe lo_probe = probe_at(lo);
  while (!lo_probe.feasible) {
    if (!lo_probe.best) {
      throw NonConvergence("bandwidth oracle: grid holds no far-field design");
    }
    hi = lo;
    lo -= kBracketExpansionLog2;
    lo_probe = probe_at(lo);
  }
  for (OracleProbe hi_probe = probe_at(hi); hi_probe.feasible; hi_probe = probe_at(hi)) {
    lo = hi;
    lo_probe = hi_probe;
    hi += kBracketExpansionLog2;
  }

  const double stop_width = std::log2(1.0 + cfg.b_rel_tolerance);
  while (hi - lo > stop_width) {
    const double mid = 0.5 * (lo + hi);
    OracleProbe mid_probe = probe_at(mid);
    if (mid_probe.feasible) {
      lo = mid;
      lo_probe = mid_probe;
    } else {
      hi = mid;
    }
  }

  OracleVerdict verdict;
  verdict.analytic_limit_hz = max_bandwidth_general(radio, geom).max_bandwidth_hz;
  verdict.oracle_limit_hz = std::exp2(lo);
  verdict.relative_gap = std::abs(verdict.analytic_limit_hz - verdict.oracle_limit_hz) /
                         std::max(verdict.analytic_limit_hz, std::numeric_limits<double>::min());
  verdict.witness = *lo_probe.best;
  verdict.iterations = iterations;
  return verdict;
}

PowerVerdict oracle_required_power(double bandwidth_hz, double mobility_m, double inequality_l,
                                   double snr_threshold_db, double noise_figure_db,
                                   double temperature_k, const OracleConfig& cfg) {
  cfg.validate();
  detail::require_positive(bandwidth_hz, "bandwidth");
  detail::require_at_least(mobility_m, 1.0, "mobility coefficient M");
  detail::require_at_least(inequality_l, 1.0, "inequality coefficient L");

  LinkGeometry geom;
  geom.frequency_hz = constants::kSpeedOfLight / kPowerOracleWavelengthM;
  geom.d_min_m = kPowerOracleDminM;
  geom.d_max_m = kPowerOracleDminM * mobility_m;
  geom.validate();

  const double lambda = geom.wavelength_m();
  const double extent = std::sqrt(lambda * geom.d_min_m) / 2.0;
  const std::size_t n = cfg.d_grid_points;

  RadioParams radio;
  radio.snr_threshold_db = snr_threshold_db;
  radio.noise_figure_db = noise_figure_db;
  radio.temperature_k = temperature_k;

  std::size_t iterations = 0;
  auto probe_at = [&](double ptx_dbm) {
    ++iterations;
    if (iterations > cfg.max_iterations) {
      bracket_failure("power oracle", cfg.max_iterations);
    }
    radio.ptx_dbm = ptx_dbm;
    Candidate best;
    for (std::size_t i = 1; i < n; ++i) {
      const double d1 = grid_value(extent, i, n);
      const double d2 = d1 / inequality_l;
      if (!condition1_holds(geom, d1, d2)) {
        continue;
      }
      consider(best, snr_at_distance_db(radio, lambda, d1, d2, bandwidth_hz, geom.d_max_m), d1,
               d2);
    }
    return finish_probe(radio, geom, bandwidth_hz, best);
  };

  double lo = kPowerBracketLowDbm;
  double hi = kPowerBracketHighDbm;
  OracleProbe hi_probe = probe_at(hi);
  while (!hi_probe.feasible) {
    if (!hi_probe.best) {
      throw NonConvergence("power oracle: grid holds no far-field design");
    }
    lo = hi;
    hi += kPowerBracketExpansionDb;
    hi_probe = probe_at(hi);
  }
  for (OracleProbe lo_probe = probe_at(lo); lo_probe.feasible; lo_probe = probe_at(lo)) {
    hi = lo;
    hi_probe = lo_probe;
    lo -= kPowerBracketExpansionDb;
  }

  const double stop_width_db = 10.0 * std::log10(1.0 + cfg.b_rel_tolerance);
  while (hi - lo > stop_width_db) {
    const double mid = 0.5 * (lo + hi);
    OracleProbe mid_probe = probe_at(mid);
    if (mid_probe.feasible) {
      hi = mid;
      hi_probe = mid_probe;
    } else {
      lo = mid;
    }
  }

  PowerVerdict verdict;
  verdict.analytic_dbm = required_tx_power_dbm(bandwidth_hz, mobility_m, inequality_l,
                                               snr_threshold_db, noise_figure_db, temperature_k);
  verdict.oracle_dbm = hi;
  verdict.gap_db = std::abs(verdict.analytic_dbm - verdict.oracle_dbm);
  verdict.witness = *hi_probe.best;
  verdict.iterations = iterations;
  return verdict;
}

}  // namespace thzff
