#pragma once

#include <cstddef>
#include <optional>

#include "thzff/linkbudget.hpp"

namespace thzff {

// Brute-force cross-checks of the closed forms. Everything here is evaluated
// through the Fraunhofer and Friis primitives only; the feasibility module is
// consulted solely for the analytic value being compared against.

struct OracleConfig {
  std::size_t d_grid_points = 512;
  double b_rel_tolerance = 1e-4;
  std::size_t max_iterations = 200;
  /// Skip D2 values below each row's far-field frontier. SNR grows with D2, so
  /// the frontier pair dominates its row and the outcome equals the full scan.
  bool prune_dominated = true;

  void validate() const;
};

struct Witness {
  double d1_m = 0.0;
  double d2_m = 0.0;
};

struct OracleProbe {
  bool feasible = false;
  /// Grid pair with the highest SNR at d_max among far-field pairs; present
  /// whenever at least one non-degenerate pair satisfies Condition 1.
  std::optional<Witness> best;
  /// SNR of `best` minus the threshold, dB.
  double margin_db = 0.0;
};

/// Uniform grid over [0, sqrt(lambda d_min)/2]^2. The grid under-approximates
/// the feasible set, so a false result at coarse resolution is not conclusive.
OracleProbe oracle_feasible(const RadioParams& radio, const LinkGeometry& geom,
                            double bandwidth_hz, const OracleConfig& cfg);

struct OracleVerdict {
  double analytic_limit_hz = 0.0;
  double oracle_limit_hz = 0.0;
  double relative_gap = 0.0;
  Witness witness;
  std::size_t iterations = 0;
};

/// Bisects log2(B) for the largest grid-feasible bandwidth. Throws NonConvergence.
OracleVerdict oracle_max_bandwidth(const RadioParams& radio, const LinkGeometry& geom,
                                   const OracleConfig& cfg);

struct PowerVerdict {
  double analytic_dbm = 0.0;
  double oracle_dbm = 0.0;
  double gap_db = 0.0;  // |analytic - oracle|
  Witness witness;
  std::size_t iterations = 0;
};

/// Bisects transmit power for the smallest value at which some grid design
/// with D1 = l D2 carries bandwidth_hz. Throws NonConvergence.
PowerVerdict oracle_required_power(double bandwidth_hz, double mobility_m, double inequality_l,
                                   double snr_threshold_db, double noise_figure_db,
                                   double temperature_k, const OracleConfig& cfg);

}  // namespace thzff
