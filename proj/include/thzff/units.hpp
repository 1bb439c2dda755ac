#pragma once

namespace thzff {

namespace constants {
inline constexpr double kBoltzmann = 1.380649e-23;     // J/K, exact (SI 2019)
inline constexpr double kSpeedOfLight = 299792458.0;   // m/s, exact
}  // namespace constants

/// A dimensionless ratio on the decibel scale.
struct Db {
  double value;
};

/// Absolute power referenced to 1 mW.
struct Dbm {
  double value;
};

/// 10^(x/10). Throws DomainError for non-finite input.
double db_to_linear(Db x);

/// Inverse of db_to_linear. The ratio must be finite and strictly positive.
Db linear_to_db(double ratio);

/// Power in watts; computed as db_to_linear(p) / 1000.
double dbm_to_watts(Dbm p);

Dbm watts_to_dbm(double watts);

/// Free-space wavelength c/f in metres.
double wavelength(double frequency_hz);

}  // namespace thzff
