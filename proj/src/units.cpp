#include "thzff/units.hpp"

#include <cmath>

#include "thzff/error.hpp"

namespace thzff {

double db_to_linear(Db x) {
  detail::require_finite(x.value, "dB value");
  return std::pow(10.0, x.value / 10.0);
}

Db linear_to_db(double ratio) {
  detail::require_positive(ratio, "linear ratio");
  return Db{10.0 * std::log10(ratio)};
}

double dbm_to_watts(Dbm p) {
  detail::require_finite(p.value, "power in dBm");
  return db_to_linear(Db{p.value}) / 1000.0;
}

Dbm watts_to_dbm(double watts) {
  detail::require_positive(watts, "power in W");
  return Dbm{linear_to_db(watts * 1000.0).value};
}

double wavelength(double frequency_hz) {
  detail::require_positive(frequency_hz, "frequency");
  return constants::kSpeedOfLight / frequency_hz;
}

}  // namespace thzff
