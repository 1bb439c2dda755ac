#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace thzff {

/// Malformed, unreadable or semantically invalid scenario document.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Flat JSON scenario document. Every key carries its unit in its suffix
/// (ptx_dbm, snr_db, temp_k, freq_hz, d_min_m, ...); the dimensionless
/// coefficients are plain m, l, n1 and n2.
struct ScenarioConfig {
  std::map<std::string, double> values;

  std::optional<double> get(std::string_view key) const;
};

/// Keys accepted in a scenario document.
const std::map<std::string, std::string>& scenario_keys();

/// Rejects unknown keys, keys whose unit suffix does not match the quantity,
/// and non-numeric values. Parse errors report line and column.
ScenarioConfig parse_scenario_config(std::string_view text);

ScenarioConfig load_config(const std::filesystem::path& path);

/// Reads a whole file; throws ConfigError naming the path on failure.
std::string read_text_file(const std::filesystem::path& path);

/// 1-based line and column of a byte offset within `text`.
std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset);

}  // namespace thzff
