#include "thzff/config.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace thzff {
namespace {

// key -> human description; the suffix after the quantity name is the unit.
const std::map<std::string, std::string> kKeys = {
    {"ptx_dbm", "transmit power, dBm"},
    {"snr_db", "SNR threshold, dB"},
    {"nf_db", "noise figure, dB"},
    {"temp_k", "system temperature, K"},
    {"freq_hz", "carrier frequency, Hz"},
    {"d_min_m", "minimum link distance, m"},
    {"d_max_m", "maximum link distance, m"},
    {"distance_m", "stationary link distance, m"},
    {"m", "mobility coefficient d_max/d_min"},
    {"l", "antenna inequality coefficient D1/D2"},
    {"d2_max_m", "Rx array side cap, m"},
    {"d1_m", "Tx array side, m"},
    {"d2_m", "Rx array side, m"},
    {"n1", "Tx elements per side"},
    {"n2", "Rx elements per side"},
    {"bandwidth_hz", "signal bandwidth, Hz"},
};

constexpr std::string_view kUnitSuffixes[] = {"dbm", "db", "k", "hz", "m", "w", "mw", "ghz",
                                              "thz", "mhz", "khz", "cm", "mm", "km", "c", "s"};

// Splits "freq_ghz" into ("freq", "ghz") when the tail looks like a unit.
std::optional<std::pair<std::string, std::string>> split_unit(const std::string& key) {
  const auto pos = key.rfind('_');
  if (pos == std::string::npos || pos == 0) return std::nullopt;
  std::string unit = key.substr(pos + 1);
  for (auto u : kUnitSuffixes) {
    if (unit == u) return std::make_pair(key.substr(0, pos), unit);
  }
  return std::nullopt;
}

}  // namespace

std::optional<double> ScenarioConfig::get(std::string_view key) const {
  if (auto it = values.find(std::string(key)); it != values.end()) {
    return it->second;
  }
  return std::nullopt;
}

const std::map<std::string, std::string>& scenario_keys() { return kKeys; }

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

ScenarioConfig parse_scenario_config(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    const auto [line, column] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ConfigError("malformed JSON at line " + std::to_string(line) + ", column " +
                      std::to_string(column));
  }
  if (!doc.is_object()) {
    throw ConfigError("scenario config must be a JSON object");
  }

  ScenarioConfig config;
  for (const auto& [key, value] : doc.items()) {
    if (!kKeys.contains(key)) {
      if (const auto split = split_unit(key)) {
        for (const auto& [known, what] : kKeys) {
          const auto known_split = split_unit(known);
          if (known_split && known_split->first == split->first) {
            throw ConfigError("unit-suffix mismatch for key '" + key + "': expected '" + known +
                              "' (" + what + ")");
          }
        }
      }
      throw ConfigError("unknown key '" + key + "'");
    }
    if (!value.is_number()) {
      throw ConfigError("key '" + key + "' must be a number");
    }
    config.values[key] = value.get<double>();
  }
  return config;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ConfigError("cannot open '" + path.string() + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) {
    throw ConfigError("error reading '" + path.string() + "'");
  }
  return buf.str();
}

ScenarioConfig load_config(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  try {
    return parse_scenario_config(text);
  } catch (const ConfigError& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

}  // namespace thzff
