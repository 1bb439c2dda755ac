#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace thzff {

enum class Scenario { fig2a, fig2b, fig2c, fig4a, fig4b, fig4c, fig7, custom };
enum class OutputQuantity { max_bandwidth, antenna_size, required_power };

/// Scenario parameters a sweep row is evaluated from. Keys double as CSV
/// column names and JSON config keys.
enum class Param { ptx_dbm, snr_db, nf_db, temp_k, freq_hz, d_min_m, m, l, bandwidth_hz };
inline constexpr std::size_t kParamCount = 9;

std::string_view to_string(Scenario s);
std::string_view to_string(OutputQuantity q);
std::string_view to_string(Param p);
std::optional<Scenario> parse_scenario(std::string_view name);
std::optional<OutputQuantity> parse_output_quantity(std::string_view name);
std::optional<Param> parse_param(std::string_view name);

/// One full parameter assignment; every row carries one.
class ParamPoint {
 public:
  ParamPoint();
  double operator[](Param p) const { return values_[static_cast<std::size_t>(p)]; }
  double& operator[](Param p) { return values_[static_cast<std::size_t>(p)]; }

 private:
  std::array<double, kParamCount> values_;
};

struct Axis {
  Param param;
  std::vector<double> values;

  /// start, start + step, ... up to stop (inclusive, with a 1e-9 step allowance).
  static Axis range(Param param, double start, double stop, double step);
  static Axis list(Param param, std::vector<double> values);
};

/// A named curve: overrides applied on top of the fixed parameters.
struct Series {
  std::string label;
  std::map<Param, double> overrides;
};

struct SweepSpec {
  Scenario scenario = Scenario::custom;
  OutputQuantity output = OutputQuantity::max_bandwidth;
  /// Explicitly fixed parameters. Anything absent here and not swept takes its
  /// default, and is listed as such in the JSON meta block.
  std::map<Param, double> fixed;
  std::vector<Axis> axes;
  std::vector<Series> series;

  /// Throws SweepSpecError naming the offending field.
  void validate() const;
};

class SweepSpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Value used for a parameter no preset or config sets.
double default_value(Param p);

SweepSpec preset(Scenario scenario);

/// Reads a sweep document: {"scenario", "output", "fixed", "axes", "series"}.
/// `base` supplies scenario defaults that the document may override.
SweepSpec sweep_spec_from_json(const nlohmann::json& doc, std::optional<SweepSpec> base);

struct SweepRow {
  std::string series;
  ParamPoint params;
  std::map<std::string, double> outputs;
  bool feasible = true;
};

struct SweepTable {
  SweepSpec spec;
  std::vector<std::string> output_columns;
  std::vector<SweepRow> rows;
};

/// Evaluates every grid point; rows ordered by series, then lexicographically
/// over the axes in declaration order (first axis slowest).
SweepTable run_sweep(const SweepSpec& spec);

enum class TableFormat { csv, json };

/// Throws std::runtime_error if the table is empty or the stream fails.
void emit_table(const SweepTable& table, TableFormat format, std::ostream& out);

nlohmann::json table_to_json(const SweepTable& table);

/// Shortest decimal text that parses back to exactly `value`.
std::string format_number(double value);

}  // namespace thzff
