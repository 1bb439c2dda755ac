#include "thzff/sweep.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "thzff/error.hpp"
#include "thzff/feasibility.hpp"
#include "thzff/geometry.hpp"
#include "thzff/units.hpp"
#include "thzff/version.hpp"

namespace thzff {
namespace {

constexpr std::array<Param, kParamCount> kAllParams = {
    Param::ptx_dbm, Param::snr_db, Param::nf_db, Param::temp_k,      Param::freq_hz,
    Param::d_min_m, Param::m,      Param::l,     Param::bandwidth_hz};

using nlohmann::json;

[[noreturn]] void reject(const std::string& field, const std::string& why) {
  throw SweepSpecError("invalid sweep field '" + field + "': " + why);
}

void check_param_value(Param p, double v, const std::string& field) {
  if (!std::isfinite(v)) {
    reject(field, "value must be finite");
  }
  switch (p) {
    case Param::temp_k:
    case Param::freq_hz:
    case Param::d_min_m:
    case Param::bandwidth_hz:
      if (!(v > 0.0)) reject(field, "value must be positive");
      break;
    case Param::m:
    case Param::l:
      if (!(v >= 1.0)) reject(field, "value must be >= 1");
      break;
    default:
      break;
  }
}

bool sets_bandwidth(const SweepSpec& spec) {
  if (spec.fixed.contains(Param::bandwidth_hz)) return true;
  for (const auto& axis : spec.axes) {
    if (axis.param == Param::bandwidth_hz) return true;
  }
  for (const auto& s : spec.series) {
    if (s.overrides.contains(Param::bandwidth_hz)) return true;
  }
  return false;
}

std::vector<std::string> output_columns(OutputQuantity q) {
  switch (q) {
    case OutputQuantity::max_bandwidth:
      return {"max_bandwidth_hz", "mobility_penalty", "d1_m", "d2_m"};
    case OutputQuantity::antenna_size:
      return {"d1_m", "d2_m", "n1", "n2", "fraunhofer_m"};
    case OutputQuantity::required_power:
      return {"required_ptx_dbm"};
  }
  return {};
}

SweepRow evaluate(const ParamPoint& pt, OutputQuantity q, bool bandwidth_given) {
  SweepRow row;
  row.params = pt;
  const double lambda = wavelength(pt[Param::freq_hz]);
  switch (q) {
    case OutputQuantity::max_bandwidth: {
      RadioParams radio{pt[Param::ptx_dbm], pt[Param::snr_db], pt[Param::nf_db],
                        pt[Param::temp_k]};
      const BandwidthLimit limit = max_bandwidth_mobile(radio, pt[Param::m], pt[Param::l]);
      const SizePair sizes = ratio_split_sizes(lambda, pt[Param::d_min_m], pt[Param::l]);
      row.outputs["max_bandwidth_hz"] = limit.max_bandwidth_hz;
      row.outputs["mobility_penalty"] = mobility_penalty(pt[Param::m], pt[Param::l]);
      row.outputs["d1_m"] = sizes.d1_m;
      row.outputs["d2_m"] = sizes.d2_m;
      row.feasible = bandwidth_given ? pt[Param::bandwidth_hz] <= limit.max_bandwidth_hz
                                     : limit.max_bandwidth_hz > 0.0;
      break;
    }
    case OutputQuantity::antenna_size: {
      const SizePair sizes = ratio_split_sizes(lambda, pt[Param::d_min_m], pt[Param::l]);
      row.outputs["d1_m"] = sizes.d1_m;
      row.outputs["d2_m"] = sizes.d2_m;
      row.outputs["n1"] = elements_from_size(sizes.d1_m, lambda);
      row.outputs["n2"] = elements_from_size(sizes.d2_m, lambda);
      row.outputs["fraunhofer_m"] = fraunhofer_two_arrays(sizes.d1_m, sizes.d2_m, lambda);
      break;
    }
    case OutputQuantity::required_power:
      row.outputs["required_ptx_dbm"] =
          required_tx_power_dbm(pt[Param::bandwidth_hz], pt[Param::m], pt[Param::l],
                                pt[Param::snr_db], pt[Param::nf_db], pt[Param::temp_k]);
      break;
  }
  return row;
}

// Recursive Cartesian walk; the first axis varies slowest.
void walk_axes(const SweepSpec& spec, std::size_t depth, ParamPoint& pt, const std::string& label,
               bool bandwidth_given, std::vector<SweepRow>& rows) {
  if (depth == spec.axes.size()) {
    SweepRow row = evaluate(pt, spec.output, bandwidth_given);
    row.series = label;
    rows.push_back(std::move(row));
    return;
  }
  const Axis& axis = spec.axes[depth];
  for (double v : axis.values) {
    pt[axis.param] = v;
    walk_axes(spec, depth + 1, pt, label, bandwidth_given, rows);
  }
}

json params_to_json(const std::map<Param, double>& values) {
  json out = json::object();
  for (const auto& [p, v] : values) {
    out[std::string(to_string(p))] = v;
  }
  return out;
}

std::map<Param, double> params_from_json(const json& obj, const std::string& field) {
  if (!obj.is_object()) {
    reject(field, "expected an object");
  }
  std::map<Param, double> out;
  for (const auto& [key, value] : obj.items()) {
    const auto p = parse_param(key);
    if (!p) reject(field + "." + key, "unknown parameter");
    if (!value.is_number()) reject(field + "." + key, "expected a number");
    out[*p] = value.get<double>();
  }
  return out;
}

}  // namespace

std::string_view to_string(Scenario s) {
  switch (s) {
    case Scenario::fig2a: return "fig2a";
    case Scenario::fig2b: return "fig2b";
    case Scenario::fig2c: return "fig2c";
    case Scenario::fig4a: return "fig4a";
    case Scenario::fig4b: return "fig4b";
    case Scenario::fig4c: return "fig4c";
    case Scenario::fig7: return "fig7";
    case Scenario::custom: return "custom";
  }
  return "custom";
}

std::string_view to_string(OutputQuantity q) {
  switch (q) {
    case OutputQuantity::max_bandwidth: return "max_bandwidth";
    case OutputQuantity::antenna_size: return "antenna_size";
    case OutputQuantity::required_power: return "required_power";
  }
  return "max_bandwidth";
}

std::string_view to_string(Param p) {
  switch (p) {
    case Param::ptx_dbm: return "ptx_dbm";
    case Param::snr_db: return "snr_db";
    case Param::nf_db: return "nf_db";
    case Param::temp_k: return "temp_k";
    case Param::freq_hz: return "freq_hz";
    case Param::d_min_m: return "d_min_m";
    case Param::m: return "m";
    case Param::l: return "l";
    case Param::bandwidth_hz: return "bandwidth_hz";
  }
  return "";
}

std::optional<Scenario> parse_scenario(std::string_view name) {
  for (Scenario s : {Scenario::fig2a, Scenario::fig2b, Scenario::fig2c, Scenario::fig4a,
                     Scenario::fig4b, Scenario::fig4c, Scenario::fig7, Scenario::custom}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

std::optional<OutputQuantity> parse_output_quantity(std::string_view name) {
  for (OutputQuantity q : {OutputQuantity::max_bandwidth, OutputQuantity::antenna_size,
                           OutputQuantity::required_power}) {
    if (to_string(q) == name) return q;
  }
  return std::nullopt;
}

std::optional<Param> parse_param(std::string_view name) {
  for (Param p : kAllParams) {
    if (to_string(p) == name) return p;
  }
  return std::nullopt;
}

double default_value(Param p) {
  switch (p) {
    case Param::ptx_dbm: return 23.0;
    case Param::snr_db: return 20.0;
    case Param::nf_db: return 10.0;
    case Param::temp_k: return 296.0;
    case Param::freq_hz: return 300e9;
    case Param::d_min_m: return 10.0;
    case Param::m: return 1.0;
    case Param::l: return 1.0;
    case Param::bandwidth_hz: return 10e9;
  }
  return 0.0;
}

ParamPoint::ParamPoint() {
  for (Param p : kAllParams) {
    (*this)[p] = default_value(p);
  }
}

Axis Axis::range(Param param, double start, double stop, double step) {
  const std::string field = "axes." + std::string(to_string(param));
  if (!std::isfinite(start) || !std::isfinite(stop) || !std::isfinite(step)) {
    reject(field, "range bounds must be finite");
  }
  if (!(step > 0.0)) reject(field, "step must be positive");
  if (stop < start) reject(field, "empty range (stop < start)");
  const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
  Axis axis{param, {}};
  axis.values.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    axis.values.push_back(start + static_cast<double>(i) * step);
  }
  return axis;
}

Axis Axis::list(Param param, std::vector<double> values) {
  return Axis{param, std::move(values)};
}

void SweepSpec::validate() const {
  if (axes.empty() || axes.size() > 2) {
    reject("axes", "expected one or two swept axes, got " + std::to_string(axes.size()));
  }
  std::set<Param> swept;
  for (const auto& axis : axes) {
    const std::string field = "axes." + std::string(to_string(axis.param));
    if (!swept.insert(axis.param).second) reject(field, "axis listed twice");
    if (fixed.contains(axis.param)) reject(field, "parameter is both swept and fixed");
    if (axis.values.empty()) reject(field, "no values");
    for (double v : axis.values) check_param_value(axis.param, v, field);
  }
  for (const auto& [p, v] : fixed) {
    check_param_value(p, v, "fixed." + std::string(to_string(p)));
  }
  std::set<std::string> labels;
  for (const auto& s : series) {
    if (s.label.empty()) reject("series", "series label must be non-empty");
    if (!labels.insert(s.label).second) reject("series." + s.label, "duplicate label");
    for (const auto& [p, v] : s.overrides) {
      const std::string field = "series." + s.label + "." + std::string(to_string(p));
      if (swept.contains(p)) reject(field, "parameter is swept");
      check_param_value(p, v, field);
    }
  }
}

SweepSpec preset(Scenario scenario) {
  SweepSpec spec;
  spec.scenario = scenario;
  switch (scenario) {
    case Scenario::fig2a:
      spec.output = OutputQuantity::max_bandwidth;
      spec.fixed = {{Param::snr_db, 30.0}, {Param::temp_k, 296.0}};
      spec.axes = {Axis::list(Param::nf_db, {0.0, 5.0, 10.0, 15.0}),
                   Axis::range(Param::ptx_dbm, -20.0, 40.0, 1.0)};
      break;
    case Scenario::fig2b:
      spec.output = OutputQuantity::max_bandwidth;
      spec.fixed = {{Param::ptx_dbm, 17.0}, {Param::temp_k, 296.0}};
      spec.axes = {Axis::list(Param::nf_db, {0.0, 5.0, 10.0, 15.0}),
                   Axis::range(Param::snr_db, 0.0, 40.0, 1.0)};
      break;
    case Scenario::fig2c:
      spec.output = OutputQuantity::antenna_size;
      spec.fixed = {{Param::m, 1.0}, {Param::l, 1.0}};
      spec.axes = {Axis::list(Param::d_min_m, {50.0, 100.0, 200.0, 400.0}),
                   Axis::range(Param::freq_hz, 100e9, 1000e9, 10e9)};
      break;
    case Scenario::fig4a:
      spec.output = OutputQuantity::max_bandwidth;
      spec.fixed = {{Param::ptx_dbm, 23.0}, {Param::nf_db, 10.0}, {Param::snr_db, 20.0},
                    {Param::l, 1.0},        {Param::temp_k, 296.0}};
      spec.axes = {Axis::range(Param::m, 1.0, 100.0, 1.0)};
      break;
    case Scenario::fig4b:
      spec.output = OutputQuantity::max_bandwidth;
      spec.fixed = {{Param::ptx_dbm, 23.0}, {Param::nf_db, 10.0}, {Param::snr_db, 20.0},
                    {Param::temp_k, 296.0}};
      spec.axes = {Axis::list(Param::m, {1.0, 10.0, 40.0, 50.0}),
                   Axis::range(Param::l, 1.0, 50.0, 1.0)};
      break;
    case Scenario::fig4c:
      spec.output = OutputQuantity::antenna_size;
      spec.fixed = {{Param::d_min_m, 10.0}};
      spec.axes = {Axis::list(Param::l, {1.0, 10.0, 20.0, 30.0}),
                   Axis::range(Param::freq_hz, 100e9, 1000e9, 10e9)};
      break;
    case Scenario::fig7:
      spec.output = OutputQuantity::required_power;
      spec.fixed = {{Param::snr_db, 20.0}, {Param::nf_db, 10.0}, {Param::temp_k, 296.0}};
      spec.axes = {Axis::range(Param::bandwidth_hz, 1e9, 100e9, 1e9)};
      spec.series = {
          {"stationary", {{Param::l, 1.0}, {Param::m, 1.0}}},
          {"smartphone_indoor", {{Param::l, 20.0}, {Param::m, 50.0}}},
          {"smartphone_outdoor", {{Param::l, 20.0}, {Param::m, 40.0}}},
          {"xr_indoor", {{Param::l, 30.0}, {Param::m, 50.0}}},
          {"xr_outdoor", {{Param::l, 30.0}, {Param::m, 40.0}}},
      };
      break;
    case Scenario::custom:
      break;
  }
  return spec;
}

SweepSpec sweep_spec_from_json(const json& doc, std::optional<SweepSpec> base) {
  if (!doc.is_object()) {
    reject("<root>", "expected a JSON object");
  }
  static const std::set<std::string> kKeys = {"scenario", "output", "fixed", "axes", "series"};
  for (const auto& [key, value] : doc.items()) {
    if (!kKeys.contains(key)) reject(key, "unknown key");
  }

  SweepSpec spec = base.value_or(SweepSpec{});
  if (doc.contains("scenario")) {
    if (!doc["scenario"].is_string()) reject("scenario", "expected a string");
    const auto s = parse_scenario(doc["scenario"].get<std::string>());
    if (!s) reject("scenario", "unknown scenario");
    if (!base) spec = preset(*s);
    spec.scenario = *s;
  }
  if (doc.contains("output")) {
    if (!doc["output"].is_string()) reject("output", "expected a string");
    const auto q = parse_output_quantity(doc["output"].get<std::string>());
    if (!q) reject("output", "unknown output quantity");
    spec.output = *q;
  }
  if (doc.contains("axes")) {
    const json& axes = doc["axes"];
    if (!axes.is_array()) reject("axes", "expected an array");
    spec.axes.clear();
    for (const auto& a : axes) {
      if (!a.is_object() || !a.contains("name") || !a["name"].is_string()) {
        reject("axes", "each axis needs a string 'name'");
      }
      const std::string name = a["name"].get<std::string>();
      const auto p = parse_param(name);
      if (!p) reject("axes." + name, "unknown parameter");
      if (a.contains("values")) {
        if (!a["values"].is_array()) reject("axes." + name + ".values", "expected an array");
        std::vector<double> values;
        for (const auto& v : a["values"]) {
          if (!v.is_number()) reject("axes." + name + ".values", "expected numbers");
          values.push_back(v.get<double>());
        }
        spec.axes.push_back(Axis::list(*p, std::move(values)));
      } else {
        for (const char* k : {"start", "stop", "step"}) {
          if (!a.contains(k) || !a[k].is_number()) {
            reject("axes." + name + "." + k, "expected a number");
          }
        }
        spec.axes.push_back(Axis::range(*p, a["start"].get<double>(), a["stop"].get<double>(),
                                        a["step"].get<double>()));
      }
    }
  }
  if (doc.contains("fixed")) {
    for (const auto& [p, v] : params_from_json(doc["fixed"], "fixed")) {
      spec.fixed[p] = v;
    }
  }
  // Axes given by the document take precedence over fixed values inherited from a preset.
  for (const auto& axis : spec.axes) {
    if (doc.contains("fixed") && doc["fixed"].contains(std::string(to_string(axis.param)))) {
      continue;
    }
    spec.fixed.erase(axis.param);
  }
  if (doc.contains("series")) {
    const json& series = doc["series"];
    if (!series.is_array()) reject("series", "expected an array");
    spec.series.clear();
    for (const auto& s : series) {
      if (!s.is_object() || !s.contains("label") || !s["label"].is_string()) {
        reject("series", "each series needs a string 'label'");
      }
      Series entry;
      entry.label = s["label"].get<std::string>();
      if (s.contains("overrides")) {
        entry.overrides = params_from_json(s["overrides"], "series." + entry.label);
      }
      spec.series.push_back(std::move(entry));
    }
  }
  spec.validate();
  return spec;
}

SweepTable run_sweep(const SweepSpec& spec) {
  spec.validate();
  SweepTable table;
  table.spec = spec;
  table.output_columns = output_columns(spec.output);
  const bool bandwidth_given = sets_bandwidth(spec);

  ParamPoint base;
  for (const auto& [p, v] : spec.fixed) {
    base[p] = v;
  }
  if (spec.series.empty()) {
    ParamPoint pt = base;
    walk_axes(spec, 0, pt, std::string(to_string(spec.scenario)), bandwidth_given, table.rows);
  } else {
    for (const auto& s : spec.series) {
      ParamPoint pt = base;
      for (const auto& [p, v] : s.overrides) {
        pt[p] = v;
      }
      walk_axes(spec, 0, pt, s.label, bandwidth_given, table.rows);
    }
  }
  return table;
}

std::string format_number(double value) {
  std::array<char, 64> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc{}) {
    throw std::runtime_error("number formatting failed");
  }
  return std::string(buf.data(), end);
}

json table_to_json(const SweepTable& table) {
  const SweepSpec& spec = table.spec;
  std::set<Param> swept;
  for (const auto& axis : spec.axes) swept.insert(axis.param);

  json meta;
  meta["tool"] = "thzff";
  meta["version"] = std::string(kVersion);
  meta["scenario"] = std::string(to_string(spec.scenario));
  meta["output"] = std::string(to_string(spec.output));

  std::map<Param, double> effective;
  json defaults = json::array();
  for (Param p : kAllParams) {
    if (swept.contains(p)) continue;
    if (auto it = spec.fixed.find(p); it != spec.fixed.end()) {
      effective[p] = it->second;
    } else {
      effective[p] = default_value(p);
      defaults.push_back(std::string(to_string(p)));
    }
  }
  meta["fixed"] = params_to_json(effective);
  meta["defaults"] = defaults;
  meta["temperature_k"] = effective.contains(Param::temp_k) ? effective[Param::temp_k]
                                                            : default_value(Param::temp_k);
  json axes = json::array();
  for (const auto& axis : spec.axes) {
    axes.push_back({{"name", std::string(to_string(axis.param))}, {"values", axis.values}});
  }
  meta["axes"] = axes;
  json series = json::array();
  for (const auto& s : spec.series) {
    series.push_back({{"label", s.label}, {"overrides", params_to_json(s.overrides)}});
  }
  meta["series"] = series;

  json rows = json::array();
  for (const auto& row : table.rows) {
    json r;
    r["series"] = row.series;
    for (Param p : kAllParams) {
      r[std::string(to_string(p))] = row.params[p];
    }
    r["d_max_m"] = row.params[Param::d_min_m] * row.params[Param::m];
    for (const auto& col : table.output_columns) {
      r[col] = row.outputs.at(col);
    }
    r["feasible"] = row.feasible;
    rows.push_back(std::move(r));
  }
  return json{{"meta", meta}, {"rows", rows}};
}

void emit_table(const SweepTable& table, TableFormat format, std::ostream& out) {
  if (table.rows.empty()) {
    throw std::runtime_error("emit_table: table has no rows");
  }
  if (format == TableFormat::json) {
    out << table_to_json(table).dump(2) << '\n';
  } else {
    out << "series";
    for (Param p : kAllParams) out << ',' << to_string(p);
    out << ",d_max_m";
    for (const auto& col : table.output_columns) out << ',' << col;
    out << ",feasible\n";
    for (const auto& row : table.rows) {
      out << row.series;
      for (Param p : kAllParams) out << ',' << format_number(row.params[p]);
      out << ',' << format_number(row.params[Param::d_min_m] * row.params[Param::m]);
      for (const auto& col : table.output_columns) out << ',' << format_number(row.outputs.at(col));
      out << ',' << (row.feasible ? "true" : "false") << '\n';
    }
  }
  out.flush();
  if (!out) {
    throw std::runtime_error("emit_table: write to output stream failed");
  }
}

}  // namespace thzff
