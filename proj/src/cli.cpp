#include "thzff/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "thzff/config.hpp"
#include "thzff/error.hpp"
#include "thzff/feasibility.hpp"
#include "thzff/geometry.hpp"
#include "thzff/linkbudget.hpp"
#include "thzff/oracle.hpp"
#include "thzff/sweep.hpp"
#include "thzff/units.hpp"
#include "thzff/version.hpp"

namespace thzff {
namespace {

using nlohmann::json;

std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// A numeric input that may come from a flag, the scenario config or a default,
// in that order of precedence.
class Params {
 public:
  void bind(CLI::App* app, const std::string& key, const std::string& flag,
            const std::string& help, std::optional<double> fallback) {
    auto slot = std::make_unique<Slot>();
    slot->key = key;
    slot->flag = flag;
    slot->fallback = fallback;
    slot->option = app->add_option(flag, slot->flag_value, help);
    slots_.push_back(std::move(slot));
  }

  void resolve(const ScenarioConfig& config) {
    for (auto& s : slots_) {
      s->config_value = config.get(s->key);
      if (s->option->count() > 0) {
        s->value = s->flag_value;
        s->source = "flag";
      } else if (s->config_value) {
        s->value = *s->config_value;
        s->source = "config";
      } else if (s->fallback) {
        s->value = *s->fallback;
        s->source = "default";
      }
    }
  }

  bool given(const std::string& key) const {
    const Slot& s = slot(key);
    return s.value && s.source != "default";
  }

  std::optional<double> find(const std::string& key) const {
    const Slot& s = slot(key);
    s.used = true;
    return s.value;
  }

  /// Records a value filled in from other parameters so that it is echoed too.
  void derive(const std::string& key, double value) const {
    const Slot& s = slot(key);
    s.used = true;
    if (!s.value) {
      s.value = value;
      s.source = "derived";
    }
  }

  double get(const std::string& key) const {
    const Slot& s = slot(key);
    s.used = true;
    if (!s.value) {
      throw ConfigError("missing required parameter " + s.flag + " (config key '" + key + "')");
    }
    return *s.value;
  }

  json echo() const {
    json out = json::object();
    for (const auto& s : slots_) {
      if (!s->value || !s->used) continue;
      json entry = {{"value", *s->value}, {"source", s->source}};
      if (s->config_value && s->source == "flag") {
        entry["config_value"] = *s->config_value;
      }
      out[s->key] = entry;
    }
    return out;
  }

  void print(std::ostream& out) const {
    out << "parameters:\n";
    for (const auto& s : slots_) {
      if (!s->value || !s->used) continue;
      out << "  " << std::left << std::setw(14) << s->key << " = " << fmt(*s->value) << "  ("
          << s->source;
      if (s->config_value && s->source == "flag") {
        out << "; config had " << fmt(*s->config_value);
      }
      out << ")\n";
    }
  }

 private:
  struct Slot {
    std::string key;
    std::string flag;
    std::optional<double> fallback;
    double flag_value = 0.0;
    CLI::Option* option = nullptr;
    std::optional<double> config_value;
    mutable std::optional<double> value;
    mutable std::string source;
    mutable bool used = false;  // only consumed parameters are echoed
  };

  const Slot& slot(const std::string& key) const {
    for (const auto& s : slots_) {
      if (s->key == key) return *s;
    }
    throw std::logic_error("parameter not bound: " + key);
  }

  std::vector<std::unique_ptr<Slot>> slots_;
};

struct Command {
  CLI::App* app = nullptr;
  Params params;
  bool json_output = false;
  bool strict = false;
  std::string config_path;
};

std::unique_ptr<Command> make_command(CLI::App& root, const std::string& name,
                                      const std::string& description) {
  auto cmd = std::make_unique<Command>();
  cmd->app = root.add_subcommand(name, description);
  cmd->app->add_flag("--json", cmd->json_output, "Machine-readable JSON output");
  cmd->app->add_flag("--strict", cmd->strict, "Exit with code 1 on infeasible designs");
  cmd->app->add_option("--config", cmd->config_path, "JSON scenario config")
      ->check(CLI::ExistingFile);
  return cmd;
}

void bind_radio(Command& cmd, bool with_power) {
  if (with_power) {
    cmd.params.bind(cmd.app, "ptx_dbm", "--ptx-dbm", "Transmit power, dBm",
                    default_value(Param::ptx_dbm));
  }
  cmd.params.bind(cmd.app, "snr_db", "--snr-db", "SNR threshold, dB",
                  default_value(Param::snr_db));
  cmd.params.bind(cmd.app, "nf_db", "--nf-db", "Receiver noise figure, dB",
                  default_value(Param::nf_db));
  cmd.params.bind(cmd.app, "temp_k", "--temp-k", "System temperature, K",
                  default_value(Param::temp_k));
}

RadioParams radio_from(const Params& p) {
  RadioParams radio{p.get("ptx_dbm"), p.get("snr_db"), p.get("nf_db"), p.get("temp_k")};
  radio.validate();
  return radio;
}

LinkGeometry geometry_from(const Params& p) {
  LinkGeometry geom;
  geom.frequency_hz = p.get("freq_hz");
  geom.d_min_m = p.get("d_min_m");
  geom.d_max_m = p.find("d_max_m").value_or(geom.d_min_m);
  p.derive("d_max_m", geom.d_max_m);
  geom.validate();
  return geom;
}

json limit_json(const BandwidthLimit& limit) {
  json out = {{"max_bandwidth_hz", limit.max_bandwidth_hz},
              {"regime", std::string(to_string(limit.regime))}};
  if (limit.optimal_d1_m) out["optimal_d1_m"] = *limit.optimal_d1_m;
  if (limit.optimal_d2_m) out["optimal_d2_m"] = *limit.optimal_d2_m;
  return out;
}

json report_json(const FeasibilityReport& r) {
  json out = {{"p_m", r.p}, {"q_m2", r.q}, {"discriminant_m2", r.discriminant},
              {"feasible", r.feasible}};
  if (r.root_low_m) out["root_low_x1_m"] = *r.root_low_m;
  if (r.root_high_m) out["root_high_x2_m"] = *r.root_high_m;
  return out;
}

// Writes either the JSON document or the human summary lines.
struct Output {
  Output(const Command& c, std::ostream& o) : cmd(c), out(o) {}

  const Command& cmd;
  std::ostream& out;
  json result = json::object();
  std::vector<std::string> lines;

  void add(const std::string& key, const json& value, const std::string& text) {
    result[key] = value;
    if (!text.empty()) lines.push_back(text);
  }

  void flush(const std::string& name) {
    if (cmd.json_output) {
      json doc = {{"command", name},
                  {"version", std::string(kVersion)},
                  {"parameters", cmd.params.echo()},
                  {"result", result}};
      if (!cmd.config_path.empty()) doc["config"] = cmd.config_path;
      out << doc.dump(2) << '\n';
      return;
    }
    cmd.params.print(out);
    for (const auto& line : lines) out << line << '\n';
  }
};

int run_stationary(Command& cmd, std::ostream& out) {
  const RadioParams radio = radio_from(cmd.params);
  const BandwidthLimit limit = max_bandwidth_stationary(radio);
  Output o(cmd, out);
  o.add("max_bandwidth_hz", limit.max_bandwidth_hz,
        "max far-field bandwidth: " + fmt(limit.max_bandwidth_hz) + " Hz");
  o.add("capacity_bps", max_capacity_bps(limit.max_bandwidth_hz, radio.snr_threshold_db),
        "capacity at threshold SNR: " +
            fmt(max_capacity_bps(limit.max_bandwidth_hz, radio.snr_threshold_db)) + " bit/s");
  o.add("regime", std::string(to_string(limit.regime)), "");
  const auto freq = cmd.params.find("freq_hz");
  const auto distance = cmd.params.find("distance_m");
  if (freq && distance) {
    const double lambda = wavelength(*freq);
    const double side = optimal_symmetric_size(lambda, *distance);
    const SquareArray array = SquareArray::from_side(side, lambda);
    o.add("optimal_side_m", side, "optimal array side (both ends): " + fmt(side) + " m");
    o.add("elements_per_side", array.elements_per_side(),
          "elements per side: " + fmt(array.elements_per_side()) + " (realizable " +
              std::to_string(array.realizable_elements()) + ")");
    o.add("realizable_elements", array.realizable_elements(), "");
    o.add("fraunhofer_m", fraunhofer_two_arrays(side, side, lambda),
          "far-field boundary: " + fmt(fraunhofer_two_arrays(side, side, lambda)) + " m");
  }
  o.flush("stationary");
  return kExitOk;
}

int run_mobile(Command& cmd, std::ostream& out) {
  const RadioParams radio = radio_from(cmd.params);
  const double m = cmd.params.get("m");
  const double l = cmd.params.get("l");
  const BandwidthLimit stationary = max_bandwidth_stationary(radio);
  const BandwidthLimit limit = max_bandwidth_mobile(radio, m, l);
  const double inequality_part = std::pow(l + 1.0, 4) / (16.0 * l * l);
  Output o(cmd, out);
  o.add("stationary_limit_hz", stationary.max_bandwidth_hz,
        "stationary limit: " + fmt(stationary.max_bandwidth_hz) + " Hz");
  o.add("mobility_penalty_m2", m * m, "mobility penalty M^2: " + fmt(m * m));
  o.add("inequality_penalty", inequality_part,
        "inequality penalty (L+1)^4/(16 L^2): " + fmt(inequality_part));
  o.add("total_penalty", mobility_penalty(m, l),
        "total penalty: " + fmt(mobility_penalty(m, l)));
  o.add("max_bandwidth_hz", limit.max_bandwidth_hz,
        "max far-field bandwidth: " + fmt(limit.max_bandwidth_hz) + " Hz");
  o.add("capacity_bps", max_capacity_bps(limit.max_bandwidth_hz, radio.snr_threshold_db), "");
  o.add("regime", std::string(to_string(limit.regime)), "");
  const auto freq = cmd.params.find("freq_hz");
  const auto dmin = cmd.params.find("d_min_m");
  if (freq && dmin) {
    const SizePair sizes = ratio_split_sizes(wavelength(*freq), *dmin, l);
    o.add("d1_m", sizes.d1_m, "AP array side D1: " + fmt(sizes.d1_m) + " m");
    o.add("d2_m", sizes.d2_m, "UE array side D2: " + fmt(sizes.d2_m) + " m");
  }
  o.flush("mobile");
  return kExitOk;
}

int run_mobile_fixed(Command& cmd, std::ostream& out) {
  const RadioParams radio = radio_from(cmd.params);
  const LinkGeometry geom = geometry_from(cmd.params);
  const double d2_max = cmd.params.get("d2_max_m");
  Output o(cmd, out);
  o.add("mobility", geom.mobility(), "");
  try {
    const BandwidthLimit limit = max_bandwidth_mobile_fixed_rx(radio, geom, d2_max);
    o.add("feasible", true, "");
    o.add("max_bandwidth_hz", limit.max_bandwidth_hz,
          "max far-field bandwidth: " + fmt(limit.max_bandwidth_hz) + " Hz");
    o.add("d1_m", *limit.optimal_d1_m, "AP array side D1: " + fmt(*limit.optimal_d1_m) + " m");
    o.add("d2_m", *limit.optimal_d2_m, "UE array side D2: " + fmt(*limit.optimal_d2_m) + " m");
    o.add("regime", std::string(to_string(limit.regime)), "");
    o.flush("mobile-fixed");
    return kExitOk;
  } catch (const NoFarFieldDesign& e) {
    o.add("feasible", false, "infeasible: " + std::string(e.what()));
    o.add("reason", e.what(), "");
    o.flush("mobile-fixed");
    return cmd.strict ? kExitInfeasible : kExitOk;
  }
}

int run_power(Command& cmd, std::ostream& out) {
  const double b = cmd.params.get("bandwidth_hz");
  const double m = cmd.params.get("m");
  const double l = cmd.params.get("l");
  const double snr = cmd.params.get("snr_db");
  const double nf = cmd.params.get("nf_db");
  const double t = cmd.params.get("temp_k");
  const double p = required_tx_power_dbm(b, m, l, snr, nf, t);
  Output o(cmd, out);
  o.add("required_ptx_dbm", p, "required transmit power: " + fmt(p) + " dBm");
  o.add("required_ptx_w", dbm_to_watts(Dbm{p}),
        "                        " + fmt(dbm_to_watts(Dbm{p})) + " W");
  o.add("mobility_term_db", 20.0 * std::log10(m), "");
  o.add("inequality_term_db", 20.0 * std::log10((l + 1.0) * (l + 1.0) / (4.0 * l)), "");
  o.flush("power");
  return kExitOk;
}

int run_fraunhofer(Command& cmd, std::ostream& out) {
  const double freq = cmd.params.get("freq_hz");
  const double lambda = wavelength(freq);
  const bool by_size = cmd.params.given("d1_m") || cmd.params.given("d2_m");
  const bool by_count = cmd.params.given("n1") || cmd.params.given("n2");
  if (by_size == by_count) {
    throw ConfigError("fraunhofer: give either --d1-m/--d2-m or --n1/--n2");
  }
  double d1 = 0.0;
  double d2 = 0.0;
  if (by_size) {
    d1 = cmd.params.find("d1_m").value_or(0.0);
    d2 = cmd.params.find("d2_m").value_or(0.0);
  } else {
    d1 = size_from_elements(cmd.params.find("n1").value_or(0.0), lambda);
    d2 = size_from_elements(cmd.params.find("n2").value_or(0.0), lambda);
  }
  const double d_far = by_size ? fraunhofer_two_arrays(d1, d2, lambda)
                               : fraunhofer_from_elements(elements_from_size(d1, lambda),
                                                          elements_from_size(d2, lambda), lambda);
  Output o(cmd, out);
  o.add("wavelength_m", lambda, "wavelength: " + fmt(lambda) + " m");
  o.add("d1_m", d1, "");
  o.add("d2_m", d2, "");
  o.add("n1", elements_from_size(d1, lambda), "");
  o.add("n2", elements_from_size(d2, lambda), "");
  o.add("fraunhofer_m", d_far, "far-field boundary: " + fmt(d_far) + " m");
  o.flush("fraunhofer");
  return kExitOk;
}

int run_check(Command& cmd, std::ostream& out) {
  const RadioParams radio = radio_from(cmd.params);
  const LinkGeometry geom = geometry_from(cmd.params);
  const double d1 = cmd.params.get("d1_m");
  const double d2 = cmd.params.get("d2_m");
  const double b = cmd.params.get("bandwidth_hz");
  const double lambda = geom.wavelength_m();

  const bool c1 = condition1_holds(geom, d1, d2);
  const bool c2 = condition2_holds(radio, geom, d1, d2, b);
  const FeasibilityReport report = solve_d1_interval(radio, geom, b);
  const BandwidthLimit limit = max_bandwidth_general(radio, geom);

  Output o(cmd, out);
  o.add("fraunhofer_m", fraunhofer_two_arrays(d1, d2, lambda),
        "far-field boundary: " + fmt(fraunhofer_two_arrays(d1, d2, lambda)) + " m");
  o.add("condition1", c1, std::string("condition 1 (far field at d_min): ") +
                              (c1 ? "holds" : "violated"));
  if (d1 > 0.0 && d2 > 0.0) {
    const double snr = snr_at_distance_db(radio, lambda, d1, d2, b, geom.d_max_m);
    o.add("snr_at_dmax_db", snr, "SNR at d_max: " + fmt(snr) + " dB");
  }
  o.add("condition2", c2, std::string("condition 2 (SNR at d_max): ") +
                              (c2 ? "holds" : "violated"));
  std::string interval = "D1 interval: infeasible (discriminant " + fmt(report.discriminant) + ")";
  if (report.feasible) {
    interval = "D1 interval: [" + fmt(*report.root_low_m) + ", " + fmt(*report.root_high_m) + "] m";
  }
  o.add("d1_interval", report_json(report), interval);
  o.add("general_limit", limit_json(limit),
        "max far-field bandwidth for this geometry: " + fmt(limit.max_bandwidth_hz) + " Hz");
  o.add("feasible", c1 && c2, "");
  o.flush("check");
  return (cmd.strict && !(c1 && c2)) ? kExitInfeasible : kExitOk;
}

int run_oracle(Command& cmd, const std::string& mode, const OracleConfig& cfg,
               std::ostream& out) {
  Output o(cmd, out);
  o.add("mode", mode, "");
  if (mode == "bandwidth") {
    const RadioParams radio = radio_from(cmd.params);
    const LinkGeometry geom = geometry_from(cmd.params);
    const OracleVerdict v = oracle_max_bandwidth(radio, geom, cfg);
    o.add("analytic_limit_hz", v.analytic_limit_hz,
          "analytic limit: " + fmt(v.analytic_limit_hz) + " Hz");
    o.add("oracle_limit_hz", v.oracle_limit_hz, "oracle limit:   " + fmt(v.oracle_limit_hz) + " Hz");
    o.add("relative_gap", v.relative_gap, "relative gap:   " + fmt(v.relative_gap));
    o.add("witness_d1_m", v.witness.d1_m, "witness D1: " + fmt(v.witness.d1_m) + " m");
    o.add("witness_d2_m", v.witness.d2_m, "witness D2: " + fmt(v.witness.d2_m) + " m");
    o.add("iterations", v.iterations, "");
  } else {
    const PowerVerdict v = oracle_required_power(
        cmd.params.get("bandwidth_hz"), cmd.params.get("m"), cmd.params.get("l"),
        cmd.params.get("snr_db"), cmd.params.get("nf_db"), cmd.params.get("temp_k"), cfg);
    o.add("analytic_dbm", v.analytic_dbm, "analytic power: " + fmt(v.analytic_dbm) + " dBm");
    o.add("oracle_dbm", v.oracle_dbm, "oracle power:   " + fmt(v.oracle_dbm) + " dBm");
    o.add("gap_db", v.gap_db, "gap:            " + fmt(v.gap_db) + " dB");
    o.add("witness_d1_m", v.witness.d1_m, "witness D1: " + fmt(v.witness.d1_m) + " m");
    o.add("witness_d2_m", v.witness.d2_m, "witness D2: " + fmt(v.witness.d2_m) + " m");
    o.add("iterations", v.iterations, "");
  }
  o.add("grid_points", cfg.d_grid_points, "");
  o.add("tolerance", cfg.b_rel_tolerance, "");
  o.flush("oracle");
  return kExitOk;
}

struct SweepOptions {
  std::string scenario = "custom";
  std::string format = "csv";
  std::string out_path;
};

int run_sweep_command(Command& cmd, const SweepOptions& opts, std::ostream& out) {
  const auto scenario = parse_scenario(opts.scenario);
  if (!scenario) {
    throw SweepSpecError("invalid sweep field 'scenario': unknown scenario '" + opts.scenario +
                         "'");
  }
  SweepSpec spec = preset(*scenario);
  if (!cmd.config_path.empty()) {
    const std::string text = read_text_file(cmd.config_path);
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::parse_error& e) {
      const auto [line, column] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
      throw ConfigError(cmd.config_path + ": malformed JSON at line " + std::to_string(line) +
                        ", column " + std::to_string(column));
    }
    spec = sweep_spec_from_json(doc, spec);
  } else if (*scenario == Scenario::custom) {
    throw ConfigError("sweep --scenario custom requires --config <path>");
  }

  const SweepTable table = run_sweep(spec);
  const TableFormat format =
      (cmd.json_output || opts.format == "json") ? TableFormat::json : TableFormat::csv;
  if (opts.out_path.empty()) {
    emit_table(table, format, out);
  } else {
    std::ofstream file(opts.out_path, std::ios::binary);
    if (!file) {
      throw std::runtime_error("cannot open output file '" + opts.out_path + "'");
    }
    try {
      emit_table(table, format, file);
    } catch (const std::exception& e) {
      throw std::runtime_error(opts.out_path + ": " + e.what());
    }
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Far-field feasibility analysis for terahertz links", "thzff"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  auto stationary = make_command(app, "stationary", "Maximum bandwidth of a stationary link");
  bind_radio(*stationary, true);
  stationary->params.bind(stationary->app, "freq_hz", "--freq-hz", "Carrier frequency, Hz",
                          std::nullopt);
  stationary->params.bind(stationary->app, "distance_m", "--distance-m", "Link distance, m",
                          std::nullopt);

  auto mobile = make_command(app, "mobile", "Maximum bandwidth of a mobile link (M, L form)");
  bind_radio(*mobile, true);
  mobile->params.bind(mobile->app, "m", "--mobility-m", "Mobility coefficient d_max/d_min", 1.0);
  mobile->params.bind(mobile->app, "l", "--ineq-l", "Antenna inequality coefficient D1/D2", 1.0);
  mobile->params.bind(mobile->app, "freq_hz", "--freq-hz", "Carrier frequency, Hz", std::nullopt);
  mobile->params.bind(mobile->app, "d_min_m", "--dmin-m", "Minimum distance, m", std::nullopt);

  auto fixed = make_command(app, "mobile-fixed", "Maximum bandwidth with a capped Rx array");
  bind_radio(*fixed, true);
  fixed->params.bind(fixed->app, "d2_max_m", "--d2-max-m", "Rx array side cap, m", std::nullopt);
  fixed->params.bind(fixed->app, "freq_hz", "--freq-hz", "Carrier frequency, Hz",
                     default_value(Param::freq_hz));
  fixed->params.bind(fixed->app, "d_min_m", "--dmin-m", "Minimum distance, m",
                     default_value(Param::d_min_m));
  fixed->params.bind(fixed->app, "d_max_m", "--dmax-m", "Maximum distance, m (default d_min)",
                     std::nullopt);

  auto power = make_command(app, "power", "Transmit power needed for a target bandwidth");
  power->params.bind(power->app, "bandwidth_hz", "--bandwidth-hz", "Target bandwidth, Hz",
                     default_value(Param::bandwidth_hz));
  power->params.bind(power->app, "m", "--mobility-m", "Mobility coefficient d_max/d_min", 1.0);
  power->params.bind(power->app, "l", "--ineq-l", "Antenna inequality coefficient D1/D2", 1.0);
  bind_radio(*power, false);

  auto fraunhofer = make_command(app, "fraunhofer", "Far-field boundary of two square arrays");
  fraunhofer->params.bind(fraunhofer->app, "d1_m", "--d1-m", "Tx array side, m", std::nullopt);
  fraunhofer->params.bind(fraunhofer->app, "d2_m", "--d2-m", "Rx array side, m", std::nullopt);
  fraunhofer->params.bind(fraunhofer->app, "n1", "--n1", "Tx elements per side", std::nullopt);
  fraunhofer->params.bind(fraunhofer->app, "n2", "--n2", "Rx elements per side", std::nullopt);
  fraunhofer->params.bind(fraunhofer->app, "freq_hz", "--freq-hz", "Carrier frequency, Hz",
                          default_value(Param::freq_hz));

  auto check = make_command(app, "check", "Evaluate both far-field conditions for a design");
  bind_radio(*check, true);
  check->params.bind(check->app, "freq_hz", "--freq-hz", "Carrier frequency, Hz",
                     default_value(Param::freq_hz));
  check->params.bind(check->app, "d_min_m", "--dmin-m", "Minimum distance, m",
                     default_value(Param::d_min_m));
  check->params.bind(check->app, "d_max_m", "--dmax-m", "Maximum distance, m (default d_min)",
                     std::nullopt);
  check->params.bind(check->app, "d1_m", "--d1-m", "Tx array side, m", std::nullopt);
  check->params.bind(check->app, "d2_m", "--d2-m", "Rx array side, m", std::nullopt);
  check->params.bind(check->app, "bandwidth_hz", "--bandwidth-hz", "Signal bandwidth, Hz",
                     default_value(Param::bandwidth_hz));

  auto sweep = make_command(app, "sweep", "Parameter sweep for figure datasets");
  SweepOptions sweep_opts;
  sweep->app->add_option("--scenario", sweep_opts.scenario,
                         "fig2a|fig2b|fig2c|fig4a|fig4b|fig4c|fig7|custom");
  sweep->app->add_option("--format", sweep_opts.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  sweep->app->add_option("--out", sweep_opts.out_path, "Output file (default stdout)");

  auto oracle = make_command(app, "oracle", "Brute-force cross-check of a closed form");
  std::string oracle_mode = "bandwidth";
  OracleConfig oracle_cfg;
  oracle->app->add_option("--mode", oracle_mode, "bandwidth|power")
      ->check(CLI::IsMember({"bandwidth", "power"}));
  oracle->app->add_option("--grid", oracle_cfg.d_grid_points, "Grid points per axis (>= 64)");
  oracle->app->add_option("--tol", oracle_cfg.b_rel_tolerance, "Bisection relative tolerance");
  oracle->app->add_option("--max-iter", oracle_cfg.max_iterations, "Bisection iteration budget");
  bool exhaustive = false;
  oracle->app->add_flag("--exhaustive", exhaustive, "Scan every grid pair (no frontier pruning)");
  bind_radio(*oracle, true);
  oracle->params.bind(oracle->app, "freq_hz", "--freq-hz", "Carrier frequency, Hz",
                      default_value(Param::freq_hz));
  oracle->params.bind(oracle->app, "d_min_m", "--dmin-m", "Minimum distance, m",
                      default_value(Param::d_min_m));
  oracle->params.bind(oracle->app, "d_max_m", "--dmax-m", "Maximum distance, m (default d_min)",
                      std::nullopt);
  oracle->params.bind(oracle->app, "bandwidth_hz", "--bandwidth-hz", "Target bandwidth, Hz",
                      default_value(Param::bandwidth_hz));
  oracle->params.bind(oracle->app, "m", "--mobility-m", "Mobility coefficient", 1.0);
  oracle->params.bind(oracle->app, "l", "--ineq-l", "Antenna inequality coefficient", 1.0);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    // Usage of the subcommand the user was typing, if any.
    const auto chosen = app.get_subcommands();
    err << (chosen.empty() ? app.help() : chosen.front()->help());
    return kExitInvalidInput;
  }

  Command* active = nullptr;
  for (Command* c : {stationary.get(), mobile.get(), fixed.get(), power.get(), fraunhofer.get(),
                     check.get(), sweep.get(), oracle.get()}) {
    if (c->app->parsed()) active = c;
  }

  try {
    if (active == sweep.get()) {
      return run_sweep_command(*sweep, sweep_opts, out);
    }
    ScenarioConfig config;
    if (!active->config_path.empty()) {
      config = load_config(active->config_path);
    }
    active->params.resolve(config);
    if (active == stationary.get()) return run_stationary(*active, out);
    if (active == mobile.get()) return run_mobile(*active, out);
    if (active == fixed.get()) return run_mobile_fixed(*active, out);
    if (active == power.get()) return run_power(*active, out);
    if (active == fraunhofer.get()) return run_fraunhofer(*active, out);
    if (active == check.get()) return run_check(*active, out);
    oracle_cfg.prune_dominated = !exhaustive;
    oracle_cfg.validate();
    return run_oracle(*active, oracle_mode, oracle_cfg, out);
  } catch (const NonConvergence& e) {
    err << "error: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
}

}  // namespace thzff
