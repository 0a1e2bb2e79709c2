#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>
#include <nlohmann/json.hpp>

#include "cswitch/circuits.hpp"
#include "cswitch/counting.hpp"
#include "cswitch/errors.hpp"
#include "cswitch/oracles.hpp"
#include "cswitch/qswitch.hpp"
#include "cswitch/sagnac.hpp"
#include "cswitch/sweep.hpp"
#include "cswitch/tables.hpp"

#ifndef CSWITCH_VERSION
#define CSWITCH_VERSION "unknown"
#endif

namespace cswitch::cli {

namespace {

using ojson = nlohmann::ordered_json;

constexpr std::uint64_t kDefaultShots = 600000;
// Acceptance band for the calibrated noise reproduction.
constexpr double kBandLow = 0.995;
constexpr double kBandHigh = 0.999;
constexpr double kMinCell = 0.99;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Format { Csv, Json };

struct Options {
  std::optional<std::uint64_t> seed;
  std::optional<std::string> format;
  std::optional<std::string> out_path;
  std::string config_path;

  std::optional<std::string> oracles;
  std::optional<std::size_t> n;
  std::optional<std::string> target;
  std::optional<std::string> table;
  std::optional<std::string> noise;
  std::optional<std::uint64_t> shots;
  std::optional<std::string> plot_path;
  bool calibrate_sweep = false;
  std::size_t calibrate_seeds = 4;
};

// Settings after merging flags, --config, and the environment.
struct RunConfig {
  std::uint64_t seed = 0;
  Format format = Format::Csv;
  std::optional<std::string> out_path;
  std::optional<OracleSet> oracles;
  std::optional<std::size_t> n;
  Basis target = Basis::H;
  ExperimentTable table = ExperimentTable::Deutsch;
  NoiseModel noise;
  std::uint64_t shots = kDefaultShots;
  std::optional<std::string> plot_path;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot write '" + path + "'");
  f << content;
  f.flush();
  if (!f) throw IoError("write failed for '" + path + "'");
}

std::uint64_t parse_seed(const std::string& text, const std::string& origin) {
  try {
    std::size_t used = 0;
    const auto v = std::stoull(text, &used, 10);
    if (used != text.size() || text.front() == '-') throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw UsageError(origin + ": seed must be a non-negative integer, got '" + text + "'");
  }
}

NoiseModel noise_from_json(const nlohmann::json& j, std::uint64_t seed) {
  if (j.is_string()) {
    const auto name = j.get<std::string>();
    if (name == "none") return NoiseModel::none(seed);
    if (name == "default") return NoiseModel::calibrated_default(seed);
    throw UsageError("unknown noise model '" + name + "' (expected none, default)");
  }
  if (!j.is_object()) throw UsageError("noise must be a name or an object");
  NoiseModel m = NoiseModel::none(seed);
  m.plate_angle_sigma_deg = j.value("plate_angle_sigma_deg", 0.0);
  m.retardance_sigma = j.value("retardance_sigma", 0.0);
  m.bs_imbalance_sigma = j.value("bs_imbalance_sigma", 0.0);
  m.dark_count_rate = j.value("dark_count_rate", 0.0);
  m.validate();
  return m;
}

RunConfig resolve(const Options& o) {
  nlohmann::json cfg = nlohmann::json::object();
  if (!o.config_path.empty()) {
    const std::string text = read_file(o.config_path);
    try {
      cfg = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw UsageError("config '" + o.config_path + "': " + e.what());
    }
    if (!cfg.is_object()) throw UsageError("config '" + o.config_path + "' must be a JSON object");
  }
  auto cfg_string = [&](const char* key) -> std::optional<std::string> {
    if (!cfg.contains(key)) return std::nullopt;
    const auto& v = cfg.at(key);
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
  };

  RunConfig r;
  if (o.seed) {
    r.seed = *o.seed;
  } else if (cfg.contains("seed")) {
    if (!cfg["seed"].is_number_unsigned()) throw UsageError("config: seed must be a non-negative integer");
    r.seed = cfg["seed"].get<std::uint64_t>();
  } else if (const char* env = std::getenv("CSWITCH_SEED"); env && *env) {
    r.seed = parse_seed(env, "CSWITCH_SEED");
  }

  const auto format = o.format ? o.format : cfg_string("format");
  if (format) {
    if (*format == "csv") r.format = Format::Csv;
    else if (*format == "json") r.format = Format::Json;
    else throw UsageError("unknown format '" + *format + "' (expected csv, json)");
  }
  r.out_path = o.out_path ? o.out_path : cfg_string("out");
  r.plot_path = o.plot_path ? o.plot_path : cfg_string("plot");

  if (const auto text = o.oracles ? o.oracles : cfg_string("oracles")) {
    r.oracles = parse_oracle_set(*text);
  }
  if (o.n) {
    r.n = o.n;
  } else if (cfg.contains("n")) {
    if (!cfg["n"].is_number_unsigned()) throw UsageError("config: n must be a non-negative integer");
    r.n = cfg["n"].get<std::size_t>();
  }
  if (const auto t = o.target ? o.target : cfg_string("target")) r.target = parse_basis(*t);
  if (const auto t = o.table ? o.table : cfg_string("table")) r.table = parse_table(*t);

  if (o.noise) {
    r.noise = noise_from_json(nlohmann::json(*o.noise), r.seed);
  } else if (cfg.contains("noise")) {
    r.noise = noise_from_json(cfg["noise"], r.seed);
  } else {
    r.noise = NoiseModel::none(r.seed);
  }

  if (o.shots) {
    r.shots = *o.shots;
  } else if (cfg.contains("shots")) {
    if (!cfg["shots"].is_number_unsigned()) throw UsageError("config: shots must be a non-negative integer");
    r.shots = cfg["shots"].get<std::uint64_t>();
  }
  return r;
}

const OracleSet& require_oracles(const RunConfig& c) {
  if (c.n) throw UsageError("this command takes --oracles, not --n");
  if (!c.oracles) throw UsageError("--oracles is required (JSON array or aliases c0,c1,b01,b10)");
  return *c.oracles;
}

std::size_t require_n(const RunConfig& c) {
  if (c.oracles) throw UsageError("this command takes --n, not --oracles");
  if (!c.n) throw UsageError("--n is required");
  return *c.n;
}

void emit(const RunConfig& c, const std::string& content, std::ostream& out) {
  if (c.out_path) write_file(*c.out_path, content);
  else out << content;
}

std::string csv_bool(bool b) { return b ? "true" : "false"; }

// Quotes a CSV field holding a comma (alias lists such as c0,b01).
std::string csv_field(const std::string& s) {
  return s.find(',') == std::string::npos ? s : '"' + s + '"';
}

// Single-record output: CSV header + row, or a flat JSON object.
std::string record(Format f, const ojson& j) {
  if (f == Format::Json) return j.dump(2) + "\n";
  std::string header, row;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!header.empty()) {
      header += ',';
      row += ',';
    }
    header += it.key();
    const auto& v = it.value();
    if (v.is_string()) row += csv_field(v.get<std::string>());
    else if (v.is_boolean()) row += csv_bool(v.get<bool>());
    else if (v.is_number_float()) row += fmt::format("{:.12f}", v.get<double>());
    else row += v.dump();
  }
  return header + "\n" + row + "\n";
}

int cmd_ico(const RunConfig& c, std::ostream& out) {
  const OracleSet& s = require_oracles(c);
  const IcoDecision d = run_ico_algorithm(s, polarization(c.target));
  const bool truth = ground_truth_odd_constants(s);
  const int outcome = d.p1 > d.p0 ? 1 : 0;
  const bool verified = d.odd_constants == truth && std::max(d.p0, d.p1) >= 1.0 - 1e-12;
  ojson j;
  j["oracles"] = aliases(s);
  j["n"] = s.size();
  j["target"] = std::string(basis_name(c.target));
  j["u1"] = std::string(gate_name(d.u1));
  j["p0"] = d.p0;
  j["p1"] = d.p1;
  j["control_outcome"] = outcome;
  j["odd_constants"] = d.odd_constants;
  j["ground_truth"] = truth;
  j["verified"] = verified;
  emit(c, record(c.format, j), out);
  return verified ? kExitOk : kExitVerificationFailed;
}

int cmd_deutsch(const RunConfig& c, std::ostream& out) {
  const OracleSet& s = require_oracles(c);
  const CircuitOutcome r = run_generalized_deutsch(s);
  const bool truth = ground_truth_odd_constants(s);
  const bool verified = r.decoded_odd_constants == truth && r.outcome_probability >= 1.0 - 1e-12;
  ojson j;
  j["oracles"] = aliases(s);
  j["n"] = s.size();
  j["first_qubit"] = r.first_qubit;
  j["outcome_probability"] = r.outcome_probability;
  j["odd_constants"] = r.decoded_odd_constants;
  j["ground_truth"] = truth;
  j["queries"] = r.queries_used;
  j["verified"] = verified;
  emit(c, record(c.format, j), out);
  return verified ? kExitOk : kExitVerificationFailed;
}

int cmd_classical(const RunConfig& c, std::ostream& out) {
  const OracleSet& s = require_oracles(c);
  const CircuitOutcome r = run_classical_baseline(s);
  const bool truth = ground_truth_odd_constants(s);
  const bool verified = r.decoded_odd_constants == truth;
  ojson j;
  j["oracles"] = aliases(s);
  j["n"] = s.size();
  j["odd_constants"] = r.decoded_odd_constants;
  j["ground_truth"] = truth;
  j["queries"] = r.queries_used;
  j["verified"] = verified;
  emit(c, record(c.format, j), out);
  return verified ? kExitOk : kExitVerificationFailed;
}

int cmd_sweep(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const std::size_t n = require_n(c);
  const auto rows = sweep(n, polarization(c.target));
  const SweepSummary sum = summarize(n, rows);

  std::string content;
  if (c.format == Format::Json) {
    ojson j;
    j["summary"] = {{"n", sum.n},
                    {"target", std::string(basis_name(c.target))},
                    {"rows", sum.rows},
                    {"disagreements", sum.disagreements},
                    {"all_agree", sum.all_agree},
                    {"classical_queries", sum.classical_queries},
                    {"quantum_queries", sum.quantum_queries},
                    {"ico_queries", sum.ico_queries}};
    auto arr = ojson::array();
    for (const auto& r : rows) {
      arr.push_back({{"index", r.index},
                     {"oracles", aliases(oracle_set_from_index(n, r.index))},
                     {"u1", std::string(gate_name(r.u1))},
                     {"port", std::string(port_name(r.port))},
                     {"ground_truth", r.ground_truth},
                     {"ico", r.ico},
                     {"deutsch", r.deutsch},
                     {"classical", r.classical},
                     {"agree", r.all_agree()}});
    }
    j["rows"] = std::move(arr);
    content = j.dump(2) + "\n";
  } else {
    std::ostringstream os;
    os << "index,oracles,u1,port,ground_truth,ico,deutsch,classical,agree\n";
    for (const auto& r : rows) {
      fmt::print(os, "{},{},{},{},{},{},{},{},{}\n", r.index,
                 csv_field(aliases(oracle_set_from_index(n, r.index))), gate_name(r.u1), port_name(r.port),
                 csv_bool(r.ground_truth), csv_bool(r.ico), csv_bool(r.deutsch),
                 csv_bool(r.classical), csv_bool(r.all_agree()));
    }
    content = os.str();
  }
  emit(c, content, out);
  fmt::print(err, "sweep n={}: {} rows, {} disagreements, queries classical={} quantum={} ico={}\n",
             n, sum.rows, sum.disagreements, sum.classical_queries, sum.quantum_queries,
             sum.ico_queries);
  return sum.all_agree ? kExitOk : kExitVerificationFailed;
}

int cmd_experiment(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (c.oracles || c.n) throw UsageError("experiment runs a fixed table; use --table");
  const ExperimentReport r = run_full_experiment(c.table, c.noise, c.shots);

  std::string content;
  if (c.format == Format::Json) {
    content = to_json(r, CSWITCH_VERSION);
  } else {
    std::ostringstream os;
    write_csv(r, os);
    content = os.str();
  }
  emit(c, content, out);

  std::optional<std::string> plot = c.plot_path;
  if (!plot && c.out_path) plot = *c.out_path + ".plot.csv";
  if (plot) {
    std::ostringstream os;
    write_plot_csv(r, os);
    write_file(*plot, os.str());
  }

  const std::string label = noise_label(r.noise);
  fmt::print(err, "experiment {}: noise={} shots/config={} mean={:.5f} min={:.5f} spread={:.5f}\n",
             table_name(r.table), label, r.shots, r.mean_success, r.min_success, r.spread);
  if (label == "CALIBRATED") {
    fmt::print(err,
               "note: CALIBRATED noise parameters are tuned to reproduce the measured mean "
               "success; they are not measured hardware values\n");
  }

  // A cell verifies when the majority of photons leave from the expected port.
  bool verified = true;
  for (const auto& cell : r.per_config_success) verified = verified && cell.p_hat > 0.5;
  return verified ? kExitOk : kExitVerificationFailed;
}

int cmd_report(const RunConfig& c, std::ostream& out) {
  const std::size_t n = require_n(c);
  const ComplexityReport q = complexity_report(n);
  ojson j;
  j["n"] = n;
  j["classical_queries"] = q.classical_queries;
  j["quantum_queries"] = q.quantum_queries;
  j["ico_queries"] = q.ico_queries;
  j["ico_fixed_gates"] = q.ico_fixed_gates;
  emit(c, record(c.format, j), out);
  return q.classical_queries == 2 * n && q.ico_queries == n ? kExitOk : kExitVerificationFailed;
}

// Candidate noise models evaluated by `calibrate --sweep`. The first entry is
// the initial guess; the shipped default is among them.
std::vector<NoiseModel> calibration_grid() {
  const double grid[][4] = {{0.2, 0.02, 0.005, 1e-4},  {0.2, 0.02, 0.005, 3e-3},
                            {0.15, 0.015, 0.005, 4e-3}, {0.2, 0.012, 0.005, 4e-3},
                            {0.2, 0.01, 0.005, 4e-3},   {0.5, 0.05, 0.01, 1e-3}};
  std::vector<NoiseModel> out;
  for (const auto& g : grid) {
    NoiseModel m;
    m.plate_angle_sigma_deg = g[0];
    m.retardance_sigma = g[1];
    m.bs_imbalance_sigma = g[2];
    m.dark_count_rate = g[3];
    out.push_back(m);
  }
  return out;
}

int cmd_calibrate(const RunConfig& c, const Options& o, std::ostream& out, std::ostream& err) {
  std::vector<NoiseModel> models;
  std::vector<std::uint64_t> seeds;
  if (o.calibrate_sweep) {
    if (o.calibrate_seeds == 0) throw UsageError("--seeds must be >= 1");
    models = calibration_grid();
    for (std::size_t k = 0; k < o.calibrate_seeds; ++k) seeds.push_back(c.seed + k);
  } else {
    models.push_back(c.noise.is_noiseless() ? NoiseModel::calibrated_default() : c.noise);
    seeds.push_back(c.seed);
  }

  ojson rows = ojson::array();
  bool default_in_band = true;
  for (const auto& base : models) {
    for (const auto seed : seeds) {
      NoiseModel m = base;
      m.rng_seed = seed;
      for (const auto table : {ExperimentTable::Deutsch, ExperimentTable::TwoFunction}) {
        const ExperimentReport r = run_full_experiment(table, m, c.shots);
        const bool in_band = r.mean_success >= kBandLow && r.mean_success <= kBandHigh &&
                             r.min_success >= kMinCell;
        if (noise_label(m) == "CALIBRATED") default_in_band = default_in_band && in_band;
        rows.push_back({{"table", std::string(table_name(table))},
                        {"seed", seed},
                        {"label", noise_label(m)},
                        {"plate_angle_sigma_deg", m.plate_angle_sigma_deg},
                        {"retardance_sigma_rad", m.retardance_sigma},
                        {"bs_imbalance_sigma", m.bs_imbalance_sigma},
                        {"dark_count_rate", m.dark_count_rate},
                        {"mean_success", r.mean_success},
                        {"min_success", r.min_success},
                        {"spread", r.spread},
                        {"in_band", in_band}});
      }
    }
  }

  std::string content;
  if (c.format == Format::Json) {
    ojson j;
    j["band"] = {{"mean_low", kBandLow}, {"mean_high", kBandHigh}, {"min_cell", kMinCell}};
    j["shots_per_configuration"] = c.shots;
    j["rows"] = rows;
    content = j.dump(2) + "\n";
  } else {
    std::ostringstream os;
    os << "table,seed,label,plate_angle_sigma_deg,retardance_sigma_rad,bs_imbalance_sigma,"
          "dark_count_rate,mean_success,min_success,spread,in_band\n";
    for (const auto& row : rows) {
      fmt::print(os, "{},{},{},{},{},{},{},{:.6f},{:.6f},{:.6f},{}\n",
                 row["table"].get<std::string>(), row["seed"].get<std::uint64_t>(),
                 row["label"].get<std::string>(), row["plate_angle_sigma_deg"].get<double>(),
                 row["retardance_sigma_rad"].get<double>(), row["bs_imbalance_sigma"].get<double>(),
                 row["dark_count_rate"].get<double>(), row["mean_success"].get<double>(),
                 row["min_success"].get<double>(), row["spread"].get<double>(),
                 csv_bool(row["in_band"].get<bool>()));
    }
    content = os.str();
  }
  emit(c, content, out);
  fmt::print(err, "CALIBRATED default {} the band mean in [{}, {}], min cell >= {}\n",
             default_in_band ? "meets" : "MISSES", kBandLow, kBandHigh, kMinCell);
  return default_in_band ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum-switch solver for the generalized Deutsch problem", "cswitch"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(CSWITCH_VERSION));

  Options o;
  std::string seed_text, format, out_path, oracles, target, table, noise, plot;
  std::size_t n = 0;
  std::uint64_t shots = 0;

  auto* seed_opt = app.add_option("--seed", seed_text, "RNG seed (falls back to $CSWITCH_SEED)");
  auto* format_opt =
      app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  auto* out_opt = app.add_option("--out", out_path, "Write the primary output here");
  app.add_option("--config", o.config_path, "JSON file with default settings")
      ->check(CLI::ExistingFile);
  app.fallthrough();

  auto* ico = app.add_subcommand("ico", "Run the switch algorithm on one oracle set");
  auto* deutsch = app.add_subcommand("deutsch", "Run the fixed-order generalized Deutsch circuit");
  auto* classical = app.add_subcommand("classical", "Run the classical two-query baseline");
  auto* sweep_cmd = app.add_subcommand("sweep", "Exhaustively compare all methods over 4^n sets");
  auto* experiment = app.add_subcommand("experiment", "Simulate the photonic experiment");
  auto* report = app.add_subcommand("report", "Query-complexity comparison");
  auto* calibrate = app.add_subcommand("calibrate", "Check or sweep the calibrated noise model");

  std::vector<CLI::Option*> oracle_opts, n_opts, target_opts;
  for (auto* sub : {ico, deutsch, classical}) {
    oracle_opts.push_back(
        sub->add_option("--oracles", oracles, "JSON [[f0,f1],...] or aliases c0,c1,b01,b10"));
  }
  for (auto* sub : {ico, sweep_cmd}) {
    target_opts.push_back(sub->add_option("--target", target, "Target state: H|V|D|A (or 0,1,+,-)"));
  }
  for (auto* sub : {sweep_cmd, report}) {
    n_opts.push_back(sub->add_option("--n", n, "Number of functions"));
  }
  auto* table_opt = experiment->add_option("--table", table, "deutsch | two-function");
  auto* noise_opt = experiment->add_option("--noise", noise, "none | default");
  auto* noise_cal_opt = calibrate->add_option("--noise", noise, "Model to check (default: CALIBRATED)");
  std::vector<CLI::Option*> shots_opts = {
      experiment->add_option("--shots", shots, "Photons per configuration and basis"),
      calibrate->add_option("--shots", shots, "Photons per configuration and basis")};
  auto* plot_opt = experiment->add_option("--plot", plot, "Plot-data CSV (default: <out>.plot.csv)");
  calibrate->add_flag("--sweep", o.calibrate_sweep, "Evaluate the candidate grid over several seeds");
  calibrate->add_option("--seeds", o.calibrate_seeds, "Seeds per candidate in --sweep");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  auto given = [](const std::vector<CLI::Option*>& opts) {
    for (auto* opt : opts) {
      if (opt->count() > 0) return true;
    }
    return false;
  };

  try {
    if (seed_opt->count()) o.seed = parse_seed(seed_text, "--seed");
    if (format_opt->count()) o.format = format;
    if (out_opt->count()) o.out_path = out_path;
    if (given(oracle_opts)) o.oracles = oracles;
    if (given(n_opts)) o.n = n;
    if (given(target_opts)) o.target = target;
    if (table_opt->count()) o.table = table;
    if (noise_opt->count() || noise_cal_opt->count()) o.noise = noise;
    if (given(shots_opts)) o.shots = shots;
    if (plot_opt->count()) o.plot_path = plot;

    const RunConfig c = resolve(o);
    if (*ico) return cmd_ico(c, out);
    if (*deutsch) return cmd_deutsch(c, out);
    if (*classical) return cmd_classical(c, out);
    if (*sweep_cmd) return cmd_sweep(c, out, err);
    if (*experiment) return cmd_experiment(c, out, err);
    if (*report) return cmd_report(c, out);
    if (*calibrate) return cmd_calibrate(c, o, out, err);
    return kExitUsage;
  } catch (const ParseError& e) {
    fmt::print(err, "error: {} at line {}, column {}\n", e.what(), e.line(), e.column());
    return kExitUsage;
  } catch (const IoError& e) {
    fmt::print(err, "I/O error: {}\n", e.what());
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    // ValidationError, UsageError and DimensionMismatch.
    fmt::print(err, "error: {}\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitUsage;
  }
}

}  // namespace cswitch::cli
