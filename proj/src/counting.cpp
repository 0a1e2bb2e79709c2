#include "cswitch/counting.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <ostream>

#include <fmt/format.h>
#include <fmt/ostream.h>
#include <nlohmann/json.hpp>

#include "cswitch/errors.hpp"
#include "cswitch/rng.hpp"

namespace cswitch {

namespace {

constexpr std::uint64_t kPerturbStream = 0;
constexpr std::uint64_t kCountStream = 1;

void validate_shots(std::uint64_t shots) {
  if (shots == 0) throw ValidationError("shots must be >= 1");
}

ExperimentReport summarize(ExperimentTable table, const NoiseModel& noise, std::uint64_t shots,
                           std::vector<CountRecord> records, std::vector<ConfigSuccess> cells) {
  ExperimentReport r;
  r.table = table;
  r.noise = noise;
  r.shots = shots;
  r.records = std::move(records);
  r.per_config_success = std::move(cells);

  const auto n = static_cast<double>(r.per_config_success.size());
  double sum = 0.0;
  double sum_sigma = 0.0;
  r.min_success = 1.0;
  for (const auto& c : r.per_config_success) {
    sum += c.p_hat;
    sum_sigma += c.sigma;
    r.min_success = std::min(r.min_success, c.p_hat);
  }
  r.mean_success = sum / n;
  r.mean_sigma = sum_sigma / n;
  double var = 0.0;
  for (const auto& c : r.per_config_success) var += (c.p_hat - r.mean_success) * (c.p_hat - r.mean_success);
  r.spread = n > 1 ? std::sqrt(var / (n - 1)) : 0.0;
  return r;
}

std::size_t cell_count(ExperimentTable table) { return table_rows(table).size() * 4; }

}  // namespace

CountRecord sample_counts(double p_expected_port, std::uint64_t shots, std::uint64_t rng_seed,
                          Port expected_port, double dark_count_rate) {
  if (!(p_expected_port >= 0.0 && p_expected_port <= 1.0)) {
    throw ValidationError("sample_counts: probability must lie in [0, 1]");
  }
  if (!(dark_count_rate >= 0.0 && dark_count_rate < 1.0)) {
    throw ValidationError("sample_counts: dark count rate must lie in [0, 1)");
  }
  validate_shots(shots);

  Rng rng(rng_seed);
  std::uint64_t hits = 0;
  if (dark_count_rate == 0.0) {
    for (std::uint64_t i = 0; i < shots; ++i) hits += uniform01(rng) < p_expected_port;
  } else {
    for (std::uint64_t i = 0; i < shots; ++i) {
      if (uniform01(rng) < dark_count_rate) {
        hits += uniform01(rng) < 0.5;
      } else {
        hits += uniform01(rng) < p_expected_port;
      }
    }
  }

  CountRecord r;
  r.shots = shots;
  r.counts_a = expected_port == Port::A ? hits : shots - hits;
  r.counts_b = shots - r.counts_a;
  return r;
}

Estimate estimate(const CountRecord& r, Port expected_port) {
  validate_shots(r.shots);
  const auto hits = r.counts(expected_port);
  const double n = static_cast<double>(r.shots);
  const double p = static_cast<double>(hits) / n;
  double var = p * (1.0 - p);
  if (hits == 0 || hits == r.shots) var += 1.0;
  return {p, std::sqrt(var / n)};
}

ConfigSuccess run_cell(ExperimentTable table, std::size_t row, std::size_t basis,
                       const NoiseModel& noise, std::uint64_t shots, CountRecord* record) {
  const TableRow& tr = table_rows(table).at(row);
  const Basis b = kAllBases[basis];

  SagnacConfig config = ideal_config(tr.oracles, b);
  if (!noise.is_noiseless()) {
    Rng rng(derive_seed(noise.rng_seed, row, basis, kPerturbStream));
    config = perturb(config, noise, rng);
    // The liquid crystal is re-zeroed on the actual optics with U1 = I and an
    // H-polarized probe, as in the lab procedure.
    config.interferometer_phase = calibrate_phase(config.u2_stack, polarization(Basis::H));
  }
  const PortAmplitudes ports = simulate_sagnac(config);
  const double p_expected = std::clamp(ports.probability(tr.expected_port), 0.0, 1.0);

  CountRecord rec = sample_counts(p_expected, shots,
                                  derive_seed(noise.rng_seed, row, basis, kCountStream),
                                  tr.expected_port, noise.dark_count_rate);
  rec.config_label = tr.label;
  rec.input_basis = b;

  const Estimate est = estimate(rec, tr.expected_port);
  if (record) *record = rec;
  return {tr.label, b, tr.expected_port, p_expected, est.p_hat, est.sigma};
}

ExperimentReport run_full_experiment(ExperimentTable table, const NoiseModel& noise,
                                     std::uint64_t shots) {
  noise.validate();
  validate_shots(shots);
  const std::size_t n = cell_count(table);
  std::vector<CountRecord> records(n);
  std::vector<ConfigSuccess> cells(n);

  // Exceptions must not escape an OpenMP region.
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
    const auto idx = static_cast<std::size_t>(i);
    try {
      cells[idx] = run_cell(table, idx / 4, idx % 4, noise, shots, &records[idx]);
    } catch (...) {
#pragma omp critical(cswitch_counting_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return summarize(table, noise, shots, std::move(records), std::move(cells));
}

ExperimentReport run_full_experiment_serial(ExperimentTable table, const NoiseModel& noise,
                                            std::uint64_t shots) {
  noise.validate();
  validate_shots(shots);
  const std::size_t n = cell_count(table);
  std::vector<CountRecord> records(n);
  std::vector<ConfigSuccess> cells(n);
  for (std::size_t i = 0; i < n; ++i) cells[i] = run_cell(table, i / 4, i % 4, noise, shots, &records[i]);
  return summarize(table, noise, shots, std::move(records), std::move(cells));
}

std::string noise_label(const NoiseModel& m) {
  if (m.is_noiseless()) return "none";
  NoiseModel d = NoiseModel::calibrated_default(m.rng_seed);
  return m == d ? "CALIBRATED" : "custom";
}

void write_csv(const ExperimentReport& r, std::ostream& os) {
  os << "label,basis,shots,counts_a,counts_b,p_hat,sigma\n";
  for (std::size_t i = 0; i < r.records.size(); ++i) {
    const auto& rec = r.records[i];
    const auto& c = r.per_config_success[i];
    fmt::print(os, "{},{},{},{},{},{:.10f},{:.10f}\n", rec.config_label,
               basis_name(rec.input_basis), rec.shots, rec.counts_a, rec.counts_b, c.p_hat,
               c.sigma);
  }
}

void write_plot_csv(const ExperimentReport& r, std::ostream& os) {
  os << "label,basis,expected_port,p_port_a,p_port_b,sigma\n";
  for (std::size_t i = 0; i < r.records.size(); ++i) {
    const auto& rec = r.records[i];
    const auto& c = r.per_config_success[i];
    const double n = static_cast<double>(rec.shots);
    fmt::print(os, "{},{},{},{:.10f},{:.10f},{:.10f}\n", rec.config_label,
               basis_name(rec.input_basis), port_name(c.expected_port),
               static_cast<double>(rec.counts_a) / n, static_cast<double>(rec.counts_b) / n,
               c.sigma);
  }
}

std::string to_json(const ExperimentReport& r, const std::string& version) {
  nlohmann::ordered_json j;
  j["metadata"] = {
      {"version", version},
      {"table", std::string(table_name(r.table))},
      {"seed", r.noise.rng_seed},
      {"shots_per_configuration", r.shots},
      {"noise",
       {{"label", noise_label(r.noise)},
        {"plate_angle_sigma_deg", r.noise.plate_angle_sigma_deg},
        {"retardance_sigma_rad", r.noise.retardance_sigma},
        {"bs_imbalance_sigma", r.noise.bs_imbalance_sigma},
        {"dark_count_rate", r.noise.dark_count_rate}}},
  };
  if (noise_label(r.noise) == "CALIBRATED") {
    j["metadata"]["note"] =
        "noise parameters are CALIBRATED to reproduce the measured mean success; "
        "not measured hardware values";
  }
  auto records = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < r.records.size(); ++i) {
    const auto& rec = r.records[i];
    const auto& c = r.per_config_success[i];
    records.push_back({{"label", rec.config_label},
                       {"basis", std::string(basis_name(rec.input_basis))},
                       {"expected_port", std::string(port_name(c.expected_port))},
                       {"shots", rec.shots},
                       {"counts_a", rec.counts_a},
                       {"counts_b", rec.counts_b},
                       {"p_model", c.p_model},
                       {"p_hat", c.p_hat},
                       {"sigma", c.sigma}});
  }
  j["records"] = std::move(records);
  j["summary"] = {{"mean_success", r.mean_success},
                  {"mean_sigma", r.mean_sigma},
                  {"spread", r.spread},
                  {"min_success", r.min_success}};
  return j.dump(2) + "\n";
}

}  // namespace cswitch
