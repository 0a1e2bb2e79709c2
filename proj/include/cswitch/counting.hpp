#pragma once

// Monte-Carlo photon counting over the measured correspondence tables.
//
// Every (configuration, basis) cell draws from its own generator stream
// derived from (seed, row, basis), so the OpenMP kernel and the serial
// reference produce identical reports regardless of thread count.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cswitch/sagnac.hpp"
#include "cswitch/tables.hpp"

namespace cswitch {

struct CountRecord {
  std::uint64_t shots = 0;
  std::uint64_t counts_a = 0;
  std::uint64_t counts_b = 0;
  std::string config_label;
  Basis input_basis = Basis::H;

  std::uint64_t counts(Port p) const { return p == Port::A ? counts_a : counts_b; }
  friend bool operator==(const CountRecord&, const CountRecord&) = default;
};

struct Estimate {
  double p_hat = 0.0;
  double sigma = 0.0;
};

/// `shots` independent photons; each lands on `expected_port` with
/// probability p. A fraction `dark_count_rate` of shots is replaced by a
/// detector click on a uniformly random port. Deterministic for a fixed
/// seed. Throws ValidationError if p is outside [0, 1] or shots == 0.
CountRecord sample_counts(double p_expected_port, std::uint64_t shots, std::uint64_t rng_seed,
                          Port expected_port = Port::A, double dark_count_rate = 0.0);

/// p_hat = hits / shots, sigma = sqrt(p_hat (1 - p_hat) / shots). When all or
/// none of the shots hit, sigma = sqrt((p_hat (1 - p_hat) + 1) / shots) so the
/// error bar never collapses to zero.
Estimate estimate(const CountRecord& r, Port expected_port);

struct ConfigSuccess {
  std::string label;
  Basis basis = Basis::H;
  Port expected_port = Port::A;
  double p_model = 0.0;  // expected-port probability of the perturbed optics
  double p_hat = 0.0;
  double sigma = 0.0;
};

struct ExperimentReport {
  ExperimentTable table = ExperimentTable::Deutsch;
  NoiseModel noise;
  std::uint64_t shots = 0;
  std::vector<CountRecord> records;
  std::vector<ConfigSuccess> per_config_success;
  double mean_success = 0.0;
  double mean_sigma = 0.0;   // mean per-cell binomial sigma
  double spread = 0.0;       // sample std of p_hat across cells
  double min_success = 0.0;
};

/// One cell of the sweep: perturb, recalibrate the phase, simulate, count.
ConfigSuccess run_cell(ExperimentTable table, std::size_t row, std::size_t basis,
                       const NoiseModel& noise, std::uint64_t shots, CountRecord* record);

/// OpenMP-parallel over cells.
ExperimentReport run_full_experiment(ExperimentTable table, const NoiseModel& noise,
                                     std::uint64_t shots);
/// Single-threaded reference; must match run_full_experiment exactly.
ExperimentReport run_full_experiment_serial(ExperimentTable table, const NoiseModel& noise,
                                            std::uint64_t shots);

/// "none", "CALIBRATED" (the documented defaults) or "custom".
std::string noise_label(const NoiseModel& m);

/// Columns: label,basis,shots,counts_a,counts_b,p_hat,sigma
void write_csv(const ExperimentReport& r, std::ostream& os);
/// Nested report with metadata (seed, noise parameters, version).
std::string to_json(const ExperimentReport& r, const std::string& version);
/// Bar heights per cell: label,basis,expected_port,p_port_a,p_port_b,sigma
void write_plot_csv(const ExperimentReport& r, std::ostream& os);

}  // namespace cswitch
