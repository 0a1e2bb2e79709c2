#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cswitch/counting.hpp"
#include "cswitch/errors.hpp"

namespace cswitch {
namespace {

TEST(Counting, SampleCountsEdges) {
  const CountRecord all = sample_counts(1.0, 1000, 1, Port::A);
  EXPECT_EQ(all.counts_a, 1000u);
  EXPECT_EQ(all.counts_b, 0u);
  const CountRecord none = sample_counts(0.0, 1000, 1, Port::B);
  EXPECT_EQ(none.counts_b, 0u);
  EXPECT_EQ(none.counts_a, 1000u);
}

TEST(Counting, SampleCountsValidation) {
  EXPECT_THROW(sample_counts(0.5, 0, 1), ValidationError);
  EXPECT_THROW(sample_counts(1.5, 10, 1), ValidationError);
  EXPECT_THROW(sample_counts(0.5, 10, 1, Port::A, 1.0), ValidationError);
}

TEST(Counting, SampleCountsDeterministic) {
  EXPECT_EQ(sample_counts(0.7, 5000, 3), sample_counts(0.7, 5000, 3));
  EXPECT_NE(sample_counts(0.7, 5000, 3), sample_counts(0.7, 5000, 4));
}

TEST(Counting, DarkCountsPullTowardHalf) {
  // Expected success p (1 - d) + d / 2.
  const CountRecord r = sample_counts(1.0, 200000, 5, Port::B, 0.1);
  const double p = static_cast<double>(r.counts_b) / 200000.0;
  EXPECT_NEAR(p, 0.95, 5 * std::sqrt(0.95 * 0.05 / 200000.0));
}

TEST(Counting, EstimateFormula) {
  CountRecord r;
  r.shots = 100;
  r.counts_a = 90;
  r.counts_b = 10;
  const Estimate e = estimate(r, Port::A);
  EXPECT_DOUBLE_EQ(e.p_hat, 0.9);
  EXPECT_DOUBLE_EQ(e.sigma, std::sqrt(0.9 * 0.1 / 100.0));
  r.counts_a = 100;
  r.counts_b = 0;
  EXPECT_DOUBLE_EQ(estimate(r, Port::A).sigma, std::sqrt(1.0 / 100.0));
  EXPECT_DOUBLE_EQ(estimate(r, Port::B).p_hat, 0.0);
}

TEST(Counting, NoiselessExperimentIsPerfect) {
  const ExperimentReport r = run_full_experiment(ExperimentTable::Deutsch, NoiseModel::none(1), 1000);
  EXPECT_EQ(r.records.size(), 16u);
  for (const auto& c : r.per_config_success) EXPECT_EQ(c.p_hat, 1.0);
  EXPECT_EQ(r.mean_success, 1.0);
  EXPECT_EQ(r.spread, 0.0);
  EXPECT_EQ(run_full_experiment(ExperimentTable::TwoFunction, NoiseModel::none(1), 10).records.size(),
            64u);
}

TEST(Counting, ShotsZeroRejected) {
  EXPECT_THROW(run_full_experiment(ExperimentTable::Deutsch, NoiseModel::none(), 0), ValidationError);
}

TEST(Counting, ParallelMatchesSerial) {
  for (const auto table : {ExperimentTable::Deutsch, ExperimentTable::TwoFunction}) {
    const NoiseModel m = NoiseModel::calibrated_default(123);
    const ExperimentReport a = run_full_experiment(table, m, 20000);
    const ExperimentReport b = run_full_experiment_serial(table, m, 20000);
    EXPECT_EQ(a.records, b.records);
    EXPECT_EQ(a.mean_success, b.mean_success);
    EXPECT_EQ(a.spread, b.spread);
  }
}

TEST(Counting, NoiseLabels) {
  EXPECT_EQ(noise_label(NoiseModel::none(3)), "none");
  EXPECT_EQ(noise_label(NoiseModel::calibrated_default(3)), "CALIBRATED");
  NoiseModel m = NoiseModel::calibrated_default(3);
  m.dark_count_rate = 0.0;
  EXPECT_EQ(noise_label(m), "custom");
}

TEST(Counting, CsvSchema) {
  const ExperimentReport r = run_full_experiment(ExperimentTable::Deutsch, NoiseModel::none(1), 10);
  std::ostringstream os;
  write_csv(r, os);
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "label,basis,shots,counts_a,counts_b,p_hat,sigma");
  std::getline(in, line);
  EXPECT_EQ(line.substr(0, 8), "I,H,10,0");
  std::ostringstream plot;
  write_plot_csv(r, plot);
  EXPECT_EQ(plot.str().substr(0, plot.str().find('\n')),
            "label,basis,expected_port,p_port_a,p_port_b,sigma");
}

TEST(Counting, JsonMetadata) {
  const ExperimentReport r =
      run_full_experiment(ExperimentTable::TwoFunction, NoiseModel::calibrated_default(7), 1000);
  const auto j = nlohmann::json::parse(to_json(r, "v-test"));
  EXPECT_EQ(j["metadata"]["version"], "v-test");
  EXPECT_EQ(j["metadata"]["seed"], 7);
  EXPECT_EQ(j["metadata"]["table"], "two-function");
  EXPECT_EQ(j["metadata"]["noise"]["label"], "CALIBRATED");
  EXPECT_TRUE(j["metadata"].contains("note"));
  EXPECT_EQ(j["records"].size(), 64u);
  EXPECT_DOUBLE_EQ(j["summary"]["mean_success"].get<double>(), r.mean_success);
}

TEST(CountingProperty, EstimatorStdMatchesBinomial) {
  constexpr double p = 0.9972;
  constexpr std::uint64_t n = 20000;
  constexpr int seeds = 300;
  double sum = 0.0, sum2 = 0.0;
  for (int s = 0; s < seeds; ++s) {
    const double ph = estimate(sample_counts(p, n, 1000 + s), Port::A).p_hat;
    sum += ph;
    sum2 += ph * ph;
  }
  const double mean = sum / seeds;
  const double sd = std::sqrt((sum2 - seeds * mean * mean) / (seeds - 1));
  const double expected = std::sqrt(p * (1 - p) / n);
  EXPECT_NEAR(sd / expected, 1.0, 0.15);
  EXPECT_NEAR(mean, p, 4 * expected / std::sqrt(seeds));
}

}  // namespace
}  // namespace cswitch
