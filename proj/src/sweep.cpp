#include "cswitch/sweep.hpp"

#include <algorithm>
#include <exception>

#include "cswitch/circuits.hpp"
#include "cswitch/errors.hpp"
#include "cswitch/qswitch.hpp"

namespace cswitch {

namespace {

void validate_n(std::size_t n, std::size_t max_n) {
  if (n < 1 || n > max_n) {
    throw ValidationError("sweep: n must lie in [1, " + std::to_string(max_n) + "], got " +
                          std::to_string(n));
  }
}

}  // namespace

SweepRow evaluate_oracle_set(std::size_t n, std::uint64_t index, const StateVector& target) {
  const OracleSet s = oracle_set_from_index(n, index);
  const IcoDecision ico = run_ico_algorithm(s, target);
  const CircuitOutcome deutsch = run_generalized_deutsch(s);
  const CircuitOutcome classical = run_classical_baseline(s);

  SweepRow row;
  row.index = index;
  row.u1 = ico.u1;
  row.ground_truth = ground_truth_odd_constants(s);
  row.ico = ico.odd_constants;
  row.deutsch = deutsch.decoded_odd_constants;
  row.classical = classical.decoded_odd_constants;
  row.ico_outcome_probability = std::max(ico.p0, ico.p1);
  row.deutsch_outcome_probability = deutsch.outcome_probability;
  row.port = ico.p0 >= ico.p1 ? Port::B : Port::A;
  return row;
}

std::vector<SweepRow> sweep(std::size_t n, const StateVector& target, std::size_t max_n) {
  validate_n(n, max_n);
  const std::uint64_t total = config_space_size(n);
  std::vector<SweepRow> rows(total);
  std::exception_ptr failure;
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(total); ++i) {
    try {
      rows[static_cast<std::size_t>(i)] =
          evaluate_oracle_set(n, static_cast<std::uint64_t>(i), target);
    } catch (...) {
#pragma omp critical(cswitch_sweep_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::vector<SweepRow> sweep_serial(std::size_t n, const StateVector& target, std::size_t max_n) {
  validate_n(n, max_n);
  const std::uint64_t total = config_space_size(n);
  std::vector<SweepRow> rows;
  rows.reserve(total);
  for (std::uint64_t i = 0; i < total; ++i) rows.push_back(evaluate_oracle_set(n, i, target));
  return rows;
}

SweepSummary summarize(std::size_t n, const std::vector<SweepRow>& rows) {
  const ComplexityReport q = complexity_report(n);
  SweepSummary s;
  s.n = n;
  s.rows = rows.size();
  s.disagreements = static_cast<std::uint64_t>(
      std::count_if(rows.begin(), rows.end(), [](const SweepRow& r) { return !r.all_agree(); }));
  s.all_agree = s.disagreements == 0;
  s.classical_queries = q.classical_queries;
  s.quantum_queries = q.quantum_queries;
  s.ico_queries = q.ico_queries;
  return s;
}

}  // namespace cswitch
