#pragma once

// Exhaustive sweep of the 4^n oracle space comparing the switch algorithm,
// the generalized Deutsch circuit, and the classical baseline against the
// ground truth. sweep() is the OpenMP kernel; sweep_serial() is the
// reference it is tested against.

#include <cstdint>
#include <vector>

#include "cswitch/oracles.hpp"
#include "cswitch/qmath.hpp"
#include "cswitch/sagnac.hpp"

namespace cswitch {

struct SweepRow {
  std::uint64_t index = 0;
  DiagonalGate u1 = DiagonalGate::I;
  bool ground_truth = false;
  bool ico = false;
  bool deutsch = false;
  bool classical = false;
  double ico_outcome_probability = 0.0;
  double deutsch_outcome_probability = 0.0;
  /// Port the calibrated interferometer sends the photon to: b when U1
  /// commutes with X, a when it anticommutes.
  Port port = Port::B;

  bool all_agree() const { return ico == ground_truth && deutsch == ground_truth && classical == ground_truth; }
  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

struct SweepSummary {
  std::size_t n = 0;
  std::uint64_t rows = 0;
  std::uint64_t disagreements = 0;
  bool all_agree = true;
  std::size_t classical_queries = 0;
  std::size_t quantum_queries = 0;
  std::size_t ico_queries = 0;
};

/// Maximum n accepted by the CLI sweep (4^8 = 65536 rows).
inline constexpr std::size_t kMaxSweepN = 8;

SweepRow evaluate_oracle_set(std::size_t n, std::uint64_t index, const StateVector& target);

/// Throws ValidationError unless 1 <= n <= max_n.
std::vector<SweepRow> sweep(std::size_t n, const StateVector& target = kets::zero(),
                            std::size_t max_n = kMaxSweepN);
std::vector<SweepRow> sweep_serial(std::size_t n, const StateVector& target = kets::zero(),
                                   std::size_t max_n = kMaxSweepN);

SweepSummary summarize(std::size_t n, const std::vector<SweepRow>& rows);

}  // namespace cswitch
