#pragma once

// Fixed-order reference algorithms for the n-function Deutsch problem: the
// classical two-queries-per-function baseline and the generalized Deutsch
// circuit, simulated as explicit two-qubit state-vector evolution.

#include <cstddef>

#include "cswitch/oracles.hpp"
#include "cswitch/qmath.hpp"

namespace cswitch {

struct CircuitOutcome {
  int first_qubit = 0;
  bool decoded_odd_constants = false;
  std::size_t queries_used = 0;
  /// Probability of the reported first-qubit outcome (1 for the classical
  /// baseline, which has no measurement).
  double outcome_probability = 1.0;
};

/// Final two-qubit state |psi_3> = (H x I) U_{f_n} ... U_{f_1} (H x H) |0>|1>,
/// basis index 2 * first + second.
StateVector generalized_deutsch_state(const OracleSet& s);

/// Probabilities (p0, p1) of the first qubit of a two-qubit state.
std::pair<double, double> first_qubit_distribution(const StateVector& state);

/// Maps a first-qubit outcome to the answer, given the parity of n.
bool decode_first_qubit(int outcome, std::size_t n);

CircuitOutcome run_generalized_deutsch(const OracleSet& s);
CircuitOutcome run_classical_baseline(const OracleSet& s);

struct ComplexityReport {
  std::size_t classical_queries = 0;
  std::size_t quantum_queries = 0;
  std::size_t ico_queries = 0;
  std::size_t ico_fixed_gates = 0;

  friend bool operator==(const ComplexityReport&, const ComplexityReport&) = default;
};

/// Throws ValidationError when n == 0.
ComplexityReport complexity_report(std::size_t n);

}  // namespace cswitch
