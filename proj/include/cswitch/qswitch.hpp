#pragma once

// Quantum 2-SWITCH and the indefinite-causal-order decision procedure.
//
// Joint basis is |c> x |t> with the control c as the most significant index.
// Control |0> applies U2 before U1 (operator u1*u2); control |1> applies U1
// before U2 (operator u2*u1). A Hadamard on the control then separates the
// anticommutator (c = 0) and commutator (c = 1) branches.

#include <utility>

#include "cswitch/oracles.hpp"
#include "cswitch/qmath.hpp"

namespace cswitch {

/// Normalized 4-dimensional control x target state.
struct SwitchState {
  StateVector joint;
};

enum class Parity { Even, Odd };

struct IcoDecision {
  double p0 = 0.0;
  double p1 = 0.0;
  bool odd_constants = false;
  Parity n_parity = Parity::Odd;
  DiagonalGate u1 = DiagonalGate::I;
};

/// Runs the switch operationally: |+>_c x target, controlled-order unitary,
/// Hadamard on the control. Throws ValidationError if u1 or u2 is not a 2x2
/// unitary or the target is not a normalized qubit state. Also checks the
/// result against switch_closed_form and throws std::logic_error if they
/// disagree by more than 1e-12.
SwitchState switch_output_state(const ComplexMatrix& u1, const ComplexMatrix& u2,
                                const StateVector& target);

/// 1/2 (|0> x {u1,u2}|t> + |1> x [u1,u2]|t>).
StateVector switch_closed_form(const ComplexMatrix& u1, const ComplexMatrix& u2,
                               const StateVector& target);

/// (p0, p1) of the control qubit.
std::pair<double, double> measure_control(const SwitchState& s);

/// Decision for a deterministic control outcome given the parity of n.
bool decode_control(int outcome, std::size_t n);

/// U1 = product_oracle(s), U2 = X, one pass through the switch.
IcoDecision run_ico_algorithm(const OracleSet& s, const StateVector& target);

}  // namespace cswitch
