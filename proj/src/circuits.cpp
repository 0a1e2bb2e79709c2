#include "cswitch/circuits.hpp"

#include "cswitch/errors.hpp"

namespace cswitch {

StateVector generalized_deutsch_state(const OracleSet& s) {
  StateVector state = tensor(kets::zero(), kets::one());
  state = tensor(gates::H(), gates::H()) * state;
  for (const auto& f : s) state = two_qubit_oracle(f) * state;
  return tensor(gates::H(), gates::I()) * state;
}

std::pair<double, double> first_qubit_distribution(const StateVector& state) {
  if (state.dim() != 4) throw DimensionMismatch("first_qubit_distribution: expected dim 4");
  const double p0 = std::norm(state[0]) + std::norm(state[1]);
  const double p1 = std::norm(state[2]) + std::norm(state[3]);
  return {p0, p1};
}

bool decode_first_qubit(int outcome, std::size_t n) {
  const bool n_odd = n % 2 == 1;
  return n_odd ? outcome == 0 : outcome == 1;
}

CircuitOutcome run_generalized_deutsch(const OracleSet& s) {
  const auto [p0, p1] = first_qubit_distribution(generalized_deutsch_state(s));
  CircuitOutcome out;
  out.first_qubit = p1 > p0 ? 1 : 0;
  out.outcome_probability = out.first_qubit ? p1 : p0;
  out.decoded_odd_constants = decode_first_qubit(out.first_qubit, s.size());
  out.queries_used = s.size();
  return out;
}

CircuitOutcome run_classical_baseline(const OracleSet& s) {
  CircuitOutcome out;
  std::size_t constants = 0;
  for (const auto& f : s) {
    const bool at0 = f(false);
    const bool at1 = f(true);
    out.queries_used += 2;
    if (at0 == at1) ++constants;
  }
  out.decoded_odd_constants = constants % 2 == 1;
  out.first_qubit = 0;
  return out;
}

ComplexityReport complexity_report(std::size_t n) {
  if (n == 0) throw ValidationError("complexity report: n >= 1 required");
  return {.classical_queries = 2 * n, .quantum_queries = n, .ico_queries = n, .ico_fixed_gates = 1};
}

}  // namespace cswitch
