#include "cswitch/qswitch.hpp"

#include <stdexcept>

#include "cswitch/errors.hpp"

namespace cswitch {

namespace {

constexpr double kUnitaryTol = 1e-10;
constexpr double kClosedFormTol = 1e-12;

void require_qubit_unitary(const ComplexMatrix& u, const char* name) {
  if (u.rows() != 2 || u.cols() != 2 || !is_unitary(u, kUnitaryTol)) {
    throw ValidationError(std::string("switch: ") + name + " must be a 2x2 unitary");
  }
}

ComplexMatrix projector(std::size_t index) {
  ComplexMatrix p(2, 2);
  p(index, index) = 1.0;
  return p;
}

}  // namespace

StateVector switch_closed_form(const ComplexMatrix& u1, const ComplexMatrix& u2,
                               const StateVector& target) {
  const StateVector anti = anticommutator(u1, u2) * target;
  const StateVector comm = commutator(u1, u2) * target;
  return Complex(0.5) * (tensor(kets::zero(), anti) + tensor(kets::one(), comm));
}

SwitchState switch_output_state(const ComplexMatrix& u1, const ComplexMatrix& u2,
                                const StateVector& target) {
  require_qubit_unitary(u1, "U1");
  require_qubit_unitary(u2, "U2");
  if (target.dim() != 2 || !target.is_normalized()) {
    throw ValidationError("switch: target must be a normalized qubit state");
  }

  const ComplexMatrix ordered = tensor(projector(0), u1 * u2) + tensor(projector(1), u2 * u1);
  StateVector joint = tensor(kets::plus(), target);
  joint = ordered * joint;
  joint = tensor(gates::H(), gates::I()) * joint;

  if (max_abs_diff(joint, switch_closed_form(u1, u2, target)) > kClosedFormTol) {
    throw std::logic_error("switch: operational state disagrees with closed form");
  }
  return {std::move(joint)};
}

std::pair<double, double> measure_control(const SwitchState& s) {
  const StateVector& v = s.joint;
  if (v.dim() != 4) throw DimensionMismatch("measure_control: expected dim 4");
  return {std::norm(v[0]) + std::norm(v[1]), std::norm(v[2]) + std::norm(v[3])};
}

bool decode_control(int outcome, std::size_t n) {
  const bool n_odd = n % 2 == 1;
  // Outcome 0 means U1 and U2 commute.
  return n_odd ? outcome == 0 : outcome == 1;
}

IcoDecision run_ico_algorithm(const OracleSet& s, const StateVector& target) {
  const ComplexMatrix u1 = product_oracle(s);
  const auto [p0, p1] = measure_control(switch_output_state(u1, gates::X(), target));
  IcoDecision d;
  d.p0 = p0;
  d.p1 = p1;
  d.n_parity = s.size() % 2 == 1 ? Parity::Odd : Parity::Even;
  d.odd_constants = decode_control(p1 > p0 ? 1 : 0, s.size());
  d.u1 = diagonal_gate(s);
  return d;
}

}  // namespace cswitch
