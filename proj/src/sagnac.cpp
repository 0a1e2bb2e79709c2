#include "cswitch/sagnac.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "cswitch/errors.hpp"

namespace cswitch {

namespace {

constexpr double kPi = std::numbers::pi;

double normalize_axis(double deg) {
  double a = std::fmod(deg + 90.0, 180.0);
  if (a < 0.0) a += 180.0;
  return a - 90.0;
}

// cos and sin of an angle in degrees, exact at multiples of 90.
std::pair<double, double> cos_sin_deg(double deg) {
  double r = std::fmod(deg, 360.0);
  if (r < 0.0) r += 360.0;
  if (r == 0.0) return {1.0, 0.0};
  if (r == 90.0) return {0.0, 1.0};
  if (r == 180.0) return {-1.0, 0.0};
  if (r == 270.0) return {0.0, -1.0};
  const double rad = deg * kPi / 180.0;
  return {std::cos(rad), std::sin(rad)};
}

// e^{i(k pi/2 + delta)}, exact when delta == 0.
Complex retardance_phase(int quarter_turns, double delta) {
  static const Complex kQuarter[4] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
  const Complex nominal = kQuarter[quarter_turns & 3];
  if (delta == 0.0) return nominal;
  return nominal * std::polar(1.0, delta);
}

}  // namespace

WavePlate::WavePlate(PlateKind kind, double angle_deg, double retardance_error)
    : kind_(kind), angle_deg_(normalize_axis(angle_deg)), retardance_error_(retardance_error) {}

bool NoiseModel::is_noiseless() const {
  return plate_angle_sigma_deg == 0.0 && retardance_sigma == 0.0 && bs_imbalance_sigma == 0.0 &&
         dark_count_rate == 0.0;
}

NoiseModel NoiseModel::none(std::uint64_t seed) {
  NoiseModel m;
  m.rng_seed = seed;
  return m;
}

NoiseModel NoiseModel::calibrated_default(std::uint64_t seed) {
  NoiseModel m;
  m.plate_angle_sigma_deg = 0.2;
  m.retardance_sigma = 0.01;
  m.bs_imbalance_sigma = 0.005;
  m.dark_count_rate = 4e-3;
  m.rng_seed = seed;
  return m;
}

void NoiseModel::validate() const {
  if (!(plate_angle_sigma_deg >= 0.0) || !(retardance_sigma >= 0.0) ||
      !(bs_imbalance_sigma >= 0.0)) {
    throw ValidationError("noise model: sigmas must be non-negative");
  }
  if (!(dark_count_rate >= 0.0 && dark_count_rate < 1.0)) {
    throw ValidationError("noise model: dark_count_rate must lie in [0, 1)");
  }
}

ComplexMatrix jones_matrix(const WavePlate& p, Direction direction) {
  const double theta = direction == Direction::Forward ? p.angle_deg() : -p.angle_deg();
  // Retarder diag(1, e^{i Gamma}) rotated to fast axis theta, written with
  // double angles so on-axis and 45-degree plates come out exact.
  const auto [c2, s2] = cos_sin_deg(2.0 * theta);
  const Complex e =
      retardance_phase(p.kind() == PlateKind::HWP ? 2 : 1, p.retardance_error());
  const double cc = (1.0 + c2) / 2.0;  // cos^2 theta
  const double ss = (1.0 - c2) / 2.0;  // sin^2 theta
  const Complex off = (Complex(1.0) - e) * (s2 / 2.0);
  return ComplexMatrix{{cc + e * ss, off}, {off, ss + e * cc}};
}

ComplexMatrix stack_matrix(const PlateStack& s, Direction direction) {
  ComplexMatrix m = ComplexMatrix::identity(2);
  for (const auto& plate : s.plates) {
    const ComplexMatrix j = jones_matrix(plate, direction);
    m = direction == Direction::Forward ? j * m : m * j;
  }
  return m;
}

PlateStack standard_stack(PlateGate gate) {
  auto stack = [](double q1, double h, double q2) {
    return PlateStack{{WavePlate(PlateKind::QWP, q1), WavePlate(PlateKind::HWP, h),
                       WavePlate(PlateKind::QWP, q2)}};
  };
  switch (gate) {
    case PlateGate::I: return stack(0, 0, 0);
    case PlateGate::MinusI: return stack(90, 0, 90);
    case PlateGate::Z: return stack(0, 90, 90);
    case PlateGate::MinusZ: return stack(90, 0, 0);
    case PlateGate::X: return stack(0, 45, 0);
  }
  return {};
}

PlateGate plate_gate(DiagonalGate g) {
  switch (g) {
    case DiagonalGate::I: return PlateGate::I;
    case DiagonalGate::MinusI: return PlateGate::MinusI;
    case DiagonalGate::Z: return PlateGate::Z;
    case DiagonalGate::MinusZ: return PlateGate::MinusZ;
  }
  return PlateGate::I;
}

ComplexMatrix ideal_matrix(PlateGate gate) {
  switch (gate) {
    case PlateGate::I: return gates::I();
    case PlateGate::MinusI: return -gates::I();
    case PlateGate::Z: return gates::Z();
    case PlateGate::MinusZ: return -gates::Z();
    case PlateGate::X: return gates::X();
  }
  return {};
}

std::string_view gate_name(PlateGate g) {
  switch (g) {
    case PlateGate::I: return "I";
    case PlateGate::MinusI: return "-I";
    case PlateGate::Z: return "Z";
    case PlateGate::MinusZ: return "-Z";
    case PlateGate::X: return "X";
  }
  return "?";
}

PlateStack oracle_stack(const OracleSet& s) {
  PlateStack out;
  for (std::size_t i = s.size(); i-- > 0;) {
    const PlateStack part = standard_stack(plate_gate(diagonal_gate(s[i])));
    out.plates.insert(out.plates.end(), part.plates.begin(), part.plates.end());
  }
  return out;
}

ComplexMatrix beam_splitter(double transmittance) {
  if (!(transmittance >= 0.0 && transmittance <= 1.0)) {
    throw ValidationError("beam splitter: transmittance must lie in [0, 1]");
  }
  const double t = std::sqrt(transmittance);
  const Complex r(0.0, std::sqrt(1.0 - transmittance));
  return ComplexMatrix{{t, r}, {r, t}};
}

PortAmplitudes simulate_sagnac(const SagnacConfig& c) {
  if (c.input_polarization.dim() != 2) {
    throw ValidationError("sagnac: input polarization must be a qubit state");
  }
  const ComplexMatrix bs = beam_splitter(c.bs_transmittance);
  const ComplexMatrix cw = stack_matrix(c.u1_stack, Direction::Forward) *
                           stack_matrix(c.u2_stack, Direction::Forward);
  const ComplexMatrix ccw = stack_matrix(c.u2_stack, Direction::Reverse) *
                            stack_matrix(c.u1_stack, Direction::Reverse);

  // Light enters on mode 0. Path 0 runs clockwise, path 1 counterclockwise;
  // each returns to the splitter on the opposite mode.
  const StateVector cw_out = bs(0, 0) * (cw * c.input_polarization);
  const StateVector ccw_out =
      (bs(1, 0) * std::polar(1.0, c.interferometer_phase)) * (ccw * c.input_polarization);

  PortAmplitudes out;
  out.port_a = bs(0, 0) * ccw_out + bs(0, 1) * cw_out;
  out.port_b = bs(1, 0) * ccw_out + bs(1, 1) * cw_out;
  out.p_a = out.port_a.norm_squared();
  out.p_b = out.port_b.norm_squared();
  return out;
}

double calibrate_phase(const PlateStack& u2_stack, const StateVector& input) {
  const PlateStack identity = standard_stack(PlateGate::I);
  const StateVector cw = stack_matrix(identity, Direction::Forward) *
                         (stack_matrix(u2_stack, Direction::Forward) * input);
  const StateVector ccw = stack_matrix(u2_stack, Direction::Reverse) *
                          (stack_matrix(identity, Direction::Reverse) * input);
  constexpr double kTiny = 1e-12;
  if (cw.norm_squared() <= kTiny || ccw.norm_squared() <= kTiny) {
    throw CalibrationError("calibration impossible: an interferometer arm carries no light");
  }
  const Complex overlap = inner(cw, ccw);
  if (std::abs(overlap) <= kTiny) {
    throw CalibrationError("calibration impossible: arm polarizations are orthogonal");
  }
  // Port a carries e^{i phi} ccw + cw; cancel it.
  double phi = std::fmod(kPi - std::arg(overlap), 2.0 * kPi);
  if (phi < 0.0) phi += 2.0 * kPi;
  return phi;
}

SagnacConfig perturb(const SagnacConfig& c, const NoiseModel& m, Rng& rng) {
  m.validate();
  std::normal_distribution<double> gauss(0.0, 1.0);
  SagnacConfig out = c;
  auto jitter = [&](PlateStack& stack) {
    for (auto& plate : stack.plates) {
      double angle = plate.angle_deg();
      double delta = plate.retardance_error();
      if (m.plate_angle_sigma_deg > 0.0) angle += m.plate_angle_sigma_deg * gauss(rng);
      if (m.retardance_sigma > 0.0) delta += m.retardance_sigma * gauss(rng);
      plate = WavePlate(plate.kind(), angle, delta);
    }
  };
  jitter(out.u1_stack);
  jitter(out.u2_stack);
  if (m.bs_imbalance_sigma > 0.0) {
    constexpr double kEdge = 1e-9;
    const double t = c.bs_transmittance + m.bs_imbalance_sigma * gauss(rng);
    out.bs_transmittance = std::clamp(t, kEdge, 1.0 - kEdge);
  }
  return out;
}

SagnacConfig perturb(const SagnacConfig& c, const NoiseModel& m) {
  Rng rng(m.rng_seed);
  return perturb(c, m, rng);
}

StateVector polarization(Basis b) {
  const double s = 1.0 / std::sqrt(2.0);
  switch (b) {
    case Basis::H: return {1.0, 0.0};
    case Basis::V: return {0.0, 1.0};
    case Basis::D: return {s, s};
    case Basis::A: return {s, -s};
  }
  return {};
}

std::string_view basis_name(Basis b) {
  switch (b) {
    case Basis::H: return "H";
    case Basis::V: return "V";
    case Basis::D: return "D";
    case Basis::A: return "A";
  }
  return "?";
}

Basis parse_basis(std::string_view name) {
  if (name == "H" || name == "h" || name == "0") return Basis::H;
  if (name == "V" || name == "v" || name == "1") return Basis::V;
  if (name == "D" || name == "d" || name == "+") return Basis::D;
  if (name == "A" || name == "a" || name == "-") return Basis::A;
  throw ValidationError("unknown polarization basis '" + std::string(name) +
                        "' (expected H, V, D, A)");
}

std::string_view port_name(Port p) { return p == Port::A ? "a" : "b"; }

SagnacConfig ideal_config(const OracleSet& s, Basis input) {
  SagnacConfig c;
  c.u1_stack = oracle_stack(s);
  c.u2_stack = standard_stack(PlateGate::X);
  c.input_polarization = polarization(input);
  c.interferometer_phase = calibrate_phase(c.u2_stack, c.input_polarization);
  c.bs_transmittance = 0.5;
  return c;
}

}  // namespace cswitch
