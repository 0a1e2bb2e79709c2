#pragma once

// Jones-calculus model of the Sagnac-loop 2-SWITCH.
//
// Polarization basis: index 0 = H, index 1 = V. Path/port basis: index 0 is
// the input side of the beam splitter (port a, where the circulator picks up
// the returning light), index 1 is port b.
//
// Wave plates follow the convention QWP(0 deg) = diag(1, i) and
// HWP(theta) = [[cos 2theta, sin 2theta], [sin 2theta, -cos 2theta]].
// A counter-propagating photon sees each plate with its fast axis mirrored
// (theta -> -theta). On-axis plates are therefore reciprocal while HWP(45)
// flips sign, which is the origin of the port swap relative to the textbook
// switch output.

#include <cstdint>
#include <string_view>
#include <vector>

#include "cswitch/oracles.hpp"
#include "cswitch/qmath.hpp"
#include "cswitch/rng.hpp"

namespace cswitch {

enum class PlateKind { HWP, QWP };
enum class Direction { Forward, Reverse };
enum class Basis { H, V, D, A };
enum class Port { A, B };

/// Gates realized by the three-plate QWP-HWP-QWP stacks.
enum class PlateGate { I, MinusI, Z, MinusZ, X };

class WavePlate {
 public:
  /// `angle_deg` is the fast-axis angle from horizontal; stored modulo 180
  /// in [-90, 90). `retardance_error` is added to the nominal retardance.
  WavePlate(PlateKind kind, double angle_deg, double retardance_error = 0.0);

  PlateKind kind() const { return kind_; }
  double angle_deg() const { return angle_deg_; }
  double retardance_error() const { return retardance_error_; }

  friend bool operator==(const WavePlate&, const WavePlate&) = default;

 private:
  PlateKind kind_;
  double angle_deg_;
  double retardance_error_;
};

/// Plates in the order a forward (clockwise) photon meets them.
struct PlateStack {
  std::vector<WavePlate> plates;

  friend bool operator==(const PlateStack&, const PlateStack&) = default;
};

struct SagnacConfig {
  PlateStack u1_stack;
  PlateStack u2_stack;
  StateVector input_polarization;
  double interferometer_phase = 0.0;  // radians, applied to the counterclockwise arm
  double bs_transmittance = 0.5;

  friend bool operator==(const SagnacConfig&, const SagnacConfig&) = default;
};

struct NoiseModel {
  double plate_angle_sigma_deg = 0.0;
  double retardance_sigma = 0.0;  // radians
  double bs_imbalance_sigma = 0.0;
  double dark_count_rate = 0.0;
  std::uint64_t rng_seed = 0;

  /// All sigmas zero, no dark counts.
  static NoiseModel none(std::uint64_t seed = 0);
  /// Defaults tuned so the simulated mean success lands near the measured
  /// ~0.997. These are calibrated, not measured hardware values.
  static NoiseModel calibrated_default(std::uint64_t seed = 0);

  bool is_noiseless() const;
  /// Throws ValidationError for negative sigmas or a dark rate outside [0, 1).
  void validate() const;

  friend bool operator==(const NoiseModel&, const NoiseModel&) = default;
};

struct PortAmplitudes {
  StateVector port_a;  // unnormalized polarization amplitude
  StateVector port_b;
  double p_a = 0.0;
  double p_b = 0.0;

  double probability(Port p) const { return p == Port::A ? p_a : p_b; }
};

ComplexMatrix jones_matrix(const WavePlate& p, Direction direction);

/// Forward: last plate leftmost. Reverse: plates met in the opposite order,
/// each evaluated with its mirrored axis.
ComplexMatrix stack_matrix(const PlateStack& s, Direction direction);

PlateStack standard_stack(PlateGate gate);
PlateGate plate_gate(DiagonalGate g);
ComplexMatrix ideal_matrix(PlateGate gate);
std::string_view gate_name(PlateGate g);

/// Concatenated D(f_i) stacks realizing D(f_1) ... D(f_n). D(f_n) comes first
/// along the forward path.
PlateStack oracle_stack(const OracleSet& s);

/// [[sqrt T, i sqrt(1-T)], [i sqrt(1-T), sqrt T]]. Throws ValidationError
/// for T outside [0, 1].
ComplexMatrix beam_splitter(double transmittance);

PortAmplitudes simulate_sagnac(const SagnacConfig& c);

/// Liquid-crystal phase that sends all light to port b when U1 is the
/// identity stack. Closed-form: phi = pi - arg<cw|ccw>, returned in [0, 2pi).
/// Throws CalibrationError if an arm amplitude (or their overlap) vanishes.
double calibrate_phase(const PlateStack& u2_stack, const StateVector& input);

/// Copy of `c` with jittered plate angles, retardance errors, and BS
/// transmittance. The overload without a generator seeds one from
/// m.rng_seed, so it is deterministic for a fixed seed.
SagnacConfig perturb(const SagnacConfig& c, const NoiseModel& m);
SagnacConfig perturb(const SagnacConfig& c, const NoiseModel& m, Rng& rng);

StateVector polarization(Basis b);
std::string_view basis_name(Basis b);
Basis parse_basis(std::string_view name);  // throws ValidationError
std::string_view port_name(Port p);        // "a" / "b"

inline constexpr Basis kAllBases[] = {Basis::H, Basis::V, Basis::D, Basis::A};

/// Ideal calibrated configuration for U1 = D(f_1)...D(f_n), U2 = X.
SagnacConfig ideal_config(const OracleSet& s, Basis input);

}  // namespace cswitch
