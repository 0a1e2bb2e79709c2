#include <gtest/gtest.h>

#include <numbers>

#include "cswitch/errors.hpp"
#include "cswitch/sagnac.hpp"
#include "cswitch/tables.hpp"
#include "generators.hpp"

namespace cswitch {
namespace {

constexpr Complex kI{0.0, 1.0};
constexpr PlateGate kAllGates[] = {PlateGate::I, PlateGate::MinusI, PlateGate::Z,
                                   PlateGate::MinusZ, PlateGate::X};

TEST(Sagnac, JonesMatricesOfBasicPlates) {
  EXPECT_EQ(jones_matrix(WavePlate(PlateKind::QWP, 0), Direction::Forward),
            ComplexMatrix::diagonal({1.0, kI}));
  EXPECT_EQ(jones_matrix(WavePlate(PlateKind::HWP, 0), Direction::Forward), gates::Z());
  EXPECT_EQ(jones_matrix(WavePlate(PlateKind::HWP, 45), Direction::Forward), gates::X());
  EXPECT_EQ(jones_matrix(WavePlate(PlateKind::HWP, 45), Direction::Reverse), -gates::X());
  // HWP(22.5) maps H to D.
  const StateVector d =
      jones_matrix(WavePlate(PlateKind::HWP, 22.5), Direction::Forward) * polarization(Basis::H);
  EXPECT_LE(max_abs_diff(d, polarization(Basis::D)), 1e-15);
}

TEST(Sagnac, AngleNormalization) {
  EXPECT_EQ(WavePlate(PlateKind::QWP, 90).angle_deg(), -90.0);
  EXPECT_EQ(WavePlate(PlateKind::QWP, 180).angle_deg(), 0.0);
  EXPECT_EQ(WavePlate(PlateKind::QWP, -135).angle_deg(), 45.0);
}

TEST(Sagnac, StandardStacksRealizeTheirGates) {
  for (const auto gate : kAllGates) {
    const ComplexMatrix m = stack_matrix(standard_stack(gate), Direction::Forward);
    EXPECT_TRUE(equal_up_to_global_phase(m, ideal_matrix(gate), 1e-12)) << gate_name(gate);
    EXPECT_TRUE(is_unitary(m));
  }
}

TEST(Sagnac, Reciprocity) {
  const PlateStack x = standard_stack(PlateGate::X);
  EXPECT_EQ(stack_matrix(x, Direction::Reverse), -stack_matrix(x, Direction::Forward));
  for (const auto gate : {PlateGate::I, PlateGate::MinusI, PlateGate::Z, PlateGate::MinusZ}) {
    const PlateStack s = standard_stack(gate);
    EXPECT_EQ(stack_matrix(s, Direction::Reverse), stack_matrix(s, Direction::Forward))
        << gate_name(gate);
  }
}

TEST(Sagnac, OracleStackConcatenates) {
  const OracleSet s({{false, true}, {true, true}});
  EXPECT_EQ(oracle_stack(s).plates.size(), 6u);
  EXPECT_TRUE(equal_up_to_global_phase(stack_matrix(oracle_stack(s), Direction::Forward),
                                       product_oracle(s)));
}

TEST(Sagnac, BeamSplitter) {
  const ComplexMatrix bs = beam_splitter(0.5);
  EXPECT_TRUE(is_unitary(bs));
  EXPECT_EQ(beam_splitter(1.0), gates::I());
  EXPECT_TRUE(is_unitary(beam_splitter(0.3)));
  EXPECT_THROW(beam_splitter(-0.1), ValidationError);
  EXPECT_THROW(beam_splitter(1.1), ValidationError);
}

TEST(Sagnac, FullTransmissionSendsLightBack) {
  // T = 1: the photon goes once around the loop and straight out of port b,
  // with no interference.
  SagnacConfig c = ideal_config(OracleSet({{false, false}}), Basis::H);
  c.bs_transmittance = 1.0;
  const PortAmplitudes p = simulate_sagnac(c);
  EXPECT_NEAR(p.p_a, 0.0, 1e-12);
  EXPECT_NEAR(p.p_b, 1.0, 1e-12);
}

TEST(Sagnac, IdealPhaseIsZero) {
  for (const auto b : kAllBases) {
    EXPECT_NEAR(calibrate_phase(standard_stack(PlateGate::X), polarization(b)), 0.0, 1e-12);
  }
}

TEST(Sagnac, SingleFunctionExamples) {
  const PortAmplitudes c = simulate_sagnac(ideal_config(OracleSet({{false, false}}), Basis::H));
  EXPECT_NEAR(c.p_b, 1.0, 1e-12);
  const PortAmplitudes b = simulate_sagnac(ideal_config(OracleSet({{false, true}}), Basis::H));
  EXPECT_NEAR(b.p_a, 1.0, 1e-12);
}

TEST(Sagnac, PortCorrespondenceTables) {
  for (const auto table : {ExperimentTable::Deutsch, ExperimentTable::TwoFunction}) {
    for (const auto& row : table_rows(table)) {
      for (const auto b : kAllBases) {
        const PortAmplitudes p = simulate_sagnac(ideal_config(row.oracles, b));
        EXPECT_NEAR(p.probability(row.expected_port), 1.0, 1e-12) << row.label;
      }
    }
  }
}

TEST(Sagnac, CalibrationDegenerateCases) {
  EXPECT_THROW(calibrate_phase(standard_stack(PlateGate::X), StateVector(2)), CalibrationError);
  // HWP(22.5) sends H to D forward and to A in reverse: orthogonal arms.
  const PlateStack tilted{{WavePlate(PlateKind::HWP, 22.5)}};
  EXPECT_THROW(calibrate_phase(tilted, polarization(Basis::H)), CalibrationError);
}

TEST(Sagnac, CalibrationAbsorbsRetardanceError) {
  SagnacConfig c = ideal_config(OracleSet({{false, false}}), Basis::H);
  c.u2_stack.plates[0] = WavePlate(PlateKind::QWP, 0, 0.05);
  c.interferometer_phase = calibrate_phase(c.u2_stack, c.input_polarization);
  EXPECT_GE(simulate_sagnac(c).p_b, 0.99);
}

TEST(Sagnac, PerturbIsDeterministicAndZeroNoiseIsIdentity) {
  const SagnacConfig c = ideal_config(OracleSet({{false, true}}), Basis::D);
  EXPECT_EQ(perturb(c, NoiseModel::none(5)), c);
  const NoiseModel m = NoiseModel::calibrated_default(9);
  EXPECT_EQ(perturb(c, m), perturb(c, m));
  EXPECT_NE(perturb(c, m), c);
  NoiseModel other = m;
  other.rng_seed = 10;
  EXPECT_NE(perturb(c, m), perturb(c, other));
}

TEST(Sagnac, NoiseModelValidation) {
  NoiseModel m;
  m.plate_angle_sigma_deg = -1;
  EXPECT_THROW(m.validate(), ValidationError);
  m = NoiseModel{};
  m.dark_count_rate = 1.0;
  EXPECT_THROW(m.validate(), ValidationError);
  EXPECT_TRUE(NoiseModel::none().is_noiseless());
  EXPECT_FALSE(NoiseModel::calibrated_default().is_noiseless());
}

TEST(Sagnac, BasisParsing) {
  EXPECT_EQ(parse_basis("V"), Basis::V);
  EXPECT_EQ(parse_basis("+"), Basis::D);
  EXPECT_THROW(parse_basis("Q"), ValidationError);
}

TEST(Sagnac, SmallAngleJitterKeepsBalancedPortBright) {
  NoiseModel m = NoiseModel::none();
  m.plate_angle_sigma_deg = 0.2;
  Rng rng(77);
  const SagnacConfig ideal = ideal_config(OracleSet({{false, true}}), Basis::H);
  double sum = 0.0;
  for (int i = 0; i < 1000; ++i) {
    SagnacConfig c = perturb(ideal, m, rng);
    c.interferometer_phase = calibrate_phase(c.u2_stack, polarization(Basis::H));
    sum += simulate_sagnac(c).p_a;
  }
  const double mean = sum / 1000.0;
  EXPECT_GE(mean, 0.99);
  EXPECT_LE(mean, 1.0);
}

TEST(SagnacProperty, EnergyConservationUnderNoise) {
  NoiseModel m;
  m.plate_angle_sigma_deg = 3.0;
  m.retardance_sigma = 0.2;
  m.bs_imbalance_sigma = 0.05;
  testing::Engine g(51);
  Rng rng(52);
  for (int i = 0; i < 2000; ++i) {
    SagnacConfig c = ideal_config(testing::random_oracle_set(g, 3), kAllBases[g() % 4]);
    c = perturb(c, m, rng);
    c.input_polarization = testing::random_state(g);
    c.interferometer_phase = testing::angle(g);
    const PortAmplitudes p = simulate_sagnac(c);
    ASSERT_NEAR(p.p_a + p.p_b, 1.0, 1e-10) << i;
  }
}

TEST(SagnacProperty, IdealPortsForRandomInputs) {
  // Any input polarization: commuting U1 exits b, anticommuting exits a.
  testing::Engine g(53);
  for (int i = 0; i < 500; ++i) {
    const OracleSet s = testing::random_oracle_set(g, 6);
    SagnacConfig c = ideal_config(s, Basis::H);
    c.input_polarization = testing::random_state(g);
    c.interferometer_phase = calibrate_phase(c.u2_stack, c.input_polarization);
    const PortAmplitudes p = simulate_sagnac(c);
    const bool commutes = !ground_truth_odd_constants(s) == (s.size() % 2 == 0);
    ASSERT_NEAR(commutes ? p.p_b : p.p_a, 1.0, 1e-12) << i;
  }
}

TEST(SagnacProperty, NoiseMonotonicity) {
  const double grid[] = {0.0, 0.1, 0.2, 0.5, 1.0};
  const SagnacConfig ideal = ideal_config(OracleSet({{false, true}}), Basis::H);
  double previous = 1.0 + 1e-12;
  for (const double sigma : grid) {
    NoiseModel m = NoiseModel::none();
    m.plate_angle_sigma_deg = sigma;
    Rng rng(61);
    double sum = 0.0;
    constexpr int kSamples = 10000;
    for (int i = 0; i < kSamples; ++i) {
      SagnacConfig c = perturb(ideal, m, rng);
      c.interferometer_phase = calibrate_phase(c.u2_stack, polarization(Basis::H));
      sum += simulate_sagnac(c).p_a;
    }
    const double mean = sum / kSamples;
    EXPECT_LE(mean, previous) << "sigma " << sigma;
    previous = mean;
  }
}

}  // namespace
}  // namespace cswitch
