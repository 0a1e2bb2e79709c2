#include <gtest/gtest.h>

#include "cswitch/circuits.hpp"
#include "cswitch/errors.hpp"
#include "generators.hpp"

namespace cswitch {
namespace {

// Independent oracle: the first qubit of the generalized Deutsch circuit is
// the XOR over i of f_i(0) xor f_i(1).
int xor_branch(const OracleSet& s) {
  int out = 0;
  for (const auto& f : s) out ^= static_cast<int>(f.f0 != f.f1);
  return out;
}

TEST(Circuits, SingleFunctionDeutsch) {
  const CircuitOutcome c = run_generalized_deutsch(OracleSet({{false, false}}));
  EXPECT_EQ(c.first_qubit, 0);
  EXPECT_TRUE(c.decoded_odd_constants);
  EXPECT_EQ(c.queries_used, 1u);
  EXPECT_NEAR(c.outcome_probability, 1.0, 1e-12);

  const CircuitOutcome b = run_generalized_deutsch(OracleSet({{false, true}}));
  EXPECT_EQ(b.first_qubit, 1);
  EXPECT_FALSE(b.decoded_odd_constants);
}

TEST(Circuits, FinalStateSecondQubitIsMinus) {
  // |psi_3> = +-|branch> x |->.
  const StateVector psi = generalized_deutsch_state(OracleSet({{true, false}, {true, true}}));
  const double s = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(std::abs(psi[2]), s, 1e-12);
  EXPECT_NEAR(std::abs(psi[3]), s, 1e-12);
  EXPECT_NEAR(std::abs(psi[0]) + std::abs(psi[1]), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(psi[2] + psi[3]), 0.0, 1e-12);
}

TEST(Circuits, DecodeRuleDependsOnParity) {
  EXPECT_TRUE(decode_first_qubit(0, 1));
  EXPECT_FALSE(decode_first_qubit(1, 1));
  EXPECT_FALSE(decode_first_qubit(0, 2));
  EXPECT_TRUE(decode_first_qubit(1, 2));
}

TEST(Circuits, FirstQubitDistributionValidates) {
  EXPECT_THROW(first_qubit_distribution(StateVector(2)), DimensionMismatch);
  const auto [p0, p1] = first_qubit_distribution(StateVector::basis(4, 3));
  EXPECT_EQ(p0, 0.0);
  EXPECT_EQ(p1, 1.0);
}

TEST(Circuits, ClassicalUsesTwoQueriesPerFunction) {
  const CircuitOutcome c = run_classical_baseline(OracleSet({{false, true}, {true, true}, {true, true}}));
  EXPECT_EQ(c.queries_used, 6u);
  EXPECT_FALSE(c.decoded_odd_constants);
}

TEST(Circuits, ComplexityReport) {
  for (std::size_t n : {1u, 2u, 3u, 5u, 100u}) {
    const ComplexityReport r = complexity_report(n);
    EXPECT_EQ(r.classical_queries, 2 * n);
    EXPECT_EQ(r.quantum_queries, n);
    EXPECT_EQ(r.ico_queries, n);
    EXPECT_EQ(r.ico_fixed_gates, 1u);
  }
  EXPECT_THROW(complexity_report(0), ValidationError);
}

TEST(CircuitsProperty, ExhaustiveAgreementWithXorBranch) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::uint64_t i = 0; i < config_space_size(n); ++i) {
      const OracleSet s = oracle_set_from_index(n, i);
      const CircuitOutcome q = run_generalized_deutsch(s);
      ASSERT_EQ(q.first_qubit, xor_branch(s)) << n << ":" << i;
      ASSERT_GE(q.outcome_probability, 1.0 - 1e-12);
      ASSERT_EQ(q.decoded_odd_constants, ground_truth_odd_constants(s));
      ASSERT_EQ(run_classical_baseline(s).decoded_odd_constants, ground_truth_odd_constants(s));
    }
  }
}

TEST(CircuitsProperty, LongRandomSets) {
  testing::Engine g(31);
  for (int i = 0; i < 300; ++i) {
    const OracleSet s = testing::random_oracle_set(g, 64);
    const CircuitOutcome q = run_generalized_deutsch(s);
    ASSERT_EQ(q.first_qubit, xor_branch(s));
    ASSERT_EQ(q.decoded_odd_constants, ground_truth_odd_constants(s));
    ASSERT_EQ(q.queries_used, s.size());
  }
}

}  // namespace
}  // namespace cswitch
