#include <gtest/gtest.h>

#include "cswitch/errors.hpp"
#include "cswitch/sweep.hpp"
#include "cswitch/tables.hpp"

namespace cswitch {
namespace {

TEST(Sweep, ParallelMatchesSerial) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto* t : {&kets::zero(), &kets::one(), &kets::plus()}) {
      EXPECT_EQ(sweep(n, *t), sweep_serial(n, *t)) << n;
    }
  }
}

TEST(Sweep, AllMethodsAgree) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto rows = sweep(n);
    EXPECT_EQ(rows.size(), config_space_size(n));
    const SweepSummary s = summarize(n, rows);
    EXPECT_TRUE(s.all_agree);
    EXPECT_EQ(s.disagreements, 0u);
    EXPECT_EQ(s.classical_queries, 2 * n);
    EXPECT_EQ(s.ico_queries, n);
  }
}

TEST(Sweep, TwoFunctionRowsMatchTable) {
  const auto rows = sweep(2);
  const auto& table = table_rows(ExperimentTable::TwoFunction);
  ASSERT_EQ(rows.size(), table.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(oracle_set_from_index(2, rows[i].index), table[i].oracles);
    EXPECT_EQ(rows[i].port, table[i].expected_port) << table[i].label;
  }
}

TEST(Sweep, SingleFunctionRowsMatchTable) {
  const auto rows = sweep(1);
  const auto& table = table_rows(ExperimentTable::Deutsch);
  for (std::size_t i = 0; i < rows.size(); ++i) EXPECT_EQ(rows[i].port, table[i].expected_port);
}

TEST(Sweep, RangeGuard) {
  EXPECT_THROW(sweep(0), ValidationError);
  EXPECT_THROW(sweep(kMaxSweepN + 1), ValidationError);
  EXPECT_THROW(sweep_serial(0), ValidationError);
}

TEST(Sweep, LargestSpace) {
  const auto rows = sweep(kMaxSweepN);
  EXPECT_EQ(rows.size(), 65536u);
  EXPECT_TRUE(summarize(kMaxSweepN, rows).all_agree);
}

}  // namespace
}  // namespace cswitch
