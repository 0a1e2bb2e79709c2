#pragma once

// Measured correspondence tables: every oracle configuration that was set up
// on the optical table, with the port the photon is expected to leave from.
// The expected ports are fixture data copied from the published tables, not
// derived from the simulator, so tests can check the simulator against them.

#include <string>
#include <string_view>
#include <vector>

#include "cswitch/oracles.hpp"
#include "cswitch/sagnac.hpp"

namespace cswitch {

enum class ExperimentTable { Deutsch, TwoFunction };

struct TableRow {
  std::string label;           // U1 as written, e.g. "I" or "Z*-Z"
  std::string function_class;  // e.g. "Constant", "One constant f1"
  OracleSet oracles;
  Port expected_port;
};

/// 4 rows (single function) or 16 rows (two functions), in published order.
const std::vector<TableRow>& table_rows(ExperimentTable t);

std::string_view table_name(ExperimentTable t);          // "deutsch" / "two-function"
ExperimentTable parse_table(std::string_view name);      // throws ValidationError

}  // namespace cswitch
