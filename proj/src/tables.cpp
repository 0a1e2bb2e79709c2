#include "cswitch/tables.hpp"

#include "cswitch/errors.hpp"

namespace cswitch {

namespace {

constexpr BooleanFunction c0{false, false};
constexpr BooleanFunction c1{true, true};
constexpr BooleanFunction b01{false, true};
constexpr BooleanFunction b10{true, false};

TableRow row(std::string label, std::string cls, std::vector<BooleanFunction> fs, Port port) {
  return {std::move(label), std::move(cls), OracleSet(std::move(fs)), port};
}

std::vector<TableRow> deutsch_rows() {
  return {
      row("I", "Constant", {c0}, Port::B),
      row("-I", "Constant", {c1}, Port::B),
      row("Z", "Balanced", {b01}, Port::A),
      row("-Z", "Balanced", {b10}, Port::A),
  };
}

std::vector<TableRow> two_function_rows() {
  return {
      row("I*I", "Two constant f1, f2", {c0, c0}, Port::B),
      row("I*-I", "Two constant f1, f2", {c0, c1}, Port::B),
      row("I*Z", "One constant f1", {c0, b01}, Port::A),
      row("I*-Z", "One constant f1", {c0, b10}, Port::A),
      row("-I*I", "Two constant f1, f2", {c1, c0}, Port::B),
      row("-I*-I", "Two constant f1, f2", {c1, c1}, Port::B),
      row("-I*Z", "One constant f1", {c1, b01}, Port::A),
      row("-I*-Z", "One constant f1", {c1, b10}, Port::A),
      row("Z*I", "One constant f2", {b01, c0}, Port::A),
      row("Z*-I", "One constant f2", {b01, c1}, Port::A),
      row("Z*Z", "No constant f", {b01, b01}, Port::B),
      row("Z*-Z", "No constant f", {b01, b10}, Port::B),
      row("-Z*I", "One constant f2", {b10, c0}, Port::A),
      row("-Z*-I", "One constant f2", {b10, c1}, Port::A),
      row("-Z*Z", "No constant f", {b10, b01}, Port::B),
      row("-Z*-Z", "No constant f", {b10, b10}, Port::B),
  };
}

}  // namespace

const std::vector<TableRow>& table_rows(ExperimentTable t) {
  static const std::vector<TableRow> deutsch = deutsch_rows();
  static const std::vector<TableRow> two = two_function_rows();
  return t == ExperimentTable::Deutsch ? deutsch : two;
}

std::string_view table_name(ExperimentTable t) {
  return t == ExperimentTable::Deutsch ? "deutsch" : "two-function";
}

ExperimentTable parse_table(std::string_view name) {
  if (name == "deutsch") return ExperimentTable::Deutsch;
  if (name == "two-function" || name == "two_function") return ExperimentTable::TwoFunction;
  throw ValidationError("unknown table '" + std::string(name) +
                        "' (expected deutsch or two-function)");
}

}  // namespace cswitch
