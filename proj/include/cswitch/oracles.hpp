#pragma once

// One-bit Boolean black boxes, their operator encodings, and the ground-truth
// answer to "is the number of constant functions odd?".

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cswitch/qmath.hpp"

namespace cswitch {

/// Truth table (f(0), f(1)) of a function {0,1} -> {0,1}.
struct BooleanFunction {
  bool f0 = false;
  bool f1 = false;

  bool operator()(bool x) const { return x ? f1 : f0; }
  friend bool operator==(const BooleanFunction&, const BooleanFunction&) = default;
};

enum class FunctionClass { Constant, Balanced };

/// The four diagonal gates a product of D(f) factors can collapse to.
enum class DiagonalGate { I, MinusI, Z, MinusZ };

/// Ordered list f_1 ... f_n, n >= 1.
class OracleSet {
 public:
  /// Throws ValidationError when `functions` is empty.
  explicit OracleSet(std::vector<BooleanFunction> functions);

  std::size_t size() const { return functions_.size(); }
  const std::vector<BooleanFunction>& functions() const { return functions_; }
  const BooleanFunction& operator[](std::size_t i) const { return functions_[i]; }

  auto begin() const { return functions_.begin(); }
  auto end() const { return functions_.end(); }

  friend bool operator==(const OracleSet&, const OracleSet&) = default;

 private:
  std::vector<BooleanFunction> functions_;
};

FunctionClass classify(BooleanFunction f);

/// D(f) = sum_x (-1)^f(x) |x><x|; always one of +-I, +-Z.
ComplexMatrix diag_oracle(BooleanFunction f);

/// U_f |x, y> = |x, y xor f(x)>, basis index 2x + y.
ComplexMatrix two_qubit_oracle(BooleanFunction f);

/// D(f_1) D(f_2) ... D(f_n), multiplied left to right in list order.
ComplexMatrix product_oracle(const OracleSet& s);

bool ground_truth_odd_constants(const OracleSet& s);

std::size_t count_constants(const OracleSet& s);

/// Symbolic form of diag_oracle / product_oracle.
DiagonalGate diagonal_gate(BooleanFunction f);
DiagonalGate diagonal_gate(const OracleSet& s);
ComplexMatrix matrix_of(DiagonalGate g);
std::string_view gate_name(DiagonalGate g);  // "I", "-I", "Z", "-Z"

// Enumeration of the 4^n configuration space. Digit order per function is
// c0, c1, b01, b10 (i.e. I, -I, Z, -Z) with f_1 the most significant digit, so
// for n = 2 the index order reproduces the two-function correspondence table.

/// 4^n; throws ValidationError if n == 0 or 4^n overflows 64 bits.
std::uint64_t config_space_size(std::size_t n);
OracleSet oracle_set_from_index(std::size_t n, std::uint64_t index);

/// Short aliases: c0 = (0,0), c1 = (1,1), b01 = (0,1), b10 = (1,0).
std::string_view alias(BooleanFunction f);
BooleanFunction from_alias(std::string_view name);  // throws ValidationError
std::string aliases(const OracleSet& s);              // e.g. "c0,b01"

/// Parses either a JSON array (elements are [f0,f1] pairs or alias strings)
/// or a bare comma-separated alias list. Throws ParseError on malformed
/// text and ValidationError on an empty set or non-bit values.
OracleSet parse_oracle_set(std::string_view text);

/// Compact JSON, e.g. [[0,0],[0,1]].
std::string to_json_string(const OracleSet& s);

}  // namespace cswitch
