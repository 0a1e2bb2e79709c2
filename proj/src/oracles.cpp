#include "cswitch/oracles.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include <nlohmann/json.hpp>

#include "cswitch/errors.hpp"

namespace cswitch {

namespace {

constexpr std::array<BooleanFunction, 4> kDigitOrder{{
    {false, false},  // c0  -> I
    {true, true},    // c1  -> -I
    {false, true},   // b01 -> Z
    {true, false},   // b10 -> -Z
}};

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < std::min(offset, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

bool parse_bit(const nlohmann::json& j) {
  if (!j.is_number_integer() && !j.is_boolean()) {
    throw ValidationError("oracle bit must be 0 or 1, got " + j.dump());
  }
  if (j.is_boolean()) return j.get<bool>();
  const auto v = j.get<long long>();
  if (v != 0 && v != 1) throw ValidationError("oracle bit must be 0 or 1, got " + j.dump());
  return v == 1;
}

BooleanFunction function_from_json(const nlohmann::json& j) {
  if (j.is_string()) return from_alias(j.get<std::string>());
  if (!j.is_array() || j.size() != 2) {
    throw ValidationError("each oracle must be a [f(0), f(1)] pair or an alias, got " + j.dump());
  }
  return {parse_bit(j[0]), parse_bit(j[1])};
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

OracleSet::OracleSet(std::vector<BooleanFunction> functions) : functions_(std::move(functions)) {
  if (functions_.empty()) throw ValidationError("oracle set: n >= 1 required");
}

FunctionClass classify(BooleanFunction f) {
  return f.f0 == f.f1 ? FunctionClass::Constant : FunctionClass::Balanced;
}

ComplexMatrix diag_oracle(BooleanFunction f) {
  return ComplexMatrix::diagonal({f.f0 ? -1.0 : 1.0, f.f1 ? -1.0 : 1.0});
}

ComplexMatrix two_qubit_oracle(BooleanFunction f) {
  ComplexMatrix u(4, 4);
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      const int out_y = y ^ static_cast<int>(f(x != 0));
      u(2 * x + out_y, 2 * x + y) = 1.0;
    }
  return u;
}

ComplexMatrix product_oracle(const OracleSet& s) {
  ComplexMatrix u = ComplexMatrix::identity(2);
  for (const auto& f : s) u = u * diag_oracle(f);
  return u;
}

std::size_t count_constants(const OracleSet& s) {
  return static_cast<std::size_t>(std::count_if(
      s.begin(), s.end(), [](BooleanFunction f) { return classify(f) == FunctionClass::Constant; }));
}

bool ground_truth_odd_constants(const OracleSet& s) { return count_constants(s) % 2 == 1; }

DiagonalGate diagonal_gate(BooleanFunction f) {
  if (f.f0 == f.f1) return f.f0 ? DiagonalGate::MinusI : DiagonalGate::I;
  return f.f0 ? DiagonalGate::MinusZ : DiagonalGate::Z;
}

DiagonalGate diagonal_gate(const OracleSet& s) {
  // Track the product diag(a, b) by the parity of its two sign bits.
  bool sign0 = false;
  bool sign1 = false;
  for (const auto& f : s) {
    sign0 ^= f.f0;
    sign1 ^= f.f1;
  }
  return diagonal_gate(BooleanFunction{sign0, sign1});
}

ComplexMatrix matrix_of(DiagonalGate g) {
  switch (g) {
    case DiagonalGate::I: return gates::I();
    case DiagonalGate::MinusI: return -gates::I();
    case DiagonalGate::Z: return gates::Z();
    case DiagonalGate::MinusZ: return -gates::Z();
  }
  return {};
}

std::string_view gate_name(DiagonalGate g) {
  switch (g) {
    case DiagonalGate::I: return "I";
    case DiagonalGate::MinusI: return "-I";
    case DiagonalGate::Z: return "Z";
    case DiagonalGate::MinusZ: return "-Z";
  }
  return "?";
}

std::uint64_t config_space_size(std::size_t n) {
  if (n == 0) throw ValidationError("config space: n >= 1 required");
  if (n > 31) throw ValidationError("config space: 4^n does not fit in 64 bits");
  return std::uint64_t{1} << (2 * n);
}

OracleSet oracle_set_from_index(std::size_t n, std::uint64_t index) {
  if (index >= config_space_size(n)) throw ValidationError("oracle index out of range");
  std::vector<BooleanFunction> fs(n);
  for (std::size_t i = n; i-- > 0;) {
    fs[i] = kDigitOrder[index & 3u];
    index >>= 2;
  }
  return OracleSet(std::move(fs));
}

std::string_view alias(BooleanFunction f) {
  if (f.f0 == f.f1) return f.f0 ? "c1" : "c0";
  return f.f0 ? "b10" : "b01";
}

BooleanFunction from_alias(std::string_view name) {
  if (name == "c0") return {false, false};
  if (name == "c1") return {true, true};
  if (name == "b01") return {false, true};
  if (name == "b10") return {true, false};
  throw ValidationError("unknown oracle alias '" + std::string(name) +
                        "' (expected c0, c1, b01, b10)");
}

std::string aliases(const OracleSet& s) {
  std::string out;
  for (const auto& f : s) {
    if (!out.empty()) out += ',';
    out += alias(f);
  }
  return out;
}

OracleSet parse_oracle_set(std::string_view text) {
  const std::string_view body = trim(text);
  if (body.empty()) throw ParseError("empty oracle specification", 1, 1);

  if (body.front() != '[') {
    std::vector<BooleanFunction> fs;
    std::size_t start = 0;
    while (start <= body.size()) {
      const auto comma = body.find(',', start);
      const auto token = trim(body.substr(start, comma == std::string_view::npos
                                                     ? std::string_view::npos
                                                     : comma - start));
      if (token.empty()) {
        const auto offset = static_cast<std::size_t>(body.data() - text.data()) + start;
        const auto [line, col] = line_column(text, offset);
        throw ParseError("empty alias in oracle list", line, col);
      }
      fs.push_back(from_alias(token));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return OracleSet(std::move(fs));
  }

  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // e.byte is the 1-based offset of the offending character.
    const auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    // Keep nlohmann's description but drop its own position prefix.
    std::string detail = e.what();
    if (const auto at = detail.find(": ", detail.find("column")); at != std::string::npos) {
      detail = detail.substr(at + 2);
    }
    throw ParseError("malformed oracle JSON: " + detail, line, col);
  }
  if (!j.is_array()) throw ValidationError("oracle JSON must be an array");
  std::vector<BooleanFunction> fs;
  fs.reserve(j.size());
  for (const auto& item : j) fs.push_back(function_from_json(item));
  return OracleSet(std::move(fs));
}

std::string to_json_string(const OracleSet& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += '[';
    out += s[i].f0 ? '1' : '0';
    out += ',';
    out += s[i].f1 ? '1' : '0';
    out += ']';
  }
  out += ']';
  return out;
}

}  // namespace cswitch
