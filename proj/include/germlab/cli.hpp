#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "germlab/diagrams.hpp"
#include "germlab/error.hpp"

namespace germlab::cli {

enum class ArithmeticMode { exact, floating };

/// {"f1": .., "gamma1": [.., ..], "f2": .., "gamma2": [.., ..], "degree": 12, "mode": "exact"}
struct DiagramDocument {
  std::string f1;
  std::array<std::string, 2> gamma1;
  std::optional<std::string> f2;
  std::optional<std::array<std::string, 2>> gamma2;
  int degree = 12;
  ArithmeticMode mode = ArithmeticMode::exact;

  bool is_pair() const { return f2.has_value(); }
  SingleExpr first() const;
  SingleExpr second() const;  // requires is_pair()

  static DiagramDocument parse_json(std::string_view text);
  static DiagramDocument from_pair(const PairExpr& pair, int degree, ArithmeticMode mode);
  std::string to_json() const;
};

/// 0 success, 1 parse/usage, 2 nongeneric input or violated constraint, 3 numeric failure.
int exit_code(ErrorKind kind);

/// Entry point shared by the germlab binary and the tests. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace germlab::cli
