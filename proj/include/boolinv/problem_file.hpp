#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "boolinv/gf2n.hpp"
#include "boolinv/map_analysis.hpp"
#include "boolinv/system.hpp"

// Text format for problems:
//
//   # comment
//   vars: x1 x2 x3          declared input / system variables, in order
//   y1 = x2                 map coordinate   (one per output)
//   0 = x1 + x2*x3 + 1      system equation  (f = 0)
//   field: n=3 modulus=1011 polynomial problems: degree, binary modulus
//   poly: 3*X^2 + X + 1     coefficients in hex
//
// `;` separates statements on one line. A file holds exactly one kind.
namespace boolinv::io {

struct SystemProblem {
  VarTable vars;
  BoolSystem system;

  bool operator==(const SystemProblem& other) const;
};

using Problem = std::variant<BoolMap, SystemProblem, gf2n::UniPoly>;

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

Problem parse_problem(std::string_view text);
Problem read_problem_file(const std::filesystem::path& path);

/// Canonical text; parse_problem(print_problem(p)) == p.
std::string print_problem(const Problem& problem);

const char* kind_name(const Problem& problem);

}  // namespace boolinv::io
