#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "boolinv/var.hpp"

namespace boolinv {

/// A variable or its complement. `positive == false` denotes x'.
struct Literal {
  VarId var;
  bool positive = true;

  constexpr auto operator<=>(const Literal&) const = default;
};

class Assignment;

/// Conjunction of literals (a cube). The empty term is the constant 1.
///
/// Literals are kept sorted by variable and a variable occurs at most once.
/// Terms order lexicographically by their literal sequence, with x' < x, so
/// minterms over one variable set sort in ascending binary order (first
/// variable most significant).
class Term {
 public:
  Term() = default;

  /// Throws std::invalid_argument if some variable occurs with both
  /// polarities. Duplicate identical literals are merged.
  static Term from_literals(std::vector<Literal> literals);

  /// Minterm over `vars` whose bits are read from `code`, vars[0] being the
  /// most significant bit.
  static Term minterm(std::span<const VarId> vars, std::uint64_t code);

  std::span<const Literal> literals() const { return literals_; }
  std::size_t size() const { return literals_.size(); }
  bool empty() const { return literals_.empty(); }

  std::optional<bool> value_of(VarId v) const;
  bool fixes(VarId v) const { return value_of(v).has_value(); }
  Universe variables() const;

  bool satisfied_by(const Assignment& a) const;

  auto operator<=>(const Term&) const = default;

 private:
  explicit Term(std::vector<Literal> sorted) : literals_(std::move(sorted)) {}

  std::vector<Literal> literals_;
};

/// Conjunction of two terms; std::nullopt marks a contradiction (some
/// variable appears with both polarities).
std::optional<Term> term_conjoin(const Term& a, const Term& b);

bool orthogonal(const Term& a, const Term& b);

/// Number of points of `universe` satisfying `t`: 2^(|universe| - |t|).
/// Throws std::invalid_argument if `t` has a literal outside the universe and
/// std::overflow_error if the count does not fit in 64 bits.
std::uint64_t satisfying_count(const Term& t, const Universe& universe);

/// Text form used throughout the tools: `x1 x2' y3`, or `1` for the empty term.
std::string to_string(const Term& t, const VarTable& names);

/// Total assignment over a universe.
class Assignment {
 public:
  Assignment() = default;
  Assignment(Universe universe, std::vector<bool> values);

  /// Reads bits from `code`, universe[0] most significant.
  static Assignment from_code(Universe universe, std::uint64_t code);

  const Universe& universe() const { return universe_; }
  const std::vector<bool>& values() const { return values_; }

  std::optional<bool> get(VarId v) const;
  /// Throws MissingVariableError when `v` is not assigned.
  bool at(VarId v) const;

  std::uint64_t code() const;

  bool operator==(const Assignment&) const = default;

 private:
  Universe universe_;
  std::vector<bool> values_;
};

std::string to_bitstring(const Assignment& a);
std::string to_bitstring(std::uint64_t code, std::size_t width);

}  // namespace boolinv
