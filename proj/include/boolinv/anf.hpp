#pragma once

#include <optional>
#include <string>
#include <vector>

#include "boolinv/term.hpp"
#include "boolinv/var.hpp"

namespace boolinv {

/// Product of distinct variables; the empty monomial is the constant 1.
using Monomial = std::vector<VarId>;

/// Boolean function in algebraic normal form: XOR of monomials over F2.
///
/// The monomial list is canonical (sorted by degree, then lexicographically,
/// no repeats), so two Anf values denote the same function iff their
/// monomial lists are equal. Every monomial's support lies in `universe()`.
class Anf {
 public:
  /// The zero function over the empty universe.
  Anf() = default;

  /// Canonicalizes (cancels repeated monomials). Throws std::invalid_argument
  /// if a monomial mentions a variable outside `universe`; the universe is
  /// extended with the support when `universe` is empty.
  static Anf from_monomials(std::vector<Monomial> monomials, Universe universe = {});

  static Anf constant(bool value, Universe universe = {});
  static Anf variable(VarId v, Universe universe = {});
  /// ANF of a cube (product of literals, x' expanded as 1 + x).
  static Anf from_term(const Term& t, Universe universe = {});

  const std::vector<Monomial>& monomials() const { return monomials_; }
  const Universe& universe() const { return universe_; }
  Universe support() const;
  std::size_t degree() const;

  bool is_zero() const { return monomials_.empty(); }
  bool is_one() const { return monomials_.size() == 1 && monomials_.front().empty(); }
  std::optional<bool> constant_value() const;

  /// Same function over a wider universe.
  Anf with_universe(Universe universe) const;
  /// Renames every variable through `mapping` (indexed by old VarId.index).
  Anf renamed(const std::vector<VarId>& mapping, Universe universe) const;

  friend Anf operator^(const Anf& a, const Anf& b);
  friend Anf operator*(const Anf& a, const Anf& b);
  friend Anf operator^(const Anf& a, bool c);

  bool operator==(const Anf& other) const { return monomials_ == other.monomials_; }
  /// Orders by monomial list only; used to sort and deduplicate factors.
  bool operator<(const Anf& other) const { return monomials_ < other.monomials_; }

 private:
  Anf(std::vector<Monomial> canonical, Universe universe)
      : monomials_(std::move(canonical)), universe_(std::move(universe)) {}

  std::vector<Monomial> monomials_;
  Universe universe_;
};

/// Throws MissingVariableError if `a` leaves a variable of f's universe
/// unassigned.
bool eval(const Anf& f, const Assignment& a);

/// Cofactor f/t: every variable fixed by `t` is substituted. The result's
/// universe is f's universe minus the fixed variables.
Anf ratio(const Anf& f, const Term& t);

/// `x1*x2 + x3 + 1`; the zero function prints as `0`.
std::string to_string(const Anf& f, const VarTable& names);

}  // namespace boolinv
