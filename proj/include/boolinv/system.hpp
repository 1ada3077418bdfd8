#pragma once

#include <cstdint>
#include <vector>

#include "boolinv/anf.hpp"
#include "boolinv/term.hpp"

namespace boolinv {

/// Conjunction of factors: the system holds where every h_i = 1.
/// An equation f = 0 enters as the factor f + 1.
struct BoolSystem {
  std::vector<Anf> factors;
  Universe universe;

  BoolSystem() = default;
  /// Throws std::invalid_argument when a factor mentions a variable outside
  /// `universe`. Factor universes are widened to the system universe.
  BoolSystem(std::vector<Anf> factors, Universe universe);

  Universe support() const;
};

/// A family of terms meant to be a complete orthogonal cover of a system's
/// solution set. Nothing here enforces that; see the oracle for validation.
struct ImplicantSet {
  std::vector<Term> terms;
  Universe universe;

  bool operator==(const ImplicantSet&) const = default;
};

/// True iff f/t is the constant 1 for every factor.
bool is_implicant(const Term& t, const BoolSystem& sys);

/// True iff every pair of terms is orthogonal.
bool pairwise_orthogonal(const std::vector<Term>& terms);

/// For an orthogonal family: true iff the terms cover the whole cube over
/// `s.universe`, i.e. their OR (equal to their XOR here) is identically 1.
/// Throws std::invalid_argument if the family is not pairwise orthogonal.
bool og_sum_is_tautology(const ImplicantSet& s);

}  // namespace boolinv
