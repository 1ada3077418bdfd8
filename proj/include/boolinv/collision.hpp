#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "boolinv/engine.hpp"
#include "boolinv/map_analysis.hpp"

namespace boolinv {

/// F(X) = F(X~) over x1..xn (VarIds 0..n-1) and x1~..xn~ (VarIds n..2n-1).
struct CollisionSystem {
  BoolSystem base;
  std::size_t n_in = 0;
};

/// The 2^n paired minterms m(X,a) m(X~,a), in ascending order of a.
struct DiagonalSet {
  std::vector<Term> pairs;
};

inline constexpr std::size_t kDiagonalCap = 16;

CollisionSystem build_collision_system(const BoolMap& F);

/// Names x1..xn followed by x1~..xn~.
VarTable collision_table(const BoolMap& F);

/// Throws std::invalid_argument for n < 1 and CapExceededError beyond `cap`.
DiagonalSet diagonal_set(std::size_t n, std::size_t cap = kDiagonalCap);

/// Every implicant of `set` expanded to minterms over `set.universe`, sorted.
/// Throws CapExceededError when the expansion would exceed `max_terms`.
std::vector<Term> expand_to_minterms(const ImplicantSet& set, std::uint64_t max_terms);

struct DiagonalVerdict {
  Verdict verdict;
  /// Whether the minterm-expanded collision implicants equal diagonal_set(n);
  /// set only when the expansion fits `expansion_cap`.
  std::optional<bool> equals_diagonal_set;
};

/// One-to-one iff every collision implicant forces x_i = x~_i for all i.
/// Otherwise the witness is a pair x != x~ with F(x) = F(x~).
DiagonalVerdict is_one_to_one_diagonal(const BoolMap& F, const EngineConfig& cfg = {},
                                       std::uint64_t expansion_cap = std::uint64_t{1} << 16);

}  // namespace boolinv
