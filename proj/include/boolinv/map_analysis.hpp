#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "boolinv/engine.hpp"
#include "boolinv/system.hpp"

namespace boolinv {

/// F: F2^n -> F2^m given by m coordinate ANFs over inputs x1..xn, which are
/// VarIds 0..n-1. Graph and collision systems append their extra variables
/// after the inputs.
class BoolMap {
 public:
  BoolMap() = default;
  /// Names default to x1..xn / y1..ym. Throws std::invalid_argument when a
  /// coordinate mentions a variable beyond the inputs.
  BoolMap(std::size_t n_in, std::vector<Anf> coords, std::vector<std::string> input_names = {},
          std::vector<std::string> output_names = {});

  std::size_t n_in() const { return n_in_; }
  std::size_t m_out() const { return coords_.size(); }
  const std::vector<Anf>& coords() const { return coords_; }
  const std::vector<std::string>& input_names() const { return input_names_; }
  const std::vector<std::string>& output_names() const { return output_names_; }
  Universe inputs() const;

  /// Input names only.
  VarTable input_table() const;
  /// Inputs followed by outputs: the variable table of the graph system.
  VarTable graph_table() const;

  bool operator==(const BoolMap&) const = default;

 private:
  std::size_t n_in_ = 0;
  std::vector<Anf> coords_;
  std::vector<std::string> input_names_;
  std::vector<std::string> output_names_;
};

/// r(X) s(Y) factorization of a graph implicant.
struct GraphImplicant {
  Term r;
  Term s;
};

/// Two distinct inputs with equal image.
struct Collision {
  Assignment x;
  Assignment x_tilde;
};

struct Verdict {
  bool one_to_one = false;
  std::optional<Collision> witness;
  /// Distinct Y-minterms among the graph implicants (the image size).
  std::uint64_t y_minterm_count = 0;
  std::size_t implicant_count = 0;
};

/// Points of F2^m outside the image. Points are codes with y1 as the most
/// significant bit. `points` is filled only when `enumerated`; the symbolic
/// form is always available: a point y is in the set iff s(y) = 0 for every
/// term in `covered`.
struct ImageComplement {
  std::size_t width = 0;
  Universe y_vars;
  std::optional<std::uint64_t> count;
  bool enumerated = false;
  std::vector<std::uint64_t> points;
  std::vector<Term> covered;
  /// The defining system {s' = 1 for each covered minterm s} over Y.
  BoolSystem defining_system() const;
};

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 20;

/// Factors f_i + y_i + 1 over x1..xn, y1..ym.
BoolSystem build_graph_system(const BoolMap& F);

/// Throws std::invalid_argument if t mentions a variable beyond x and y.
GraphImplicant split_xy(const Term& t, const BoolMap& F);

/// Graph implicants factored into r(X) s(Y); throws std::logic_error if some
/// s-factor fails to fix every output variable.
std::vector<GraphImplicant> graph_implicants(const BoolMap& F, const EngineConfig& cfg = {});

/// Requires m = n; otherwise throws std::invalid_argument pointing at
/// is_one_to_one_general.
Verdict is_invertible_square(const BoolMap& F, const EngineConfig& cfg = {});

/// Garden of Eden set of a square map.
ImageComplement goe(const BoolMap& F, const EngineConfig& cfg = {},
                    std::uint64_t enumeration_cap = kDefaultEnumerationCap);

Verdict is_one_to_one_general(const BoolMap& F, const EngineConfig& cfg = {});

/// Complement of the image for m >= n.
ImageComplement coi(const BoolMap& F, const EngineConfig& cfg = {},
                    std::uint64_t enumeration_cap = kDefaultEnumerationCap);

struct UniqueSolution {
  enum class Kind { none, unique, multiple };
  Kind kind = Kind::none;
  std::optional<Assignment> solution;
};

UniqueSolution unique_solution(const BoolSystem& sys, const EngineConfig& cfg = {});

const char* to_string(UniqueSolution::Kind kind);

}  // namespace boolinv
