#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "boolinv/map_analysis.hpp"
#include "boolinv/system.hpp"

// Exhaustive ground truth. Everything here enumerates points one at a time in
// ascending binary order (first variable most significant) and shares no code
// with the implicant engine.
namespace boolinv::oracle {

/// Largest input arity / universe the oracle will enumerate.
inline constexpr unsigned kMaxVars = 24;
/// Largest input arity for which the full output list is materialized.
inline constexpr unsigned kMaxMaterialized = 16;

/// Truth table of a function over `universe`, entry i being its value at the
/// assignment with code i.
struct TruthTable {
  Universe universe;
  std::vector<bool> bits;

  static TruthTable of(const Anf& f, const Universe& universe);
  bool at(std::uint64_t code) const { return bits[code]; }
};

/// Input/output codes of a map with x1 and y1 as most significant bits.
class CompiledMap {
 public:
  explicit CompiledMap(const BoolMap& F);
  std::uint64_t operator()(std::uint64_t x) const;
  std::size_t n_in() const { return n_; }
  std::size_t m_out() const { return coords_.size(); }

 private:
  std::size_t n_;
  std::vector<std::vector<std::uint64_t>> coords_;
};

/// Distinct outputs, sorted. The serial loop is the reference; the parallel
/// kernel splits the input range across `jobs` OpenMP threads.
std::vector<std::uint64_t> brute_image_serial(const BoolMap& F, unsigned max_vars = kMaxMaterialized);
std::vector<std::uint64_t> brute_image_parallel(const BoolMap& F, int jobs,
                                                unsigned max_vars = kMaxMaterialized);
std::vector<std::uint64_t> brute_image(const BoolMap& F, unsigned max_vars = kMaxMaterialized);

/// Image size through a 2^m-bit occupancy bitmap, without storing outputs.
/// Needs m <= 32.
std::uint64_t image_size_streaming(const BoolMap& F, int jobs = 1, unsigned max_vars = kMaxVars);

/// Sorted complement of the image in F2^m.
std::vector<std::uint64_t> brute_complement_of_image(const BoolMap& F,
                                                     unsigned max_vars = kMaxMaterialized);

struct Injectivity {
  bool injective = false;
  /// First colliding pair in enumeration order: the smallest x2 whose output
  /// was already produced, with x1 the first input producing it.
  std::optional<std::pair<std::uint64_t, std::uint64_t>> witness;
};

Injectivity brute_injective(const BoolMap& F, unsigned max_vars = kMaxVars);

struct SolutionSet {
  Universe universe;
  std::vector<std::uint64_t> codes;

  Assignment assignment(std::size_t i) const { return Assignment::from_code(universe, codes[i]); }
};

SolutionSet brute_solutions(const BoolSystem& sys, unsigned max_vars = kMaxVars);

struct ValidationReport {
  bool sound = true;
  bool complete = true;
  bool orthogonal = true;
  /// First point (code over the system universe) violating each property.
  std::optional<std::uint64_t> unsound_point;
  std::optional<std::uint64_t> uncovered_point;
  std::optional<std::uint64_t> overlap_point;

  bool ok() const { return sound && complete && orthogonal; }
};

/// Checks that I covers exactly the solutions of `sys`, each exactly once.
ValidationReport validate_implicant_set(const ImplicantSet& I, const BoolSystem& sys,
                                        unsigned max_vars = kMaxVars);

}  // namespace boolinv::oracle
