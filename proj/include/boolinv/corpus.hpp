#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "boolinv/map_analysis.hpp"
#include "boolinv/system.hpp"

// Seeded random maps and systems for tests, the acceptance suite and the
// benchmark. Draws avoid std::uniform_int_distribution so a seed produces the
// same corpus with every standard library.
namespace boolinv::corpus {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Uniform-ish value in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
  bool coin() { return (next() >> 11) & 1U; }

 private:
  std::mt19937_64 engine_;
};

/// XOR of 1..max_monomials monomials, each of degree 1..max_degree over the
/// given variables, plus a random constant.
Anf random_sparse_anf(Rng& rng, const Universe& vars, std::size_t max_monomials, std::size_t max_degree);

BoolMap random_sparse_map(Rng& rng, std::size_t n, std::size_t m, std::size_t max_degree);

/// Triangular map x_i + g_i(x_{i+1}, ...) with shuffled inputs and outputs,
/// padded with m - n random sparse coordinates: always injective.
BoolMap random_injective_map(Rng& rng, std::size_t n, std::size_t m, std::size_t max_degree);

struct MapCorpusSpec {
  std::size_t count = 200;
  std::size_t n_min = 3;
  std::size_t n_max = 10;
  std::size_t extra_max = 3;
  std::size_t max_degree = 3;
};

/// Mix of random sparse, injective and perturbed-injective maps.
std::vector<BoolMap> map_corpus(std::uint64_t seed, const MapCorpusSpec& spec);

/// System over `vars` variables with 1..max_factors sparse factors. When
/// `planted` is set, a random point is forced to be a solution.
BoolSystem random_system(Rng& rng, std::size_t vars, std::size_t max_factors, bool planted);

std::vector<BoolSystem> system_corpus(std::uint64_t seed, std::size_t count, std::size_t max_vars,
                                      std::size_t max_factors);

/// `clusters` variable-disjoint groups of `width` variables, each pinned down
/// to a handful of solutions by sparse factors.
BoolSystem clustered_system(std::uint64_t seed, std::size_t clusters, std::size_t width);

}  // namespace boolinv::corpus
