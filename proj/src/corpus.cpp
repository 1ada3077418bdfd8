#include "boolinv/corpus.hpp"

#include <algorithm>

#include "boolinv/term.hpp"

namespace boolinv::corpus {
namespace {

std::vector<VarId> sample(Rng& rng, const Universe& vars, std::size_t k) {
  std::vector<VarId> pool = vars;
  k = std::min(k, pool.size());
  for (std::size_t i = 0; i < k; ++i) {
    std::swap(pool[i], pool[i + rng.below(pool.size() - i)]);
  }
  pool.resize(k);
  return pool;
}

template <typename T>
void shuffle(Rng& rng, std::vector<T>& v) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.below(i)]);
}

// Value of f at the point given by `point` (indexed by VarId).
bool value_at(const Anf& f, const std::vector<bool>& point) {
  bool acc = false;
  for (const auto& m : f.monomials()) {
    acc ^= std::all_of(m.begin(), m.end(), [&](VarId v) { return point[v.index]; });
  }
  return acc;
}

}  // namespace

Anf random_sparse_anf(Rng& rng, const Universe& vars, std::size_t max_monomials, std::size_t max_degree) {
  std::vector<Monomial> monomials;
  if (!vars.empty()) {
    const std::size_t count = rng.between(1, std::max<std::size_t>(1, max_monomials));
    const std::size_t top = std::max<std::size_t>(1, std::min(max_degree, vars.size()));
    for (std::size_t i = 0; i < count; ++i) monomials.push_back(sample(rng, vars, rng.between(1, top)));
  }
  if (rng.coin()) monomials.emplace_back();
  return Anf::from_monomials(std::move(monomials), vars);
}

BoolMap random_sparse_map(Rng& rng, std::size_t n, std::size_t m, std::size_t max_degree) {
  const Universe in = universe_range(0, static_cast<std::uint32_t>(n));
  std::vector<Anf> coords;
  for (std::size_t i = 0; i < m; ++i) coords.push_back(random_sparse_anf(rng, in, 3, max_degree));
  return BoolMap(n, std::move(coords));
}

BoolMap random_injective_map(Rng& rng, std::size_t n, std::size_t m, std::size_t max_degree) {
  const auto n32 = static_cast<std::uint32_t>(n);
  const Universe in = universe_range(0, n32);
  std::vector<Anf> coords;
  for (std::uint32_t i = 0; i < n32; ++i) {
    Anf f = Anf::variable(VarId{i}, in);
    const Universe later = universe_range(i + 1, n32 - i - 1);
    if (!later.empty() && rng.below(4) != 0) f = f ^ random_sparse_anf(rng, later, 2, max_degree);
    coords.push_back(f.with_universe(in));
  }
  std::vector<VarId> perm(in.begin(), in.end());
  shuffle(rng, perm);
  for (auto& c : coords) c = c.renamed(perm, in);
  shuffle(rng, coords);
  for (std::size_t i = n; i < m; ++i) coords.push_back(random_sparse_anf(rng, in, 3, max_degree));
  return BoolMap(n, std::move(coords));
}

std::vector<BoolMap> map_corpus(std::uint64_t seed, const MapCorpusSpec& spec) {
  Rng rng(seed);
  std::vector<BoolMap> out;
  out.reserve(spec.count);
  for (std::size_t i = 0; i < spec.count; ++i) {
    const std::size_t n = rng.between(spec.n_min, spec.n_max);
    const std::size_t m = n + rng.between(0, spec.extra_max);
    switch (i % 4) {
      case 0:
        out.push_back(random_sparse_map(rng, n, m, spec.max_degree));
        break;
      case 2: {
        // One coordinate swapped for a random one: usually, not always, breaks injectivity.
        BoolMap base = random_injective_map(rng, n, m, spec.max_degree);
        auto coords = base.coords();
        coords[rng.below(coords.size())] =
            random_sparse_anf(rng, universe_range(0, static_cast<std::uint32_t>(n)), 3, spec.max_degree);
        out.emplace_back(n, std::move(coords));
        break;
      }
      default:
        out.push_back(random_injective_map(rng, n, m, spec.max_degree));
        break;
    }
  }
  return out;
}

BoolSystem random_system(Rng& rng, std::size_t vars, std::size_t max_factors, bool planted) {
  const Universe u = universe_range(0, static_cast<std::uint32_t>(vars));
  std::vector<bool> point(vars);
  for (std::size_t i = 0; i < vars; ++i) point[i] = rng.coin();
  const std::size_t count = rng.between(1, max_factors);
  std::vector<Anf> factors;
  for (std::size_t i = 0; i < count; ++i) {
    const auto local = make_universe(sample(rng, u, rng.between(1, 4)));
    Anf h = random_sparse_anf(rng, local, 3, 3).with_universe(u);
    if (planted && !value_at(h, point)) h = h ^ true;
    factors.push_back(std::move(h));
  }
  return BoolSystem(std::move(factors), u);
}

std::vector<BoolSystem> system_corpus(std::uint64_t seed, std::size_t count, std::size_t max_vars,
                                      std::size_t max_factors) {
  Rng rng(seed);
  std::vector<BoolSystem> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t vars = rng.between(2, max_vars);
    out.push_back(random_system(rng, vars, max_factors, i % 3 != 0));
  }
  return out;
}

BoolSystem clustered_system(std::uint64_t seed, std::size_t clusters, std::size_t width) {
  Rng rng(seed);
  const Universe u = universe_range(0, static_cast<std::uint32_t>(clusters * width));
  std::vector<bool> point(u.size());
  for (std::size_t i = 0; i < point.size(); ++i) point[i] = rng.coin();
  std::vector<Anf> factors;
  for (std::size_t c = 0; c < clusters; ++c) {
    const Universe local = universe_range(static_cast<std::uint32_t>(c * width), static_cast<std::uint32_t>(width));
    for (std::size_t k = 0; k + 2 < width; ++k) {
      const auto vars = make_universe(sample(rng, local, rng.between(3, 4)));
      Anf h = random_sparse_anf(rng, vars, 3, 3).with_universe(u);
      if (!value_at(h, point)) h = h ^ true;
      factors.push_back(std::move(h));
    }
  }
  return BoolSystem(std::move(factors), u);
}

}  // namespace boolinv::corpus
