#include "boolinv/engine.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace boolinv {
namespace {

void check_config(const EngineConfig& cfg) {
  if (cfg.base_bound < 1 || cfg.base_bound > kMaxBaseBound) {
    throw std::invalid_argument("base bound must lie in [1, " + std::to_string(kMaxBaseBound) + "]");
  }
  if (cfg.parallelism < 1) throw std::invalid_argument("parallelism must be at least 1");
}

// Word w of the truth table of the variable stored at code bit `bit`.
std::uint64_t projection_word(std::size_t bit, std::size_t w) {
  static constexpr std::uint64_t kInWord[6] = {
      0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
      0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL};
  if (bit < 6) return kInWord[bit];
  return ((w >> (bit - 6)) & 1U) ? ~std::uint64_t{0} : 0;
}

// Minterms over `support` satisfying every factor, ascending. The conjunction
// is evaluated as bit-parallel truth tables rather than by expanding the
// product ANF, which can be exponentially larger than its factors.
std::vector<Term> leaf_minterms(const std::vector<Anf>& factors, const Universe& support) {
  const std::size_t k = support.size();
  const std::size_t points = std::size_t{1} << k;
  const std::size_t words = std::max<std::size_t>(1, points / 64);
  const std::uint64_t tail_mask = points >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << points) - 1);

  auto code_bit = [&](VarId v) {
    auto j = static_cast<std::size_t>(std::lower_bound(support.begin(), support.end(), v) - support.begin());
    return k - 1 - j;
  };

  std::vector<std::uint64_t> conj(words, ~std::uint64_t{0});
  std::vector<std::uint64_t> table(words);
  for (const auto& f : factors) {
    std::fill(table.begin(), table.end(), 0);
    for (const auto& m : f.monomials()) {
      std::vector<std::size_t> bits;
      bits.reserve(m.size());
      for (VarId v : m) bits.push_back(code_bit(v));
      for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t word = ~std::uint64_t{0};
        for (std::size_t b : bits) word &= projection_word(b, w);
        table[w] ^= word;
      }
    }
    bool any = false;
    for (std::size_t w = 0; w < words; ++w) {
      conj[w] &= table[w];
      any |= conj[w] != 0;
    }
    if (!any) return {};
  }
  conj.back() &= tail_mask;

  std::vector<Term> out;
  for (std::size_t w = 0; w < words; ++w) {
    std::uint64_t word = conj[w];
    while (word != 0) {
      const int bit = __builtin_ctzll(word);
      word &= word - 1;
      out.push_back(Term::minterm(support, w * 64 + static_cast<std::size_t>(bit)));
    }
  }
  return out;
}

Universe combined_support(const std::vector<Anf>& factors) {
  std::vector<VarId> vars;
  for (const auto& f : factors) {
    for (const auto& m : f.monomials()) vars.insert(vars.end(), m.begin(), m.end());
  }
  return make_universe(std::move(vars));
}

std::vector<Term> solve(std::vector<Anf> factors, const EngineConfig& cfg, bool parallel);

// Extends every seed t by the implicants of (residual / t); one branch per seed.
std::vector<Term> extend_seeds(const std::vector<Term>& seeds, const std::vector<Anf>& residual,
                               const EngineConfig& cfg, bool parallel) {
  std::vector<std::vector<Term>> branches(seeds.size());
  auto run_branch = [&](std::size_t i) {
    std::vector<Anf> cofactored;
    cofactored.reserve(residual.size());
    for (const auto& h : residual) cofactored.push_back(ratio(h, seeds[i]));
    for (auto& s : solve(std::move(cofactored), cfg, parallel)) {
      if (auto ts = term_conjoin(seeds[i], s)) branches[i].push_back(std::move(*ts));
    }
  };

  const auto n = static_cast<long>(seeds.size());
  if (parallel && n > 1) {
#pragma omp taskloop grainsize(1) shared(run_branch)
    for (long i = 0; i < n; ++i) run_branch(static_cast<std::size_t>(i));
  } else {
    for (long i = 0; i < n; ++i) run_branch(static_cast<std::size_t>(i));
  }

  std::vector<Term> out;
  for (auto& b : branches) {
    out.insert(out.end(), std::make_move_iterator(b.begin()), std::make_move_iterator(b.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Term> cross_product(const std::vector<std::vector<Term>>& lists) {
  std::vector<Term> out{Term{}};
  for (const auto& list : lists) {
    std::vector<Term> next;
    next.reserve(out.size() * list.size());
    for (const auto& a : out) {
      for (const auto& b : list) {
        if (auto ab = term_conjoin(a, b)) next.push_back(std::move(*ab));
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Term> solve(std::vector<Anf> factors, const EngineConfig& cfg, bool parallel) {
  std::vector<Anf> live;
  live.reserve(factors.size());
  for (auto& f : factors) {
    if (f.is_zero()) return {};
    if (!f.is_one()) live.push_back(std::move(f));
  }
  if (live.empty()) return {Term{}};

  Universe support = combined_support(live);
  if (support.size() <= static_cast<std::size_t>(cfg.base_bound)) {
    return leaf_minterms(live, support);
  }

  BoolSystem local(live, support);
  ClusterPlan plan = select_disjoint_clusters(local, cfg);

  std::vector<Term> seeds;
  std::vector<Anf> residual;
  if (plan.split_required) {
    const VarId v = *plan.split_var;
    seeds = {Term::from_literals({Literal{v, false}}), Term::from_literals({Literal{v, true}})};
    residual = std::move(local.factors);
  } else {
    std::vector<std::vector<Term>> lists;
    lists.reserve(plan.disjoint_factors.size());
    for (std::size_t idx : plan.disjoint_factors) {
      const Anf& h = local.factors[idx];
      auto leaf = leaf_minterms({h}, h.support());
      if (leaf.empty()) return {};
      lists.push_back(std::move(leaf));
    }
    seeds = cross_product(lists);
    for (std::size_t idx : plan.residual) residual.push_back(local.factors[idx]);
  }
  return extend_seeds(seeds, residual, cfg, parallel);
}

template <typename F>
std::vector<Term> run_with_workers(const EngineConfig& cfg, F&& body) {
  std::vector<Term> out;
#ifdef _OPENMP
  if (cfg.parallelism > 1) {
#pragma omp parallel num_threads(cfg.parallelism)
#pragma omp single
    out = body(true);
    return out;
  }
#endif
  out = body(false);
  return out;
}

}  // namespace

ImplicantSet impl_for_simple(const Anf& f, int base_bound) {
  Universe support = f.support();
  if (support.size() > static_cast<std::size_t>(std::max(base_bound, 0))) {
    throw std::invalid_argument("impl_for_simple: support of " + std::to_string(support.size()) +
                                " variables exceeds the base bound " + std::to_string(base_bound) +
                                "; decompose the system with implicants() instead");
  }
  if (f.is_zero()) return ImplicantSet{{}, support};
  return ImplicantSet{leaf_minterms({f}, support), support};
}

ClusterPlan select_disjoint_clusters(const BoolSystem& sys, const EngineConfig& cfg) {
  check_config(cfg);
  if (sys.factors.empty()) throw std::invalid_argument("select_disjoint_clusters: empty system");

  const std::size_t count = sys.factors.size();
  std::vector<Universe> supports(count);
  for (std::size_t i = 0; i < count; ++i) supports[i] = sys.factors[i].support();

  std::vector<std::size_t> order(count);
  for (std::size_t i = 0; i < count; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return supports[a].size() < supports[b].size();
  });

  ClusterPlan plan;
  Universe used;
  std::vector<bool> admitted(count, false);
  for (std::size_t i : order) {
    const auto& s = supports[i];
    if (s.size() > static_cast<std::size_t>(cfg.base_bound)) continue;
    Universe overlap;
    std::set_intersection(s.begin(), s.end(), used.begin(), used.end(), std::back_inserter(overlap));
    if (!overlap.empty()) continue;
    admitted[i] = true;
    used = universe_union(used, s);
  }

  if (std::none_of(admitted.begin(), admitted.end(), [](bool b) { return b; })) {
    const std::size_t smallest = order.front();
    admitted[smallest] = true;
    plan.split_required = true;
    // Branch on the variable of the oversized factor that occurs in the most
    // factors; ties go to the lowest variable.
    std::size_t best_count = 0;
    for (VarId v : supports[smallest]) {
      std::size_t c = 0;
      for (const auto& s : supports) c += universe_contains(s, v) ? 1 : 0;
      if (!plan.split_var || c > best_count) {
        plan.split_var = v;
        best_count = c;
      }
    }
  }

  for (std::size_t i = 0; i < count; ++i) {
    (admitted[i] ? plan.disjoint_factors : plan.residual).push_back(i);
  }
  return plan;
}

ImplicantSet implicants(const BoolSystem& sys, const EngineConfig& cfg) {
  check_config(cfg);
  auto terms = run_with_workers(cfg, [&](bool parallel) { return solve(sys.factors, cfg, parallel); });
  return ImplicantSet{std::move(terms), sys.universe};
}

ImplicantSet compose_product(const ImplicantSet& seed, const BoolSystem& g, const EngineConfig& cfg) {
  check_config(cfg);
  auto terms = run_with_workers(cfg, [&](bool parallel) {
    return extend_seeds(seed.terms, g.factors, cfg, parallel);
  });
  return ImplicantSet{std::move(terms), universe_union(seed.universe, g.universe)};
}

}  // namespace boolinv
