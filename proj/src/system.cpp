#include "boolinv/system.hpp"

#include <algorithm>
#include <stdexcept>

namespace boolinv {

BoolSystem::BoolSystem(std::vector<Anf> fs, Universe u) : universe(make_universe(std::move(u))) {
  factors.reserve(fs.size());
  for (auto& f : fs) {
    if (!universe_includes(universe, f.support())) {
      throw std::invalid_argument("system factor mentions a variable outside the universe");
    }
    factors.push_back(f.with_universe(universe));
  }
}

Universe BoolSystem::support() const {
  Universe out;
  for (const auto& f : factors) out = universe_union(out, f.support());
  return out;
}

bool is_implicant(const Term& t, const BoolSystem& sys) {
  return std::all_of(sys.factors.begin(), sys.factors.end(),
                     [&](const Anf& h) { return ratio(h, t).is_one(); });
}

bool pairwise_orthogonal(const std::vector<Term>& terms) {
  if (terms.size() < 2) return true;
  // Minterms over one common variable set are orthogonal iff distinct.
  const auto vars = terms.front().variables();
  bool same_vars = std::all_of(terms.begin(), terms.end(),
                               [&](const Term& t) { return t.variables() == vars; });
  if (same_vars) {
    std::vector<Term> sorted = terms;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  }
  for (std::size_t i = 0; i < terms.size(); ++i) {
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      if (!orthogonal(terms[i], terms[j])) return false;
    }
  }
  return true;
}

bool og_sum_is_tautology(const ImplicantSet& s) {
  if (!pairwise_orthogonal(s.terms)) {
    throw std::invalid_argument("og_sum_is_tautology: terms are not pairwise orthogonal");
  }
  const std::size_t width = s.universe.size();
  // by_size[k] = number of terms with k literals; each covers 2^(width-k) points.
  std::vector<std::uint64_t> by_size(width + 1, 0);
  for (const auto& t : s.terms) {
    for (const auto& l : t.literals()) {
      if (!universe_contains(s.universe, l.var)) {
        throw std::invalid_argument("og_sum_is_tautology: term outside the universe");
      }
    }
    ++by_size[t.size()];
  }
  // Exact test of sum_k by_size[k] * 2^(width-k) == 2^width via binary carries.
  std::uint64_t carry = 0;
  for (std::size_t k = width; k >= 1; --k) {
    std::uint64_t total = by_size[k] + carry;
    if (total % 2 != 0) return false;
    carry = total / 2;
  }
  return by_size[0] + carry == 1;
}

}  // namespace boolinv
