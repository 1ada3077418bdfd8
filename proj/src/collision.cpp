#include "boolinv/collision.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace boolinv {

CollisionSystem build_collision_system(const BoolMap& F) {
  const auto n = static_cast<std::uint32_t>(F.n_in());
  Universe universe = universe_range(0, 2 * n);
  std::vector<VarId> to_tilde(n);
  for (std::uint32_t i = 0; i < n; ++i) to_tilde[i] = VarId{n + i};

  std::vector<Anf> factors;
  factors.reserve(F.m_out());
  for (const auto& f : F.coords()) {
    Anf f_tilde = f.renamed(to_tilde, universe);
    factors.push_back((f.with_universe(universe) ^ f_tilde) ^ true);
  }
  return CollisionSystem{BoolSystem(std::move(factors), std::move(universe)), F.n_in()};
}

VarTable collision_table(const BoolMap& F) {
  auto names = F.input_names();
  for (const auto& name : F.input_names()) names.push_back(name + "~");
  return VarTable(std::move(names));
}

DiagonalSet diagonal_set(std::size_t n, std::size_t cap) {
  if (n < 1) throw std::invalid_argument("diagonal_set needs n >= 1");
  if (n > cap) {
    throw CapExceededError("diagonal set of n = " + std::to_string(n) + " exceeds the cap of " +
                           std::to_string(cap) + " variables");
  }
  DiagonalSet out;
  const std::uint64_t points = std::uint64_t{1} << n;
  out.pairs.reserve(points);
  for (std::uint64_t a = 0; a < points; ++a) {
    std::vector<Literal> lits;
    lits.reserve(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      const bool bit = ((a >> (n - 1 - i)) & 1U) != 0;
      lits.push_back(Literal{VarId{static_cast<std::uint32_t>(i)}, bit});
      lits.push_back(Literal{VarId{static_cast<std::uint32_t>(n + i)}, bit});
    }
    out.pairs.push_back(Term::from_literals(std::move(lits)));
  }
  return out;
}

std::vector<Term> expand_to_minterms(const ImplicantSet& set, std::uint64_t max_terms) {
  std::uint64_t total = 0;
  for (const auto& t : set.terms) {
    const std::size_t free_vars = set.universe.size() - t.size();
    if (free_vars >= 63 || (total += std::uint64_t{1} << free_vars) > max_terms) {
      throw CapExceededError("minterm expansion exceeds " + std::to_string(max_terms) + " terms");
    }
  }
  std::vector<Term> out;
  out.reserve(total);
  for (const auto& t : set.terms) {
    Universe free;
    for (VarId v : set.universe) {
      if (!t.fixes(v)) free.push_back(v);
    }
    const std::uint64_t count = std::uint64_t{1} << free.size();
    for (std::uint64_t code = 0; code < count; ++code) {
      out.push_back(*term_conjoin(t, Term::minterm(free, code)));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

DiagonalVerdict is_one_to_one_diagonal(const BoolMap& F, const EngineConfig& cfg,
                                       std::uint64_t expansion_cap) {
  const std::size_t n = F.n_in();
  const auto sys = build_collision_system(F);
  const auto set = implicants(sys.base, cfg);

  DiagonalVerdict out;
  out.verdict.implicant_count = set.terms.size();
  out.verdict.one_to_one = true;
  for (const auto& t : set.terms) {
    for (std::uint32_t i = 0; i < n; ++i) {
      const auto a = t.value_of(VarId{i});
      const auto b = t.value_of(VarId{static_cast<std::uint32_t>(n) + i});
      if (a && b && *a == *b) continue;

      // t's cube leaves the diagonal at coordinate i: pick a point of it
      // with x_i != x~_i, other free variables at 0.
      std::vector<bool> x(n, false), xt(n, false);
      for (const auto& l : t.literals()) {
        if (l.var.index < n) {
          x[l.var.index] = l.positive;
        } else {
          xt[l.var.index - n] = l.positive;
        }
      }
      if (!a && b) {
        x[i] = !*b;
      } else if (a && !b) {
        xt[i] = !*a;
      } else if (!a && !b) {
        x[i] = false;
        xt[i] = true;
      }
      const Universe in = F.inputs();
      out.verdict.one_to_one = false;
      out.verdict.witness = Collision{Assignment(in, std::move(x)), Assignment(in, std::move(xt))};
      break;
    }
    if (!out.verdict.one_to_one) break;
  }

  if (n >= 1 && n <= kDiagonalCap) {
    try {
      const auto expanded = expand_to_minterms(set, expansion_cap);
      out.equals_diagonal_set = expanded == diagonal_set(n).pairs;
    } catch (const CapExceededError&) {
      out.equals_diagonal_set.reset();
    }
  }
  return out;
}

}  // namespace boolinv
