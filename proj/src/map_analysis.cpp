#include "boolinv/map_analysis.hpp"

#include <algorithm>
#include <stdexcept>

namespace boolinv {
namespace {

std::uint64_t y_code(const Term& s, std::size_t n, std::size_t m) {
  std::uint64_t code = 0;
  for (const auto& l : s.literals()) {
    if (l.positive) code |= std::uint64_t{1} << (m - 1 - (l.var.index - n));
  }
  return code;
}

// Expansion of r over the inputs with every free variable set to 0, except
// `flip` which is set to 1 when given.
Assignment expand_r(const Term& r, std::size_t n, std::optional<VarId> flip = std::nullopt) {
  std::vector<bool> values(n, false);
  for (const auto& l : r.literals()) values[l.var.index] = l.positive;
  if (flip) values[flip->index] = true;
  return Assignment(universe_range(0, static_cast<std::uint32_t>(n)), std::move(values));
}

struct GraphSummary {
  std::vector<GraphImplicant> parts;
  std::vector<Term> distinct_s;
  bool has_duplicate_s = false;
};

GraphSummary summarize(const BoolMap& F, const EngineConfig& cfg) {
  GraphSummary out;
  out.parts = graph_implicants(F, cfg);
  out.distinct_s.reserve(out.parts.size());
  for (const auto& p : out.parts) out.distinct_s.push_back(p.s);
  std::sort(out.distinct_s.begin(), out.distinct_s.end());
  auto last = std::unique(out.distinct_s.begin(), out.distinct_s.end());
  out.has_duplicate_s = last != out.distinct_s.end();
  out.distinct_s.erase(last, out.distinct_s.end());
  return out;
}

std::optional<Collision> find_collision(const GraphSummary& g, std::size_t n) {
  for (const auto& p : g.parts) {
    if (p.r.size() < n) {
      for (std::uint32_t i = 0; i < n; ++i) {
        if (!p.r.fixes(VarId{i})) return Collision{expand_r(p.r, n), expand_r(p.r, n, VarId{i})};
      }
    }
  }
  std::vector<std::size_t> order(g.parts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return g.parts[a].s < g.parts[b].s; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    const auto& a = g.parts[order[i - 1]];
    const auto& b = g.parts[order[i]];
    if (a.s == b.s) return Collision{expand_r(a.r, n), expand_r(b.r, n)};
  }
  return std::nullopt;
}

Verdict decide(const BoolMap& F, const GraphSummary& g) {
  const std::size_t n = F.n_in();
  Verdict v;
  v.implicant_count = g.parts.size();
  v.y_minterm_count = g.distinct_s.size();
  // Distinct minterms numbering exactly 2^n.
  v.one_to_one = n < 64 && !g.has_duplicate_s && g.parts.size() == (std::uint64_t{1} << n);
  if (!v.one_to_one) {
    v.witness = find_collision(g, n);
    if (!v.witness) throw std::logic_error("non-injective map without a recoverable collision");
  }
  return v;
}

ImageComplement complement(const BoolMap& F, const GraphSummary& g, std::uint64_t cap) {
  const std::size_t n = F.n_in();
  const std::size_t m = F.m_out();
  ImageComplement out;
  out.width = m;
  out.y_vars = universe_range(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(m));
  out.covered = g.distinct_s;
  if (m >= 64) return out;

  const std::uint64_t total = std::uint64_t{1} << m;
  out.count = total - g.distinct_s.size();
  if (*out.count > cap) return out;

  std::vector<std::uint64_t> image;
  image.reserve(g.distinct_s.size());
  for (const auto& s : g.distinct_s) image.push_back(y_code(s, n, m));
  std::sort(image.begin(), image.end());
  out.points.reserve(*out.count);
  std::uint64_t next = 0;
  for (std::uint64_t y : image) {
    for (; next < y; ++next) out.points.push_back(next);
    next = y + 1;
  }
  for (; next < total; ++next) out.points.push_back(next);
  out.enumerated = true;
  return out;
}

std::vector<std::string> default_names(const char* prefix, std::size_t count) {
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

}  // namespace

BoolMap::BoolMap(std::size_t n_in, std::vector<Anf> coords, std::vector<std::string> input_names,
                 std::vector<std::string> output_names)
    : n_in_(n_in),
      input_names_(input_names.empty() ? default_names("x", n_in) : std::move(input_names)),
      output_names_(output_names.empty() ? default_names("y", coords.size()) : std::move(output_names)) {
  if (input_names_.size() != n_in_ || output_names_.size() != coords.size()) {
    throw std::invalid_argument("BoolMap: name lists do not match the arity");
  }
  const Universe in = inputs();
  coords_.reserve(coords.size());
  for (auto& c : coords) {
    if (!universe_includes(in, c.support())) {
      throw std::invalid_argument("BoolMap: coordinate mentions a non-input variable");
    }
    coords_.push_back(Anf::from_monomials(c.monomials(), in).with_universe(in));
  }
}

Universe BoolMap::inputs() const { return universe_range(0, static_cast<std::uint32_t>(n_in_)); }

VarTable BoolMap::input_table() const { return VarTable(input_names_); }

VarTable BoolMap::graph_table() const {
  auto names = input_names_;
  names.insert(names.end(), output_names_.begin(), output_names_.end());
  return VarTable(std::move(names));
}

BoolSystem ImageComplement::defining_system() const {
  std::vector<Anf> factors;
  factors.reserve(covered.size());
  for (const auto& s : covered) factors.push_back(Anf::from_term(s, y_vars) ^ true);
  return BoolSystem(std::move(factors), y_vars);
}

BoolSystem build_graph_system(const BoolMap& F) {
  const auto n = static_cast<std::uint32_t>(F.n_in());
  const auto m = static_cast<std::uint32_t>(F.m_out());
  Universe universe = universe_range(0, n + m);
  std::vector<Anf> factors;
  factors.reserve(m);
  for (std::uint32_t i = 0; i < m; ++i) {
    factors.push_back((F.coords()[i] ^ Anf::variable(VarId{n + i}, universe)) ^ true);
  }
  return BoolSystem(std::move(factors), std::move(universe));
}

GraphImplicant split_xy(const Term& t, const BoolMap& F) {
  const std::size_t n = F.n_in();
  const std::size_t m = F.m_out();
  std::vector<Literal> r, s;
  for (const auto& l : t.literals()) {
    if (l.var.index < n) {
      r.push_back(l);
    } else if (l.var.index < n + m) {
      s.push_back(l);
    } else {
      throw std::invalid_argument("split_xy: variable #" + std::to_string(l.var.index) +
                                  " is neither an input nor an output");
    }
  }
  return GraphImplicant{Term::from_literals(std::move(r)), Term::from_literals(std::move(s))};
}

std::vector<GraphImplicant> graph_implicants(const BoolMap& F, const EngineConfig& cfg) {
  const auto set = implicants(build_graph_system(F), cfg);
  std::vector<GraphImplicant> out;
  out.reserve(set.terms.size());
  for (const auto& t : set.terms) {
    auto part = split_xy(t, F);
    if (part.s.size() != F.m_out()) {
      throw std::logic_error("graph implicant with a non-minterm Y factor");
    }
    out.push_back(std::move(part));
  }
  return out;
}

Verdict is_invertible_square(const BoolMap& F, const EngineConfig& cfg) {
  if (F.m_out() != F.n_in()) {
    throw std::invalid_argument("is_invertible_square needs m = n; use is_one_to_one_general for m != n");
  }
  const auto g = summarize(F, cfg);
  Verdict v = decide(F, g);
  const bool tautology = og_sum_is_tautology(ImplicantSet{
      g.distinct_s,
      universe_range(static_cast<std::uint32_t>(F.n_in()), static_cast<std::uint32_t>(F.m_out()))});
  if (tautology != v.one_to_one) {
    throw std::logic_error("minterm count and Y-tautology test disagree");
  }
  return v;
}

ImageComplement goe(const BoolMap& F, const EngineConfig& cfg, std::uint64_t enumeration_cap) {
  if (F.m_out() != F.n_in()) throw std::invalid_argument("goe needs a square map; use coi for m > n");
  return complement(F, summarize(F, cfg), enumeration_cap);
}

Verdict is_one_to_one_general(const BoolMap& F, const EngineConfig& cfg) {
  const auto g = summarize(F, cfg);
  Verdict v = decide(F, g);
  // Fewer outputs than inputs can never be injective.
  if (F.m_out() < F.n_in() && v.one_to_one) throw std::logic_error("injective map with m < n");
  return v;
}

ImageComplement coi(const BoolMap& F, const EngineConfig& cfg, std::uint64_t enumeration_cap) {
  if (F.m_out() < F.n_in()) throw std::invalid_argument("coi needs m >= n");
  return complement(F, summarize(F, cfg), enumeration_cap);
}

UniqueSolution unique_solution(const BoolSystem& sys, const EngineConfig& cfg) {
  const auto set = implicants(sys, cfg);
  UniqueSolution out;
  if (set.terms.empty()) {
    out.kind = UniqueSolution::Kind::none;
  } else if (set.terms.size() == 1 && set.terms.front().size() == sys.universe.size()) {
    out.kind = UniqueSolution::Kind::unique;
    std::vector<bool> values;
    values.reserve(sys.universe.size());
    for (VarId v : sys.universe) values.push_back(*set.terms.front().value_of(v));
    out.solution = Assignment(sys.universe, std::move(values));
  } else {
    out.kind = UniqueSolution::Kind::multiple;
  }
  return out;
}

const char* to_string(UniqueSolution::Kind kind) {
  switch (kind) {
    case UniqueSolution::Kind::none: return "NONE";
    case UniqueSolution::Kind::unique: return "UNIQUE";
    case UniqueSolution::Kind::multiple: return "MULTIPLE";
  }
  return "?";
}

}  // namespace boolinv
