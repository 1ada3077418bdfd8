#include "boolinv/anf.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace boolinv {
namespace {

bool monomial_less(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

// Sort, then cancel equal monomials pairwise (x + x = 0).
std::vector<Monomial> canonicalize(std::vector<Monomial> monomials) {
  for (auto& m : monomials) {
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
  }
  std::sort(monomials.begin(), monomials.end(), monomial_less);
  std::vector<Monomial> out;
  out.reserve(monomials.size());
  for (std::size_t i = 0; i < monomials.size();) {
    std::size_t j = i;
    while (j < monomials.size() && monomials[j] == monomials[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(std::move(monomials[i]));
    i = j;
  }
  return out;
}

Universe support_of(const std::vector<Monomial>& monomials) {
  std::vector<VarId> vars;
  for (const auto& m : monomials) vars.insert(vars.end(), m.begin(), m.end());
  return make_universe(std::move(vars));
}

}  // namespace

Anf Anf::from_monomials(std::vector<Monomial> monomials, Universe universe) {
  auto canonical = canonicalize(std::move(monomials));
  Universe support = support_of(canonical);
  if (universe.empty()) {
    universe = std::move(support);
  } else {
    universe = make_universe(std::move(universe));
    if (!universe_includes(universe, support)) {
      throw std::invalid_argument("ANF mentions a variable outside its universe");
    }
  }
  return Anf(std::move(canonical), std::move(universe));
}

Anf Anf::constant(bool value, Universe universe) {
  std::vector<Monomial> ms;
  if (value) ms.emplace_back();
  return Anf(std::move(ms), make_universe(std::move(universe)));
}

Anf Anf::variable(VarId v, Universe universe) {
  universe.push_back(v);
  return Anf({Monomial{v}}, make_universe(std::move(universe)));
}

Anf Anf::from_term(const Term& t, Universe universe) {
  auto vars = t.variables();
  universe = universe_union(make_universe(std::move(universe)), vars);
  Anf out = constant(true, universe);
  for (const auto& l : t.literals()) {
    out = out * (variable(l.var, universe) ^ !l.positive);
  }
  return out;
}

Universe Anf::support() const { return support_of(monomials_); }

std::size_t Anf::degree() const {
  return monomials_.empty() ? 0 : monomials_.back().size();
}

std::optional<bool> Anf::constant_value() const {
  if (is_zero()) return false;
  if (is_one()) return true;
  return std::nullopt;
}

Anf Anf::with_universe(Universe universe) const {
  universe = universe_union(make_universe(std::move(universe)), universe_);
  return Anf(monomials_, std::move(universe));
}

Anf Anf::renamed(const std::vector<VarId>& mapping, Universe universe) const {
  std::vector<Monomial> ms = monomials_;
  for (auto& m : ms) {
    for (auto& v : m) {
      if (v.index >= mapping.size()) throw std::out_of_range("rename mapping misses a variable");
      v = mapping[v.index];
    }
  }
  return from_monomials(std::move(ms), std::move(universe));
}

Anf operator^(const Anf& a, const Anf& b) {
  std::vector<Monomial> ms;
  ms.reserve(a.monomials_.size() + b.monomials_.size());
  ms.insert(ms.end(), a.monomials_.begin(), a.monomials_.end());
  ms.insert(ms.end(), b.monomials_.begin(), b.monomials_.end());
  return Anf(canonicalize(std::move(ms)), universe_union(a.universe_, b.universe_));
}

Anf operator^(const Anf& a, bool c) {
  if (!c) return a;
  return a ^ Anf::constant(true, a.universe_);
}

Anf operator*(const Anf& a, const Anf& b) {
  std::vector<Monomial> ms;
  ms.reserve(a.monomials_.size() * b.monomials_.size());
  for (const auto& ma : a.monomials_) {
    for (const auto& mb : b.monomials_) {
      Monomial m;
      m.reserve(ma.size() + mb.size());
      std::set_union(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
      ms.push_back(std::move(m));
    }
  }
  return Anf(canonicalize(std::move(ms)), universe_union(a.universe_, b.universe_));
}

bool eval(const Anf& f, const Assignment& a) {
  for (VarId v : f.universe()) {
    if (!a.get(v)) throw MissingVariableError(v);
  }
  bool acc = false;
  for (const auto& m : f.monomials()) {
    bool prod = std::all_of(m.begin(), m.end(), [&](VarId v) { return a.at(v); });
    acc ^= prod;
  }
  return acc;
}

Anf ratio(const Anf& f, const Term& t) {
  std::vector<Monomial> ms;
  ms.reserve(f.monomials().size());
  for (const auto& m : f.monomials()) {
    Monomial reduced;
    reduced.reserve(m.size());
    bool vanished = false;
    for (VarId v : m) {
      auto value = t.value_of(v);
      if (!value) {
        reduced.push_back(v);
      } else if (!*value) {
        vanished = true;
        break;
      }
    }
    if (!vanished) ms.push_back(std::move(reduced));
  }
  Universe universe;
  for (VarId v : f.universe()) {
    if (!t.fixes(v)) universe.push_back(v);
  }
  auto canonical = Anf::from_monomials(std::move(ms), universe);
  // from_monomials widens an empty universe to the support; keep it exact here.
  return canonical.with_universe(universe);
}

std::string to_string(const Anf& f, const VarTable& names) {
  if (f.is_zero()) return "0";
  std::string out;
  bool has_constant = false;
  for (const auto& m : f.monomials()) {
    if (m.empty()) {
      has_constant = true;
      continue;
    }
    if (!out.empty()) out += " + ";
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i > 0) out += '*';
      out += names.name(m[i]);
    }
  }
  if (has_constant) out += out.empty() ? "1" : " + 1";
  return out;
}

}  // namespace boolinv
