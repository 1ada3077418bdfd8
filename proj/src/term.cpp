#include "boolinv/term.hpp"

#include <algorithm>
#include <stdexcept>

namespace boolinv {

Term Term::from_literals(std::vector<Literal> literals) {
  std::sort(literals.begin(), literals.end());
  literals.erase(std::unique(literals.begin(), literals.end()), literals.end());
  for (std::size_t i = 1; i < literals.size(); ++i) {
    if (literals[i].var == literals[i - 1].var) {
      throw std::invalid_argument("term contains both polarities of variable #" +
                                  std::to_string(literals[i].var.index));
    }
  }
  return Term(std::move(literals));
}

Term Term::minterm(std::span<const VarId> vars, std::uint64_t code) {
  std::vector<Literal> lits;
  lits.reserve(vars.size());
  const std::size_t k = vars.size();
  for (std::size_t j = 0; j < k; ++j) {
    lits.push_back(Literal{vars[j], ((code >> (k - 1 - j)) & 1U) != 0});
  }
  return from_literals(std::move(lits));
}

std::optional<bool> Term::value_of(VarId v) const {
  auto it = std::lower_bound(literals_.begin(), literals_.end(), Literal{v, false});
  if (it == literals_.end() || it->var != v) return std::nullopt;
  return it->positive;
}

Universe Term::variables() const {
  Universe u;
  u.reserve(literals_.size());
  for (const auto& l : literals_) u.push_back(l.var);
  return u;
}

bool Term::satisfied_by(const Assignment& a) const {
  return std::all_of(literals_.begin(), literals_.end(),
                     [&](const Literal& l) { return a.at(l.var) == l.positive; });
}

std::optional<Term> term_conjoin(const Term& a, const Term& b) {
  auto la = a.literals();
  auto lb = b.literals();
  std::vector<Literal> out;
  out.reserve(la.size() + lb.size());
  std::size_t i = 0, j = 0;
  while (i < la.size() && j < lb.size()) {
    if (la[i].var < lb[j].var) {
      out.push_back(la[i++]);
    } else if (lb[j].var < la[i].var) {
      out.push_back(lb[j++]);
    } else {
      if (la[i].positive != lb[j].positive) return std::nullopt;
      out.push_back(la[i]);
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), la.begin() + static_cast<std::ptrdiff_t>(i), la.end());
  out.insert(out.end(), lb.begin() + static_cast<std::ptrdiff_t>(j), lb.end());
  return Term::from_literals(std::move(out));
}

bool orthogonal(const Term& a, const Term& b) {
  auto la = a.literals();
  auto lb = b.literals();
  std::size_t i = 0, j = 0;
  while (i < la.size() && j < lb.size()) {
    if (la[i].var < lb[j].var) {
      ++i;
    } else if (lb[j].var < la[i].var) {
      ++j;
    } else {
      if (la[i].positive != lb[j].positive) return true;
      ++i;
      ++j;
    }
  }
  return false;
}

std::uint64_t satisfying_count(const Term& t, const Universe& universe) {
  for (const auto& l : t.literals()) {
    if (!universe_contains(universe, l.var)) {
      throw std::invalid_argument("term literal #" + std::to_string(l.var.index) +
                                  " lies outside the universe");
    }
  }
  const std::size_t free_vars = universe.size() - t.size();
  if (free_vars >= 64) throw std::overflow_error("satisfying count exceeds 2^63");
  return std::uint64_t{1} << free_vars;
}

std::string to_string(const Term& t, const VarTable& names) {
  if (t.empty()) return "1";
  std::string out;
  for (const auto& l : t.literals()) {
    if (!out.empty()) out += ' ';
    out += names.name(l.var);
    if (!l.positive) out += '\'';
  }
  return out;
}

Assignment::Assignment(Universe universe, std::vector<bool> values)
    : universe_(std::move(universe)), values_(std::move(values)) {
  if (universe_.size() != values_.size()) {
    throw std::invalid_argument("assignment needs one value per universe variable");
  }
  if (!std::is_sorted(universe_.begin(), universe_.end()) ||
      std::adjacent_find(universe_.begin(), universe_.end()) != universe_.end()) {
    throw std::invalid_argument("assignment universe must be sorted and duplicate-free");
  }
}

Assignment Assignment::from_code(Universe universe, std::uint64_t code) {
  const std::size_t k = universe.size();
  if (k > 64) throw std::invalid_argument("assignment code limited to 64 variables");
  std::vector<bool> values(k);
  for (std::size_t j = 0; j < k; ++j) values[j] = ((code >> (k - 1 - j)) & 1U) != 0;
  return Assignment(std::move(universe), std::move(values));
}

std::optional<bool> Assignment::get(VarId v) const {
  auto it = std::lower_bound(universe_.begin(), universe_.end(), v);
  if (it == universe_.end() || *it != v) return std::nullopt;
  return values_[static_cast<std::size_t>(it - universe_.begin())];
}

bool Assignment::at(VarId v) const {
  auto value = get(v);
  if (!value) throw MissingVariableError(v);
  return *value;
}

std::uint64_t Assignment::code() const {
  if (values_.size() > 64) throw std::overflow_error("assignment wider than 64 bits");
  std::uint64_t code = 0;
  for (bool b : values_) code = (code << 1) | (b ? 1U : 0U);
  return code;
}

std::string to_bitstring(const Assignment& a) {
  std::string out;
  out.reserve(a.values().size());
  for (bool b : a.values()) out += b ? '1' : '0';
  return out;
}

std::string to_bitstring(std::uint64_t code, std::size_t width) {
  std::string out(width, '0');
  for (std::size_t j = 0; j < width; ++j) {
    if ((code >> (width - 1 - j)) & 1U) out[j] = '1';
  }
  return out;
}

}  // namespace boolinv
