#include "boolinv/var.hpp"

#include <algorithm>
#include <iterator>

namespace boolinv {

Universe make_universe(std::vector<VarId> vars) {
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

Universe universe_range(std::uint32_t first, std::uint32_t count) {
  Universe u;
  u.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) u.push_back(VarId{first + i});
  return u;
}

Universe universe_union(const Universe& a, const Universe& b) {
  Universe out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool universe_contains(const Universe& u, VarId v) {
  return std::binary_search(u.begin(), u.end(), v);
}

bool universe_includes(const Universe& outer, const Universe& inner) {
  return std::includes(outer.begin(), outer.end(), inner.begin(), inner.end());
}

MissingVariableError::MissingVariableError(VarId var)
    : std::invalid_argument("assignment does not cover variable #" + std::to_string(var.index)),
      var_(var) {}

VarTable::VarTable(std::vector<std::string> names) {
  for (auto& n : names) add(std::move(n));
}

VarId VarTable::add(std::string name) {
  if (index_.contains(name)) throw std::invalid_argument("duplicate variable '" + name + "'");
  VarId id{static_cast<std::uint32_t>(names_.size())};
  index_.emplace(name, id);
  names_.push_back(std::move(name));
  return id;
}

std::optional<VarId> VarTable::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const std::string& VarTable::name(VarId v) const {
  if (v.index >= names_.size()) throw std::out_of_range("unknown variable #" + std::to_string(v.index));
  return names_[v.index];
}

Universe VarTable::universe() const {
  return universe_range(0, static_cast<std::uint32_t>(names_.size()));
}

}  // namespace boolinv
