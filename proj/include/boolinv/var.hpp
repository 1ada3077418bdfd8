#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace boolinv {

/// Dense index of a variable in a problem's variable table.
struct VarId {
  std::uint32_t index = 0;

  constexpr auto operator<=>(const VarId&) const = default;
};

/// Sorted, duplicate-free list of variables.
using Universe = std::vector<VarId>;

Universe make_universe(std::vector<VarId> vars);
Universe universe_range(std::uint32_t first, std::uint32_t count);
Universe universe_union(const Universe& a, const Universe& b);
bool universe_contains(const Universe& u, VarId v);
bool universe_includes(const Universe& outer, const Universe& inner);

class MissingVariableError : public std::invalid_argument {
 public:
  explicit MissingVariableError(VarId var);
  VarId var() const { return var_; }

 private:
  VarId var_;
};

/// Raised whenever an exhaustive enumeration would exceed its configured cap.
class CapExceededError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Name <-> index mapping. Order of insertion is the variable order.
class VarTable {
 public:
  VarTable() = default;
  explicit VarTable(std::vector<std::string> names);

  VarId add(std::string name);
  std::optional<VarId> find(std::string_view name) const;
  const std::string& name(VarId v) const;
  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  Universe universe() const;

  bool operator==(const VarTable& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, VarId> index_;
};

}  // namespace boolinv
