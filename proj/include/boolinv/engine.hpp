#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "boolinv/system.hpp"

namespace boolinv {

struct EngineConfig {
  /// Largest support handled by minterm enumeration at a leaf.
  int base_bound = 12;
  /// Worker threads for independent branches; 1 runs the serial path.
  int parallelism = 1;
  /// Output order is canonical regardless; kept for configuration echo.
  bool deterministic = true;
};

/// Upper limit on EngineConfig::base_bound (leaf truth tables are 2^bound bits).
inline constexpr int kMaxBaseBound = 24;

/// Factors selected for independent solving at one recursion level.
struct ClusterPlan {
  /// Pairwise variable-disjoint factors, each with support <= base_bound.
  std::vector<std::size_t> disjoint_factors;
  std::vector<std::size_t> residual;
  /// Set when no factor fits the bound: the single admitted factor is too
  /// large and the engine branches on `split_var` instead.
  bool split_required = false;
  std::optional<VarId> split_var;
};

/// Minterms over support(f) on which f is 1, in ascending binary order.
/// Throws std::invalid_argument when the support exceeds `base_bound`.
ImplicantSet impl_for_simple(const Anf& f, int base_bound);

/// Greedy packing: factors in ascending support size (ties by index), each
/// admitted if it fits the bound and is disjoint from those already admitted.
ClusterPlan select_disjoint_clusters(const BoolSystem& sys, const EngineConfig& cfg);

/// Complete orthogonal implicants of `sys`, canonically sorted. An empty
/// result means the system is unsatisfiable.
ImplicantSet implicants(const BoolSystem& sys, const EngineConfig& cfg = {});

/// Implicants of f*g from a complete orthogonal set `seed` of f: each seed
/// term t is extended by the implicants of g/t. Contradictory products drop.
ImplicantSet compose_product(const ImplicantSet& seed, const BoolSystem& g,
                             const EngineConfig& cfg = {});

}  // namespace boolinv
