#pragma once

#include "rcsp/problem.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace rcsp {

/// Per-state lower bounds on the cost of reaching the target of one search
/// direction. Rows of unreachable or removed states are all-infinite.
class HeuristicTable {
 public:
  HeuristicTable() = default;
  HeuristicTable(std::size_t state_count, std::size_t cost_dims)
      : rows_(state_count, CostVector::filled(cost_dims, kInfiniteCost)) {}

  const CostVector& operator[](StateId u) const { return rows_[u]; }
  CostVector& operator[](StateId u) { return rows_[u]; }
  std::size_t size() const noexcept { return rows_.size(); }

  friend bool operator==(const HeuristicTable&, const HeuristicTable&) = default;

 private:
  std::vector<CostVector> rows_;
};

struct InitializeOptions {
  /// Kill states whose two-sided resource bound exceeds the budget.
  bool reduce_network = true;
  /// Run the forward and backward searches of one round on two threads.
  bool concurrent = false;
};

struct Heuristics {
  std::array<HeuristicTable, 2> tables;  // indexed by index_of(Direction)
  std::vector<std::uint8_t> alive;
  std::size_t killed = 0;
  /// False when start or goal was removed by the reduction.
  bool feasible = true;

  const HeuristicTable& of(Direction d) const { return tables[index_of(d)]; }
};

/// Exact minimum of cost attribute `cost_index` between `root` and every state,
/// arranged to serve as the heuristic of direction `bounded`: the search runs on
/// the graph of the opposite direction, so for bounded = forward, root is the goal
/// and the values are costs of reaching root.
std::vector<Cost> one_to_all_bound(const MultiCostGraph& graph, std::span<const std::uint8_t> alive,
                                   StateId root, std::size_t cost_index, Direction bounded);

/// k rounds of one-to-all searches per direction, last attribute first. After
/// each resource round, states with h^f_i(u) + h^b_i(u) > R_i are removed and the
/// next round runs on the reduced graph. The primary round never reduces.
Heuristics initialize(const ProblemInstance& problem, const InitializeOptions& options = {});

}  // namespace rcsp
