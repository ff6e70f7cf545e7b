#pragma once

#include "rcsp/graph.hpp"

#include <memory>
#include <vector>

namespace rcsp {

/// A point-to-point RCSP query: minimise cost[0] from start to goal subject to
/// cost[i] <= limits[i-1] for every resource i.
class ProblemInstance {
 public:
  /// Throws std::invalid_argument on a null graph, out-of-range endpoints or
  /// limits.size() != k - 1.
  ProblemInstance(std::shared_ptr<const MultiCostGraph> graph, StateId start, StateId goal,
                  std::vector<Cost> limits);

  const MultiCostGraph& graph() const noexcept { return *graph_; }
  const std::shared_ptr<const MultiCostGraph>& shared_graph() const noexcept { return graph_; }
  StateId start() const noexcept { return start_; }
  StateId goal() const noexcept { return goal_; }
  std::size_t cost_dims() const noexcept { return graph_->cost_dims(); }
  const std::vector<Cost>& limits() const noexcept { return limits_; }

  /// (inf, R1, ..., R(k-1)).
  const CostVector& upper_bound_template() const noexcept { return upper_bound_; }

 private:
  std::shared_ptr<const MultiCostGraph> graph_;
  StateId start_;
  StateId goal_;
  std::vector<Cost> limits_;
  CostVector upper_bound_;
};

}  // namespace rcsp
