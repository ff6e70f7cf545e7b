#include "rcsp/problem.hpp"

#include <stdexcept>
#include <string>

namespace rcsp {

ProblemInstance::ProblemInstance(std::shared_ptr<const MultiCostGraph> graph, StateId start,
                                 StateId goal, std::vector<Cost> limits)
    : graph_(std::move(graph)), start_(start), goal_(goal), limits_(std::move(limits)) {
  if (!graph_) throw std::invalid_argument("problem instance needs a graph");
  if (start_ >= graph_->state_count() || goal_ >= graph_->state_count()) {
    throw std::invalid_argument("start/goal out of range");
  }
  if (limits_.size() + 1 != graph_->cost_dims()) {
    throw std::invalid_argument("expected " + std::to_string(graph_->cost_dims() - 1) +
                                " resource limits, got " + std::to_string(limits_.size()));
  }
  upper_bound_.push_back(kInfiniteCost);
  for (Cost r : limits_) upper_bound_.push_back(r);
}

}  // namespace rcsp
