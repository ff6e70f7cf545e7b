#include "rcsp/graph.hpp"

#include <stdexcept>
#include <string>

namespace rcsp {

MultiCostGraph::MultiCostGraph(std::size_t state_count, std::size_t cost_dims,
                               std::vector<Edge> edges)
    : state_count_(state_count), cost_dims_(cost_dims), edges_(std::move(edges)) {
  if (cost_dims_ < 2) throw std::invalid_argument("graph needs at least two cost attributes");
  if (edges_.size() >= kNoEdge) throw std::invalid_argument("too many edges");
  if (state_count_ >= kNoState) throw std::invalid_argument("too many states");

  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const Edge& edge = edges_[e];
    if (edge.from >= state_count_ || edge.to >= state_count_) {
      throw std::invalid_argument("edge " + std::to_string(e) + " endpoint out of range");
    }
    if (edge.cost.size() != cost_dims_) {
      throw std::invalid_argument("edge " + std::to_string(e) + " has " +
                                  std::to_string(edge.cost.size()) + " costs, expected " +
                                  std::to_string(cost_dims_));
    }
  }

  // Counting sort keeps edges of one tail in input order.
  for (Direction d : kDirections) {
    auto& offsets = offsets_[index_of(d)];
    auto& arcs = arcs_[index_of(d)];
    offsets.assign(state_count_ + 1, 0);
    for (const Edge& edge : edges_) {
      const StateId tail = d == Direction::kForward ? edge.from : edge.to;
      ++offsets[tail + 1];
    }
    for (std::size_t u = 0; u < state_count_; ++u) offsets[u + 1] += offsets[u];

    arcs.resize(edges_.size());
    std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      const Edge& edge = edges_[e];
      const bool fwd = d == Direction::kForward;
      const StateId tail = fwd ? edge.from : edge.to;
      const StateId head = fwd ? edge.to : edge.from;
      arcs[cursor[tail]++] = Arc{head, static_cast<EdgeId>(e)};
    }
  }
}

}  // namespace rcsp
