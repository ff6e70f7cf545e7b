#pragma once

#include "rcsp/graph.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace rcsp {

/// Single-criterion shortest-path tree. Unreached states have distance
/// kInfiniteCost and parent_edge kNoEdge.
struct ShortestPathTree {
  std::vector<Cost> distance;
  std::vector<EdgeId> parent_edge;
};

/// Dijkstra on one cost attribute, following edges of `traversal` starting at
/// `root`. States whose `alive` flag is zero are never entered (an empty span
/// means every state is alive). Settling order is (distance, state id); among
/// equal-distance labels the parent with the smaller state id wins, then the
/// smaller edge id, so the tree is deterministic.
ShortestPathTree shortest_path_tree(const MultiCostGraph& graph, StateId root,
                                    std::size_t cost_index, Direction traversal,
                                    std::span<const std::uint8_t> alive = {});

}  // namespace rcsp
