#include "rcsp/shortest_path.hpp"

#include <functional>
#include <queue>
#include <utility>

namespace rcsp {

ShortestPathTree shortest_path_tree(const MultiCostGraph& graph, StateId root,
                                    std::size_t cost_index, Direction traversal,
                                    std::span<const std::uint8_t> alive) {
  const std::size_t n = graph.state_count();
  ShortestPathTree tree{std::vector<Cost>(n, kInfiniteCost), std::vector<EdgeId>(n, kNoEdge)};
  const auto is_alive = [&](StateId u) { return alive.empty() || alive[u] != 0; };
  if (!is_alive(root)) return tree;

  using Entry = std::pair<Cost, StateId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  std::vector<std::uint8_t> settled(n, 0);
  std::vector<StateId> parent_state(n, kNoState);

  tree.distance[root] = 0;
  heap.emplace(0, root);
  while (!heap.empty()) {
    const auto [dist, u] = heap.top();
    heap.pop();
    if (settled[u] || dist != tree.distance[u]) continue;
    settled[u] = 1;

    for (const Arc& arc : graph.successors(u, traversal)) {
      const StateId v = arc.head;
      if (settled[v] || !is_alive(v)) continue;
      const Cost candidate = saturating_add(dist, graph.edge(arc.edge).cost[cost_index]);
      const bool better = candidate < tree.distance[v];
      const bool tie_wins = candidate == tree.distance[v] &&
                            (u < parent_state[v] ||
                             (u == parent_state[v] && arc.edge < tree.parent_edge[v]));
      if (better || tie_wins) {
        tree.distance[v] = candidate;
        tree.parent_edge[v] = arc.edge;
        parent_state[v] = u;
        if (better) heap.emplace(candidate, v);
      }
    }
  }
  return tree;
}

}  // namespace rcsp
