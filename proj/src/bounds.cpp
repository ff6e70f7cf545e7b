#include "rcsp/bounds.hpp"

#include "rcsp/shortest_path.hpp"

#include <future>

namespace rcsp {

std::vector<Cost> one_to_all_bound(const MultiCostGraph& graph, std::span<const std::uint8_t> alive,
                                   StateId root, std::size_t cost_index, Direction bounded) {
  return shortest_path_tree(graph, root, cost_index, opposite(bounded), alive).distance;
}

Heuristics initialize(const ProblemInstance& problem, const InitializeOptions& options) {
  const MultiCostGraph& graph = problem.graph();
  const std::size_t n = graph.state_count();
  const std::size_t k = graph.cost_dims();
  const CostVector& bound = problem.upper_bound_template();

  Heuristics h;
  h.tables = {HeuristicTable(n, k), HeuristicTable(n, k)};
  h.alive.assign(n, 1);

  auto& fwd = h.tables[index_of(Direction::kForward)];
  auto& bwd = h.tables[index_of(Direction::kBackward)];

  for (std::size_t round = k; round-- > 0;) {
    std::vector<Cost> to_goal;
    std::vector<Cost> from_start;
    if (options.concurrent) {
      auto pending = std::async(std::launch::async, [&] {
        return one_to_all_bound(graph, h.alive, problem.start(), round, Direction::kBackward);
      });
      to_goal = one_to_all_bound(graph, h.alive, problem.goal(), round, Direction::kForward);
      from_start = pending.get();
    } else {
      to_goal = one_to_all_bound(graph, h.alive, problem.goal(), round, Direction::kForward);
      from_start = one_to_all_bound(graph, h.alive, problem.start(), round, Direction::kBackward);
    }

    for (StateId u = 0; u < n; ++u) {
      fwd[u][round] = to_goal[u];
      bwd[u][round] = from_start[u];
    }

    if (round == 0 || !options.reduce_network) continue;
    for (StateId u = 0; u < n; ++u) {
      if (h.alive[u] && saturating_add(to_goal[u], from_start[u]) > bound[round]) {
        h.alive[u] = 0;
        ++h.killed;
      }
    }
    if (!h.alive[problem.start()] || !h.alive[problem.goal()]) {
      h.feasible = false;
      break;
    }
  }

  for (StateId u = 0; u < n; ++u) {
    if (!h.alive[u]) {
      fwd[u] = CostVector::filled(k, kInfiniteCost);
      bwd[u] = CostVector::filled(k, kInfiniteCost);
    }
  }
  return h;
}

}  // namespace rcsp
