#include "rcsp/generators.hpp"

#include "rcsp/tightness.hpp"

#include <algorithm>
#include <stdexcept>

namespace rcsp {

GeneratedInstance random_instance(std::uint64_t seed, const RandomInstanceOptions& options) {
  Rng rng(seed);
  const std::size_t n = rng.uniform(options.min_states, options.max_states);
  const std::size_t density = rng.uniform(options.min_density_pct, options.max_density_pct);
  const std::size_t m = (n * density + 50) / 100;
  const std::size_t k = options.cost_dims[rng.uniform(0, options.cost_dims.size() - 1)];
  const unsigned delta =
      options.delta_percents[rng.uniform(0, options.delta_percents.size() - 1)];

  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t e = 0; e < m; ++e) {
    const auto u = static_cast<StateId>(rng.uniform(0, n - 1));
    auto v = static_cast<StateId>(rng.uniform(0, n - 2));
    if (v >= u) ++v;
    CostVector cost;
    bool positive_resource = false;
    for (std::size_t i = 0; i < k; ++i) {
      cost.push_back(rng.uniform(0, options.max_cost));
      if (i > 0 && cost[i] > 0) positive_resource = true;
    }
    if (!positive_resource) cost[rng.uniform(1, k - 1)] = rng.uniform(1, options.max_cost);
    edges.push_back(Edge{u, v, std::move(cost)});
  }
  auto graph = std::make_shared<const MultiCostGraph>(n, k, std::move(edges));

  const auto start = static_cast<StateId>(rng.uniform(0, n - 1));
  // Goal is drawn among the states reachable from start, or uniformly when
  // start reaches nothing.
  std::vector<StateId> reachable;
  std::vector<std::uint8_t> seen(n, 0);
  std::vector<StateId> stack = {start};
  seen[start] = 1;
  while (!stack.empty()) {
    const StateId u = stack.back();
    stack.pop_back();
    for (const Arc& arc : graph->successors(u, Direction::kForward)) {
      if (seen[arc.head]) continue;
      seen[arc.head] = 1;
      reachable.push_back(arc.head);
      stack.push_back(arc.head);
    }
  }
  std::sort(reachable.begin(), reachable.end());
  const auto goal = reachable.empty() ? static_cast<StateId>(rng.uniform(0, n - 1))
                                      : reachable[rng.uniform(0, reachable.size() - 1)];
  std::vector<Cost> limits;
  if (auto measured = measure_tightness(*graph, start, goal, Tightness::from_percent(delta))) {
    limits = compute_limits(*measured);
  } else {
    for (std::size_t i = 1; i < k; ++i) limits.push_back(rng.uniform(0, options.max_cost * n));
  }
  return GeneratedInstance{ProblemInstance(std::move(graph), start, goal, std::move(limits)),
                           seed, delta};
}

std::shared_ptr<const MultiCostGraph> grid_graph(std::size_t rows, std::size_t cols,
                                                 std::size_t cost_dims, Cost min_cost,
                                                 Cost max_cost, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> edges;
  edges.reserve(4 * rows * cols);
  const auto id = [cols](std::size_t r, std::size_t c) { return static_cast<StateId>(r * cols + c); };
  const auto add = [&](StateId u, StateId v) {
    CostVector cost;
    for (std::size_t i = 0; i < cost_dims; ++i) cost.push_back(rng.uniform(min_cost, max_cost));
    edges.push_back(Edge{u, v, std::move(cost)});
  };
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) {
        add(id(r, c), id(r, c + 1));
        add(id(r, c + 1), id(r, c));
      }
      if (r + 1 < rows) {
        add(id(r, c), id(r + 1, c));
        add(id(r + 1, c), id(r, c));
      }
    }
  }
  return std::make_shared<const MultiCostGraph>(rows * cols, cost_dims, std::move(edges));
}

std::vector<std::pair<StateId, StateId>> random_pairs(std::size_t state_count, std::size_t count,
                                                      std::uint64_t seed) {
  if (state_count == 0) throw std::invalid_argument("random_pairs needs at least one state");
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<std::pair<StateId, StateId>> pairs;
  pairs.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto start = static_cast<StateId>(rng.uniform(0, state_count - 1));
    const auto goal = static_cast<StateId>(rng.uniform(0, state_count - 1));
    pairs.emplace_back(start, goal);
  }
  return pairs;
}

}  // namespace rcsp
