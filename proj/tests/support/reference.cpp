#include "reference.hpp"

#include <algorithm>
#include <deque>

namespace rcsp::testing {

std::shared_ptr<const MultiCostGraph> example7_graph() {
  std::vector<Edge> edges = {
      {0, 2, {1, 1, 2}}, {0, 1, {1, 1, 1}}, {0, 3, {3, 1, 1}}, {2, 3, {1, 1, 1}},
      {1, 3, {1, 1, 1}}, {3, 6, {1, 3, 3}}, {3, 5, {1, 1, 2}}, {3, 4, {1, 1, 1}},
      {4, 6, {2, 1, 1}}, {5, 6, {1, 2, 2}},
  };
  return std::make_shared<const MultiCostGraph>(7, 3, std::move(edges));
}

ProblemInstance example7(std::vector<Cost> limits) {
  return ProblemInstance(example7_graph(), 0, 6, std::move(limits));
}

ProblemInstance disconnected_instance() {
  std::vector<Edge> edges = {{0, 1, {1, 1, 1}}, {2, 3, {1, 1, 1}}};
  return ProblemInstance(std::make_shared<const MultiCostGraph>(4, 3, std::move(edges)), 0, 3,
                         {10, 10});
}

namespace {

RawVector add(const RawVector& a, const RawVector& b) {
  RawVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

bool within_limits(const RawVector& g, const std::vector<Cost>& limits) {
  for (std::size_t r = 0; r < limits.size(); ++r) {
    if (g[r + 1] > limits[r]) return false;
  }
  return true;
}

bool resources_at_most(const RawVector& a, const RawVector& b) {
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

}  // namespace

std::vector<ReferencePath> reference_feasible_paths(const ProblemInstance& problem) {
  const MultiCostGraph& graph = problem.graph();
  std::vector<std::vector<std::size_t>> out_edges(graph.state_count());
  for (std::size_t e = 0; e < graph.edges().size(); ++e) out_edges[graph.edges()[e].from].push_back(e);

  std::vector<ReferencePath> found;
  std::deque<ReferencePath> frontier;
  frontier.push_back({{problem.start()}, RawVector(graph.cost_dims(), 0)});
  while (!frontier.empty()) {
    ReferencePath p = std::move(frontier.front());
    frontier.pop_front();
    const StateId u = p.states.back();
    if (u == problem.goal()) {
      found.push_back(std::move(p));
      continue;
    }
    for (std::size_t e : out_edges[u]) {
      const Edge& edge = graph.edges()[e];
      if (std::find(p.states.begin(), p.states.end(), edge.to) != p.states.end()) continue;
      RawVector g = add(p.cost, raw(edge.cost));
      if (!within_limits(g, problem.limits())) continue;
      ReferencePath next{p.states, std::move(g)};
      next.states.push_back(edge.to);
      frontier.push_back(std::move(next));
    }
  }
  return found;
}

ReferenceAnswer reference_answer(const ProblemInstance& problem) {
  const auto paths = reference_feasible_paths(problem);
  ReferenceAnswer answer;
  answer.on_feasible_path.assign(problem.graph().state_count(), 0);
  for (const auto& p : paths) {
    for (StateId s : p.states) answer.on_feasible_path[s] = 1;
    answer.cost1 = std::min(answer.cost1, p.cost[0]);
  }
  answer.feasible = !paths.empty();

  std::vector<RawVector> optimal;
  for (const auto& p : paths) {
    if (p.cost[0] == answer.cost1) optimal.push_back(p.cost);
  }
  std::sort(optimal.begin(), optimal.end());
  optimal.erase(std::unique(optimal.begin(), optimal.end()), optimal.end());
  for (const auto& c : optimal) {
    bool dominated = false;
    for (const auto& o : optimal) {
      if (o != c && resources_at_most(o, c)) dominated = true;
    }
    if (!dominated) answer.maximal.push_back(c);
  }
  return answer;
}

std::vector<Cost> reference_distances(const MultiCostGraph& graph,
                                      const std::vector<std::uint8_t>& alive, StateId root,
                                      std::size_t index, bool reversed) {
  std::vector<Cost> dist(graph.state_count(), kInfiniteCost);
  if (!alive[root]) return dist;
  dist[root] = 0;
  for (std::size_t round = 0; round < graph.state_count(); ++round) {
    bool changed = false;
    for (const Edge& e : graph.edges()) {
      const StateId from = reversed ? e.to : e.from;
      const StateId to = reversed ? e.from : e.to;
      if (!alive[from] || !alive[to] || dist[from] == kInfiniteCost) continue;
      if (dist[from] + e.cost[index] < dist[to]) {
        dist[to] = dist[from] + e.cost[index];
        changed = true;
      }
    }
    if (!changed) break;
  }
  return dist;
}

RawVector raw(const CostVector& v) { return RawVector(v.begin(), v.end()); }

std::vector<RawVector> raw_sorted(const std::vector<CostVector>& vs) {
  std::vector<RawVector> out;
  for (const auto& v : vs) out.push_back(raw(v));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace rcsp::testing
