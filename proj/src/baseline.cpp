#include "rcsp/baseline.hpp"

#include "search_detail.hpp"

#include <cassert>

namespace rcsp {

BaselineResult solve_rcbda(const ProblemInstance& problem, const SearchConfig& config) {
  const auto t0 = std::chrono::steady_clock::now();
  InitializeOptions options;
  options.reduce_network = config.reduce_network.value_or(false);
  options.concurrent = config.concurrent_initialization;
  const Heuristics heuristics = initialize(problem, options);
  const double init_seconds = detail::seconds_since(t0);

  BaselineResult result = solve_rcbda(problem, heuristics, config);
  result.stats.init_seconds = init_seconds;
  return result;
}

BaselineResult solve_rcbda(const ProblemInstance& problem, const Heuristics& heuristics,
                           const SearchConfig& config) {
  const auto t0 = std::chrono::steady_clock::now();
  const MultiCostGraph& graph = problem.graph();
  const std::size_t kappa = detail::resolve_critical_index(problem, config);
  const Cost critical_budget = problem.upper_bound_template()[kappa];

  BaselineResult result;
  result.stats.killed_states = heuristics.killed;
  if (!heuristics.feasible) {
    result.stats.search_seconds = detail::seconds_since(t0);
    return result;
  }

  CostVector bound = problem.upper_bound_template();  // bound[0] is the best known cost1
  const auto& alive = heuristics.alive;
  const detail::Deadline deadline(config.timeout);

  struct Side {
    explicit Side(TieBreak t, std::size_t n) : open(t), explored(n) {}
    detail::OpenQueue open;
    LabelPool pool;
    ExploredLists explored;
    Cost last_f1 = 0;
  };
  std::array<Side, 2> sides = {Side(config.tie_break, graph.state_count()),
                               Side(config.tie_break, graph.state_count())};

  for (Direction d : kDirections) {
    const StateId initial = d == Direction::kForward ? problem.start() : problem.goal();
    Label label;
    label.state = initial;
    label.direction = d;
    label.g = CostVector::zeros(problem.cost_dims());
    label.f = heuristics.of(d)[initial];
    Side& side = sides[index_of(d)];
    const LabelHandle h = side.pool.push(label);
    side.open.push({label.f.primary(), 0, initial, h}, side.pool);
  }

  const Direction preferred = config.direction_priority == DirectionPriority::kForwardFirst
                                  ? Direction::kForward
                                  : Direction::kBackward;
  bool timed_out = false;
  std::uint64_t extractions = 0;

  while (true) {
    const Side& pf = sides[index_of(preferred)];
    const Side& po = sides[index_of(opposite(preferred))];
    if (pf.open.empty() && po.open.empty()) break;
    Direction d = preferred;
    if (pf.open.empty() || (!po.open.empty() && po.open.top().f1 < pf.open.top().f1)) {
      d = opposite(preferred);
    }

    if (++extractions % kDeadlineCheckInterval == 0 && deadline.expired()) {
      timed_out = true;
      break;
    }

    Side& side = sides[index_of(d)];
    Side& other = sides[index_of(opposite(d))];
    DirectionStats& stats = result.stats.direction[index_of(d)];
    const detail::QueueEntry entry = side.open.pop(side.pool);
    ++stats.extractions;
    if (entry.f1 < side.last_f1) {
      ++stats.f1_order_violations;
      assert(false && "extraction out of f1 order");
    }
    side.last_f1 = entry.f1;

    if (entry.f1 >= bound[0]) break;

    // Copy: pushing children may reallocate the pool.
    const Label x = side.pool[entry.label];

    if (detail::within_half(x.g[kappa], critical_budget)) {
      ++stats.expansions;
      const HeuristicTable& h = heuristics.of(d);
      for (const Arc& arc : graph.successors(x.state, d)) {
        const StateId t = arc.head;
        if (!alive[t]) continue;
        ++stats.generated;
        CostVector g = x.g + graph.edge(arc.edge).cost;
        CostVector f = g + h[t];
        if (!dominates(f, bound)) {
          ++stats.bound_prunes;
          continue;
        }
        if (is_dominated(g, side.explored.at(t), &stats.dominance_checks)) {
          ++stats.dominance_prunes;
          continue;
        }
        const Cost f1 = f.primary();
        const Cost g1 = g.primary();
        const LabelHandle child = side.pool.push(
            Label{t, d, entry.label, arc.edge, 0, std::move(g), std::move(f)});
        side.open.push({f1, g1, t, child}, side.pool);
      }
    } else {
      ++stats.perimeter_blocked;
    }

    for (const FrontierEntry& y : other.explored.at(x.state)) {
      ++stats.matches;
      CostVector joined = x.g + y.g;
      if (dominates(joined, bound)) bound[0] = joined.primary();
    }

    side.explored.append(x.state, FrontierEntry{entry.label, x.g});
  }

  result.cost1 = bound[0];
  if (timed_out) {
    result.status = SolveStatus::kTimeout;
  } else {
    result.status = bound[0] == kInfiniteCost ? SolveStatus::kInfeasible : SolveStatus::kOptimal;
  }
  result.stats.search_seconds = detail::seconds_since(t0);
  return result;
}

}  // namespace rcsp
