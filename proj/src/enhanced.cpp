#include "rcsp/enhanced.hpp"

#include "enhanced_engine.hpp"

#include <cassert>
#include <stdexcept>

namespace rcsp {
namespace detail {

EnhancedEngine::EnhancedEngine(const ProblemInstance& problem, const Heuristics& heuristics,
                               const SearchConfig& config, bool synchronized)
    : problem_(problem),
      heuristics_(heuristics),
      config_(config),
      kappa_(resolve_critical_index(problem, config)),
      critical_budget_(problem.upper_bound_template()[kappa_]),
      deadline_(config.timeout),
      sides_{Side(config.tie_break), Side(config.tie_break)},
      frontiers_{FrontierStore(problem.graph().state_count(), synchronized),
                 FrontierStore(problem.graph().state_count(), synchronized)},
      solutions_(problem.upper_bound_template(), synchronized) {
  std::uint64_t serial = 0;
  for (Direction d : kDirections) {
    const StateId initial = d == Direction::kForward ? problem.start() : problem.goal();
    Label label;
    label.state = initial;
    label.direction = d;
    label.serial = ++serial;
    label.g = CostVector::zeros(problem.cost_dims());
    label.f = heuristics.of(d)[initial];
    Side& s = side(d);
    const Cost f1 = label.f.primary();
    const LabelHandle h = s.pool.push(std::move(label));
    s.open.push({f1, 0, initial, h}, s.pool);
  }
}

void EnhancedEngine::emit(Direction d, const Label& x, TraceAction action) {
  TraceEvent event;
  event.iteration = iteration_;
  event.serial = x.serial;
  event.direction = d;
  event.state = x.state;
  event.g = x.g;
  event.f = x.f;
  event.action = action;
  event.best_cost1 = solutions_.best_cost1();
  event.solutions = solutions_.pairs().size();
  config_.trace(event);
}

EnhancedEngine::Step EnhancedEngine::step(Direction d) {
  Side& s = side(d);
  if (s.open.empty()) return Step::kExhausted;
  if (++s.since_deadline_check % kDeadlineCheckInterval == 0 && deadline_.expired()) {
    timed_out_.store(true, std::memory_order_relaxed);
  }
  if (timed_out_.load(std::memory_order_relaxed)) return Step::kTimedOut;

  DirectionStats& stats = s.stats;
  const QueueEntry entry = s.open.pop(s.pool);
  ++stats.extractions;
  if (entry.f1 < s.last_f1) {
    ++stats.f1_order_violations;
    assert(false && "extraction out of f1 order");
  }
  s.last_f1 = entry.f1;

  if (entry.f1 > solutions_.best_cost1()) return Step::kTerminated;

  const bool tracing = static_cast<bool>(config_.trace);
  if (tracing) ++iteration_;

  // Copy: pushing children may reallocate the pool.
  const Label x = s.pool[entry.label];
  FrontierStore& own = frontier(d);

  if (own.quick_check(x.state, x.g)) {
    ++stats.quick_prunes;
    if (tracing) emit(d, x, TraceAction::kPrunedQuick);
    return Step::kContinue;
  }
  if (own.is_dominated(x.state, x.g, &stats.dominance_checks)) {
    ++stats.dominance_prunes;
    if (tracing) emit(d, x, TraceAction::kPrunedDominated);
    return Step::kContinue;
  }
  own.insert_nondominated(x.state, FrontierEntry{entry.label, x.g});

  const MatchStats matched = frontier(opposite(d)).with_lists(
      x.state, [&](std::span<const FrontierEntry> main, std::span<const FrontierEntry> demoted) {
        return match(entry.label, x.g, d, main, demoted, solutions_);
      });
  stats.matches += matched.candidates;

  TraceAction action = TraceAction::kPerimeterBlocked;
  if (within_half(x.g[kappa_], critical_budget_)) {
    action = TraceAction::kExpanded;
    ++stats.expansions;
    const MultiCostGraph& graph = problem_.graph();
    const HeuristicTable& h = heuristics_.of(d);
    const CostVector bound = solutions_.upper_bound();
    for (const Arc& arc : graph.successors(x.state, d)) {
      const StateId t = arc.head;
      if (!heuristics_.alive[t]) continue;
      ++stats.generated;
      const std::uint64_t serial = tracing ? ++next_serial_ : 0;
      CostVector g = x.g + graph.edge(arc.edge).cost;
      CostVector f = g + h[t];
      if (!dominates(f, bound)) {
        ++stats.bound_prunes;
        continue;
      }
      if (own.quick_check(t, g)) {
        ++stats.quick_prunes;
        continue;
      }
      const Cost f1 = f.primary();
      const Cost g1 = g.primary();
      const LabelHandle child =
          s.pool.push(Label{t, d, entry.label, arc.edge, serial, std::move(g), std::move(f)});
      s.open.push({f1, g1, t, child}, s.pool);
    }
  } else {
    ++stats.perimeter_blocked;
  }
  if (tracing) emit(d, x, action);
  return Step::kContinue;
}

void EnhancedEngine::run_sequential() {
  const Direction preferred = config_.direction_priority == DirectionPriority::kForwardFirst
                                  ? Direction::kForward
                                  : Direction::kBackward;
  while (true) {
    const Side& pf = side(preferred);
    const Side& po = side(opposite(preferred));
    if (pf.open.empty() && po.open.empty()) return;
    Direction d = preferred;
    if (pf.open.empty() || (!po.open.empty() && po.open.top().f1 < pf.open.top().f1)) {
      d = opposite(preferred);
    }
    const Step outcome = step(d);
    if (outcome == Step::kTerminated || outcome == Step::kTimedOut) return;
  }
}

void EnhancedEngine::finish(EnhancedResult& result) {
  const Cost best = solutions_.best_cost1();
  if (timed_out_.load()) {
    result.status = SolveStatus::kTimeout;
  } else {
    result.status = best == kInfiniteCost ? SolveStatus::kInfeasible : SolveStatus::kOptimal;
  }
  result.cost1 = best;
  result.solutions = solutions_.take_pairs();
  for (Direction d : kDirections) {
    result.stats.direction[index_of(d)] = side(d).stats;
    result.labels[index_of(d)] = std::move(side(d).pool);
  }
  if (config_.validate_frontiers) {
    for (Direction d : kDirections) {
      for (auto& problem : frontier(d).validate()) {
        result.frontier_problems.push_back(std::string(to_string(d)) + ": " + problem);
      }
    }
  }
}

}  // namespace detail

EnhancedResult solve_rcebda(const ProblemInstance& problem, const SearchConfig& config) {
  const auto t0 = std::chrono::steady_clock::now();
  InitializeOptions options;
  options.reduce_network = config.reduce_network.value_or(true);
  options.concurrent = config.concurrent_initialization;
  const Heuristics heuristics = initialize(problem, options);

  EnhancedResult result;
  result.stats.killed_states = heuristics.killed;
  result.stats.init_seconds = detail::seconds_since(t0);
  if (!heuristics.feasible) return result;

  const auto t1 = std::chrono::steady_clock::now();
  detail::EnhancedEngine engine(problem, heuristics, config, /*synchronized=*/false);
  engine.run_sequential();
  engine.finish(result);
  result.stats.search_seconds = detail::seconds_since(t1);
  return result;
}

std::vector<SolutionPath> reconstruct_paths(const EnhancedResult& result,
                                            const ProblemInstance& problem) {
  const MultiCostGraph& graph = problem.graph();
  const LabelPool& fwd = result.labels[index_of(Direction::kForward)];
  const LabelPool& bwd = result.labels[index_of(Direction::kBackward)];

  // Follows parents from h; returns the chain starting at h and ending at the root.
  const auto chain = [](const LabelPool& pool, LabelHandle h) {
    std::vector<LabelHandle> out;
    while (h != kNoLabel) {
      if (h >= pool.size() || out.size() > pool.size()) {
        throw std::logic_error("broken parent chain in label pool");
      }
      out.push_back(h);
      h = pool[h].parent;
    }
    return out;
  };

  std::vector<SolutionPath> paths;
  for (const SolutionPair& pair : result.solutions) {
    const auto forward = chain(fwd, pair.forward);
    const auto backward = chain(bwd, pair.backward);
    if (fwd[forward.back()].state != problem.start() ||
        bwd[backward.back()].state != problem.goal() ||
        fwd[pair.forward].state != bwd[pair.backward].state) {
      throw std::logic_error("solution pair does not connect start and goal");
    }

    SolutionPath path;
    for (auto it = forward.rbegin(); it != forward.rend(); ++it) {
      const Label& label = fwd[*it];
      if (label.via_edge != kNoEdge) path.edges.push_back(label.via_edge);
      path.states.push_back(label.state);
    }
    for (LabelHandle h : backward) {
      const Label& label = bwd[h];
      if (label.parent == kNoLabel) break;
      path.edges.push_back(label.via_edge);
      path.states.push_back(bwd[label.parent].state);
    }

    path.cost = CostVector::zeros(graph.cost_dims());
    for (std::size_t i = 0; i < path.edges.size(); ++i) {
      const Edge& e = graph.edge(path.edges[i]);
      if (e.from != path.states[i] || e.to != path.states[i + 1]) {
        throw std::logic_error("reconstructed edge does not match its states");
      }
      path.cost += e.cost;
    }
    if (!(path.cost == pair.joined)) {
      throw std::logic_error("reconstructed cost " + to_string(path.cost) +
                             " differs from joined cost " + to_string(pair.joined));
    }
    paths.push_back(std::move(path));
  }
  return paths;
}

}  // namespace rcsp
