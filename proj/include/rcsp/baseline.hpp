#pragma once

#include "rcsp/bounds.hpp"
#include "rcsp/problem.hpp"
#include "rcsp/search.hpp"

namespace rcsp {

struct BaselineResult {
  SolveStatus status = SolveStatus::kInfeasible;
  /// Optimal primary cost; best known on timeout; kInfiniteCost if none.
  Cost cost1 = kInfiniteCost;
  SearchStats stats;
};

/// Interleaved bidirectional A* with eager dominance pruning at generation
/// time, the half-budget perimeter on the critical resource and scalar path
/// matching. Reports the optimal primary cost only.
///
/// Initialization uses plain one-to-all bounds unless config.reduce_network is set.
BaselineResult solve_rcbda(const ProblemInstance& problem, const SearchConfig& config = {});

/// Same search with caller-provided heuristics (must be consistent and
/// admissible for both directions).
BaselineResult solve_rcbda(const ProblemInstance& problem, const Heuristics& heuristics,
                           const SearchConfig& config = {});

}  // namespace rcsp
