#pragma once

#include "rcsp/enhanced.hpp"

namespace rcsp {

/// Enhanced search with one thread per direction. Each thread works its own
/// queue and stops on its own termination test or when the queue runs dry; the
/// threads share the best primary cost, both frontiers and the solution set.
///
/// Status, cost1 and the set of joined cost vectors equal those of
/// solve_rcebda(); pair discovery order and stats may differ run to run.
/// SearchConfig::trace is ignored.
EnhancedResult solve_parallel(const ProblemInstance& problem, const SearchConfig& config = {});

}  // namespace rcsp
