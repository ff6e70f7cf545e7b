#pragma once

#include "rcsp/problem.hpp"
#include "rcsp/search.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace rcsp {

/// Brute-force ground truth for small instances.

class EnumerationBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EnumerationOptions {
  bool simple_paths_only = true;
  /// Required when simple_paths_only is false: partial paths whose primary cost
  /// exceeds this are cut.
  std::optional<Cost> cost1_ceiling;
  /// Maximum number of partial paths visited.
  std::size_t budget = 1'000'000;
};

struct EnumeratedPath {
  std::vector<StateId> states;
  CostVector cost;
};

/// Depth-first enumeration of every start-goal path whose resources respect the
/// limits. Throws EnumerationBudgetExceeded past options.budget partial paths and
/// std::invalid_argument for non-simple mode without a ceiling.
std::vector<EnumeratedPath> enumerate_feasible(const ProblemInstance& problem,
                                               const EnumerationOptions& options = {});

struct OracleAnswer {
  SolveStatus status = SolveStatus::kInfeasible;
  Cost cost1 = kInfiniteCost;
  /// Distinct resource vectors of optimal paths that no other optimal path
  /// ⪯Tr-dominates, in lexicographic order.
  std::vector<CostVector> optimal_set;
};

OracleAnswer oracle_answer(const ProblemInstance& problem, const EnumerationOptions& options = {});

}  // namespace rcsp
