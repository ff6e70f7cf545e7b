#pragma once

#include "rcsp/problem.hpp"
#include "rcsp/search.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rcsp {

/// One benchmark query: a start/goal pair at one tightness level.
///
/// Text form, one record per line ('#' lines are comments):
///   <pair_id> <start> <goal> <delta_pct> <k> <R1> ... <R(k-1)>
///   <pair_id> <start> <goal> <delta_pct> <k> unreachable
struct InstanceRecord {
  std::size_t pair_id = 0;
  StateId start = 0;
  StateId goal = 0;
  unsigned delta_percent = 0;
  std::size_t cost_dims = 0;
  bool reachable = true;
  std::vector<Cost> limits;

  friend bool operator==(const InstanceRecord&, const InstanceRecord&) = default;
};

/// Reads "start goal" lines; '#' lines and blank lines are skipped. Throws ParseError.
std::vector<std::pair<StateId, StateId>> read_pairs(std::istream& in);

/// One record per (pair, delta), pairs outer, deltas inner. Pair ids are 0-based
/// positions in `pairs`. Throws std::invalid_argument on a delta above 100 or an
/// out-of-range state.
std::vector<InstanceRecord> generate_instances(const MultiCostGraph& graph,
                                               const std::vector<std::pair<StateId, StateId>>& pairs,
                                               const std::vector<unsigned>& delta_percents);

void write_instances(std::ostream& out, const std::vector<InstanceRecord>& records);
std::vector<InstanceRecord> read_instances(std::istream& in);

enum class Algorithm { kRcbda, kRcebda, kRcebdaPar, kOracle };

std::string_view to_string(Algorithm a) noexcept;
/// Accepts "rcbda", "rcebda", "rcebda-par", "oracle".
std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept;

struct RunOutcome {
  SolveStatus status = SolveStatus::kInfeasible;
  Cost cost1 = kInfiniteCost;
  /// Joined cost vectors in lexicographic order; empty for rcbda.
  std::vector<CostVector> joined;
  SearchStats stats;
  double runtime_ms = 0;
};

/// Runs one algorithm on one instance. The oracle ignores the config.
RunOutcome run_algorithm(Algorithm algorithm, const ProblemInstance& problem,
                         const SearchConfig& config = {});

struct BenchOptions {
  std::string map_name = "map";
  std::vector<Algorithm> algorithms = {Algorithm::kRcbda, Algorithm::kRcebda};
  double timeout_seconds = 3600;
};

struct BenchSummary {
  std::string map_name;
  Algorithm algorithm = Algorithm::kRcebda;
  std::size_t solved = 0;
  std::size_t total = 0;
  /// Seconds; unsolved instances count at the timeout.
  double t_min = 0;
  double t_avg = 0;
  double t_max = 0;
};

inline constexpr std::string_view kBenchCsvHeader =
    "map,algo,pair_id,delta,k,status,cost1,resources,runtime_ms,expansions_fwd,expansions_bwd,"
    "generated,matches,solutions";

/// Writes the CSV header, one row per (record, algorithm) for reachable records,
/// then one "# summary" comment line per algorithm when any row was written.
/// Status is "optimal", "infeasible", "timeout" or "error"; a failing run never
/// aborts the suite. `resources` lists each joined vector's resources as
/// colon-separated values, vectors separated by '|'.
std::vector<BenchSummary> run_bench(const std::shared_ptr<const MultiCostGraph>& graph,
                                    const std::vector<InstanceRecord>& records,
                                    const BenchOptions& options, std::ostream& csv);

/// Summary accounting over per-run seconds; `solved[i]` marks optimal runs.
BenchSummary summarize(std::string map_name, Algorithm algorithm,
                       const std::vector<double>& seconds, const std::vector<bool>& solved,
                       double timeout_seconds);

}  // namespace rcsp
