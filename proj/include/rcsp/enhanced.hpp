#pragma once

#include "rcsp/bounds.hpp"
#include "rcsp/label_store.hpp"
#include "rcsp/problem.hpp"
#include "rcsp/search.hpp"

#include <array>
#include <atomic>
#include <mutex>
#include <span>
#include <string>
#include <vector>

namespace rcsp {

/// A forward and a backward label meeting at the same state.
struct SolutionPair {
  LabelHandle forward = kNoLabel;
  LabelHandle backward = kNoLabel;
  CostVector joined;  // g(forward) + g(backward)
};

/// Node pairs forming resource-unique, non-dominated paths that all share the
/// current best primary cost. Every joined vector is within the upper bound.
///
/// With `synchronized`, offer() is serialized and best_cost1() may be read
/// from any thread; a stale read is always >= the true value.
class SolutionSet {
 public:
  explicit SolutionSet(CostVector upper_bound, bool synchronized = false);

  Cost best_cost1() const noexcept { return best_cost1_.load(std::memory_order_acquire); }

  /// (best_cost1, R1, ..., R(k-1)).
  CostVector upper_bound() const;
  const CostVector& limits_template() const noexcept { return upper_bound_; }

  /// Offers a joined pair. Ignored unless pair.joined ⪯ upper_bound(). A strictly
  /// cheaper pair clears the set; an equal-cost pair is kept only if no stored
  /// pair ⪯Tr-dominates it, and evicts the stored pairs it ⪯Tr-dominates.
  /// Returns true if the pair was added.
  bool offer(const SolutionPair& pair);

  /// Not synchronized; call once the searches have stopped.
  std::span<const SolutionPair> pairs() const noexcept { return pairs_; }
  std::vector<SolutionPair> take_pairs() { return std::move(pairs_); }

 private:
  CostVector upper_bound_;
  std::atomic<Cost> best_cost1_{kInfiniteCost};
  std::vector<SolutionPair> pairs_;
  bool synchronized_;
  std::mutex mutex_;
};

struct MatchStats {
  std::uint64_t candidates = 0;
  bool scanned_demoted = false;
};

/// Joins label x (direction d, g-vector xg) with the opposite direction's lists
/// at the same state. Stage 1 scans X; stage 2 scans X_Dom only when at least one
/// stage-1 join stayed within the resource limits.
MatchStats match(LabelHandle x, const CostVector& xg, Direction d,
                 std::span<const FrontierEntry> opposite_main,
                 std::span<const FrontierEntry> opposite_demoted, SolutionSet& solutions);

struct EnhancedResult {
  SolveStatus status = SolveStatus::kInfeasible;
  Cost cost1 = kInfiniteCost;
  std::vector<SolutionPair> solutions;
  SearchStats stats;
  std::array<LabelPool, 2> labels;  // indexed by index_of(Direction)
  /// Validator output when SearchConfig::validate_frontiers is set.
  std::vector<std::string> frontier_problems;

  /// Joined cost vectors in lexicographic order.
  std::vector<CostVector> joined_costs() const;
};

/// Bidirectional A* with network-reducing initialization, extraction-time
/// (lazy) dominance checks against the two-list frontier, quick checks against
/// the most recent label, and two-stage matching. Returns every resource-unique
/// non-dominated path of optimal primary cost.
EnhancedResult solve_rcebda(const ProblemInstance& problem, const SearchConfig& config = {});

struct SolutionPath {
  std::vector<StateId> states;
  std::vector<EdgeId> edges;
  CostVector cost;
};

/// Stitches each solution pair into a start-to-goal path. The meeting state
/// appears once. Throws std::logic_error on a broken parent chain or when the
/// recomputed edge-cost sum differs from the stored joined vector.
std::vector<SolutionPath> reconstruct_paths(const EnhancedResult& result,
                                            const ProblemInstance& problem);

}  // namespace rcsp
