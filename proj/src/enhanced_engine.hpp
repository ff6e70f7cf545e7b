#pragma once

#include "rcsp/enhanced.hpp"
#include "search_detail.hpp"

#include <atomic>

namespace rcsp::detail {

/// State of one enhanced search run. Each direction's queue, pool and stats
/// belong to whoever calls step() for that direction; frontiers and the
/// solution set are shared. With `synchronized`, the two directions may be
/// stepped from two threads concurrently.
class EnhancedEngine {
 public:
  enum class Step { kContinue, kTerminated, kExhausted, kTimedOut };

  EnhancedEngine(const ProblemInstance& problem, const Heuristics& heuristics,
                 const SearchConfig& config, bool synchronized);

  EnhancedEngine(const EnhancedEngine&) = delete;
  EnhancedEngine& operator=(const EnhancedEngine&) = delete;

  /// Extracts and processes one label of direction d.
  Step step(Direction d);

  /// Interleaved loop: always steps the direction with the smaller front f1.
  void run_sequential();

  /// Moves the outcome into `result` (status, solutions, pools, stats).
  void finish(EnhancedResult& result);

 private:
  struct Side {
    explicit Side(TieBreak t) : open(t) {}
    OpenQueue open;
    LabelPool pool;
    DirectionStats stats;
    Cost last_f1 = 0;
    std::uint64_t since_deadline_check = 0;
  };

  Side& side(Direction d) { return sides_[index_of(d)]; }
  FrontierStore& frontier(Direction d) { return frontiers_[index_of(d)]; }
  void emit(Direction d, const Label& x, TraceAction action);

  const ProblemInstance& problem_;
  const Heuristics& heuristics_;
  const SearchConfig& config_;
  std::size_t kappa_;
  Cost critical_budget_;
  Deadline deadline_;

  std::array<Side, 2> sides_;
  std::array<FrontierStore, 2> frontiers_;
  SolutionSet solutions_;
  std::atomic<bool> timed_out_{false};

  std::uint64_t iteration_ = 0;  // trace bookkeeping, sequential only
  std::uint64_t next_serial_ = 2;
};

}  // namespace rcsp::detail
