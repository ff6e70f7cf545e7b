#pragma once

#include "rcsp/graph.hpp"

#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>

namespace rcsp {

enum class SolveStatus { kOptimal, kInfeasible, kTimeout };

constexpr std::string_view to_string(SolveStatus s) noexcept {
  switch (s) {
    case SolveStatus::kOptimal: return "optimal";
    case SolveStatus::kInfeasible: return "infeasible";
    case SolveStatus::kTimeout: return "timeout";
  }
  return "unknown";
}

/// Order among queued labels with equal f1.
enum class TieBreak {
  kDeeperFirst,     // larger g1 first
  kShallowerFirst,  // smaller g1 first
};

/// Which queue wins when both fronts have the same f1.
enum class DirectionPriority { kForwardFirst, kBackwardFirst };

enum class TraceAction { kPrunedQuick, kPrunedDominated, kExpanded, kPerimeterBlocked };

constexpr std::string_view to_string(TraceAction a) noexcept {
  switch (a) {
    case TraceAction::kPrunedQuick: return "pruned-quick";
    case TraceAction::kPrunedDominated: return "pruned-dominated";
    case TraceAction::kExpanded: return "expanded";
    case TraceAction::kPerimeterBlocked: return "perimeter-blocked";
  }
  return "unknown";
}

/// One extraction of the sequential enhanced search.
struct TraceEvent {
  std::uint64_t iteration = 0;  // 1-based extraction count
  std::uint64_t serial = 0;     // generation number of the label (initial labels are 1 and 2)
  Direction direction = Direction::kForward;
  StateId state = 0;
  CostVector g;
  CostVector f;
  TraceAction action = TraceAction::kExpanded;
  Cost best_cost1 = kInfiniteCost;  // after the iteration
  std::size_t solutions = 0;        // pair count after the iteration
};

struct SearchConfig {
  /// Cost-vector index of the critical resource (1..k-1). Defaults to the last attribute.
  std::optional<std::size_t> critical_index;
  TieBreak tie_break = TieBreak::kDeeperFirst;
  DirectionPriority direction_priority = DirectionPriority::kForwardFirst;
  /// Resource-based network reduction during initialization. Defaults to on for
  /// the enhanced searches and off for the baseline.
  std::optional<bool> reduce_network;
  bool concurrent_initialization = false;
  /// Wall-clock budget, checked every kDeadlineCheckInterval extractions.
  std::optional<std::chrono::duration<double>> timeout;
  /// Sequential enhanced search only.
  std::function<void(const TraceEvent&)> trace;
  /// Run the frontier validator when the enhanced search finishes.
  bool validate_frontiers = false;
};

inline constexpr std::uint64_t kDeadlineCheckInterval = 4096;

struct DirectionStats {
  std::uint64_t extractions = 0;
  std::uint64_t expansions = 0;
  std::uint64_t generated = 0;
  std::uint64_t dominance_checks = 0;
  std::uint64_t matches = 0;
  std::uint64_t quick_prunes = 0;
  std::uint64_t dominance_prunes = 0;
  std::uint64_t bound_prunes = 0;
  std::uint64_t perimeter_blocked = 0;
  /// Extractions whose f1 was smaller than the previous extraction's.
  std::uint64_t f1_order_violations = 0;
};

struct SearchStats {
  std::array<DirectionStats, 2> direction;  // indexed by index_of(Direction)
  std::size_t killed_states = 0;
  double init_seconds = 0;
  double search_seconds = 0;

  const DirectionStats& of(Direction d) const { return direction[index_of(d)]; }
  std::uint64_t total_expansions() const {
    return direction[0].expansions + direction[1].expansions;
  }
  std::uint64_t total_generated() const { return direction[0].generated + direction[1].generated; }
  std::uint64_t total_matches() const { return direction[0].matches + direction[1].matches; }
  std::uint64_t total_f1_order_violations() const {
    return direction[0].f1_order_violations + direction[1].f1_order_violations;
  }
};

}  // namespace rcsp
