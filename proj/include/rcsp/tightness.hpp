#pragma once

#include "rcsp/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rcsp {

/// Constraint tightness delta in [0, 1], held as an exact fraction so that
/// budgets do not depend on floating-point rounding.
class Tightness {
 public:
  /// Throws std::invalid_argument unless 0 <= numerator <= denominator, denominator > 0.
  Tightness(std::uint64_t numerator, std::uint64_t denominator);

  static Tightness from_percent(std::uint64_t percent) { return {percent, 100}; }

  /// Accepts a decimal fraction ("0.5", "1", ".25"). Throws std::invalid_argument.
  static Tightness parse_fraction(std::string_view text);

  std::uint64_t numerator() const noexcept { return num_; }
  std::uint64_t denominator() const noexcept { return den_; }
  double value() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

 private:
  std::uint64_t num_;
  std::uint64_t den_;
};

/// Per-resource lower bounds (cost_min) and the resource use of the
/// unconstrained primary-cost-optimal path (cost_max) for one start/goal pair.
/// Vectors are indexed by resource, i.e. entry r refers to cost attribute r + 1.
struct TightnessSpec {
  Tightness delta{0, 1};
  std::vector<Cost> cost_min;
  std::vector<Cost> cost_max;
};

/// R = floor(cost_min + delta * (cost_max - cost_min)) for resource `resource`.
/// Throws std::invalid_argument if cost_min > cost_max or the index is out of range.
Cost compute_budget(const TightnessSpec& measured, std::size_t resource);

/// Budgets for every resource.
std::vector<Cost> compute_limits(const TightnessSpec& measured);

/// Measures cost_min / cost_max for a pair on the full graph. Returns nullopt
/// when goal is unreachable from start. The primary-cost-optimal path is taken
/// from a deterministic Dijkstra tree (ties go to the smaller predecessor id).
std::optional<TightnessSpec> measure_tightness(const MultiCostGraph& graph, StateId start,
                                               StateId goal, Tightness delta = {0, 1});

}  // namespace rcsp
