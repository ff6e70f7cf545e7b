#include "rcsp/enhanced.hpp"

#include <algorithm>

namespace rcsp {

SolutionSet::SolutionSet(CostVector upper_bound, bool synchronized)
    : upper_bound_(std::move(upper_bound)), synchronized_(synchronized) {
  upper_bound_[0] = kInfiniteCost;
}

CostVector SolutionSet::upper_bound() const {
  CostVector bound = upper_bound_;
  bound[0] = best_cost1();
  return bound;
}

bool SolutionSet::offer(const SolutionPair& pair) {
  std::unique_lock<std::mutex> lock;
  if (synchronized_) lock = std::unique_lock(mutex_);

  const CostVector& joined = pair.joined;
  const Cost best = best_cost1_.load(std::memory_order_relaxed);
  if (joined.primary() > best || !truncated_dominates(joined, upper_bound_)) return false;

  if (joined.primary() < best) {
    best_cost1_.store(joined.primary(), std::memory_order_release);
    pairs_.clear();
  }

  const bool dominated = std::any_of(pairs_.begin(), pairs_.end(), [&](const SolutionPair& p) {
    return truncated_dominates(p.joined, joined);
  });
  if (dominated) return false;

  std::erase_if(pairs_,
                [&](const SolutionPair& p) { return truncated_dominates(joined, p.joined); });
  pairs_.push_back(pair);
  return true;
}

MatchStats match(LabelHandle x, const CostVector& xg, Direction d,
                 std::span<const FrontierEntry> opposite_main,
                 std::span<const FrontierEntry> opposite_demoted, SolutionSet& solutions) {
  MatchStats stats;
  const CostVector& limits = solutions.limits_template();

  const auto join = [&](const FrontierEntry& y) {
    ++stats.candidates;
    SolutionPair pair;
    pair.joined = xg + y.g;
    if (!truncated_dominates(pair.joined, limits)) return false;
    if (pair.joined.primary() <= solutions.best_cost1()) {
      pair.forward = d == Direction::kForward ? x : y.label;
      pair.backward = d == Direction::kForward ? y.label : x;
      solutions.offer(pair);
    }
    return true;
  };

  bool any_within_resources = false;
  for (const FrontierEntry& y : opposite_main) any_within_resources |= join(y);
  if (any_within_resources) {
    stats.scanned_demoted = true;
    for (const FrontierEntry& y : opposite_demoted) join(y);
  }
  return stats;
}

std::vector<CostVector> EnhancedResult::joined_costs() const {
  std::vector<CostVector> costs;
  costs.reserve(solutions.size());
  for (const auto& p : solutions) costs.push_back(p.joined);
  std::sort(costs.begin(), costs.end(), lex_less);
  return costs;
}

}  // namespace rcsp
