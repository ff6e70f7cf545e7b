#pragma once

#include "rcsp/label_store.hpp"
#include "rcsp/problem.hpp"
#include "rcsp/search.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <stdexcept>
#include <vector>

namespace rcsp::detail {

struct QueueEntry {
  Cost f1;
  Cost g1;
  StateId state;
  LabelHandle label;
};

/// Min-priority queue of labels keyed by (f1, g1 per tie-break, state id,
/// truncated g lexicographically, handle). The last two keys only matter for
/// labels of one state with equal g1; ordering them by resources first means an
/// equal-cost label is never extracted before one that dominates it.
class OpenQueue {
 public:
  explicit OpenQueue(TieBreak tie_break) : tie_break_(tie_break) {}

  bool empty() const noexcept { return heap_.empty(); }
  std::size_t size() const noexcept { return heap_.size(); }
  const QueueEntry& top() const { return heap_.front(); }

  void push(const QueueEntry& entry, const LabelPool& pool) {
    heap_.push_back(entry);
    std::push_heap(heap_.begin(), heap_.end(), Later{tie_break_, &pool});
  }

  QueueEntry pop(const LabelPool& pool) {
    std::pop_heap(heap_.begin(), heap_.end(), Later{tie_break_, &pool});
    QueueEntry entry = heap_.back();
    heap_.pop_back();
    return entry;
  }

 private:
  struct Later {
    TieBreak tie_break;
    const LabelPool* pool;
    bool operator()(const QueueEntry& a, const QueueEntry& b) const {
      if (a.f1 != b.f1) return a.f1 > b.f1;
      if (a.g1 != b.g1) return tie_break == TieBreak::kDeeperFirst ? a.g1 < b.g1 : a.g1 > b.g1;
      if (a.state != b.state) return a.state > b.state;
      const CostVector& ga = (*pool)[a.label].g;
      const CostVector& gb = (*pool)[b.label].g;
      if (truncated_lex_less(gb, ga)) return true;
      if (truncated_lex_less(ga, gb)) return false;
      return a.label > b.label;
    }
  };

  TieBreak tie_break_;
  std::vector<QueueEntry> heap_;
};

inline std::size_t resolve_critical_index(const ProblemInstance& problem,
                                          const SearchConfig& config) {
  const std::size_t k = problem.cost_dims();
  const std::size_t kappa = config.critical_index.value_or(k - 1);
  if (kappa < 1 || kappa >= k) {
    throw std::invalid_argument("critical resource index must lie in [1, k-1]");
  }
  return kappa;
}

/// 2 * g <= R, without overflow.
inline bool within_half(Cost g, Cost budget) noexcept { return g <= budget / 2; }

class Deadline {
 public:
  explicit Deadline(const std::optional<std::chrono::duration<double>>& timeout) {
    if (timeout) {
      end_ = std::chrono::steady_clock::now() +
             std::chrono::duration_cast<std::chrono::steady_clock::duration>(*timeout);
    }
  }
  bool expired() const {
    return end_ && std::chrono::steady_clock::now() >= *end_;
  }

 private:
  std::optional<std::chrono::steady_clock::time_point> end_;
};

inline double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace rcsp::detail
