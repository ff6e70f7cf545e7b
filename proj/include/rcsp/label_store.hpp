#pragma once

#include "rcsp/graph.hpp"

#include <cstdint>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <span>
#include <string>
#include <vector>

namespace rcsp {

using LabelHandle = std::uint32_t;
inline constexpr LabelHandle kNoLabel = std::numeric_limits<LabelHandle>::max();

/// A partial path from a direction's initial state to `state`.
/// f = g + h^direction(state), fixed at creation.
struct Label {
  StateId state = 0;
  Direction direction = Direction::kForward;
  LabelHandle parent = kNoLabel;
  EdgeId via_edge = kNoEdge;  // edge from the parent's state, kNoEdge for the initial label
  std::uint64_t serial = 0;   // generation number, only assigned when tracing
  CostVector g;
  CostVector f;
};

/// Append-only label storage for one search direction. Handles stay valid for
/// the pool's lifetime, so parent chains survive queue removal.
class LabelPool {
 public:
  LabelHandle push(Label label) {
    labels_.push_back(std::move(label));
    return static_cast<LabelHandle>(labels_.size() - 1);
  }
  const Label& operator[](LabelHandle h) const { return labels_[h]; }
  std::size_t size() const noexcept { return labels_.size(); }
  void reserve(std::size_t n) { labels_.reserve(n); }

 private:
  std::vector<Label> labels_;
};

/// A label published to a frontier. The g-vector is copied so that the opposite
/// search can scan it without touching the owner's pool.
struct FrontierEntry {
  LabelHandle label = kNoLabel;
  CostVector g;
};

/// True iff some member y satisfies g(y) ⪯Tr g. Every member must have been
/// extracted (same state, same direction) no later than the tested label.
/// `comparisons`, when given, is incremented once per member examined.
bool is_dominated(const CostVector& g, std::span<const FrontierEntry> explored,
                  std::uint64_t* comparisons = nullptr);

/// Explored labels of one search direction, per state, split into the
/// non-dominated list X and the demoted list X_Dom.
///
///  * X is in insertion order, which is non-decreasing in g1; its truncated
///    vectors form an antichain under ⪯Tr.
///  * X_Dom is kept in lexicographic order of truncated vectors; each member is
///    ⪯Tr-dominated by some member of X.
///  * No member of X ∪ X_Dom weakly dominates another one.
///
/// With `synchronized`, writes take an exclusive lock on the state's stripe and
/// with_lists() takes a shared one. The owning search may read its own lists
/// without locking since it is the only writer.
class FrontierStore {
 public:
  explicit FrontierStore(std::size_t state_count, bool synchronized = false);

  std::span<const FrontierEntry> main(StateId u) const { return cells_[u].main; }
  std::span<const FrontierEntry> demoted(StateId u) const { return cells_[u].demoted; }

  /// Last-inserted member of X(u), or nullptr.
  const FrontierEntry* last(StateId u) const {
    const auto& m = cells_[u].main;
    return m.empty() ? nullptr : &m.back();
  }

  /// X(u) non-empty and its last-inserted member z has g(z) ⪯Tr g.
  bool quick_check(StateId u, const CostVector& g) const {
    const FrontierEntry* z = last(u);
    return z != nullptr && truncated_dominates(z->g, g);
  }

  bool is_dominated(StateId u, const CostVector& g, std::uint64_t* comparisons = nullptr) const {
    return rcsp::is_dominated(g, cells_[u].main, comparisons);
  }

  /// Precondition: !is_dominated(u, x.g). Moves every y in X(u) with
  /// g(x) ⪯Tr g(y) to X_Dom(u) (dropping those that x fully weakly dominates),
  /// then appends x to X(u).
  void insert_nondominated(StateId u, FrontierEntry x);

  /// Calls fn(X(u), X_Dom(u)) under the read discipline of the store.
  template <class Fn>
  decltype(auto) with_lists(StateId u, Fn&& fn) const {
    const Cell& cell = cells_[u];
    if (!stripes_) return fn(std::span<const FrontierEntry>(cell.main),
                             std::span<const FrontierEntry>(cell.demoted));
    std::shared_lock lock(stripe(u));
    return fn(std::span<const FrontierEntry>(cell.main),
              std::span<const FrontierEntry>(cell.demoted));
  }

  /// Number of insertions whose g1 was smaller than an earlier insertion at the same state.
  std::uint64_t monotonicity_violations() const noexcept { return monotonicity_violations_; }

  std::size_t state_count() const noexcept { return cells_.size(); }

  /// Checks the list invariants. Returns one message per violation.
  std::vector<std::string> validate() const;

 private:
  struct Cell {
    std::vector<FrontierEntry> main;
    std::vector<FrontierEntry> demoted;
    Cost max_inserted_g1 = 0;
  };

  static constexpr std::size_t kStripes = 1024;
  std::shared_mutex& stripe(StateId u) const { return stripes_[u % kStripes]; }

  std::vector<Cell> cells_;
  std::unique_ptr<std::shared_mutex[]> stripes_;
  std::uint64_t monotonicity_violations_ = 0;
};

/// Single explored list per state, as used by the baseline search: every
/// extracted label is appended, nothing is ever demoted or removed.
class ExploredLists {
 public:
  explicit ExploredLists(std::size_t state_count) : lists_(state_count) {}

  std::span<const FrontierEntry> at(StateId u) const { return lists_[u]; }
  void append(StateId u, FrontierEntry x) { lists_[u].push_back(std::move(x)); }

 private:
  std::vector<std::vector<FrontierEntry>> lists_;
};

}  // namespace rcsp
