#include "rcsp/label_store.hpp"

#include <algorithm>
#include <cassert>

namespace rcsp {

bool is_dominated(const CostVector& g, std::span<const FrontierEntry> explored,
                  std::uint64_t* comparisons) {
  for (const FrontierEntry& y : explored) {
    if (comparisons) ++*comparisons;
    if (truncated_dominates(y.g, g)) return true;
  }
  return false;
}

FrontierStore::FrontierStore(std::size_t state_count, bool synchronized) : cells_(state_count) {
  if (synchronized) stripes_ = std::make_unique<std::shared_mutex[]>(kStripes);
}

void FrontierStore::insert_nondominated(StateId u, FrontierEntry x) {
  Cell& cell = cells_[u];
  assert(!is_dominated(u, x.g));

  std::unique_lock<std::shared_mutex> lock;
  if (stripes_) lock = std::unique_lock(stripe(u));

  const bool first = cell.main.empty();
  if (!first && x.g.primary() < cell.max_inserted_g1) {
    ++monotonicity_violations_;
    assert(false && "frontier insertion out of g1 order");
  }
  // Only members sharing x's g1 can be fully weakly dominated by x.
  const bool equal_g1_seen = !first && cell.max_inserted_g1 >= x.g.primary();

  const auto demote = [&](FrontierEntry&& y) {
    auto pos = std::upper_bound(
        cell.demoted.begin(), cell.demoted.end(), y,
        [](const FrontierEntry& a, const FrontierEntry& b) { return truncated_lex_less(a.g, b.g); });
    cell.demoted.insert(pos, std::move(y));
  };

  std::size_t keep = 0;
  for (std::size_t i = 0; i < cell.main.size(); ++i) {
    FrontierEntry& y = cell.main[i];
    if (!truncated_dominates(x.g, y.g)) {
      if (keep != i) cell.main[keep] = std::move(y);
      ++keep;
    } else if (!(equal_g1_seen && dominates(x.g, y.g))) {
      demote(std::move(y));
    }
  }
  cell.main.resize(keep);

  if (equal_g1_seen) {
    std::erase_if(cell.demoted, [&](const FrontierEntry& y) { return dominates(x.g, y.g); });
  }

  cell.max_inserted_g1 = first ? x.g.primary() : std::max(cell.max_inserted_g1, x.g.primary());
  cell.main.push_back(std::move(x));
}

std::vector<std::string> FrontierStore::validate() const {
  std::vector<std::string> problems;
  const auto where = [](StateId u) { return "state " + std::to_string(u) + ": "; };

  if (monotonicity_violations_ != 0) {
    problems.push_back(std::to_string(monotonicity_violations_) +
                       " insertion(s) out of g1 order");
  }

  for (StateId u = 0; u < cells_.size(); ++u) {
    const Cell& cell = cells_[u];
    const auto& m = cell.main;
    const auto& d = cell.demoted;

    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = 0; j < m.size(); ++j) {
        if (i != j && truncated_dominates(m[i].g, m[j].g)) {
          problems.push_back(where(u) + "X not an antichain: " + to_string(m[i].g) + " vs " +
                             to_string(m[j].g));
        }
      }
      if (i > 0 && m[i].g.primary() < m[i - 1].g.primary()) {
        problems.push_back(where(u) + "X not in g1 order");
      }
    }

    for (std::size_t i = 0; i < d.size(); ++i) {
      const bool covered = std::any_of(m.begin(), m.end(), [&](const FrontierEntry& y) {
        return truncated_dominates(y.g, d[i].g);
      });
      if (!covered) problems.push_back(where(u) + "X_Dom member " + to_string(d[i].g) + " not covered");
      if (i > 0 && truncated_lex_less(d[i].g, d[i - 1].g)) {
        problems.push_back(where(u) + "X_Dom not in lexicographic order");
      }
    }

    std::vector<const FrontierEntry*> all;
    for (const auto& e : m) all.push_back(&e);
    for (const auto& e : d) all.push_back(&e);
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = 0; j < all.size(); ++j) {
        if (i != j && dominates(all[i]->g, all[j]->g)) {
          problems.push_back(where(u) + "weakly dominated member " + to_string(all[j]->g) +
                             " by " + to_string(all[i]->g));
        }
      }
    }
  }
  return problems;
}

}  // namespace rcsp
