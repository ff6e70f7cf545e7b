#include "rcsp/oracle.hpp"

#include <algorithm>

namespace rcsp {

namespace {

class Enumerator {
 public:
  Enumerator(const ProblemInstance& problem, const EnumerationOptions& options)
      : problem_(problem),
        graph_(problem.graph()),
        options_(options),
        on_path_(graph_.state_count(), 0) {}

  std::vector<EnumeratedPath> run() {
    CostVector g = CostVector::zeros(graph_.cost_dims());
    states_.push_back(problem_.start());
    on_path_[problem_.start()] = 1;
    visit(problem_.start(), g);
    return std::move(found_);
  }

 private:
  bool cut(const CostVector& g) const {
    const auto& limits = problem_.limits();
    for (std::size_t r = 0; r < limits.size(); ++r) {
      if (g[r + 1] > limits[r]) return true;
    }
    return options_.cost1_ceiling && g.primary() > *options_.cost1_ceiling;
  }

  void visit(StateId u, const CostVector& g) {
    if (++visited_ > options_.budget) {
      throw EnumerationBudgetExceeded(
          "brute-force enumeration exceeded its budget; use a smaller instance");
    }
    if (u == problem_.goal()) {
      found_.push_back(EnumeratedPath{states_, g});
      if (options_.simple_paths_only) return;
    }
    for (const Arc& arc : graph_.successors(u, Direction::kForward)) {
      const StateId v = arc.head;
      if (options_.simple_paths_only && on_path_[v]) continue;
      CostVector next = g + graph_.edge(arc.edge).cost;
      if (cut(next)) continue;
      states_.push_back(v);
      ++on_path_[v];
      visit(v, next);
      --on_path_[v];
      states_.pop_back();
    }
  }

  const ProblemInstance& problem_;
  const MultiCostGraph& graph_;
  const EnumerationOptions& options_;
  std::vector<std::uint32_t> on_path_;
  std::vector<StateId> states_;
  std::vector<EnumeratedPath> found_;
  std::size_t visited_ = 0;
};

}  // namespace

std::vector<EnumeratedPath> enumerate_feasible(const ProblemInstance& problem,
                                               const EnumerationOptions& options) {
  if (!options.simple_paths_only && !options.cost1_ceiling) {
    throw std::invalid_argument("non-simple enumeration needs a primary-cost ceiling");
  }
  return Enumerator(problem, options).run();
}

OracleAnswer oracle_answer(const ProblemInstance& problem, const EnumerationOptions& options) {
  const auto paths = enumerate_feasible(problem, options);
  OracleAnswer answer;
  if (paths.empty()) return answer;

  answer.status = SolveStatus::kOptimal;
  for (const auto& p : paths) answer.cost1 = std::min(answer.cost1, p.cost.primary());

  std::vector<CostVector> optimal;
  for (const auto& p : paths) {
    if (p.cost.primary() == answer.cost1) optimal.push_back(p.cost);
  }
  std::sort(optimal.begin(), optimal.end(), lex_less);
  optimal.erase(std::unique(optimal.begin(), optimal.end()), optimal.end());

  for (const auto& c : optimal) {
    const bool dominated = std::any_of(optimal.begin(), optimal.end(), [&](const CostVector& o) {
      return !(o == c) && truncated_dominates(o, c);
    });
    if (!dominated) answer.optimal_set.push_back(c);
  }
  return answer;
}

}  // namespace rcsp
