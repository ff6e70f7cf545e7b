#include "rcsp/parallel.hpp"

#include "enhanced_engine.hpp"

#include <thread>

namespace rcsp {

EnhancedResult solve_parallel(const ProblemInstance& problem, const SearchConfig& config) {
  const auto t0 = std::chrono::steady_clock::now();
  InitializeOptions options;
  options.reduce_network = config.reduce_network.value_or(true);
  options.concurrent = config.concurrent_initialization;
  const Heuristics heuristics = initialize(problem, options);

  EnhancedResult result;
  result.stats.killed_states = heuristics.killed;
  result.stats.init_seconds = detail::seconds_since(t0);
  if (!heuristics.feasible) return result;

  SearchConfig worker_config = config;
  worker_config.trace = nullptr;

  const auto t1 = std::chrono::steady_clock::now();
  detail::EnhancedEngine engine(problem, heuristics, worker_config, /*synchronized=*/true);
  {
    const auto work = [&engine](Direction d) {
      while (engine.step(d) == detail::EnhancedEngine::Step::kContinue) {
      }
    };
    std::jthread forward(work, Direction::kForward);
    std::jthread backward(work, Direction::kBackward);
  }
  engine.finish(result);
  result.stats.search_seconds = detail::seconds_since(t1);
  return result;
}

}  // namespace rcsp
