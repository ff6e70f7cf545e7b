#pragma once

#include "rcsp/problem.hpp"

#include <cstdint>
#include <memory>
#include <random>
#include <utility>
#include <vector>

namespace rcsp {

/// Seeded PRNG used by every generator: std::mt19937_64, with integer draws
/// mapped by modulo so sequences are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [lo, hi].
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    return lo + engine_() % (hi - lo + 1);
  }

 private:
  std::mt19937_64 engine_;
};

struct RandomInstanceOptions {
  std::size_t min_states = 6;
  std::size_t max_states = 14;
  /// Edges per state, in hundredths.
  std::size_t min_density_pct = 150;
  std::size_t max_density_pct = 300;
  Cost max_cost = 10;
  std::vector<std::size_t> cost_dims = {3, 4};
  std::vector<unsigned> delta_percents = {10, 30, 50, 70, 90};
};

struct GeneratedInstance {
  ProblemInstance problem;
  std::uint64_t seed = 0;
  unsigned delta_percent = 0;
};

/// Small random instance. Costs are uniform in [0, max_cost] with at least one
/// strictly positive resource per edge. Goal is drawn among the states reachable
/// from start when there are any. Limits follow the tightness protocol for the
/// drawn delta (arbitrary when goal is unreachable).
GeneratedInstance random_instance(std::uint64_t seed, const RandomInstanceOptions& options = {});

/// rows x cols 4-connected grid, arcs in both directions, every cost uniform in
/// [min_cost, max_cost]. State id = row * cols + col.
std::shared_ptr<const MultiCostGraph> grid_graph(std::size_t rows, std::size_t cols,
                                                 std::size_t cost_dims, Cost min_cost,
                                                 Cost max_cost, std::uint64_t seed);

/// `count` uniform (start, goal) pairs over [0, state_count). Grids built with
/// the same seed and this function give a reproducible suite.
std::vector<std::pair<StateId, StateId>> random_pairs(std::size_t state_count, std::size_t count,
                                                      std::uint64_t seed);

}  // namespace rcsp
