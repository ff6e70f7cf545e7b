#pragma once

#include "rcsp/cost_vector.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace rcsp {

using StateId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr StateId kNoState = std::numeric_limits<StateId>::max();
inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

enum class Direction : std::uint8_t { kForward = 0, kBackward = 1 };

constexpr Direction opposite(Direction d) noexcept {
  return d == Direction::kForward ? Direction::kBackward : Direction::kForward;
}

constexpr std::size_t index_of(Direction d) noexcept { return static_cast<std::size_t>(d); }

constexpr std::string_view to_string(Direction d) noexcept {
  return d == Direction::kForward ? "forward" : "backward";
}

inline constexpr std::array<Direction, 2> kDirections = {Direction::kForward,
                                                         Direction::kBackward};

struct Edge {
  StateId from = 0;
  StateId to = 0;
  CostVector cost;
};

/// Adjacency entry. `head` is the neighbour reached when following the edge in
/// the traversal direction (the edge's `to` for forward, its `from` for backward).
struct Arc {
  StateId head = 0;
  EdgeId edge = 0;
};

/// Directed graph with k-attribute edges. Both the forward adjacency and the
/// exact reversal are precomputed in CSR form; the graph is immutable once built.
class MultiCostGraph {
 public:
  /// Throws std::invalid_argument on an endpoint >= state_count, k < 2, or a
  /// cost vector whose length differs from k.
  MultiCostGraph(std::size_t state_count, std::size_t cost_dims, std::vector<Edge> edges);

  std::size_t state_count() const noexcept { return state_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::size_t cost_dims() const noexcept { return cost_dims_; }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::span<const Arc> successors(StateId u, Direction d) const noexcept {
    const auto& offsets = offsets_[index_of(d)];
    const auto& arcs = arcs_[index_of(d)];
    return {arcs.data() + offsets[u], arcs.data() + offsets[u + 1]};
  }

  std::size_t out_degree(StateId u) const noexcept {
    return successors(u, Direction::kForward).size();
  }

 private:
  std::size_t state_count_;
  std::size_t cost_dims_;
  std::vector<Edge> edges_;
  std::array<std::vector<std::size_t>, 2> offsets_;
  std::array<std::vector<Arc>, 2> arcs_;
};

}  // namespace rcsp
