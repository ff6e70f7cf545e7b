#include "rcsp/tightness.hpp"

#include "rcsp/shortest_path.hpp"

#include <charconv>
#include <stdexcept>

namespace rcsp {

Tightness::Tightness(std::uint64_t numerator, std::uint64_t denominator)
    : num_(numerator), den_(denominator) {
  if (den_ == 0 || num_ > den_) {
    throw std::invalid_argument("tightness must lie in [0, 1]");
  }
}

Tightness Tightness::parse_fraction(std::string_view text) {
  const auto bad = [&] {
    return std::invalid_argument("invalid tightness '" + std::string(text) + "'");
  };
  const auto dot = text.find('.');
  const std::string_view whole = text.substr(0, dot);
  const std::string_view frac = dot == std::string_view::npos ? std::string_view{}
                                                              : text.substr(dot + 1);
  if (whole.empty() && frac.empty()) throw bad();
  if (frac.size() > 18) throw bad();

  const auto digits = [&](std::string_view s) -> std::uint64_t {
    if (s.empty()) return 0;
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) throw bad();
    return v;
  };

  std::uint64_t den = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
  const std::uint64_t w = digits(whole);
  if (w > 1) throw bad();
  const std::uint64_t num = w * den + digits(frac);
  if (num > den) throw bad();
  return Tightness(num, den);
}

Cost compute_budget(const TightnessSpec& measured, std::size_t resource) {
  if (resource >= measured.cost_min.size() || resource >= measured.cost_max.size()) {
    throw std::invalid_argument("resource index out of range");
  }
  const Cost lo = measured.cost_min[resource];
  const Cost hi = measured.cost_max[resource];
  if (lo > hi) throw std::invalid_argument("cost_min exceeds cost_max");
  __extension__ using Wide = unsigned __int128;
  const Wide span = hi - lo;
  const Wide scaled = span * measured.delta.numerator() / measured.delta.denominator();
  return lo + static_cast<Cost>(scaled);
}

std::vector<Cost> compute_limits(const TightnessSpec& measured) {
  std::vector<Cost> limits;
  for (std::size_t r = 0; r < measured.cost_min.size(); ++r) limits.push_back(compute_budget(measured, r));
  return limits;
}

std::optional<TightnessSpec> measure_tightness(const MultiCostGraph& graph, StateId start,
                                               StateId goal, Tightness delta) {
  const std::size_t k = graph.cost_dims();
  const auto primary = shortest_path_tree(graph, start, 0, Direction::kForward);
  if (primary.distance[goal] == kInfiniteCost) return std::nullopt;

  TightnessSpec measured;
  measured.delta = delta;
  measured.cost_max.assign(k - 1, 0);
  for (StateId v = goal; v != start;) {
    const Edge& e = graph.edge(primary.parent_edge[v]);
    for (std::size_t r = 0; r + 1 < k; ++r) measured.cost_max[r] += e.cost[r + 1];
    v = e.from;
  }
  for (std::size_t r = 0; r + 1 < k; ++r) {
    measured.cost_min.push_back(
        shortest_path_tree(graph, start, r + 1, Direction::kForward).distance[goal]);
  }
  return measured;
}

}  // namespace rcsp
