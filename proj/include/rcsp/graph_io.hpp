#pragma once

#include "rcsp/graph.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rcsp {

/// Malformed input. `line()` is 1-based; 0 when the error is not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct WeightedArc {
  StateId from = 0;
  StateId to = 0;
  Cost weight = 0;

  friend bool operator==(const WeightedArc&, const WeightedArc&) = default;
};

/// One single-criterion layer, as stored in a DIMACS .gr file (ids 0-based).
struct DimacsGraph {
  std::size_t state_count = 0;
  std::vector<WeightedArc> arcs;
};

/// Reads the DIMACS shortest-path format:
///   c <comment>
///   p sp <n> <m>
///   a <u> <v> <w>     (1-based ids, non-negative integer weight)
/// Arc order and parallel arcs are preserved. Throws ParseError.
DimacsGraph load_dimacs_gr(std::istream& in);
DimacsGraph load_dimacs_gr_file(const std::string& path);
void write_dimacs_gr(std::ostream& out, const DimacsGraph& graph);

/// Extracts cost layer `cost_index` of a multi-cost graph as a DIMACS layer.
DimacsGraph extract_layer(const MultiCostGraph& graph, std::size_t cost_index);

/// Combines distance and time layers into a k-cost graph (k = 3 or 4).
/// Edge cost: (distance, time, outdeg(u) + outdeg(v)[, 1]). The degree term is
/// twice the average end-point out-degree so that every cost stays integral.
/// Throws std::invalid_argument if the layers disagree on n, m or any arc's endpoints.
MultiCostGraph build_scenario_graph(const DimacsGraph& distance, const DimacsGraph& time,
                                    std::size_t k);

/// Plain edge-list format used for small fixtures:
///   <n>
///   <m>
///   <u> <v> <c1> ... <ck>      (m lines, 0-based ids)
/// Lines starting with '#' are ignored. k is taken from the first arc line
/// unless `expected_dims` is given (required when m = 0).
MultiCostGraph load_edge_list(std::istream& in, std::optional<std::size_t> expected_dims = {});
MultiCostGraph load_edge_list_file(const std::string& path,
                                   std::optional<std::size_t> expected_dims = {});
void write_edge_list(std::ostream& out, const MultiCostGraph& graph);

}  // namespace rcsp
