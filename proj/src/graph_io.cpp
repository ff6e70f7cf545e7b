#include "rcsp/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>

namespace rcsp {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
      line_(line) {}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::uint64_t parse_unsigned(std::string_view token, std::size_t line, const char* what) {
  if (!token.empty() && token.front() == '-') {
    throw ParseError(line, std::string("negative ") + what + " '" + std::string(token) + "'");
  }
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError(line, std::string("invalid ") + what + " '" + std::string(token) + "'");
  }
  return value;
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return in;
}

}  // namespace

DimacsGraph load_dimacs_gr(std::istream& in) {
  DimacsGraph graph;
  bool have_header = false;
  std::size_t expected_arcs = 0;
  std::size_t line_no = 0;
  std::string line;

  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0] == "c") continue;

    if (tokens[0] == "p") {
      if (have_header) throw ParseError(line_no, "duplicate problem line");
      if (tokens.size() != 4 || tokens[1] != "sp") {
        throw ParseError(line_no, "expected 'p sp <n> <m>'");
      }
      graph.state_count = parse_unsigned(tokens[2], line_no, "vertex count");
      expected_arcs = parse_unsigned(tokens[3], line_no, "arc count");
      if (graph.state_count >= kNoState) throw ParseError(line_no, "vertex count too large");
      graph.arcs.reserve(expected_arcs);
      have_header = true;
    } else if (tokens[0] == "a") {
      if (!have_header) throw ParseError(line_no, "arc before problem line");
      if (tokens.size() != 4) throw ParseError(line_no, "expected 'a <u> <v> <w>'");
      const auto u = parse_unsigned(tokens[1], line_no, "vertex id");
      const auto v = parse_unsigned(tokens[2], line_no, "vertex id");
      const auto w = parse_unsigned(tokens[3], line_no, "weight");
      if (u < 1 || u > graph.state_count || v < 1 || v > graph.state_count) {
        throw ParseError(line_no, "vertex id out of range [1," +
                                      std::to_string(graph.state_count) + "]");
      }
      if (graph.arcs.size() == expected_arcs) {
        throw ParseError(line_no, "more arcs than declared (" + std::to_string(expected_arcs) +
                                      ")");
      }
      graph.arcs.push_back(
          WeightedArc{static_cast<StateId>(u - 1), static_cast<StateId>(v - 1), w});
    } else {
      throw ParseError(line_no, "unrecognized line type '" + std::string(tokens[0]) + "'");
    }
  }

  if (!have_header) throw ParseError(0, "missing 'p sp <n> <m>' header");
  if (graph.arcs.size() != expected_arcs) {
    throw ParseError(line_no, "declared " + std::to_string(expected_arcs) + " arcs, found " +
                                  std::to_string(graph.arcs.size()));
  }
  return graph;
}

DimacsGraph load_dimacs_gr_file(const std::string& path) {
  auto in = open_or_throw(path);
  return load_dimacs_gr(in);
}

void write_dimacs_gr(std::ostream& out, const DimacsGraph& graph) {
  out << "p sp " << graph.state_count << ' ' << graph.arcs.size() << '\n';
  for (const auto& arc : graph.arcs) {
    out << "a " << arc.from + 1 << ' ' << arc.to + 1 << ' ' << arc.weight << '\n';
  }
}

DimacsGraph extract_layer(const MultiCostGraph& graph, std::size_t cost_index) {
  if (cost_index >= graph.cost_dims()) throw std::invalid_argument("cost index out of range");
  DimacsGraph layer;
  layer.state_count = graph.state_count();
  layer.arcs.reserve(graph.edge_count());
  for (const Edge& e : graph.edges()) layer.arcs.push_back({e.from, e.to, e.cost[cost_index]});
  return layer;
}

MultiCostGraph build_scenario_graph(const DimacsGraph& distance, const DimacsGraph& time,
                                    std::size_t k) {
  if (k != 3 && k != 4) throw std::invalid_argument("scenario graphs support k = 3 or k = 4");
  if (distance.state_count != time.state_count) {
    throw std::invalid_argument("distance and time layers have different vertex counts");
  }
  if (distance.arcs.size() != time.arcs.size()) {
    throw std::invalid_argument("distance and time layers have different arc counts");
  }

  std::vector<Cost> out_degree(distance.state_count, 0);
  for (const auto& arc : distance.arcs) ++out_degree[arc.from];

  std::vector<Edge> edges;
  edges.reserve(distance.arcs.size());
  for (std::size_t i = 0; i < distance.arcs.size(); ++i) {
    const auto& d = distance.arcs[i];
    const auto& t = time.arcs[i];
    if (d.from != t.from || d.to != t.to) {
      throw std::invalid_argument("layers disagree on arc " + std::to_string(i));
    }
    CostVector cost{d.weight, t.weight, out_degree[d.from] + out_degree[d.to]};
    if (k == 4) cost.push_back(1);
    edges.push_back(Edge{d.from, d.to, std::move(cost)});
  }
  return MultiCostGraph(distance.state_count, k, std::move(edges));
}

MultiCostGraph load_edge_list(std::istream& in, std::optional<std::size_t> expected_dims) {
  std::size_t line_no = 0;
  std::string line;
  std::vector<std::uint64_t> header;
  std::vector<Edge> edges;
  std::optional<std::size_t> dims = expected_dims;
  std::size_t declared_edges = 0;

  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0].front() == '#') continue;

    if (header.size() < 2) {
      if (tokens.size() != 1) throw ParseError(line_no, "expected a single count");
      header.push_back(parse_unsigned(tokens[0], line_no, "count"));
      if (header.size() == 2) {
        declared_edges = header[1];
        edges.reserve(declared_edges);
      }
      continue;
    }

    if (tokens.size() < 4) throw ParseError(line_no, "expected '<u> <v> <c1> ... <ck>'");
    const std::size_t k = tokens.size() - 2;
    if (!dims) dims = k;
    if (k != *dims) {
      throw ParseError(line_no, "expected " + std::to_string(*dims) + " costs, found " +
                                    std::to_string(k));
    }
    if (edges.size() == declared_edges) throw ParseError(line_no, "more edges than declared");

    const auto u = parse_unsigned(tokens[0], line_no, "state id");
    const auto v = parse_unsigned(tokens[1], line_no, "state id");
    if (u >= header[0] || v >= header[0]) throw ParseError(line_no, "state id out of range");
    CostVector cost;
    for (std::size_t i = 2; i < tokens.size(); ++i) {
      cost.push_back(parse_unsigned(tokens[i], line_no, "cost"));
    }
    edges.push_back(Edge{static_cast<StateId>(u), static_cast<StateId>(v), std::move(cost)});
  }

  if (header.size() < 2) throw ParseError(0, "missing state/edge count header");
  if (edges.size() != declared_edges) {
    throw ParseError(line_no, "declared " + std::to_string(declared_edges) + " edges, found " +
                                  std::to_string(edges.size()));
  }
  if (!dims) throw ParseError(0, "cannot infer cost dimension from an empty edge list");
  try {
    return MultiCostGraph(header[0], *dims, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
}

MultiCostGraph load_edge_list_file(const std::string& path,
                                   std::optional<std::size_t> expected_dims) {
  auto in = open_or_throw(path);
  return load_edge_list(in, expected_dims);
}

void write_edge_list(std::ostream& out, const MultiCostGraph& graph) {
  out << graph.state_count() << '\n' << graph.edge_count() << '\n';
  for (const Edge& e : graph.edges()) {
    out << e.from << ' ' << e.to;
    for (Cost c : e.cost) out << ' ' << c;
    out << '\n';
  }
}

}  // namespace rcsp
