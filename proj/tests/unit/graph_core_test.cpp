#include "rcsp/cost_vector.hpp"
#include "rcsp/generators.hpp"
#include "rcsp/graph.hpp"
#include "rcsp/graph_io.hpp"
#include "rcsp/problem.hpp"
#include "rcsp/tightness.hpp"

#include "reference.hpp"

#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

using namespace rcsp;

namespace {

CostVector random_vector(Rng& rng, std::size_t k, Cost max) {
  CostVector v;
  for (std::size_t i = 0; i < k; ++i) v.push_back(rng.uniform(0, max));
  return v;
}

std::string source_path(const std::string& relative) {
  return std::string(RCSP_SOURCE_DIR) + "/" + relative;
}

}  // namespace

TEST_SUITE("cost vector") {
  TEST_CASE("dominance examples") {
    const CostVector bound{kInfiniteCost, 4, 4};
    CHECK(dominates({4, 4, 4}, bound));
    CHECK_FALSE(dominates({3, 5, 5}, bound));
    const CostVector a{7, 2, 9};
    CHECK(dominates(a, a));
  }

  TEST_CASE("truncated dominance examples") {
    CHECK(truncated_dominates({3, 1, 1}, {2, 2, 2}));
    CHECK_FALSE(truncated_dominates({0, 2, 1}, {0, 1, 2}));
    CHECK_FALSE(truncated_dominates({0, 1, 2}, {0, 2, 1}));
    const CostVector a{5, 0, 3};
    CHECK(truncated_dominates(a, a));
  }

  TEST_CASE("length mismatch is rejected") {
    CHECK_THROWS_AS(dominates({1, 2}, {1, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(truncated_dominates({1, 2}, {1, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(CostVector({1, 2}) + CostVector({1, 2, 3}), std::invalid_argument);
  }

  TEST_CASE("addition examples") {
    CHECK(CostVector{3, 1, 1} + CostVector{1, 3, 3} == CostVector{4, 4, 4});
    const CostVector a{2, 7, 1};
    CHECK(a + CostVector::zeros(3) == a);
    CHECK(CostVector{1, 1, 1} + CostVector{1, 1, 1} + CostVector{1, 3, 3} == CostVector{3, 5, 5});
  }

  TEST_CASE("addition saturates at infinity") {
    const CostVector inf{kInfiniteCost, 1};
    CHECK((inf + CostVector{5, 1}) == CostVector{kInfiniteCost, 2});
    const CostVector near{kInfiniteCost - 1, 0};
    CHECK((near + CostVector{10, 0})[0] == kInfiniteCost);
  }

  TEST_CASE("text form") {
    CHECK(to_string(CostVector{kInfiniteCost, 4, 4}) == "(inf,4,4)");
    std::ostringstream out;
    out << CostVector{1, 2};
    CHECK(out.str() == "(1,2)");
  }

  TEST_CASE("dominance is a partial order on random triples") {
    Rng rng(11);
    for (int trial = 0; trial < 5000; ++trial) {
      const std::size_t k = rng.uniform(2, 4);
      const CostVector a = random_vector(rng, k, 3);
      const CostVector b = random_vector(rng, k, 3);
      const CostVector c = random_vector(rng, k, 3);
      CHECK(dominates(a, a));
      if (dominates(a, b) && dominates(b, a)) CHECK(a == b);
      if (dominates(a, b) && dominates(b, c)) CHECK(dominates(a, c));
      if (dominates(a, b)) CHECK(truncated_dominates(a, b));
    }
  }

  TEST_CASE("truncated dominance does not imply dominance") {
    const CostVector a{9, 1, 1};
    const CostVector b{2, 1, 1};
    CHECK(truncated_dominates(a, b));
    CHECK_FALSE(dominates(a, b));
  }

  TEST_CASE("addition is associative and commutative") {
    Rng rng(12);
    for (int trial = 0; trial < 2000; ++trial) {
      const std::size_t k = rng.uniform(2, 4);
      const CostVector a = random_vector(rng, k, 1000);
      const CostVector b = random_vector(rng, k, 1000);
      const CostVector c = random_vector(rng, k, 1000);
      CHECK((a + b) == (b + a));
      CHECK(((a + b) + c) == (a + (b + c)));
      CHECK((a + CostVector::zeros(k)) == a);
    }
  }
}

TEST_SUITE("graph") {
  TEST_CASE("construction validates endpoints and dimensions") {
    CHECK_THROWS_AS(MultiCostGraph(2, 2, {{0, 2, {1, 1}}}), std::invalid_argument);
    CHECK_THROWS_AS(MultiCostGraph(2, 2, {{0, 1, {1, 1, 1}}}), std::invalid_argument);
    CHECK_THROWS_AS(MultiCostGraph(2, 1, {}), std::invalid_argument);
  }

  TEST_CASE("backward adjacency is the exact reversal of forward adjacency") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const auto inst = random_instance(seed);
      const MultiCostGraph& g = inst.problem.graph();
      std::vector<std::tuple<StateId, StateId, std::vector<Cost>>> fwd, bwd;
      for (StateId u = 0; u < g.state_count(); ++u) {
        for (const Arc& a : g.successors(u, Direction::kForward)) {
          CHECK(g.edge(a.edge).from == u);
          fwd.emplace_back(u, a.head, testing::raw(g.edge(a.edge).cost));
        }
        for (const Arc& a : g.successors(u, Direction::kBackward)) {
          CHECK(g.edge(a.edge).to == u);
          bwd.emplace_back(a.head, u, testing::raw(g.edge(a.edge).cost));
        }
      }
      std::sort(fwd.begin(), fwd.end());
      std::sort(bwd.begin(), bwd.end());
      CHECK(fwd == bwd);
      CHECK(fwd.size() == g.edge_count());
    }
  }

  TEST_CASE("direction opposite is an involution") {
    for (Direction d : kDirections) CHECK(opposite(opposite(d)) == d);
    CHECK(opposite(Direction::kForward) == Direction::kBackward);
  }

  TEST_CASE("shipped example graph matches the in-code fixture") {
    const MultiCostGraph loaded = load_edge_list_file(source_path("data/example7.graph"));
    const auto expected = testing::example7_graph();
    REQUIRE(loaded.state_count() == 7);
    REQUIRE(loaded.edge_count() == expected->edge_count());
    for (EdgeId e = 0; e < loaded.edge_count(); ++e) {
      CHECK(loaded.edge(e).from == expected->edge(e).from);
      CHECK(loaded.edge(e).to == expected->edge(e).to);
      CHECK(loaded.edge(e).cost == expected->edge(e).cost);
    }
  }
}

TEST_SUITE("dimacs") {
  TEST_CASE("minimal file") {
    std::istringstream in("p sp 2 1\na 1 2 7\n");
    const DimacsGraph g = load_dimacs_gr(in);
    CHECK(g.state_count == 2);
    REQUIRE(g.arcs.size() == 1);
    CHECK(g.arcs[0] == WeightedArc{0, 1, 7});
  }

  TEST_CASE("comments, parallel arcs and order are preserved") {
    std::istringstream in("c hello\np sp 3 3\nc mid\na 2 3 4\na 1 2 1\na 1 2 1\n");
    const DimacsGraph g = load_dimacs_gr(in);
    REQUIRE(g.arcs.size() == 3);
    CHECK(g.arcs[0] == WeightedArc{1, 2, 4});
    CHECK(g.arcs[1] == WeightedArc{0, 1, 1});
    CHECK(g.arcs[2] == WeightedArc{0, 1, 1});
  }

  TEST_CASE("errors name the line") {
    const auto line_of = [](const std::string& text) -> std::size_t {
      std::istringstream in(text);
      try {
        load_dimacs_gr(in);
      } catch (const ParseError& e) {
        return e.line();
      }
      return 9999;
    };
    CHECK(line_of("c only comments\nc more\n") != 9999);
    CHECK(line_of("p sp 2 1\na 1 3 7\n") == 2);
    CHECK(line_of("p sp 2 1\na 0 2 7\n") == 2);
    CHECK(line_of("p sp 2 1\na 1 2 -7\n") == 2);
    CHECK(line_of("p sp 2 1\nc x\na 1 2\n") == 3);
    CHECK(line_of("p sp 2 2\na 1 2 7\n") != 9999);
    CHECK(line_of("a 1 2 7\np sp 2 1\n") == 1);
    CHECK(line_of("p sp 2 1\nx 1 2 3\n") == 2);
  }

  TEST_CASE("scenario graph on a single arc") {
    DimacsGraph dist{2, {{0, 1, 5}}};
    DimacsGraph time{2, {{0, 1, 7}}};
    const MultiCostGraph g4 = build_scenario_graph(dist, time, 4);
    REQUIRE(g4.edge_count() == 1);
    CHECK(g4.edge(0).cost == CostVector{5, 7, 1, 1});
    const MultiCostGraph g3 = build_scenario_graph(dist, time, 3);
    CHECK(g3.edge(0).cost == CostVector{5, 7, 1});
  }

  TEST_CASE("scenario graph k=3 is k=4 without the last attribute") {
    const auto grid = grid_graph(6, 7, 2, 1, 10, 3);
    const DimacsGraph dist = extract_layer(*grid, 0);
    const DimacsGraph time = extract_layer(*grid, 1);
    const MultiCostGraph g3 = build_scenario_graph(dist, time, 3);
    const MultiCostGraph g4 = build_scenario_graph(dist, time, 4);
    for (EdgeId e = 0; e < g3.edge_count(); ++e) {
      CostVector trimmed = g4.edge(e).cost;
      CHECK(trimmed[3] == 1);
      trimmed.pop_back();
      CHECK(trimmed == g3.edge(e).cost);
      const Edge& edge = g3.edge(e);
      CHECK(edge.cost[2] == grid->out_degree(edge.from) + grid->out_degree(edge.to));
    }
  }

  TEST_CASE("scenario graph rejects mismatched layers") {
    DimacsGraph dist{3, {{0, 1, 5}, {1, 2, 5}}};
    DimacsGraph other_n{4, {{0, 1, 5}, {1, 2, 5}}};
    DimacsGraph other_arc{3, {{0, 1, 5}, {2, 1, 5}}};
    DimacsGraph other_m{3, {{0, 1, 5}}};
    CHECK_THROWS_AS(build_scenario_graph(dist, other_n, 3), std::invalid_argument);
    CHECK_THROWS_AS(build_scenario_graph(dist, other_arc, 3), std::invalid_argument);
    CHECK_THROWS_AS(build_scenario_graph(dist, other_m, 3), std::invalid_argument);
    CHECK_THROWS_AS(build_scenario_graph(dist, dist, 5), std::invalid_argument);
  }

  TEST_CASE("layers round-trip through the text format") {
    const auto grid = grid_graph(5, 4, 2, 0, 9, 8);
    std::stringstream dist_text, time_text;
    write_dimacs_gr(dist_text, extract_layer(*grid, 0));
    write_dimacs_gr(time_text, extract_layer(*grid, 1));
    const DimacsGraph dist = load_dimacs_gr(dist_text);
    const DimacsGraph time = load_dimacs_gr(time_text);
    CHECK(dist.arcs == extract_layer(*grid, 0).arcs);
    const MultiCostGraph rebuilt = build_scenario_graph(dist, time, 3);
    const MultiCostGraph direct =
        build_scenario_graph(extract_layer(*grid, 0), extract_layer(*grid, 1), 3);
    REQUIRE(rebuilt.edge_count() == direct.edge_count());
    for (EdgeId e = 0; e < rebuilt.edge_count(); ++e) {
      CHECK(rebuilt.edge(e).from == direct.edge(e).from);
      CHECK(rebuilt.edge(e).to == direct.edge(e).to);
      CHECK(rebuilt.edge(e).cost == direct.edge(e).cost);
    }
  }
}

TEST_SUITE("edge list") {
  TEST_CASE("round trip") {
    const auto inst = random_instance(5);
    std::stringstream text;
    write_edge_list(text, inst.problem.graph());
    const MultiCostGraph back = load_edge_list(text);
    REQUIRE(back.edge_count() == inst.problem.graph().edge_count());
    for (EdgeId e = 0; e < back.edge_count(); ++e) {
      CHECK(back.edge(e).cost == inst.problem.graph().edge(e).cost);
    }
  }

  TEST_CASE("malformed input") {
    std::istringstream ragged("2\n2\n0 1 1 1\n1 0 1\n");
    CHECK_THROWS_AS(load_edge_list(ragged), ParseError);
    std::istringstream short_file("3\n2\n0 1 1 1\n");
    CHECK_THROWS_AS(load_edge_list(short_file), ParseError);
    std::istringstream bad_id("2\n1\n0 5 1 1\n");
    CHECK_THROWS(load_edge_list(bad_id));
    std::istringstream empty("3\n0\n");
    CHECK_THROWS_AS(load_edge_list(empty), ParseError);
    std::istringstream empty_ok("3\n0\n");
    CHECK(load_edge_list(empty_ok, 3).state_count() == 3);
  }
}

TEST_SUITE("problem instance") {
  TEST_CASE("upper bound template") {
    const ProblemInstance p = testing::example7({4, 4});
    CHECK(p.upper_bound_template() == CostVector{kInfiniteCost, 4, 4});
    CHECK(p.cost_dims() == 3);
  }

  TEST_CASE("validation") {
    const auto g = testing::example7_graph();
    CHECK_THROWS_AS(ProblemInstance(g, 0, 6, {4}), std::invalid_argument);
    CHECK_THROWS_AS(ProblemInstance(g, 0, 7, {4, 4}), std::invalid_argument);
    CHECK_THROWS_AS(ProblemInstance(nullptr, 0, 0, {4, 4}), std::invalid_argument);
  }
}

TEST_SUITE("tightness") {
  TEST_CASE("budget examples") {
    TightnessSpec measured{Tightness::from_percent(50), {3}, {5}};
    CHECK(compute_budget(measured, 0) == 4);
    measured.delta = Tightness(0, 1);
    CHECK(compute_budget(measured, 0) == 3);
    measured.delta = Tightness(1, 1);
    CHECK(compute_budget(measured, 0) == 5);
  }

  TEST_CASE("budget rounds down") {
    TightnessSpec measured{Tightness::from_percent(30), {0}, {5}};
    CHECK(compute_budget(measured, 0) == 1);
    measured.delta = Tightness::from_percent(90);
    CHECK(compute_budget(measured, 0) == 4);
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(Tightness(3, 2), std::invalid_argument);
    CHECK_THROWS_AS(Tightness(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(Tightness::parse_fraction("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(Tightness::parse_fraction("-0.1"), std::invalid_argument);
    CHECK_THROWS_AS(Tightness::parse_fraction("abc"), std::invalid_argument);
    TightnessSpec inverted{Tightness::from_percent(50), {6}, {5}};
    CHECK_THROWS_AS(compute_budget(inverted, 0), std::invalid_argument);
    CHECK_THROWS_AS(compute_budget(inverted, 1), std::invalid_argument);
  }

  TEST_CASE("fraction parsing") {
    const Tightness half = Tightness::parse_fraction("0.5");
    CHECK(half.numerator() * 2 == half.denominator());
    CHECK(Tightness::parse_fraction("1").value() == 1.0);
    CHECK(Tightness::parse_fraction(".25").value() == 0.25);
  }

  TEST_CASE("example pair at delta 50") {
    const auto g = testing::example7_graph();
    const auto measured = measure_tightness(*g, 0, 6, Tightness::from_percent(50));
    REQUIRE(measured.has_value());
    CHECK(measured->cost_min == std::vector<Cost>{3, 3});
    CHECK(measured->cost_max == std::vector<Cost>{5, 5});
    CHECK(compute_limits(*measured) == std::vector<Cost>{4, 4});
  }

  TEST_CASE("unreachable pair") {
    const ProblemInstance p = testing::disconnected_instance();
    CHECK_FALSE(measure_tightness(p.graph(), p.start(), p.goal()).has_value());
  }

  TEST_CASE("cost_min never exceeds cost_max on random graphs") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const auto inst = random_instance(seed);
      const auto measured = measure_tightness(inst.problem.graph(), inst.problem.start(),
                                          inst.problem.goal());
      if (!measured) continue;
      for (std::size_t r = 0; r < measured->cost_min.size(); ++r) {
        CHECK(measured->cost_min[r] <= measured->cost_max[r]);
      }
    }
  }
}
