#include "commands.hpp"

#include "rcsp/baseline.hpp"
#include "rcsp/bench.hpp"
#include "rcsp/enhanced.hpp"
#include "rcsp/generators.hpp"
#include "rcsp/graph_io.hpp"
#include "rcsp/oracle.hpp"
#include "rcsp/parallel.hpp"
#include "rcsp/tightness.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

namespace rcsp::cli {

namespace {

using nlohmann::json;

/// Reported for invalid flag combinations detected after parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double default_timeout_seconds() {
  if (const char* env = std::getenv("RCSP_TIMEOUT")) {
    try {
      const double v = std::stod(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  return 3600;
}

struct GraphSource {
  std::string edge_list;
  std::string dimacs_dist;
  std::string dimacs_time;
  std::size_t k = 3;

  void add_options(CLI::App& app) {
    auto* graph = app.add_option("--graph", edge_list, "Edge-list graph file");
    auto* dist = app.add_option("--dimacs-dist", dimacs_dist, "DIMACS distance layer (.gr)");
    auto* time = app.add_option("--dimacs-time", dimacs_time, "DIMACS time layer (.gr)");
    app.add_option("--k", k, "Cost attributes for DIMACS input")
        ->check(CLI::IsMember({3, 4}))
        ->capture_default_str();
    graph->excludes(dist)->excludes(time);
    dist->needs(time);
    time->needs(dist);
  }

  std::shared_ptr<const MultiCostGraph> load() const {
    if (!edge_list.empty()) return std::make_shared<const MultiCostGraph>(load_edge_list_file(edge_list));
    if (dimacs_dist.empty()) throw UsageError("one of --graph or --dimacs-dist/--dimacs-time is required");
    return std::make_shared<const MultiCostGraph>(build_scenario_graph(
        load_dimacs_gr_file(dimacs_dist), load_dimacs_gr_file(dimacs_time), k));
  }

  std::string map_name() const {
    return std::filesystem::path(edge_list.empty() ? dimacs_dist : edge_list).stem().string();
  }
};

std::vector<Cost> parse_cost_list(const std::string& text) {
  std::vector<Cost> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw UsageError("expected comma-separated non-negative integers, got '" + text + "'");
    }
    values.push_back(std::stoull(item));
  }
  if (values.empty()) throw UsageError("empty list");
  return values;
}

std::vector<unsigned> parse_percent_list(const std::string& text) {
  std::vector<unsigned> out;
  for (Cost v : parse_cost_list(text)) {
    if (v > 100) throw UsageError("delta percent above 100: " + std::to_string(v));
    out.push_back(static_cast<unsigned>(v));
  }
  return out;
}

json cost_json(Cost c) { return c == kInfiniteCost ? json(nullptr) : json(c); }

json vector_json(const CostVector& v) {
  json a = json::array();
  for (Cost c : v) a.push_back(cost_json(c));
  return a;
}

json stats_json(const SearchStats& s) {
  json j;
  for (Direction d : kDirections) {
    const DirectionStats& ds = s.of(d);
    j[std::string(to_string(d))] = {{"extractions", ds.extractions},
                                    {"expansions", ds.expansions},
                                    {"generated", ds.generated},
                                    {"dominance_checks", ds.dominance_checks},
                                    {"matches", ds.matches},
                                    {"quick_prunes", ds.quick_prunes},
                                    {"dominance_prunes", ds.dominance_prunes},
                                    {"bound_prunes", ds.bound_prunes},
                                    {"perimeter_blocked", ds.perimeter_blocked}};
  }
  j["killed_states"] = s.killed_states;
  j["init_seconds"] = s.init_seconds;
  j["search_seconds"] = s.search_seconds;
  return j;
}

json trace_json(const TraceEvent& e) {
  return {{"iteration", e.iteration},     {"serial", e.serial},
          {"direction", to_string(e.direction)}, {"state", e.state},
          {"g", vector_json(e.g)},        {"f", vector_json(e.f)},
          {"action", to_string(e.action)}, {"best_cost1", cost_json(e.best_cost1)},
          {"solutions", e.solutions}};
}

int exit_code_for(SolveStatus s) {
  switch (s) {
    case SolveStatus::kOptimal: return kExitOptimal;
    case SolveStatus::kInfeasible: return kExitInfeasible;
    case SolveStatus::kTimeout: return kExitTimeout;
  }
  return kExitUsage;
}

std::ostream& open_output(const std::string& path, std::ofstream& file, std::ostream& fallback) {
  if (path.empty() || path == "-") return fallback;
  file.open(path);
  if (!file) throw std::runtime_error("cannot write " + path);
  return file;
}

struct SolveArgs {
  GraphSource source;
  StateId start = 0;
  StateId goal = 0;
  std::string limits;
  unsigned delta = 0;
  std::string algo = "rcebda";
  double timeout = 0;
  std::string trace;
  std::string format = "json";
  std::optional<std::size_t> critical;
  bool reduction = true;
};

int run_solve(const SolveArgs& a, const CLI::App& cmd, std::ostream& out) {
  const auto algorithm = parse_algorithm(a.algo);
  if (!algorithm) throw UsageError("unknown --algo " + a.algo);
  const bool has_limits = cmd.count("--limits") > 0;
  const bool has_delta = cmd.count("--delta") > 0;
  if (has_limits == has_delta) throw UsageError("exactly one of --limits or --delta is required");
  if (!a.trace.empty() && *algorithm != Algorithm::kRcebda) {
    throw UsageError("--trace is only supported with --algo rcebda");
  }

  const auto graph = a.source.load();
  std::vector<Cost> limits;
  if (has_limits) {
    limits = parse_cost_list(a.limits);
  } else {
    if (a.start >= graph->state_count() || a.goal >= graph->state_count()) {
      throw std::invalid_argument("start or goal outside the graph");
    }
    const auto measured = measure_tightness(*graph, a.start, a.goal, Tightness::from_percent(a.delta));
    if (!measured) {
      limits.assign(graph->cost_dims() - 1, 0);
    } else {
      limits = compute_limits(*measured);
    }
  }
  const ProblemInstance problem(graph, a.start, a.goal, limits);

  SearchConfig config;
  config.critical_index = a.critical;
  config.timeout = std::chrono::duration<double>(a.timeout > 0 ? a.timeout : default_timeout_seconds());
  if (cmd.count("--reduction") > 0) config.reduce_network = a.reduction;

  std::ofstream trace_file;
  if (!a.trace.empty()) {
    trace_file.open(a.trace);
    if (!trace_file) throw std::runtime_error("cannot write " + a.trace);
    config.trace = [&trace_file](const TraceEvent& e) { trace_file << trace_json(e).dump() << '\n'; };
  }

  json result;
  result["algo"] = to_string(*algorithm);
  result["start"] = a.start;
  result["goal"] = a.goal;
  result["limits"] = limits;
  SolveStatus status = SolveStatus::kInfeasible;
  std::vector<std::string> text_lines;

  if (*algorithm == Algorithm::kRcebda || *algorithm == Algorithm::kRcebdaPar) {
    const EnhancedResult r = *algorithm == Algorithm::kRcebda ? solve_rcebda(problem, config)
                                                              : solve_parallel(problem, config);
    status = r.status;
    result["cost1"] = cost_json(r.cost1);
    json solutions = json::array();
    for (const SolutionPath& p : reconstruct_paths(r, problem)) {
      solutions.push_back({{"cost", vector_json(p.cost)}, {"path", p.states}});
      std::ostringstream line;
      line << "solution " << p.cost << " path";
      for (StateId s : p.states) line << ' ' << s;
      text_lines.push_back(line.str());
    }
    result["solutions"] = solutions;
    result["stats"] = stats_json(r.stats);
  } else if (*algorithm == Algorithm::kRcbda) {
    const BaselineResult r = solve_rcbda(problem, config);
    status = r.status;
    result["cost1"] = cost_json(r.cost1);
    result["stats"] = stats_json(r.stats);
  } else {
    const OracleAnswer r = oracle_answer(problem);
    status = r.status;
    result["cost1"] = cost_json(r.cost1);
    json solutions = json::array();
    for (const CostVector& c : r.optimal_set) {
      solutions.push_back({{"cost", vector_json(c)}});
      std::ostringstream line;
      line << "solution " << c;
      text_lines.push_back(line.str());
    }
    result["solutions"] = solutions;
  }
  result["status"] = to_string(status);

  if (a.format == "json") {
    out << result.dump(2) << '\n';
  } else {
    out << "status " << to_string(status) << '\n';
    out << "cost1 " << (result["cost1"].is_null() ? "inf" : result["cost1"].dump()) << '\n';
    for (const auto& line : text_lines) out << line << '\n';
    if (result.contains("stats")) {
      const json& s = result["stats"];
      out << "expansions " << s["forward"]["expansions"] << ' ' << s["backward"]["expansions"]
          << '\n';
      out << "killed_states " << s["killed_states"] << '\n';
    }
  }
  return exit_code_for(status);
}

struct GenArgs {
  GraphSource source;
  std::string pairs;
  std::string deltas = "10,30,50,70,90";
  std::string out;
};

int run_gen(const GenArgs& a, std::ostream& out) {
  const auto graph = a.source.load();
  std::ifstream pairs_file(a.pairs);
  if (!pairs_file) throw std::runtime_error("cannot read " + a.pairs);
  const auto records = generate_instances(*graph, read_pairs(pairs_file), parse_percent_list(a.deltas));
  std::ofstream file;
  write_instances(open_output(a.out, file, out), records);
  return 0;
}

struct BenchArgs {
  GraphSource source;
  std::string instances;
  std::string algos = "rcbda,rcebda";
  double timeout = 0;
  std::string map;
  std::string out;
};

int run_bench_cmd(const BenchArgs& a, std::ostream& out) {
  BenchOptions options;
  options.algorithms.clear();
  std::stringstream list(a.algos);
  std::string name;
  while (std::getline(list, name, ',')) {
    const auto algo = parse_algorithm(name);
    if (!algo) throw UsageError("unknown algorithm '" + name + "'");
    options.algorithms.push_back(*algo);
  }
  if (options.algorithms.empty()) throw UsageError("--algos is empty");
  options.timeout_seconds = a.timeout > 0 ? a.timeout : default_timeout_seconds();
  options.map_name = a.map.empty() ? a.source.map_name() : a.map;

  std::ifstream records_file(a.instances);
  if (!records_file) throw std::runtime_error("cannot read " + a.instances);
  const auto records = read_instances(records_file);
  const auto graph = a.source.load();
  std::ofstream file;
  run_bench(graph, records, options, open_output(a.out, file, out));
  return 0;
}

struct GridArgs {
  std::size_t rows = 150;
  std::size_t cols = 150;
  std::size_t k = 3;
  Cost min_cost = 1;
  Cost max_cost = 10;
  std::uint64_t seed = 1;
  std::string out;
  std::size_t pair_count = 0;
  std::string pairs_out;
};

int run_grid(const GridArgs& a, std::ostream& out) {
  if (a.rows == 0 || a.cols == 0) throw UsageError("--rows and --cols must be positive");
  if (a.min_cost > a.max_cost) throw UsageError("--min-cost exceeds --max-cost");
  const auto graph = grid_graph(a.rows, a.cols, a.k, a.min_cost, a.max_cost, a.seed);
  std::ofstream file;
  write_edge_list(open_output(a.out, file, out), *graph);
  if (a.pair_count > 0) {
    if (a.pairs_out.empty()) throw UsageError("--pairs needs --pairs-out");
    std::ofstream pairs(a.pairs_out);
    if (!pairs) throw std::runtime_error("cannot write " + a.pairs_out);
    pairs << "# start goal, seed " << a.seed << '\n';
    for (const auto& [start, goal] : random_pairs(graph->state_count(), a.pair_count, a.seed)) {
      pairs << start << ' ' << goal << '\n';
    }
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Resource-constrained shortest paths by bidirectional A*", "rcsp"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Solve one start/goal query");
  solve.source.add_options(*solve_cmd);
  solve_cmd->add_option("--start", solve.start, "Start state id")->required();
  solve_cmd->add_option("--goal", solve.goal, "Goal state id")->required();
  auto* limits_opt = solve_cmd->add_option("--limits", solve.limits, "Resource limits r1,r2[,r3]");
  auto* delta_opt = solve_cmd->add_option("--delta", solve.delta, "Tightness in percent")
                        ->check(CLI::Range(0u, 100u));
  limits_opt->excludes(delta_opt);
  solve_cmd->add_option("--algo", solve.algo, "rcbda | rcebda | rcebda-par | oracle")
      ->capture_default_str();
  solve_cmd->add_option("--timeout", solve.timeout, "Seconds (default: $RCSP_TIMEOUT or 3600)");
  solve_cmd->add_option("--trace", solve.trace, "Write one JSON line per extraction (rcebda)");
  solve_cmd->add_option("--format", solve.format, "json | text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  solve_cmd->add_option("--critical", solve.critical, "Critical resource cost index (1..k-1)");
  solve_cmd->add_option("--reduction", solve.reduction, "Network reduction on/off");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write benchmark instance records");
  gen.source.add_options(*gen_cmd);
  gen_cmd->add_option("--pairs", gen.pairs, "File of 'start goal' lines")->required();
  gen_cmd->add_option("--deltas", gen.deltas, "Tightness percents")->capture_default_str();
  gen_cmd->add_option("--out", gen.out, "Output file (default stdout)");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run algorithms over instance records, emit CSV");
  bench.source.add_options(*bench_cmd);
  bench_cmd->add_option("--instances", bench.instances, "Records written by gen")->required();
  bench_cmd->add_option("--algos", bench.algos, "Comma-separated algorithms")->capture_default_str();
  bench_cmd->add_option("--timeout", bench.timeout, "Seconds per run (default: $RCSP_TIMEOUT or 3600)");
  bench_cmd->add_option("--map", bench.map, "Map name for the CSV (default: graph file stem)");
  bench_cmd->add_option("--out", bench.out, "Output file (default stdout)");

  GridArgs grid;
  auto* grid_cmd = app.add_subcommand("grid", "Write a random 4-connected grid graph");
  grid_cmd->add_option("--rows", grid.rows)->capture_default_str();
  grid_cmd->add_option("--cols", grid.cols)->capture_default_str();
  grid_cmd->add_option("--k", grid.k)->check(CLI::Range(2, 8))->capture_default_str();
  grid_cmd->add_option("--min-cost", grid.min_cost)->capture_default_str();
  grid_cmd->add_option("--max-cost", grid.max_cost)->capture_default_str();
  grid_cmd->add_option("--seed", grid.seed)->capture_default_str();
  grid_cmd->add_option("--out", grid.out, "Output file (default stdout)");
  grid_cmd->add_option("--pairs", grid.pair_count, "Also draw this many random pairs");
  grid_cmd->add_option("--pairs-out", grid.pairs_out, "File for the drawn pairs");

  const auto active_help = [&]() -> std::string {
    for (CLI::App* sub : {solve_cmd, gen_cmd, bench_cmd, grid_cmd}) {
      if (sub->parsed()) return sub->help();
    }
    return app.help();
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << active_help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << active_help();
    return kExitUsage;
  }

  try {
    if (solve_cmd->parsed()) return run_solve(solve, *solve_cmd, out);
    if (gen_cmd->parsed()) return run_gen(gen, out);
    if (bench_cmd->parsed()) return run_bench_cmd(bench, out);
    return run_grid(grid, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << active_help();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace rcsp::cli
