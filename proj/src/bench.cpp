#include "rcsp/bench.hpp"

#include "rcsp/baseline.hpp"
#include "rcsp/enhanced.hpp"
#include "rcsp/graph_io.hpp"
#include "rcsp/oracle.hpp"
#include "rcsp/parallel.hpp"
#include "rcsp/tightness.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

namespace rcsp {

namespace {

bool skip_line(const std::string& line) {
  const auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

template <typename T>
T read_field(std::istringstream& in, std::size_t line_no, const char* name) {
  T value{};
  if (!(in >> value)) throw ParseError(line_no, std::string("expected ") + name);
  return value;
}

void expect_end(std::istringstream& in, std::size_t line_no) {
  std::string rest;
  if (in >> rest) throw ParseError(line_no, "unexpected trailing token '" + rest + "'");
}

std::string format_resources(const std::vector<CostVector>& joined) {
  std::string out;
  for (std::size_t j = 0; j < joined.size(); ++j) {
    if (j > 0) out += '|';
    for (std::size_t i = 1; i < joined[j].size(); ++i) {
      if (i > 1) out += ':';
      out += std::to_string(joined[j][i]);
    }
  }
  return out;
}

}  // namespace

std::vector<std::pair<StateId, StateId>> read_pairs(std::istream& in) {
  std::vector<std::pair<StateId, StateId>> pairs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skip_line(line)) continue;
    std::istringstream fields(line);
    const auto start = read_field<StateId>(fields, line_no, "start id");
    const auto goal = read_field<StateId>(fields, line_no, "goal id");
    expect_end(fields, line_no);
    pairs.emplace_back(start, goal);
  }
  return pairs;
}

std::vector<InstanceRecord> generate_instances(const MultiCostGraph& graph,
                                               const std::vector<std::pair<StateId, StateId>>& pairs,
                                               const std::vector<unsigned>& delta_percents) {
  for (unsigned d : delta_percents) {
    if (d > 100) throw std::invalid_argument("delta percent above 100: " + std::to_string(d));
  }
  std::vector<InstanceRecord> records;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto [start, goal] = pairs[p];
    if (start >= graph.state_count() || goal >= graph.state_count()) {
      throw std::invalid_argument("pair " + std::to_string(p) + " names a state outside the graph");
    }
    const auto measured = measure_tightness(graph, start, goal);
    for (unsigned d : delta_percents) {
      InstanceRecord r;
      r.pair_id = p;
      r.start = start;
      r.goal = goal;
      r.delta_percent = d;
      r.cost_dims = graph.cost_dims();
      r.reachable = measured.has_value();
      if (measured) {
        TightnessSpec at_delta = *measured;
        at_delta.delta = Tightness::from_percent(d);
        r.limits = compute_limits(at_delta);
      }
      records.push_back(std::move(r));
    }
  }
  return records;
}

void write_instances(std::ostream& out, const std::vector<InstanceRecord>& records) {
  out << "# pair_id start goal delta_pct k limits...\n";
  for (const auto& r : records) {
    out << r.pair_id << ' ' << r.start << ' ' << r.goal << ' ' << r.delta_percent << ' '
        << r.cost_dims;
    if (!r.reachable) {
      out << " unreachable";
    } else {
      for (Cost c : r.limits) out << ' ' << c;
    }
    out << '\n';
  }
}

std::vector<InstanceRecord> read_instances(std::istream& in) {
  std::vector<InstanceRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skip_line(line)) continue;
    std::istringstream fields(line);
    InstanceRecord r;
    r.pair_id = read_field<std::size_t>(fields, line_no, "pair id");
    r.start = read_field<StateId>(fields, line_no, "start id");
    r.goal = read_field<StateId>(fields, line_no, "goal id");
    r.delta_percent = read_field<unsigned>(fields, line_no, "delta percent");
    r.cost_dims = read_field<std::size_t>(fields, line_no, "cost dimension count");
    if (r.cost_dims < 2) throw ParseError(line_no, "cost dimension count must be at least 2");
    std::string token;
    if (!(fields >> token)) throw ParseError(line_no, "expected limits or 'unreachable'");
    if (token == "unreachable") {
      r.reachable = false;
    } else {
      std::istringstream first(token);
      r.limits.push_back(read_field<Cost>(first, line_no, "limit"));
      expect_end(first, line_no);
      for (std::size_t i = 2; i < r.cost_dims; ++i) {
        r.limits.push_back(read_field<Cost>(fields, line_no, "limit"));
      }
    }
    expect_end(fields, line_no);
    records.push_back(std::move(r));
  }
  return records;
}

std::string_view to_string(Algorithm a) noexcept {
  switch (a) {
    case Algorithm::kRcbda: return "rcbda";
    case Algorithm::kRcebda: return "rcebda";
    case Algorithm::kRcebdaPar: return "rcebda-par";
    case Algorithm::kOracle: return "oracle";
  }
  return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept {
  for (Algorithm a : {Algorithm::kRcbda, Algorithm::kRcebda, Algorithm::kRcebdaPar,
                      Algorithm::kOracle}) {
    if (to_string(a) == name) return a;
  }
  return std::nullopt;
}

RunOutcome run_algorithm(Algorithm algorithm, const ProblemInstance& problem,
                         const SearchConfig& config) {
  RunOutcome out;
  const auto t0 = std::chrono::steady_clock::now();
  switch (algorithm) {
    case Algorithm::kRcbda: {
      const BaselineResult r = solve_rcbda(problem, config);
      out.status = r.status;
      out.cost1 = r.cost1;
      out.stats = r.stats;
      break;
    }
    case Algorithm::kRcebda:
    case Algorithm::kRcebdaPar: {
      const EnhancedResult r = algorithm == Algorithm::kRcebda ? solve_rcebda(problem, config)
                                                               : solve_parallel(problem, config);
      out.status = r.status;
      out.cost1 = r.cost1;
      out.joined = r.joined_costs();
      out.stats = r.stats;
      break;
    }
    case Algorithm::kOracle: {
      OracleAnswer r = oracle_answer(problem);
      out.status = r.status;
      out.cost1 = r.cost1;
      out.joined = std::move(r.optimal_set);
      break;
    }
  }
  out.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

BenchSummary summarize(std::string map_name, Algorithm algorithm,
                       const std::vector<double>& seconds, const std::vector<bool>& solved,
                       double timeout_seconds) {
  BenchSummary s;
  s.map_name = std::move(map_name);
  s.algorithm = algorithm;
  s.total = seconds.size();
  if (s.total == 0) return s;
  double sum = 0;
  s.t_min = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < seconds.size(); ++i) {
    const double t = solved[i] ? seconds[i] : timeout_seconds;
    if (solved[i]) ++s.solved;
    s.t_min = std::min(s.t_min, t);
    s.t_max = std::max(s.t_max, t);
    sum += t;
  }
  s.t_avg = sum / static_cast<double>(s.total);
  return s;
}

std::vector<BenchSummary> run_bench(const std::shared_ptr<const MultiCostGraph>& graph,
                                    const std::vector<InstanceRecord>& records,
                                    const BenchOptions& options, std::ostream& csv) {
  csv << kBenchCsvHeader << '\n';
  const std::size_t algo_count = options.algorithms.size();
  std::vector<std::vector<double>> seconds(algo_count);
  std::vector<std::vector<bool>> solved(algo_count);

  SearchConfig config;
  config.timeout = std::chrono::duration<double>(options.timeout_seconds);

  for (const auto& record : records) {
    if (!record.reachable) continue;
    for (std::size_t a = 0; a < algo_count; ++a) {
      const Algorithm algo = options.algorithms[a];
      std::string status;
      RunOutcome out;
      try {
        if (record.cost_dims != graph->cost_dims()) {
          throw std::invalid_argument("record cost dimension count differs from the graph");
        }
        const ProblemInstance problem(graph, record.start, record.goal, record.limits);
        out = run_algorithm(algo, problem, config);
        status = std::string(to_string(out.status));
      } catch (const std::exception&) {
        status = "error";
        out = RunOutcome{};
      }
      const bool ok = status == "optimal" || status == "infeasible";
      seconds[a].push_back(out.runtime_ms / 1000.0);
      solved[a].push_back(ok);

      csv << options.map_name << ',' << to_string(algo) << ',' << record.pair_id << ','
          << record.delta_percent << ',' << record.cost_dims << ',' << status << ',';
      if (out.cost1 != kInfiniteCost) csv << out.cost1;
      csv << ',' << format_resources(out.joined) << ',' << std::fixed << std::setprecision(3)
          << out.runtime_ms << std::defaultfloat << ','
          << out.stats.of(Direction::kForward).expansions << ','
          << out.stats.of(Direction::kBackward).expansions << ',' << out.stats.total_generated()
          << ',' << out.stats.total_matches() << ',' << out.joined.size() << '\n';
    }
  }

  std::vector<BenchSummary> summaries;
  if (seconds.empty() || seconds.front().empty()) return summaries;
  for (std::size_t a = 0; a < algo_count; ++a) {
    summaries.push_back(summarize(options.map_name, options.algorithms[a], seconds[a], solved[a],
                                  options.timeout_seconds));
    const auto& s = summaries.back();
    csv << "# summary map=" << s.map_name << " algo=" << to_string(s.algorithm)
        << " solved=" << s.solved << '/' << s.total << std::fixed << std::setprecision(3)
        << " t_min=" << s.t_min << " t_avg=" << s.t_avg << " t_max=" << s.t_max
        << std::defaultfloat << '\n';
  }
  return summaries;
}

}  // namespace rcsp
