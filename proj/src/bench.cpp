#include "lss/bench.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <chrono>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "lss/mstar.hpp"
#include "lss/naive.hpp"
#include "lss/oracle.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lss {

const char* to_string(Algorithm a) {
  switch (a) {
    case Algorithm::lsa: return "lsa";
    case Algorithm::lsm: return "lsm";
    case Algorithm::lsrm: return "lsrm";
    case Algorithm::naive: return "naive";
    case Algorithm::oracle: return "oracle";
  }
  return "?";
}

Algorithm algorithm_from_string(const std::string& s) {
  for (Algorithm a : {Algorithm::lsa, Algorithm::lsm, Algorithm::lsrm, Algorithm::naive,
                      Algorithm::oracle})
    if (s == to_string(a)) return a;
  throw std::invalid_argument("unknown algorithm '" + s + "'");
}

SearchResult run_algorithm(Algorithm algo, const Instance& instance, const SearchParams& params,
                           std::optional<Time> tau, std::optional<std::int64_t> horizon) {
  switch (algo) {
    case Algorithm::lsa: return search(instance, params);
    case Algorithm::lsm: return search_lsm(instance, params);
    case Algorithm::lsrm: return search_lsrm(instance, params);
    case Algorithm::naive: return naive_search(instance, tau, horizon, params);
    case Algorithm::oracle: {
      auto t0 = std::chrono::steady_clock::now();
      Time unit = tau ? *tau : common_unit(instance);
      auto res = brute_force_oracle(instance, horizon ? *horizon : default_horizon(instance, unit),
                                    unit);
      SearchResult out;
      out.stats.expanded = res.states;
      out.stats.outcome = res.status == OracleResult::Status::found  ? Outcome::solved
                          : res.status == OracleResult::Status::none ? Outcome::failure
                                                                     : Outcome::limit;
      out.stats.runtime_s =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      if (res.cost) {
        Solution sol;
        sol.algorithm = "oracle";
        sol.cost = *res.cost;
        sol.tau = unit;
        sol.stats = out.stats;
        out.solution = std::move(sol);
      }
      return out;
    }
  }
  throw std::logic_error("unhandled algorithm");
}

void ExperimentConfig::check() const {
  if (algorithms.empty()) throw std::invalid_argument("config needs at least one algorithm");
  if (instance.empty() && map.empty()) throw std::invalid_argument("config needs a map or an instance");
  if (agents.empty() || seeds.empty() || weights.empty() || k_values.empty())
    throw std::invalid_argument("config sweep lists must be non-empty");
  for (int n : agents)
    if (n < 1) throw std::invalid_argument("agent counts must be positive");
  for (int k : k_values)
    if (k < 1) throw std::invalid_argument("K values must be positive");
  for (double w : weights)
    if (w < 1.0) throw std::invalid_argument("weights must be >= 1");
  if (time_limit_s <= 0) throw std::invalid_argument("time limit must be positive");
  if (format != "csv" && format != "json") throw std::invalid_argument("format must be csv or json");
  namespace fs = std::filesystem;
  for (const std::string* p : {&scen, &instance})
    if (!p->empty() && !fs::exists(*p)) throw std::invalid_argument("missing file " + *p);
  if (!map.empty() && map.rfind("empty:", 0) != 0 && instance.empty() && !fs::exists(map))
    throw std::invalid_argument("missing file " + map);
}

ExperimentConfig config_from_json(const nlohmann::json& j) {
  ExperimentConfig c;
  c.map = j.value("map", c.map);
  c.scen = j.value("scen", c.scen);
  c.instance = j.value("instance", c.instance);
  if (j.contains("algorithms")) {
    c.algorithms.clear();
    for (const auto& a : j.at("algorithms")) c.algorithms.push_back(algorithm_from_string(a));
  }
  c.agents = j.value("agents", c.agents);
  c.k_values = j.value("k", c.k_values);
  c.weights = j.value("weights", c.weights);
  c.seeds = j.value("seeds", c.seeds);
  c.time_limit_s = j.value("time_limit", c.time_limit_s);
  c.expansion_limit = j.value("expansion_limit", c.expansion_limit);
  c.output = j.value("output", c.output);
  c.format = j.value("format", c.format);
  c.record_runtime = j.value("record_runtime", c.record_runtime);
  return c;
}

ExperimentConfig load_config_file(const std::string& path) {
  namespace fs = std::filesystem;
  ExperimentConfig c = config_from_json(nlohmann::json::parse(read_text_file(path)));
  fs::path base = fs::path(path).parent_path();
  auto resolve = [&](std::string& p) {
    if (!p.empty() && p.rfind("empty:", 0) != 0 && fs::path(p).is_relative()) p = (base / p).string();
  };
  resolve(c.map);
  resolve(c.scen);
  resolve(c.instance);
  if (!c.output.empty() && fs::path(c.output).is_relative())
    if (const char* dir = std::getenv("LSS_OUT_DIR")) c.output = (fs::path(dir) / c.output).string();
  return c;
}

std::vector<AgentTask> random_tasks(const Graph& graph, int count, std::uint64_t seed) {
  if (count > graph.vertex_count()) throw std::invalid_argument("more agents than vertices");
  std::mt19937_64 rng(seed ^ 0x5bd1e995ULL);
  std::vector<VertexId> starts(graph.vertex_count()), goals(graph.vertex_count());
  std::iota(starts.begin(), starts.end(), 0);
  std::iota(goals.begin(), goals.end(), 0);
  std::shuffle(starts.begin(), starts.end(), rng);
  std::shuffle(goals.begin(), goals.end(), rng);
  std::vector<AgentTask> out;
  for (int i = 0; i < count; ++i) out.push_back({starts[i], goals[i]});
  return out;
}

GridMap resolve_map(const std::string& map) {
  if (map.rfind("empty:", 0) == 0) {
    int h = 0, w = 0;
    if (std::sscanf(map.c_str() + 6, "%dx%d", &h, &w) != 2 || h < 1 || w < 1)
      throw std::invalid_argument("bad empty grid '" + map + "'");
    return empty_grid(h, w);
  }
  return load_map_file(map);
}

Instance make_instance(const ExperimentConfig& config, int agents, int k, std::uint64_t seed) {
  if (!config.instance.empty()) return load_instance_file(config.instance);
  GridMap grid = resolve_map(config.map);
  std::vector<AgentTask> tasks = config.scen.empty() ? random_tasks(*grid.graph, agents, seed)
                                                     : load_scenario_file(config.scen, agents, grid);
  return Instance(grid.graph, gen_uniform_durations(agents, k, seed), std::move(tasks));
}

namespace {

struct Task {
  int instance;
  Algorithm algorithm;
  double weight;
};

struct Prepared {
  std::vector<Instance> instances;
  std::vector<RunRecord> heads;  // instance descriptor per instance
  std::vector<Task> tasks;
};

Prepared prepare(const ExperimentConfig& config) {
  config.check();
  Prepared p;
  const bool from_file = !config.instance.empty();
  std::string map_name = from_file ? std::filesystem::path(config.instance).filename().string()
                                   : std::filesystem::path(config.map).filename().string();
  for (int n : config.agents)
    for (int k : config.k_values)
      for (std::uint64_t seed : config.seeds) {
        p.instances.push_back(make_instance(config, n, k, seed));
        RunRecord head;
        head.map = map_name;
        head.agents = p.instances.back().agent_count();
        head.k = from_file ? 0 : k;
        head.seed = seed;
        p.heads.push_back(head);
        if (from_file) break;
      }
  for (int idx = 0; idx < static_cast<int>(p.instances.size()); ++idx)
    for (Algorithm a : config.algorithms)
      for (double w : config.weights) {
        p.tasks.push_back({idx, a, w});
        if (a == Algorithm::oracle) break;  // the oracle ignores the weight
      }
  return p;
}

RunRecord execute(const ExperimentConfig& config, const Prepared& p, const Task& t) {
  RunRecord r = p.heads[t.instance];
  r.algorithm = t.algorithm;
  r.weight = t.algorithm == Algorithm::oracle ? 1.0 : t.weight;
  SearchParams params;
  params.weight = r.weight;
  params.time_limit_s = config.time_limit_s;
  params.expansion_limit = config.expansion_limit;
  try {
    SearchResult res = run_algorithm(t.algorithm, p.instances[t.instance], params);
    r.outcome = res.stats.outcome;
    if (res.solution && r.outcome == Outcome::solved) r.cost = res.solution->cost;
    r.expanded = res.stats.expanded;
    r.generated = res.stats.generated;
    r.pruned = res.stats.pruned;
    r.runtime_s = config.record_runtime ? res.stats.runtime_s : 0.0;
  } catch (const std::exception&) {
    r.outcome = Outcome::failure;
    r.cost.reset();
  }
  return r;
}

}  // namespace

std::vector<RunRecord> run_suite(const ExperimentConfig& config) {
  Prepared p = prepare(config);
  std::vector<RunRecord> out(p.tasks.size());
  const auto count = static_cast<std::int64_t>(p.tasks.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t k = 0; k < count; ++k) out[k] = execute(config, p, p.tasks[k]);
  return out;
}

std::vector<RunRecord> run_suite_serial(const ExperimentConfig& config) {
  Prepared p = prepare(config);
  std::vector<RunRecord> out;
  out.reserve(p.tasks.size());
  for (const Task& t : p.tasks) out.push_back(execute(config, p, t));
  return out;
}

std::vector<CellSummary> summarize(const std::vector<RunRecord>& records) {
  std::map<std::tuple<std::string, int, int, int, double>, CellSummary> cells;
  for (const auto& r : records) {
    auto key = std::make_tuple(r.map, r.agents, r.k, static_cast<int>(r.algorithm), r.weight);
    auto& c = cells[key];
    c.map = r.map;
    c.agents = r.agents;
    c.k = r.k;
    c.algorithm = r.algorithm;
    c.weight = r.weight;
    c.runs += 1;
    c.success_rate += r.outcome == Outcome::solved ? 1.0 : 0.0;
    c.mean_runtime_s += r.runtime_s;
    c.mean_expanded += static_cast<double>(r.expanded);
  }
  std::vector<CellSummary> out;
  for (auto& [key, c] : cells) {
    c.success_rate /= static_cast<double>(c.runs);
    c.mean_runtime_s /= static_cast<double>(c.runs);
    c.mean_expanded /= static_cast<double>(c.runs);
    out.push_back(c);
  }
  return out;
}

const char* const kCsvHeader =
    "map,agents,k,seed,algorithm,weight,outcome,cost,expanded,generated,pruned,runtime_s";

void write_csv(std::ostream& os, const std::vector<RunRecord>& records) {
  os << kCsvHeader << '\n';
  char buf[64];
  for (const auto& r : records) {
    os << r.map << ',' << r.agents << ',' << r.k << ',' << r.seed << ',' << to_string(r.algorithm)
       << ',';
    std::snprintf(buf, sizeof buf, "%.2f", r.weight);
    os << buf << ',' << to_string(r.outcome) << ',';
    if (r.cost) os << r.cost->count();
    std::snprintf(buf, sizeof buf, "%.3f", r.runtime_s);
    os << ',' << r.expanded << ',' << r.generated << ',' << r.pruned << ',' << buf << '\n';
  }
}

nlohmann::json records_to_json(const std::vector<RunRecord>& records) {
  nlohmann::json j;
  j["time_scale"] = Time::kUnitsPerSecond;
  j["records"] = nlohmann::json::array();
  for (const auto& r : records) {
    nlohmann::json e{{"map", r.map},
                     {"agents", r.agents},
                     {"k", r.k},
                     {"seed", r.seed},
                     {"algorithm", to_string(r.algorithm)},
                     {"weight", r.weight},
                     {"outcome", to_string(r.outcome)},
                     {"expanded", r.expanded},
                     {"generated", r.generated},
                     {"pruned", r.pruned},
                     {"runtime_s", r.runtime_s}};
    e["cost"] = r.cost ? nlohmann::json(r.cost->count()) : nlohmann::json(nullptr);
    j["records"].push_back(e);
  }
  j["summary"] = nlohmann::json::array();
  for (const auto& c : summarize(records))
    j["summary"].push_back({{"map", c.map},
                            {"agents", c.agents},
                            {"k", c.k},
                            {"algorithm", to_string(c.algorithm)},
                            {"weight", c.weight},
                            {"runs", c.runs},
                            {"success_rate", c.success_rate},
                            {"mean_runtime_s", c.mean_runtime_s},
                            {"mean_expanded", c.mean_expanded}});
  return j;
}

}  // namespace lss
