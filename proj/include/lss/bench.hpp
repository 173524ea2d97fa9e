#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lss/io.hpp"
#include "lss/search.hpp"

namespace lss {

enum class Algorithm { lsa, lsm, lsrm, naive, oracle };

const char* to_string(Algorithm a);
Algorithm algorithm_from_string(const std::string& s);

// Runs one solver. `tau`/`horizon` apply to naive and oracle only.
SearchResult run_algorithm(Algorithm algo, const Instance& instance, const SearchParams& params,
                           std::optional<Time> tau = std::nullopt,
                           std::optional<std::int64_t> horizon = std::nullopt);

struct ExperimentConfig {
  // Map source: a grid map file, or "empty:HxW" for an obstacle-free grid.
  std::string map = "empty:16x16";
  std::string scen;      // optional; otherwise starts/goals are drawn from the seed
  std::string instance;  // optional JSON instance; replaces map/scen/K
  std::vector<Algorithm> algorithms{Algorithm::lsa};
  std::vector<int> agents{2};
  std::vector<int> k_values{10};
  std::vector<double> weights{1.0};
  std::vector<std::uint64_t> seeds{1};
  double time_limit_s = 60.0;
  std::uint64_t expansion_limit = 0;
  std::string output;
  std::string format = "csv";
  bool record_runtime = true;  // false writes 0 so repeated runs are byte-identical

  void check() const;
};

ExperimentConfig config_from_json(const nlohmann::json& j);
// Reads a JSON config; relative paths resolve against the config's directory
// and a relative "output" against $LSS_OUT_DIR when set.
ExperimentConfig load_config_file(const std::string& path);

struct RunRecord {
  std::string map;
  int agents = 0;
  int k = 0;
  std::uint64_t seed = 0;
  Algorithm algorithm = Algorithm::lsa;
  double weight = 1.0;
  Outcome outcome = Outcome::failure;
  std::optional<Time> cost;
  std::uint64_t expanded = 0;
  std::uint64_t generated = 0;
  std::uint64_t pruned = 0;
  double runtime_s = 0.0;
};

// Start/goal pairs drawn without replacement from the passable cells.
std::vector<AgentTask> random_tasks(const Graph& graph, int count, std::uint64_t seed);
GridMap resolve_map(const std::string& map);
Instance make_instance(const ExperimentConfig& config, int agents, int k, std::uint64_t seed);

// Sweep over instances x algorithms x weights in a fixed order. The OpenMP
// version runs tasks concurrently; the serial one is the reference for tests.
std::vector<RunRecord> run_suite(const ExperimentConfig& config);
std::vector<RunRecord> run_suite_serial(const ExperimentConfig& config);

struct CellSummary {
  std::string map;
  int agents = 0;
  int k = 0;
  Algorithm algorithm = Algorithm::lsa;
  double weight = 1.0;
  std::size_t runs = 0;
  double success_rate = 0.0;
  double mean_runtime_s = 0.0;   // over all runs, solved and unsolved
  double mean_expanded = 0.0;    // over all runs
};

std::vector<CellSummary> summarize(const std::vector<RunRecord>& records);

extern const char* const kCsvHeader;
void write_csv(std::ostream& os, const std::vector<RunRecord>& records);
nlohmann::json records_to_json(const std::vector<RunRecord>& records);

}  // namespace lss
