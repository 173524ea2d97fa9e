#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lss/bench.hpp"
#include "lss/naive.hpp"
#include "lss/oracle.hpp"
#include "lss/validate.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNoSolution = 1;
constexpr int kExitLimit = 2;
constexpr int kExitUsage = 64;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InstanceArgs {
  std::string map;
  std::string scen;
  std::string instance;
  int agents = 0;
  int k = 1;
  std::uint64_t seed = 1;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--map", map, "grid map file, or empty:HxW");
    cmd.add_option("--scen", scen, "scenario file for --map");
    cmd.add_option("--instance", instance, "JSON instance file");
    cmd.add_option("--agents", agents, "number of agents (with --map)");
    cmd.add_option("--k", k, "durations drawn from [1, K] (with --map)");
    cmd.add_option("--seed", seed, "seed for durations and random starts/goals");
  }

  lss::Instance load() const {
    if (!instance.empty()) {
      if (!map.empty()) throw UsageError("--instance and --map are exclusive");
      return lss::load_instance_file(instance);
    }
    if (map.empty()) throw UsageError("one of --instance or --map is required");
    if (agents < 1) throw UsageError("--agents must be at least 1 with --map");
    if (k < 1) throw UsageError("--k must be at least 1");
    lss::ExperimentConfig c;
    c.map = map;
    c.scen = scen;
    return lss::make_instance(c, agents, k, seed);
  }
};

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw UsageError("cannot write " + out);
  f << text;
}

int exit_for(lss::Outcome o) {
  switch (o) {
    case lss::Outcome::solved: return kExitOk;
    case lss::Outcome::failure: return kExitNoSolution;
    case lss::Outcome::timeout:
    case lss::Outcome::limit: return kExitLimit;
  }
  return kExitNoSolution;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Loosely synchronized search for multi-agent path finding with asynchronous actions"};
  app.require_subcommand(1);

  InstanceArgs inst;
  std::string algo = "lsa";
  double weight = 1.0;
  double time_limit = 0.0;
  double tau_s = 0.0;
  std::int64_t horizon = 0;
  std::string out;
  std::string format = "json";

  auto* solve = app.add_subcommand("solve", "solve one instance and print the solution");
  inst.add_to(*solve);
  solve->add_option("--algo", algo, "lsa | lsm | lsrm | naive | oracle")
      ->check(CLI::IsMember({"lsa", "lsm", "lsrm", "naive", "oracle"}));
  solve->add_option("--weight", weight, "heuristic inflation w >= 1")->check(CLI::Range(1.0, 1e9));
  solve->add_option("--time-limit", time_limit, "seconds, 0 = none")->check(CLI::NonNegativeNumber);
  solve->add_option("--tau", tau_s, "tick length for naive/oracle (seconds)");
  solve->add_option("--horizon", horizon, "horizon in ticks for naive/oracle");
  solve->add_option("--out", out, "output file (default stdout)");
  solve->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));

  std::string config_path;
  std::vector<std::string> algos;
  std::vector<int> agent_list, k_list;
  std::vector<double> weights;
  std::vector<std::uint64_t> seeds;
  std::string bench_format;
  lss::ExperimentConfig bench_defaults;
  auto* bench = app.add_subcommand("bench", "run a config-driven experiment suite");
  bench->add_option("--config", config_path, "JSON experiment config");
  bench->add_option("--map", bench_defaults.map, "grid map file, or empty:HxW");
  bench->add_option("--scen", bench_defaults.scen, "scenario file");
  bench->add_option("--instance", bench_defaults.instance, "JSON instance file");
  bench->add_option("--agents", agent_list, "agent counts");
  bench->add_option("--algo", algos, "algorithms");
  bench->add_option("--weight", weights, "weights");
  bench->add_option("--k", k_list, "K values");
  bench->add_option("--seed", seeds, "seeds");
  bench->add_option("--time-limit", time_limit, "seconds per run");
  bench->add_option("--out", out, "output file (default: config output, else stdout)");
  bench->add_option("--format", bench_format, "csv | json")->check(CLI::IsMember({"json", "csv"}));
  bool serial = false;
  bench->add_flag("--serial", serial, "run the suite on one thread");
  bool no_timing = false;
  bench->add_flag("--no-timing", no_timing, "write 0 for runtimes (byte-stable output)");

  std::string solution_path;
  auto* validate = app.add_subcommand("validate", "check a solution against an instance");
  inst.add_to(*validate);
  validate->add_option("--solution", solution_path, "solution JSON")->required();
  validate->add_option("--out", out, "output file (default stdout)");

  auto* oracle = app.add_subcommand("oracle", "exhaustive optimal cost on the tick lattice");
  inst.add_to(*oracle);
  oracle->add_option("--tau", tau_s, "tick length (seconds); default gcd of durations");
  oracle->add_option("--horizon", horizon, "horizon in ticks");
  oracle->add_option("--out", out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    std::optional<lss::Time> tau;
    if (tau_s > 0) tau = lss::Time::from_double(tau_s);
    std::optional<std::int64_t> hz;
    if (horizon > 0) hz = horizon;

    if (*solve) {
      lss::Instance in = inst.load();
      lss::SearchParams params;
      params.weight = weight;
      params.time_limit_s = time_limit;
      lss::Algorithm a = lss::algorithm_from_string(algo);
      lss::SearchResult r = lss::run_algorithm(a, in, params, tau, hz);
      std::ostringstream os;
      if (format == "csv") {
        lss::RunRecord rec;
        rec.map = inst.instance.empty() ? inst.map : inst.instance;
        rec.agents = in.agent_count();
        rec.k = inst.instance.empty() ? inst.k : 0;
        rec.seed = inst.seed;
        rec.algorithm = a;
        rec.weight = weight;
        rec.outcome = r.stats.outcome;
        if (r.solution) rec.cost = r.solution->cost;
        rec.expanded = r.stats.expanded;
        rec.generated = r.stats.generated;
        rec.pruned = r.stats.pruned;
        rec.runtime_s = r.stats.runtime_s;
        lss::write_csv(os, {rec});
      } else if (r.solution) {
        os << lss::solution_to_json(*r.solution).dump(2) << "\n";
      } else {
        nlohmann::json j{{"time_scale", lss::Time::kUnitsPerSecond},
                         {"algorithm", algo},
                         {"cost", nullptr},
                         {"stats", lss::stats_to_json(r.stats)},
                         {"paths", nlohmann::json::array()}};
        os << j.dump(2) << "\n";
      }
      emit(os.str(), out);
      return exit_for(r.stats.outcome);
    }

    if (*bench) {
      lss::ExperimentConfig c = config_path.empty() ? bench_defaults : lss::load_config_file(config_path);
      if (!config_path.empty()) {
        if (!bench_defaults.instance.empty()) c.instance = bench_defaults.instance;
        if (bench_defaults.map != lss::ExperimentConfig{}.map) c.map = bench_defaults.map;
        if (!bench_defaults.scen.empty()) c.scen = bench_defaults.scen;
      }
      if (!algos.empty()) {
        c.algorithms.clear();
        for (const auto& a : algos) c.algorithms.push_back(lss::algorithm_from_string(a));
      }
      if (!agent_list.empty()) c.agents = agent_list;
      if (!k_list.empty()) c.k_values = k_list;
      if (!weights.empty()) c.weights = weights;
      if (!seeds.empty()) c.seeds = seeds;
      if (time_limit > 0) c.time_limit_s = time_limit;
      if (!bench_format.empty()) c.format = bench_format;
      if (!out.empty()) c.output = out;
      if (no_timing) c.record_runtime = false;
      try {
        c.check();
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      auto records = serial ? lss::run_suite_serial(c) : lss::run_suite(c);
      std::ostringstream os;
      if (c.format == "json")
        os << lss::records_to_json(records).dump(2) << "\n";
      else
        lss::write_csv(os, records);
      emit(os.str(), c.output);
      return kExitOk;
    }

    if (*validate) {
      lss::Instance in = inst.load();
      lss::Solution sol = lss::solution_from_json(nlohmann::json::parse(lss::read_text_file(solution_path)));
      lss::ValidationReport rep = lss::validate(sol, in);
      nlohmann::json j{{"ok", rep.ok()}, {"structural", rep.structural}};
      j["conflicts"] = nlohmann::json::array();
      for (const auto& c : rep.conflicts)
        j["conflicts"].push_back({{"agents", {c.first, c.second}},
                                  {"vertex", c.vertex},
                                  {"from", c.from.count()},
                                  {"to", c.to.is_infinite() ? nlohmann::json(nullptr) : nlohmann::json(c.to.count())},
                                  {"from_open", c.from_open},
                                  {"to_open", c.to_open}});
      if (rep.structural.empty()) j["cost"] = lss::solution_cost(sol, in).count();
      emit(j.dump(2) + "\n", out);
      return rep.ok() ? kExitOk : kExitNoSolution;
    }

    if (*oracle) {
      lss::Instance in = inst.load();
      lss::Time unit = tau ? *tau : lss::common_unit(in);
      std::int64_t h = hz ? *hz : lss::default_horizon(in, unit);
      lss::OracleResult r = lss::brute_force_oracle(in, h, unit);
      const char* status = r.status == lss::OracleResult::Status::found  ? "found"
                           : r.status == lss::OracleResult::Status::none ? "none"
                                                                         : "cap_exceeded";
      nlohmann::json j{{"time_scale", lss::Time::kUnitsPerSecond},
                       {"status", status},
                       {"cost", r.cost ? nlohmann::json(r.cost->count()) : nlohmann::json(nullptr)},
                       {"tau", unit.count()},
                       {"horizon", h},
                       {"states", r.states},
                       {"horizon_hit", r.horizon_hit}};
      emit(j.dump(2) + "\n", out);
      if (r.status == lss::OracleResult::Status::found) return kExitOk;
      return r.status == lss::OracleResult::Status::none ? kExitNoSolution : kExitLimit;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const lss::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
