#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "lss/bench.hpp"

using namespace lss;

namespace {

ExperimentConfig small_config() {
  ExperimentConfig c;
  c.map = "empty:4x4";
  c.algorithms = {Algorithm::lsa, Algorithm::naive};
  c.agents = {2};
  c.k_values = {3};
  c.seeds = {1, 2, 3};
  c.time_limit_s = 30;
  return c;
}

std::string csv(const std::vector<RunRecord>& r) {
  std::ostringstream os;
  write_csv(os, r);
  return os.str();
}

bool same_except_runtime(const RunRecord& a, const RunRecord& b) {
  return a.map == b.map && a.agents == b.agents && a.k == b.k && a.seed == b.seed &&
         a.algorithm == b.algorithm && a.weight == b.weight && a.outcome == b.outcome &&
         a.cost == b.cost && a.expanded == b.expanded && a.generated == b.generated &&
         a.pruned == b.pruned;
}

}  // namespace

TEST(Suite, RecordCountIsProduct) {
  auto records = run_suite(small_config());
  ASSERT_EQ(records.size(), 6u);
  EXPECT_EQ(records[0].algorithm, Algorithm::lsa);
  EXPECT_EQ(records[1].algorithm, Algorithm::naive);
  EXPECT_EQ(records[0].seed, 1u);
  EXPECT_EQ(records[5].seed, 3u);
  for (const auto& r : records) {
    EXPECT_EQ(r.outcome, Outcome::solved);
    EXPECT_TRUE(r.cost.has_value());
  }
  EXPECT_EQ(records[0].cost, records[1].cost);
}

TEST(Suite, CostOnlyWhenSolved) {
  ExperimentConfig c = small_config();
  c.map = "empty:8x8";
  c.agents = {5};
  c.k_values = {40};
  c.algorithms = {Algorithm::naive};
  c.seeds = {4};
  c.expansion_limit = 20;
  auto records = run_suite(c);
  ASSERT_EQ(records.size(), 1u);
  EXPECT_EQ(records[0].outcome, Outcome::limit);
  EXPECT_FALSE(records[0].cost);
}

TEST(Suite, TimeoutRecorded) {
  ExperimentConfig c = small_config();
  c.map = "empty:10x10";
  c.agents = {7};
  c.k_values = {100};
  c.algorithms = {Algorithm::naive};
  c.seeds = {4};
  c.time_limit_s = 0.05;
  auto records = run_suite(c);
  ASSERT_EQ(records.size(), 1u);
  EXPECT_EQ(records[0].outcome, Outcome::timeout);
  EXPECT_FALSE(records[0].cost);
}

TEST(Suite, ParallelMatchesSerial) {
  ExperimentConfig c = small_config();
  c.algorithms = {Algorithm::lsa, Algorithm::lsm, Algorithm::lsrm, Algorithm::naive, Algorithm::oracle};
  c.agents = {2, 3};
  c.weights = {1.0, 1.5};
  auto par = run_suite(c);
  auto ser = run_suite_serial(c);
  ASSERT_EQ(par.size(), ser.size());
  for (std::size_t k = 0; k < par.size(); ++k) EXPECT_TRUE(same_except_runtime(par[k], ser[k])) << k;
}

TEST(Suite, ByteIdenticalCsvWithoutTiming) {
  ExperimentConfig c = small_config();
  c.record_runtime = false;
  EXPECT_EQ(csv(run_suite(c)), csv(run_suite(c)));
}

TEST(Suite, CsvLayout) {
  auto records = run_suite(small_config());
  std::istringstream in(csv(records));
  std::string header, first;
  std::getline(in, header);
  std::getline(in, first);
  EXPECT_EQ(header, kCsvHeader);
  EXPECT_EQ(std::count(first.begin(), first.end(), ','), 11);
  EXPECT_EQ(first.rfind("empty:4x4,2,3,1,lsa,1.00,solved,", 0), 0u) << first;
  std::string runtime = first.substr(first.rfind(',') + 1);
  EXPECT_EQ(runtime.size() - runtime.find('.') - 1, 3u);
}

TEST(Suite, OracleIgnoresWeight) {
  ExperimentConfig c = small_config();
  c.algorithms = {Algorithm::oracle, Algorithm::lsa};
  c.weights = {1.0, 1.2};
  c.seeds = {1};
  auto records = run_suite(c);
  ASSERT_EQ(records.size(), 3u);
  EXPECT_EQ(records[0].algorithm, Algorithm::oracle);
  EXPECT_EQ(records[1].weight, 1.0);
  EXPECT_EQ(records[2].weight, 1.2);
}

TEST(Summary, AveragesOverAllRuns) {
  std::vector<RunRecord> r(4);
  for (auto& x : r) {
    x.map = "m";
    x.agents = 2;
    x.k = 10;
  }
  r[0].outcome = Outcome::solved;
  r[0].runtime_s = 1.0;
  r[0].expanded = 10;
  r[1].outcome = Outcome::timeout;
  r[1].runtime_s = 3.0;
  r[1].expanded = 30;
  r[2].algorithm = r[3].algorithm = Algorithm::naive;
  r[2].outcome = r[3].outcome = Outcome::solved;
  auto s = summarize(r);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0].algorithm, Algorithm::lsa);
  EXPECT_DOUBLE_EQ(s[0].success_rate, 0.5);
  EXPECT_DOUBLE_EQ(s[0].mean_runtime_s, 2.0);
  EXPECT_DOUBLE_EQ(s[0].mean_expanded, 20.0);
  EXPECT_DOUBLE_EQ(s[1].success_rate, 1.0);
}

TEST(Config, ParsesJsonAndValidates) {
  auto j = nlohmann::json::parse(R"({"map": "empty:3x3", "algorithms": ["lsa", "oracle"],
                                     "agents": [2], "k": [1, 2], "weights": [1.0],
                                     "seeds": [5], "time_limit": 2.5})");
  ExperimentConfig c = config_from_json(j);
  EXPECT_EQ(c.algorithms.size(), 2u);
  EXPECT_EQ(c.k_values, (std::vector<int>{1, 2}));
  EXPECT_DOUBLE_EQ(c.time_limit_s, 2.5);
  EXPECT_NO_THROW(c.check());
  c.algorithms.clear();
  EXPECT_THROW(c.check(), std::invalid_argument);
  EXPECT_THROW(config_from_json(nlohmann::json::parse(R"({"algorithms": ["astar"]})")), std::invalid_argument);
  ExperimentConfig bad;
  bad.map = "/nonexistent.map";
  EXPECT_THROW(bad.check(), std::invalid_argument);
  bad = ExperimentConfig{};
  bad.time_limit_s = 0;
  EXPECT_THROW(bad.check(), std::invalid_argument);
}

TEST(Config, OutputDirectoryFromEnvironment) {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "lss_cfg_test";
  fs::create_directories(dir);
  std::ofstream(dir / "cfg.json") << R"({"map": "empty:3x3", "output": "runs.csv"})";
  ::setenv("LSS_OUT_DIR", "/tmp/lss_out", 1);
  ExperimentConfig c = load_config_file((dir / "cfg.json").string());
  ::unsetenv("LSS_OUT_DIR");
  EXPECT_EQ(c.output, "/tmp/lss_out/runs.csv");
}

TEST(Config, InstanceFileSweep) {
  ExperimentConfig c;
  c.instance = std::string(LSS_TEST_DATA) + "/fcyc_12.json";
  c.algorithms = {Algorithm::lsa, Algorithm::oracle};
  c.seeds = {1, 2};
  auto records = run_suite(c);
  ASSERT_EQ(records.size(), 2u);
  EXPECT_EQ(records[0].cost, Time::whole(7));
  EXPECT_EQ(records[1].cost, Time::whole(7));
  EXPECT_EQ(records[0].map, "fcyc_12.json");
}

TEST(Json, RecordsAndSummary) {
  auto j = records_to_json(run_suite(small_config()));
  EXPECT_EQ(j["records"].size(), 6u);
  EXPECT_EQ(j["summary"].size(), 2u);
  EXPECT_EQ(j["time_scale"], Time::kUnitsPerSecond);
}
