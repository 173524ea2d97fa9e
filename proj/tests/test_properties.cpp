#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "lss/mstar.hpp"
#include "lss/naive.hpp"
#include "lss/oracle.hpp"
#include "lss/search.hpp"
#include "lss/validate.hpp"

using namespace lss;

namespace {

// Conflict-free random walk through get_ngh.
JointState random_reachable(const Instance& in, std::mt19937_64& rng, int steps) {
  JointState s = JointState::initial(in);
  for (int k = 0; k < steps; ++k) {
    std::vector<JointState> ok;
    for (auto& c : get_ngh(in, s))
      if (conflict_set(c).empty()) ok.push_back(std::move(c));
    if (ok.empty()) break;
    s = ok[std::uniform_int_distribution<std::size_t>(0, ok.size() - 1)(rng)];
  }
  return s;
}

JointState all_wait_child(const Instance& in, const JointState& s) {
  std::vector<std::vector<IndividualNeighbor>> options;
  for (AgentId i = 0; i < s.agent_count(); ++i) options.push_back({individual_neighbors(in, s, i).back()});
  return combine_neighbors(s, options).front();
}

}  // namespace

TEST(Properties, AllWaitChainSynchronizes) {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 200; ++k) {
    int n = 2 + k % 3;
    Instance in = fixtures::random_grid_instance(4, 4, n, 7, k);
    JointState s = random_reachable(in, rng, 1 + k % 9);
    int steps = 0;
    while (!is_synchronized(s)) {
      JointState next = all_wait_child(in, s);
      EXPECT_EQ(next.joint_vertex(), s.joint_vertex());
      s = next;
      ASSERT_LE(++steps, n - 1);
    }
  }
}

TEST(Properties, TraceTminIncreasesAlongParents) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Instance in = fixtures::random_grid_instance(3, 4, 3, 4, seed);
    SearchTrace trace;
    search(in, {}, &trace);
    ASSERT_EQ(trace.states.size(), trace.parent.size());
    for (std::size_t k = 0; k < trace.states.size(); ++k) {
      int p = trace.parent[k];
      if (p < 0) continue;
      EXPECT_GT(timing_summary(trace.states[k]).t_min, timing_summary(trace.states[p]).t_min);
    }
  }
}

TEST(Properties, EqualDurationsKeepStatesSynchronized) {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    Instance in = fixtures::random_grid_instance(4, 4, 3, 1, seed);
    SearchTrace trace;
    search(in, {}, &trace);
    for (const auto& s : trace.states) EXPECT_TRUE(is_synchronized(s));
  }
}

TEST(Properties, PruningPreservesCost) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Instance in = fixtures::random_grid_instance(3, 3, 3, 3, seed);
    SearchParams off;
    off.dominance = false;
    SearchResult a = search(in), b = search(in, off);
    ASSERT_EQ(bool(a.solution), bool(b.solution));
    if (a.solution) EXPECT_EQ(a.solution->cost, b.solution->cost);
  }
}

TEST(Properties, SolversAgreeWithOracle) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Instance in = fixtures::random_grid_instance(3, 3, 2 + seed % 2, 1 + seed % 3, seed);
    Time tau = common_unit(in);
    OracleResult o = brute_force_oracle(in, default_horizon(in, tau), tau);
    for (auto solve : {&search, &search_lsm, &search_lsrm}) {
      SearchResult r = solve(in, {}, nullptr);
      ASSERT_EQ(bool(r.solution), bool(o.cost)) << seed;
      if (!r.solution) continue;
      EXPECT_EQ(r.solution->cost, *o.cost) << seed;
      EXPECT_TRUE(validate(*r.solution, in).ok());
      EXPECT_EQ(solution_cost(*r.solution, in), r.solution->cost);
    }
  }
}

TEST(Properties, FractionalDurations) {
  GridMap m = empty_grid(3, 3);
  std::vector<Time> d{Time::from_double(0.5), Time::from_double(1.5), Time::from_double(1.0)};
  Instance in(m.graph, DurationTable::uniform(d), {{0, 8}, {8, 0}, {2, 6}});
  Time tau = common_unit(in);
  EXPECT_EQ(tau, Time::from_double(0.5));
  OracleResult o = brute_force_oracle(in, default_horizon(in, tau), tau);
  SearchResult r = search(in);
  ASSERT_TRUE(o.cost && r.solution);
  EXPECT_EQ(r.solution->cost, *o.cost);
  EXPECT_TRUE(validate(*r.solution, in).ok());
}
