#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "lss/naive.hpp"
#include "lss/oracle.hpp"

using namespace lss;

TEST(Oracle, CycleUnit) {
  OracleResult r = brute_force_oracle(fixtures::cycle_instance(1, 1), 8);
  ASSERT_EQ(r.status, OracleResult::Status::found);
  EXPECT_EQ(*r.cost, Time::whole(4));
  EXPECT_EQ(r.tau, Time::whole(1));
}

TEST(Oracle, CycleMixed) {
  OracleResult r = brute_force_oracle(fixtures::cycle_instance(1, 2), 12);
  ASSERT_TRUE(r.cost);
  EXPECT_EQ(*r.cost, Time::whole(7));
}

TEST(Oracle, LineHasNoSolution) {
  OracleResult r = brute_force_oracle(fixtures::line_instance(), 20);
  EXPECT_EQ(r.status, OracleResult::Status::none);
  EXPECT_FALSE(r.cost);
  EXPECT_FALSE(r.horizon_hit);
}

TEST(Oracle, SingleAgent) {
  OracleResult r = brute_force_oracle(fixtures::line_single(2), 10);
  ASSERT_TRUE(r.cost);
  EXPECT_EQ(*r.cost, Time::whole(4));
}

TEST(Oracle, TightHorizonCuts) {
  OracleResult r = brute_force_oracle(fixtures::cycle_instance(1, 2), 2);
  EXPECT_EQ(r.status, OracleResult::Status::none);
  EXPECT_TRUE(r.horizon_hit);
}

TEST(Oracle, StateCap) {
  OracleResult r = brute_force_oracle(fixtures::random_grid_instance(4, 4, 3, 3, 1), 200, std::nullopt, 10);
  EXPECT_EQ(r.status, OracleResult::Status::cap_exceeded);
}

TEST(Oracle, InvariantUnderTickRefinement) {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    Instance in = fixtures::random_grid_instance(3, 3, 2, 3, seed);
    Time tau = common_unit(in);
    OracleResult a = brute_force_oracle(in, default_horizon(in, tau), tau);
    Time half = Time::units(tau.count() / 2);
    OracleResult b = brute_force_oracle(in, default_horizon(in, half), half);
    ASSERT_EQ(a.status, b.status);
    if (a.cost) EXPECT_EQ(*a.cost, *b.cost);
  }
}
