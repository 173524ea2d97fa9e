#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "lss/search.hpp"
#include "lss/validate.hpp"

using namespace lss;

namespace {

Waypoint wp(VertexId v, double arrive, double depart) {
  return {v, Time::from_double(arrive), Time::from_double(depart)};
}

Solution plan(std::vector<std::vector<Waypoint>> paths) {
  Solution s;
  for (std::size_t i = 0; i < paths.size(); ++i)
    s.paths.push_back({static_cast<AgentId>(i), std::move(paths[i])});
  return s;
}

}  // namespace

TEST(Validate, OptimalCyclePlan) {
  Instance in = fixtures::cycle_instance(1, 1);
  Solution s = plan({{wp(0, 0, 0), wp(1, 1, 1), wp(3, 2, 2)}, {wp(3, 0, 0), wp(2, 1, 1), wp(0, 2, 2)}});
  ValidationReport r = validate(s, in);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(solution_cost(s, in), Time::whole(4));
}

TEST(Validate, CrossingSameVertex) {
  // Line A-B-C plus a spur D off B: agent 0 goes A->B->C, agent 1 goes D->B->... overlapping on B.
  std::vector<std::pair<VertexId, VertexId>> edges{{0, 1}, {1, 2}, {1, 3}, {3, 4}};
  auto g = std::make_shared<const Graph>(5, edges);
  std::vector<Time> d{Time::whole(2), Time::whole(2)};
  Instance in(g, DurationTable::uniform(d), {{0, 2}, {3, 0}});
  Solution s = plan({{wp(0, 0, 0), wp(1, 2, 2), wp(2, 4, 4)}, {wp(3, 0, 1), wp(1, 3, 3), wp(0, 5, 5)}});
  ValidationReport r = validate(s, in);
  EXPECT_TRUE(r.structural.empty());
  ASSERT_FALSE(r.conflicts.empty());
  bool on_b = false;
  for (const auto& c : r.conflicts) on_b |= c.vertex == 1;
  EXPECT_TRUE(on_b);
}

TEST(Validate, StructuralErrors) {
  Instance in = fixtures::cycle_instance(1, 1);
  // a and d are not adjacent.
  EXPECT_FALSE(validate(plan({{wp(0, 0, 0), wp(3, 1, 1)}, {wp(3, 0, 0), wp(2, 1, 1), wp(0, 2, 2)}}), in)
                   .structural.empty());
  // Wrong duration.
  EXPECT_FALSE(validate(plan({{wp(0, 0, 0), wp(1, 3, 3), wp(3, 4, 4)}, {wp(3, 0, 0), wp(2, 1, 1), wp(0, 2, 2)}}), in)
                   .structural.empty());
  // Wrong start.
  EXPECT_FALSE(validate(plan({{wp(1, 0, 0), wp(3, 1, 1)}, {wp(3, 0, 0), wp(2, 1, 1), wp(0, 2, 2)}}), in)
                   .structural.empty());
  // Missing goal.
  EXPECT_FALSE(validate(plan({{wp(0, 0, 0), wp(1, 1, 1)}, {wp(3, 0, 0), wp(2, 1, 1), wp(0, 2, 2)}}), in)
                   .structural.empty());
  // Missing agent.
  EXPECT_FALSE(validate(plan({{wp(0, 0, 0), wp(1, 1, 1), wp(3, 2, 2)}}), in).structural.empty());
  // Departure before arrival.
  EXPECT_FALSE(validate(plan({{wp(0, 0, 0), wp(1, 1, 0.5), wp(3, 2, 2)}, {wp(3, 0, 0), wp(2, 1, 1), wp(0, 2, 2)}}), in)
                   .structural.empty());
}

TEST(Validate, GoalIsOccupiedForever) {
  Instance in = fixtures::line_single(1);
  std::vector<Time> d{Time::whole(1), Time::whole(1)};
  Instance two(fixtures::line_graph(), DurationTable::uniform(d), {{0, 1}, {2, 0}});
  // Agent 0 parks at B from t=1; agent 1 has to pass through B later.
  Solution s = plan({{wp(0, 0, 0), wp(1, 1, 1)}, {wp(2, 0, 5), wp(1, 6, 6), wp(0, 7, 7)}});
  ValidationReport r = validate(s, two);
  EXPECT_FALSE(r.conflicts.empty());
  (void)in;
}

TEST(Validate, ExactInstantHandOverConflicts) {
  std::vector<Time> d{Time::whole(1), Time::whole(1)};
  Instance in(fixtures::line_graph(), DurationTable::uniform(d), {{0, 1}, {1, 2}});
  Solution s = plan({{wp(0, 0, 0), wp(1, 1, 1)}, {wp(1, 0, 1), wp(2, 2, 2)}});
  EXPECT_FALSE(validate(s, in).conflicts.empty());
  Solution later = plan({{wp(0, 0, 1), wp(1, 2, 2)}, {wp(1, 0, 0), wp(2, 1, 1)}});
  EXPECT_TRUE(validate(later, in).ok());
}

TEST(SolutionCost, TrailingWaitIsFree) {
  std::vector<Time> d{Time::whole(3)};
  Instance in(fixtures::line_graph(), DurationTable::uniform(d), {{0, 1}});
  EXPECT_EQ(solution_cost(plan({{wp(0, 0, 0), wp(1, 3, 8)}}), in), Time::whole(3));
}

TEST(SolutionCost, ReentryCharged) {
  std::vector<Time> d{Time::whole(1)};
  Instance in(fixtures::line_graph(), DurationTable::uniform(d), {{0, 1}});
  Solution s = plan({{wp(0, 0, 2), wp(1, 3, 5), wp(2, 6, 6), wp(1, 7, 7)}});
  EXPECT_EQ(solution_cost(s, in), Time::whole(7));
}

TEST(SolutionCost, StartIsGoal) {
  std::vector<Time> d{Time::whole(1)};
  Instance in(fixtures::line_graph(), DurationTable::uniform(d), {{1, 1}});
  EXPECT_EQ(solution_cost(plan({{wp(1, 0, 0)}}), in), Time::zero());
}

TEST(SolutionJson, RoundTrip) {
  Solution s = plan({{wp(0, 0, 0.5), wp(1, 1.5, 1.5)}});
  s.cost = Time::from_double(1.5);
  s.algorithm = "lsa";
  s.stats.expanded = 7;
  s.stats.outcome = Outcome::solved;
  Solution back = solution_from_json(solution_to_json(s));
  EXPECT_EQ(back.cost, s.cost);
  EXPECT_EQ(back.algorithm, "lsa");
  EXPECT_EQ(back.stats.expanded, 7u);
  EXPECT_EQ(back.paths[0].waypoints, s.paths[0].waypoints);
  EXPECT_EQ(solution_to_json(s)["paths"][0]["waypoints"][1]["arrive"], 1'500'000);
}
