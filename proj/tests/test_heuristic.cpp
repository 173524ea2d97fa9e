#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "lss/heuristic.hpp"

using namespace lss;

TEST(Heuristic, CycleCostToGo) {
  Instance in = fixtures::cycle_instance(1, 2);
  HeuristicTable h(in);
  EXPECT_EQ(h.cost_to_go(0, 0), Time::whole(2));
  EXPECT_EQ(h.cost_to_go(0, 3), Time::zero());
  EXPECT_EQ(h.cost_to_go(1, 0), Time::zero());
  EXPECT_EQ(h.h(JointState::initial(in)), Time::whole(6));
  EXPECT_TRUE(h.all_reachable(in));
}

TEST(Heuristic, UnreachableIsInfinite) {
  GridMap m = load_map("type octile\nheight 1\nwidth 3\nmap\n.@.\n");
  std::vector<Time> d{Time::whole(1)};
  Instance in(m.graph, DurationTable::uniform(d), {{0, 1}});
  HeuristicTable h(in);
  EXPECT_TRUE(h.cost_to_go(0, 0).is_infinite());
  EXPECT_TRUE(h.h(JointState::initial(in)).is_infinite());
  EXPECT_FALSE(h.all_reachable(in));
  Policy p = build_policy(in, h, 0);
  EXPECT_EQ(p(0), -1);
  EXPECT_EQ(p(1), 1);
}

TEST(Heuristic, PerEdgeDurations) {
  DurationTable t(1);
  t.set_default(0, Time::whole(1));
  t.set_edge(0, 0, 1, Time::whole(5));
  Instance in(fixtures::cycle_graph(), t, {{0, 3}});
  HeuristicTable h(in);
  EXPECT_EQ(h.cost_to_go(0, 0), Time::whole(2));
  EXPECT_EQ(h.cost_to_go(0, 1), Time::whole(1));
  EXPECT_EQ(build_policy(in, h, 0)(0), 2);
}

TEST(Policy, TieBreakSmallestVertex) {
  Instance in = fixtures::cycle_instance(1, 2);
  Policy p = build_policy(in, 0);
  EXPECT_EQ(p(0), 1);
  EXPECT_EQ(p(3), 3);
  Policy q = build_policy(in, 1);
  EXPECT_EQ(q(3), 1);
}

TEST(Policy, LineIsUnique) {
  Instance in = fixtures::line_single(1);
  Policy p = build_policy(in, 0);
  EXPECT_EQ(p(0), 1);
  EXPECT_EQ(p(1), 2);
  EXPECT_EQ(p(2), 2);
}

TEST(Policy, ConsistentWithCostToGo) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Instance in = fixtures::random_grid_instance(4, 5, 3, 9, seed);
    HeuristicTable h(in);
    for (AgentId i = 0; i < in.agent_count(); ++i) {
      Policy p = build_policy(in, h, i);
      for (VertexId u = 0; u < in.graph().vertex_count(); ++u) {
        if (u == in.goal(i)) continue;
        VertexId next = p(u);
        ASSERT_GE(next, 0);
        EXPECT_EQ(h.cost_to_go(i, u), in.duration(i, u, next) + h.cost_to_go(i, next));
        // Following the policy reaches the goal in exactly cost-to-go time.
        Time total = Time::zero();
        for (VertexId v = u; v != in.goal(i); v = p(v)) total += in.duration(i, v, p(v));
        EXPECT_EQ(total, h.cost_to_go(i, u));
      }
    }
  }
}
