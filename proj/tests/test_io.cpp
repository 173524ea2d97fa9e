#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "lss/io.hpp"

using namespace lss;

namespace {

std::string map_text(int h, int w, const std::vector<std::string>& rows) {
  std::string s = "type octile\nheight " + std::to_string(h) + "\nwidth " + std::to_string(w) + "\nmap\n";
  for (const auto& r : rows) s += r + "\n";
  return s;
}

std::string scen_record(int sx, int sy, int gx, int gy) {
  return "0\tm.map\t3\t3\t" + std::to_string(sx) + "\t" + std::to_string(sy) + "\t" +
         std::to_string(gx) + "\t" + std::to_string(gy) + "\t2\n";
}

}  // namespace

TEST(LoadMap, TwoByTwo) {
  GridMap m = load_map(map_text(2, 2, {"..", ".."}));
  EXPECT_EQ(m.graph->vertex_count(), 4);
  EXPECT_EQ(m.graph->edge_count(), 4u);
}

TEST(LoadMap, BlockedCellSeversRow) {
  GridMap m = load_map(map_text(1, 3, {".@."}));
  EXPECT_EQ(m.graph->vertex_count(), 2);
  EXPECT_EQ(m.graph->edge_count(), 0u);
  EXPECT_FALSE(m.passable(0, 1));
}

TEST(LoadMap, SixteenBySixteen) {
  GridMap m = load_map(render_map(empty_grid(16, 16)));
  EXPECT_EQ(m.graph->vertex_count(), 256);
  EXPECT_EQ(m.graph->edge_count(), 480u);
  EXPECT_EQ(m.vertex_at(3, 5), 3 * 16 + 5);
}

TEST(LoadMap, FourConnectedOnly) {
  GridMap m = empty_grid(3, 3);
  EXPECT_TRUE(m.graph->has_edge(m.vertex_at(1, 1), m.vertex_at(0, 1)));
  EXPECT_FALSE(m.graph->has_edge(m.vertex_at(1, 1), m.vertex_at(0, 0)));
}

TEST(LoadMap, Errors) {
  EXPECT_THROW(load_map("type octile\nheight x\nwidth 2\nmap\n..\n"), ParseError);
  EXPECT_THROW(load_map(map_text(2, 2, {".."})), ParseError);
  EXPECT_THROW(load_map(map_text(1, 2, {"..."})), ParseError);
  EXPECT_THROW(load_map(map_text(1, 2, {".x"})), ParseError);
  EXPECT_THROW(load_map("type octile\nheight 1\nwidth 2\n..\n"), ParseError);
}

TEST(LoadMap, AllCellKinds) {
  GridMap m = load_map(map_text(1, 5, {".G@OT"}));
  EXPECT_EQ(m.graph->vertex_count(), 2);
  EXPECT_EQ(m.graph->edge_count(), 1u);
}

TEST(LoadMap, RoundTripMask) {
  std::string text = map_text(3, 4, {".@..", "..T.", "@..."});
  GridMap m = load_map(text);
  GridMap again = load_map(render_map(m));
  EXPECT_EQ(m.cell_to_vertex, again.cell_to_vertex);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 4; ++c) EXPECT_EQ(m.passable(r, c), again.passable(r, c));
}

TEST(LoadScenario, ZeroRecords) {
  GridMap m = empty_grid(3, 3);
  EXPECT_TRUE(load_scenario("version 1\n" + scen_record(0, 0, 2, 0), 0, m).empty());
}

TEST(LoadScenario, CoordinateFormula) {
  GridMap m = empty_grid(3, 3);
  auto tasks = load_scenario("version 1\n" + scen_record(0, 0, 2, 0) + scen_record(1, 2, 2, 2), 2, m);
  ASSERT_EQ(tasks.size(), 2u);
  EXPECT_EQ(tasks[0], (AgentTask{0, 2}));
  EXPECT_EQ(tasks[1], (AgentTask{2 * 3 + 1, 2 * 3 + 2}));
}

TEST(LoadScenario, Errors) {
  GridMap m = load_map(map_text(3, 3, {".@.", "...", "..."}));
  EXPECT_THROW(load_scenario("version 1\n" + scen_record(1, 0, 2, 0), 1, m), ParseError);
  EXPECT_THROW(load_scenario("version 1\n" + scen_record(0, 0, 5, 0), 1, m), ParseError);
  EXPECT_THROW(load_scenario("version 1\n" + scen_record(0, 0, 2, 0), 2, m), ParseError);
}

TEST(InstanceJson, RoundTrip) {
  nlohmann::json j = {{"vertices", 4},
                      {"edges", {{0, 1}, {1, 3}, {3, 2}, {2, 0}}},
                      {"durations", {{"0", 1}, {"1", {{"default", 2}, {"per_edge", {{0, 1, 2.5}}}}}}},
                      {"agents", {{{"start", 0}, {"goal", 3}}, {{"start", 3}, {"goal", 0}}}}};
  Instance in = instance_from_json(j);
  EXPECT_EQ(in.duration(0, 0, 1), Time::whole(1));
  EXPECT_EQ(in.duration(1, 1, 0), Time::from_double(2.5));
  EXPECT_EQ(in.duration(1, 1, 3), Time::whole(2));
  Instance again = instance_from_json(instance_to_json(in));
  EXPECT_EQ(again.durations(), in.durations());
  EXPECT_EQ(again.agents(), in.agents());
  EXPECT_EQ(again.graph().edges(), in.graph().edges());
}

TEST(InstanceJson, Errors) {
  EXPECT_THROW(instance_from_json(nlohmann::json{{"vertices", 2}}), ParseError);
  nlohmann::json j = {{"vertices", 3},
                      {"edges", {{0, 1}}},
                      {"durations", {{"0", {{"default", 1}, {"per_edge", {{0, 2, 1}}}}}}},
                      {"agents", {{{"start", 0}, {"goal", 1}}}}};
  EXPECT_THROW(instance_from_json(j), ParseError);
}

TEST(InstanceJson, FixtureFile) {
  Instance in = load_instance_file(std::string(LSS_TEST_DATA) + "/fcyc_11.json");
  EXPECT_EQ(in.agent_count(), 2);
  EXPECT_EQ(in.graph().edge_count(), 4u);
}
