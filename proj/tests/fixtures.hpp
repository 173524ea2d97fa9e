#pragma once

#include <algorithm>
#include <memory>
#include <random>
#include <utility>
#include <vector>

#include "lss/graph.hpp"
#include "lss/instance.hpp"
#include "lss/io.hpp"

namespace lss::fixtures {

// 4-cycle a-b-d-c-a with a=0, b=1, c=2, d=3.
inline std::shared_ptr<const Graph> cycle_graph() {
  std::vector<std::pair<VertexId, VertexId>> edges{{0, 1}, {1, 3}, {3, 2}, {2, 0}};
  return std::make_shared<const Graph>(4, edges);
}

inline Instance cycle_instance(double d1, double d2) {
  std::vector<Time> d{Time::from_double(d1), Time::from_double(d2)};
  return Instance(cycle_graph(), DurationTable::uniform(d), {{0, 3}, {3, 0}});
}

// Path A-B-C with A=0, B=1, C=2.
inline std::shared_ptr<const Graph> line_graph() {
  std::vector<std::pair<VertexId, VertexId>> edges{{0, 1}, {1, 2}};
  return std::make_shared<const Graph>(3, edges);
}

inline Instance line_instance() {
  std::vector<Time> d{Time::whole(1), Time::whole(1)};
  return Instance(line_graph(), DurationTable::uniform(d), {{0, 2}, {2, 0}});
}

inline Instance line_single(double dur) {
  std::vector<Time> d{Time::from_double(dur)};
  return Instance(line_graph(), DurationTable::uniform(d), {{0, 2}});
}

// Small random grid instance: distinct starts and goals, integer durations in [1, k].
inline Instance random_grid_instance(int h, int w, int agents, int k, std::uint64_t seed) {
  GridMap grid = empty_grid(h, w);
  std::mt19937_64 rng(seed * 7919 + 17);
  std::vector<VertexId> starts(grid.graph->vertex_count()), goals(grid.graph->vertex_count());
  for (int v = 0; v < grid.graph->vertex_count(); ++v) starts[v] = goals[v] = v;
  std::shuffle(starts.begin(), starts.end(), rng);
  std::shuffle(goals.begin(), goals.end(), rng);
  std::vector<AgentTask> tasks;
  for (int i = 0; i < agents; ++i) tasks.push_back({starts[i], goals[i]});
  return Instance(grid.graph, gen_uniform_durations(agents, k, seed), std::move(tasks));
}

}  // namespace lss::fixtures
