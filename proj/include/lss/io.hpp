#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "lss/instance.hpp"

namespace lss {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A grid map. Passable cells get dense vertex ids in row-major order; blocked
// cells map to -1.
struct GridMap {
  int height = 0;
  int width = 0;
  std::vector<VertexId> cell_to_vertex;
  std::shared_ptr<const Graph> graph;

  VertexId vertex_at(int row, int col) const;
  bool passable(int row, int col) const { return vertex_at(row, col) >= 0; }
};

GridMap load_map(std::string_view text);
GridMap load_map_file(const std::string& path);
// Re-renders the passable/blocked mask in the same text format.
std::string render_map(const GridMap& map);
GridMap empty_grid(int height, int width);

// Version-1 scenario records: columns are bucket, map, width, height,
// start x, start y, goal x, goal y, optimal length (x = column, y = row).
std::vector<AgentTask> load_scenario(std::string_view text, int count,
                                     const GridMap& map);
std::vector<AgentTask> load_scenario_file(const std::string& path, int count,
                                          const GridMap& map);

// JSON instance: {"vertices": n, "edges": [[u,v],...],
//  "durations": {"<agent>": {"default": d, "per_edge": [[u,v,d],...],
//                            "asymmetric": false}},
//  "agents": [{"start": s, "goal": g}, ...]}
// Durations are given in seconds (fractional values allowed).
Instance instance_from_json(const nlohmann::json& j);
nlohmann::json instance_to_json(const Instance& instance);
Instance load_instance_file(const std::string& path);

std::string read_text_file(const std::string& path);

}  // namespace lss
