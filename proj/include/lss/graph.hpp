#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lss/time.hpp"

namespace lss {

using VertexId = int;
using AgentId = int;

struct Coord {
  int row = 0;
  int col = 0;
  auto operator<=>(const Coord&) const = default;
};

// Undirected graph in adjacency-array form. Neighbor lists are sorted
// ascending so iteration order is deterministic.
class Graph {
 public:
  Graph() = default;
  Graph(int vertex_count, std::span<const std::pair<VertexId, VertexId>> edges,
        std::vector<Coord> coords = {});

  int vertex_count() const { return static_cast<int>(offsets_.size()) - 1; }
  std::size_t edge_count() const { return targets_.size() / 2; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {targets_.data() + offsets_[v],
            static_cast<std::size_t>(offsets_[v + 1] - offsets_[v])};
  }
  int degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

  // Index of the arc u->v in the flat arc array, or -1 when (u,v) is not an edge.
  int arc_index(VertexId u, VertexId v) const;
  int arc_begin(VertexId v) const { return offsets_[v]; }
  std::size_t arc_count() const { return targets_.size(); }

  bool has_edge(VertexId u, VertexId v) const { return arc_index(u, v) >= 0; }
  bool valid(VertexId v) const { return v >= 0 && v < vertex_count(); }

  bool has_coords() const { return !coords_.empty(); }
  Coord coord(VertexId v) const { return coords_.at(v); }

  std::vector<std::pair<VertexId, VertexId>> edges() const;

 private:
  std::vector<int> offsets_{0};
  std::vector<VertexId> targets_;
  std::vector<Coord> coords_;
};

// Per-agent edge durations. Each agent has an optional default duration and
// optional per-arc overrides; symmetric entries are stored for both directions.
class DurationTable {
 public:
  DurationTable() = default;
  explicit DurationTable(int agent_count) : agents_(agent_count) {}

  static DurationTable uniform(std::span<const Time> per_agent);

  int agent_count() const { return static_cast<int>(agents_.size()); }

  void set_default(AgentId agent, Time d);
  void set_edge(AgentId agent, VertexId u, VertexId v, Time d,
                bool symmetric = true);

  std::optional<Time> lookup(AgentId agent, VertexId u, VertexId v) const;
  // The d^i of the uniform special case, when the agent has no overrides.
  std::optional<Time> uniform_value(AgentId agent) const;
  std::optional<Time> default_value(AgentId agent) const {
    return agents_.at(agent).fallback;
  }
  const std::map<std::pair<VertexId, VertexId>, Time>& overrides(
      AgentId agent) const {
    return agents_.at(agent).per_arc;
  }

  DurationTable subset(std::span<const AgentId> agents) const;

  bool operator==(const DurationTable&) const = default;

 private:
  struct AgentDurations {
    std::optional<Time> fallback;
    std::map<std::pair<VertexId, VertexId>, Time> per_arc;
    bool operator==(const AgentDurations&) const = default;
  };
  std::vector<AgentDurations> agents_;
};

// Draws d^i uniformly from [1, K] per agent with std::mt19937_64.
DurationTable gen_uniform_durations(int agent_count, int max_duration,
                                    std::uint64_t seed);

}  // namespace lss
