#pragma once

#include <memory>
#include <span>
#include <vector>

#include "lss/graph.hpp"

namespace lss {

struct AgentTask {
  VertexId start = 0;
  VertexId goal = 0;
  bool operator==(const AgentTask&) const = default;
};

// Immutable problem statement. Durations are resolved into a dense per-agent
// arc table at construction so the search never touches the sparse table.
class Instance {
 public:
  Instance(std::shared_ptr<const Graph> graph, DurationTable durations,
           std::vector<AgentTask> agents);

  const Graph& graph() const { return *graph_; }
  std::shared_ptr<const Graph> graph_ptr() const { return graph_; }
  const DurationTable& durations() const { return durations_; }
  const std::vector<AgentTask>& agents() const { return agents_; }
  int agent_count() const { return static_cast<int>(agents_.size()); }
  VertexId start(AgentId i) const { return agents_[i].start; }
  VertexId goal(AgentId i) const { return agents_[i].goal; }

  // D^i(u,v); throws std::out_of_range when (u,v) is not an edge.
  Time duration(AgentId agent, VertexId u, VertexId v) const;
  // Duration of the k-th arc out of u (k indexes graph().neighbors(u)).
  Time arc_duration(AgentId agent, VertexId u, int k) const {
    return arc_durations_[agent][graph_->arc_begin(u) + k];
  }
  // min over all agents and edges of D^i(e); used for synchronized waits.
  Time min_duration() const { return min_duration_; }

  Instance restricted_to(std::span<const AgentId> agents) const;

 private:
  std::shared_ptr<const Graph> graph_;
  DurationTable durations_;
  std::vector<AgentTask> agents_;
  std::vector<std::vector<Time>> arc_durations_;
  Time min_duration_ = Time::infinity();
};

}  // namespace lss
