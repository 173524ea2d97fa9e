#pragma once

#include <vector>

#include "lss/state.hpp"

namespace lss {

// Per-agent shortest travel time to the agent's goal from every vertex.
// Unreachable vertices hold Time::infinity().
class HeuristicTable {
 public:
  HeuristicTable() = default;
  explicit HeuristicTable(const Instance& instance);

  Time cost_to_go(AgentId i, VertexId v) const { return ctg_[i][v]; }
  const std::vector<Time>& agent_table(AgentId i) const { return ctg_[i]; }
  // Sum over agents of cost-to-go from each envelope's vertex; infinity when
  // any agent cannot reach its goal.
  Time h(const JointState& s) const;
  bool all_reachable(const Instance& instance) const;

 private:
  std::vector<std::vector<Time>> ctg_;
};

// Next vertex along an optimal single-agent path to the goal; the goal maps
// to itself and unreachable vertices to -1. Ties go to the smallest vertex id.
struct Policy {
  std::vector<VertexId> next;
  std::vector<Time> cost_to_go;

  VertexId operator()(VertexId v) const { return next[v]; }
};

Policy build_policy(const Instance& instance, const HeuristicTable& table, AgentId i);
Policy build_policy(const Instance& instance, AgentId i);

}  // namespace lss
