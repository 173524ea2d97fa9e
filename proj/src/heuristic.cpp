#include "lss/heuristic.hpp"

#include <functional>
#include <queue>

namespace lss {

namespace {

// Reverse uniform-cost search from the goal: dist(u) = min_v D(u,v) + dist(v).
std::vector<Time> reverse_dijkstra(const Instance& instance, AgentId agent) {
  const Graph& g = instance.graph();
  std::vector<Time> dist(g.vertex_count(), Time::infinity());
  using Item = std::pair<Time, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> open;
  VertexId goal = instance.goal(agent);
  dist[goal] = Time::zero();
  open.push({Time::zero(), goal});
  while (!open.empty()) {
    auto [d, v] = open.top();
    open.pop();
    if (d > dist[v]) continue;
    for (VertexId u : g.neighbors(v)) {
      Time nd = d + instance.duration(agent, u, v);
      if (nd < dist[u]) {
        dist[u] = nd;
        open.push({nd, u});
      }
    }
  }
  return dist;
}

}  // namespace

HeuristicTable::HeuristicTable(const Instance& instance) {
  ctg_.reserve(instance.agent_count());
  for (AgentId i = 0; i < instance.agent_count(); ++i)
    ctg_.push_back(reverse_dijkstra(instance, i));
}

Time HeuristicTable::h(const JointState& s) const {
  Time sum;
  for (AgentId i = 0; i < s.agent_count(); ++i) {
    Time c = ctg_[i][s.envelopes[i].v];
    if (c.is_infinite()) return Time::infinity();
    sum += c;
  }
  return sum;
}

bool HeuristicTable::all_reachable(const Instance& instance) const {
  for (AgentId i = 0; i < instance.agent_count(); ++i)
    if (ctg_[i][instance.start(i)].is_infinite()) return false;
  return true;
}

Policy build_policy(const Instance& instance, const HeuristicTable& table, AgentId i) {
  const Graph& g = instance.graph();
  Policy policy;
  policy.cost_to_go = table.agent_table(i);
  policy.next.assign(g.vertex_count(), -1);
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    if (u == instance.goal(i)) {
      policy.next[u] = u;
      continue;
    }
    if (policy.cost_to_go[u].is_infinite()) continue;
    auto ngh = g.neighbors(u);
    for (std::size_t k = 0; k < ngh.size(); ++k) {
      VertexId v = ngh[k];
      if (policy.cost_to_go[v].is_infinite()) continue;
      if (instance.arc_duration(i, u, static_cast<int>(k)) + policy.cost_to_go[v] ==
          policy.cost_to_go[u]) {
        policy.next[u] = v;  // neighbors are sorted, so the first hit is the smallest id
        break;
      }
    }
  }
  return policy;
}

Policy build_policy(const Instance& instance, AgentId i) {
  return build_policy(instance, HeuristicTable(instance), i);
}

}  // namespace lss
