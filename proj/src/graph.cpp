#include "lss/graph.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

namespace lss {

Graph::Graph(int vertex_count,
             std::span<const std::pair<VertexId, VertexId>> edges,
             std::vector<Coord> coords)
    : coords_(std::move(coords)) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  if (!coords_.empty() && static_cast<int>(coords_.size()) != vertex_count)
    throw std::invalid_argument("coordinate count does not match vertices");

  std::vector<std::vector<VertexId>> adj(vertex_count);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
      throw std::invalid_argument("edge endpoint out of range: " +
                                  std::to_string(u) + "-" + std::to_string(v));
    if (u == v)
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  offsets_.assign(vertex_count + 1, 0);
  for (int v = 0; v < vertex_count; ++v) {
    auto& list = adj[v];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    offsets_[v + 1] = offsets_[v] + static_cast<int>(list.size());
  }
  targets_.reserve(offsets_.back());
  for (auto& list : adj) targets_.insert(targets_.end(), list.begin(), list.end());
}

int Graph::arc_index(VertexId u, VertexId v) const {
  if (!valid(u) || !valid(v)) return -1;
  auto ngh = neighbors(u);
  auto it = std::lower_bound(ngh.begin(), ngh.end(), v);
  if (it == ngh.end() || *it != v) return -1;
  return offsets_[u] + static_cast<int>(it - ngh.begin());
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (VertexId u = 0; u < vertex_count(); ++u)
    for (VertexId v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

DurationTable DurationTable::uniform(std::span<const Time> per_agent) {
  DurationTable table(static_cast<int>(per_agent.size()));
  for (std::size_t i = 0; i < per_agent.size(); ++i)
    table.set_default(static_cast<AgentId>(i), per_agent[i]);
  return table;
}

void DurationTable::set_default(AgentId agent, Time d) {
  if (d <= Time::zero()) throw std::invalid_argument("duration must be positive");
  agents_.at(agent).fallback = d;
}

void DurationTable::set_edge(AgentId agent, VertexId u, VertexId v, Time d,
                             bool symmetric) {
  if (d <= Time::zero()) throw std::invalid_argument("duration must be positive");
  auto& arcs = agents_.at(agent).per_arc;
  arcs[{u, v}] = d;
  if (symmetric) arcs[{v, u}] = d;
}

std::optional<Time> DurationTable::lookup(AgentId agent, VertexId u,
                                          VertexId v) const {
  const auto& a = agents_.at(agent);
  if (auto it = a.per_arc.find({u, v}); it != a.per_arc.end()) return it->second;
  return a.fallback;
}

std::optional<Time> DurationTable::uniform_value(AgentId agent) const {
  const auto& a = agents_.at(agent);
  if (!a.per_arc.empty()) return std::nullopt;
  return a.fallback;
}

DurationTable DurationTable::subset(std::span<const AgentId> agents) const {
  DurationTable out(static_cast<int>(agents.size()));
  for (std::size_t k = 0; k < agents.size(); ++k)
    out.agents_[k] = agents_.at(agents[k]);
  return out;
}

DurationTable gen_uniform_durations(int agent_count, int max_duration,
                                    std::uint64_t seed) {
  if (max_duration < 1) throw std::invalid_argument("K must be at least 1");
  if (agent_count < 1) throw std::invalid_argument("N must be at least 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(1, max_duration);
  std::vector<Time> per_agent;
  per_agent.reserve(agent_count);
  for (int i = 0; i < agent_count; ++i) per_agent.push_back(Time::whole(pick(rng)));
  return DurationTable::uniform(per_agent);
}

}  // namespace lss
