#include "lss/instance.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace lss {

Instance::Instance(std::shared_ptr<const Graph> graph, DurationTable durations,
                   std::vector<AgentTask> agents)
    : graph_(std::move(graph)),
      durations_(std::move(durations)),
      agents_(std::move(agents)) {
  if (!graph_) throw std::invalid_argument("instance without graph");
  if (agents_.empty()) throw std::invalid_argument("instance needs at least one agent");
  if (durations_.agent_count() != agent_count())
    throw std::invalid_argument("duration table covers " +
                                std::to_string(durations_.agent_count()) +
                                " agents, instance has " +
                                std::to_string(agent_count()));
  std::set<VertexId> starts, goals;
  for (const auto& a : agents_) {
    if (!graph_->valid(a.start) || !graph_->valid(a.goal))
      throw std::invalid_argument("start or goal is not a vertex");
    if (!starts.insert(a.start).second)
      throw std::invalid_argument("duplicate start vertex " + std::to_string(a.start));
    if (!goals.insert(a.goal).second)
      throw std::invalid_argument("duplicate goal vertex " + std::to_string(a.goal));
  }

  const Graph& g = *graph_;
  arc_durations_.assign(agent_count(), std::vector<Time>(g.arc_count()));
  for (AgentId i = 0; i < agent_count(); ++i) {
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
      auto ngh = g.neighbors(u);
      for (std::size_t k = 0; k < ngh.size(); ++k) {
        auto d = durations_.lookup(i, u, ngh[k]);
        if (!d)
          throw std::invalid_argument("no duration for agent " + std::to_string(i) +
                                      " on edge " + std::to_string(u) + "-" +
                                      std::to_string(ngh[k]));
        arc_durations_[i][g.arc_begin(u) + k] = *d;
        min_duration_ = std::min(min_duration_, *d);
      }
    }
  }
  // Edgeless graphs still need a positive wait quantum.
  if (min_duration_.is_infinite()) {
    for (AgentId i = 0; i < agent_count(); ++i)
      if (auto d = durations_.default_value(i)) min_duration_ = std::min(min_duration_, *d);
    if (min_duration_.is_infinite()) min_duration_ = Time::whole(1);
  }
}

Time Instance::duration(AgentId agent, VertexId u, VertexId v) const {
  int arc = graph_->arc_index(u, v);
  if (arc < 0)
    throw std::out_of_range("not an edge: " + std::to_string(u) + "-" +
                            std::to_string(v));
  return arc_durations_.at(agent)[arc];
}

Instance Instance::restricted_to(std::span<const AgentId> agents) const {
  std::vector<AgentTask> tasks;
  for (AgentId i : agents) tasks.push_back(agents_.at(i));
  return Instance(graph_, durations_.subset(agents), std::move(tasks));
}

}  // namespace lss
