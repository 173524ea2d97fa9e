#include "lss/mstar.hpp"

#include <algorithm>
#include <bit>
#include <deque>

#include "engine.hpp"

namespace lss {

bool CollisionSet::add_group(AgentSet g) {
  if (g == 0) return false;
  AgentSet merged = g;
  std::vector<AgentSet> keep;
  for (AgentSet x : groups_) {
    if (x & merged) merged |= x;
    else keep.push_back(x);
  }
  // A merged group may now touch groups kept earlier in the pass.
  bool again = true;
  while (again) {
    again = false;
    for (auto it = keep.begin(); it != keep.end(); ++it)
      if (*it & merged) {
        merged |= *it;
        keep.erase(it);
        again = true;
        break;
      }
  }
  keep.push_back(merged);
  std::sort(keep.begin(), keep.end(),
            [](AgentSet a, AgentSet b) { return std::countr_zero(a) < std::countr_zero(b); });
  bool changed = keep != groups_;
  groups_ = std::move(keep);
  return changed;
}

bool CollisionSet::add_flat(AgentSet agents) {
  if (agents == 0) return false;
  AgentSet merged = this->agents() | agents;
  if (groups_.size() == 1 && groups_[0] == merged) return false;
  groups_ = {merged};
  return true;
}

bool CollisionSet::merge(const CollisionSet& other, bool flat) {
  if (flat) return add_flat(other.agents());
  bool changed = false;
  for (AgentSet g : other.groups_) changed |= add_group(g);
  return changed;
}

AgentSet CollisionSet::agents() const {
  AgentSet all = 0;
  for (AgentSet g : groups_) all |= g;
  return all;
}

AgentSet CollisionSet::group_of(AgentId i) const {
  for (AgentSet g : groups_)
    if (contains(g, i)) return g;
  return 0;
}

int BackpropGraph::add_state() {
  sets_.emplace_back();
  preds_.emplace_back();
  return static_cast<int>(sets_.size()) - 1;
}

void BackpropGraph::add_predecessor(int state, int pred) {
  auto& p = preds_[state];
  if (std::find(p.begin(), p.end(), pred) == p.end()) p.push_back(pred);
}

std::vector<int> BackpropGraph::backpropagate(int state, const CollisionSet& colliding,
                                              bool flat) {
  std::vector<int> grown;
  std::deque<std::pair<int, CollisionSet>> work{{state, colliding}};
  while (!work.empty()) {
    auto [id, add] = std::move(work.front());
    work.pop_front();
    if (!sets_[id].merge(add, flat)) continue;
    grown.push_back(id);
    for (int pred : preds_[id]) work.emplace_back(pred, sets_[id]);
  }
  return grown;
}

IndividualNeighbor policy_neighbor(const Instance& instance, const JointState& s,
                                   AgentId i, const Policy& policy,
                                   const TimingSummary& timing) {
  VertexId v = s.envelopes[i].v;
  VertexId next = policy(v);
  if (next == v || next < 0) return wait_neighbor(instance, s, i, wait_duration(instance, timing));
  return move_neighbor(s, i, next, instance.duration(i, v, next), instance.goal(i));
}

std::vector<JointState> get_ngh_restricted(const Instance& instance, const JointState& s,
                                           AgentSet collision,
                                           const std::vector<Policy>& policies) {
  TimingSummary timing = timing_summary(s);
  std::vector<std::vector<IndividualNeighbor>> options;
  options.reserve(s.agent_count());
  for (AgentId i = 0; i < s.agent_count(); ++i) {
    if (contains(timing.frontier_agents, i) && !contains(collision, i))
      options.push_back({policy_neighbor(instance, s, i, policies[i], timing)});
    else
      options.push_back(individual_neighbors(instance, s, i, timing));
  }
  return combine_neighbors(s, options);
}

SearchResult search_lsm(const Instance& instance, const SearchParams& params,
                        SearchTrace* trace) {
  return detail::Engine(instance, params, detail::Variant::lsm, trace).run();
}

SearchResult search_lsrm(const Instance& instance, const SearchParams& params,
                         SearchTrace* trace) {
  return detail::Engine(instance, params, detail::Variant::lsrm, trace).run();
}

}  // namespace lss
