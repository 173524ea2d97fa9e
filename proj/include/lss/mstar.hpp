#pragma once

#include <vector>

#include "lss/search.hpp"

namespace lss {

// Collision set kept as disjoint agent groups. LS-M* uses a single group;
// LS-rM* keeps one group per set of agents observed in a common conflict.
class CollisionSet {
 public:
  CollisionSet() = default;

  // Merges `g` with every group it intersects. Returns true if anything changed.
  bool add_group(AgentSet g);
  // Unions all of `agents` into a single group.
  bool add_flat(AgentSet agents);
  bool merge(const CollisionSet& other, bool flat);

  AgentSet agents() const;
  AgentSet group_of(AgentId i) const;
  const std::vector<AgentSet>& groups() const { return groups_; }
  bool empty() const { return groups_.empty(); }

  bool operator==(const CollisionSet&) const = default;

 private:
  std::vector<AgentSet> groups_;  // sorted by lowest member
};

// Predecessor links between retained states, for pushing collision sets back
// toward the states whose expansion they should widen.
class BackpropGraph {
 public:
  int add_state();
  void pop_back() {
    sets_.pop_back();
    preds_.pop_back();
  }
  void add_predecessor(int state, int pred);
  const std::vector<int>& predecessors(int state) const { return preds_[state]; }
  const CollisionSet& collision(int state) const { return sets_[state]; }
  std::size_t size() const { return sets_.size(); }

  // Merges `colliding` into the state's collision set; every state whose set
  // grows passes its new set on to its predecessors. Returns the states that
  // grew, in propagation order.
  std::vector<int> backpropagate(int state, const CollisionSet& colliding, bool flat);

 private:
  std::vector<CollisionSet> sets_;
  std::vector<std::vector<int>> preds_;
};

// Policy-following step for agent i: the policy move, or a wait when the
// agent sits at its goal.
IndividualNeighbor policy_neighbor(const Instance& instance, const JointState& s,
                                   AgentId i, const Policy& policy,
                                   const TimingSummary& timing);

// Neighbor generation where frontier agents outside `collision` follow their
// policies and agents inside it take every action.
std::vector<JointState> get_ngh_restricted(const Instance& instance, const JointState& s,
                                           AgentSet collision,
                                           const std::vector<Policy>& policies);

SearchResult search_lsm(const Instance& instance, const SearchParams& params = {},
                        SearchTrace* trace = nullptr);
SearchResult search_lsrm(const Instance& instance, const SearchParams& params = {},
                         SearchTrace* trace = nullptr);

}  // namespace lss
