#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "lss/instance.hpp"

namespace lss {

// Agent subsets; searches support up to 64 agents.
using AgentSet = std::uint64_t;
inline constexpr int kMaxAgents = 64;

inline constexpr AgentSet agent_bit(AgentId i) { return AgentSet{1} << i; }
inline constexpr bool contains(AgentSet s, AgentId i) { return (s >> i) & 1u; }
inline constexpr AgentSet all_agents(int n) {
  return n >= 64 ? ~AgentSet{0} : (agent_bit(n) - 1);
}
inline int agent_count(AgentSet s) { return std::popcount(s); }
std::vector<AgentId> members(AgentSet s);

// The individual state of one agent: its latest action moved it from p to v,
// departing p at tp and arriving at v at t. Waits have p == v.
struct Envelope {
  VertexId v = 0;
  VertexId p = 0;
  Time t;
  Time tp;

  bool is_move() const { return p != v; }
  bool operator==(const Envelope&) const = default;
};

// One or two vertices.
struct VertexSet {
  std::array<VertexId, 2> items{};
  int size = 0;

  const VertexId* begin() const { return items.data(); }
  const VertexId* end() const { return items.data() + size; }
  bool contains(VertexId x) const {
    return (size > 0 && items[0] == x) || (size > 1 && items[1] == x);
  }
};

// Vertices an envelope occupies at time `at`; throws std::out_of_range when
// `at` lies outside [tp, t].
VertexSet occupancy(const Envelope& e, Time at);

struct JointState {
  std::vector<Envelope> envelopes;
  // Per-agent wait time spent at the agent's own goal since it last arrived
  // there; charged only if the agent leaves the goal again.
  std::vector<Time> banked;

  static JointState initial(const Instance& instance);

  int agent_count() const { return static_cast<int>(envelopes.size()); }
  // Cost an agent has been charged so far: elapsed time minus banked goal waits.
  Time charged(AgentId i) const { return envelopes[i].t - banked[i]; }
  Time cost() const;
  std::vector<VertexId> joint_vertex() const;
  bool at_joint_vertex(const std::vector<VertexId>& v) const;

  bool operator==(const JointState& o) const { return envelopes == o.envelopes; }
};

struct ConflictWitness {
  AgentId first = 0;
  AgentId second = 0;
  VertexId vertex = 0;
  // A time point when from == to and !open, otherwise the open interval (from, to).
  Time from;
  Time to;
  bool open = false;
};

struct ConflictReport {
  AgentSet agents = 0;
  std::vector<ConflictWitness> witnesses;
  bool empty() const { return agents == 0; }
};

// Pairwise vertex-occupancy check over the overlap of each pair's envelopes.
ConflictReport conflict_set(const JointState& s);

bool strictly_dominates(const JointState& a, const JointState& b);
bool weakly_dominates(const JointState& a, const JointState& b);
bool is_synchronized(const JointState& s);

}  // namespace lss
