#pragma once

#include <chrono>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "lss/heuristic.hpp"
#include "lss/solution.hpp"
#include "lss/state.hpp"

namespace lss {

struct TimingSummary {
  Time t_min;
  std::optional<Time> t_min2;  // smallest distinct timestamp above t_min
  AgentSet frontier_agents = 0;
};

TimingSummary timing_summary(const JointState& s);

// One candidate next envelope for an agent, with the agent's banked goal wait
// after taking it.
struct IndividualNeighbor {
  Envelope envelope;
  Time banked;
};

// t_min2 - t_min when t_min2 exists, otherwise the instance's minimum duration.
Time wait_duration(const Instance& instance, const TimingSummary& timing);
IndividualNeighbor wait_neighbor(const Instance& instance, const JointState& s,
                                 AgentId i, Time wait);
IndividualNeighbor move_neighbor(const JointState& s, AgentId i, VertexId to,
                                 Time duration, VertexId goal);

// Agents outside I_tmin keep their envelope; agents in it get one move per
// adjacent vertex (in ascending vertex order) followed by one wait.
std::vector<IndividualNeighbor> individual_neighbors(const Instance& instance,
                                                     const JointState& s, AgentId i,
                                                     const TimingSummary& timing);
std::vector<IndividualNeighbor> individual_neighbors(const Instance& instance,
                                                     const JointState& s, AgentId i);

// Cartesian product of per-agent options; the last agent varies fastest.
std::vector<JointState> combine_neighbors(
    const JointState& s, const std::vector<std::vector<IndividualNeighbor>>& options);

std::vector<JointState> get_ngh(const Instance& instance, const JointState& s);

struct JointVertexHash {
  std::size_t operator()(const std::vector<VertexId>& v) const noexcept;
};

// Per joint vertex, the retained non-dominated states and whether a
// synchronized state has been seen there. Retained states are referenced by
// pointer; callers keep them at stable addresses (e.g. in a std::deque).
class FrontierSet {
 public:
  struct Verdict {
    bool keep = false;
    int dominator = -1;       // id of the retained state that pruned the candidate
  };

  // Strict dominance until a synchronized state has been kept at the joint
  // vertex, weak afterwards. With dominance disabled only exact duplicates are
  // discarded. A retained state prunes a candidate only if it also has no larger
  // charged cost for any agent and matches the parent vertex of every agent
  // still in transit. Kept candidates never evict retained states.
  Verdict compare(const JointState& s, int id, bool dominance = true);

  bool synchronized_seen(const std::vector<VertexId>& v) const;
  std::vector<int> retained(const std::vector<VertexId>& v) const;
  std::size_t joint_vertex_count() const { return buckets_.size(); }

 private:
  struct Entry {
    int id;
    const JointState* state;
  };
  struct Bucket {
    std::vector<Entry> states;
    std::unordered_multimap<std::size_t, std::size_t> by_hash;  // envelope hash -> index
    bool synchronized_seen = false;
  };
  std::unordered_map<std::vector<VertexId>, Bucket, JointVertexHash> buckets_;
};

// Dominance plus the per-agent charged-cost guard used by FrontierSet.
bool prunes(const JointState& a, const JointState& b, bool weak);

enum class TieBreak { deeper_first, fifo };

struct SearchParams {
  double weight = 1.0;
  bool dominance = true;
  double time_limit_s = 0.0;         // 0 = unlimited
  std::uint64_t expansion_limit = 0; // 0 = unlimited
  TieBreak tie_break = TieBreak::deeper_first;
  // LS-M* only: treat every state's collision set as all agents.
  bool pin_full_collision = false;
  // Absolute deadline shared with recursive sub-planners; derived from
  // time_limit_s when unset.
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

// Kept states in generation order with their parent index; filled when passed
// to a search.
struct SearchTrace {
  std::vector<JointState> states;
  std::vector<int> parent;
};

struct SearchResult {
  std::optional<Solution> solution;
  SearchStats stats;
  std::vector<JointState> chain;  // start .. goal when solved
};

// LS-A*. Starts from JointState::initial unless `start` is given.
SearchResult search(const Instance& instance, const SearchParams& params = {},
                    SearchTrace* trace = nullptr);

// Builds timed paths from a start-to-goal chain of joint states, merging
// repeated envelopes and consecutive waits.
Solution reconstruct(const Instance& instance, std::span<const JointState> chain);

}  // namespace lss
