#pragma once

#include <chrono>
#include <deque>
#include <optional>
#include <queue>
#include <unordered_map>

#include "lss/mstar.hpp"

namespace lss::detail {

enum class Variant { lsa, lsm, lsrm };

const char* algorithm_name(Variant v);

struct KeyHash {
  std::size_t operator()(const std::vector<std::int64_t>& k) const noexcept;
};

// Best-first loop shared by LS-A*, LS-M* and LS-rM*. The variants differ only
// in how frontier agents' individual neighbors are produced and in whether
// collision sets are tracked.
class Engine {
 public:
  Engine(const Instance& instance, const SearchParams& params, Variant variant,
         SearchTrace* trace = nullptr);

  SearchResult run();
  SearchResult run(const JointState& start);

 private:
  struct Node {
    JointState state;
    Time g;
    Time h;
    int parent = -1;
    bool expanded = false;
    CollisionSet expanded_with;
  };

  struct OpenEntry {
    double f;
    Time g;
    std::uint64_t seq;
    int id;
  };
  struct OpenOrder {
    TieBreak tie;
    bool operator()(const OpenEntry& a, const OpenEntry& b) const;
  };

  // Next sub-state for a group, or a terminal/failed marker.
  struct PlanStep {
    enum class Kind { next, terminal, failed, timeout } kind = Kind::failed;
    JointState next;
  };

  bool tracks_collisions() const { return variant_ != Variant::lsa; }
  bool flat() const { return variant_ == Variant::lsm; }
  double f_of(Time g, Time h) const;
  void push(int id);
  bool out_of_budget();
  int add_node(JointState s, int parent);
  CollisionSet collision_of(int id) const;
  // Returns false when the expansion must abort (sub-planner timeout).
  bool expand(int id, std::vector<JointState>& children);
  PlanStep plan_step(AgentSet group, const JointState& s);
  void grow_collision(int id, const CollisionSet& add);

  const Instance& instance_;
  SearchParams params_;
  Variant variant_;
  SearchTrace* trace_;
  HeuristicTable table_;
  std::vector<Policy> policies_;
  std::vector<VertexId> goals_;
  std::chrono::steady_clock::time_point started_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;

  std::deque<Node> nodes_;
  std::priority_queue<OpenEntry, std::vector<OpenEntry>, OpenOrder> open_;
  FrontierSet frontier_;
  BackpropGraph backprop_;
  std::uint64_t seq_ = 0;
  SearchStats stats_;
  bool timed_out_ = false;

  std::unordered_map<std::vector<std::int64_t>, PlanStep, KeyHash> plan_memo_;
};

}  // namespace lss::detail
