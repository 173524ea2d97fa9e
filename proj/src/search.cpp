#include "lss/search.hpp"

#include <algorithm>
#include <stdexcept>

namespace lss {

TimingSummary timing_summary(const JointState& s) {
  TimingSummary out;
  out.t_min = Time::infinity();
  for (const auto& e : s.envelopes) out.t_min = std::min(out.t_min, e.t);
  for (AgentId i = 0; i < s.agent_count(); ++i) {
    Time t = s.envelopes[i].t;
    if (t == out.t_min) {
      out.frontier_agents |= agent_bit(i);
    } else if (!out.t_min2 || t < *out.t_min2) {
      out.t_min2 = t;
    }
  }
  return out;
}

Time wait_duration(const Instance& instance, const TimingSummary& timing) {
  if (timing.t_min2) return *timing.t_min2 - timing.t_min;
  return instance.min_duration();
}

IndividualNeighbor wait_neighbor(const Instance& instance, const JointState& s,
                                 AgentId i, Time wait) {
  const Envelope& cur = s.envelopes[i];
  Time banked = s.banked[i];
  if (cur.v == instance.goal(i)) banked += wait;
  return {{cur.v, cur.v, cur.t + wait, cur.t}, banked};
}

IndividualNeighbor move_neighbor(const JointState& s, AgentId i, VertexId to,
                                 Time duration, VertexId goal) {
  const Envelope& cur = s.envelopes[i];
  // Leaving the goal turns the banked wait into charged time.
  Time banked = cur.v == goal ? Time::zero() : s.banked[i];
  return {{to, cur.v, cur.t + duration, cur.t}, banked};
}

std::vector<IndividualNeighbor> individual_neighbors(const Instance& instance,
                                                     const JointState& s, AgentId i,
                                                     const TimingSummary& timing) {
  if (!contains(timing.frontier_agents, i)) return {{s.envelopes[i], s.banked[i]}};
  const Graph& g = instance.graph();
  VertexId v = s.envelopes[i].v;
  auto ngh = g.neighbors(v);
  std::vector<IndividualNeighbor> out;
  out.reserve(ngh.size() + 1);
  for (std::size_t k = 0; k < ngh.size(); ++k)
    out.push_back(move_neighbor(s, i, ngh[k],
                                instance.arc_duration(i, v, static_cast<int>(k)),
                                instance.goal(i)));
  out.push_back(wait_neighbor(instance, s, i, wait_duration(instance, timing)));
  return out;
}

std::vector<IndividualNeighbor> individual_neighbors(const Instance& instance,
                                                     const JointState& s, AgentId i) {
  return individual_neighbors(instance, s, i, timing_summary(s));
}

std::vector<JointState> combine_neighbors(
    const JointState& s, const std::vector<std::vector<IndividualNeighbor>>& options) {
  std::size_t total = 1;
  for (const auto& o : options) total *= o.size();
  std::vector<JointState> out;
  if (total == 0) return out;
  out.reserve(total);
  const int n = static_cast<int>(options.size());
  std::vector<std::size_t> pick(n, 0);
  for (std::size_t k = 0; k < total; ++k) {
    JointState child = s;
    for (int i = 0; i < n; ++i) {
      child.envelopes[i] = options[i][pick[i]].envelope;
      child.banked[i] = options[i][pick[i]].banked;
    }
    out.push_back(std::move(child));
    for (int i = n - 1; i >= 0; --i) {
      if (++pick[i] < options[i].size()) break;
      pick[i] = 0;
    }
  }
  return out;
}

std::vector<JointState> get_ngh(const Instance& instance, const JointState& s) {
  TimingSummary timing = timing_summary(s);
  std::vector<std::vector<IndividualNeighbor>> options;
  options.reserve(s.agent_count());
  for (AgentId i = 0; i < s.agent_count(); ++i)
    options.push_back(individual_neighbors(instance, s, i, timing));
  return combine_neighbors(s, options);
}

std::size_t JointVertexHash::operator()(const std::vector<VertexId>& v) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (VertexId x : v) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

std::size_t envelope_hash(const JointState& s) {
  std::size_t h = 0xcbf29ce484222325ULL;
  auto mix = [&](std::int64_t x) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  for (const Envelope& e : s.envelopes) {
    mix(e.p);
    mix(e.t.count());
    mix(e.tp.count());
  }
  return h;
}

}  // namespace

bool prunes(const JointState& a, const JointState& b, bool weak) {
  Time now = b.envelopes[0].t;
  for (const Envelope& e : b.envelopes) now = std::min(now, e.t);
  for (AgentId i = 0; i < a.agent_count(); ++i) {
    const Envelope& ea = a.envelopes[i];
    const Envelope& eb = b.envelopes[i];
    if (weak ? ea.t > eb.t : ea.t >= eb.t) return false;
    if (a.charged(i) > b.charged(i)) return false;
    if (ea.t > now && ea.p != eb.p) return false;
  }
  return true;
}

FrontierSet::Verdict FrontierSet::compare(const JointState& s, int id, bool dominance) {
  Verdict verdict;
  Bucket& bucket = buckets_[s.joint_vertex()];
  const std::size_t h = envelope_hash(s);
  for (auto [it, end] = bucket.by_hash.equal_range(h); it != end; ++it) {
    const Entry& r = bucket.states[it->second];
    if (*r.state == s) {
      verdict.dominator = r.id;
      return verdict;
    }
  }
  if (dominance) {
    const bool weak = bucket.synchronized_seen;
    for (const Entry& r : bucket.states)
      if (prunes(*r.state, s, weak)) {
        verdict.dominator = r.id;
        return verdict;
      }
  }
  verdict.keep = true;
  if (is_synchronized(s)) bucket.synchronized_seen = true;
  bucket.by_hash.emplace(h, bucket.states.size());
  bucket.states.push_back({id, &s});
  return verdict;
}

bool FrontierSet::synchronized_seen(const std::vector<VertexId>& v) const {
  auto it = buckets_.find(v);
  return it != buckets_.end() && it->second.synchronized_seen;
}

std::vector<int> FrontierSet::retained(const std::vector<VertexId>& v) const {
  std::vector<int> out;
  if (auto it = buckets_.find(v); it != buckets_.end())
    for (const auto& e : it->second.states) out.push_back(e.id);
  return out;
}

Solution reconstruct(const Instance& instance, std::span<const JointState> chain) {
  if (chain.empty()) throw std::logic_error("empty state chain");
  const JointState& goal = chain.back();
  for (AgentId i = 0; i < instance.agent_count(); ++i)
    if (goal.envelopes[i].v != instance.goal(i))
      throw std::logic_error("chain does not end at the joint goal");

  Solution sol;
  sol.cost = goal.cost();
  for (AgentId i = 0; i < instance.agent_count(); ++i) {
    TimedPath path;
    path.agent = i;
    const Envelope* last = nullptr;
    for (const JointState& s : chain) {
      const Envelope& e = s.envelopes[i];
      if (last && *last == e) continue;
      if (!last) {
        path.waypoints.push_back({e.v, Time::zero(), e.t});
      } else if (e.is_move()) {
        if (e.p != path.waypoints.back().v || e.tp != path.waypoints.back().depart)
          throw std::logic_error("broken parent chain for agent " + std::to_string(i));
        path.waypoints.back().depart = e.tp;
        path.waypoints.push_back({e.v, e.t, e.t});
      } else {
        path.waypoints.back().depart = e.t;
      }
      last = &e;
    }
    sol.paths.push_back(std::move(path));
  }
  return sol;
}

}  // namespace lss
