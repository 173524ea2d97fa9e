#include "lss/state.hpp"

#include <algorithm>
#include <stdexcept>

namespace lss {

std::vector<AgentId> members(AgentSet s) {
  std::vector<AgentId> out;
  while (s) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

VertexSet occupancy(const Envelope& e, Time at) {
  if (at < e.tp || at > e.t) throw std::out_of_range("time outside envelope");
  if (!e.is_move() || at == e.tp) return {{e.p, 0}, 1};
  if (at == e.t) return {{e.v, 0}, 1};
  return {{e.p, e.v}, 2};
}

JointState JointState::initial(const Instance& instance) {
  JointState s;
  s.envelopes.reserve(instance.agent_count());
  for (const auto& a : instance.agents())
    s.envelopes.push_back({a.start, a.start, Time::zero(), Time::zero()});
  s.banked.assign(instance.agent_count(), Time::zero());
  return s;
}

Time JointState::cost() const {
  Time g;
  for (AgentId i = 0; i < agent_count(); ++i) g += charged(i);
  return g;
}

std::vector<VertexId> JointState::joint_vertex() const {
  std::vector<VertexId> out;
  out.reserve(envelopes.size());
  for (const auto& e : envelopes) out.push_back(e.v);
  return out;
}

bool JointState::at_joint_vertex(const std::vector<VertexId>& v) const {
  if (v.size() != envelopes.size()) return false;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (envelopes[i].v != v[i]) return false;
  return true;
}

namespace {

bool intersect(const VertexSet& a, const VertexSet& b, VertexId& shared) {
  for (VertexId x : a)
    if (b.contains(x)) {
      shared = x;
      return true;
    }
  return false;
}

VertexSet interior(const Envelope& e) {
  if (e.is_move()) return {{e.p, e.v}, 2};
  return {{e.v, 0}, 1};
}

std::optional<ConflictWitness> pair_conflict(const JointState& s, AgentId i, AgentId j) {
  const Envelope& a = s.envelopes[i];
  const Envelope& b = s.envelopes[j];
  Time lo = std::max(a.tp, b.tp);
  Time hi = std::min(a.t, b.t);
  if (lo > hi) return std::nullopt;
  VertexId shared = 0;
  if (intersect(occupancy(a, lo), occupancy(b, lo), shared))
    return ConflictWitness{i, j, shared, lo, lo, false};
  if (lo < hi && intersect(interior(a), interior(b), shared))
    return ConflictWitness{i, j, shared, lo, hi, true};
  if (hi != lo && intersect(occupancy(a, hi), occupancy(b, hi), shared))
    return ConflictWitness{i, j, shared, hi, hi, false};
  return std::nullopt;
}

void require_same_joint_vertex(const JointState& a, const JointState& b) {
  if (a.agent_count() != b.agent_count())
    throw std::invalid_argument("states have different agent counts");
  for (int i = 0; i < a.agent_count(); ++i)
    if (a.envelopes[i].v != b.envelopes[i].v)
      throw std::invalid_argument("dominance needs a common joint vertex");
}

}  // namespace

ConflictReport conflict_set(const JointState& s) {
  ConflictReport report;
  const int n = s.agent_count();
  for (AgentId i = 0; i < n; ++i)
    for (AgentId j = i + 1; j < n; ++j)
      if (auto w = pair_conflict(s, i, j)) {
        report.agents |= agent_bit(i) | agent_bit(j);
        report.witnesses.push_back(*w);
      }
  return report;
}

bool strictly_dominates(const JointState& a, const JointState& b) {
  require_same_joint_vertex(a, b);
  for (int i = 0; i < a.agent_count(); ++i)
    if (!(a.envelopes[i].t < b.envelopes[i].t)) return false;
  return true;
}

bool weakly_dominates(const JointState& a, const JointState& b) {
  require_same_joint_vertex(a, b);
  for (int i = 0; i < a.agent_count(); ++i)
    if (!(a.envelopes[i].t <= b.envelopes[i].t)) return false;
  return true;
}

bool is_synchronized(const JointState& s) {
  for (const auto& e : s.envelopes)
    if (e.t != s.envelopes.front().t) return false;
  return true;
}

}  // namespace lss
