#include "lss/validate.hpp"

#include <algorithm>
#include <sstream>

namespace lss {

namespace {

// Occupancy of one vertex by one agent over an interval with open/closed ends.
struct Stay {
  VertexId vertex;
  Time lo, hi;
  bool lo_open, hi_open;
};

std::vector<Stay> stays_of(const TimedPath& path) {
  // Consecutive waypoints at the same vertex are one stay.
  std::vector<Waypoint> wps;
  for (const auto& w : path.waypoints) {
    if (!wps.empty() && wps.back().v == w.v) wps.back().depart = w.depart;
    else wps.push_back(w);
  }
  std::vector<Stay> out;
  for (std::size_t k = 0; k < wps.size(); ++k) {
    Stay s{wps[k].v, Time::zero(), Time::infinity(), false, false};
    if (k > 0) {
      s.lo = wps[k - 1].depart;  // entered during the open traversal interval
      s.lo_open = true;
    }
    if (k + 1 < wps.size()) {
      s.hi = wps[k + 1].arrive;  // at the arrival instant the agent is only at the next vertex
      s.hi_open = true;
    }
    out.push_back(s);
  }
  return out;
}

bool overlap(const Stay& a, const Stay& b, PathConflict& c) {
  Time lo = std::max(a.lo, b.lo);
  bool lo_open = (a.lo == lo && a.lo_open) || (b.lo == lo && b.lo_open);
  Time hi = std::min(a.hi, b.hi);
  bool hi_open = (a.hi == hi && a.hi_open) || (b.hi == hi && b.hi_open);
  if (lo < hi || (lo == hi && !lo_open && !hi_open)) {
    c.vertex = a.vertex;
    c.from = lo;
    c.to = hi;
    c.from_open = lo_open;
    c.to_open = hi_open;
    return true;
  }
  return false;
}

void check_structure(const TimedPath& path, const Instance& instance,
                     std::vector<std::string>& out) {
  auto fail = [&](const std::string& what) {
    out.push_back("agent " + std::to_string(path.agent) + ": " + what);
  };
  const AgentId i = path.agent;
  const auto& w = path.waypoints;
  if (w.empty()) return fail("empty path");
  if (w.front().v != instance.start(i)) fail("does not start at its start vertex");
  if (w.front().arrive != Time::zero()) fail("first waypoint does not arrive at time 0");
  if (w.back().v != instance.goal(i)) fail("does not end at its goal vertex");
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (!instance.graph().valid(w[k].v)) return fail("waypoint " + std::to_string(k) + " is not a vertex");
    if (w[k].depart < w[k].arrive) fail("waypoint " + std::to_string(k) + " departs before it arrives");
    if (k + 1 == w.size()) break;
    const Waypoint& a = w[k];
    const Waypoint& b = w[k + 1];
    if (a.v == b.v) {
      if (b.arrive != a.depart) fail("gap between waits at waypoint " + std::to_string(k));
      continue;
    }
    if (!instance.graph().has_edge(a.v, b.v)) {
      std::ostringstream msg;
      msg << "waypoints " << k << " and " << k + 1 << " (" << a.v << ", " << b.v
          << ") are not adjacent";
      fail(msg.str());
      continue;
    }
    if (b.arrive - a.depart != instance.duration(i, a.v, b.v)) {
      std::ostringstream msg;
      msg << "traversal " << a.v << "->" << b.v << " takes " << (b.arrive - a.depart)
          << ", expected " << instance.duration(i, a.v, b.v);
      fail(msg.str());
    }
  }
}

}  // namespace

ValidationReport validate(const Solution& solution, const Instance& instance) {
  ValidationReport report;
  const int n = instance.agent_count();
  std::vector<const TimedPath*> by_agent(n, nullptr);
  for (const auto& p : solution.paths) {
    if (p.agent < 0 || p.agent >= n) {
      report.structural.push_back("path for unknown agent " + std::to_string(p.agent));
      continue;
    }
    if (by_agent[p.agent]) report.structural.push_back("duplicate path for agent " + std::to_string(p.agent));
    by_agent[p.agent] = &p;
  }
  for (AgentId i = 0; i < n; ++i)
    if (!by_agent[i]) report.structural.push_back("missing path for agent " + std::to_string(i));
  if (!report.structural.empty()) return report;

  for (const auto* p : by_agent) check_structure(*p, instance, report.structural);
  if (!report.structural.empty()) return report;

  std::vector<std::vector<Stay>> stays;
  for (const auto* p : by_agent) stays.push_back(stays_of(*p));
  for (AgentId i = 0; i < n; ++i)
    for (AgentId j = i + 1; j < n; ++j)
      for (const Stay& a : stays[i])
        for (const Stay& b : stays[j]) {
          if (a.vertex != b.vertex) continue;
          PathConflict c;
          if (overlap(a, b, c)) {
            c.first = i;
            c.second = j;
            report.conflicts.push_back(c);
          }
        }
  return report;
}

Time solution_cost(const Solution& solution, const Instance&) {
  Time total;
  for (const auto& p : solution.paths) {
    if (p.waypoints.empty()) continue;
    // Arrival of the final waypoint; merged trailing waits do not change it.
    std::size_t k = p.waypoints.size() - 1;
    while (k > 0 && p.waypoints[k - 1].v == p.waypoints[k].v) --k;
    total += p.waypoints[k].arrive;
  }
  return total;
}

}  // namespace lss
