#include "lss/naive.hpp"

#include <algorithm>
#include <chrono>
#include <queue>
#include <stdexcept>
#include <unordered_map>

namespace lss {

Time common_unit(const DurationTable& durations) {
  Time unit;
  for (AgentId i = 0; i < durations.agent_count(); ++i) {
    if (auto d = durations.default_value(i)) unit = gcd(unit, *d);
    for (const auto& [arc, d] : durations.overrides(i)) unit = gcd(unit, d);
  }
  if (unit < Time::units(1)) throw std::invalid_argument("durations are not commensurable");
  return unit;
}

Time common_unit(const Instance& instance) {
  const Graph& g = instance.graph();
  Time unit;
  for (AgentId i = 0; i < instance.agent_count(); ++i)
    for (VertexId u = 0; u < g.vertex_count(); ++u)
      for (int k = 0; k < g.degree(u); ++k) unit = gcd(unit, instance.arc_duration(i, u, k));
  if (unit == Time::zero()) unit = instance.min_duration();
  if (unit < Time::units(1)) throw std::invalid_argument("durations are not commensurable");
  return unit;
}

std::int64_t default_horizon(const Instance& instance, Time tau) {
  HeuristicTable table(instance);
  Time total;
  for (AgentId i = 0; i < instance.agent_count(); ++i) {
    Time c = table.cost_to_go(i, instance.start(i));
    if (!c.is_infinite()) total += c;
  }
  return 4 * (total / tau) + 16;
}

namespace {

// Per-agent slot of a time-augmented joint state: either at a vertex, or on
// the edge at->toward with `left` ticks remaining.
struct Slot {
  std::int32_t at;
  std::int32_t toward;
  std::int32_t left;
  std::int32_t stopped;
  bool operator==(const Slot&) const = default;
};

struct NaiveNode {
  std::vector<Slot> slots;
  std::int64_t tick;
  std::int64_t g;
  std::int64_t h;
  int parent;
};

struct KeyHasher {
  std::size_t operator()(const std::vector<std::int64_t>& k) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto x : k) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
    return h;
  }
};

std::vector<std::int64_t> key_of(const std::vector<Slot>& slots, std::int64_t tick) {
  std::vector<std::int64_t> k{tick};
  for (const auto& s : slots) k.insert(k.end(), {s.at, s.toward, s.left, s.stopped});
  return k;
}

struct Move {
  Slot next;
  VertexId occ[2];
  VertexId end[2];
};

bool overlaps(const VertexId a[2], const VertexId b[2]) {
  return (a[0] >= 0 && (a[0] == b[0] || a[0] == b[1])) ||
         (a[1] >= 0 && (a[1] == b[0] || a[1] == b[1]));
}

}  // namespace

SearchResult naive_search(const Instance& instance, std::optional<Time> tau_opt,
                          std::optional<std::int64_t> horizon_opt, const SearchParams& params) {
  if (params.weight < 1.0) throw std::invalid_argument("weight must be >= 1");
  const auto started = std::chrono::steady_clock::now();
  std::optional<std::chrono::steady_clock::time_point> deadline = params.deadline;
  if (!deadline && params.time_limit_s > 0)
    deadline = started + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                             std::chrono::duration<double>(params.time_limit_s));

  const Time tau = tau_opt ? *tau_opt : common_unit(instance);
  const std::int64_t horizon = horizon_opt ? *horizon_opt : default_horizon(instance, tau);
  if (horizon < 1) throw std::invalid_argument("horizon must be at least one tick");
  const int n = instance.agent_count();
  const Graph& g = instance.graph();
  HeuristicTable table(instance);

  std::vector<std::vector<std::int32_t>> arc_ticks(n, std::vector<std::int32_t>(g.arc_count()));
  for (AgentId i = 0; i < n; ++i)
    for (VertexId u = 0; u < g.vertex_count(); ++u)
      for (int k = 0; k < g.degree(u); ++k) {
        Time d = instance.arc_duration(i, u, k);
        if (d % tau != Time::zero()) throw std::invalid_argument("tau does not divide every duration");
        arc_ticks[i][g.arc_begin(u) + k] = static_cast<std::int32_t>(d / tau);
      }

  auto slot_h = [&](AgentId i, const Slot& s) -> std::int64_t {
    if (s.stopped) return 0;
    VertexId v = s.toward >= 0 ? s.toward : s.at;
    Time c = table.cost_to_go(i, v);
    if (c.is_infinite()) return -1;
    return c / tau + (s.toward >= 0 ? s.left : 0);
  };
  auto joint_h = [&](const std::vector<Slot>& slots) -> std::int64_t {
    std::int64_t h = 0;
    for (AgentId i = 0; i < n; ++i) {
      auto x = slot_h(i, slots[i]);
      if (x < 0) return -1;
      h += x;
    }
    return h;
  };
  auto at_goal = [&](const std::vector<Slot>& slots) {
    for (AgentId i = 0; i < n; ++i)
      if (slots[i].toward >= 0 || slots[i].at != instance.goal(i)) return false;
    return true;
  };

  SearchResult result;
  SearchStats& stats = result.stats;
  stats.outcome = Outcome::failure;
  auto finish = [&]() {
    stats.runtime_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    if (result.solution) result.solution->stats = stats;
    return result;
  };

  std::vector<NaiveNode> nodes;
  std::unordered_map<std::vector<std::int64_t>, int, KeyHasher> seen;
  struct Entry {
    double f;
    std::int64_t g;
    std::uint64_t seq;
    int id;
  };
  auto later = [&](const Entry& a, const Entry& b) {
    if (a.f != b.f) return a.f > b.f;
    if (params.tie_break == TieBreak::deeper_first && a.g != b.g) return a.g < b.g;
    return a.seq > b.seq;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(later)> open(later);
  std::uint64_t seq = 0;
  auto f_of = [&](std::int64_t gg, std::int64_t hh) {
    return static_cast<double>(gg) + params.weight * static_cast<double>(hh);
  };

  std::vector<Slot> start;
  for (AgentId i = 0; i < n; ++i) start.push_back({instance.start(i), -1, 0, 0});
  std::int64_t h0 = joint_h(start);
  if (h0 < 0) return finish();
  nodes.push_back({start, 0, 0, h0, -1});
  seen.emplace(key_of(start, 0), 0);
  open.push({f_of(0, h0), 0, seq++, 0});
  std::vector<char> closed(1, 0);

  std::vector<std::vector<Move>> moves(n);
  std::vector<std::size_t> pick(n);
  int goal_id = -1;
  while (!open.empty()) {
    if (params.expansion_limit && stats.expanded >= params.expansion_limit) {
      stats.outcome = Outcome::limit;
      return finish();
    }
    if (deadline && (stats.expanded & 255) == 0 && std::chrono::steady_clock::now() >= *deadline) {
      stats.outcome = Outcome::timeout;
      return finish();
    }
    Entry top = open.top();
    open.pop();
    if (closed[top.id] || top.g > nodes[top.id].g) continue;
    closed[top.id] = 1;
    const NaiveNode cur = nodes[top.id];
    if (at_goal(cur.slots)) {
      goal_id = top.id;
      break;
    }
    if (cur.tick >= horizon) continue;
    ++stats.expanded;

    for (AgentId i = 0; i < n; ++i) {
      const Slot& s = cur.slots[i];
      auto& m = moves[i];
      m.clear();
      if (s.stopped) {
        m.push_back({s, {s.at, -1}, {s.at, -1}});
      } else if (s.toward >= 0) {
        Slot b = s.left == 1 ? Slot{s.toward, -1, 0, 0} : Slot{s.at, s.toward, s.left - 1, 0};
        m.push_back({b, {s.at, s.toward}, {b.at, b.toward}});
      } else {
        m.push_back({s, {s.at, -1}, {s.at, -1}});
        if (s.at == instance.goal(i)) m.push_back({{s.at, -1, 0, 1}, {s.at, -1}, {s.at, -1}});
        auto ngh = g.neighbors(s.at);
        for (int k = 0; k < static_cast<int>(ngh.size()); ++k) {
          std::int32_t d = arc_ticks[i][g.arc_begin(s.at) + k];
          Slot b = d == 1 ? Slot{ngh[k], -1, 0, 0} : Slot{s.at, ngh[k], d - 1, 0};
          m.push_back({b, {s.at, ngh[k]}, {b.at, b.toward}});
        }
      }
    }

    std::fill(pick.begin(), pick.end(), 0);
    std::vector<Slot> next(n);
    while (true) {
      ++stats.generated;
      bool clash = false;
      for (AgentId i = 0; i < n && !clash; ++i)
        for (AgentId j = i + 1; j < n && !clash; ++j)
          clash = overlaps(moves[i][pick[i]].occ, moves[j][pick[j]].occ) ||
                  overlaps(moves[i][pick[i]].end, moves[j][pick[j]].end);
      if (clash) {
        ++stats.conflicts;
      } else {
        std::int64_t step = 0;
        for (AgentId i = 0; i < n; ++i) {
          next[i] = moves[i][pick[i]].next;
          if (!next[i].stopped) ++step;
        }
        std::int64_t ng = cur.g + step;
        auto [it, fresh] = seen.try_emplace(key_of(next, cur.tick + 1), static_cast<int>(nodes.size()));
        if (fresh) {
          std::int64_t nh = joint_h(next);
          nodes.push_back({next, cur.tick + 1, ng, nh, top.id});
          closed.push_back(0);
          open.push({f_of(ng, nh), ng, seq++, it->second});
        } else if (ng < nodes[it->second].g && !closed[it->second]) {
          nodes[it->second].g = ng;
          nodes[it->second].parent = top.id;
          open.push({f_of(ng, nodes[it->second].h), ng, seq++, it->second});
        } else {
          ++stats.pruned;
        }
      }
      int i = n - 1;
      for (; i >= 0; --i) {
        if (++pick[i] < moves[i].size()) break;
        pick[i] = 0;
      }
      if (i < 0) break;
    }
  }
  if (goal_id < 0) return finish();

  std::vector<int> chain;
  for (int k = goal_id; k >= 0; k = nodes[k].parent) chain.push_back(k);
  std::reverse(chain.begin(), chain.end());

  Solution sol;
  sol.algorithm = "naive";
  sol.cost = tau * nodes[goal_id].g;
  sol.tau = tau;
  sol.horizon = horizon;
  for (AgentId i = 0; i < n; ++i) {
    TimedPath path;
    path.agent = i;
    path.waypoints.push_back({instance.start(i), Time::zero(), Time::zero()});
    for (std::size_t k = 1; k < chain.size(); ++k) {
      const Slot& a = nodes[chain[k - 1]].slots[i];
      const Slot& b = nodes[chain[k]].slots[i];
      Time now = tau * nodes[chain[k]].tick;
      Time before = tau * nodes[chain[k - 1]].tick;
      bool was_static = a.toward < 0;
      bool arrived = b.toward < 0 && b.at != a.at;
      if (was_static && (b.toward >= 0 || b.at != a.at)) path.waypoints.back().depart = before;
      if (arrived) path.waypoints.push_back({b.at, now, now});
      else if (b.toward < 0 && !b.stopped) path.waypoints.back().depart = now;
    }
    sol.paths.push_back(std::move(path));
  }
  stats.outcome = Outcome::solved;
  result.solution = std::move(sol);
  return finish();
}

}  // namespace lss
