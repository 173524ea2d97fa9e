#include "lss/oracle.hpp"

#include <functional>
#include <queue>
#include <stdexcept>
#include <unordered_map>

#include "lss/naive.hpp"

namespace lss {

namespace {

struct AgentTick {
  std::int32_t at;      // current vertex, or the tail of the edge being traversed
  std::int32_t toward;  // -1 unless traversing
  std::int32_t left;    // ticks until arrival
  std::int32_t stopped; // 1 once the agent has stopped at its goal for good
};

struct Option {
  AgentTick next;
  std::int32_t during[2];  // occupied throughout the open tick interval
  std::int32_t after[2];   // occupied at the closing instant
};

struct VecHash {
  std::size_t operator()(const std::vector<std::int32_t>& k) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : k) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
    return h;
  }
};

bool shares(const std::int32_t a[2], const std::int32_t b[2]) {
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      if (a[x] >= 0 && a[x] == b[y]) return true;
  return false;
}

}  // namespace

OracleResult brute_force_oracle(const Instance& instance, std::int64_t horizon_ticks,
                                std::optional<Time> tau, std::size_t state_cap) {
  OracleResult result;
  result.tau = tau ? *tau : common_unit(instance);
  const Time unit = result.tau;
  const int n = instance.agent_count();
  const Graph& g = instance.graph();

  // ticks[i][arc] = D^i(arc) / tau
  std::vector<std::vector<std::int32_t>> ticks(n, std::vector<std::int32_t>(g.arc_count()));
  for (AgentId i = 0; i < n; ++i)
    for (VertexId u = 0; u < g.vertex_count(); ++u)
      for (int k = 0; k < g.degree(u); ++k) {
        Time d = instance.arc_duration(i, u, k);
        if (d % unit != Time::zero()) throw std::invalid_argument("tau does not divide every duration");
        ticks[i][g.arc_begin(u) + k] = static_cast<std::int32_t>(d / unit);
      }

  auto options_of = [&](AgentId i, const AgentTick& a) {
    std::vector<Option> out;
    if (a.stopped) {
      out.push_back({a, {a.at, -1}, {a.at, -1}});
      return out;
    }
    if (a.toward >= 0) {
      AgentTick b = a;
      b.left -= 1;
      if (b.left == 0) b = {a.toward, -1, 0, 0};
      out.push_back({b, {a.at, a.toward}, {b.at, b.toward}});
      return out;
    }
    out.push_back({a, {a.at, -1}, {a.at, -1}});
    if (a.at == instance.goal(i)) out.push_back({{a.at, -1, 0, 1}, {a.at, -1}, {a.at, -1}});
    auto ngh = g.neighbors(a.at);
    for (int k = 0; k < static_cast<int>(ngh.size()); ++k) {
      std::int32_t d = ticks[i][g.arc_begin(a.at) + k];
      AgentTick b = d == 1 ? AgentTick{ngh[k], -1, 0, 0} : AgentTick{a.at, ngh[k], d - 1, 0};
      out.push_back({b, {a.at, ngh[k]}, {b.at, b.toward}});
    }
    return out;
  };

  auto encode = [](const std::vector<AgentTick>& s) {
    std::vector<std::int32_t> k;
    k.reserve(s.size() * 4);
    for (const auto& a : s) k.insert(k.end(), {a.at, a.toward, a.left, a.stopped});
    return k;
  };

  std::vector<std::vector<AgentTick>> states;
  std::vector<std::int64_t> best;  // cost in ticks
  std::unordered_map<std::vector<std::int32_t>, int, VecHash> index;
  using Entry = std::tuple<std::int64_t, std::int64_t, int>;  // cost, tick, id
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;

  std::vector<AgentTick> start;
  for (AgentId i = 0; i < n; ++i) start.push_back({instance.start(i), -1, 0, 0});
  index.emplace(encode(start), 0);
  states.push_back(start);
  best.push_back(0);
  open.push({0, 0, 0});

  std::vector<std::vector<Option>> opts(n);
  std::vector<std::size_t> pick(n);
  std::vector<AgentTick> next(n);
  while (!open.empty()) {
    auto [cost, tick, id] = open.top();
    open.pop();
    if (cost > best[id]) continue;
    const std::vector<AgentTick> cur = states[id];

    bool done = true;
    for (AgentId i = 0; i < n; ++i)
      if (!(cur[i].stopped || (cur[i].toward < 0 && cur[i].at == instance.goal(i)))) done = false;
    if (done) {
      result.status = OracleResult::Status::found;
      result.cost = unit * cost;
      result.states = states.size();
      return result;
    }
    if (tick >= horizon_ticks) {
      result.horizon_hit = true;
      continue;
    }

    for (AgentId i = 0; i < n; ++i) opts[i] = options_of(i, cur[i]);
    std::fill(pick.begin(), pick.end(), 0);
    while (true) {
      bool clash = false;
      for (AgentId i = 0; i < n && !clash; ++i)
        for (AgentId j = i + 1; j < n && !clash; ++j) {
          const Option& a = opts[i][pick[i]];
          const Option& b = opts[j][pick[j]];
          clash = shares(a.during, b.during) || shares(a.after, b.after);
        }
      if (!clash) {
        std::int64_t step = 0;
        for (AgentId i = 0; i < n; ++i) {
          next[i] = opts[i][pick[i]].next;
          if (!next[i].stopped) ++step;
        }
        auto key = encode(next);
        auto [it, fresh] = index.try_emplace(std::move(key), static_cast<int>(states.size()));
        if (fresh) {
          if (states.size() >= state_cap) {
            result.status = OracleResult::Status::cap_exceeded;
            result.states = states.size();
            return result;
          }
          states.push_back(next);
          best.push_back(cost + step);
          open.push({cost + step, tick + 1, it->second});
        } else if (cost + step < best[it->second]) {
          best[it->second] = cost + step;
          open.push({cost + step, tick + 1, it->second});
        }
      }
      int i = n - 1;
      for (; i >= 0; --i) {
        if (++pick[i] < opts[i].size()) break;
        pick[i] = 0;
      }
      if (i < 0) break;
    }
  }
  result.status = OracleResult::Status::none;
  result.states = states.size();
  return result;
}

}  // namespace lss
