#include "lss/solution.hpp"

#include <stdexcept>

namespace lss {

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::solved: return "solved";
    case Outcome::failure: return "failure";
    case Outcome::timeout: return "timeout";
    case Outcome::limit: return "limit";
  }
  return "?";
}

Outcome outcome_from_string(const std::string& s) {
  if (s == "solved") return Outcome::solved;
  if (s == "failure") return Outcome::failure;
  if (s == "timeout") return Outcome::timeout;
  if (s == "limit") return Outcome::limit;
  throw std::invalid_argument("unknown outcome '" + s + "'");
}

nlohmann::json stats_to_json(const SearchStats& stats) {
  return {{"expanded", stats.expanded},
          {"generated", stats.generated},
          {"pruned", stats.pruned},
          {"conflicts", stats.conflicts},
          {"subplanner_calls", stats.subplanner_calls},
          {"runtime_s", stats.runtime_s},
          {"outcome", to_string(stats.outcome)}};
}

nlohmann::json solution_to_json(const Solution& solution) {
  nlohmann::json j;
  j["time_scale"] = Time::kUnitsPerSecond;
  j["algorithm"] = solution.algorithm;
  j["cost"] = solution.cost.count();
  j["stats"] = stats_to_json(solution.stats);
  if (solution.tau) j["tau"] = solution.tau->count();
  if (solution.horizon) j["horizon"] = *solution.horizon;
  j["paths"] = nlohmann::json::array();
  for (const auto& path : solution.paths) {
    nlohmann::json wps = nlohmann::json::array();
    for (const auto& w : path.waypoints)
      wps.push_back({{"v", w.v}, {"arrive", w.arrive.count()}, {"depart", w.depart.count()}});
    j["paths"].push_back({{"agent", path.agent}, {"waypoints", wps}});
  }
  return j;
}

Solution solution_from_json(const nlohmann::json& j) {
  if (j.value("time_scale", Time::kUnitsPerSecond) != Time::kUnitsPerSecond)
    throw std::invalid_argument("unsupported time_scale");
  Solution s;
  s.algorithm = j.value("algorithm", "");
  s.cost = Time(j.value("cost", std::int64_t{0}));
  if (j.contains("stats")) {
    const auto& st = j.at("stats");
    s.stats.expanded = st.value("expanded", std::uint64_t{0});
    s.stats.generated = st.value("generated", std::uint64_t{0});
    s.stats.pruned = st.value("pruned", std::uint64_t{0});
    s.stats.conflicts = st.value("conflicts", std::uint64_t{0});
    s.stats.subplanner_calls = st.value("subplanner_calls", std::uint64_t{0});
    s.stats.runtime_s = st.value("runtime_s", 0.0);
    s.stats.outcome = outcome_from_string(st.value("outcome", std::string("solved")));
  }
  for (const auto& p : j.at("paths")) {
    TimedPath path;
    path.agent = p.at("agent").get<int>();
    for (const auto& w : p.at("waypoints"))
      path.waypoints.push_back({w.at("v").get<int>(), Time(w.at("arrive").get<std::int64_t>()),
                                Time(w.at("depart").get<std::int64_t>())});
    s.paths.push_back(std::move(path));
  }
  return s;
}

}  // namespace lss
