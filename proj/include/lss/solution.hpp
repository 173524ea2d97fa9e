#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lss/instance.hpp"

namespace lss {

enum class Outcome { solved, failure, timeout, limit };

const char* to_string(Outcome o);
Outcome outcome_from_string(const std::string& s);

struct SearchStats {
  std::uint64_t expanded = 0;
  std::uint64_t generated = 0;
  std::uint64_t pruned = 0;      // discarded by dominance or duplicate check
  std::uint64_t conflicts = 0;   // discarded because the child was in conflict
  std::uint64_t subplanner_calls = 0;
  double runtime_s = 0.0;
  Outcome outcome = Outcome::failure;
};

struct Waypoint {
  VertexId v = 0;
  Time arrive;
  Time depart;
  bool operator==(const Waypoint&) const = default;
};

struct TimedPath {
  AgentId agent = 0;
  std::vector<Waypoint> waypoints;
};

struct Solution {
  std::vector<TimedPath> paths;
  Time cost;
  std::string algorithm;
  SearchStats stats;
  // Set by the time-discretized solvers: tick length and horizon in ticks.
  std::optional<Time> tau;
  std::optional<std::int64_t> horizon;
};

// Solution JSON; times are integers in micro-units ("time_scale" per second).
nlohmann::json solution_to_json(const Solution& solution);
nlohmann::json stats_to_json(const SearchStats& stats);
Solution solution_from_json(const nlohmann::json& j);

}  // namespace lss
