#pragma once

#include <string>
#include <vector>

#include "lss/solution.hpp"

namespace lss {

struct PathConflict {
  AgentId first = 0;
  AgentId second = 0;
  VertexId vertex = 0;
  Time from;
  Time to;  // Time::infinity() when the overlap never ends
  bool from_open = false;
  bool to_open = false;
};

struct ValidationReport {
  std::vector<std::string> structural;
  std::vector<PathConflict> conflicts;
  bool ok() const { return structural.empty() && conflicts.empty(); }
};

// Checks paths against the instance (endpoints, adjacency, durations) and
// sweeps every agent pair for shared-vertex occupancy. Agents keep occupying
// their goal after the final waypoint.
ValidationReport validate(const Solution& solution, const Instance& instance);

// Sum over agents of the arrival time of the final waypoint (the last move
// into the goal); trailing goal waits are free.
Time solution_cost(const Solution& solution, const Instance& instance);

}  // namespace lss
