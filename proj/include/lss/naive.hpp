#pragma once

#include <cstdint>
#include <optional>

#include "lss/search.hpp"

namespace lss {

// Greatest common divisor of every duration the instance can produce.
// Throws std::invalid_argument when it falls below one fixed-point unit.
Time common_unit(const Instance& instance);
Time common_unit(const DurationTable& durations);

// 4 * (sum of individual shortest times) / tau + 16 ticks.
std::int64_t default_horizon(const Instance& instance, Time tau);

// A* over the time-augmented joint graph: one expansion per tick, each agent
// waits one tick, continues or starts a traversal, or stops for good at its
// goal. Same occupancy and cost semantics as the LS searches.
SearchResult naive_search(const Instance& instance, std::optional<Time> tau = std::nullopt,
                          std::optional<std::int64_t> horizon = std::nullopt,
                          const SearchParams& params = {});

}  // namespace lss
