#pragma once

#include <cstdint>
#include <optional>

#include "lss/instance.hpp"

namespace lss {

struct OracleResult {
  enum class Status { found, none, cap_exceeded };
  Status status = Status::none;
  std::optional<Time> cost;
  Time tau;
  std::uint64_t states = 0;
  // True when some state was cut by the horizon, so "none" only means
  // "none within the horizon".
  bool horizon_hit = false;
};

// Exhaustive uniform-cost search over the joint tick lattice with tick length
// tau (gcd of all durations by default). Each agent may wait one tick, start a
// traversal, continue one, or (at its goal) stop for good; every tick costs
// tau per agent that has not stopped. States do not carry the clock, so an
// exhausted search without horizon cuts proves there is no solution.
OracleResult brute_force_oracle(const Instance& instance, std::int64_t horizon_ticks,
                                std::optional<Time> tau = std::nullopt,
                                std::size_t state_cap = 10'000'000);

}  // namespace lss
