#pragma once

#include <cstdint>

#include "cos/core.hpp"

namespace cosched {

struct RankedSchedule {
  Schedule schedule;
  int rank = 0;  // 0 is best
};

/// Up to k feasible schedules ordered by utility descending, ties broken by
/// lexicographically smaller event-id sequence. Sequences are distinct.
struct TopKResult {
  std::vector<RankedSchedule> candidates;

  const Schedule& best() const { return candidates.front().schedule; }
};

struct GaConfig {
  int population_size = 64;
  int generations = 200;
  double mutation_rate = 0.1;
  double crossover_rate = 0.8;
  std::uint64_t seed = 0;
};

/// Exact top-k over all feasible schedules. States are "schedule ending at
/// event j" over an end-time-sorted event list; each state keeps a k-best
/// list. O(n^2 k log k) time. The empty schedule participates in the merge.
TopKResult solve_dp_topk(const Instance& instance, int k);

/// Same result as solve_dp_topk, with the per-state predecessor scan run
/// under OpenMP. Output is identical to the serial version.
TopKResult solve_dp_topk_parallel(const Instance& instance, int k);

/// Brute-force enumeration of every feasible sequence; the ground-truth
/// oracle. Guarded to <= 16 events unless allow_large is set.
TopKResult solve_exhaustive(const Instance& instance, int k,
                            bool allow_large = false);

/// Highest-utility-first insertion at the time-sorted position, keeping an
/// event only if the schedule stays feasible.
Schedule solve_greedy(const Instance& instance);

/// Bitmask GA with decode-repair (selected events are time-sorted and
/// infeasible ones dropped left to right), tournament selection of size 2,
/// uniform crossover, per-bit mutation, elitism of 1. Deterministic per seed.
Schedule solve_genetic(const Instance& instance, const GaConfig& config);

}  // namespace cosched
