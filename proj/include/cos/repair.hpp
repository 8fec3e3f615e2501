#pragma once

#include <optional>

#include "cos/core.hpp"

namespace cosched {

struct Substitution {
  std::string removed;
  std::optional<std::string> inserted;  // nullopt when the event was deleted
  std::size_t position;                 // index in the sequence at that step
};

struct RepairOutcome {
  Schedule schedule;  // always feasible
  std::vector<Substitution> substitutions;
  double utility_delta;  // repaired utility minus the input's claimed utility
};

/// Fraction of events in the sequence that participate in at least one
/// feasibility violation. Empty sequence -> 0. Throws on unknown ids.
double conflict_rate(const Instance& instance,
                     std::span<const std::string> event_ids);

/// Local search that drops duplicate ids (keeping the first occurrence),
/// then repeatedly anchors on the first conflicted adjacent pair and either
/// substitutes the successor with the best-utility compatible unused event
/// or deletes it. Always terminates with a feasible schedule.
RepairOutcome repair_schedule(const Instance& instance,
                              std::span<const std::string> event_ids);

}  // namespace cosched
