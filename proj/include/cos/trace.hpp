#pragma once

#include <iosfwd>
#include <string>

#include "cos/solvers.hpp"

namespace cosched {

struct VerificationEntry {
  int candidate_index = 0;
  std::vector<double> terms;  // per-event utilities in sequence order
  double sum = 0.0;
};

/// The three-stage reasoning record: explored candidates, their term-by-term
/// utility recomputation, and the selected best schedule.
struct CosTrace {
  TopKResult exploration;
  std::vector<VerificationEntry> verification;
  int integration_index = 0;
  Schedule chosen;
};

CosTrace build_trace(const Instance& instance, int k);

/// Deterministic text form:
///
///   Exploration:
///   1. A (540-600) -> B (660-720)
///   Verification:
///   1. 0.60 + 0.75 = 1.35
///   Integration:
///   Best schedule: A -> B with utility 1.35
///
/// The empty schedule renders as "(none)". Utilities print to 2 decimals.
std::string render_trace(const CosTrace& trace, const Instance& instance);

struct TraceParse {
  bool ok = false;
  /// The extracted event sequence, unvalidated: Integration first, falling
  /// back to the last Exploration candidate. Unknown ids are dropped.
  std::vector<std::string> sequence;
  std::vector<std::vector<std::string>> exploration;
  std::vector<double> verification_sums;
  std::vector<std::string> issues;
};

/// Tolerant parser for model-emitted trace text. Malformed lines and unknown
/// ids become issue entries, not failures; ok is false only when no sequence
/// could be extracted at all.
TraceParse parse_trace(const std::string& text, const Instance& instance);

/// The problem statement side of an SFT pair: user, day window, and the
/// event list with times, coordinates, and utilities.
std::string render_prompt(const Instance& instance);

/// Writes one {"prompt": ..., "completion": ...} JSON record per instance,
/// newline-terminated. Returns the number of records written.
int emit_sft_dataset(const std::vector<Instance>& instances, int k,
                     std::ostream& out);

}  // namespace cosched
