#include "cos/repair.hpp"

#include <algorithm>
#include <set>

namespace cosched {

double conflict_rate(const Instance& instance,
                     std::span<const std::string> event_ids) {
  if (event_ids.empty()) return 0.0;
  std::set<std::size_t> conflicted;
  for (const Violation& v : check_feasible(instance, event_ids)) {
    conflicted.insert(v.first);
    conflicted.insert(v.second);
  }
  return static_cast<double>(conflicted.size()) /
         static_cast<double>(event_ids.size());
}

RepairOutcome repair_schedule(const Instance& instance,
                              std::span<const std::string> event_ids) {
  double claimed = 0.0;
  for (const std::string& id : event_ids) {
    instance.event(id);  // unknown ids fail up front
    claimed += instance.utility(id);
  }

  RepairOutcome out;
  std::vector<std::string> seq;
  for (const std::string& id : event_ids) {
    if (std::find(seq.begin(), seq.end(), id) != seq.end()) {
      out.substitutions.push_back({id, std::nullopt, seq.size()});
      continue;
    }
    seq.push_back(id);
  }

  // Candidate substitutes in selection order: utility descending, then id.
  std::vector<const Event*> by_utility;
  for (const Event& e : instance.events) by_utility.push_back(&e);
  std::sort(by_utility.begin(), by_utility.end(),
            [&](const Event* a, const Event* b) {
              double ua = instance.utility(a->id);
              double ub = instance.utility(b->id);
              if (ua != ub) return ua > ub;
              return a->id < b->id;
            });

  for (;;) {
    std::size_t bad = seq.size();
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
      if (!pair_compatible(instance.travel, instance.event(seq[i]),
                           instance.event(seq[i + 1]))) {
        bad = i;
        break;
      }
    }
    if (bad == seq.size()) break;

    const Event& anchor = instance.event(seq[bad]);
    const Event* after =
        bad + 2 < seq.size() ? &instance.event(seq[bad + 2]) : nullptr;
    const Event* substitute = nullptr;
    for (const Event* cand : by_utility) {
      if (std::find(seq.begin(), seq.end(), cand->id) != seq.end()) continue;
      if (!pair_compatible(instance.travel, anchor, *cand)) continue;
      if (after && !pair_compatible(instance.travel, *cand, *after)) continue;
      substitute = cand;
      break;
    }
    if (substitute) {
      out.substitutions.push_back({seq[bad + 1], substitute->id, bad + 1});
      seq[bad + 1] = substitute->id;
    } else {
      out.substitutions.push_back({seq[bad + 1], std::nullopt, bad + 1});
      seq.erase(seq.begin() + static_cast<std::ptrdiff_t>(bad + 1));
    }
  }

  out.schedule = make_schedule(instance, std::move(seq));
  out.utility_delta = out.schedule.total_utility - claimed;
  return out;
}

}  // namespace cosched
