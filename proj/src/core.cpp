#include "cos/core.hpp"

#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cosched {

double euclidean_km(const Location& a, const Location& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

TravelModel TravelModel::planar(double speed_km_per_min) {
  if (!(speed_km_per_min > 0.0)) {
    throw std::invalid_argument("planar travel speed must be positive");
  }
  TravelModel m;
  m.mode_ = TravelMode::Planar;
  m.speed_ = speed_km_per_min;
  return m;
}

TravelModel TravelModel::matrix(Matrix table) {
  TravelModel m;
  m.mode_ = TravelMode::Matrix;
  m.table_ = std::move(table);
  return m;
}

int TravelModel::minutes(const Event& a, const Event& b) const {
  if (a.id == b.id) return 0;
  if (mode_ == TravelMode::Planar) {
    double km = euclidean_km(a.location, b.location);
    if (km == 0.0) return 0;
    return static_cast<int>(std::ceil(km / speed_));
  }
  auto row = table_.find(a.id);
  if (row != table_.end()) {
    auto cell = row->second.find(b.id);
    if (cell != row->second.end()) return cell->second;
  }
  throw std::invalid_argument("travel matrix has no entry for pair (" + a.id +
                              ", " + b.id + ")");
}

const Event* Instance::find_event(const std::string& id) const {
  for (const Event& e : events) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

const Event& Instance::event(const std::string& id) const {
  const Event* e = find_event(id);
  if (!e) throw std::invalid_argument("unknown event id: " + id);
  return *e;
}

double Instance::utility(const std::string& id) const {
  auto it = utilities.find(id);
  if (it == utilities.end()) {
    throw std::invalid_argument("no utility entry for event id: " + id);
  }
  return it->second;
}

void Instance::validate() const {
  std::set<std::string> ids;
  for (const Event& e : events) {
    if (e.id.empty()) throw std::invalid_argument("event with empty id");
    if (!ids.insert(e.id).second) {
      throw std::invalid_argument("duplicate event id: " + e.id);
    }
    if (e.start >= e.end) {
      throw std::invalid_argument("event " + e.id + " has start >= end");
    }
    if (!std::isfinite(e.location.x) || !std::isfinite(e.location.y)) {
      throw std::invalid_argument("event " + e.id +
                                  " has non-finite coordinates");
    }
    auto it = utilities.find(e.id);
    if (it == utilities.end()) {
      throw std::invalid_argument("no utility entry for event id: " + e.id);
    }
    if (!(it->second >= 0.0 && it->second <= 1.0)) {
      throw std::invalid_argument("utility for event " + e.id +
                                  " is outside [0,1]");
    }
  }
  if (day_window.first >= day_window.second) {
    throw std::invalid_argument("day window is empty");
  }
  if (travel.mode() == TravelMode::Matrix) {
    for (const Event& a : events) {
      for (const Event& b : events) {
        auto row = travel.table().find(a.id);
        const int* cell = nullptr;
        if (row != travel.table().end()) {
          auto c = row->second.find(b.id);
          if (c != row->second.end()) cell = &c->second;
        }
        if (!cell) {
          throw std::invalid_argument("travel matrix missing entry (" + a.id +
                                      ", " + b.id + ")");
        }
        if (a.id == b.id && *cell != 0) {
          throw std::invalid_argument("travel matrix diagonal nonzero at " +
                                      a.id);
        }
        if (*cell < 0) {
          throw std::invalid_argument("negative travel time (" + a.id + ", " +
                                      b.id + ")");
        }
      }
    }
  }
}

int travel_time(const TravelModel& model, const Event& a, const Event& b) {
  return model.minutes(a, b);
}

bool pair_compatible(const TravelModel& model, const Event& pred,
                     const Event& succ) {
  return succ.start - pred.end >= travel_time(model, pred, succ);
}

std::vector<Violation> check_feasible(const Instance& instance,
                                      std::span<const std::string> event_ids) {
  std::vector<const Event*> seq;
  seq.reserve(event_ids.size());
  for (const std::string& id : event_ids) seq.push_back(&instance.event(id));

  std::vector<Violation> out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (seq[i]->id == seq[j]->id) {
        out.push_back({ViolationKind::Duplicate, i, j,
                       "event " + seq[i]->id + " appears twice"});
      }
    }
  }
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    if (!pair_compatible(instance.travel, *seq[i], *seq[i + 1])) {
      std::ostringstream msg;
      msg << "gap " << (seq[i + 1]->start - seq[i]->end)
          << " min between " << seq[i]->id << " and " << seq[i + 1]->id
          << " is below travel time "
          << travel_time(instance.travel, *seq[i], *seq[i + 1]) << " min";
      out.push_back({ViolationKind::TravelConflict, i, i + 1, msg.str()});
    }
  }
  // Closed-interval overlap applies to every pair; adjacent pairs are already
  // covered by the stricter travel check above.
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 2; j < seq.size(); ++j) {
      if (seq[i]->start <= seq[j]->end && seq[j]->start <= seq[i]->end) {
        out.push_back({ViolationKind::Overlap, i, j,
                       "windows of " + seq[i]->id + " and " + seq[j]->id +
                           " overlap"});
      }
    }
  }
  return out;
}

Schedule make_schedule(const Instance& instance,
                       std::vector<std::string> event_ids) {
  Schedule s;
  s.total_utility = 0.0;
  for (const std::string& id : event_ids) {
    s.total_utility += instance.utility(id);
  }
  s.feasible = check_feasible(instance, event_ids).empty();
  s.event_ids = std::move(event_ids);
  return s;
}

}  // namespace cosched
