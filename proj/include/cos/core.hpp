#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cosched {

/// Planar coordinates in kilometers (or degrees when the data uses a geo
/// convention; travel math is planar either way).
struct Location {
  double x = 0.0;
  double y = 0.0;
};

double euclidean_km(const Location& a, const Location& b);

/// One offline activity. Times are integer minutes since midnight.
struct Event {
  std::string id;
  int start = 0;
  int end = 0;
  Location location;
  std::string description;
};

enum class TravelMode { Planar, Matrix };

/// Travel-minute lookup between event venues. Planar mode derives minutes
/// from euclidean distance and a speed; matrix mode is a complete id-pair
/// table (may be asymmetric).
class TravelModel {
 public:
  using Matrix = std::map<std::string, std::map<std::string, int>>;

  static TravelModel planar(double speed_km_per_min);
  static TravelModel matrix(Matrix table);

  TravelMode mode() const { return mode_; }
  double speed() const { return speed_; }
  const Matrix& table() const { return table_; }

  /// Travel minutes from a to b. Planar results round up to whole minutes.
  /// Throws std::invalid_argument on a missing matrix entry.
  int minutes(const Event& a, const Event& b) const;

 private:
  TravelMode mode_ = TravelMode::Planar;
  double speed_ = 1.0;
  Matrix table_;
};

/// One user-day scheduling problem: events, travel model, utilities.
struct Instance {
  std::string user_id;
  std::pair<int, int> day_window{540, 1260};
  std::vector<Event> events;
  TravelModel travel;
  std::map<std::string, double> utilities;

  const Event* find_event(const std::string& id) const;
  /// Throws std::invalid_argument for an unknown id.
  const Event& event(const std::string& id) const;
  double utility(const std::string& id) const;

  /// Checks structural invariants (unique ids, start < end, finite
  /// coordinates, utility coverage and bounds, travel-model completeness).
  /// Throws std::invalid_argument on the first problem found.
  void validate() const;
};

enum class ViolationKind {
  TravelConflict,  // adjacent pair: gap < travel time
  Overlap,         // non-adjacent pair: closed windows intersect
  Duplicate,       // same id appears twice
};

struct Violation {
  ViolationKind kind;
  std::size_t first;   // position of the earlier event in the sequence
  std::size_t second;  // position of the later event
  std::string message;
};

/// An ordered event sequence with its claimed utility and feasibility.
struct Schedule {
  std::vector<std::string> event_ids;
  double total_utility = 0.0;
  bool feasible = true;
};

int travel_time(const TravelModel& model, const Event& a, const Event& b);

/// True iff succ can follow pred: succ.start - pred.end >= travel(pred, succ).
bool pair_compatible(const TravelModel& model, const Event& pred,
                     const Event& succ);

/// All feasibility violations of the sequence: incompatible adjacent pairs,
/// duplicated ids, and overlapping non-adjacent windows. Empty result means
/// the sequence is a feasible schedule. Throws on unknown ids.
std::vector<Violation> check_feasible(const Instance& instance,
                                      std::span<const std::string> event_ids);

/// Builds a Schedule from a sequence: utility is the left-to-right sum of
/// per-event utilities, feasible reflects check_feasible.
Schedule make_schedule(const Instance& instance,
                       std::vector<std::string> event_ids);

}  // namespace cosched
