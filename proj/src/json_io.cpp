#include "cos/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cosched {

using nlohmann::json;

json instance_to_json(const Instance& instance) {
  json events = json::array();
  for (const Event& e : instance.events) {
    json je = {{"id", e.id},
               {"start", e.start},
               {"end", e.end},
               {"x", e.location.x},
               {"y", e.location.y}};
    if (!e.description.empty()) je["description"] = e.description;
    events.push_back(std::move(je));
  }
  json travel;
  if (instance.travel.mode() == TravelMode::Planar) {
    travel = {{"mode", "planar"}, {"speed", instance.travel.speed()}};
  } else {
    travel = {{"mode", "matrix"}, {"matrix", instance.travel.table()}};
  }
  return {{"user_id", instance.user_id},
          {"day_window",
           {instance.day_window.first, instance.day_window.second}},
          {"events", std::move(events)},
          {"utilities", instance.utilities},
          {"travel", std::move(travel)}};
}

Instance instance_from_json(const json& j) {
  Instance instance;
  try {
    instance.user_id = j.value("user_id", std::string{});
    if (j.contains("day_window")) {
      instance.day_window = {j["day_window"].at(0).get<int>(),
                             j["day_window"].at(1).get<int>()};
    }
    for (const json& je : j.at("events")) {
      Event e;
      e.id = je.at("id").get<std::string>();
      e.start = je.at("start").get<int>();
      e.end = je.at("end").get<int>();
      e.location.x = je.value("x", 0.0);
      e.location.y = je.value("y", 0.0);
      e.description = je.value("description", std::string{});
      instance.events.push_back(std::move(e));
    }
    if (j.contains("utilities")) {
      instance.utilities =
          j["utilities"].get<std::map<std::string, double>>();
    }
    const json& travel = j.at("travel");
    std::string mode = travel.at("mode").get<std::string>();
    if (mode == "planar") {
      instance.travel = TravelModel::planar(travel.at("speed").get<double>());
    } else if (mode == "matrix") {
      instance.travel = TravelModel::matrix(
          travel.at("matrix").get<TravelModel::Matrix>());
    } else {
      throw std::invalid_argument("unknown travel mode: " + mode);
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed instance JSON: ") +
                                e.what());
  }
  instance.validate();
  return instance;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open instance file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::invalid_argument("cannot parse " + path + ": " + e.what());
  }
  return instance_from_json(j);
}

void save_instance(const Instance& instance, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << instance_to_json(instance).dump(2) << "\n";
}

json schedule_to_json(const Schedule& s) {
  return {{"event_ids", s.event_ids},
          {"total_utility", s.total_utility},
          {"feasible", s.feasible}};
}

json topk_to_json(const TopKResult& r) {
  json candidates = json::array();
  for (const RankedSchedule& c : r.candidates) {
    candidates.push_back(
        {{"rank", c.rank}, {"schedule", schedule_to_json(c.schedule)}});
  }
  return {{"candidates", std::move(candidates)}};
}

json violations_to_json(const std::vector<Violation>& vs) {
  json out = json::array();
  for (const Violation& v : vs) {
    const char* kind = v.kind == ViolationKind::TravelConflict ? "travel"
                       : v.kind == ViolationKind::Overlap      ? "overlap"
                                                               : "duplicate";
    out.push_back({{"kind", kind},
                   {"first", v.first},
                   {"second", v.second},
                   {"message", v.message}});
  }
  return out;
}

json repair_to_json(const RepairOutcome& outcome) {
  json subs = json::array();
  for (const Substitution& s : outcome.substitutions) {
    subs.push_back({{"removed", s.removed},
                    {"inserted", s.inserted ? json(*s.inserted) : json()},
                    {"position", s.position}});
  }
  return {{"schedule", schedule_to_json(outcome.schedule)},
          {"substitutions", std::move(subs)},
          {"utility_delta", outcome.utility_delta}};
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace cosched
