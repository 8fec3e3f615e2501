#pragma once

#include <string>

#include <json.hpp>

#include "cos/core.hpp"
#include "cos/repair.hpp"
#include "cos/solvers.hpp"

namespace cosched {

/// Instance document: {user_id, day_window:[start,end],
/// events:[{id,start,end,x,y,description?}], utilities:{id:score},
/// travel:{mode:"planar",speed} | {mode:"matrix",matrix:{a:{b:minutes}}}}.
nlohmann::json instance_to_json(const Instance& instance);
Instance instance_from_json(const nlohmann::json& j);

Instance load_instance(const std::string& path);
void save_instance(const Instance& instance, const std::string& path);

nlohmann::json schedule_to_json(const Schedule& s);
nlohmann::json topk_to_json(const TopKResult& r);
nlohmann::json violations_to_json(const std::vector<Violation>& vs);
nlohmann::json repair_to_json(const RepairOutcome& outcome);

std::string read_text_file(const std::string& path);

}  // namespace cosched
