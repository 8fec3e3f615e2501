#include "cos/trace.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace cosched {
namespace {

std::string fmt2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool istarts_with(const std::string& s, const std::string& prefix) {
  if (s.size() < prefix.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(s[i])) !=
        std::tolower(static_cast<unsigned char>(prefix[i]))) {
      return false;
    }
  }
  return true;
}

std::string candidate_line(const Schedule& s, const Instance& instance) {
  if (s.event_ids.empty()) return "(none)";
  std::ostringstream os;
  for (std::size_t i = 0; i < s.event_ids.size(); ++i) {
    if (i) os << " -> ";
    const Event& e = instance.event(s.event_ids[i]);
    os << e.id << " (" << e.start << "-" << e.end << ")";
  }
  return os.str();
}

// Strip an optional "N." list prefix.
std::string strip_enum(const std::string& line) {
  std::size_t i = 0;
  while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i])))
    ++i;
  if (i > 0 && i < line.size() && line[i] == '.') {
    return trim(line.substr(i + 1));
  }
  return line;
}

// An event token is "id" or "id (start-end)".
std::string strip_times(const std::string& token) {
  std::size_t p = token.rfind(" (");
  if (p != std::string::npos && token.back() == ')') {
    return trim(token.substr(0, p));
  }
  return trim(token);
}

std::vector<std::string> split_arrow(const std::string& text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  for (;;) {
    std::size_t arrow = text.find("->", pos);
    if (arrow == std::string::npos) {
      out.push_back(trim(text.substr(pos)));
      break;
    }
    out.push_back(trim(text.substr(pos, arrow - pos)));
    pos = arrow + 2;
  }
  out.erase(std::remove(out.begin(), out.end(), std::string{}), out.end());
  return out;
}

}  // namespace

CosTrace build_trace(const Instance& instance, int k) {
  CosTrace trace;
  trace.exploration = solve_dp_topk(instance, k);
  for (std::size_t c = 0; c < trace.exploration.candidates.size(); ++c) {
    const Schedule& s = trace.exploration.candidates[c].schedule;
    VerificationEntry entry;
    entry.candidate_index = static_cast<int>(c);
    for (const std::string& id : s.event_ids) {
      entry.terms.push_back(instance.utility(id));
      entry.sum += entry.terms.back();
    }
    trace.verification.push_back(std::move(entry));
  }
  trace.integration_index = 0;
  for (std::size_t c = 1; c < trace.verification.size(); ++c) {
    if (trace.verification[c].sum >
        trace.verification[trace.integration_index].sum) {
      trace.integration_index = static_cast<int>(c);
    }
  }
  trace.chosen =
      trace.exploration.candidates[trace.integration_index].schedule;
  return trace;
}

std::string render_trace(const CosTrace& trace, const Instance& instance) {
  std::ostringstream os;
  os << "Exploration:\n";
  for (std::size_t c = 0; c < trace.exploration.candidates.size(); ++c) {
    os << (c + 1) << ". "
       << candidate_line(trace.exploration.candidates[c].schedule, instance)
       << "\n";
  }
  os << "Verification:\n";
  for (std::size_t c = 0; c < trace.verification.size(); ++c) {
    const VerificationEntry& v = trace.verification[c];
    os << (c + 1) << ". ";
    if (v.terms.empty()) {
      os << fmt2(v.sum);
    } else {
      for (std::size_t t = 0; t < v.terms.size(); ++t) {
        if (t) os << " + ";
        os << fmt2(v.terms[t]);
      }
      os << " = " << fmt2(v.sum);
    }
    os << "\n";
  }
  os << "Integration:\n";
  if (trace.chosen.event_ids.empty()) {
    os << "Best schedule: (none) with utility " << fmt2(0.0) << "\n";
  } else {
    os << "Best schedule: ";
    for (std::size_t i = 0; i < trace.chosen.event_ids.size(); ++i) {
      if (i) os << " -> ";
      os << trace.chosen.event_ids[i];
    }
    os << " with utility " << fmt2(trace.chosen.total_utility) << "\n";
  }
  return os.str();
}

TraceParse parse_trace(const std::string& text, const Instance& instance) {
  TraceParse result;
  enum class Section { None, Exploration, Verification, Integration };
  Section section = Section::None;
  bool have_integration = false;
  std::vector<std::string> integration_ids;

  auto filter_known = [&](const std::vector<std::string>& raw) {
    std::vector<std::string> known;
    for (const std::string& id : raw) {
      if (id == "(none)") continue;
      if (instance.find_event(id)) {
        known.push_back(id);
      } else {
        result.issues.push_back("unknown event id dropped: " + id);
      }
    }
    return known;
  };

  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    std::string line = trim(raw);
    if (line.empty()) continue;
    if (istarts_with(line, "exploration")) {
      section = Section::Exploration;
      continue;
    }
    if (istarts_with(line, "verification")) {
      section = Section::Verification;
      continue;
    }
    if (istarts_with(line, "integration")) {
      section = Section::Integration;
      continue;
    }
    std::size_t best = line.find("Best schedule:");
    if (best != std::string::npos) {
      std::string rest = line.substr(best + 14);
      std::size_t with = rest.find(" with utility");
      if (with != std::string::npos) rest = rest.substr(0, with);
      rest = trim(rest);
      std::vector<std::string> raw_ids;
      if (rest != "(none)" && !rest.empty()) raw_ids = split_arrow(rest);
      for (std::string& t : raw_ids) t = strip_times(t);
      integration_ids = filter_known(raw_ids);
      have_integration = true;
      continue;
    }
    switch (section) {
      case Section::Exploration: {
        std::string body = strip_enum(line);
        if (body == "(none)" || body.empty()) {
          result.exploration.push_back({});
          break;
        }
        std::vector<std::string> tokens = split_arrow(body);
        for (std::string& t : tokens) t = strip_times(t);
        result.exploration.push_back(filter_known(tokens));
        break;
      }
      case Section::Verification: {
        std::string body = strip_enum(line);
        std::size_t eq = body.rfind('=');
        std::string num = trim(eq == std::string::npos ? body
                                                       : body.substr(eq + 1));
        try {
          std::size_t used = 0;
          double v = std::stod(num, &used);
          if (used == num.size()) {
            result.verification_sums.push_back(v);
          } else {
            result.issues.push_back("malformed verification line: " + line);
          }
        } catch (const std::exception&) {
          result.issues.push_back("malformed verification line: " + line);
        }
        break;
      }
      default:
        break;  // unrecognized prose is ignored
    }
  }

  if (have_integration) {
    result.sequence = integration_ids;
    result.ok = true;
  } else if (!result.exploration.empty()) {
    result.sequence = result.exploration.back();
    result.ok = true;
    result.issues.push_back(
        "Integration section missing; using the last Exploration candidate");
  } else {
    result.issues.push_back("no extractable event sequence");
  }
  return result;
}

std::string render_prompt(const Instance& instance) {
  std::ostringstream os;
  os << "User: " << instance.user_id << "\n";
  os << "Day window: " << instance.day_window.first << "-"
     << instance.day_window.second << " minutes since midnight.\n";
  os << "Events:\n";
  for (const Event& e : instance.events) {
    os << "- " << e.id << ": " << e.start << "-" << e.end << ", location ("
       << fmt2(e.location.x) << ", " << fmt2(e.location.y) << "), utility "
       << fmt2(instance.utility(e.id));
    if (!e.description.empty()) os << ", " << e.description;
    os << "\n";
  }
  os << "Select the feasible event schedule with the highest total utility. "
        "Adjacent events must leave a gap covering the travel time between "
        "their venues.\n";
  return os.str();
}

int emit_sft_dataset(const std::vector<Instance>& instances, int k,
                     std::ostream& out) {
  int written = 0;
  for (const Instance& instance : instances) {
    CosTrace trace = build_trace(instance, k);
    nlohmann::json record = {
        {"prompt", render_prompt(instance)},
        {"completion", render_trace(trace, instance)},
    };
    out << record.dump() << "\n";
    if (!out) throw std::runtime_error("failed writing SFT dataset record");
    ++written;
  }
  return written;
}

}  // namespace cosched
