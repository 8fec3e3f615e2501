#include "cos/bench.hpp"

#include <chrono>
#include <cstdio>
#include <ostream>
#include <random>
#include <stdexcept>

#include <json.hpp>

#include "cos/repair.hpp"
#include "cos/trace.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cosched {
namespace {

std::string padded_id(int index, int total) {
  int width = 1;
  for (int v = total; v >= 10; v /= 10) ++width;
  char buf[32];
  std::snprintf(buf, sizeof(buf), "e%0*d", width, index + 1);
  return buf;
}

}  // namespace

Instance generate_instance(const GenConfig& config) {
  const auto [w0, w1] = config.day_window;
  if (config.n_events < 0) throw std::invalid_argument("n_events < 0");
  if (w0 >= w1) throw std::invalid_argument("empty day window");
  const auto [dmin, dmax] = config.duration_range;
  if (dmin < 1 || dmin > dmax) {
    throw std::invalid_argument("invalid duration range");
  }
  if (dmin > w1 - w0) {
    throw std::invalid_argument("minimum duration exceeds the day window");
  }
  if (!(config.area_km > 0.0)) throw std::invalid_argument("area must be > 0");

  Instance instance;
  instance.user_id = "u" + std::to_string(config.seed);
  instance.day_window = config.day_window;
  instance.travel = TravelModel::planar(config.speed_km_per_min);

  std::mt19937_64 rng(config.seed);
  std::uniform_int_distribution<int> start_d(w0, w1 - 1);
  std::uniform_int_distribution<int> dur_d(dmin, dmax);
  std::uniform_real_distribution<double> coord_d(0.0, config.area_km);
  std::uniform_real_distribution<double> util_d(0.0, 1.0);

  for (int i = 0; i < config.n_events; ++i) {
    Event e;
    e.id = padded_id(i, config.n_events);
    e.start = start_d(rng);
    e.end = std::min(e.start + dur_d(rng), w1);
    e.location.x = coord_d(rng);
    e.location.y = coord_d(rng);
    instance.utilities[e.id] = util_d(rng);
    instance.events.push_back(std::move(e));
  }
  instance.validate();
  return instance;
}

namespace {

// Backtracking search for a Hamiltonian path; fills `order` with the vertex
// sequence when one exists. Exponential in the worst case, which is fine for
// a test-instance generator.
bool find_hamiltonian_path(const Digraph& graph, std::vector<int>& order) {
  std::vector<std::vector<bool>> adj(graph.n, std::vector<bool>(graph.n));
  for (auto [u, v] : graph.edges) {
    if (u != v) adj[u][v] = true;
  }
  std::vector<bool> used(graph.n, false);
  order.clear();
  auto dfs = [&](auto&& self, int at) -> bool {
    order.push_back(at);
    if (static_cast<int>(order.size()) == graph.n) return true;
    for (int next = 0; next < graph.n; ++next) {
      if (used[next] || !adj[at][next]) continue;
      used[next] = true;
      if (self(self, next)) return true;
      used[next] = false;
    }
    order.pop_back();
    return false;
  };
  for (int start = 0; start < graph.n; ++start) {
    used.assign(graph.n, false);
    used[start] = true;
    if (dfs(dfs, start)) return true;
  }
  return false;
}

}  // namespace

Instance reduce_dhp(const Digraph& graph) {
  if (graph.n < 1) throw std::invalid_argument("digraph needs >= 1 vertex");
  for (auto [u, v] : graph.edges) {
    if (u < 0 || u >= graph.n || v < 0 || v >= graph.n) {
      throw std::invalid_argument("edge endpoint out of range");
    }
  }
  Instance instance;
  instance.user_id = "dhp";
  instance.day_window = {10, 10 * graph.n + 9};
  const int sentinel = instance.day_window.second - instance.day_window.first + 1;

  // Feasible schedules always run in time-window order, so the window
  // assignment decides which vertex orders are reachable at all. Assign
  // windows along a Hamiltonian path when one exists; then a full-utility
  // schedule exists if and only if the digraph has a Hamiltonian path.
  std::vector<int> order;
  if (!find_hamiltonian_path(graph, order)) {
    order.resize(graph.n);
    for (int i = 0; i < graph.n; ++i) order[i] = i;
  }

  std::vector<std::string> ids(graph.n);
  for (int i = 0; i < graph.n; ++i) ids[i] = "v" + std::to_string(i + 1);
  instance.events.resize(graph.n);
  for (int pos = 0; pos < graph.n; ++pos) {
    Event& e = instance.events[pos];
    e.id = ids[order[pos]];
    e.start = 10 * (pos + 1);
    e.end = 10 * (pos + 1) + 9;
    instance.utilities[e.id] = 1.0;
  }
  TravelModel::Matrix table;
  for (int a = 0; a < graph.n; ++a) {
    for (int b = 0; b < graph.n; ++b) {
      table[ids[a]][ids[b]] = a == b ? 0 : sentinel;
    }
  }
  for (auto [u, v] : graph.edges) {
    if (u != v) table[ids[u]][ids[v]] = 1;
  }
  instance.travel = TravelModel::matrix(std::move(table));
  instance.validate();
  return instance;
}

std::string method_name(Method m) {
  switch (m) {
    case Method::Dp: return "dp";
    case Method::Exhaustive: return "exhaustive";
    case Method::Greedy: return "greedy";
    case Method::Genetic: return "ga";
    case Method::External: return "external";
  }
  return "?";
}

std::optional<Method> method_from_name(const std::string& name) {
  if (name == "dp") return Method::Dp;
  if (name == "exhaustive" || name == "oracle") return Method::Exhaustive;
  if (name == "greedy") return Method::Greedy;
  if (name == "ga" || name == "genetic") return Method::Genetic;
  if (name == "external") return Method::External;
  return std::nullopt;
}

namespace {

struct CellResult {
  double utility = 0.0;
  double latency_ms = 0.0;
  std::optional<double> conflicts;
  bool error = false;
};

CellResult run_cell(Method method, const Instance& instance,
                    const BenchOptions& options) {
  CellResult cell;
  try {
    auto t0 = std::chrono::steady_clock::now();
    switch (method) {
      case Method::Dp:
        cell.utility = solve_dp_topk(instance, options.k).best().total_utility;
        break;
      case Method::Exhaustive:
        cell.utility =
            solve_exhaustive(instance, options.k).best().total_utility;
        break;
      case Method::Greedy:
        cell.utility = solve_greedy(instance).total_utility;
        break;
      case Method::Genetic:
        cell.utility = solve_genetic(instance, options.ga).total_utility;
        break;
      case Method::External: {
        auto it = options.external_texts.find(instance.user_id);
        if (it == options.external_texts.end()) {
          throw std::runtime_error("no external text for instance " +
                                   instance.user_id);
        }
        TraceParse parsed = parse_trace(it->second, instance);
        if (!parsed.ok) {
          throw std::runtime_error("unparseable external text for " +
                                   instance.user_id);
        }
        cell.conflicts = conflict_rate(instance, parsed.sequence);
        cell.utility =
            repair_schedule(instance, parsed.sequence).schedule.total_utility;
        break;
      }
    }
    auto t1 = std::chrono::steady_clock::now();
    cell.latency_ms =
        std::chrono::duration<double, std::milli>(t1 - t0).count();
  } catch (const std::exception&) {
    cell.error = true;
  }
  return cell;
}

}  // namespace

BenchReport run_bench(const std::vector<Instance>& instances,
                      const std::vector<Method>& methods,
                      const BenchOptions& options) {
  if (instances.empty()) throw std::invalid_argument("no instances");
  if (methods.empty()) throw std::invalid_argument("no methods");
  if (options.repeats < 1) throw std::invalid_argument("repeats must be >= 1");

  BenchReport report;
  report.jobs = std::max(1, options.jobs);
  const int per_method =
      static_cast<int>(instances.size()) * options.repeats;

  for (Method method : methods) {
    std::vector<CellResult> cells(per_method);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(report.jobs) \
    if (report.jobs > 1)
#endif
    for (int c = 0; c < per_method; ++c) {
      cells[c] = run_cell(method, instances[c % instances.size()], options);
    }

    BenchRow row;
    row.method = method_name(method);
    double conflict_sum = 0.0;
    int conflict_n = 0;
    int ok = 0;
    for (int c = 0; c < per_method; ++c) {
      const CellResult& cell = cells[c];
      if (cell.error) {
        ++row.errors;
        continue;
      }
      ++ok;
      row.mean_utility += cell.utility;
      row.mean_latency_ms += cell.latency_ms;
      if (cell.conflicts) {
        conflict_sum += *cell.conflicts;
        ++conflict_n;
      }
      if (options.log) {
        nlohmann::json line = {
            {"method", row.method},
            {"instance_id", instances[c % instances.size()].user_id},
            {"repeat", c / static_cast<int>(instances.size())},
            {"utility", cell.utility},
            {"latency_ms", cell.latency_ms}};
        if (cell.conflicts) line["conflicts"] = *cell.conflicts;
        *options.log << line.dump() << "\n";
      }
    }
    row.count = per_method;
    if (ok > 0) {
      row.mean_utility /= ok;
      row.mean_latency_ms /= ok;
    }
    if (conflict_n > 0) row.mean_conflict_rate = conflict_sum / conflict_n;
    report.rows.push_back(std::move(row));
  }
  return report;
}

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace

void write_report(const BenchReport& report, ReportFormat format,
                  std::ostream& out) {
  if (format == ReportFormat::Csv) {
    out << "method,utility,latency_ms,conflict_rate,n\n";
    for (const BenchRow& r : report.rows) {
      out << r.method << "," << num(r.mean_utility) << ","
          << num(r.mean_latency_ms) << ","
          << (r.mean_conflict_rate ? num(*r.mean_conflict_rate) : "") << ","
          << r.count << "\n";
    }
  } else {
    out << "| method | utility | latency_ms | conflict_rate | n |\n";
    out << "|---|---|---|---|---|\n";
    for (const BenchRow& r : report.rows) {
      out << "| " << r.method << " | " << num(r.mean_utility) << " | "
          << num(r.mean_latency_ms) << " | "
          << (r.mean_conflict_rate ? num(*r.mean_conflict_rate) : "-")
          << " | " << r.count << " |\n";
    }
    out << "\nJobs: " << report.jobs << "\n";
  }
}

}  // namespace cosched
