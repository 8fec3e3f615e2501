#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>

#include "cos/solvers.hpp"

namespace cosched {

struct GenConfig {
  int n_events = 0;
  std::pair<int, int> day_window{540, 1260};
  std::pair<int, int> duration_range{30, 120};
  double area_km = 30.0;          // square side
  double speed_km_per_min = 0.5;  // planar travel speed
  std::uint64_t seed = 0;
};

/// Synthetic user-day instance: uniform starts within the day window,
/// durations clipped to the window end, uniform planar coordinates and
/// utilities. Deterministic per seed.
Instance generate_instance(const GenConfig& config);

/// Directed graph for the hardness-reduction generator. Vertices 0..n-1.
struct Digraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

/// Maps a digraph to a scheduling instance: vertex i becomes an event with
/// window [10(i+1), 10(i+1)+9], utility 1, and a matrix travel model where
/// edges cost 1 minute and non-edges a sentinel exceeding the day span. The
/// optimum utility equals n iff the digraph has a Hamiltonian path.
Instance reduce_dhp(const Digraph& graph);

enum class Method { Dp, Exhaustive, Greedy, Genetic, External };

std::string method_name(Method m);
std::optional<Method> method_from_name(const std::string& name);

struct BenchRow {
  std::string method;
  double mean_utility = 0.0;
  double mean_latency_ms = 0.0;
  // Pre-repair conflict rate; only present for parser-fed (external) runs.
  std::optional<double> mean_conflict_rate;
  int count = 0;
  int errors = 0;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  int jobs = 1;
};

struct BenchOptions {
  int k = 3;
  int repeats = 1;
  int jobs = 1;
  GaConfig ga;
  /// Model-emitted trace text per instance user_id, for Method::External.
  std::map<std::string, std::string> external_texts;
  /// Optional JSON-lines per-run log sink.
  std::ostream* log = nullptr;
};

BenchReport run_bench(const std::vector<Instance>& instances,
                      const std::vector<Method>& methods,
                      const BenchOptions& options);

enum class ReportFormat { Csv, Markdown };

/// Column order: method, utility, latency_ms, conflict_rate, n. Both formats
/// print identical numbers.
void write_report(const BenchReport& report, ReportFormat format,
                  std::ostream& out);

}  // namespace cosched
