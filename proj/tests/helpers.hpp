#pragma once

#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "cos/bench.hpp"
#include "cos/core.hpp"

namespace test_util {

// (id, start, end, x, y, utility)
using EventRow = std::tuple<std::string, int, int, double, double, double>;

inline cosched::Instance planar_instance(const std::vector<EventRow>& rows,
                                     double speed = 1.0) {
  cosched::Instance instance;
  instance.user_id = "test";
  instance.day_window = {0, 1440};
  instance.travel = cosched::TravelModel::planar(speed);
  for (const auto& [id, start, end, x, y, util] : rows) {
    instance.events.push_back({id, start, end, {x, y}, ""});
    instance.utilities[id] = util;
  }
  instance.validate();
  return instance;
}

// The post-processing scenario: A->B->C->D where only (B,C) conflicts and F
// is the only unused event, compatible with both B and D.
inline cosched::Instance figure_pattern_instance() {
  return planar_instance({
      {"A", 540, 600, 0.0, 0.0, 0.9},
      {"B", 610, 660, 0.0, 0.0, 0.7},
      {"C", 670, 700, 45.0, 0.0, 0.8},
      {"D", 780, 840, 0.0, 0.0, 0.5},
      {"F", 680, 740, 0.0, 10.0, 0.6},
  });
}

inline cosched::Instance random_instance(int n, std::uint64_t seed) {
  cosched::GenConfig cfg;
  cfg.n_events = n;
  cfg.seed = seed;
  return cosched::generate_instance(cfg);
}

inline cosched::Digraph random_digraph(int n, double edge_prob,
                                   std::mt19937_64& rng) {
  cosched::Digraph g;
  g.n = n;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v && unit(rng) < edge_prob) g.edges.push_back({u, v});
    }
  }
  return g;
}

// Direct Hamiltonian-path search by backtracking; the independent oracle for
// the reduction tests.
inline bool has_hamiltonian_path(const cosched::Digraph& g) {
  std::vector<std::vector<bool>> adj(g.n, std::vector<bool>(g.n, false));
  for (auto [u, v] : g.edges) adj[u][v] = true;
  std::vector<bool> used(g.n, false);
  auto dfs = [&](auto&& self, int at, int depth) -> bool {
    if (depth == g.n) return true;
    for (int next = 0; next < g.n; ++next) {
      if (used[next] || !adj[at][next]) continue;
      used[next] = true;
      if (self(self, next, depth + 1)) return true;
      used[next] = false;
    }
    return false;
  };
  for (int start = 0; start < g.n; ++start) {
    used.assign(g.n, false);
    used[start] = true;
    if (dfs(dfs, start, 1)) return true;
  }
  return false;
}

}  // namespace test_util
