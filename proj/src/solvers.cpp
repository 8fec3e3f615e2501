#include "cos/solvers.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cosched {
namespace {

struct SortedEvents {
  std::vector<const Event*> ev;  // by (end, start, id)
  std::vector<double> util;
};

SortedEvents sort_by_end(const Instance& instance) {
  SortedEvents s;
  s.ev.reserve(instance.events.size());
  for (const Event& e : instance.events) s.ev.push_back(&e);
  std::sort(s.ev.begin(), s.ev.end(), [](const Event* a, const Event* b) {
    if (a->end != b->end) return a->end < b->end;
    if (a->start != b->start) return a->start < b->start;
    return a->id < b->id;
  });
  s.util.reserve(s.ev.size());
  for (const Event* e : s.ev) s.util.push_back(instance.utility(e->id));
  return s;
}

// Higher utility first; exact-tie fallback is the lexicographic order of the
// event-id sequences.
bool seq_better(double ua, const std::vector<int>& sa, double ub,
                const std::vector<int>& sb, const SortedEvents& sorted) {
  if (ua != ub) return ua > ub;
  std::size_t m = std::min(sa.size(), sb.size());
  for (std::size_t i = 0; i < m; ++i) {
    const std::string& ia = sorted.ev[sa[i]]->id;
    const std::string& ib = sorted.ev[sb[i]]->id;
    if (ia != ib) return ia < ib;
  }
  return sa.size() < sb.size();
}

std::vector<std::string> to_ids(const std::vector<int>& seq,
                                const SortedEvents& sorted) {
  std::vector<std::string> ids;
  ids.reserve(seq.size());
  for (int i : seq) ids.push_back(sorted.ev[i]->id);
  return ids;
}

TopKResult finalize(const Instance& instance, const SortedEvents& sorted,
                    std::vector<std::pair<double, std::vector<int>>> all,
                    int k) {
  // The empty schedule is always feasible.
  all.push_back({0.0, {}});
  std::sort(all.begin(), all.end(),
            [&](const auto& a, const auto& b) {
              return seq_better(a.first, a.second, b.first, b.second, sorted);
            });
  if (static_cast<int>(all.size()) > k) all.resize(k);
  TopKResult result;
  int rank = 0;
  for (auto& [util, seq] : all) {
    result.candidates.push_back(
        {make_schedule(instance, to_ids(seq, sorted)), rank++});
  }
  return result;
}

struct DpEntry {
  double utility = 0.0;
  std::vector<int> seq;  // sorted-order indices, last element is the state
};

TopKResult solve_dp_core(const Instance& instance, int k, bool parallel) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const SortedEvents sorted = sort_by_end(instance);
  const int n = static_cast<int>(sorted.ev.size());

  // Candidate = predecessor (state, rank), or (-1, -1) for a singleton.
  struct Cand {
    double utility;
    int pred;
    int rank;
  };
  std::vector<std::vector<DpEntry>> states(n);
  std::vector<int> scratch_a, scratch_b;

  auto cand_seq = [&](const Cand& c, int j, std::vector<int>& buf) -> const std::vector<int>& {
    buf.clear();
    if (c.pred >= 0) buf = states[c.pred][c.rank].seq;
    buf.push_back(j);
    return buf;
  };

  for (int j = 0; j < n; ++j) {
    std::vector<Cand> cands;
    cands.push_back({sorted.util[j], -1, -1});
    if (parallel) {
      std::vector<std::vector<Cand>> by_pred(j);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
      for (int i = 0; i < j; ++i) {
        if (!pair_compatible(instance.travel, *sorted.ev[i], *sorted.ev[j])) {
          continue;
        }
        for (int r = 0; r < static_cast<int>(states[i].size()); ++r) {
          by_pred[i].push_back(
              {states[i][r].utility + sorted.util[j], i, r});
        }
      }
      for (auto& v : by_pred) {
        cands.insert(cands.end(), v.begin(), v.end());
      }
    } else {
      for (int i = 0; i < j; ++i) {
        if (!pair_compatible(instance.travel, *sorted.ev[i], *sorted.ev[j])) {
          continue;
        }
        for (int r = 0; r < static_cast<int>(states[i].size()); ++r) {
          cands.push_back({states[i][r].utility + sorted.util[j], i, r});
        }
      }
    }
    std::sort(cands.begin(), cands.end(), [&](const Cand& a, const Cand& b) {
      if (a.utility != b.utility) return a.utility > b.utility;
      const std::vector<int>& sa = cand_seq(a, j, scratch_a);
      const std::vector<int>& sb = cand_seq(b, j, scratch_b);
      return seq_better(a.utility, sa, b.utility, sb, sorted);
    });
    if (static_cast<int>(cands.size()) > k) cands.resize(k);
    states[j].reserve(cands.size());
    for (const Cand& c : cands) {
      DpEntry e;
      e.utility = c.utility;
      if (c.pred >= 0) e.seq = states[c.pred][c.rank].seq;
      e.seq.push_back(j);
      states[j].push_back(std::move(e));
    }
  }

  std::vector<std::pair<double, std::vector<int>>> all;
  for (int j = 0; j < n; ++j) {
    for (const DpEntry& e : states[j]) all.push_back({e.utility, e.seq});
  }
  return finalize(instance, sorted, std::move(all), k);
}

}  // namespace

TopKResult solve_dp_topk(const Instance& instance, int k) {
  return solve_dp_core(instance, k, false);
}

TopKResult solve_dp_topk_parallel(const Instance& instance, int k) {
  return solve_dp_core(instance, k, true);
}

TopKResult solve_exhaustive(const Instance& instance, int k, bool allow_large) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  const SortedEvents sorted = sort_by_end(instance);
  const int n = static_cast<int>(sorted.ev.size());
  if (n > 16 && !allow_large) {
    throw std::invalid_argument(
        "exhaustive search refuses more than 16 events without the override");
  }

  // Every feasible sequence is strictly end-time-sorted, so depth-first
  // extension over the sorted order enumerates all of them.
  std::vector<std::pair<double, std::vector<int>>> all;
  std::vector<int> cur;
  auto dfs = [&](auto&& self, int last, double utility) -> void {
    int from = last < 0 ? 0 : last + 1;
    for (int i = from; i < n; ++i) {
      if (last >= 0 &&
          !pair_compatible(instance.travel, *sorted.ev[last], *sorted.ev[i])) {
        continue;
      }
      cur.push_back(i);
      double u = utility + sorted.util[i];
      all.push_back({u, cur});
      self(self, i, u);
      cur.pop_back();
    }
  };
  dfs(dfs, -1, 0.0);
  return finalize(instance, sorted, std::move(all), k);
}

Schedule solve_greedy(const Instance& instance) {
  std::vector<const Event*> order;
  for (const Event& e : instance.events) order.push_back(&e);
  std::sort(order.begin(), order.end(),
            [&](const Event* a, const Event* b) {
              double ua = instance.utility(a->id);
              double ub = instance.utility(b->id);
              if (ua != ub) return ua > ub;
              return a->id < b->id;
            });

  std::vector<const Event*> chosen;
  auto time_less = [](const Event* a, const Event* b) {
    if (a->start != b->start) return a->start < b->start;
    if (a->end != b->end) return a->end < b->end;
    return a->id < b->id;
  };
  for (const Event* e : order) {
    auto pos = std::lower_bound(chosen.begin(), chosen.end(), e, time_less);
    auto it = chosen.insert(pos, e);
    std::vector<std::string> ids;
    for (const Event* c : chosen) ids.push_back(c->id);
    if (!check_feasible(instance, ids).empty()) chosen.erase(it);
  }
  std::vector<std::string> ids;
  for (const Event* c : chosen) ids.push_back(c->id);
  return make_schedule(instance, std::move(ids));
}

Schedule solve_genetic(const Instance& instance, const GaConfig& config) {
  if (config.population_size < 2) {
    throw std::invalid_argument("GA population size must be >= 2");
  }
  if (config.generations < 1) {
    throw std::invalid_argument("GA generations must be >= 1");
  }
  auto rate_ok = [](double r) { return r >= 0.0 && r <= 1.0; };
  if (!rate_ok(config.mutation_rate) || !rate_ok(config.crossover_rate)) {
    throw std::invalid_argument("GA rates must lie in [0,1]");
  }

  const SortedEvents sorted = sort_by_end(instance);
  const int n = static_cast<int>(sorted.ev.size());
  if (n == 0) return make_schedule(instance, {});

  using Mask = std::vector<char>;
  auto decode = [&](const Mask& mask) {
    std::pair<double, std::vector<int>> out{0.0, {}};
    int last = -1;
    for (int i = 0; i < n; ++i) {
      if (!mask[i]) continue;
      if (last >= 0 &&
          !pair_compatible(instance.travel, *sorted.ev[last], *sorted.ev[i])) {
        continue;  // decode-repair: drop the conflicting event
      }
      out.second.push_back(i);
      out.first += sorted.util[i];
      last = i;
    }
    return out;
  };

  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> pick(0, config.population_size - 1);

  std::vector<Mask> population(config.population_size, Mask(n, 0));
  for (Mask& m : population) {
    for (char& bit : m) bit = unit(rng) < 0.5 ? 1 : 0;
  }

  double best_utility = 0.0;
  std::vector<int> best_seq;
  std::vector<double> fitness(config.population_size);

  for (int gen = 0; gen < config.generations; ++gen) {
    for (int p = 0; p < config.population_size; ++p) {
      auto [u, seq] = decode(population[p]);
      fitness[p] = u;
      if (seq_better(u, seq, best_utility, best_seq, sorted)) {
        best_utility = u;
        best_seq = std::move(seq);
      }
    }
    int elite = 0;
    for (int p = 1; p < config.population_size; ++p) {
      if (fitness[p] > fitness[elite]) elite = p;
    }
    auto tournament = [&]() -> const Mask& {
      int a = pick(rng);
      int b = pick(rng);
      if (fitness[b] > fitness[a]) return population[b];
      if (fitness[a] > fitness[b]) return population[a];
      return population[std::min(a, b)];
    };
    std::vector<Mask> next;
    next.reserve(config.population_size);
    next.push_back(population[elite]);
    while (static_cast<int>(next.size()) < config.population_size) {
      const Mask& pa = tournament();
      const Mask& pb = tournament();
      Mask child(n);
      if (unit(rng) < config.crossover_rate) {
        for (int i = 0; i < n; ++i) {
          child[i] = unit(rng) < 0.5 ? pa[i] : pb[i];
        }
      } else {
        child = pa;
      }
      for (int i = 0; i < n; ++i) {
        if (unit(rng) < config.mutation_rate) child[i] = !child[i];
      }
      next.push_back(std::move(child));
    }
    population = std::move(next);
  }
  for (const Mask& m : population) {
    auto [u, seq] = decode(m);
    if (seq_better(u, seq, best_utility, best_seq, sorted)) {
      best_utility = u;
      best_seq = std::move(seq);
    }
  }
  return make_schedule(instance, to_ids(best_seq, sorted));
}

}  // namespace cosched
