#include <doctest.h>

#include <stdexcept>

#include <random>

#include "cos/bench.hpp"
#include "cos/solvers.hpp"
#include "helpers.hpp"

using namespace cosched;
using test_util::planar_instance;
using test_util::random_instance;

namespace {

void check_same_candidates(const TopKResult& a, const TopKResult& b) {
  REQUIRE(a.candidates.size() == b.candidates.size());
  for (std::size_t i = 0; i < a.candidates.size(); ++i) {
    CHECK(a.candidates[i].schedule.event_ids ==
          b.candidates[i].schedule.event_ids);
    CHECK(a.candidates[i].schedule.total_utility ==
          doctest::Approx(b.candidates[i].schedule.total_utility)
              .epsilon(1e-12));
  }
}

}  // namespace

TEST_CASE("dp on the empty instance") {
  Instance inst = planar_instance({});
  TopKResult r = solve_dp_topk(inst, 3);
  REQUIRE(r.candidates.size() == 1);
  CHECK(r.best().event_ids.empty());
  CHECK(r.best().total_utility == 0.0);
}

TEST_CASE("dp on a single event") {
  Instance inst = planar_instance({{"e", 540, 600, 0.0, 0.0, 0.7}});
  TopKResult r = solve_dp_topk(inst, 2);
  REQUIRE(r.candidates.size() == 2);
  CHECK(r.candidates[0].schedule.event_ids == std::vector<std::string>{"e"});
  CHECK(r.candidates[0].schedule.total_utility == doctest::Approx(0.7));
  CHECK(r.candidates[1].schedule.event_ids.empty());
  CHECK(r.candidates[1].schedule.total_utility == 0.0);
}

TEST_CASE("dp matches the exhaustive oracle") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Instance inst = random_instance(8, 2000 + seed);
    for (int k : {1, 3, 5}) {
      check_same_candidates(solve_dp_topk(inst, k),
                            solve_exhaustive(inst, k));
    }
  }
}

TEST_CASE("parallel dp is identical to serial dp") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Instance inst = random_instance(30, 3000 + seed);
    check_same_candidates(solve_dp_topk(inst, 3),
                          solve_dp_topk_parallel(inst, 3));
  }
}

TEST_CASE("topk invariants") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Instance inst = random_instance(10, 4000 + seed);
    TopKResult r = solve_dp_topk(inst, 5);
    for (std::size_t i = 0; i < r.candidates.size(); ++i) {
      CHECK(r.candidates[i].schedule.feasible);
      CHECK(r.candidates[i].rank == static_cast<int>(i));
      if (i > 0) {
        CHECK(r.candidates[i - 1].schedule.total_utility >=
              r.candidates[i].schedule.total_utility);
        CHECK(r.candidates[i - 1].schedule.event_ids !=
              r.candidates[i].schedule.event_ids);
      }
    }
  }
}

TEST_CASE("dp top-1 never decreases when an event is added") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Instance inst = random_instance(9, 5000 + seed);
    Instance smaller = inst;
    smaller.utilities.erase(smaller.events.back().id);
    smaller.events.pop_back();
    CHECK(solve_dp_topk(inst, 1).best().total_utility >=
          solve_dp_topk(smaller, 1).best().total_utility);
  }
}

TEST_CASE("dp solves the hardness reduction of a path graph") {
  Digraph g;
  g.n = 4;
  g.edges = {{0, 1}, {1, 2}, {2, 3}};
  Instance inst = reduce_dhp(g);
  CHECK(solve_dp_topk(inst, 1).best().total_utility == doctest::Approx(4.0));
  CHECK(solve_exhaustive(inst, 1).best().total_utility ==
        doctest::Approx(4.0));
}

TEST_CASE("exhaustive basics") {
  Instance empty = planar_instance({});
  TopKResult r = solve_exhaustive(empty, 3);
  REQUIRE(r.candidates.size() == 1);
  CHECK(r.best().event_ids.empty());

  // two mutually incompatible events: forced to pick the better one
  Instance clash = planar_instance({
      {"a", 540, 660, 0.0, 0.0, 0.4},
      {"b", 600, 700, 0.0, 0.0, 0.9},
  });
  CHECK(solve_exhaustive(clash, 1).best().event_ids ==
        std::vector<std::string>{"b"});

  Instance big = random_instance(17, 99);
  CHECK_THROWS_AS((void)solve_exhaustive(big, 1), std::invalid_argument);
  CHECK_NOTHROW((void)solve_exhaustive(big, 1, /*allow_large=*/true));
}

TEST_CASE("greedy basics") {
  CHECK(solve_greedy(planar_instance({})).event_ids.empty());

  // a high-utility blocker hides two compatible events from greedy
  Instance trap = planar_instance({
      {"X", 600, 700, 0.0, 0.0, 0.9},
      {"P", 550, 620, 0.0, 0.0, 0.6},
      {"Q", 680, 750, 0.0, 0.0, 0.6},
  });
  Schedule g = solve_greedy(trap);
  CHECK(g.total_utility == doctest::Approx(0.9));
  CHECK(solve_dp_topk(trap, 1).best().total_utility == doctest::Approx(1.2));

  // with no conflicts greedy takes everything
  Instance easy = planar_instance({
      {"a", 540, 600, 0.0, 0.0, 0.2},
      {"b", 620, 680, 0.0, 0.0, 0.8},
      {"c", 700, 760, 0.0, 0.0, 0.5},
  });
  CHECK(solve_greedy(easy).total_utility ==
        doctest::Approx(solve_dp_topk(easy, 1).best().total_utility));
}

TEST_CASE("greedy is feasible and bounded by dp") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Instance inst = random_instance(12, 6000 + seed);
    Schedule g = solve_greedy(inst);
    CHECK(g.feasible);
    CHECK(g.total_utility <=
          solve_dp_topk(inst, 1).best().total_utility + 1e-9);
  }
}

TEST_CASE("genetic algorithm basics") {
  GaConfig cfg;
  cfg.seed = 1;
  CHECK(solve_genetic(planar_instance({}), cfg).event_ids.empty());

  Instance one = planar_instance({{"e", 540, 600, 0.0, 0.0, 0.7}});
  CHECK(solve_genetic(one, cfg).event_ids == std::vector<std::string>{"e"});

  GaConfig bad = cfg;
  bad.population_size = 1;
  CHECK_THROWS_AS((void)solve_genetic(one, bad), std::invalid_argument);
  bad = cfg;
  bad.mutation_rate = 1.5;
  CHECK_THROWS_AS((void)solve_genetic(one, bad), std::invalid_argument);
}

TEST_CASE("genetic algorithm is deterministic, feasible, and bounded") {
  GaConfig cfg;
  cfg.generations = 60;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Instance inst = random_instance(10, 7000 + seed);
    cfg.seed = seed;
    Schedule a = solve_genetic(inst, cfg);
    Schedule b = solve_genetic(inst, cfg);
    CHECK(a.event_ids == b.event_ids);
    CHECK(a.feasible);
    CHECK(a.total_utility <=
          solve_exhaustive(inst, 1).best().total_utility + 1e-9);
  }
}
