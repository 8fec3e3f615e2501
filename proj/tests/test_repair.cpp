#include <doctest.h>

#include <stdexcept>

#include <random>

#include "cos/repair.hpp"
#include "cos/solvers.hpp"
#include "helpers.hpp"

using namespace cosched;
using test_util::figure_pattern_instance;
using test_util::planar_instance;
using test_util::random_instance;

TEST_CASE("conflict_rate") {
  Instance inst = figure_pattern_instance();
  CHECK(conflict_rate(inst, std::vector<std::string>{}) == 0.0);
  CHECK(conflict_rate(inst, std::vector<std::string>{"A", "B", "D"}) == 0.0);
  CHECK(conflict_rate(inst, std::vector<std::string>{"A", "B", "C", "D"}) ==
        doctest::Approx(0.5));

  // every adjacent pair violating
  Instance all_bad = planar_instance({
      {"a", 540, 600, 0.0, 0.0, 0.5},
      {"b", 560, 620, 0.0, 0.0, 0.5},
      {"c", 580, 640, 0.0, 0.0, 0.5},
  });
  CHECK(conflict_rate(all_bad, std::vector<std::string>{"a", "b", "c"}) ==
        doctest::Approx(1.0));

  std::vector<std::string> unknown{"nope"};
  CHECK_THROWS_AS((void)conflict_rate(inst, unknown), std::invalid_argument);
}

TEST_CASE("repair substitutes the successor at the first conflict") {
  Instance inst = figure_pattern_instance();
  std::vector<std::string> seq{"A", "B", "C", "D"};
  RepairOutcome outcome = repair_schedule(inst, seq);
  CHECK(outcome.schedule.event_ids ==
        std::vector<std::string>{"A", "B", "F", "D"});
  CHECK(outcome.schedule.feasible);
  REQUIRE(outcome.substitutions.size() == 1);
  CHECK(outcome.substitutions[0].removed == "C");
  REQUIRE(outcome.substitutions[0].inserted.has_value());
  CHECK(*outcome.substitutions[0].inserted == "F");
  CHECK(outcome.substitutions[0].position == 2);
  // C (0.8) replaced by F (0.6): slight utility loss
  CHECK(outcome.utility_delta == doctest::Approx(-0.2));
}

TEST_CASE("repair deletes the successor when no substitute fits") {
  Instance inst = planar_instance({
      {"A", 540, 600, 0.0, 0.0, 0.9},
      {"B", 610, 660, 0.0, 0.0, 0.7},
      {"C", 670, 700, 45.0, 0.0, 0.8},
      {"D", 780, 840, 0.0, 0.0, 0.5},
  });
  RepairOutcome outcome =
      repair_schedule(inst, std::vector<std::string>{"A", "B", "C", "D"});
  CHECK(outcome.schedule.event_ids == std::vector<std::string>{"A", "B", "D"});
  REQUIRE(outcome.substitutions.size() == 1);
  CHECK(outcome.substitutions[0].removed == "C");
  CHECK_FALSE(outcome.substitutions[0].inserted.has_value());
}

TEST_CASE("repair is a no-op on feasible input") {
  Instance inst = figure_pattern_instance();
  std::vector<std::string> seq{"A", "B", "F", "D"};
  RepairOutcome outcome = repair_schedule(inst, seq);
  CHECK(outcome.schedule.event_ids == seq);
  CHECK(outcome.substitutions.empty());
  CHECK(outcome.utility_delta == doctest::Approx(0.0));
}

TEST_CASE("repair drops duplicate ids keeping the first occurrence") {
  Instance inst = figure_pattern_instance();
  RepairOutcome outcome =
      repair_schedule(inst, std::vector<std::string>{"A", "B", "A", "D"});
  CHECK(outcome.schedule.event_ids == std::vector<std::string>{"A", "B", "D"});
  REQUIRE(outcome.substitutions.size() == 1);
  CHECK(outcome.substitutions[0].removed == "A");
  CHECK_FALSE(outcome.substitutions[0].inserted.has_value());
}

TEST_CASE("repair fuzz: always feasible, idempotent, bounded by dp") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    Instance inst = random_instance(10, 8000 + trial);
    // random, possibly duplicated sequence
    std::uniform_int_distribution<int> len_d(0, 8);
    std::uniform_int_distribution<int> idx_d(
        0, static_cast<int>(inst.events.size()) - 1);
    std::vector<std::string> seq;
    int len = len_d(rng);
    for (int i = 0; i < len; ++i) seq.push_back(inst.events[idx_d(rng)].id);

    RepairOutcome outcome = repair_schedule(inst, seq);
    CHECK(outcome.schedule.feasible);
    CHECK(conflict_rate(inst, outcome.schedule.event_ids) == 0.0);
    CHECK(outcome.schedule.total_utility <=
          solve_dp_topk(inst, 1).best().total_utility + 1e-9);

    RepairOutcome again = repair_schedule(inst, outcome.schedule.event_ids);
    CHECK(again.schedule.event_ids == outcome.schedule.event_ids);
    CHECK(again.substitutions.empty());

    // nothing is duplicated in the repaired schedule
    std::vector<std::string> sorted_ids = outcome.schedule.event_ids;
    std::sort(sorted_ids.begin(), sorted_ids.end());
    CHECK(std::adjacent_find(sorted_ids.begin(), sorted_ids.end()) ==
          sorted_ids.end());
  }
}
