#include <doctest.h>

#include <random>

#include "bomst/optimal.hpp"
#include "bomst/strategies.hpp"
#include "support.hpp"

using namespace bomst;

TEST_CASE("K3 optimal grouping") {
  const OptimalGrouping best = optimal_grouping(support::k3());
  CHECK(best.grouping == Grouping{{1, 1}});
  CHECK(best.cost == 3);
}

TEST_CASE("vacuous second phase") {
  const OptimalGrouping best = optimal_grouping(support::uniform_complete(4, 1, 1));
  CHECK(best.grouping.empty());
  CHECK(best.cost == 0);
}

TEST_CASE("tau must be positive") {
  CHECK_THROWS_AS((void)optimal_grouping(support::k3(), 0), std::invalid_argument);
}

TEST_CASE("collinear extremes: one group costs as much as its worst triangle") {
  const std::vector<ObjectivePoint> extremes{{0, 30}, {10, 20}, {20, 10}, {30, 0}};
  const std::vector<ObjectivePoint> points{{0, 30}, {10, 20}, {20, 10}, {30, 0}, {3, 28}, {6, 25},
                                           {12, 19}, {25, 8},  {27, 6},  {28, 4}, {29, 2}};
  const PointListRanker list(points);
  const Problem problem{list, extremes, {}};
  const SearchState initial = problem.initial_state();
  std::int64_t worst = 0;
  for (int i = 1; i <= 3; ++i) worst = std::max(worst, explore_fresh(problem, initial, {i, i}).enumerated);
  CHECK(explore_fresh(problem, initial, {1, 3}).enumerated == worst);

  const OptimalGrouping lazy = optimal_grouping(problem, initial);
  const OptimalGrouping exhaustive = exhaustive_grouping(problem, initial);
  CHECK(lazy.cost == worst);
  CHECK(exhaustive.cost == worst);
  CHECK(lazy.grouping == Grouping{{1, 3}});
}

TEST_CASE("lazy arcs agree with exhaustive partitions") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 10);
    const auto f = support::random_frontier(rng, m);
    const PointListRanker list(f.points);
    const Problem problem{list, f.extremes, {}};
    const SearchState initial = problem.initial_state();
    const int tau = 1 + static_cast<int>(rng() % 7);
    CAPTURE(m);
    CAPTURE(tau);
    const OptimalGrouping lazy = optimal_grouping(problem, initial, tau);
    const OptimalGrouping exhaustive = exhaustive_grouping(problem, initial, tau);
    CHECK(lazy.cost == exhaustive.cost);
    CHECK(fresh_cost(problem, initial, lazy.grouping) == lazy.cost);
    if (initial.active_range()) {
      CHECK(is_valid_grouping(lazy.grouping, *initial.active_range()));
      for (const auto& g : lazy.grouping) CHECK(g.size() <= tau);
      // arcs that were created carry their true isolated cost
      for (const auto& [arc, cost] : lazy.arcs) {
        CHECK(explore_fresh(problem, initial, {arc.first, arc.second - 1}).enumerated == cost);
      }
    }
  }
}

TEST_CASE("a priori strategies never beat the optimum") {
  std::mt19937_64 rng(23);
  const char* labels[] = {"F1", "F2", "F3", "F4", "SA2.0", "SA2.5", "GA2", "GA3", "GN2", "GN3"};
  for (int trial = 0; trial < 100; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 12);
    const auto f = support::random_frontier(rng, m);
    const PointListRanker list(f.points);
    const Problem problem{list, f.extremes, {}};
    const SearchState initial = problem.initial_state();
    const OptimalGrouping best = optimal_grouping(problem, initial, 7);
    for (const char* label : labels) {
      const Grouping g = build_grouping(initial, parse_strategy(label));
      bool within_tau = true;
      for (const auto& group : g) within_tau = within_tau && group.size() <= 7;
      if (within_tau) CHECK(fresh_cost(problem, initial, g) >= best.cost);
    }
  }
}

TEST_CASE("exhaustive size guard") {
  std::vector<ObjectivePoint> extremes;
  for (int i = 0; i <= kMaxExhaustiveTriangles + 1; ++i) extremes.push_back({10 * i, 1000 - 10 * i});
  const PointListRanker list(extremes);
  const Problem problem{list, extremes, {}};
  CHECK_THROWS_AS((void)exhaustive_grouping(problem, problem.initial_state()), std::invalid_argument);
}

TEST_CASE("effectiveness ratio") {
  CHECK(effectiveness_ratio(423, 329) == Ratio{9, 7});
  CHECK(effectiveness_ratio(423, 329).value() == doctest::Approx(1.2857).epsilon(1e-4));
  CHECK(effectiveness_ratio(329, 329) == Ratio{1, 1});
  CHECK(effectiveness_ratio(2, 4) == Ratio{1, 2});
  CHECK(effectiveness_ratio(0, 0) == Ratio{1, 1});
  CHECK_THROWS_AS((void)effectiveness_ratio(5, 0), std::invalid_argument);
  CHECK_THROWS_AS((void)effectiveness_ratio(-1, 3), std::invalid_argument);
}

TEST_CASE("group size histogram") {
  const Grouping g{{1, 1}, {2, 4}, {5, 5}, {6, 14}};
  CHECK(group_size_histogram(g, 7) == std::vector<std::int64_t>{2, 0, 1, 0, 0, 0, 1});
  CHECK(group_size_histogram({}, 3) == std::vector<std::int64_t>{0, 0, 0});
}
