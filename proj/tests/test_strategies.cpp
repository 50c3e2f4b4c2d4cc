#include <doctest.h>

#include <random>

#include "bomst/strategies.hpp"
#include "support.hpp"

using namespace bomst;

namespace {

const std::vector<ObjectivePoint> kFive{{0, 10}, {1, 7}, {2, 4}, {4, 1}, {8, 0}};

Grouping groups(std::initializer_list<std::pair<int, int>> list) {
  Grouping out;
  for (auto [a, b] : list) out.push_back({a, b});
  return out;
}

std::vector<int> explored_firsts(const SolveResult& r) {
  std::vector<int> out;
  for (const auto& g : r.explored) out.push_back(g.first);
  return out;
}

}  // namespace

TEST_CASE("labels") {
  for (const auto& label : standard_strategy_labels()) {
    CHECK(strategy_label(parse_strategy(label)) == label);
  }
  CHECK(standard_strategy_labels().size() == 16);
  CHECK(strategy_label(parse_strategy("SM3")) == "SM3");
  CHECK(strategy_label(AngleSplit{AvgSize{3.0}}) == "SA3.0");
  CHECK(is_apriori(parse_strategy("F2")));
  CHECK(is_apriori(parse_strategy("SA2.5")));
  CHECK_FALSE(is_apriori(parse_strategy("GNECU2")));
  CHECK_THROWS_AS((void)parse_strategy("F0"), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_strategy("GA1"), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_strategy("SA1.0"), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_strategy("GAEC1"), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_strategy("XYZ"), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_strategy("F2x"), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_strategy(""), std::invalid_argument);
}

TEST_CASE("fixed grouping") {
  CHECK(fixed_grouping(7, 3) == groups({{1, 3}, {4, 6}, {7, 7}}));
  CHECK(fixed_grouping(6, 2) == groups({{1, 2}, {3, 4}, {5, 6}}));
  CHECK(fixed_grouping(5, 1) == groups({{1, 1}, {2, 2}, {3, 3}, {4, 4}, {5, 5}}));
  CHECK(fixed_grouping(2, 4) == groups({{1, 2}}));
  CHECK_THROWS_AS((void)fixed_grouping(3, 0), std::invalid_argument);
}

TEST_CASE("greedy grouping") {
  CHECK(greedy_angle_grouping(kFive, 2) == groups({{1, 2}, {3, 4}}));
  const std::vector<Value> betas{1, 4, 2};
  CHECK(greedy_nd_grouping(betas, 2) == groups({{1, 1}, {2, 3}}));
  const std::vector<Value> single{5};
  CHECK(greedy_nd_grouping(single, 2) == groups({{1, 1}}));
  // t larger than the run shrinks to what fits
  CHECK(greedy_angle_grouping(kFive, 7) == groups({{1, 4}}));
  // t=3 on four triangles: the best triple, then a singleton
  const std::vector<Value> four{5, 1, 1, 1};
  CHECK(greedy_nd_grouping(four, 3) == groups({{1, 3}, {4, 4}}));
}

TEST_CASE("split grouping") {
  CHECK(split_grouping(kFive, MaxSize{2}) == groups({{1, 2}, {3, 3}, {4, 4}}));
  CHECK(split_grouping(kFive, AvgSize{2.0}) == groups({{1, 3}, {4, 4}}));
  CHECK(split_grouping(kFive, MaxSize{1}) == groups({{1, 1}, {2, 2}, {3, 3}, {4, 4}}));
  const std::vector<ObjectivePoint> one{{0, 5}, {5, 0}};
  CHECK(split_grouping(one, AvgSize{2.0}) == groups({{1, 1}}));
}

TEST_CASE("groupings are partitions") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 15);
    const auto f = support::random_frontier(rng, m);
    std::vector<Value> betas;
    for (int i = 0; i < m; ++i) betas.push_back(nd_bound(f.extremes[i], f.extremes[i + 1]));
    const IndexRange all{1, m};
    const int t = 2 + static_cast<int>(rng() % 3);
    CHECK(is_valid_grouping(greedy_angle_grouping(f.extremes, t), all));
    CHECK(is_valid_grouping(greedy_nd_grouping(betas, t), all));
    const Grouping by_max = split_grouping(f.extremes, MaxSize{t});
    CHECK(is_valid_grouping(by_max, all));
    for (const auto& g : by_max) CHECK(g.size() <= t);
    const Grouping by_avg = split_grouping(f.extremes, AvgSize{2.5});
    CHECK(is_valid_grouping(by_avg, all));
    CHECK(static_cast<double>(m) / static_cast<double>(by_avg.size()) <= std::max(2.5, 1.0));
    const Grouping fixed = fixed_grouping(m, t);
    CHECK(is_valid_grouping(fixed, all));
    for (std::size_t k = 0; k + 1 < fixed.size(); ++k) CHECK(fixed[k].size() == t);
  }
}

TEST_CASE("a priori grouping uses global indices on the trimmed range") {
  // triangles 1 and 5 are empty; the active range is 2..4
  SearchState s({{0, 100}, {1, 60}, {20, 30}, {40, 12}, {80, 2}, {200, 1}});
  REQUIRE(s.active_range() == IndexRange{2, 4});
  CHECK(build_grouping(s, FixedSize{2}) == groups({{2, 3}, {4, 4}}));
  CHECK(build_grouping(s, FixedSize{1}) == groups({{2, 2}, {3, 3}, {4, 4}}));
  CHECK_THROWS_AS((void)build_grouping(s, Dynamic{DynamicBase::ecu, 1}), std::invalid_argument);
  SearchState vacuous({{0, 1}, {5, 0}});
  CHECK(build_grouping(vacuous, FixedSize{1}).empty());
}

TEST_CASE("K3 with every strategy") {
  const std::vector<ObjectivePoint> expected{{3, 6}, {5, 5}, {6, 3}};
  for (const auto& label : standard_strategy_labels()) {
    CAPTURE(label);
    const SolveResult r = solve(support::k3(), parse_strategy(label));
    CHECK(r.nondominated == expected);
    CHECK(r.enumerated == 3);
    CHECK(r.y_nse == 2);
    CHECK(r.yn_bound == 4);
    CHECK(r.scalarized_solves == 3);
  }
}

TEST_CASE("no interior work when every triangle is empty") {
  const SolveResult r = solve(support::uniform_complete(5, 2, 2), parse_strategy("F2"));
  CHECK(r.nondominated == std::vector<ObjectivePoint>{{8, 8}});
  CHECK(r.enumerated == 0);
  CHECK(r.explored.empty());
}

TEST_CASE("SRKB4 and ECU on the five-triangle scenario") {
  const support::FiveTriangles five;
  const PointListRanker list(five.all_points());
  const Problem problem{list, five.extremes, {}};

  const SolveResult simple = run_strategy(problem, Dynamic{DynamicBase::srkb4, 1});
  CHECK(explored_firsts(simple) == std::vector<int>{2, 4, 5});
  CHECK(simple.enumerated == 6 + 4 + 4);

  // ECU: triangle 4 keeps only the zone above p (beta 6), triangle 5 has 7,
  // and exploring 5 stops at 1840, above the surviving bound's 1592.
  const SolveResult extended = run_strategy(problem, Dynamic{DynamicBase::ecu, 1});
  CHECK(explored_firsts(extended) == std::vector<int>{2, 5});
  CHECK(extended.enumerated == 6 + 4);

  const auto truth = support::pareto(five.all_points());
  CHECK(simple.nondominated == truth);
  CHECK(extended.nondominated == truth);
}

TEST_CASE("every strategy recovers the frontier of random point lists") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 150; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 9);
    const auto f = support::random_frontier(rng, m);
    const auto truth = support::pareto(f.points);
    const PointListRanker list(f.points);
    const Problem problem{list, f.extremes, {}};
    for (const auto& label : standard_strategy_labels()) {
      CAPTURE(label);
      const SolveResult r = run_strategy(problem, parse_strategy(label));
      CHECK(r.nondominated == truth);
      if (!is_apriori(parse_strategy(label))) {
        for (const auto& entry : r.log) CHECK(entry.reason != StopReason::no_active_bounds);
      }
    }
  }
}

TEST_CASE("every strategy recovers the frontier of small graphs") {
  for (int n = 3; n <= 6; ++n) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const double rho = seed % 2 == 0 ? -0.8 : 0.0;
      const Instance g = generate({n, 1000, rho, 500 + seed * 7 + static_cast<std::uint64_t>(n)});
      const auto truth = support::pareto(support::subset_tree_points(g));
      for (const auto& label : standard_strategy_labels()) {
        CAPTURE(label);
        CHECK(solve(g, parse_strategy(label)).nondominated == truth);
      }
    }
  }
}

TEST_CASE("enumeration limit aborts a run") {
  const Instance g = generate({7, 10000, -0.8, 3});
  CHECK_THROWS_AS((void)solve(g, parse_strategy("F1"), 5), EnumerationLimitExceeded);
  CHECK_NOTHROW((void)solve(g, parse_strategy("F1"), 1'000'000));
}

TEST_CASE("fresh cost adds isolated explorations") {
  const support::FiveTriangles five;
  const PointListRanker list(five.all_points());
  const Problem problem{list, five.extremes, {}};
  const SearchState initial = problem.initial_state();
  std::int64_t singles = 0;
  for (int i = 1; i <= 5; ++i) singles += explore_fresh(problem, initial, {i, i}).enumerated;
  CHECK(fresh_cost(problem, initial, fixed_grouping(5, 1)) == singles);
  CHECK(fresh_cost(problem, initial, {}) == 0);
}
