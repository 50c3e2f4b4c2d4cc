#include <doctest.h>

#include <algorithm>
#include <set>

#include "bomst/ranking.hpp"
#include "support.hpp"

using namespace bomst;

namespace {

std::vector<Value> drain_values(RankingSession& s) {
  std::vector<Value> out;
  while (s.next()) out.push_back(*s.last_value());
  return out;
}

}  // namespace

TEST_CASE("K3 under w=(3,3)") {
  const Instance g = support::k3();
  SpanningTreeSession s(g, WeightVector(3, 3));
  CHECK(s.peek_value() == 27);
  CHECK(drain_values(s) == std::vector<Value>{27, 27, 30});
  CHECK(s.emitted_count() == 3);
  CHECK_FALSE(s.peek_value().has_value());
  CHECK_FALSE(s.next().has_value());
}

TEST_CASE("lexicographic minimum trees") {
  const Instance g = support::k3();
  CHECK(min_weighted_tree(g, WeightVector(1, 0), TieBreak::f1_then_f2).point == ObjectivePoint{3, 6});
  CHECK(min_weighted_tree(g, WeightVector(0, 1), TieBreak::f2_then_f1).point == ObjectivePoint{6, 3});
  const auto t = min_weighted_tree(g, WeightVector(3, 3));
  CHECK(is_spanning_tree(g, t.edge_ids));
  CHECK(WeightVector(3, 3)(t.point) == 27);
}

TEST_CASE("tree helpers") {
  const Instance g = support::k3();
  CHECK(tree_point(g, {0, 2}) == ObjectivePoint{3, 6});
  CHECK(is_spanning_tree(g, {0, 1}));
  CHECK_FALSE(is_spanning_tree(g, {0}));
  CHECK_FALSE(is_spanning_tree(g, {0, 0}));
  CHECK_FALSE(is_spanning_tree(g, {0, 7}));
}

TEST_CASE("identical costs: every tree ties") {
  const Instance g = support::uniform_complete(4, 1, 1);
  SpanningTreeSession s(g, WeightVector(2, 5));
  const auto values = drain_values(s);
  CHECK(values.size() == 16);
  CHECK(std::all_of(values.begin(), values.end(), [](Value v) { return v == 21; }));
}

TEST_CASE("full ranking matches sorted brute force") {
  const WeightVector weights[] = {WeightVector(1, 0), WeightVector(1, 1), WeightVector(7, 3)};
  for (int n = 3; n <= 6; ++n) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const Instance g = generate({n, seed == 0 ? 5 : 100, seed == 2 ? -0.8 : 0.0, seed + 100});
      const auto points = support::subset_tree_points(g);
      REQUIRE(static_cast<std::int64_t>(points.size()) == support::power(n, n - 2));
      for (const auto& w : weights) {
        std::vector<Value> expected;
        for (const auto& p : points) expected.push_back(w(p));
        std::sort(expected.begin(), expected.end());

        SpanningTreeSession s(g, w);
        std::set<std::vector<int>> seen;
        std::vector<Value> got;
        for (;;) {
          const auto peek = s.peek_value();
          auto t = s.next_tree();
          if (!t) {
            CHECK_FALSE(peek.has_value());
            break;
          }
          REQUIRE(peek.has_value());
          CHECK(*peek == w(t->point));
          CHECK(is_spanning_tree(g, t->edge_ids));
          CHECK(tree_point(g, t->edge_ids) == t->point);
          CHECK(seen.insert(t->edge_ids).second);
          got.push_back(w(t->point));
        }
        CHECK(got == expected);
      }
    }
  }
}

TEST_CASE("ranking resumes lazily") {
  const Instance g = generate({7, 10000, 0.0, 9});
  SpanningTreeRanker ranker(g);
  auto a = ranker.open_session(WeightVector(2, 3));
  auto b = ranker.open_session(WeightVector(2, 3));
  for (int i = 0; i < 50; ++i) b->next();
  for (int i = 0; i < 50; ++i) a->next();
  CHECK(a->last_value() == b->last_value());
  CHECK(a->emitted_count() == 50);
  CHECK(a->peek_value() == b->peek_value());
}

TEST_CASE("point list adapter") {
  CHECK_THROWS_AS(PointListRanker({}), std::invalid_argument);
  PointListRanker list({{0, 6}, {2, 2}, {6, 0}});
  auto s = list.open_session(WeightVector(6, 6));
  CHECK(s->peek_value() == 24);
  CHECK(s->next() == ObjectivePoint{2, 2});
  CHECK(s->next() == ObjectivePoint{0, 6});  // ties follow list order
  CHECK(s->next() == ObjectivePoint{6, 0});
  CHECK(s->emitted_count() == 3);
  CHECK(s->last_value() == 36);
  CHECK_FALSE(s->next().has_value());
}
