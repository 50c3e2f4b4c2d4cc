// Shared fixtures and independent reference computations for the tests.
// Nothing here calls the oracle module; it is the slow, obvious version.

#ifndef BOMST_TESTS_SUPPORT_HPP
#define BOMST_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "bomst/geometry.hpp"
#include "bomst/instance.hpp"

namespace support {

using bomst::ObjectivePoint;
using bomst::Value;

// p bomst 3 3 / e 1 2 1 4 / e 1 3 4 1 / e 2 3 2 2
inline bomst::Instance k3() {
  return bomst::Instance{3, {{0, 1, 1, 4}, {0, 2, 4, 1}, {1, 2, 2, 2}}};
}

// Complete graph with every cost pair equal to (c1, c2).
inline bomst::Instance uniform_complete(int n, Value c1, Value c2) {
  bomst::Instance g{n, {}};
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.edges.push_back({u, v, c1, c2});
  }
  return g;
}

// Points of every spanning tree, by testing all (n-1)-subsets of edges.
inline std::vector<ObjectivePoint> subset_tree_points(const bomst::Instance& g) {
  const int m = static_cast<int>(g.edges.size());
  const int k = g.n - 1;
  std::vector<ObjectivePoint> out;
  std::vector<int> pick(static_cast<std::size_t>(k));
  std::iota(pick.begin(), pick.end(), 0);
  for (;;) {
    std::vector<int> comp(static_cast<std::size_t>(g.n));
    std::iota(comp.begin(), comp.end(), 0);
    bool acyclic = true;
    ObjectivePoint p;
    for (int id : pick) {
      const auto& e = g.edges[id];
      const int a = comp[e.u];
      const int b = comp[e.v];
      if (a == b) {
        acyclic = false;
        break;
      }
      for (auto& c : comp) {
        if (c == b) c = a;
      }
      p.z1 += e.c1;
      p.z2 += e.c2;
    }
    if (acyclic) out.push_back(p);
    int i = k - 1;
    while (i >= 0 && pick[i] == m - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

// Distinct points not dominated by any other, sorted.
inline std::vector<ObjectivePoint> pareto(const std::vector<ObjectivePoint>& points) {
  std::vector<ObjectivePoint> out;
  for (const auto& p : points) {
    bool dominated = false;
    for (const auto& q : points) {
      if (q.z1 <= p.z1 && q.z2 <= p.z2 && q != p) {
        dominated = true;
        break;
      }
    }
    if (!dominated && std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Side of p relative to the chord a-b (a left of b): > 0 above, 0 on, < 0 below.
inline Value side(ObjectivePoint a, ObjectivePoint b, ObjectivePoint p) {
  return (b.z1 - a.z1) * (p.z2 - a.z2) - (b.z2 - a.z2) * (p.z1 - a.z1);
}

struct Supported {
  std::vector<ObjectivePoint> extreme;
  std::vector<ObjectivePoint> nonextreme;
  std::vector<ObjectivePoint> unsupported;
};

// Classification of a sorted nondominated set by checking every chord.
inline Supported split_by_chords(const std::vector<ObjectivePoint>& y_n) {
  Supported out;
  const std::size_t n = y_n.size();
  for (std::size_t i = 0; i < n; ++i) {
    bool above = false;
    bool on = false;
    for (std::size_t a = 0; a < i; ++a) {
      for (std::size_t b = i + 1; b < n; ++b) {
        const Value s = side(y_n[a], y_n[b], y_n[i]);
        above = above || s > 0;
        on = on || s == 0;
      }
    }
    if (above) {
      out.unsupported.push_back(y_n[i]);
    } else if (on) {
      out.nonextreme.push_back(y_n[i]);
    } else {
      out.extreme.push_back(y_n[i]);
    }
  }
  return out;
}

inline std::int64_t power(std::int64_t base, int exp) {
  std::int64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

// Hand-rolled frontier generator for list-adapter problems: convex extremes,
// points strictly inside the triangles (some on the hull edges), and points
// dominated by those.
struct Frontier {
  std::vector<ObjectivePoint> extremes;
  std::vector<ObjectivePoint> points;  // everything the ranker may emit, extremes included
};

inline Frontier random_frontier(std::mt19937_64& rng, int m, bool collinear = false) {
  auto pick = [&](Value lo, Value hi) { return lo + static_cast<Value>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
  // steps (dx, dy) sorted by decreasing dy/dx keep the chain convex
  std::vector<std::pair<Value, Value>> steps;
  const Value base_dx = pick(2, 9);
  const Value base_dy = pick(2, 9);
  while (static_cast<int>(steps.size()) < m) {
    if (collinear) {
      const Value k = pick(2, 6);
      steps.emplace_back(base_dx * k, base_dy * k);
      continue;
    }
    const std::pair<Value, Value> s{pick(2, 30), pick(2, 30)};
    const bool clash = std::any_of(steps.begin(), steps.end(),
                                   [&](const auto& t) { return t.second * s.first == s.second * t.first; });
    if (!clash) steps.push_back(s);
  }
  if (!collinear) {
    std::sort(steps.begin(), steps.end(),
              [](const auto& a, const auto& b) { return a.second * b.first > b.second * a.first; });
  }
  Frontier f;
  ObjectivePoint y{pick(0, 20), 0};
  Value drop = 0;
  for (const auto& s : steps) drop += s.second;
  y.z2 = drop + pick(0, 20);
  f.extremes.push_back(y);
  for (const auto& s : steps) {
    y = {y.z1 + s.first, y.z2 - s.second};
    f.extremes.push_back(y);
  }
  f.points = f.extremes;
  for (int i = 0; i < m; ++i) {
    const ObjectivePoint l = f.extremes[i];
    const ObjectivePoint r = f.extremes[i + 1];
    const int tries = static_cast<int>(pick(0, 6));
    for (int k = 0; k < tries; ++k) {
      if (r.z1 - l.z1 < 2 || l.z2 - r.z2 < 2) break;
      const ObjectivePoint p{pick(l.z1 + 1, r.z1 - 1), pick(r.z2 + 1, l.z2 - 1)};
      if (side(l, r, p) < 0) continue;  // below the hull: not a valid image
      f.points.push_back(p);
      if (rng() % 3 == 0) f.points.push_back({p.z1 + pick(0, 3), p.z2 + pick(0, 3)});
    }
  }
  std::shuffle(f.points.begin(), f.points.end(), rng);
  return f;
}

// Extremes, unsupported interior points q in triangle 2 and p in triangle 4.
struct FiveTriangles {
  std::vector<ObjectivePoint> extremes{{8, 90}, {10, 80}, {30, 40}, {40, 28}, {70, 20}, {110, 12}};
  ObjectivePoint q{20, 65};
  ObjectivePoint p{44, 27};

  [[nodiscard]] std::vector<ObjectivePoint> all_points() const {
    auto pts = extremes;
    pts.push_back(q);
    pts.push_back(p);
    return pts;
  }
};

}  // namespace support

#endif  // BOMST_TESTS_SUPPORT_HPP
