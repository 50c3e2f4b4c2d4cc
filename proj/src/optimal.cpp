#include "bomst/optimal.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "bomst/phase1.hpp"
#include "bomst/strategies.hpp"

namespace bomst {

namespace {

constexpr std::int64_t kInfinity = std::numeric_limits<std::int64_t>::max();

using ArcMap = std::map<std::pair<int, int>, std::int64_t>;

// Shortest distances from vertex `from` to every vertex up to `to` over the
// given arcs, with the predecessor on one shortest path (ties to the earliest one).
struct Paths {
  std::vector<std::int64_t> dist;
  std::vector<int> pred;
};

Paths shortest_paths(const ArcMap& arcs, int from, int to, int tau) {
  const auto size = static_cast<std::size_t>(to - from + 1);
  Paths p{std::vector<std::int64_t>(size, kInfinity), std::vector<int>(size, -1)};
  p.dist[0] = 0;
  for (int j = from + 1; j <= to; ++j) {
    for (int i = std::max(from, j - tau); i < j; ++i) {
      const auto di = p.dist[static_cast<std::size_t>(i - from)];
      if (di == kInfinity) continue;
      const auto arc = arcs.find({i, j});
      if (arc == arcs.end()) continue;
      auto& dj = p.dist[static_cast<std::size_t>(j - from)];
      if (di + arc->second < dj) {
        dj = di + arc->second;
        p.pred[static_cast<std::size_t>(j - from)] = i;
      }
    }
  }
  return p;
}

Grouping extract(const Paths& p, int from, int to) {
  Grouping groups;
  for (int j = to; j != from;) {
    const int i = p.pred[static_cast<std::size_t>(j - from)];
    groups.push_back({i, j - 1});
    j = i;
  }
  std::reverse(groups.begin(), groups.end());
  return groups;
}

}  // namespace

OptimalGrouping optimal_grouping(const Problem& problem, const SearchState& initial, int tau) {
  if (tau < 1) throw std::invalid_argument("tau must be at least 1");
  OptimalGrouping out;
  const auto& range = initial.active_range();
  if (!range) return out;
  const int first = range->first;
  const int last = range->last + 1;

  for (int width = 1; width <= std::min(tau, range->size()); ++width) {
    for (int i = first; i + width <= last; ++i) {
      const int j = i + width;
      const Group g{i, j - 1};
      ++out.arcs_evaluated;
      if (width == 1) {
        const auto result = explore_fresh(problem, initial, g);
        out.evaluation_enumerated += result.enumerated;
        out.arcs[{i, j}] = result.enumerated;
        continue;
      }
      const std::int64_t bound = shortest_paths(out.arcs, i, j, tau).dist.back();
      const auto result = explore_fresh(problem, initial, g, bound);
      out.evaluation_enumerated += result.enumerated;
      if (result.reason != StopReason::budget && result.enumerated < bound) out.arcs[{i, j}] = result.enumerated;
    }
  }

  const Paths paths = shortest_paths(out.arcs, first, last, tau);
  out.cost = paths.dist.back();
  out.grouping = extract(paths, first, last);
  return out;
}

OptimalGrouping optimal_grouping(const Instance& instance, int tau) {
  const ExtremeSet phase1 = dichotomic_search(instance);
  const SpanningTreeRanker ranker(instance);
  const Problem problem = make_problem(ranker, phase1);
  return optimal_grouping(problem, problem.initial_state(), tau);
}

OptimalGrouping exhaustive_grouping(const Problem& problem, const SearchState& initial, int tau) {
  if (tau < 1) throw std::invalid_argument("tau must be at least 1");
  OptimalGrouping out;
  const auto& range = initial.active_range();
  if (!range) return out;
  const int m = range->size();
  if (m > kMaxExhaustiveTriangles) throw std::invalid_argument("too many triangles for exhaustive grouping");

  for (int i = range->first; i <= range->last; ++i) {
    for (int j = i; j <= range->last && j - i < tau; ++j) {
      const auto cost = explore_fresh(problem, initial, {i, j}).enumerated;
      out.arcs[{i, j + 1}] = cost;
      out.evaluation_enumerated += cost;
      ++out.arcs_evaluated;
    }
  }

  // bit k of mask set: a group boundary after the (k+1)-th triangle
  out.cost = kInfinity;
  const std::uint32_t masks = std::uint32_t{1} << (m - 1);
  for (std::uint32_t mask = 0; mask < masks; ++mask) {
    Grouping groups;
    int start = range->first;
    for (int k = 0; k < m; ++k) {
      if (k == m - 1 || ((mask >> k) & 1U)) {
        groups.push_back({start, range->first + k});
        start = range->first + k + 1;
      }
    }
    std::int64_t cost = 0;
    bool feasible = true;
    for (const auto& g : groups) {
      if (g.size() > tau) {
        feasible = false;
        break;
      }
      cost += out.arcs.at({g.first, g.last + 1});
    }
    if (feasible && cost < out.cost) {
      out.cost = cost;
      out.grouping = std::move(groups);
    }
  }
  return out;
}

Ratio effectiveness_ratio(std::int64_t strategy_cost, std::int64_t optimal_cost) {
  if (strategy_cost < 0 || optimal_cost < 0) throw std::invalid_argument("costs must be non-negative");
  if (optimal_cost == 0) {
    if (strategy_cost != 0) throw std::invalid_argument("positive cost against a zero optimum");
    return {1, 1};
  }
  const std::int64_t d = std::gcd(strategy_cost, optimal_cost);
  return {strategy_cost / d, optimal_cost / d};
}

std::vector<std::int64_t> group_size_histogram(const Grouping& grouping, int max_size) {
  std::vector<std::int64_t> counts(static_cast<std::size_t>(std::max(max_size, 1)), 0);
  for (const auto& g : grouping) {
    const auto slot = static_cast<std::size_t>(std::min(g.size(), static_cast<int>(counts.size())) - 1);
    ++counts[slot];
  }
  return counts;
}

}  // namespace bomst
