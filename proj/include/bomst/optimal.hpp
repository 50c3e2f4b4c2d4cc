/**
 * @file optimal.hpp
 * @brief Cheapest grouping of the active triangles, as a shortest path in the
 * grouping graph.
 *
 * Vertex i stands for extreme point y^i; arc (i, j) for the group of
 * triangles i..j-1, valued by the number of solutions an isolated exploration
 * of that group enumerates. Arcs span at most tau triangles. Wider arcs are
 * only evaluated up to the current shortest-path distance between their ends,
 * and dropped when they cannot beat it.
 */

#ifndef BOMST_OPTIMAL_HPP
#define BOMST_OPTIMAL_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "bomst/instance.hpp"
#include "bomst/phase2.hpp"

namespace bomst {

inline constexpr int kDefaultTau = 7;

struct OptimalGrouping {
  Grouping grouping;
  std::int64_t cost = 0;
  /// Created arcs (i, j) with their costs, vertex indices global.
  std::map<std::pair<int, int>, std::int64_t> arcs;
  std::int64_t arcs_evaluated = 0;
  /// Solutions enumerated while valuing arcs, budgeted runs included.
  std::int64_t evaluation_enumerated = 0;
};

/// Lazy shortest-path computation. Throws std::invalid_argument when tau < 1.
[[nodiscard]] OptimalGrouping optimal_grouping(const Problem& problem, const SearchState& initial,
                                               int tau = kDefaultTau);
[[nodiscard]] OptimalGrouping optimal_grouping(const Instance& instance, int tau = kDefaultTau);

inline constexpr int kMaxExhaustiveTriangles = 20;

/**
 * @brief Cheapest grouping by trying every contiguous partition whose groups
 * have at most tau triangles, with unbudgeted group costs.
 *
 * Throws std::invalid_argument when the active range exceeds
 * kMaxExhaustiveTriangles triangles.
 */
[[nodiscard]] OptimalGrouping exhaustive_grouping(const Problem& problem, const SearchState& initial,
                                                  int tau = kDefaultTau);

/// Exact non-negative rational, always reduced.
struct Ratio {
  std::int64_t num = 1;
  std::int64_t den = 1;

  [[nodiscard]] double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Ratio&, const Ratio&) = default;
};

/**
 * @brief strategy_cost / optimal_cost.
 *
 * A zero optimal cost means phase two was vacuous; the ratio is then 1.
 * Throws std::invalid_argument on negative costs or a positive strategy cost
 * against a zero optimum.
 */
[[nodiscard]] Ratio effectiveness_ratio(std::int64_t strategy_cost, std::int64_t optimal_cost);

/// Number of groups of each size 1..max_size; larger groups land in the last slot.
[[nodiscard]] std::vector<std::int64_t> group_size_histogram(const Grouping& grouping, int max_size = kDefaultTau);

}  // namespace bomst

#endif  // BOMST_OPTIMAL_HPP
