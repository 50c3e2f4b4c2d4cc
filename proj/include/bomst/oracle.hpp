/**
 * @file oracle.hpp
 * @brief Brute-force ground truth for small instances.
 *
 * Trees are produced by decoding every Pruefer sequence of length n-2 over
 * the n vertex labels, so K_n yields exactly n^(n-2) trees.
 */

#ifndef BOMST_ORACLE_HPP
#define BOMST_ORACLE_HPP

#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "bomst/geometry.hpp"
#include "bomst/instance.hpp"
#include "bomst/ranking.hpp"

namespace bomst {

inline constexpr int kMaxOracleVertices = 9;

class OracleSizeError : public std::invalid_argument {
 public:
  explicit OracleSizeError(int n);
};

/// Calls @p visit with the sorted edge ids of every spanning tree.
/// Throws OracleSizeError when n > kMaxOracleVertices.
void for_each_tree(const Instance& instance, const std::function<void(const std::vector<int>&)>& visit);

[[nodiscard]] std::vector<SpanningTree> enumerate_all_trees(const Instance& instance);

/// Objective points of all trees, one per tree.
[[nodiscard]] std::vector<ObjectivePoint> all_tree_points(const Instance& instance);

/// Distinct nondominated points, sorted by z1.
[[nodiscard]] std::vector<ObjectivePoint> nondominated_filter(std::span<const ObjectivePoint> points);

/// Vertices of the lower-left convex hull of a nondominated set sorted by z1.
[[nodiscard]] std::vector<ObjectivePoint> hull_vertices(std::span<const ObjectivePoint> y_n);

struct FrontierClassification {
  std::vector<ObjectivePoint> all_points;
  std::vector<ObjectivePoint> y_n;
  std::vector<ObjectivePoint> y_nse;
  std::vector<ObjectivePoint> y_nsn;
  std::vector<ObjectivePoint> y_nu;
};

/// Throws std::invalid_argument on an empty point set.
[[nodiscard]] FrontierClassification classify(std::span<const ObjectivePoint> points);

}  // namespace bomst

#endif  // BOMST_ORACLE_HPP
