#ifndef BOMST_PHASE1_HPP
#define BOMST_PHASE1_HPP

#include <cstdint>
#include <vector>

#include "bomst/geometry.hpp"
#include "bomst/instance.hpp"
#include "bomst/ranking.hpp"

namespace bomst {

/// Extreme supported points y^1..y^{m+1}, increasing in z1, with one tree each.
struct ExtremeSet {
  std::vector<ObjectivePoint> points;
  std::vector<SpanningTree> trees;
  /// Supported nonextreme points met on the way; handed to the second phase as seeds.
  std::vector<ObjectivePoint> supported_nonextreme;
  std::int64_t scalarized_solve_count = 0;
};

/**
 * @brief Dichotomic search over weighted-sum problems.
 *
 * Endpoints come from the two lexicographic solves. A segment (L, R) is solved
 * with the weight normal to it (ties toward smaller f1, which keeps the found
 * point a hull vertex); a value strictly below w(L) yields a new extreme point
 * and both halves are searched, anything else closes the segment.
 * With k >= 2 points this performs 2k - 1 solves; a single-point frontier
 * reports 2 (the two lexicographic solves).
 */
[[nodiscard]] ExtremeSet dichotomic_search(const Instance& instance);

}  // namespace bomst

#endif  // BOMST_PHASE1_HPP
