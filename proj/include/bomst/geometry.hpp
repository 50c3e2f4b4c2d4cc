/**
 * @file geometry.hpp
 * @brief Bi-objective points, dominance, weight vectors, local upper bounds
 * and the two grouping measures (group angle and ND bound).
 *
 * Everything here is exact integer arithmetic except group_angle, which only
 * ranks candidate merges and is compared with kAngleTolerance.
 */

#ifndef BOMST_GEOMETRY_HPP
#define BOMST_GEOMETRY_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace bomst {

/// Integer objective value. Coordinates stay below ~1.5e8 for the supported
/// instance range, so weighted sums fit comfortably in 64 bits.
using Value = std::int64_t;

/// Image of a solution under (f1, f2).
struct ObjectivePoint {
  Value z1 = 0;
  Value z2 = 0;

  friend constexpr auto operator<=>(const ObjectivePoint&, const ObjectivePoint&) = default;
};

std::ostream& operator<<(std::ostream& os, const ObjectivePoint& p);

enum class Relation { equal, a_dominates_b, b_dominates_a, incomparable };

/// Componentwise a <= b.
[[nodiscard]] constexpr bool weakly_dominates(ObjectivePoint a, ObjectivePoint b) noexcept {
  return a.z1 <= b.z1 && a.z2 <= b.z2;
}

/// Componentwise a <= b with a != b.
[[nodiscard]] constexpr bool dominates(ObjectivePoint a, ObjectivePoint b) noexcept {
  return weakly_dominates(a, b) && a != b;
}

[[nodiscard]] Relation compare(ObjectivePoint a, ObjectivePoint b) noexcept;

/**
 * @brief Non-negative integer weight vector, never (0, 0).
 *
 * Evaluating a point yields the exact weighted sum w1*z1 + w2*z2.
 */
class WeightVector {
 public:
  /// Throws std::invalid_argument on a negative component or on (0, 0).
  WeightVector(Value w1, Value w2);

  [[nodiscard]] Value w1() const noexcept { return w1_; }
  [[nodiscard]] Value w2() const noexcept { return w2_; }

  [[nodiscard]] Value operator()(ObjectivePoint z) const noexcept { return w1_ * z.z1 + w2_ * z.z2; }

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  Value w1_;
  Value w2_;
};

[[nodiscard]] inline Value weighted_value(const WeightVector& w, ObjectivePoint z) noexcept { return w(z); }

/// True when left.z1 < right.z1 and left.z2 > right.z2.
[[nodiscard]] constexpr bool is_ordered_pair(ObjectivePoint left, ObjectivePoint right) noexcept {
  return left.z1 < right.z1 && left.z2 > right.z2;
}

/// Weight normal to the segment left-right: (left.z2 - right.z2, right.z1 - left.z1).
/// Throws std::invalid_argument when the pair is not ordered.
[[nodiscard]] WeightVector group_weight(ObjectivePoint left, ObjectivePoint right);

/// (right.z1 - 1, left.z2 - 1), the single bound of a triangle with no known interior point.
[[nodiscard]] ObjectivePoint initial_upper_bound(ObjectivePoint left, ObjectivePoint right) noexcept;

/**
 * @brief Local upper bounds of the staircase left, interior..., right.
 *
 * @p interior must be strictly increasing in z1 and strictly decreasing in z2,
 * strictly between the corners. Returns |interior| + 1 bounds ordered by z1.
 */
[[nodiscard]] std::vector<ObjectivePoint> local_upper_bounds(ObjectivePoint left, ObjectivePoint right,
                                                             std::span<const ObjectivePoint> interior = {});

/// Maximum number of integer nondominated points strictly between two
/// consecutive known points: min{dz1, -dz2} - 1, clamped at 0.
[[nodiscard]] Value zone_nd_bound(ObjectivePoint left, ObjectivePoint right) noexcept;

/// ND bound of a triangle, refined by its known interior points (sum of zone bounds).
[[nodiscard]] Value nd_bound(ObjectivePoint left, ObjectivePoint right,
                             std::span<const ObjectivePoint> interior = {}) noexcept;

/// Sum of per-triangle ND bounds.
[[nodiscard]] Value group_nd_bound(std::span<const Value> betas) noexcept;

struct Segment {
  ObjectivePoint from;
  ObjectivePoint to;
};

inline constexpr double kAngleTolerance = 1e-9;

/**
 * @brief Largest angle at the intersection of the lines through two segments.
 *
 * Returns pi - alpha where alpha in [0, pi/2] is the acute angle between the
 * segment directions. Collinear segments return exactly pi.
 */
[[nodiscard]] double group_angle(Segment first, Segment last) noexcept;

}  // namespace bomst

#endif  // BOMST_GEOMETRY_HPP
