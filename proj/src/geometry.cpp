#include "bomst/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace bomst {

std::ostream& operator<<(std::ostream& os, const ObjectivePoint& p) {
  return os << '(' << p.z1 << ',' << p.z2 << ')';
}

Relation compare(ObjectivePoint a, ObjectivePoint b) noexcept {
  if (a == b) return Relation::equal;
  if (weakly_dominates(a, b)) return Relation::a_dominates_b;
  if (weakly_dominates(b, a)) return Relation::b_dominates_a;
  return Relation::incomparable;
}

WeightVector::WeightVector(Value w1, Value w2) : w1_(w1), w2_(w2) {
  if (w1 < 0 || w2 < 0) throw std::invalid_argument("weight components must be non-negative");
  if (w1 == 0 && w2 == 0) throw std::invalid_argument("weight vector must not be (0,0)");
}

WeightVector group_weight(ObjectivePoint left, ObjectivePoint right) {
  if (!is_ordered_pair(left, right)) {
    throw std::invalid_argument("malformed extreme sequence: points must increase in z1 and decrease in z2");
  }
  return WeightVector(left.z2 - right.z2, right.z1 - left.z1);
}

ObjectivePoint initial_upper_bound(ObjectivePoint left, ObjectivePoint right) noexcept {
  return {right.z1 - 1, left.z2 - 1};
}

std::vector<ObjectivePoint> local_upper_bounds(ObjectivePoint left, ObjectivePoint right,
                                               std::span<const ObjectivePoint> interior) {
  std::vector<ObjectivePoint> bounds;
  bounds.reserve(interior.size() + 1);
  ObjectivePoint prev = left;
  for (const auto& p : interior) {
    bounds.push_back({p.z1 - 1, prev.z2 - 1});
    prev = p;
  }
  bounds.push_back({right.z1 - 1, prev.z2 - 1});
  return bounds;
}

Value zone_nd_bound(ObjectivePoint left, ObjectivePoint right) noexcept {
  const Value gap = std::min(right.z1 - left.z1, left.z2 - right.z2) - 1;
  return std::max<Value>(gap, 0);
}

Value nd_bound(ObjectivePoint left, ObjectivePoint right, std::span<const ObjectivePoint> interior) noexcept {
  Value total = 0;
  ObjectivePoint prev = left;
  for (const auto& p : interior) {
    total += zone_nd_bound(prev, p);
    prev = p;
  }
  return total + zone_nd_bound(prev, right);
}

Value group_nd_bound(std::span<const Value> betas) noexcept {
  return std::accumulate(betas.begin(), betas.end(), Value{0});
}

double group_angle(Segment first, Segment last) noexcept {
  const Value ax = first.to.z1 - first.from.z1;
  const Value ay = first.to.z2 - first.from.z2;
  const Value bx = last.to.z1 - last.from.z1;
  const Value by = last.to.z2 - last.from.z2;
  if (ax * by - ay * bx == 0) return std::numbers::pi;
  const double dot = std::abs(static_cast<double>(ax * bx + ay * by));
  const double norms = std::hypot(static_cast<double>(ax), static_cast<double>(ay)) *
                       std::hypot(static_cast<double>(bx), static_cast<double>(by));
  const double alpha = std::acos(std::clamp(dot / norms, 0.0, 1.0));
  return std::numbers::pi - alpha;
}

}  // namespace bomst
