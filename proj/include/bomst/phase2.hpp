/**
 * @file phase2.hpp
 * @brief Search zones between consecutive extreme points and the ranking-based
 * exploration of groups of adjacent zones.
 *
 * A Triangle keeps its known interior nondominated points as a staircase
 * ordered by z1. Each step of the staircase is a zone with one local upper
 * bound (next.z1 - 1, start.z2 - 1) and an active flag. A zone becomes
 * inactive once an exploration proves it holds no unknown point; splitting an
 * active zone on insertion yields two active zones.
 */

#ifndef BOMST_PHASE2_HPP
#define BOMST_PHASE2_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "bomst/geometry.hpp"
#include "bomst/ranking.hpp"

namespace bomst {

enum class TriangleStatus { unexplored, partially_covered, covered };

class Triangle {
 public:
  /// Throws std::invalid_argument unless left.z1 < right.z1 and left.z2 > right.z2.
  Triangle(int index, ObjectivePoint left, ObjectivePoint right);

  [[nodiscard]] int index() const noexcept { return index_; }
  [[nodiscard]] ObjectivePoint left() const noexcept { return left_; }
  [[nodiscard]] ObjectivePoint right() const noexcept { return right_; }
  [[nodiscard]] const WeightVector& weight() const noexcept { return weight_; }

  /// ND bound before any interior point is known.
  [[nodiscard]] Value initial_nd_bound() const noexcept { return initial_nd_bound_; }
  /// Unit width or height: no integer point fits strictly inside.
  [[nodiscard]] bool is_empty() const noexcept { return initial_nd_bound_ == 0; }

  /// Inserts y if it lies strictly inside an active zone; returns whether it did.
  bool insert(ObjectivePoint y);

  [[nodiscard]] std::vector<ObjectivePoint> interior_points() const;
  [[nodiscard]] std::vector<ObjectivePoint> local_upper_bounds() const;
  [[nodiscard]] std::vector<ObjectivePoint> active_upper_bounds() const;
  [[nodiscard]] std::size_t zone_count() const noexcept { return zones_.size(); }
  [[nodiscard]] std::size_t active_count() const noexcept { return active_; }
  [[nodiscard]] TriangleStatus status() const noexcept;

  /// ND bound refined by the known interior points.
  [[nodiscard]] Value nd_bound() const;
  /// Same, summed over active zones only.
  [[nodiscard]] Value active_nd_bound() const;

  /// Active bound of largest w-value, ties toward smaller z1.
  [[nodiscard]] std::optional<ObjectivePoint> best_active_bound(const WeightVector& w) const;

  /// Deactivates every active zone whose bound has w-value below @p stop. Returns how many.
  std::size_t deactivate_below(const WeightVector& w, Value stop);
  void deactivate_all();
  void activate_all();

 private:
  struct Zone {
    ObjectivePoint start;
    bool active = true;
  };
  using ZoneMap = std::map<Value, Zone>;

  [[nodiscard]] ObjectivePoint zone_end(ZoneMap::const_iterator it) const;
  [[nodiscard]] ObjectivePoint zone_bound(ZoneMap::const_iterator it) const;

  int index_;
  ObjectivePoint left_;
  ObjectivePoint right_;
  WeightVector weight_;
  Value initial_nd_bound_;
  ZoneMap zones_;  ///< keyed by zone start z1; the first zone starts at left_
  std::size_t active_ = 1;
};

/// Contiguous range of triangle indices first..last (1-based, inclusive).
struct Group {
  int first = 1;
  int last = 1;

  [[nodiscard]] int size() const noexcept { return last - first + 1; }
  friend bool operator==(const Group&, const Group&) = default;
};

using Grouping = std::vector<Group>;

/// Closed 1-based index range of triangles that take part in the second phase.
struct IndexRange {
  int first = 1;
  int last = 0;

  [[nodiscard]] int size() const noexcept { return last - first + 1; }
  friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

/// True when @p grouping partitions range into consecutive non-empty groups.
[[nodiscard]] bool is_valid_grouping(const Grouping& grouping, IndexRange range);

/**
 * @brief Range left after dropping leading and trailing runs of empty
 * triangles (beta == 0). nullopt when every triangle is empty.
 */
[[nodiscard]] std::optional<IndexRange> trim_empty_extremes(std::span<const Value> betas);

enum class StopReason { threshold, exhausted, budget, no_active_bounds };

struct ExplorationResult {
  Group group;
  std::int64_t enumerated = 0;
  StopReason reason = StopReason::threshold;
  /// First weighted value above the final threshold; set only for StopReason::threshold.
  std::optional<Value> stop_value;
};

/// Raised when a SearchState's global enumeration limit is reached.
class EnumerationLimitExceeded : public std::runtime_error {
 public:
  explicit EnumerationLimitExceeded(std::int64_t limit);
};

class SearchState {
 public:
  /**
   * @param extremes y^1..y^{m+1}, strictly increasing in z1 and decreasing in z2.
   * @param seeds known nondominated points (e.g. supported nonextreme ones),
   *        inserted into their triangles' archives.
   */
  explicit SearchState(std::vector<ObjectivePoint> extremes, std::span<const ObjectivePoint> seeds = {});

  [[nodiscard]] const std::vector<ObjectivePoint>& extremes() const noexcept { return extremes_; }
  [[nodiscard]] int triangle_count() const noexcept { return static_cast<int>(triangles_.size()); }
  [[nodiscard]] Triangle& triangle(int index) { return triangles_.at(static_cast<std::size_t>(index - 1)); }
  [[nodiscard]] const Triangle& triangle(int index) const { return triangles_.at(static_cast<std::size_t>(index - 1)); }
  [[nodiscard]] std::span<const Triangle> triangles() const noexcept { return triangles_; }

  /// nullopt when phase two is vacuous.
  [[nodiscard]] const std::optional<IndexRange>& active_range() const noexcept { return active_range_; }

  /// Triangle whose open z1-interval contains z1, or 0.
  [[nodiscard]] int locate(Value z1) const;

  /// Weight of the group's outer extremes.
  [[nodiscard]] WeightVector weight(Group g) const;

  /// Every extreme plus every archived interior point, sorted by z1.
  [[nodiscard]] std::vector<ObjectivePoint> nondominated() const;

  /// |Y_NSE| + sum of initial ND bounds.
  [[nodiscard]] Value nondominated_upper_bound() const;

  std::int64_t total_enumerated = 0;
  std::optional<std::int64_t> enumeration_limit;
  std::vector<ExplorationResult> log;

 private:
  std::vector<ObjectivePoint> extremes_;
  std::vector<Triangle> triangles_;
  std::optional<IndexRange> active_range_;
};

/// A rankable problem together with its first-phase output.
struct Problem {
  std::reference_wrapper<const Rankable> ranker;
  std::vector<ObjectivePoint> extremes;
  std::vector<ObjectivePoint> seeds;

  [[nodiscard]] SearchState initial_state() const { return SearchState(extremes, seeds); }
};

/**
 * @brief Routes an emitted point to the triangle containing it and archives it
 * if it falls strictly inside an active zone. Points outside every triangle
 * are discarded.
 */
bool update_nd(SearchState& state, ObjectivePoint y);

/// Highest active local upper bound of the group's triangles under @p w,
/// ties toward the smaller triangle index then smaller z1; nullopt when none is active.
[[nodiscard]] std::optional<ObjectivePoint> update_ub(const SearchState& state, Group g, const WeightVector& w);

/**
 * @brief Ranks solutions under the group weight until the next value exceeds
 * the group's highest active bound, archiving accepted points on the way.
 *
 * The over-threshold solution that ends the loop is peeked, never emitted,
 * and not counted. With @p budget, the exploration stops with
 * StopReason::budget once that many solutions have been emitted and more are
 * still needed. The result is appended to state.log.
 */
ExplorationResult explore_group(const Rankable& ranker, SearchState& state, Group g,
                                 std::optional<std::int64_t> budget = std::nullopt);

enum class CoverageMode {
  extended,  ///< partial deactivation persists across explorations
  simple     ///< a triangle is either fully covered or left untouched
};

/**
 * @brief Deactivates every zone of the active range proven exhausted by a
 * finished exploration. Returns indices of triangles that became covered.
 */
std::vector<int> apply_coverage(SearchState& state, const ExplorationResult& explored,
                                CoverageMode mode = CoverageMode::extended);

/// Cost of exploring @p g from the problem's initial state, with optional budget.
[[nodiscard]] ExplorationResult explore_fresh(const Problem& problem, const SearchState& initial, Group g,
                                              std::optional<std::int64_t> budget = std::nullopt);

}  // namespace bomst

#endif  // BOMST_PHASE2_HPP
