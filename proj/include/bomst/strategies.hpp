/**
 * @file strategies.hpp
 * @brief Grouping strategies for the second phase.
 *
 * A priori strategies build a complete grouping of the active triangles and
 * then explore the groups left to right. Dynamic strategies pick the next
 * triangle or group after every exploration, using the coverage left behind
 * by earlier ones.
 *
 * Labels: F<s> (fixed size), GA<t>/GN<t> (greedy merge by angle / ND bound),
 * SA<a>/SM<k> (angle split, average or maximum group size), SRKB4, ECU,
 * GAEC<t>, GNECU<t>.
 */

#ifndef BOMST_STRATEGIES_HPP
#define BOMST_STRATEGIES_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bomst/instance.hpp"
#include "bomst/phase1.hpp"
#include "bomst/phase2.hpp"

namespace bomst {

enum class Measure { angle, nd_bound };

struct FixedSize {
  int s = 1;
};

struct GreedyMerge {
  Measure measure = Measure::angle;
  int t = 2;
};

struct MaxSize {
  int k = 1;
};

struct AvgSize {
  double a = 2.0;
};

struct AngleSplit {
  std::variant<MaxSize, AvgSize> stop;
};

enum class DynamicBase { srkb4, ecu, gaec, gnecu };

struct Dynamic {
  DynamicBase base = DynamicBase::ecu;
  int t = 1;  ///< window width for gaec / gnecu
};

using StrategySpec = std::variant<FixedSize, GreedyMerge, AngleSplit, Dynamic>;

/// The sixteen standard labels, in table order.
[[nodiscard]] const std::vector<std::string>& standard_strategy_labels();

/// Throws std::invalid_argument on an unknown or out-of-range label.
[[nodiscard]] StrategySpec parse_strategy(std::string_view label);
[[nodiscard]] std::string strategy_label(const StrategySpec& spec);
/// Throws std::invalid_argument when a parameter is out of range (s >= 1, t >= 2, k >= 1, a > 1).
void validate(const StrategySpec& spec);
[[nodiscard]] bool is_apriori(const StrategySpec& spec) noexcept;

// Grouping builders. They work on local indices 1..m.

/// floor(m/s) groups of s triangles from the left, remainder as one trailing group.
[[nodiscard]] Grouping fixed_grouping(int m, int s);

/// Greedy merge of windows of @p t consecutive triangles maximizing the angle
/// between the window's outer segments. @p extremes holds m+1 points.
[[nodiscard]] Grouping greedy_angle_grouping(std::span<const ObjectivePoint> extremes, int t);

/// Greedy merge maximizing the summed ND bound of the window.
[[nodiscard]] Grouping greedy_nd_grouping(std::span<const Value> betas, int t);

/// Top-down split at the interior extreme with the smallest angle.
[[nodiscard]] Grouping split_grouping(std::span<const ObjectivePoint> extremes, std::variant<MaxSize, AvgSize> stop);

/// Grouping of the state's active range for an a priori spec, in global indices.
/// Empty when phase two is vacuous. Throws std::invalid_argument for dynamic specs.
[[nodiscard]] Grouping build_grouping(const SearchState& state, const StrategySpec& spec);

struct SolveResult {
  std::vector<ObjectivePoint> nondominated;
  std::int64_t enumerated = 0;
  /// Groups in exploration order.
  Grouping explored;
  std::vector<ExplorationResult> log;
  std::size_t y_nse = 0;
  Value yn_bound = 0;
  std::int64_t scalarized_solves = 0;
};

/// Explores @p grouping left to right on @p state with extended coverage.
void explore_grouping(const Rankable& ranker, SearchState& state, const Grouping& grouping);

/// Runs a dynamic strategy to completion on @p state.
void run_dynamic(const Rankable& ranker, SearchState& state, const Dynamic& spec);

/// Runs any strategy on a fresh state built from @p problem.
[[nodiscard]] SolveResult run_strategy(const Problem& problem, const StrategySpec& spec,
                                       std::optional<std::int64_t> enumeration_limit = std::nullopt);

/// Both phases on a spanning tree instance.
[[nodiscard]] SolveResult solve(const Instance& instance, const StrategySpec& spec,
                                std::optional<std::int64_t> enumeration_limit = std::nullopt);

[[nodiscard]] Problem make_problem(const Rankable& ranker, const ExtremeSet& phase1);

/// Sum of isolated explorations of every group, each from a copy of @p initial.
[[nodiscard]] std::int64_t fresh_cost(const Problem& problem, const SearchState& initial, const Grouping& grouping);

}  // namespace bomst

#endif  // BOMST_STRATEGIES_HPP
