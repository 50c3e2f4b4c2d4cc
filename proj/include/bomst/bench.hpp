/**
 * @file bench.hpp
 * @brief Strategy x instance grids, effectiveness ratios and CSV output.
 */

#ifndef BOMST_BENCH_HPP
#define BOMST_BENCH_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bomst/optimal.hpp"
#include "bomst/strategies.hpp"

namespace bomst {

struct RunRecord {
  std::string instance;
  std::string strategy;
  bool solved = false;
  std::int64_t enumerated = 0;
  std::int64_t y_n = 0;
  std::int64_t y_nse = 0;
  Value yn_bound = 0;
  std::optional<std::int64_t> optimal_cost;
  std::optional<Ratio> ratio;  ///< present iff optimal_cost is
  std::int64_t wall_ms = 0;

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

struct GroupSizeRow {
  std::string instance;
  std::int64_t optimal_cost = 0;
  std::vector<std::int64_t> counts;  ///< groups of size 1..tau

  friend bool operator==(const GroupSizeRow&, const GroupSizeRow&) = default;
};

struct NamedInstance {
  std::string id;
  std::filesystem::path path;
};

struct GridOptions {
  bool with_optimal = false;
  int tau = kDefaultTau;
  std::optional<std::int64_t> max_enumerations;
  int jobs = 1;
  /// Report a priori costs as sums of isolated group explorations.
  bool fresh_apriori = false;
};

struct GridResult {
  std::vector<RunRecord> records;   ///< sorted by (instance, strategy)
  std::vector<GroupSizeRow> group_sizes;
  std::vector<std::string> failures;  ///< one message per instance that could not be run
};

/// Every regular file in @p dir, sorted by name; the id is the file stem.
[[nodiscard]] std::vector<NamedInstance> list_instances(const std::filesystem::path& dir);

/// One record per (instance, strategy). An instance that fails to load yields
/// unsolved records and a failure message; the rest of the grid still runs.
[[nodiscard]] GridResult run_grid(std::span<const NamedInstance> instances, std::span<const StrategySpec> strategies,
                                  const GridOptions& options = {});

/// Record for one strategy on one loaded instance.
[[nodiscard]] RunRecord run_one(const std::string& id, const Instance& instance, const StrategySpec& spec,
                                const GridOptions& options = {});

/// k / sum(1/r). nullopt on an empty list; throws std::invalid_argument on a non-positive ratio.
[[nodiscard]] std::optional<double> harmonic_mean(std::span<const double> ratios);

inline constexpr const char* kCsvHeader =
    "instance,strategy,solved,enumerated,y_n,y_nse,yn_bound,optimal_cost,ratio_num,ratio_den,ratio,wall_ms";

void write_records_csv(std::ostream& out, std::span<const RunRecord> records);
/// Throws std::runtime_error on a malformed header or row.
[[nodiscard]] std::vector<RunRecord> read_records_csv(std::istream& in);

void write_group_sizes_csv(std::ostream& out, std::span<const GroupSizeRow> rows, int tau);

struct StrategySummary {
  std::string strategy;
  std::int64_t solved = 0;
  std::int64_t runs = 0;
  double mean_enumerated = 0;
  std::optional<double> harmonic_ratio;
};

/// Per-strategy aggregates in first-appearance order.
[[nodiscard]] std::vector<StrategySummary> summarize(std::span<const RunRecord> records);

}  // namespace bomst

#endif  // BOMST_BENCH_HPP
