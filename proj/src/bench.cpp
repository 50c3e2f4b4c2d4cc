#include "bomst/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "bomst/phase1.hpp"

namespace bomst {

namespace {

struct InstanceOutcome {
  std::vector<RunRecord> records;
  std::optional<GroupSizeRow> group_sizes;
};

// Sum of isolated group explorations, or nullopt when it would pass the limit.
std::optional<std::int64_t> limited_fresh_cost(const Problem& problem, const SearchState& initial,
                                               const Grouping& grouping, std::optional<std::int64_t> limit) {
  std::int64_t total = 0;
  for (const auto& g : grouping) {
    std::optional<std::int64_t> budget;
    if (limit) budget = *limit - total;
    const auto result = explore_fresh(problem, initial, g, budget);
    if (result.reason == StopReason::budget) return std::nullopt;
    total += result.enumerated;
  }
  return total;
}

InstanceOutcome run_instance(const std::string& id, const Instance& instance, std::span<const StrategySpec> strategies,
                             const GridOptions& options) {
  InstanceOutcome out;
  const ExtremeSet phase1 = dichotomic_search(instance);
  const SpanningTreeRanker ranker(instance);
  const Problem problem = make_problem(ranker, phase1);
  const SearchState initial = problem.initial_state();

  std::optional<std::int64_t> optimal_cost;
  if (options.with_optimal) {
    const OptimalGrouping best = optimal_grouping(problem, initial, options.tau);
    optimal_cost = best.cost;
    out.group_sizes = GroupSizeRow{id, best.cost, group_size_histogram(best.grouping, options.tau)};
  }

  for (const auto& spec : strategies) {
    RunRecord rec;
    rec.instance = id;
    rec.strategy = strategy_label(spec);
    rec.y_nse = static_cast<std::int64_t>(phase1.points.size());
    rec.yn_bound = initial.nondominated_upper_bound();
    const auto start = std::chrono::steady_clock::now();
    try {
      const SolveResult result = run_strategy(problem, spec, options.max_enumerations);
      rec.solved = true;
      rec.enumerated = result.enumerated;
      rec.y_n = static_cast<std::int64_t>(result.nondominated.size());
      if (options.fresh_apriori && is_apriori(spec)) {
        const auto cost = limited_fresh_cost(problem, initial, build_grouping(initial, spec), options.max_enumerations);
        if (cost) {
          rec.enumerated = *cost;
        } else {
          rec.solved = false;
          rec.enumerated = *options.max_enumerations;
        }
      }
    } catch (const EnumerationLimitExceeded&) {
      rec.solved = false;
      rec.enumerated = *options.max_enumerations;
    }
    if (rec.solved && optimal_cost) {
      rec.optimal_cost = optimal_cost;
      rec.ratio = effectiveness_ratio(rec.enumerated, *optimal_cost);
    }
    rec.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    out.records.push_back(std::move(rec));
  }
  return out;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

std::int64_t to_int(const std::string& text) {
  std::size_t used = 0;
  const long long v = std::stoll(text, &used);
  if (used != text.size()) throw std::runtime_error("malformed integer '" + text + "'");
  return v;
}

}  // namespace

std::vector<NamedInstance> list_instances(const std::filesystem::path& dir) {
  std::vector<NamedInstance> out;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file()) out.push_back({entry.path().stem().string(), entry.path()});
  }
  std::sort(out.begin(), out.end(), [](const NamedInstance& a, const NamedInstance& b) { return a.path < b.path; });
  return out;
}

RunRecord run_one(const std::string& id, const Instance& instance, const StrategySpec& spec,
                  const GridOptions& options) {
  return run_instance(id, instance, std::span<const StrategySpec>(&spec, 1), options).records.front();
}

GridResult run_grid(std::span<const NamedInstance> instances, std::span<const StrategySpec> strategies,
                    const GridOptions& options) {
  GridResult grid;
  std::mutex lock;
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t k = next++; k < instances.size(); k = next++) {
      const auto& item = instances[k];
      InstanceOutcome outcome;
      std::string failure;
      try {
        const Instance instance = read_instance(item.path);
        outcome = run_instance(item.id, instance, strategies, options);
      } catch (const std::exception& e) {
        failure = item.id + ": " + e.what();
        outcome.records.clear();
        outcome.group_sizes.reset();
        for (const auto& spec : strategies) {
          RunRecord rec;
          rec.instance = item.id;
          rec.strategy = strategy_label(spec);
          outcome.records.push_back(std::move(rec));
        }
      }
      const std::lock_guard guard(lock);
      grid.records.insert(grid.records.end(), outcome.records.begin(), outcome.records.end());
      if (outcome.group_sizes) grid.group_sizes.push_back(std::move(*outcome.group_sizes));
      if (!failure.empty()) grid.failures.push_back(std::move(failure));
    }
  };

  const int jobs = std::max(1, std::min<int>(options.jobs, static_cast<int>(instances.size())));
  std::vector<std::thread> threads;
  for (int j = 1; j < jobs; ++j) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();

  std::sort(grid.records.begin(), grid.records.end(), [](const RunRecord& a, const RunRecord& b) {
    return std::tie(a.instance, a.strategy) < std::tie(b.instance, b.strategy);
  });
  std::sort(grid.group_sizes.begin(), grid.group_sizes.end(),
            [](const GroupSizeRow& a, const GroupSizeRow& b) { return a.instance < b.instance; });
  std::sort(grid.failures.begin(), grid.failures.end());
  return grid;
}

std::optional<double> harmonic_mean(std::span<const double> ratios) {
  if (ratios.empty()) return std::nullopt;
  double inverse = 0;
  for (double r : ratios) {
    if (!(r > 0)) throw std::invalid_argument("harmonic mean needs positive values");
    inverse += 1.0 / r;
  }
  return static_cast<double>(ratios.size()) / inverse;
}

void write_records_csv(std::ostream& out, std::span<const RunRecord> records) {
  out << kCsvHeader << '\n';
  for (const auto& r : records) {
    out << r.instance << ',' << r.strategy << ',' << (r.solved ? 1 : 0) << ',' << r.enumerated << ',' << r.y_n << ','
        << r.y_nse << ',' << r.yn_bound << ',';
    if (r.optimal_cost) out << *r.optimal_cost;
    out << ',';
    if (r.ratio) {
      char decimal[64];
      std::snprintf(decimal, sizeof decimal, "%.6f", r.ratio->value());
      out << r.ratio->num << ',' << r.ratio->den << ',' << decimal;
    } else {
      out << ",,";
    }
    out << ',' << r.wall_ms << '\n';
  }
}

std::vector<RunRecord> read_records_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw std::runtime_error("unexpected CSV header");
  std::vector<RunRecord> out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    if (f.size() != 12) throw std::runtime_error("malformed CSV row: " + line);
    RunRecord r;
    r.instance = f[0];
    r.strategy = f[1];
    r.solved = to_int(f[2]) != 0;
    r.enumerated = to_int(f[3]);
    r.y_n = to_int(f[4]);
    r.y_nse = to_int(f[5]);
    r.yn_bound = to_int(f[6]);
    if (!f[7].empty()) r.optimal_cost = to_int(f[7]);
    if (!f[8].empty()) r.ratio = Ratio{to_int(f[8]), to_int(f[9])};
    r.wall_ms = to_int(f[11]);
    out.push_back(std::move(r));
  }
  return out;
}

void write_group_sizes_csv(std::ostream& out, std::span<const GroupSizeRow> rows, int tau) {
  out << "instance,optimal_cost";
  for (int s = 1; s <= tau; ++s) out << ",size_" << s;
  out << '\n';
  for (const auto& row : rows) {
    out << row.instance << ',' << row.optimal_cost;
    for (auto c : row.counts) out << ',' << c;
    out << '\n';
  }
}

std::vector<StrategySummary> summarize(std::span<const RunRecord> records) {
  std::vector<StrategySummary> out;
  std::map<std::string, std::size_t> slot;
  std::vector<std::vector<double>> ratios;
  std::vector<std::int64_t> totals;
  for (const auto& r : records) {
    auto [it, inserted] = slot.try_emplace(r.strategy, out.size());
    if (inserted) {
      out.emplace_back().strategy = r.strategy;
      ratios.emplace_back();
      totals.push_back(0);
    }
    auto& s = out[it->second];
    ++s.runs;
    if (!r.solved) continue;
    ++s.solved;
    totals[it->second] += r.enumerated;
    if (r.ratio) ratios[it->second].push_back(r.ratio->value());
  }
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (out[k].solved > 0) out[k].mean_enumerated = static_cast<double>(totals[k]) / static_cast<double>(out[k].solved);
    std::vector<double> positive;
    for (double r : ratios[k]) {
      if (r > 0) positive.push_back(r);
    }
    out[k].harmonic_ratio = harmonic_mean(positive);
  }
  return out;
}

}  // namespace bomst
