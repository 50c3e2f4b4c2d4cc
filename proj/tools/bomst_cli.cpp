// bomst: command-line front end for the bi-objective spanning tree solver.
//
// Exit codes: 0 success, 1 usage error, 2 input error, 3 enumeration budget
// exceeded (solve), 4 lazy and exhaustive optimal groupings disagree.

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "bomst/bench.hpp"
#include "bomst/optimal.hpp"
#include "bomst/oracle.hpp"
#include "bomst/phase1.hpp"
#include "bomst/strategies.hpp"

namespace {

using namespace bomst;

constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;
constexpr int kExitMismatch = 4;

// Input problems (unreadable or malformed files, oversized oracle requests).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Instance load(const std::string& path) {
  try {
    return read_instance(path);
  } catch (const ParseError& e) {
    throw InputError(path + ":" + std::to_string(e.line()) + ": " + e.what());
  } catch (const std::exception& e) {
    throw InputError(e.what());
  }
}

void print_points(std::ostream& out, const std::vector<ObjectivePoint>& points) {
  for (const auto& p : points) out << p.z1 << ' ' << p.z2 << '\n';
}

std::string format_grouping(const Grouping& grouping) {
  std::ostringstream out;
  out << '{';
  for (std::size_t k = 0; k < grouping.size(); ++k) {
    if (k) out << ',';
    out << '[' << grouping[k].first;
    if (grouping[k].last != grouping[k].first) out << ".." << grouping[k].last;
    out << ']';
  }
  out << '}';
  return out.str();
}

std::vector<StrategySpec> parse_strategy_list(const std::string& csv) {
  std::vector<StrategySpec> out;
  std::istringstream in(csv);
  std::string label;
  while (std::getline(in, label, ',')) {
    if (!label.empty()) out.push_back(parse_strategy(label));
  }
  if (out.empty()) throw std::invalid_argument("empty strategy list");
  return out;
}

std::string join_labels() {
  std::string all;
  for (const auto& l : standard_strategy_labels()) all += (all.empty() ? "" : ",") + l;
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bi-objective minimum spanning trees: two-phase solver, grouping strategies and benchmarks"};
  app.require_subcommand(1);

  GenParams gen;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random complete instance");
  gen_cmd->add_option("--n", gen.n, "Number of vertices")->required();
  gen_cmd->add_option("--range", gen.range, "Upper cost limit r")->capture_default_str();
  gen_cmd->add_option("--rho", gen.rho, "Target cost correlation")->capture_default_str();
  gen_cmd->add_option("--seed", gen.seed, "Random seed")->capture_default_str();
  gen_cmd->add_option("--out", gen_out, "Output file (stdout when omitted)");

  std::string instance_path;
  std::string strategy_name;
  std::string points_out;
  std::optional<std::int64_t> max_enumerations;
  auto* solve_cmd = app.add_subcommand("solve", "Compute the nondominated set with one strategy");
  solve_cmd->add_option("--instance", instance_path, "Instance file")->required();
  solve_cmd->add_option("--strategy", strategy_name, "Strategy label, e.g. F2 or ECU")->required();
  solve_cmd->add_option("--points-out", points_out, "Write nondominated points here");
  solve_cmd->add_option("--max-enumerations", max_enumerations, "Enumeration budget");

  int tau = kDefaultTau;
  bool exhaustive_check = false;
  auto* optimal_cmd = app.add_subcommand("optimal", "Optimal grouping by lazy shortest path");
  optimal_cmd->add_option("--instance", instance_path, "Instance file")->required();
  optimal_cmd->add_option("--tau", tau, "Largest group size")->capture_default_str()->check(CLI::PositiveNumber);
  optimal_cmd->add_flag("--exhaustive-check", exhaustive_check, "Compare with all contiguous partitions");

  bool classify_points = false;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force frontier of a small instance");
  oracle_cmd->add_option("--instance", instance_path, "Instance file")->required();
  oracle_cmd->add_flag("--classify", classify_points, "Split into extreme, nonextreme and unsupported points");

  std::string instances_dir;
  std::string strategies_csv = join_labels();
  std::string csv_path;
  std::string groups_csv_path;
  GridOptions grid;
  auto* bench_cmd = app.add_subcommand("bench", "Run a strategy x instance grid");
  bench_cmd->add_option("--instances", instances_dir, "Directory of instance files")->required();
  bench_cmd->add_option("--strategies", strategies_csv, "Comma-separated strategy labels")->capture_default_str();
  bench_cmd->add_flag("--optimal", grid.with_optimal, "Compute optimal groupings and ratios");
  bench_cmd->add_option("--tau", grid.tau, "Largest group size")->capture_default_str()->check(CLI::PositiveNumber);
  bench_cmd->add_option("--csv", csv_path, "Results CSV")->required();
  bench_cmd->add_option("--groups-csv", groups_csv_path, "Optimal group-size CSV (default: <csv>_groups.csv)");
  bench_cmd->add_option("--max-enumerations", grid.max_enumerations, "Per-run enumeration budget");
  bench_cmd->add_option("--jobs", grid.jobs, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  bench_cmd->add_flag("--fresh-apriori", grid.fresh_apriori,
                      "Cost a priori strategies as isolated group explorations");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*gen_cmd) {
      const Instance instance = generate(gen);
      if (gen_out.empty()) {
        write_instance(instance, std::cout);
      } else {
        write_instance(instance, std::filesystem::path(gen_out));
      }
      return 0;
    }

    if (*solve_cmd) {
      StrategySpec spec;
      try {
        spec = parse_strategy(strategy_name);
      } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
      }
      const Instance instance = load(instance_path);
      try {
        const SolveResult result = solve(instance, spec, max_enumerations);
        std::cout << "strategy " << strategy_label(spec) << '\n'
                  << "y_n " << result.nondominated.size() << '\n'
                  << "y_nse " << result.y_nse << '\n'
                  << "yn_bound " << result.yn_bound << '\n'
                  << "scalarized_solves " << result.scalarized_solves << '\n'
                  << "explorations " << result.log.size() << '\n'
                  << "enumerated " << result.enumerated << '\n';
        if (!points_out.empty()) {
          std::ofstream out(points_out);
          if (!out) throw InputError("cannot write " + points_out);
          print_points(out, result.nondominated);
        }
      } catch (const EnumerationLimitExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBudget;
      }
      return 0;
    }

    if (*optimal_cmd) {
      const Instance instance = load(instance_path);
      const ExtremeSet phase1 = dichotomic_search(instance);
      const SpanningTreeRanker ranker(instance);
      const Problem problem = make_problem(ranker, phase1);
      const SearchState initial = problem.initial_state();
      const OptimalGrouping best = optimal_grouping(problem, initial, tau);
      std::cout << "triangles " << initial.triangle_count() << '\n';
      if (const auto& range = initial.active_range()) {
        std::cout << "active_range " << range->first << ' ' << range->last << '\n';
      }
      std::cout << "grouping " << format_grouping(best.grouping) << '\n'
                << "cost " << best.cost << '\n'
                << "arcs_evaluated " << best.arcs_evaluated << '\n'
                << "arcs_created " << best.arcs.size() << '\n'
                << "evaluation_enumerated " << best.evaluation_enumerated << '\n';
      if (exhaustive_check) {
        const OptimalGrouping check = exhaustive_grouping(problem, initial, tau);
        const bool same = check.cost == best.cost;
        std::cout << "exhaustive_cost " << check.cost << (same ? " (match)" : " (MISMATCH)") << '\n';
        if (!same) return kExitMismatch;
      }
      return 0;
    }

    if (*oracle_cmd) {
      const Instance instance = load(instance_path);
      if (instance.n > kMaxOracleVertices) throw InputError(OracleSizeError(instance.n).what());
      const auto points = all_tree_points(instance);
      const FrontierClassification c = classify(points);
      std::cout << "trees " << points.size() << '\n' << "y_n " << c.y_n.size() << '\n';
      print_points(std::cout, c.y_n);
      if (classify_points) {
        std::cout << "y_nse " << c.y_nse.size() << '\n';
        print_points(std::cout, c.y_nse);
        std::cout << "y_nsn " << c.y_nsn.size() << '\n';
        print_points(std::cout, c.y_nsn);
        std::cout << "y_nu " << c.y_nu.size() << '\n';
        print_points(std::cout, c.y_nu);
      }
      return 0;
    }

    if (*bench_cmd) {
      std::vector<StrategySpec> strategies;
      try {
        strategies = parse_strategy_list(strategies_csv);
      } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
      }
      std::vector<NamedInstance> instances;
      try {
        instances = list_instances(instances_dir);
      } catch (const std::exception& e) {
        throw InputError(e.what());
      }
      const GridResult result = run_grid(instances, strategies, grid);
      for (const auto& f : result.failures) std::cerr << "warning: " << f << '\n';

      std::ofstream csv(csv_path);
      if (!csv) throw InputError("cannot write " + csv_path);
      write_records_csv(csv, result.records);
      if (grid.with_optimal) {
        if (groups_csv_path.empty()) {
          const std::filesystem::path p(csv_path);
          groups_csv_path = (p.parent_path() / (p.stem().string() + "_groups.csv")).string();
        }
        std::ofstream groups(groups_csv_path);
        if (!groups) throw InputError("cannot write " + groups_csv_path);
        write_group_sizes_csv(groups, result.group_sizes, grid.tau);
      }

      std::cout << std::left << std::setw(8) << "strategy" << std::right << std::setw(8) << "solved"
                << std::setw(16) << "mean_enum" << std::setw(12) << "hmean_ratio" << '\n';
      for (const auto& s : summarize(result.records)) {
        std::cout << std::left << std::setw(8) << s.strategy << std::right << std::setw(8)
                  << (std::to_string(s.solved) + "/" + std::to_string(s.runs)) << std::setw(16) << std::fixed
                  << std::setprecision(1) << s.mean_enumerated << std::setw(12);
        if (s.harmonic_ratio) {
          std::cout << std::setprecision(3) << *s.harmonic_ratio;
        } else {
          std::cout << "-";
        }
        std::cout << '\n';
      }
      return result.failures.empty() ? 0 : kExitInput;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return 0;
}
