#include "bomst/strategies.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bomst {

namespace {

std::string format_size(double a) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, a);
  std::string s(buf, end);
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

int parse_int(std::string_view text, std::string_view label) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("unknown strategy '" + std::string(label) + "'");
  }
  return value;
}

double parse_double(std::string_view text, std::string_view label) {
  double value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("unknown strategy '" + std::string(label) + "'");
  }
  return value;
}

// Greedy selection of the best window of width t among ungrouped triangles,
// shrinking t when no full window is left. score(first, last) is maximized.
template <typename Score>
Grouping greedy_grouping(int m, int t, Score score) {
  std::vector<char> taken(static_cast<std::size_t>(m + 1), 0);
  Grouping groups;
  for (int width = std::min(t, m); width >= 2; --width) {
    for (;;) {
      std::optional<Group> best;
      double best_score = 0;
      int run = 0;
      for (int i = 1; i <= m; ++i) {
        run = taken[i] ? 0 : run + 1;
        if (run < width) continue;
        const Group g{i - width + 1, i};
        const double s = score(g);
        if (!best || s > best_score + kAngleTolerance) {
          best = g;
          best_score = s;
        }
      }
      if (!best) break;
      for (int i = best->first; i <= best->last; ++i) taken[i] = 1;
      groups.push_back(*best);
    }
  }
  for (int i = 1; i <= m; ++i) {
    if (!taken[i]) groups.push_back({i, i});
  }
  std::sort(groups.begin(), groups.end(), [](const Group& a, const Group& b) { return a.first < b.first; });
  return groups;
}

// Angle between the outer segments of triangles first..last (local indices).
double window_angle(std::span<const ObjectivePoint> extremes, Group g) {
  if (g.size() == 1) return std::numbers::pi / 2;
  return group_angle({extremes[g.first - 1], extremes[g.first]}, {extremes[g.last - 1], extremes[g.last]});
}

Grouping shift(Grouping groups, int offset) {
  for (auto& g : groups) {
    g.first += offset;
    g.last += offset;
  }
  return groups;
}

// Triangle to explore next for SRKB4 / ECU, or 0.
int pick_triangle(const SearchState& state, DynamicBase base) {
  const auto& range = *state.active_range();
  int best = 0;
  Value best_beta = -1;
  for (int i = range.first; i <= range.last; ++i) {
    const Triangle& t = state.triangle(i);
    if (t.active_count() == 0) continue;
    const Value beta = base == DynamicBase::srkb4 ? t.initial_nd_bound() : t.active_nd_bound();
    if (beta > best_beta) {
      best = i;
      best_beta = beta;
    }
  }
  return best;
}

// Best window of width min(t, run length) inside runs of non-covered triangles.
std::optional<Group> pick_window(const SearchState& state, const Dynamic& spec) {
  const auto& range = *state.active_range();
  std::span<const ObjectivePoint> extremes = state.extremes();
  std::optional<Group> best;
  double best_score = 0;
  auto consider = [&](Group g) {
    double score = 0;
    if (spec.base == DynamicBase::gaec) {
      score = window_angle(extremes, g);
    } else {
      for (int i = g.first; i <= g.last; ++i) score += static_cast<double>(state.triangle(i).active_nd_bound());
    }
    if (!best || score > best_score + kAngleTolerance) {
      best = g;
      best_score = score;
    }
  };
  int i = range.first;
  while (i <= range.last) {
    if (state.triangle(i).active_count() == 0) {
      ++i;
      continue;
    }
    int j = i;
    while (j + 1 <= range.last && state.triangle(j + 1).active_count() > 0) ++j;
    const int width = std::min(spec.t, j - i + 1);
    for (int first = i; first + width - 1 <= j; ++first) consider({first, first + width - 1});
    i = j + 1;
  }
  return best;
}

}  // namespace

const std::vector<std::string>& standard_strategy_labels() {
  static const std::vector<std::string> labels{"F1",  "F2",  "F3",    "F4",  "SA2.0", "SA2.5",  "GA2",    "GA3",
                                               "GN2", "GN3", "SRKB4", "ECU", "GAEC2", "GAEC3", "GNECU2", "GNECU3"};
  return labels;
}

StrategySpec parse_strategy(std::string_view label) {
  auto starts = [&](std::string_view prefix) { return label.substr(0, prefix.size()) == prefix; };
  StrategySpec spec;
  if (label == "SRKB4") {
    spec = Dynamic{DynamicBase::srkb4, 1};
  } else if (label == "ECU") {
    spec = Dynamic{DynamicBase::ecu, 1};
  } else if (starts("GNECU")) {
    spec = Dynamic{DynamicBase::gnecu, parse_int(label.substr(5), label)};
  } else if (starts("GAEC")) {
    spec = Dynamic{DynamicBase::gaec, parse_int(label.substr(4), label)};
  } else if (starts("GA")) {
    spec = GreedyMerge{Measure::angle, parse_int(label.substr(2), label)};
  } else if (starts("GN")) {
    spec = GreedyMerge{Measure::nd_bound, parse_int(label.substr(2), label)};
  } else if (starts("SA")) {
    spec = AngleSplit{AvgSize{parse_double(label.substr(2), label)}};
  } else if (starts("SM")) {
    spec = AngleSplit{MaxSize{parse_int(label.substr(2), label)}};
  } else if (starts("F")) {
    spec = FixedSize{parse_int(label.substr(1), label)};
  } else {
    throw std::invalid_argument("unknown strategy '" + std::string(label) + "'");
  }
  validate(spec);
  return spec;
}

std::string strategy_label(const StrategySpec& spec) {
  struct Visitor {
    std::string operator()(const FixedSize& f) const { return "F" + std::to_string(f.s); }
    std::string operator()(const GreedyMerge& g) const {
      return (g.measure == Measure::angle ? "GA" : "GN") + std::to_string(g.t);
    }
    std::string operator()(const AngleSplit& s) const {
      if (const auto* avg = std::get_if<AvgSize>(&s.stop)) return "SA" + format_size(avg->a);
      return "SM" + std::to_string(std::get<MaxSize>(s.stop).k);
    }
    std::string operator()(const Dynamic& d) const {
      switch (d.base) {
        case DynamicBase::srkb4: return "SRKB4";
        case DynamicBase::ecu: return "ECU";
        case DynamicBase::gaec: return "GAEC" + std::to_string(d.t);
        case DynamicBase::gnecu: return "GNECU" + std::to_string(d.t);
      }
      return {};
    }
  };
  return std::visit(Visitor{}, spec);
}

void validate(const StrategySpec& spec) {
  struct Visitor {
    bool operator()(const FixedSize& f) const { return f.s >= 1; }
    bool operator()(const GreedyMerge& g) const { return g.t >= 2; }
    bool operator()(const AngleSplit& s) const {
      if (const auto* avg = std::get_if<AvgSize>(&s.stop)) return avg->a > 1.0 && std::isfinite(avg->a);
      return std::get<MaxSize>(s.stop).k >= 1;
    }
    bool operator()(const Dynamic& d) const {
      return d.base == DynamicBase::srkb4 || d.base == DynamicBase::ecu || d.t >= 2;
    }
  };
  if (!std::visit(Visitor{}, spec)) throw std::invalid_argument("strategy parameter out of range");
}

bool is_apriori(const StrategySpec& spec) noexcept { return !std::holds_alternative<Dynamic>(spec); }

Grouping fixed_grouping(int m, int s) {
  if (s < 1) throw std::invalid_argument("group size must be at least 1");
  Grouping groups;
  int first = 1;
  for (; first + s - 1 <= m; first += s) groups.push_back({first, first + s - 1});
  if (first <= m) groups.push_back({first, m});
  return groups;
}

Grouping greedy_angle_grouping(std::span<const ObjectivePoint> extremes, int t) {
  const int m = static_cast<int>(extremes.size()) - 1;
  return greedy_grouping(m, t, [&](Group g) { return window_angle(extremes, g); });
}

Grouping greedy_nd_grouping(std::span<const Value> betas, int t) {
  const int m = static_cast<int>(betas.size());
  return greedy_grouping(m, t, [&](Group g) {
    Value sum = 0;
    for (int i = g.first; i <= g.last; ++i) sum += betas[static_cast<std::size_t>(i - 1)];
    return static_cast<double>(sum);
  });
}

Grouping split_grouping(std::span<const ObjectivePoint> extremes, std::variant<MaxSize, AvgSize> stop) {
  const int m = static_cast<int>(extremes.size()) - 1;
  Grouping groups{{1, m}};
  for (;;) {
    auto largest = std::max_element(groups.begin(), groups.end(),
                                    [](const Group& a, const Group& b) { return a.size() < b.size(); });
    if (largest->size() == 1) break;
    if (const auto* cap = std::get_if<MaxSize>(&stop); cap && largest->size() <= cap->k) break;
    if (const auto* avg = std::get_if<AvgSize>(&stop);
        avg && static_cast<double>(m) / static_cast<double>(groups.size()) <= avg->a) {
      break;
    }
    int cut = 0;
    double best = 0;
    for (int c = largest->first + 1; c <= largest->last; ++c) {
      const double angle = group_angle({extremes[c - 2], extremes[c - 1]}, {extremes[c - 1], extremes[c]});
      if (cut == 0 || angle < best - kAngleTolerance) {
        cut = c;
        best = angle;
      }
    }
    const Group right{cut, largest->last};
    largest->last = cut - 1;
    groups.insert(std::next(largest), right);
  }
  return groups;
}

Grouping build_grouping(const SearchState& state, const StrategySpec& spec) {
  const auto& range = state.active_range();
  if (!range) return {};
  const auto all = std::span<const ObjectivePoint>(state.extremes());
  const auto extremes = all.subspan(static_cast<std::size_t>(range->first - 1),
                                    static_cast<std::size_t>(range->size() + 1));
  const int offset = range->first - 1;
  struct Visitor {
    const SearchState& state;
    std::span<const ObjectivePoint> extremes;
    IndexRange range;
    Grouping operator()(const FixedSize& f) const { return fixed_grouping(range.size(), f.s); }
    Grouping operator()(const GreedyMerge& g) const {
      if (g.measure == Measure::angle) return greedy_angle_grouping(extremes, g.t);
      std::vector<Value> betas;
      for (int i = range.first; i <= range.last; ++i) betas.push_back(state.triangle(i).initial_nd_bound());
      return greedy_nd_grouping(betas, g.t);
    }
    Grouping operator()(const AngleSplit& s) const { return split_grouping(extremes, s.stop); }
    Grouping operator()(const Dynamic&) const {
      throw std::invalid_argument("dynamic strategies have no a priori grouping");
    }
  };
  return shift(std::visit(Visitor{state, extremes, *range}, spec), offset);
}

void explore_grouping(const Rankable& ranker, SearchState& state, const Grouping& grouping) {
  for (const auto& g : grouping) {
    const auto result = explore_group(ranker, state, g);
    apply_coverage(state, result, CoverageMode::extended);
  }
}

void run_dynamic(const Rankable& ranker, SearchState& state, const Dynamic& spec) {
  if (!state.active_range()) return;
  const CoverageMode mode = spec.base == DynamicBase::srkb4 ? CoverageMode::simple : CoverageMode::extended;
  for (;;) {
    std::optional<Group> next;
    if (spec.base == DynamicBase::srkb4 || spec.base == DynamicBase::ecu) {
      if (const int i = pick_triangle(state, spec.base); i != 0) next = Group{i, i};
    } else {
      next = pick_window(state, spec);
    }
    if (!next) break;
    const auto result = explore_group(ranker, state, *next);
    apply_coverage(state, result, mode);
  }
}

Problem make_problem(const Rankable& ranker, const ExtremeSet& phase1) {
  return Problem{ranker, phase1.points, phase1.supported_nonextreme};
}

SolveResult run_strategy(const Problem& problem, const StrategySpec& spec,
                         std::optional<std::int64_t> enumeration_limit) {
  validate(spec);
  SearchState state = problem.initial_state();
  state.enumeration_limit = enumeration_limit;
  if (const auto* dynamic = std::get_if<Dynamic>(&spec)) {
    run_dynamic(problem.ranker.get(), state, *dynamic);
  } else {
    explore_grouping(problem.ranker.get(), state, build_grouping(state, spec));
  }
  SolveResult out;
  out.nondominated = state.nondominated();
  out.enumerated = state.total_enumerated;
  out.log = state.log;
  for (const auto& entry : state.log) out.explored.push_back(entry.group);
  out.y_nse = state.extremes().size();
  out.yn_bound = state.nondominated_upper_bound();
  return out;
}

SolveResult solve(const Instance& instance, const StrategySpec& spec, std::optional<std::int64_t> enumeration_limit) {
  const ExtremeSet phase1 = dichotomic_search(instance);
  const SpanningTreeRanker ranker(instance);
  SolveResult out = run_strategy(make_problem(ranker, phase1), spec, enumeration_limit);
  out.scalarized_solves = phase1.scalarized_solve_count;
  return out;
}

std::int64_t fresh_cost(const Problem& problem, const SearchState& initial, const Grouping& grouping) {
  std::int64_t total = 0;
  for (const auto& g : grouping) total += explore_fresh(problem, initial, g).enumerated;
  return total;
}

}  // namespace bomst
