#include "bomst/phase2.hpp"

#include <algorithm>
#include <string>

namespace bomst {

Triangle::Triangle(int index, ObjectivePoint left, ObjectivePoint right)
    : index_(index),
      left_(left),
      right_(right),
      weight_(group_weight(left, right)),
      initial_nd_bound_(zone_nd_bound(left, right)) {
  zones_.emplace(left.z1, Zone{left, true});
}

ObjectivePoint Triangle::zone_end(ZoneMap::const_iterator it) const {
  const auto next = std::next(it);
  return next == zones_.end() ? right_ : next->second.start;
}

ObjectivePoint Triangle::zone_bound(ZoneMap::const_iterator it) const {
  return {zone_end(it).z1 - 1, it->second.start.z2 - 1};
}

bool Triangle::insert(ObjectivePoint y) {
  auto it = zones_.lower_bound(y.z1);
  if (it == zones_.begin()) return false;
  --it;
  if (!it->second.active) return false;
  const ObjectivePoint start = it->second.start;
  const ObjectivePoint end = zone_end(it);
  if (!(y.z1 < end.z1 && end.z2 < y.z2 && y.z2 < start.z2)) return false;
  zones_.emplace_hint(std::next(it), y.z1, Zone{y, true});
  ++active_;
  return true;
}

std::vector<ObjectivePoint> Triangle::interior_points() const {
  std::vector<ObjectivePoint> out;
  out.reserve(zones_.size() - 1);
  for (auto it = std::next(zones_.begin()); it != zones_.end(); ++it) out.push_back(it->second.start);
  return out;
}

std::vector<ObjectivePoint> Triangle::local_upper_bounds() const {
  std::vector<ObjectivePoint> out;
  out.reserve(zones_.size());
  for (auto it = zones_.begin(); it != zones_.end(); ++it) out.push_back(zone_bound(it));
  return out;
}

std::vector<ObjectivePoint> Triangle::active_upper_bounds() const {
  std::vector<ObjectivePoint> out;
  for (auto it = zones_.begin(); it != zones_.end(); ++it) {
    if (it->second.active) out.push_back(zone_bound(it));
  }
  return out;
}

TriangleStatus Triangle::status() const noexcept {
  if (active_ == 0) return TriangleStatus::covered;
  if (active_ < zones_.size()) return TriangleStatus::partially_covered;
  return TriangleStatus::unexplored;
}

Value Triangle::nd_bound() const {
  Value total = 0;
  for (auto it = zones_.begin(); it != zones_.end(); ++it) total += zone_nd_bound(it->second.start, zone_end(it));
  return total;
}

Value Triangle::active_nd_bound() const {
  Value total = 0;
  for (auto it = zones_.begin(); it != zones_.end(); ++it) {
    if (it->second.active) total += zone_nd_bound(it->second.start, zone_end(it));
  }
  return total;
}

std::optional<ObjectivePoint> Triangle::best_active_bound(const WeightVector& w) const {
  std::optional<ObjectivePoint> best;
  for (auto it = zones_.begin(); it != zones_.end(); ++it) {
    if (!it->second.active) continue;
    const ObjectivePoint u = zone_bound(it);
    if (!best || w(u) > w(*best)) best = u;
  }
  return best;
}

std::size_t Triangle::deactivate_below(const WeightVector& w, Value stop) {
  std::size_t count = 0;
  for (auto it = zones_.begin(); it != zones_.end(); ++it) {
    if (it->second.active && w(zone_bound(it)) < stop) {
      it->second.active = false;
      ++count;
    }
  }
  active_ -= count;
  return count;
}

void Triangle::deactivate_all() {
  for (auto& [key, zone] : zones_) zone.active = false;
  active_ = 0;
}

void Triangle::activate_all() {
  for (auto& [key, zone] : zones_) zone.active = true;
  active_ = zones_.size();
}

// ---------------------------------------------------------------------------

bool is_valid_grouping(const Grouping& grouping, IndexRange range) {
  if (grouping.empty()) return false;
  int expected = range.first;
  for (const auto& g : grouping) {
    if (g.first != expected || g.last < g.first) return false;
    expected = g.last + 1;
  }
  return expected == range.last + 1;
}

std::optional<IndexRange> trim_empty_extremes(std::span<const Value> betas) {
  const auto nonzero = [](Value b) { return b != 0; };
  const auto first = std::find_if(betas.begin(), betas.end(), nonzero);
  if (first == betas.end()) return std::nullopt;
  const auto last = std::find_if(betas.rbegin(), betas.rend(), nonzero);
  return IndexRange{static_cast<int>(first - betas.begin()) + 1, static_cast<int>(betas.rend() - last)};
}

EnumerationLimitExceeded::EnumerationLimitExceeded(std::int64_t limit)
    : std::runtime_error("enumeration limit of " + std::to_string(limit) + " solutions exceeded") {}

SearchState::SearchState(std::vector<ObjectivePoint> extremes, std::span<const ObjectivePoint> seeds)
    : extremes_(std::move(extremes)) {
  if (extremes_.empty()) throw std::invalid_argument("extreme sequence must not be empty");
  triangles_.reserve(extremes_.size() - 1);
  std::vector<Value> betas;
  for (std::size_t i = 0; i + 1 < extremes_.size(); ++i) {
    triangles_.emplace_back(static_cast<int>(i) + 1, extremes_[i], extremes_[i + 1]);
    betas.push_back(triangles_.back().initial_nd_bound());
  }
  active_range_ = trim_empty_extremes(betas);
  for (auto& t : triangles_) {
    if (!active_range_ || t.index() < active_range_->first || t.index() > active_range_->last) t.deactivate_all();
  }
  for (const auto& y : seeds) update_nd(*this, y);
}

int SearchState::locate(Value z1) const {
  const auto it = std::upper_bound(extremes_.begin(), extremes_.end(), z1,
                                   [](Value v, const ObjectivePoint& p) { return v < p.z1; });
  if (it == extremes_.begin() || it == extremes_.end()) return 0;
  if (std::prev(it)->z1 == z1) return 0;
  return static_cast<int>(it - extremes_.begin());
}

WeightVector SearchState::weight(Group g) const {
  return group_weight(extremes_.at(static_cast<std::size_t>(g.first - 1)),
                      extremes_.at(static_cast<std::size_t>(g.last)));
}

std::vector<ObjectivePoint> SearchState::nondominated() const {
  std::vector<ObjectivePoint> out(extremes_.begin(), extremes_.end());
  for (const auto& t : triangles_) {
    const auto inner = t.interior_points();
    out.insert(out.end(), inner.begin(), inner.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

Value SearchState::nondominated_upper_bound() const {
  Value total = static_cast<Value>(extremes_.size());
  for (const auto& t : triangles_) total += t.initial_nd_bound();
  return total;
}

bool update_nd(SearchState& state, ObjectivePoint y) {
  const int t = state.locate(y.z1);
  return t != 0 && state.triangle(t).insert(y);
}

std::optional<ObjectivePoint> update_ub(const SearchState& state, Group g, const WeightVector& w) {
  std::optional<ObjectivePoint> best;
  for (int i = g.first; i <= g.last; ++i) {
    const auto u = state.triangle(i).best_active_bound(w);
    if (u && (!best || w(*u) > w(*best))) best = u;
  }
  return best;
}

ExplorationResult explore_group(const Rankable& ranker, SearchState& state, Group g,
                                std::optional<std::int64_t> budget) {
  ExplorationResult result;
  result.group = g;
  const WeightVector w = state.weight(g);
  auto bound = update_ub(state, g, w);
  if (!bound) {
    result.reason = StopReason::no_active_bounds;
    state.log.push_back(result);
    return result;
  }
  Value threshold = w(*bound);
  const auto session = ranker.open_session(w);
  for (;;) {
    const auto peek = session->peek_value();
    if (!peek) {
      result.reason = StopReason::exhausted;
      break;
    }
    if (*peek > threshold) {
      result.reason = StopReason::threshold;
      result.stop_value = *peek;
      break;
    }
    if (budget && result.enumerated >= *budget) {
      result.reason = StopReason::budget;
      break;
    }
    if (state.enumeration_limit && state.total_enumerated >= *state.enumeration_limit) {
      throw EnumerationLimitExceeded(*state.enumeration_limit);
    }
    const auto y = session->next();
    ++result.enumerated;
    ++state.total_enumerated;
    if (update_nd(state, *y)) {
      const int t = state.locate(y->z1);
      if (t >= g.first && t <= g.last) {
        bound = update_ub(state, g, w);
        threshold = w(*bound);
      }
    }
  }
  state.log.push_back(result);
  return result;
}

std::vector<int> apply_coverage(SearchState& state, const ExplorationResult& explored, CoverageMode mode) {
  std::vector<int> covered;
  const auto& range = state.active_range();
  if (!range) return covered;
  const bool exhausted = explored.reason == StopReason::exhausted;
  if (!exhausted && explored.reason != StopReason::threshold) return covered;

  const WeightVector w = state.weight(explored.group);
  const Value stop = explored.stop_value.value_or(0);
  for (int i = range->first; i <= range->last; ++i) {
    Triangle& t = state.triangle(i);
    if (t.active_count() == 0) continue;
    if (exhausted) {
      t.deactivate_all();
    } else if (mode == CoverageMode::extended) {
      t.deactivate_below(w, stop);
    } else {
      const auto bounds = t.active_upper_bounds();
      if (std::all_of(bounds.begin(), bounds.end(), [&](ObjectivePoint u) { return w(u) < stop; })) {
        t.deactivate_all();
      }
    }
    if (t.active_count() == 0) covered.push_back(i);
  }
  return covered;
}

ExplorationResult explore_fresh(const Problem& problem, const SearchState& initial, Group g,
                                std::optional<std::int64_t> budget) {
  SearchState scratch = initial;
  scratch.log.clear();
  return explore_group(problem.ranker.get(), scratch, g, budget);
}

}  // namespace bomst
