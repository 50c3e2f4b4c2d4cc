#include "bomst/phase1.hpp"

#include <algorithm>

namespace bomst {

namespace {

struct Dichotomy {
  const Instance& instance;
  ExtremeSet& out;

  // Appends the extreme points strictly between left and right, in z1 order.
  void refine(const SpanningTree& left, const SpanningTree& right) {
    const WeightVector w = group_weight(left.point, right.point);
    SpanningTree mid = min_weighted_tree(instance, w, TieBreak::f1_then_f2);
    ++out.scalarized_solve_count;
    if (w(mid.point) < w(left.point)) {
      refine(left, mid);
      out.points.push_back(mid.point);
      out.trees.push_back(mid);
      refine(mid, right);
    } else if (mid.point != left.point && mid.point != right.point) {
      out.supported_nonextreme.push_back(mid.point);
    }
  }
};

}  // namespace

ExtremeSet dichotomic_search(const Instance& instance) {
  ExtremeSet out;
  SpanningTree first = min_weighted_tree(instance, WeightVector(1, 0), TieBreak::f1_then_f2);
  SpanningTree last = min_weighted_tree(instance, WeightVector(0, 1), TieBreak::f2_then_f1);
  out.scalarized_solve_count = 2;
  out.points.push_back(first.point);
  out.trees.push_back(first);
  if (first.point == last.point) return out;

  Dichotomy{instance, out}.refine(first, last);
  out.points.push_back(last.point);
  out.trees.push_back(std::move(last));
  std::sort(out.supported_nonextreme.begin(), out.supported_nonextreme.end());
  return out;
}

}  // namespace bomst
