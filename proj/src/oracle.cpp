#include "bomst/oracle.hpp"

#include <algorithm>
#include <string>

namespace bomst {

namespace {

Value cross(ObjectivePoint o, ObjectivePoint a, ObjectivePoint b) {
  return (a.z1 - o.z1) * (b.z2 - o.z2) - (a.z2 - o.z2) * (b.z1 - o.z1);
}

}  // namespace

OracleSizeError::OracleSizeError(int n)
    : std::invalid_argument("oracle supports at most " + std::to_string(kMaxOracleVertices) + " vertices, got " +
                            std::to_string(n)) {}

void for_each_tree(const Instance& instance, const std::function<void(const std::vector<int>&)>& visit) {
  const int n = instance.n;
  if (n > kMaxOracleVertices) throw OracleSizeError(n);
  if (n < 1) return;
  std::vector<int> ids(static_cast<std::size_t>(n * n), -1);
  for (std::size_t k = 0; k < instance.edges.size(); ++k) {
    const auto& e = instance.edges[k];
    ids[static_cast<std::size_t>(e.u * n + e.v)] = static_cast<int>(k);
    ids[static_cast<std::size_t>(e.v * n + e.u)] = static_cast<int>(k);
  }
  std::vector<int> tree;
  if (n == 1) {
    visit(tree);
    return;
  }
  if (n == 2) {
    if (ids[1] >= 0) visit({ids[1]});
    return;
  }

  const int len = n - 2;
  std::vector<int> seq(static_cast<std::size_t>(len), 0);
  std::vector<int> degree(static_cast<std::size_t>(n));
  for (;;) {
    std::fill(degree.begin(), degree.end(), 1);
    for (int s : seq) ++degree[s];
    tree.clear();
    bool present = true;
    for (int s : seq) {
      int leaf = 0;
      while (degree[leaf] != 1) ++leaf;
      const int id = ids[static_cast<std::size_t>(leaf * n + s)];
      present = present && id >= 0;
      tree.push_back(id);
      --degree[leaf];
      --degree[s];
    }
    int a = -1;
    for (int v = 0; v < n; ++v) {
      if (degree[v] != 1) continue;
      if (a < 0) {
        a = v;
      } else {
        const int id = ids[static_cast<std::size_t>(a * n + v)];
        present = present && id >= 0;
        tree.push_back(id);
        break;
      }
    }
    if (present) {
      std::sort(tree.begin(), tree.end());
      visit(tree);
    }

    int pos = len - 1;
    while (pos >= 0 && seq[pos] == n - 1) seq[pos--] = 0;
    if (pos < 0) break;
    ++seq[pos];
  }
}

std::vector<SpanningTree> enumerate_all_trees(const Instance& instance) {
  std::vector<SpanningTree> out;
  for_each_tree(instance, [&](const std::vector<int>& ids) { out.push_back({ids, tree_point(instance, ids)}); });
  return out;
}

std::vector<ObjectivePoint> all_tree_points(const Instance& instance) {
  std::vector<ObjectivePoint> out;
  for_each_tree(instance, [&](const std::vector<int>& ids) { out.push_back(tree_point(instance, ids)); });
  return out;
}

std::vector<ObjectivePoint> nondominated_filter(std::span<const ObjectivePoint> points) {
  std::vector<ObjectivePoint> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<ObjectivePoint> out;
  for (const auto& p : sorted) {
    if (out.empty() || p.z2 < out.back().z2) out.push_back(p);
  }
  return out;
}

std::vector<ObjectivePoint> hull_vertices(std::span<const ObjectivePoint> y_n) {
  std::vector<ObjectivePoint> hull;
  for (const auto& p : y_n) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
    hull.push_back(p);
  }
  return hull;
}

FrontierClassification classify(std::span<const ObjectivePoint> points) {
  if (points.empty()) throw std::invalid_argument("cannot classify an empty point set");
  FrontierClassification out;
  out.all_points.assign(points.begin(), points.end());
  out.y_n = nondominated_filter(points);
  out.y_nse = hull_vertices(out.y_n);
  std::size_t edge = 0;
  for (const auto& p : out.y_n) {
    if (std::binary_search(out.y_nse.begin(), out.y_nse.end(), p)) continue;
    while (edge + 1 < out.y_nse.size() && out.y_nse[edge + 1].z1 < p.z1) ++edge;
    if (cross(out.y_nse[edge], out.y_nse[edge + 1], p) == 0) {
      out.y_nsn.push_back(p);
    } else {
      out.y_nu.push_back(p);
    }
  }
  return out;
}

}  // namespace bomst
