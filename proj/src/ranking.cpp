#include "bomst/ranking.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace bomst {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

std::vector<int> kruskal(const Instance& instance, const std::vector<int>& order) {
  DisjointSets sets(instance.n);
  std::vector<int> tree;
  tree.reserve(static_cast<std::size_t>(instance.n - 1));
  for (int id : order) {
    const auto& e = instance.edges[id];
    if (sets.unite(e.u, e.v)) {
      tree.push_back(id);
      if (static_cast<int>(tree.size()) == instance.n - 1) break;
    }
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

class PointListSession final : public RankingSession {
 public:
  PointListSession(const std::vector<ObjectivePoint>& points, const WeightVector& w) : points_(&points), weight_(w) {
    order_.resize(points.size());
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) { return w(points[a]) < w(points[b]); });
  }

  std::optional<Value> peek_value() override {
    if (cursor_ == order_.size()) return std::nullopt;
    return weight_((*points_)[order_[cursor_]]);
  }

  std::optional<ObjectivePoint> next() override {
    if (cursor_ == order_.size()) return std::nullopt;
    const auto p = (*points_)[order_[cursor_++]];
    last_value_ = weight_(p);
    return p;
  }

  std::int64_t emitted_count() const override { return static_cast<std::int64_t>(cursor_); }
  std::optional<Value> last_value() const override { return last_value_; }
  const WeightVector& weight() const override { return weight_; }

 private:
  const std::vector<ObjectivePoint>* points_;
  WeightVector weight_;
  std::vector<std::size_t> order_;
  std::size_t cursor_ = 0;
  std::optional<Value> last_value_;
};

}  // namespace

ObjectivePoint tree_point(const Instance& instance, const std::vector<int>& edge_ids) {
  ObjectivePoint p;
  for (int id : edge_ids) {
    p.z1 += instance.edges[id].c1;
    p.z2 += instance.edges[id].c2;
  }
  return p;
}

bool is_spanning_tree(const Instance& instance, const std::vector<int>& edge_ids) {
  if (static_cast<int>(edge_ids.size()) != instance.n - 1) return false;
  DisjointSets sets(instance.n);
  for (int id : edge_ids) {
    if (id < 0 || static_cast<std::size_t>(id) >= instance.edges.size()) return false;
    if (!sets.unite(instance.edges[id].u, instance.edges[id].v)) return false;
  }
  return true;
}

SpanningTree min_weighted_tree(const Instance& instance, const WeightVector& w, TieBreak tie) {
  struct Key {
    Value weighted;
    Value second;
    Value third;
    int id;
    auto operator<=>(const Key&) const = default;
  };
  std::vector<Key> keys;
  keys.reserve(instance.edges.size());
  for (std::size_t i = 0; i < instance.edges.size(); ++i) {
    const auto& e = instance.edges[i];
    const Value weighted = w.w1() * e.c1 + w.w2() * e.c2;
    switch (tie) {
      case TieBreak::none: keys.push_back({weighted, 0, 0, static_cast<int>(i)}); break;
      case TieBreak::f1_then_f2: keys.push_back({weighted, e.c1, e.c2, static_cast<int>(i)}); break;
      case TieBreak::f2_then_f1: keys.push_back({weighted, e.c2, e.c1, static_cast<int>(i)}); break;
    }
  }
  std::sort(keys.begin(), keys.end());
  std::vector<int> order;
  order.reserve(keys.size());
  for (const auto& k : keys) order.push_back(k.id);
  SpanningTree tree{kruskal(instance, order), {}};
  tree.point = tree_point(instance, tree.edge_ids);
  return tree;
}

// ---------------------------------------------------------------------------

SpanningTreeSession::SpanningTreeSession(const Instance& instance, const WeightVector& w)
    : instance_(&instance), weight_(w) {
  const auto m = instance.edges.size();
  cost_.reserve(m);
  for (const auto& e : instance.edges) cost_.push_back(w.w1() * e.c1 + w.w2() * e.c2);
  order_.resize(m);
  std::iota(order_.begin(), order_.end(), 0);
  std::sort(order_.begin(), order_.end(), [&](int a, int b) { return std::tie(cost_[a], a) < std::tie(cost_[b], b); });

  const auto n = static_cast<std::size_t>(instance.n);
  in_tree_.assign(m, 0);
  banned_.assign(m, 0);
  adj_.resize(n);
  parent_.resize(n);
  parent_edge_.resize(n);
  depth_.resize(n);
  dsu_.resize(n);
  replacement_.resize(n);
  bfs_.reserve(n);

  Tree root = kruskal(instance, order_);
  if (static_cast<int>(root.size()) == instance.n - 1) {
    Value value = 0;
    for (int id : root) value += cost_[id];
    root_.emplace(std::move(root), value);
  }
}

int SpanningTreeSession::find(int v) {
  while (dsu_[v] != v) {
    dsu_[v] = dsu_[dsu_[v]];
    v = dsu_[v];
  }
  return v;
}

// Cheapest allowed replacement for every tree edge, as (delta, out, in)
// sorted by delta then out-edge id. Non-tree edges are scanned in increasing
// cost; each one settles all still-open tree edges on its tree path.
SpanningTreeSession::ExchangeTable SpanningTreeSession::exchanges(const Tree& tree, const std::vector<int>& excluded) {
  const int n = instance_->n;
  for (int id : tree) in_tree_[id] = 1;
  for (int id : excluded) banned_[id] = 1;

  for (auto& a : adj_) a.clear();
  for (int id : tree) {
    const auto& e = instance_->edges[id];
    adj_[e.u].emplace_back(e.v, id);
    adj_[e.v].emplace_back(e.u, id);
  }
  bfs_.clear();
  bfs_.push_back(0);
  parent_[0] = -1;
  parent_edge_[0] = -1;
  depth_[0] = 0;
  for (std::size_t head = 0; head < bfs_.size(); ++head) {
    const int v = bfs_[head];
    for (auto [to, id] : adj_[v]) {
      if (to == parent_[v]) continue;
      parent_[to] = v;
      parent_edge_[to] = id;
      depth_[to] = depth_[v] + 1;
      bfs_.push_back(to);
    }
  }
  for (int v = 0; v < n; ++v) {
    dsu_[v] = v;
    replacement_[v] = -1;
  }

  int open = n - 1;
  for (int id : order_) {
    if (open == 0) break;
    if (in_tree_[id] || banned_[id]) continue;
    int a = find(instance_->edges[id].u);
    int b = find(instance_->edges[id].v);
    while (a != b) {
      if (depth_[a] < depth_[b]) std::swap(a, b);
      replacement_[a] = id;
      --open;
      dsu_[a] = parent_[a];
      a = find(a);
    }
  }

  ExchangeTable table;
  table.reserve(static_cast<std::size_t>(n - 1 - open));
  for (int v = 1; v < n; ++v) {
    const int r = replacement_[v];
    if (r >= 0) table.push_back({cost_[r] - cost_[parent_edge_[v]], parent_edge_[v], r});
  }
  std::sort(table.begin(), table.end(),
            [](const Exchange& x, const Exchange& y) { return std::tie(x.delta, x.out) < std::tie(y.delta, y.out); });

  for (int id : tree) in_tree_[id] = 0;
  for (int id : excluded) banned_[id] = 0;
  return table;
}

void SpanningTreeSession::push_if_feasible(Node node) {
  const auto& table = *node.table;
  auto forced = [&](int id) { return std::find(node.forced.begin(), node.forced.end(), id) != node.forced.end(); };
  while (node.pick < table.size() && forced(table[node.pick].out)) ++node.pick;
  if (node.pick == table.size()) return;
  node.key = node.tree_value + table[node.pick].delta;
  node.seq = seq_++;
  heap_.push(std::move(node));
}

std::optional<Value> SpanningTreeSession::peek_value() {
  if (root_) return root_->second;
  if (heap_.empty()) return std::nullopt;
  return heap_.top().key;
}

std::optional<SpanningTree> SpanningTreeSession::next_tree() {
  if (root_) {
    auto [tree, value] = std::move(*root_);
    root_.reset();
    SpanningTree out{tree, tree_point(*instance_, tree)};
    Node node;
    node.table = std::make_shared<const ExchangeTable>(exchanges(tree, {}));
    node.tree = std::make_shared<const Tree>(std::move(tree));
    node.tree_value = value;
    push_if_feasible(std::move(node));
    ++emitted_;
    last_value_ = value;
    return out;
  }
  if (heap_.empty()) return std::nullopt;

  // key and seq survive the move, so the heap order is intact for pop()
  Node top = std::move(const_cast<Node&>(heap_.top()));
  heap_.pop();
  const Exchange ex = (*top.table)[top.pick];

  Tree next = *top.tree;
  next.erase(std::find(next.begin(), next.end(), ex.out));
  next.insert(std::upper_bound(next.begin(), next.end(), ex.in), ex.in);
  const Value next_value = top.key;
  SpanningTree out{next, tree_point(*instance_, next)};

  // trees that keep ex.out: same tree, same exchange table
  Node keep;
  keep.tree = top.tree;
  keep.table = top.table;
  keep.forced = top.forced;
  keep.forced.push_back(ex.out);
  keep.excluded = top.excluded;
  keep.pick = top.pick + 1;
  keep.tree_value = top.tree_value;
  push_if_feasible(std::move(keep));

  // trees without ex.out: the emitted tree is their optimum
  Node drop;
  drop.excluded = std::move(top.excluded);
  drop.excluded.push_back(ex.out);
  drop.forced = std::move(top.forced);
  drop.table = std::make_shared<const ExchangeTable>(exchanges(next, drop.excluded));
  drop.tree = std::make_shared<const Tree>(std::move(next));
  drop.tree_value = next_value;
  push_if_feasible(std::move(drop));

  ++emitted_;
  last_value_ = next_value;
  return out;
}

std::optional<ObjectivePoint> SpanningTreeSession::next() {
  auto tree = next_tree();
  if (!tree) return std::nullopt;
  return tree->point;
}

std::unique_ptr<RankingSession> SpanningTreeRanker::open_session(const WeightVector& w) const {
  return open_tree_session(w);
}

std::unique_ptr<SpanningTreeSession> SpanningTreeRanker::open_tree_session(const WeightVector& w) const {
  return std::make_unique<SpanningTreeSession>(*instance_, w);
}

PointListRanker::PointListRanker(std::vector<ObjectivePoint> points) : points_(std::move(points)) {
  if (points_.empty()) throw std::invalid_argument("point list adapter needs at least one point");
}

std::unique_ptr<RankingSession> PointListRanker::open_session(const WeightVector& w) const {
  return std::make_unique<PointListSession>(points_, w);
}

}  // namespace bomst
