/**
 * @file ranking.hpp
 * @brief Resumable enumeration of solutions in non-decreasing weighted-sum
 * order.
 *
 * Two rankable problems are provided: spanning trees of an Instance, and an
 * explicit point list used to drive the search machinery with hand-built
 * frontiers.
 *
 * The spanning tree ranker is a binary partition scheme. A frontier node
 * describes the trees that contain a forced edge set, avoid an excluded edge
 * set, and differ from the node's (already emitted) optimal tree T. Its key is
 * the value of the best single-edge exchange T - e + f. Popping the node emits
 * that tree and splits the rest of the subspace on e: the "e forced" side keeps
 * T and its exchange table; the "e excluded" side owns the new tree and gets a
 * fresh exchange table. Each tree is emitted exactly once.
 */

#ifndef BOMST_RANKING_HPP
#define BOMST_RANKING_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <queue>
#include <vector>

#include "bomst/geometry.hpp"
#include "bomst/instance.hpp"

namespace bomst {

struct SpanningTree {
  std::vector<int> edge_ids;  ///< sorted indices into Instance::edges
  ObjectivePoint point;

  friend bool operator==(const SpanningTree&, const SpanningTree&) = default;
};

/// Objective point of an edge set.
[[nodiscard]] ObjectivePoint tree_point(const Instance& instance, const std::vector<int>& edge_ids);

/// True when @p edge_ids has n-1 edges forming a spanning tree.
[[nodiscard]] bool is_spanning_tree(const Instance& instance, const std::vector<int>& edge_ids);

/// Secondary order used to break ties in weighted value.
enum class TieBreak { none, f1_then_f2, f2_then_f1 };

/**
 * @brief Minimum spanning tree for w1*c1 + w2*c2.
 *
 * With a tie-break the result is also lexicographically minimal in
 * (weighted, f1, f2) or (weighted, f2, f1); Kruskal over the composite
 * integer key gives that directly.
 */
[[nodiscard]] SpanningTree min_weighted_tree(const Instance& instance, const WeightVector& w,
                                             TieBreak tie = TieBreak::none);

/// Enumerator of one rankable problem under a fixed weight.
class RankingSession {
 public:
  virtual ~RankingSession() = default;

  /// Weighted value of the next emission without emitting it; nullopt when exhausted.
  [[nodiscard]] virtual std::optional<Value> peek_value() = 0;

  /// Emits the next solution's point; nullopt when exhausted.
  virtual std::optional<ObjectivePoint> next() = 0;

  [[nodiscard]] virtual std::int64_t emitted_count() const = 0;
  [[nodiscard]] virtual std::optional<Value> last_value() const = 0;
  [[nodiscard]] virtual const WeightVector& weight() const = 0;
};

class Rankable {
 public:
  virtual ~Rankable() = default;
  [[nodiscard]] virtual std::unique_ptr<RankingSession> open_session(const WeightVector& w) const = 0;
};

class SpanningTreeSession final : public RankingSession {
 public:
  SpanningTreeSession(const Instance& instance, const WeightVector& w);

  [[nodiscard]] std::optional<Value> peek_value() override;
  std::optional<ObjectivePoint> next() override;
  [[nodiscard]] std::int64_t emitted_count() const override { return emitted_; }
  [[nodiscard]] std::optional<Value> last_value() const override { return last_value_; }
  [[nodiscard]] const WeightVector& weight() const override { return weight_; }

  /// Same as next() but returns the whole tree.
  std::optional<SpanningTree> next_tree();

  /// Number of pending subproblems.
  [[nodiscard]] std::size_t frontier_size() const noexcept { return heap_.size(); }

 private:
  struct Exchange {
    Value delta;
    int out;
    int in;
  };
  using Tree = std::vector<int>;
  using ExchangeTable = std::vector<Exchange>;

  struct Node {
    std::shared_ptr<const Tree> tree;
    std::shared_ptr<const ExchangeTable> table;
    std::vector<int> forced;
    std::vector<int> excluded;
    std::size_t pick = 0;  ///< index in table of the best exchange whose out-edge is not forced
    Value tree_value = 0;
    Value key = 0;
    std::uint64_t seq = 0;
  };
  struct NodeAfter {
    bool operator()(const Node& a, const Node& b) const noexcept {
      return a.key != b.key ? a.key > b.key : a.seq > b.seq;
    }
  };

  ExchangeTable exchanges(const Tree& tree, const std::vector<int>& excluded);
  void push_if_feasible(Node node);
  int find(int v);

  const Instance* instance_;
  WeightVector weight_;
  std::vector<Value> cost_;     ///< weighted cost per edge
  std::vector<int> order_;      ///< edges by (cost, id)
  std::optional<std::pair<Tree, Value>> root_;
  std::priority_queue<Node, std::vector<Node>, NodeAfter> heap_;
  std::int64_t emitted_ = 0;
  std::optional<Value> last_value_;
  std::uint64_t seq_ = 0;

  // scratch for exchange computation
  std::vector<char> in_tree_;
  std::vector<char> banned_;
  std::vector<std::vector<std::pair<int, int>>> adj_;
  std::vector<int> parent_;
  std::vector<int> parent_edge_;
  std::vector<int> depth_;
  std::vector<int> dsu_;
  std::vector<int> replacement_;
  std::vector<int> bfs_;
};

class SpanningTreeRanker final : public Rankable {
 public:
  explicit SpanningTreeRanker(const Instance& instance) : instance_(&instance) {}

  [[nodiscard]] std::unique_ptr<RankingSession> open_session(const WeightVector& w) const override;
  [[nodiscard]] std::unique_ptr<SpanningTreeSession> open_tree_session(const WeightVector& w) const;
  [[nodiscard]] const Instance& instance() const noexcept { return *instance_; }

 private:
  const Instance* instance_;
};

/**
 * @brief Rankable problem whose solutions are exactly the given points.
 *
 * Sessions emit points by non-decreasing weighted value, ties by list index.
 * Duplicates are kept and emitted once per occurrence.
 */
class PointListRanker final : public Rankable {
 public:
  /// Throws std::invalid_argument on an empty list.
  explicit PointListRanker(std::vector<ObjectivePoint> points);

  [[nodiscard]] std::unique_ptr<RankingSession> open_session(const WeightVector& w) const override;
  [[nodiscard]] const std::vector<ObjectivePoint>& points() const noexcept { return points_; }

 private:
  std::vector<ObjectivePoint> points_;
};

}  // namespace bomst

#endif  // BOMST_RANKING_HPP
