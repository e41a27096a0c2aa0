#ifndef KDIAM_STRIPE_TREE_HPP
#define KDIAM_STRIPE_TREE_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "kdiam/fingerprint.hpp"
#include "kdiam/graph.hpp"

namespace kdiam {

struct StripePoint {
  std::uint32_t id = 0;
  double x = 0;
  double y = 0;
};

/// y = slope[dir] * x + offset.
struct StripeLine {
  std::uint32_t dir = 0;
  double offset = 0;
};

struct StripeStats {
  std::uint64_t marks = 0;
  std::uint64_t mark_visits = 0;       ///< nodes entered by marks
  std::uint64_t max_mark_visits = 0;   ///< worst single mark
  std::uint64_t list_visits = 0;       ///< node pairs entered by difference listing
  std::uint32_t max_straddling = 0;    ///< worst per-level count of fully covered nodes that recursed
  std::uint64_t pushes = 0;
};

/**
 * Persistent lazy segment tree over the points of one band [b, b + 1).
 *
 * Every point i carries a bottom boundary B_i and a top boundary T_i and is
 * marked iff y_i <= B_i or y_i >= T_i. A bottom mark raises B_i to a line over
 * a range of points, a top mark lowers T_i. Lines use a fixed slope set; for
 * each slope the node keeps extremes of B_i - slope * x_i and T_i - slope * x_i
 * plus its points sorted by y - slope * x, so a node whose boundary becomes a
 * single line can answer its hash from a prefix table. A lazy line is only
 * stored when it decides the node outright: bottom and top marks disjoint, or
 * together covering every point.
 *
 * Nodes are append-only; a version is a root index and never changes.
 */
class StripeTree {
 public:
  using NodeId = std::uint32_t;

  /// `keys` (indexed by point id) must outlive the tree. Throws InputError
  /// if a point lies outside the band or `slopes` is empty.
  StripeTree(std::vector<StripePoint> points, std::int64_t band, std::vector<double> slopes,
             const std::vector<Fingerprint>* keys);

  std::int64_t band() const { return band_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<StripePoint>& points() const { return points_; }  ///< x-sorted
  const std::vector<double>& slopes() const { return slopes_; }
  NodeId empty_root() const { return 0; }
  std::size_t node_count() const { return nodes_.size(); }

  /// Half-open index range of points with x in [x_lo, x_hi].
  std::pair<std::size_t, std::size_t> index_range(double x_lo, double x_hi) const;

  /// B_i = max(B_i, line(x_i)) for points [first, last).
  NodeId mark_bottom(NodeId root, std::size_t first, std::size_t last, StripeLine line);
  /// T_i = min(T_i, line(x_i)) for points [first, last).
  NodeId mark_top(NodeId root, std::size_t first, std::size_t last, StripeLine line);

  Fingerprint hash(NodeId root) const { return nodes_.at(root).hash; }
  /// Marked ids of a xor b; equal-hash subtrees are skipped.
  std::vector<std::uint32_t> list_differences(NodeId a, NodeId b);
  /// Marked ids, sorted, evaluated from boundaries point by point.
  std::vector<std::uint32_t> decode(NodeId root) const;
  /// Nodes (outside lazy subtrees) whose stored data disagrees with a recomputation.
  std::size_t audit(NodeId root) const;

  const StripeStats& stats() const { return stats_; }

 private:
  struct Slot {
    std::uint32_t lo = 0, hi = 0;  // inclusive point range
    std::uint32_t left = 0, right = 0;
    std::uint32_t key_offset = 0;     // s blocks of (hi - lo + 1) keys
    std::uint32_t prefix_offset = 0;  // s blocks of (hi - lo + 2) prefix hashes
    bool leaf() const { return lo == hi; }
    std::uint32_t count() const { return hi - lo + 1; }
  };
  struct Node {
    std::uint32_t slot = 0;
    NodeId left = 0, right = 0;
    std::uint32_t ext = 0;  // 4 * s extremes: bmin, bmax, tmin, tmax per slope
    Fingerprint bot, top, hash;
    std::int32_t bot_dir = -1;  // >= 0 when bottom-lazy
    double bot_a = 0;
    std::int32_t top_dir = -1;
    double top_a = 0;
  };
  enum Side { kBottom, kTop };

  std::uint32_t build(std::uint32_t lo, std::uint32_t hi);
  NodeId clone(NodeId id);
  double* ext(Node& n) { return &extremes_[n.ext]; }
  const double* ext(const Node& n) const { return &extremes_[n.ext]; }
  void assign_line(NodeId id, Side side, std::uint32_t dir, double a);
  bool resolve_hash(NodeId id);
  NodeId push(NodeId id);
  NodeId combine(NodeId base, NodeId left, NodeId right);
  NodeId update(NodeId id, std::size_t first, std::size_t last, Side side, StripeLine line,
                std::uint32_t depth);
  NodeId mark(NodeId root, std::size_t first, std::size_t last, Side side, StripeLine line);
  void diff(NodeId a, NodeId b, std::vector<std::uint32_t>& out);
  Fingerprint all_hash(const Slot& s) const;

  std::vector<StripePoint> points_;
  std::int64_t band_;
  std::vector<double> slopes_;
  const std::vector<Fingerprint>* keys_;
  std::vector<Slot> slots_;
  std::vector<double> sorted_keys_;
  std::vector<Fingerprint> prefix_;
  std::vector<Node> nodes_;
  std::vector<double> extremes_;
  std::vector<std::uint32_t> straddle_;
  StripeStats stats_;
  std::uint64_t visits_ = 0;
};

}  // namespace kdiam

#endif  // KDIAM_STRIPE_TREE_HPP
