#ifndef KDIAM_GRAPH_HPP
#define KDIAM_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace kdiam {

using Vertex = std::uint32_t;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

using Edge = std::pair<Vertex, Vertex>;

/**
 * Undirected, unweighted simple graph over dense vertex ids [0, n).
 *
 * Stored in compressed adjacency form with sorted neighbour lists. Construction
 * rejects self-loops, duplicate edges and out-of-range endpoints. Connectivity
 * is not a construction invariant (intersection graphs are built before they
 * are checked); loaders and diameter routines enforce it where needed.
 */
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t vertex_count, std::span<const Edge> edges);

  /// Builds from per-vertex neighbour lists; the lists must be symmetric.
  static Graph from_adjacency(const std::vector<std::vector<Vertex>>& adjacency);

  std::size_t vertex_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return targets_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(Vertex u, Vertex v) const;

  bool is_connected() const;

  /// Each undirected edge once, as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
};

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

struct DistanceVector {
  Vertex source = 0;
  std::vector<std::uint32_t> dist;  ///< hop counts; kUnreachable if disconnected
};

DistanceVector bfs_distances(const Graph& g, Vertex source);

/// Maximum eccentricity via one BFS per vertex. Throws DisconnectedGraphError.
std::uint32_t diameter_naive(const Graph& g);

/// True iff diam(g) <= k.
bool k_diameter_naive(const Graph& g, std::uint32_t k);

/// Closed ball { u : dist(v, u) <= r }, sorted.
VertexSet neighborhood(const Graph& g, Vertex v, std::uint32_t r);

/**
 * Reusable depth-limited BFS for callers that enumerate many balls of one
 * graph. The returned reference is invalidated by the next call.
 */
class BallScanner {
 public:
  explicit BallScanner(const Graph& g);
  const VertexSet& ball(Vertex v, std::uint32_t r);

 private:
  const Graph* graph_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  VertexSet frontier_;
  VertexSet result_;
};

struct ShatterOptions {
  std::size_t max_vertices = 16;  ///< refuse larger graphs unless allow_large
  bool allow_large = false;
};

/**
 * Size of the largest vertex subset Y with |Y| <= max_subset shattered by the
 * ball hypergraph { N^k[v] : v in V, 0 <= k < n }. Exhaustive; meant for tiny
 * graphs (n <= 64 even with the override).
 */
std::size_t distance_vc_shatter_check(const Graph& g, std::size_t max_subset,
                                      const ShatterOptions& options = {});

}  // namespace kdiam

#endif  // KDIAM_GRAPH_HPP
