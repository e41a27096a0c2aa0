#include "kdiam/graph.hpp"

#include <algorithm>
#include <string>

#include "kdiam/error.hpp"

namespace kdiam {

Graph::Graph(std::size_t vertex_count, std::span<const Edge> edges) {
  std::vector<std::size_t> degree(vertex_count, 0);
  for (const auto& [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) {
      throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") has an endpoint outside [0, " + std::to_string(vertex_count) + ")");
    }
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    ++degree[u];
    ++degree[v];
  }
  offsets_.assign(vertex_count + 1, 0);
  for (std::size_t v = 0; v < vertex_count; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  targets_.resize(offsets_.back());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    targets_[cursor[u]++] = v;
    targets_[cursor[v]++] = u;
  }
  for (std::size_t v = 0; v < vertex_count; ++v) {
    auto first = targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
    auto last = targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
    std::sort(first, last);
    if (auto dup = std::adjacent_find(first, last); dup != last) {
      throw InputError("duplicate edge (" + std::to_string(v) + ", " + std::to_string(*dup) + ")");
    }
  }
}

Graph Graph::from_adjacency(const std::vector<std::vector<Vertex>>& adjacency) {
  std::vector<Edge> edges;
  const std::size_t n = adjacency.size();
  for (std::size_t u = 0; u < n; ++u) {
    for (Vertex v : adjacency[u]) {
      if (v >= n) throw InputError("neighbour id out of range");
      if (u < v) edges.emplace_back(static_cast<Vertex>(u), v);
      if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    }
  }
  Graph g(n, edges);
  for (std::size_t u = 0; u < n; ++u) {
    if (g.degree(static_cast<Vertex>(u)) != adjacency[u].size()) {
      throw InputError("adjacency is not symmetric at vertex " + std::to_string(u));
    }
  }
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

bool Graph::is_connected() const {
  const std::size_t n = vertex_count();
  if (n <= 1) return true;
  auto d = bfs_distances(*this, 0);
  return std::none_of(d.dist.begin(), d.dist.end(),
                      [](std::uint32_t x) { return x == kUnreachable; });
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

DistanceVector bfs_distances(const Graph& g, Vertex source) {
  const std::size_t n = g.vertex_count();
  if (source >= n) {
    throw InputError("BFS source " + std::to_string(source) + " out of range");
  }
  DistanceVector out{source, std::vector<std::uint32_t>(n, kUnreachable)};
  std::vector<Vertex> queue;
  queue.reserve(n);
  queue.push_back(source);
  out.dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex x = queue[head];
    for (Vertex w : g.neighbors(x)) {
      if (out.dist[w] == kUnreachable) {
        out.dist[w] = out.dist[x] + 1;
        queue.push_back(w);
      }
    }
  }
  return out;
}

std::uint32_t diameter_naive(const Graph& g) {
  std::uint32_t diameter = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto d = bfs_distances(g, v);
    for (auto x : d.dist) {
      if (x == kUnreachable) throw DisconnectedGraphError();
      diameter = std::max(diameter, x);
    }
  }
  return diameter;
}

bool k_diameter_naive(const Graph& g, std::uint32_t k) { return diameter_naive(g) <= k; }

VertexSet neighborhood(const Graph& g, Vertex v, std::uint32_t r) {
  if (v >= g.vertex_count()) throw InputError("vertex " + std::to_string(v) + " out of range");
  BallScanner scanner(g);
  return scanner.ball(v, r);
}

BallScanner::BallScanner(const Graph& g) : graph_(&g), stamp_(g.vertex_count(), 0) {}

const VertexSet& BallScanner::ball(Vertex v, std::uint32_t r) {
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
  result_.clear();
  result_.push_back(v);
  stamp_[v] = epoch_;
  std::size_t level_begin = 0;
  for (std::uint32_t depth = 0; depth < r; ++depth) {
    const std::size_t level_end = result_.size();
    if (level_begin == level_end) break;
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (Vertex w : graph_->neighbors(result_[i])) {
        if (stamp_[w] != epoch_) {
          stamp_[w] = epoch_;
          result_.push_back(w);
        }
      }
    }
    level_begin = level_end;
  }
  std::sort(result_.begin(), result_.end());
  return result_;
}

namespace {

// Projects `mask` onto the bit positions listed in `subset`.
std::uint32_t trace(std::uint64_t mask, std::span<const std::size_t> subset) {
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if ((mask >> subset[i]) & 1U) out |= 1U << i;
  }
  return out;
}

bool shattered(std::span<const std::uint64_t> balls, std::span<const std::size_t> subset) {
  const std::size_t patterns = std::size_t{1} << subset.size();
  std::vector<char> seen(patterns, 0);
  std::size_t distinct = 0;
  for (auto ball : balls) {
    auto t = trace(ball, subset);
    if (!seen[t]) {
      seen[t] = 1;
      if (++distinct == patterns) return true;
    }
  }
  return false;
}

bool any_shattered_of_size(std::span<const std::uint64_t> balls, std::size_t n, std::size_t size) {
  std::vector<std::size_t> subset(size);
  for (std::size_t i = 0; i < size; ++i) subset[i] = i;
  while (true) {
    if (shattered(balls, subset)) return true;
    // next combination in lexicographic order
    std::size_t i = size;
    while (i > 0 && subset[i - 1] == n - size + i - 1) --i;
    if (i == 0) return false;
    ++subset[i - 1];
    for (std::size_t j = i; j < size; ++j) subset[j] = subset[j - 1] + 1;
  }
}

}  // namespace

std::size_t distance_vc_shatter_check(const Graph& g, std::size_t max_subset,
                                      const ShatterOptions& options) {
  const std::size_t n = g.vertex_count();
  if (n > options.max_vertices && !options.allow_large) {
    throw InputError("shattering check refuses n = " + std::to_string(n) + " > " +
                     std::to_string(options.max_vertices) + " without the override");
  }
  if (n > 64) throw InputError("shattering check supports at most 64 vertices");
  if (max_subset > 20) throw InputError("max_subset above 20 is not supported");

  std::vector<std::uint64_t> balls;
  BallScanner scanner(g);
  for (Vertex v = 0; v < n; ++v) {
    for (std::uint32_t k = 0; k < n; ++k) {
      std::uint64_t mask = 0;
      for (Vertex u : scanner.ball(v, k)) mask |= std::uint64_t{1} << u;
      balls.push_back(mask);
    }
  }
  std::sort(balls.begin(), balls.end());
  balls.erase(std::unique(balls.begin(), balls.end()), balls.end());

  std::size_t best = 0;
  for (std::size_t size = 1; size <= std::min(max_subset, n); ++size) {
    // Subsets of shattered sets are shattered, so the first failing size ends the search.
    if (!any_shattered_of_size(balls, n, size)) break;
    best = size;
  }
  return best;
}

}  // namespace kdiam
