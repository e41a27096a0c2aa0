#ifndef KDIAM_TESTS_HELPERS_HPP
#define KDIAM_TESTS_HELPERS_HPP

#include <vector>

#include "kdiam/graph.hpp"

namespace kdiam::testing {

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

inline Graph cycle_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) e.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return Graph(n, e);
}

inline Graph complete_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  return Graph(n, e);
}

/// Vertex 0 joined to 1..leaves.
inline Graph star_graph(std::size_t leaves) {
  std::vector<Edge> e;
  for (Vertex i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph(leaves + 1, e);
}

/// Floyd-Warshall distances; independent of the BFS code under test.
inline std::vector<std::vector<std::uint32_t>> all_pairs(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const std::uint32_t inf = kUnreachable / 2;
  std::vector<std::vector<std::uint32_t>> d(n, std::vector<std::uint32_t>(n, inf));
  for (Vertex u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (Vertex v : g.neighbors(u)) d[u][v] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  return d;
}

inline VertexSet ball_oracle(const Graph& g, Vertex v, std::uint32_t r) {
  auto d = all_pairs(g);
  VertexSet out;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    if (d[v][u] <= r) out.push_back(u);
  }
  return out;
}

}  // namespace kdiam::testing

#endif  // KDIAM_TESTS_HELPERS_HPP
