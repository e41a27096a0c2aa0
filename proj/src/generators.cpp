#include "kdiam/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "kdiam/error.hpp"

namespace kdiam {

Graph random_connected_graph(std::size_t n, std::size_t m, Rng& rng) {
  if (n == 0) throw InputError("graph needs at least one vertex");
  if (m + 1 < n || m > n * (n - 1) / 2) throw InputError("edge count incompatible with a connected simple graph");
  std::vector<Vertex> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<Vertex>(i);
  std::shuffle(perm.begin(), perm.end(), rng);

  std::set<Edge> edges;
  auto add = [&](Vertex a, Vertex b) { return edges.insert({std::min(a, b), std::max(a, b)}).second; };
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> parent(0, i - 1);
    add(perm[i], perm[parent(rng)]);
  }
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  while (edges.size() < m) {
    const Vertex a = pick(rng);
    const Vertex b = pick(rng);
    if (a != b) add(a, b);
  }
  std::vector<Edge> list(edges.begin(), edges.end());
  return Graph(n, list);
}

std::vector<Point> random_points(std::size_t n, double box, Rng& rng) {
  if (!(box > 0)) throw InputError("box side must be positive");
  std::uniform_real_distribution<double> coord(0.0, box);
  std::vector<Point> out;
  std::set<std::pair<double, double>> seen;
  while (out.size() < n) {
    const double x = coord(rng);
    const double y = coord(rng);
    if (seen.insert({x, y}).second) out.emplace_back(x, y);
  }
  return out;
}

ConvexPolygon random_convex_polygon(int sides, double radius, Rng& rng) {
  if (sides < 3) throw InputError("polygon needs at least 3 sides");
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  const double min_gap = 0.2 * std::numbers::pi / sides;
  for (;;) {
    std::vector<double> a(static_cast<std::size_t>(sides));
    for (auto& t : a) t = angle(rng);
    std::sort(a.begin(), a.end());
    bool ok = a.front() + 2 * std::numbers::pi - a.back() >= min_gap;
    for (std::size_t i = 1; i < a.size() && ok; ++i) ok = a[i] - a[i - 1] >= min_gap;
    // every half-plane must hold a vertex, otherwise the centre lies outside
    bool centred = a.front() + 2 * std::numbers::pi - a.back() < std::numbers::pi;
    for (std::size_t i = 1; i < a.size() && centred; ++i) centred = a[i] - a[i - 1] < std::numbers::pi;
    if (!ok || !centred) continue;
    std::vector<Point> v;
    for (double t : a) v.emplace_back(radius * std::cos(t), radius * std::sin(t));
    return ConvexPolygon(std::move(v));
  }
}

std::vector<Point> random_connected_points(std::size_t n, double box, const ConvexPolygon& f,
                                           Rng& rng, int max_tries) {
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    auto pts = random_points(n, box, rng);
    if (intersection_graph_naive(pts, f).is_connected()) return pts;
  }
  throw InputError("no connected instance found; shrink the box");
}

}  // namespace kdiam
