#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "helpers.hpp"
#include "kdiam/error.hpp"
#include "kdiam/generators.hpp"
#include "kdiam/implicit_diameter.hpp"
#include "kdiam/plane_structure.hpp"

namespace kdiam {
namespace {

using testing::complete_graph;
using testing::path_graph;

VertexSet sym_diff(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet closed_neighbourhood_of_set(const Graph& g, const VertexSet& s) {
  VertexSet out;
  for (Vertex v : s) {
    out.push_back(v);
    for (Vertex u : g.neighbors(v)) out.push_back(u);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

VertexSet random_set(Rng& rng, std::size_t n, std::size_t max_size) {
  VertexSet s;
  const std::size_t size = rng() % (max_size + 1);
  for (std::size_t i = 0; i < size; ++i) s.push_back(static_cast<Vertex>(rng() % n));
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

TEST(DeltaEncodingTest, TrivialReconstructsSingletons) {
  std::vector<Vertex> order{2, 0, 3, 1};
  auto enc = trivial_delta_encoding(order);
  EXPECT_EQ(enc.deltas[0], (VertexSet{2}));
  EXPECT_EQ(enc.deltas[1], (VertexSet{0, 2}));
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(reconstruct_prefix(enc, i), (VertexSet{order[i]}));
}

TEST(ExpandBallsTest, SmallExamples) {
  auto g = path_graph(5);
  NaiveNsds ds(g);
  std::vector<VertexSet> one{{2}};
  auto h = expand_balls(one, ds);
  ASSERT_EQ(h.size(), 1u);
  EXPECT_EQ(ds.members(h[0]), (VertexSet{1, 2, 3}));

  std::vector<VertexSet> two{{0}, {0, 4}};
  h = expand_balls(two, ds);
  EXPECT_EQ(ds.members(h[0]), (VertexSet{0, 1}));
  EXPECT_EQ(ds.members(h[1]), (VertexSet{3, 4}));

  std::vector<VertexSet> none;
  EXPECT_THROW(expand_balls(none, ds), InputError);
}

TEST(ExpandBallsTest, EmptyPrefixGivesEmptySet) {
  auto g = path_graph(4);
  NaiveNsds ds(g);
  std::vector<VertexSet> d{{1}, {1}, {3}};
  auto h = expand_balls(d, ds);
  EXPECT_EQ(ds.members(h[1]), VertexSet{});
  EXPECT_EQ(ds.members(h[2]), (VertexSet{2, 3}));
}

// Every handle against the naive prefix reduction, and the operation count against the bound.
TEST(ExpandBallsTest, RandomAgainstPrefixOracle) {
  Rng rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = random_connected_graph(30, 50, rng);
    NaiveNsds ds(g, rng());
    const std::size_t t = 1 + rng() % 32;
    std::vector<VertexSet> deltas;
    for (std::size_t i = 0; i < t; ++i) deltas.push_back(random_set(rng, 30, 6));
    ExpandStats stats;
    auto h = expand_balls(deltas, ds, &stats);
    ASSERT_EQ(h.size(), t);
    VertexSet prefix;
    for (std::size_t i = 0; i < t; ++i) {
      prefix = sym_diff(prefix, deltas[i]);
      EXPECT_EQ(ds.members(h[i]), closed_neighbourhood_of_set(g, prefix));
    }
    std::uint64_t b = 0;
    for (std::size_t i = 1; i < t; ++i) b += deltas[i].size();
    EXPECT_LE(stats.cost, expand_cost_bound(deltas[0].size(), b, t));
  }
}

TEST(ExpandBallsTest, CostBoundClosedForm) {
  EXPECT_EQ(expand_cost_bound(0, 0, 1), 2u);
  EXPECT_EQ(expand_cost_bound(3, 2, 4), 3u + 3u * 2u * 3u + 8u);
  EXPECT_EQ(expand_cost_bound(1, 1, 5), 1u + 3u * 4u + 10u);
}

TEST(SimulateBfsTest, Examples) {
  auto k3 = complete_graph(3);
  NaiveNsds a(k3);
  EXPECT_EQ(simulate_bfs(a, 1, 1).ball, (VertexSet{0, 1, 2}));
  auto p5 = path_graph(5);
  NaiveNsds b(p5);
  auto r = simulate_bfs(b, 0, 2);
  EXPECT_EQ(r.ball, (VertexSet{0, 1, 2}));
  EXPECT_EQ(r.dist[2], 2u);
  EXPECT_EQ(r.dist[3], kUnreachable);
  EXPECT_EQ(simulate_bfs(b, 2, 0).ball, (VertexSet{2}));
}

TEST(SimulateBfsTest, MatchesBfsOnRandomGraphs) {
  Rng rng(2);
  for (int t = 0; t < 20; ++t) {
    Graph g = random_connected_graph(30, 45, rng);
    NaiveNsds ds(g);
    const Vertex v = static_cast<Vertex>(rng() % 30);
    auto res = simulate_bfs(ds, v, 30);
    EXPECT_EQ(res.dist, bfs_distances(g, v).dist);
  }
}

TEST(SimulateBfsTest, GeometricMatchesMaterializedGraph) {
  Rng rng(3);
  const auto square = ConvexPolygon::square(1.0);
  for (int t = 0; t < 10; ++t) {
    auto pts = random_points(60, 6.0, rng);
    Graph g = intersection_graph_naive(pts, square);
    GeometricNsds ds(pts, square, rng());
    const Vertex v = static_cast<Vertex>(rng() % 60);
    auto res = simulate_bfs(ds, v, 60);
    EXPECT_EQ(res.dist, bfs_distances(g, v).dist);
  }
}

bool implicit_squares(const std::vector<Point>& pts, std::uint32_t k, std::uint64_t seed) {
  Rng rng(seed);
  ImplicitOptions o;
  o.audit = true;
  ImplicitStats stats;
  const bool ans = k_diameter_implicit(geometric_nsds_factory(pts, ConvexPolygon::square(1.0), seed),
                                       pts.size(), k, o, rng, &stats);
  EXPECT_EQ(stats.audit_violations, 0u);
  return ans;
}

TEST(KDiameterImplicitTest, SquareExamples) {
  std::vector<Point> tri{{0, 0}, {0.5, 0.2}, {0.3, 0.7}};
  EXPECT_TRUE(implicit_squares(tri, 1, 1));
  // side-1 squares meet when centres are within 1 in both coordinates
  std::vector<Point> chain{{0, 0}, {0.9, 0}, {1.8, 0}};
  EXPECT_FALSE(implicit_squares(chain, 1, 1));
  EXPECT_TRUE(implicit_squares(chain, 2, 1));
  std::vector<Point> apart{{0, 0}, {1.5, 0}, {3.0, 0}};
  EXPECT_FALSE(implicit_squares(apart, 2, 1));
}

TEST(KDiameterImplicitTest, NaiveNsdsMatchesNaive) {
  Rng rng(4);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 2 + rng() % 30;
    Graph g = random_connected_graph(n, std::min(n * (n - 1) / 2, n - 1 + rng() % n), rng);
    for (std::uint32_t k = 1; k <= 5; ++k) {
      ImplicitOptions o;
      o.order.d = 2 + t % 3;
      o.audit = true;
      ImplicitStats stats;
      EXPECT_EQ(k_diameter_implicit(naive_nsds_factory(g), n, k, o, rng, &stats),
                k_diameter_naive(g, k));
      EXPECT_EQ(stats.audit_violations, 0u);
      EXPECT_LE(stats.expand.cost, stats.expand_bound);
    }
  }
}

TEST(KDiameterImplicitTest, GeometricMatchesNaive) {
  Rng rng(5);
  const auto square = ConvexPolygon::square(1.0);
  int checked = 0;
  for (int t = 0; t < 30; ++t) {
    const std::size_t n = 5 + rng() % 60;
    auto pts = random_points(n, 1.0 + std::sqrt(static_cast<double>(n)) * 0.6, rng);
    Graph g = intersection_graph_naive(pts, square);
    if (!g.is_connected()) continue;
    ++checked;
    for (std::uint32_t k = 1; k <= 5; ++k) {
      EXPECT_EQ(implicit_squares(pts, k, rng()), k_diameter_naive(g, k));
    }
  }
  EXPECT_GT(checked, 5);
}

TEST(KDiameterImplicitTest, DeltaInvariantAfterSteps) {
  Rng rng(6);
  Graph g = random_connected_graph(25, 40, rng);
  std::vector<Vertex> order(25);
  std::iota(order.begin(), order.end(), 0U);
  auto enc = trivial_delta_encoding(order);
  for (std::uint32_t r = 1; r <= 4; ++r) {
    NaiveNsds ds(g);
    enc = implicit_step(enc, ds, {}, rng);
    EXPECT_EQ(enc.radius, r);
    for (std::size_t i = 0; i < 25; ++i) {
      EXPECT_EQ(reconstruct_prefix(enc, i), neighborhood(g, enc.order[i], r));
    }
  }
}

TEST(KDiameterImplicitTest, RejectsZeroK) {
  auto g = path_graph(3);
  Rng rng(7);
  EXPECT_THROW(k_diameter_implicit(naive_nsds_factory(g), 3, 0, {}, rng), InputError);
}

}  // namespace
}  // namespace kdiam
