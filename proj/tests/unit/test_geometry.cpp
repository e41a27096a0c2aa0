#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "kdiam/error.hpp"
#include "kdiam/generators.hpp"
#include "kdiam/geometry.hpp"

namespace kdiam {
namespace {

// Monotone-chain hull, counter-clockwise, collinear points dropped.
std::vector<Point> hull_oracle(std::vector<Point> p) {
  std::sort(p.begin(), p.end(), [](const Point& a, const Point& b) {
    return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
  });
  std::vector<Point> h(2 * p.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    while (k >= 2 && orient(h[k - 2], h[k - 1], p[i]) <= 1e-12) --k;
    h[k++] = p[i];
  }
  for (std::size_t i = p.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && orient(h[k - 2], h[k - 1], p[i]) <= 1e-12) --k;
    h[k++] = p[i];
  }
  h.resize(k - 1);
  return h;
}

bool same_vertex_set(const ConvexPolygon& poly, const std::vector<Point>& expect) {
  if (poly.vertices().size() != expect.size()) return false;
  for (const auto& e : expect) {
    bool found = false;
    for (const auto& v : poly.vertices()) found = found || (v - e).norm() < 1e-9;
    if (!found) return false;
  }
  return true;
}

std::vector<Point> pairwise_sums(const ConvexPolygon& a, const ConvexPolygon& b) {
  std::vector<Point> s;
  for (const auto& p : a.vertices()) {
    for (const auto& q : b.vertices()) s.push_back(p + q);
  }
  return s;
}

// Containment without the library tolerance, so the bisection is not biased.
bool exactly_inside(const ConvexPolygon& f, double r, const Point& x) {
  for (int i = 0; i < f.sides(); ++i) {
    if (orient(r * f.vertex(i), r * f.vertex(i + 1), x) < 0) return false;
  }
  return true;
}

double bisect_norm(const ConvexPolygon& f, const Point& x) {
  double lo = 0, hi = 1;
  while (!exactly_inside(f, hi, x)) hi *= 2;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (exactly_inside(f, mid, x) ? hi : lo) = mid;
  }
  return hi;
}

// Separating-axis test over the edge normals of both polygons.
bool polygons_intersect(const ConvexPolygon& a, const ConvexPolygon& b) {
  for (const auto* poly : {&a, &b}) {
    for (int i = 0; i < poly->sides(); ++i) {
      const Point e = poly->edge(i);
      const Point nrm(e.y(), -e.x());
      double amin = 1e300, amax = -1e300, bmin = 1e300, bmax = -1e300;
      for (const auto& v : a.vertices()) {
        amin = std::min(amin, nrm.dot(v));
        amax = std::max(amax, nrm.dot(v));
      }
      for (const auto& v : b.vertices()) {
        bmin = std::min(bmin, nrm.dot(v));
        bmax = std::max(bmax, nrm.dot(v));
      }
      if (amax < bmin - 1e-9 || bmax < amin - 1e-9) return false;
    }
  }
  return true;
}

TEST(PolygonTest, RejectsDegenerate) {
  EXPECT_THROW(ConvexPolygon(std::vector<Point>{}), InputError);
  EXPECT_THROW(ConvexPolygon({Point(0, 0), Point(1, 0)}), InputError);
  EXPECT_THROW(ConvexPolygon({Point(0, 0), Point(1, 0), Point(2, 0)}), InputError);
  EXPECT_THROW(ConvexPolygon({Point(0, 0), Point(0, 1), Point(1, 0)}), InputError);  // clockwise
  EXPECT_NO_THROW(ConvexPolygon({Point(0, 0), Point(1, 0), Point(0, 1)}));
}

TEST(PolygonTest, SquareBasics) {
  auto sq = ConvexPolygon::square(2.0, Point(1, 1));
  EXPECT_DOUBLE_EQ(sq.area(), 4.0);
  EXPECT_TRUE(sq.contains(Point(2, 2)));
  EXPECT_FALSE(sq.contains(Point(2.1, 1)));
  EXPECT_TRUE(ConvexPolygon::square(1.0).is_centrally_symmetric());
}

TEST(MinkowskiTest, Examples) {
  auto sq = ConvexPolygon::square(1.0);
  EXPECT_TRUE(same_vertex_set(minkowski_sum(sq, ConvexPolygon::singleton(Point(0, 0))), sq.vertices()));
  EXPECT_TRUE(same_vertex_set(minkowski_sum(sq, sq), ConvexPolygon::square(2.0).vertices()));
  ConvexPolygon tri({Point(0, 0), Point(1, 0), Point(0, 1)});
  auto hex = minkowski_sum(tri, tri.negated());
  EXPECT_EQ(hex.sides(), 6);
  EXPECT_TRUE(same_vertex_set(hex, hull_oracle(pairwise_sums(tri, tri.negated()))));
}

TEST(MinkowskiTest, RandomAgainstHullOracle) {
  Rng rng(1);
  for (int t = 0; t < 50; ++t) {
    auto a = random_convex_polygon(3 + t % 5, 1.0, rng);
    auto b = random_convex_polygon(3 + t % 4, 0.7, rng);
    auto sum = minkowski_sum(a, b);
    EXPECT_LE(sum.sides(), a.sides() + b.sides());
    EXPECT_TRUE(same_vertex_set(sum, hull_oracle(pairwise_sums(a, b))));
  }
}

TEST(SymmetrizeTest, Examples) {
  auto sq = ConvexPolygon::square(1.0);
  EXPECT_TRUE(same_vertex_set(symmetrize(sq), sq.vertices()));
  ConvexPolygon tri({Point(0, 0), Point(1, 0), Point(0, 1)});
  auto h = symmetrize(tri);
  EXPECT_EQ(h.sides(), 6);
  EXPECT_TRUE(h.is_centrally_symmetric());
  Rng rng(2);
  for (int t = 0; t < 20; ++t) {
    EXPECT_TRUE(symmetrize(random_convex_polygon(5, 1.0, rng).translated(Point(3, -1))).is_centrally_symmetric());
  }
}

TEST(NormTest, Examples) {
  auto sq = ConvexPolygon::square(2.0);
  EXPECT_DOUBLE_EQ(norm_value(sq, Point(0, 0)), 0.0);
  EXPECT_NEAR(norm_value(sq, Point(1, 0)), 1.0, 1e-12);
  EXPECT_NEAR(norm_value(sq, Point(-3, 1)), 3.0, 1e-12);
  EXPECT_THROW(norm_value(ConvexPolygon::square(1.0, Point(3, 3)), Point(1, 0)), InputError);
}

TEST(NormTest, AgreesWithBisectionAndIsHomogeneous) {
  Rng rng(3);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int t = 0; t < 30; ++t) {
    auto h = symmetrize(random_convex_polygon(5, 1.0, rng));
    const Point x(u(rng), u(rng));
    const double n = norm_value(h, x);
    EXPECT_NEAR(n, bisect_norm(h, x), 1e-9 * std::max(1.0, n));
    const double lambda = u(rng);
    EXPECT_NEAR(norm_value(h, lambda * x), std::abs(lambda) * n, 1e-9 * std::max(1.0, n));
  }
}

TEST(IntersectionGraphTest, Examples) {
  auto sq = ConvexPolygon::square(1.0);
  std::vector<Point> far{{0, 0}, {3, 0}};
  EXPECT_EQ(intersection_graph_naive(far, sq).edge_count(), 0u);
  std::vector<Point> near{{0, 0}, {0.9, 0}};
  EXPECT_EQ(intersection_graph_naive(near, sq).edge_count(), 1u);
  std::vector<Point> touch{{0, 0}, {1.0, 1.0}};
  EXPECT_EQ(intersection_graph_naive(touch, sq).edge_count(), 1u);
  std::vector<Point> dup{{0, 0}, {0, 0}};
  EXPECT_THROW(intersection_graph_naive(dup, sq), InputError);
}

TEST(IntersectionGraphTest, MatchesPolygonIntersection) {
  Rng rng(4);
  auto f = random_convex_polygon(5, 0.6, rng);
  auto pts = random_points(50, 4.0, rng);
  Graph g = intersection_graph_naive(pts, f);
  for (Vertex i = 0; i < 50; ++i) {
    for (Vertex j = i + 1; j < 50; ++j) {
      EXPECT_EQ(g.has_edge(i, j), polygons_intersect(f.translated(pts[i]), f.translated(pts[j])));
    }
  }
}

TEST(IntersectionGraphTest, SymmetrizationIsomorphism) {
  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    auto f = random_convex_polygon(5, 0.5, rng);
    auto pts = random_points(30, 3.0, rng);
    EXPECT_EQ(intersection_graph_naive(pts, f), intersection_graph_naive(pts, symmetrize(f)));
  }
}

TEST(MetricTest, TriangleInequalityAndSegmentAdditivity) {
  Rng rng(6);
  std::uniform_real_distribution<double> u(-5, 5), s(0, 1);
  auto h = symmetrize(random_convex_polygon(5, 1.0, rng));
  for (int t = 0; t < 2000; ++t) {
    const Point a(u(rng), u(rng)), b(u(rng), u(rng)), c(u(rng), u(rng));
    const double ab = norm_value(h, b - a), bc = norm_value(h, c - b), ac = norm_value(h, c - a);
    EXPECT_LE(ac, ab + bc + 1e-9);
    const Point m = a + s(rng) * (c - a);
    EXPECT_NEAR(norm_value(h, m - a) + norm_value(h, c - m), ac, 1e-9);
  }
}

bool is_normalized(const ConvexPolygon& p) {
  if (!p.is_centrally_symmetric()) return false;
  if (p.min_x() < -0.5 - 1e-9 || p.max_x() > 0.5 + 1e-9) return false;
  const auto unit = ConvexPolygon::square(1.0);
  for (const auto& c : unit.vertices()) {
    if (!p.contains(c)) return false;
  }
  return vertical_height(p) <= p.sides() + 1e-9;
}

TEST(NormalizeTest, Examples) {
  auto sq = ConvexPolygon::square(1.0);
  auto n = normalize_polygon(sq);
  EXPECT_TRUE(same_vertex_set(n.polygon, sq.vertices()));
  EXPECT_TRUE(n.map.is_identity());

  Eigen::Matrix2d rot;
  const double a = std::numbers::pi / 2;
  rot << std::cos(a), -std::sin(a), std::sin(a), std::cos(a);
  auto turned = AffineMap(rot, Point::Zero())(sq);
  EXPECT_TRUE(same_vertex_set(normalize_polygon(turned).polygon, sq.vertices()));

  auto hex = normalize_polygon(ConvexPolygon::regular(6, 1.0));
  EXPECT_TRUE(is_normalized(hex.polygon));
}

TEST(NormalizeTest, MapSendsInputToOutput) {
  Rng rng(7);
  for (int t = 0; t < 30; ++t) {
    auto h = symmetrize(random_convex_polygon(3 + t % 5, 1.0 + t * 0.1, rng));
    auto n = normalize_polygon(h);
    EXPECT_TRUE(is_normalized(n.polygon));
    EXPECT_TRUE(same_vertex_set(n.map(h), n.polygon.vertices()));
  }
  EXPECT_THROW(normalize_polygon(ConvexPolygon::square(1.0, Point(1, 0))), InputError);
}

TEST(TrapezoidTest, Examples) {
  auto sq = trapezoid_decompose(ConvexPolygon::square(1.0));
  ASSERT_EQ(sq.size(), 1u);
  EXPECT_NEAR(sq[0].area(), 1.0, 1e-12);
  auto hex = normalize_polygon(ConvexPolygon::regular(6, 1.0)).polygon;
  EXPECT_EQ(trapezoid_decompose(hex).size(), 2u);
}

TEST(TrapezoidTest, AreasSumToPolygon) {
  Rng rng(8);
  for (int t = 0; t < 30; ++t) {
    auto p = normalize_polygon(symmetrize(random_convex_polygon(3 + t % 6, 1.0, rng))).polygon;
    double sum = 0;
    for (const auto& z : trapezoid_decompose(p)) {
      EXPECT_LT(z.x_lo, z.x_hi);
      sum += z.area();
    }
    EXPECT_NEAR(sum, p.area(), 1e-9 * std::max(1.0, p.area()));
  }
}

}  // namespace
}  // namespace kdiam
