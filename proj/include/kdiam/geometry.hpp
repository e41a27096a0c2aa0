#ifndef KDIAM_GEOMETRY_HPP
#define KDIAM_GEOMETRY_HPP

#include <Eigen/Core>
#include <span>
#include <vector>

#include "kdiam/graph.hpp"

namespace kdiam {

using Point = Eigen::Vector2d;

/// Absolute/relative tolerance used by every geometric predicate.
inline constexpr double kGeomTolerance = 1e-9;

/// z-component of (b - a) x (c - a).
inline double orient(const Point& a, const Point& b, const Point& c) {
  return (b.x() - a.x()) * (c.y() - a.y()) - (b.y() - a.y()) * (c.x() - a.x());
}

/**
 * Closed convex polygon with vertices in counter-clockwise order.
 *
 * Either a single point (s == 1) or a strictly convex polygon with s >= 3
 * vertices; anything else is rejected on construction.
 */
class ConvexPolygon {
 public:
  ConvexPolygon() = default;
  explicit ConvexPolygon(std::vector<Point> ccw_vertices);

  static ConvexPolygon singleton(const Point& p);
  /// Axis-aligned square with the given side, centred at `center`.
  static ConvexPolygon square(double side, const Point& center = Point::Zero());
  /// Regular s-gon with circumradius `radius`, first vertex at angle `phase`.
  static ConvexPolygon regular(int sides, double radius, double phase = 0.0);

  int sides() const { return static_cast<int>(vertices_.size()); }
  const std::vector<Point>& vertices() const { return vertices_; }
  const Point& vertex(int i) const { return vertices_[static_cast<std::size_t>(wrap(i))]; }
  Point edge(int i) const { return vertex(i + 1) - vertex(i); }
  bool is_point() const { return vertices_.size() == 1; }

  double area() const;
  double min_x() const;
  double max_x() const;
  double min_y() const;
  double max_y() const;

  /// Boundary-inclusive containment with tolerance kGeomTolerance.
  bool contains(const Point& p) const;
  /// Centrally symmetric about `center` (vertex i pairs with vertex i + s/2).
  bool is_centrally_symmetric(const Point& center = Point::Zero()) const;

  ConvexPolygon translated(const Point& t) const;
  ConvexPolygon scaled(double factor) const;
  ConvexPolygon negated() const { return scaled(-1.0); }

 private:
  int wrap(int i) const {
    const int s = sides();
    return ((i % s) + s) % s;
  }
  std::vector<Point> vertices_;
};

/// x -> linear * x + translation. Invertible by construction.
struct AffineMap {
  Eigen::Matrix2d linear = Eigen::Matrix2d::Identity();
  Eigen::Vector2d translation = Eigen::Vector2d::Zero();

  AffineMap() = default;
  AffineMap(const Eigen::Matrix2d& a, const Eigen::Vector2d& t);

  Point operator()(const Point& p) const { return linear * p + translation; }
  ConvexPolygon operator()(const ConvexPolygon& poly) const;
  AffineMap then(const AffineMap& next) const;
  bool is_identity(double tol = kGeomTolerance) const;
};

ConvexPolygon minkowski_sum(const ConvexPolygon& p, const ConvexPolygon& q);

/// H = 1/2 * (F (+) -F): centrally symmetric about the origin.
ConvexPolygon symmetrize(const ConvexPolygon& f);

/// Gauge of a symmetric polygon containing the origin: min { r >= 0 : x in r*F }.
double norm_value(const ConvexPolygon& f, const Point& x);

/// Edge {u, v} iff (u + F) and (v + F) intersect, i.e. v - u lies in F (+) -F.
Graph intersection_graph_naive(std::span<const Point> points, const ConvexPolygon& f);

struct NormalizedPolygon {
  ConvexPolygon polygon;
  AffineMap map;  ///< sends the input polygon (and input points) to the normalized frame
};

/**
 * Rotates a longest side to vertical and maps that parallel side pair onto the
 * vertical sides x = +-1/2 of the unit square [-1/2, 1/2]^2. The output keeps
 * central symmetry, contains the unit square and lies in the slab |x| <= 1/2.
 */
NormalizedPolygon normalize_polygon(const ConvexPolygon& f);

/// Vertical trapezoid [x_lo, x_hi] between two linear chains.
struct Trapezoid {
  double x_lo = 0, x_hi = 0;
  double top_lo = 0, top_hi = 0;  ///< upper chain at x_lo / x_hi
  double bot_lo = 0, bot_hi = 0;  ///< lower chain at x_lo / x_hi

  double top_slope() const { return (top_hi - top_lo) / (x_hi - x_lo); }
  double bot_slope() const { return (bot_hi - bot_lo) / (x_hi - x_lo); }
  double top_at(double x) const { return top_lo + (x - x_lo) * top_slope(); }
  double bot_at(double x) const { return bot_lo + (x - x_lo) * bot_slope(); }
  double area() const { return 0.5 * ((top_lo - bot_lo) + (top_hi - bot_hi)) * (x_hi - x_lo); }
};

/// Cuts the polygon with a vertical line through every vertex.
std::vector<Trapezoid> trapezoid_decompose(const ConvexPolygon& f);

/// Largest vertical chord length max_x (top(x) - bottom(x)).
double vertical_height(const ConvexPolygon& f);

}  // namespace kdiam

#endif  // KDIAM_GEOMETRY_HPP
