#include "kdiam/geometry.hpp"

#include <Eigen/Geometry>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "kdiam/error.hpp"

namespace kdiam {

namespace {

double cross(const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
  return a.x() * b.y() - a.y() * b.x();
}

// Rotates the vertex list so it starts at the lowest (then leftmost) vertex.
std::vector<Point> start_at_bottom(const std::vector<Point>& v) {
  auto it = std::min_element(v.begin(), v.end(), [](const Point& a, const Point& b) {
    return a.y() < b.y() || (a.y() == b.y() && a.x() < b.x());
  });
  std::vector<Point> out(it, v.end());
  out.insert(out.end(), v.begin(), it);
  return out;
}

std::vector<Point> drop_collinear(const std::vector<Point>& input) {
  std::vector<Point> v;
  for (const auto& p : input) {
    if (v.empty() || (p - v.back()).norm() > kGeomTolerance) v.push_back(p);
  }
  while (v.size() > 1 && (v.front() - v.back()).norm() <= kGeomTolerance) v.pop_back();
  std::vector<Point> out;
  const std::size_t s = v.size();
  for (std::size_t i = 0; i < s && s > 2; ++i) {
    Eigen::Vector2d e1 = v[i] - v[(i + s - 1) % s];
    Eigen::Vector2d e2 = v[(i + 1) % s] - v[i];
    if (std::abs(cross(e1, e2)) <= kGeomTolerance * e1.norm() * e2.norm()) continue;
    out.push_back(v[i]);
  }
  return out;
}

}  // namespace

ConvexPolygon::ConvexPolygon(std::vector<Point> ccw_vertices) : vertices_(std::move(ccw_vertices)) {
  const std::size_t s = vertices_.size();
  if (s == 0) throw InputError("polygon has no vertices");
  for (const auto& p : vertices_) {
    if (!p.allFinite()) throw InputError("polygon vertex is not finite");
  }
  if (s == 1) return;
  if (s == 2) throw InputError("degenerate polygon: two vertices");
  double turning = 0.0;
  for (std::size_t i = 0; i < s; ++i) {
    Eigen::Vector2d e1 = vertices_[(i + 1) % s] - vertices_[i];
    Eigen::Vector2d e2 = vertices_[(i + 2) % s] - vertices_[(i + 1) % s];
    const double c = cross(e1, e2);
    if (!(c > kGeomTolerance * e1.norm() * e2.norm())) {
      throw InputError("polygon is not strictly convex counter-clockwise at vertex " +
                       std::to_string((i + 1) % s));
    }
    turning += std::atan2(c, e1.dot(e2));
  }
  if (std::abs(turning - 2.0 * std::numbers::pi) > 1e-6) {
    throw InputError("polygon winds more than once");
  }
}

ConvexPolygon ConvexPolygon::singleton(const Point& p) { return ConvexPolygon(std::vector<Point>{p}); }

ConvexPolygon ConvexPolygon::square(double side, const Point& center) {
  const double h = side / 2;
  return ConvexPolygon({center + Point(-h, -h), center + Point(h, -h), center + Point(h, h),
                        center + Point(-h, h)});
}

ConvexPolygon ConvexPolygon::regular(int sides, double radius, double phase) {
  if (sides < 3) throw InputError("regular polygon needs at least 3 sides");
  std::vector<Point> v;
  for (int i = 0; i < sides; ++i) {
    const double a = phase + 2.0 * std::numbers::pi * i / sides;
    v.emplace_back(radius * std::cos(a), radius * std::sin(a));
  }
  return ConvexPolygon(std::move(v));
}

double ConvexPolygon::area() const {
  double twice = 0.0;
  for (int i = 0; i < sides(); ++i) twice += cross(vertex(i), vertex(i + 1));
  return twice / 2;
}

double ConvexPolygon::min_x() const {
  double m = vertices_.front().x();
  for (const auto& p : vertices_) m = std::min(m, p.x());
  return m;
}
double ConvexPolygon::max_x() const {
  double m = vertices_.front().x();
  for (const auto& p : vertices_) m = std::max(m, p.x());
  return m;
}
double ConvexPolygon::min_y() const {
  double m = vertices_.front().y();
  for (const auto& p : vertices_) m = std::min(m, p.y());
  return m;
}
double ConvexPolygon::max_y() const {
  double m = vertices_.front().y();
  for (const auto& p : vertices_) m = std::max(m, p.y());
  return m;
}

bool ConvexPolygon::contains(const Point& p) const {
  if (is_point()) return (p - vertices_.front()).norm() <= kGeomTolerance;
  for (int i = 0; i < sides(); ++i) {
    Eigen::Vector2d e = edge(i);
    // signed distance of p to the supporting line, positive inside
    if (cross(e, p - vertex(i)) / e.norm() < -kGeomTolerance) return false;
  }
  return true;
}

bool ConvexPolygon::is_centrally_symmetric(const Point& center) const {
  if (is_point()) return (vertices_.front() - center).norm() <= kGeomTolerance;
  if (sides() % 2 != 0) return false;
  const int half = sides() / 2;
  double scale = 1.0;
  for (const auto& p : vertices_) scale = std::max(scale, p.cwiseAbs().maxCoeff());
  for (int i = 0; i < half; ++i) {
    if ((vertex(i) + vertex(i + half) - 2 * center).norm() > kGeomTolerance * scale) return false;
  }
  return true;
}

ConvexPolygon ConvexPolygon::translated(const Point& t) const {
  std::vector<Point> v = vertices_;
  for (auto& p : v) p += t;
  return ConvexPolygon(std::move(v));
}

ConvexPolygon ConvexPolygon::scaled(double factor) const {
  if (factor == 0.0) throw InputError("scaling a polygon by zero");
  std::vector<Point> v = vertices_;
  for (auto& p : v) p *= factor;
  // scaling by a negative factor is a half-turn, which keeps orientation
  return ConvexPolygon(std::move(v));
}

AffineMap::AffineMap(const Eigen::Matrix2d& a, const Eigen::Vector2d& t) : linear(a), translation(t) {
  if (!(std::abs(a.determinant()) > 1e-300) || !a.allFinite()) {
    throw InputError("affine map is not invertible");
  }
}

ConvexPolygon AffineMap::operator()(const ConvexPolygon& poly) const {
  std::vector<Point> v;
  for (const auto& p : poly.vertices()) v.push_back((*this)(p));
  if (linear.determinant() < 0) std::reverse(v.begin(), v.end());
  return ConvexPolygon(std::move(v));
}

AffineMap AffineMap::then(const AffineMap& next) const {
  return AffineMap(next.linear * linear, next.linear * translation + next.translation);
}

bool AffineMap::is_identity(double tol) const {
  return (linear - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff() <= tol &&
         translation.cwiseAbs().maxCoeff() <= tol;
}

ConvexPolygon minkowski_sum(const ConvexPolygon& p, const ConvexPolygon& q) {
  if (p.vertices().empty() || q.vertices().empty()) {
    throw InputError("Minkowski sum of an empty polygon");
  }
  if (p.is_point()) return q.translated(p.vertex(0));
  if (q.is_point()) return p.translated(q.vertex(0));

  auto a = start_at_bottom(p.vertices());
  auto b = start_at_bottom(q.vertices());
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  a.push_back(a[0]);
  a.push_back(a[1]);
  b.push_back(b[0]);
  b.push_back(b[1]);

  std::vector<Point> out;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < n || j < m) {
    out.push_back(a[i] + b[j]);
    const double c = cross(a[i + 1] - a[i], b[j + 1] - b[j]);
    if (c >= 0 && i < n) ++i;
    if (c <= 0 && j < m) ++j;
  }
  return ConvexPolygon(drop_collinear(out));
}

ConvexPolygon symmetrize(const ConvexPolygon& f) {
  auto sum = minkowski_sum(f, f.negated());
  if (sum.is_point()) return ConvexPolygon::singleton(Point::Zero());
  return sum.scaled(0.5);
}

double norm_value(const ConvexPolygon& f, const Point& x) {
  if (f.is_point()) throw InputError("norm of a point polygon is undefined");
  double best = 0.0;
  for (int i = 0; i < f.sides(); ++i) {
    Eigen::Vector2d e = f.edge(i);
    Eigen::Vector2d normal(e.y(), -e.x());  // outward for CCW order
    const double support = normal.dot(f.vertex(i));
    if (!(support > kGeomTolerance * normal.norm())) {
      throw InputError("origin is not an interior point of the polygon");
    }
    best = std::max(best, normal.dot(x) / support);
  }
  return best;
}

Graph intersection_graph_naive(std::span<const Point> points, const ConvexPolygon& f) {
  const ConvexPolygon difference_body = minkowski_sum(f, f.negated());
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i] == points[j]) {
        throw InputError("duplicate points " + std::to_string(i) + " and " + std::to_string(j));
      }
      if (difference_body.contains(points[j] - points[i])) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  return Graph(points.size(), edges);
}

NormalizedPolygon normalize_polygon(const ConvexPolygon& f) {
  if (f.is_point() || f.sides() % 2 != 0 || !f.is_centrally_symmetric()) {
    throw InputError("normalization needs a polygon symmetric about the origin");
  }
  double longest = 0.0;
  for (int i = 0; i < f.sides(); ++i) longest = std::max(longest, f.edge(i).norm());

  // Among the longest sides, take the one closest to vertical.
  int chosen = -1;
  double rotation = 0.0;
  for (int i = 0; i < f.sides(); ++i) {
    Eigen::Vector2d e = f.edge(i);
    if (e.norm() < longest * (1.0 - 1e-9)) continue;
    double theta = std::numbers::pi / 2 - std::atan2(e.y(), e.x());
    theta = std::remainder(theta, std::numbers::pi);  // into [-pi/2, pi/2]
    if (std::abs(std::abs(theta) - std::numbers::pi / 2) < 1e-15) theta = std::numbers::pi / 2;
    if (chosen < 0 || std::abs(theta) < std::abs(rotation) - 1e-12) {
      chosen = i;
      rotation = theta;
    }
  }
  const Eigen::Matrix2d rot = Eigen::Rotation2Dd(rotation).toRotationMatrix();
  const Point a = rot * f.vertex(chosen);
  const Point b = rot * f.vertex(chosen + 1);
  const double side_x = 0.5 * (a.x() + b.x());
  const double side_mid_y = 0.5 * (a.y() + b.y());
  const double half_width = std::abs(side_x);

  Eigen::Matrix2d shear;
  shear << 1.0, 0.0, -side_mid_y / side_x, 1.0;
  Eigen::Matrix2d scale = Eigen::Vector2d(1.0 / (2.0 * half_width), 1.0 / longest).asDiagonal();
  AffineMap map(scale * shear * rot, Eigen::Vector2d::Zero());
  return {map(f), map};
}

std::vector<Trapezoid> trapezoid_decompose(const ConvexPolygon& f) {
  std::vector<Trapezoid> out;
  if (f.is_point()) return out;
  std::vector<double> xs;
  for (const auto& p : f.vertices()) xs.push_back(p.x());
  std::sort(xs.begin(), xs.end());
  std::vector<double> cuts;
  for (double x : xs) {
    if (cuts.empty() || x - cuts.back() > kGeomTolerance) cuts.push_back(x);
  }
  auto eval = [](const Point& p, const Point& q, double x) {
    return p.y() + (q.y() - p.y()) * (x - p.x()) / (q.x() - p.x());
  };
  for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
    const double lo = cuts[c];
    const double hi = cuts[c + 1];
    const double mid = 0.5 * (lo + hi);
    Trapezoid t;
    t.x_lo = lo;
    t.x_hi = hi;
    bool have_top = false;
    bool have_bot = false;
    for (int i = 0; i < f.sides(); ++i) {
      const Point& p = f.vertex(i);
      const Point& q = f.vertex(i + 1);
      if (std::abs(q.x() - p.x()) <= kGeomTolerance) continue;
      if (std::min(p.x(), q.x()) > mid || std::max(p.x(), q.x()) < mid) continue;
      if (q.x() < p.x()) {  // upper chain runs right to left
        t.top_lo = eval(p, q, lo);
        t.top_hi = eval(p, q, hi);
        have_top = true;
      } else {
        t.bot_lo = eval(p, q, lo);
        t.bot_hi = eval(p, q, hi);
        have_bot = true;
      }
    }
    if (!have_top || !have_bot) throw InputError("trapezoid decomposition failed");
    out.push_back(t);
  }
  return out;
}

double vertical_height(const ConvexPolygon& f) {
  double best = 0.0;
  for (const auto& t : trapezoid_decompose(f)) {
    best = std::max({best, t.top_lo - t.bot_lo, t.top_hi - t.bot_hi});
  }
  return best;
}

}  // namespace kdiam
