#include "kdiam/plane_structure.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <string>

#include "kdiam/error.hpp"

namespace kdiam {

namespace {

std::uint64_t next_owner() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1);
}

std::uint32_t snap_slope(std::vector<double>& slopes, double s) {
  for (std::size_t i = 0; i < slopes.size(); ++i) {
    if (std::abs(slopes[i] - s) <= kGeomTolerance) return static_cast<std::uint32_t>(i);
  }
  slopes.push_back(s);
  return static_cast<std::uint32_t>(slopes.size() - 1);
}

// Shrinks [lo, hi] to the part where m * x + c <= 0.
void clip(double& lo, double& hi, double m, double c) {
  if (m == 0.0) {
    if (c > 0) hi = lo - 1;
    return;
  }
  const double root = -c / m;
  if (m > 0) {
    hi = std::min(hi, root);
  } else {
    lo = std::max(lo, root);
  }
}

}  // namespace

PlaneStructure::PlaneStructure(std::vector<Point> points, const ConvexPolygon& shape,
                               std::uint64_t seed)
    : owner_(next_owner()), points_(std::move(points)) {
  {
    std::vector<std::pair<double, double>> sorted;
    for (const auto& p : points_) sorted.emplace_back(p.x(), p.y());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InputError("duplicate points");
    }
  }
  auto normalized = normalize_polygon(shape);
  frame_ = normalized.map;
  shape_ = normalized.polygon;
  for (const auto& t : trapezoid_decompose(shape_)) {
    Piece piece;
    piece.x_lo = t.x_lo;
    piece.x_hi = t.x_hi;
    piece.top_lo = t.top_lo;
    piece.bot_lo = t.bot_lo;
    piece.top_dir = snap_slope(slopes_, t.top_slope());
    piece.bot_dir = snap_slope(slopes_, t.bot_slope());
    pieces_.push_back(piece);
  }
  keys_ = std::make_shared<const std::vector<Fingerprint>>(random_fingerprints(points_.size(), seed));

  std::map<std::int64_t, std::vector<StripePoint>> by_band;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const Point q = frame_(points_[i]);
    by_band[static_cast<std::int64_t>(std::floor(q.y()))].push_back(
        {static_cast<std::uint32_t>(i), q.x(), q.y()});
  }
  for (auto& [band, pts] : by_band) {
    bands_.push_back(band);
    stripes_.emplace_back(std::move(pts), band, slopes_, keys_.get());
  }
  if (!stripes_.empty()) build_aux(0, static_cast<std::uint32_t>(stripes_.size() - 1));
}

std::vector<std::int64_t> PlaneStructure::bands() const { return bands_; }

std::uint32_t PlaneStructure::build_aux(std::uint32_t lo, std::uint32_t hi) {
  const auto id = static_cast<std::uint32_t>(aux_.size());
  aux_.push_back({});
  if (lo < hi) {
    const std::uint32_t mid = lo + (hi - lo) / 2;
    const std::uint32_t l = build_aux(lo, mid);
    const std::uint32_t r = build_aux(mid + 1, hi);
    aux_[id].left = l;
    aux_[id].right = r;
  }
  return id;
}

void PlaneStructure::check(PlaneVersion v) const {
  if (v.owner != owner_) throw HandleError("version belongs to a different plane structure");
  if (!aux_.empty() && v.root >= aux_.size()) throw HandleError("unknown plane version");
}

StripeTree::NodeId PlaneStructure::stripe_root(std::uint32_t aux, std::uint32_t k) const {
  std::uint32_t lo = 0;
  std::uint32_t hi = static_cast<std::uint32_t>(stripes_.size() - 1);
  while (lo < hi) {
    const std::uint32_t mid = lo + (hi - lo) / 2;
    if (k <= mid) {
      aux = aux_[aux].left;
      hi = mid;
    } else {
      aux = aux_[aux].right;
      lo = mid + 1;
    }
  }
  return aux_[aux].stripe_root;
}

std::uint32_t PlaneStructure::set_stripe(std::uint32_t aux, std::uint32_t lo, std::uint32_t hi,
                                         std::uint32_t k, StripeTree::NodeId root) {
  AuxNode node = aux_[aux];
  if (lo == hi) {
    node.stripe_root = root;
    node.fp = stripes_[k].hash(root);
  } else {
    const std::uint32_t mid = lo + (hi - lo) / 2;
    if (k <= mid) {
      node.left = set_stripe(node.left, lo, mid, k, root);
    } else {
      node.right = set_stripe(node.right, mid + 1, hi, k, root);
    }
    node.fp = aux_[node.left].fp ^ aux_[node.right].fp;
  }
  aux_.push_back(node);
  return static_cast<std::uint32_t>(aux_.size() - 1);
}

PlaneVersion PlaneStructure::mark(PlaneVersion v, const Point& center) {
  check(v);
  ++stats_.marks;
  if (stripes_.empty()) return v;
  constexpr double eps = kGeomTolerance;
  const Point c = frame_(center);
  const double y_lo = c.y() + shape_.min_y() - eps;
  const double y_hi = c.y() + shape_.max_y() + eps;
  auto it = std::lower_bound(bands_.begin(), bands_.end(), static_cast<std::int64_t>(std::floor(y_lo)));
  const auto last_band = static_cast<std::int64_t>(std::floor(y_hi));
  const auto top = static_cast<std::uint32_t>(stripes_.size() - 1);

  PlaneVersion out = v;
  for (; it != bands_.end() && *it <= last_band; ++it) {
    const auto k = static_cast<std::uint32_t>(it - bands_.begin());
    StripeTree& stripe = stripes_[k];
    const double y0 = static_cast<double>(*it);
    const StripeTree::NodeId before = stripe_root(out.root, k);
    StripeTree::NodeId root = before;
    for (const Piece& p : pieces_) {
      const double x_lo = p.x_lo + c.x();
      const double x_hi = p.x_hi + c.x();
      const double ts = slopes_[p.top_dir];
      const double bs = slopes_[p.bot_dir];
      const double t_off = p.top_lo + c.y() - ts * x_lo;  // top(x) = ts * x + t_off
      const double b_off = p.bot_lo + c.y() - bs * x_lo;

      // Bottom part: the shape reaches below the band, so it marks y <= top(x).
      double lo = x_lo, hi = x_hi;
      clip(lo, hi, bs, b_off - y0);
      clip(lo, hi, -ts, y0 - eps - t_off);
      if (lo <= hi) {
        auto [first, last] = stripe.index_range(lo - eps, hi + eps);
        root = stripe.mark_bottom(root, first, last, {p.top_dir, t_off + eps});
        ++stats_.stripe_marks;
      }
      // Top part: the shape starts inside the band and marks y >= bottom(x).
      lo = x_lo;
      hi = x_hi;
      clip(lo, hi, -bs, y0 - b_off);
      clip(lo, hi, bs, b_off - eps - y0 - 1.0);
      if (lo <= hi) {
        auto [first, last] = stripe.index_range(lo - eps, hi + eps);
        root = stripe.mark_top(root, first, last, {p.bot_dir, b_off - eps});
        ++stats_.stripe_marks;
      }
    }
    if (root != before) {
      ++stats_.stripes_touched;
      out.root = set_stripe(out.root, 0, top, k, root);
    }
  }
  return out;
}

void PlaneStructure::diff(std::uint32_t a, std::uint32_t b, std::uint32_t lo, std::uint32_t hi,
                          VertexSet& out) {
  ++stats_.aux_visits;
  if (aux_[a].fp == aux_[b].fp) return;
  if (lo == hi) {
    auto part = stripes_[lo].list_differences(aux_[a].stripe_root, aux_[b].stripe_root);
    out.insert(out.end(), part.begin(), part.end());
    return;
  }
  const std::uint32_t mid = lo + (hi - lo) / 2;
  diff(aux_[a].left, aux_[b].left, lo, mid, out);
  diff(aux_[a].right, aux_[b].right, mid + 1, hi, out);
}

VertexSet PlaneStructure::list_differences(PlaneVersion a, PlaneVersion b) {
  check(a);
  check(b);
  ++stats_.lists;
  VertexSet out;
  if (stripes_.empty()) return out;
  diff(a.root, b.root, 0, static_cast<std::uint32_t>(stripes_.size() - 1), out);
  std::sort(out.begin(), out.end());
  stats_.listed += out.size();
  return out;
}

VertexSet PlaneStructure::decode(PlaneVersion v) const {
  check(v);
  VertexSet out;
  for (std::uint32_t k = 0; k < stripes_.size(); ++k) {
    auto part = stripes_[k].decode(stripe_root(v.root, k));
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

Fingerprint PlaneStructure::fingerprint(PlaneVersion v) const {
  check(v);
  return aux_.empty() ? Fingerprint{} : aux_[v.root].fp;
}

std::size_t PlaneStructure::audit(PlaneVersion v) const {
  check(v);
  if (stripes_.empty()) return 0;
  std::size_t bad = 0;
  auto rec = [&](auto&& self, std::uint32_t a, std::uint32_t lo, std::uint32_t hi) -> void {
    const AuxNode& node = aux_[a];
    if (lo == hi) {
      if (!(node.fp == stripes_[lo].hash(node.stripe_root))) ++bad;
      bad += stripes_[lo].audit(node.stripe_root);
      return;
    }
    if (!(node.fp == (aux_[node.left].fp ^ aux_[node.right].fp))) ++bad;
    const std::uint32_t mid = lo + (hi - lo) / 2;
    self(self, node.left, lo, mid);
    self(self, node.right, mid + 1, hi);
  };
  rec(rec, v.root, 0, static_cast<std::uint32_t>(stripes_.size() - 1));
  return bad;
}

StripeStats PlaneStructure::stripe_stats() const {
  StripeStats total;
  for (const auto& s : stripes_) {
    const auto& st = s.stats();
    total.marks += st.marks;
    total.mark_visits += st.mark_visits;
    total.max_mark_visits = std::max(total.max_mark_visits, st.max_mark_visits);
    total.list_visits += st.list_visits;
    total.max_straddling = std::max(total.max_straddling, st.max_straddling);
    total.pushes += st.pushes;
  }
  return total;
}

GeometricNsds::GeometricNsds(std::vector<Point> points, const ConvexPolygon& f, std::uint64_t seed)
    : plane_(std::move(points), minkowski_sum(f, f.negated()), seed) {
  versions_.push_back(plane_.empty());
}

PlaneVersion GeometricNsds::version(SetHandle h) const {
  if (h >= versions_.size()) throw HandleError("unknown set handle " + std::to_string(h));
  return versions_[h];
}

SetHandle GeometricNsds::add_neighbours(SetHandle h, Vertex v) {
  if (v >= plane_.point_count()) throw InputError("vertex " + std::to_string(v) + " out of range");
  versions_.push_back(plane_.mark(version(h), plane_.points()[v]));
  return static_cast<SetHandle>(versions_.size() - 1);
}

VertexSet GeometricNsds::list_differences(SetHandle a, SetHandle b) {
  return plane_.list_differences(version(a), version(b));
}

std::unique_ptr<GeometricNsds> geometric_nsds(std::span<const Point> points, const ConvexPolygon& f,
                                              std::uint64_t seed) {
  return std::make_unique<GeometricNsds>(std::vector<Point>(points.begin(), points.end()), f, seed);
}

NsdsFactory geometric_nsds_factory(std::vector<Point> points, ConvexPolygon f, std::uint64_t seed) {
  return [points = std::move(points), f = std::move(f), seed]() -> std::unique_ptr<NeighbourSetStructure> {
    return std::make_unique<GeometricNsds>(points, f, seed);
  };
}

}  // namespace kdiam
