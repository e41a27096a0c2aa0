#ifndef KDIAM_PLANE_STRUCTURE_HPP
#define KDIAM_PLANE_STRUCTURE_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "kdiam/fingerprint.hpp"
#include "kdiam/geometry.hpp"
#include "kdiam/nsds.hpp"
#include "kdiam/stripe_tree.hpp"

namespace kdiam {

struct PlaneVersion {
  std::uint64_t owner = 0;
  std::uint32_t root = 0;

  friend bool operator==(const PlaneVersion&, const PlaneVersion&) = default;
};

struct PlaneStats {
  std::uint64_t marks = 0;
  std::uint64_t stripe_marks = 0;  ///< boundary updates issued to stripes
  std::uint64_t stripes_touched = 0;
  std::uint64_t lists = 0;
  std::uint64_t aux_visits = 0;
  std::uint64_t listed = 0;
};

/**
 * Persistent family of point subsets, each a union of placements c + M of a
 * centrally symmetric convex shape M.
 *
 * Points and M are mapped by one affine frame in which M has vertical sides at
 * x = +-1/2 and contains the unit square. The plane is cut into bands
 * [b, b + 1); every band holding a point gets a StripeTree, and a persistent
 * tree over those bands stores each stripe's root and fingerprint so that
 * equal stripes are skipped when listing differences.
 */
class PlaneStructure {
 public:
  /// Throws InputError on duplicate points or a shape not symmetric about the origin.
  PlaneStructure(std::vector<Point> points, const ConvexPolygon& shape, std::uint64_t seed);

  std::size_t point_count() const { return points_.size(); }
  const std::vector<Point>& points() const { return points_; }
  std::size_t stripe_count() const { return stripes_.size(); }
  std::vector<std::int64_t> bands() const;
  const AffineMap& frame() const { return frame_; }
  const ConvexPolygon& normalized_shape() const { return shape_; }
  const std::vector<double>& slopes() const { return slopes_; }

  PlaneVersion empty() const { return {owner_, 0}; }

  /// Adds the points covered by shape + center (boundary inclusive).
  PlaneVersion mark(PlaneVersion v, const Point& center);

  /// Symmetric difference of the two marked sets, sorted.
  VertexSet list_differences(PlaneVersion a, PlaneVersion b);

  /// Marked points, evaluated stripe by stripe from boundaries.
  VertexSet decode(PlaneVersion v) const;
  Fingerprint fingerprint(PlaneVersion v) const;

  /// Violations: auxiliary xor mismatches, stale stripe fingerprints, stripe node audits.
  std::size_t audit(PlaneVersion v) const;

  const PlaneStats& stats() const { return stats_; }
  StripeStats stripe_stats() const;

 private:
  struct AuxNode {
    std::uint32_t left = 0, right = 0;
    StripeTree::NodeId stripe_root = 0;
    Fingerprint fp;
  };
  struct Piece {
    double x_lo, x_hi;
    double top_lo, bot_lo;  // chain values at x_lo
    std::uint32_t top_dir, bot_dir;
  };

  void check(PlaneVersion v) const;
  std::uint32_t build_aux(std::uint32_t lo, std::uint32_t hi);
  StripeTree::NodeId stripe_root(std::uint32_t aux, std::uint32_t k) const;
  std::uint32_t set_stripe(std::uint32_t aux, std::uint32_t lo, std::uint32_t hi, std::uint32_t k,
                           StripeTree::NodeId root);
  void diff(std::uint32_t a, std::uint32_t b, std::uint32_t lo, std::uint32_t hi, VertexSet& out);

  std::uint64_t owner_;
  std::vector<Point> points_;
  AffineMap frame_;
  ConvexPolygon shape_;
  std::vector<double> slopes_;
  std::vector<Piece> pieces_;
  std::shared_ptr<const std::vector<Fingerprint>> keys_;
  std::vector<std::int64_t> bands_;
  std::vector<StripeTree> stripes_;
  std::vector<AuxNode> aux_;
  PlaneStats stats_;
};

/// NSDS whose add_neighbours(h, v) marks (F (+) -F) centred at point v.
class GeometricNsds final : public NeighbourSetStructure {
 public:
  GeometricNsds(std::vector<Point> points, const ConvexPolygon& f, std::uint64_t seed);

  std::size_t vertex_count() const override { return plane_.point_count(); }
  std::size_t version_count() const override { return versions_.size(); }
  SetHandle add_neighbours(SetHandle h, Vertex v) override;
  VertexSet list_differences(SetHandle a, SetHandle b) override;

  PlaneStructure& plane() { return plane_; }
  const PlaneStructure& plane() const { return plane_; }
  PlaneVersion version(SetHandle h) const;

 private:
  PlaneStructure plane_;
  std::vector<PlaneVersion> versions_;
};

std::unique_ptr<GeometricNsds> geometric_nsds(std::span<const Point> points, const ConvexPolygon& f,
                                              std::uint64_t seed);

/// Factory for fresh geometric structures over the same instance.
NsdsFactory geometric_nsds_factory(std::vector<Point> points, ConvexPolygon f, std::uint64_t seed);

}  // namespace kdiam

#endif  // KDIAM_PLANE_STRUCTURE_HPP
