#ifndef KDIAM_NSDS_HPP
#define KDIAM_NSDS_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "kdiam/fingerprint.hpp"
#include "kdiam/graph.hpp"

namespace kdiam {

/// Version id inside one structure. Handle 0 is the empty set.
using SetHandle = std::uint32_t;

inline constexpr SetHandle kEmptySet = 0;

/**
 * Persistent family of vertex subsets grown only by closed neighbourhoods.
 * Handles never change meaning; a handle from another instance is rejected
 * where detectable (out of range ids always are).
 */
class NeighbourSetStructure {
 public:
  virtual ~NeighbourSetStructure() = default;

  virtual std::size_t vertex_count() const = 0;
  virtual std::size_t version_count() const = 0;

  /// New handle for S(h) + N[v].
  virtual SetHandle add_neighbours(SetHandle h, Vertex v) = 0;

  /// S(a) xor S(b), sorted.
  virtual VertexSet list_differences(SetHandle a, SetHandle b) = 0;

  VertexSet members(SetHandle h) { return list_differences(kEmptySet, h); }
};

using NsdsFactory = std::function<std::unique_ptr<NeighbourSetStructure>()>;

/**
 * Reference structure over an explicit graph. Each version is an immutable
 * sorted vector shared with its parent when N[v] adds nothing, plus a 128-bit
 * fingerprint so equal versions are detected without a scan.
 */
class NaiveNsds final : public NeighbourSetStructure {
 public:
  /// `g` must outlive the structure.
  explicit NaiveNsds(const Graph& g, std::uint64_t seed = 0x9e3779b97f4a7c15ULL);

  std::size_t vertex_count() const override { return graph_->vertex_count(); }
  std::size_t version_count() const override { return versions_.size(); }
  SetHandle add_neighbours(SetHandle h, Vertex v) override;
  VertexSet list_differences(SetHandle a, SetHandle b) override;

  Fingerprint fingerprint(SetHandle h) const;

 private:
  struct Version {
    std::shared_ptr<const VertexSet> set;
    Fingerprint fp;
  };
  const Version& version(SetHandle h) const;

  const Graph* graph_;
  std::vector<Fingerprint> keys_;
  std::vector<Version> versions_;
};

NsdsFactory naive_nsds_factory(const Graph& g, std::uint64_t seed = 0x9e3779b97f4a7c15ULL);

}  // namespace kdiam

#endif  // KDIAM_NSDS_HPP
