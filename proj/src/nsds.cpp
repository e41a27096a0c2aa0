#include "kdiam/nsds.hpp"

#include <algorithm>
#include <iterator>
#include <string>

#include "kdiam/error.hpp"

namespace kdiam {

NaiveNsds::NaiveNsds(const Graph& g, std::uint64_t seed)
    : graph_(&g), keys_(random_fingerprints(g.vertex_count(), seed)) {
  versions_.push_back({std::make_shared<const VertexSet>(), Fingerprint{}});
}

const NaiveNsds::Version& NaiveNsds::version(SetHandle h) const {
  if (h >= versions_.size()) throw HandleError("unknown set handle " + std::to_string(h));
  return versions_[h];
}

SetHandle NaiveNsds::add_neighbours(SetHandle h, Vertex v) {
  if (v >= graph_->vertex_count()) throw InputError("vertex " + std::to_string(v) + " out of range");
  Version base = version(h);
  VertexSet closed(graph_->neighbors(v).begin(), graph_->neighbors(v).end());
  closed.insert(std::lower_bound(closed.begin(), closed.end(), v), v);

  VertexSet fresh;
  std::set_difference(closed.begin(), closed.end(), base.set->begin(), base.set->end(),
                      std::back_inserter(fresh));
  if (!fresh.empty()) {
    auto merged = std::make_shared<VertexSet>();
    merged->reserve(base.set->size() + fresh.size());
    std::merge(base.set->begin(), base.set->end(), fresh.begin(), fresh.end(),
               std::back_inserter(*merged));
    for (Vertex x : fresh) base.fp ^= keys_[x];
    base.set = std::move(merged);
  }
  versions_.push_back(std::move(base));
  return static_cast<SetHandle>(versions_.size() - 1);
}

VertexSet NaiveNsds::list_differences(SetHandle a, SetHandle b) {
  const Version& va = version(a);
  const Version& vb = version(b);
  VertexSet out;
  if (va.set == vb.set || va.fp == vb.fp) return out;
  std::set_symmetric_difference(va.set->begin(), va.set->end(), vb.set->begin(), vb.set->end(),
                                std::back_inserter(out));
  return out;
}

Fingerprint NaiveNsds::fingerprint(SetHandle h) const { return version(h).fp; }

NsdsFactory naive_nsds_factory(const Graph& g, std::uint64_t seed) {
  return [&g, seed]() -> std::unique_ptr<NeighbourSetStructure> {
    return std::make_unique<NaiveNsds>(g, seed);
  };
}

}  // namespace kdiam
