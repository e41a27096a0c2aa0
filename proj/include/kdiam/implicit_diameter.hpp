#ifndef KDIAM_IMPLICIT_DIAMETER_HPP
#define KDIAM_IMPLICIT_DIAMETER_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "kdiam/graph.hpp"
#include "kdiam/hypergraph_order.hpp"
#include "kdiam/nsds.hpp"

namespace kdiam {

/**
 * Balls along an order stored as consecutive differences:
 * N^r[order[i]] = deltas[0] xor ... xor deltas[i].
 */
struct DeltaEncoding {
  std::uint32_t radius = 0;
  std::vector<Vertex> order;
  std::vector<VertexSet> deltas;
};

/// D_1 = {v_1}, D_i = {v_i-1, v_i}.
DeltaEncoding trivial_delta_encoding(std::span<const Vertex> order);

/// Prefix xor up to and including position i, sorted.
VertexSet reconstruct_prefix(const DeltaEncoding& enc, std::size_t i);

struct ExpandStats {
  std::uint64_t calls = 0;
  std::uint64_t cost = 0;  ///< sum over calls of t + sum |D_i|
  std::uint64_t add_neighbours = 0;
};

/// a + 3b(ceil(log2 t) + 1) + 2t.
std::uint64_t expand_cost_bound(std::uint64_t a, std::uint64_t b, std::uint64_t t);

/**
 * Handle i denotes N[D_1 xor ... xor D_i]. Divide and conquer: vertices of D_1
 * absent from every later set are added to the shared base once, and the
 * right half restarts from the xor of the left prefix.
 */
std::vector<SetHandle> expand_balls(std::span<const VertexSet> deltas, NeighbourSetStructure& nsds,
                                    ExpandStats* stats = nullptr);

struct BfsResult {
  VertexSet ball;                   ///< { x : dist <= r }, sorted
  std::vector<std::uint32_t> dist;  ///< kUnreachable past depth r
};

/// BFS that discovers neighbours only through the structure's operations.
BfsResult simulate_bfs(NeighbourSetStructure& nsds, Vertex v, std::uint32_t r);

struct ImplicitOptions {
  OrderOptions order;
  bool audit = false;  ///< compare a random 10% of prefixes with simulate_bfs
  std::uint64_t audit_seed = 0x5eedULL;
};

struct ImplicitStats {
  std::size_t steps = 0;
  std::vector<std::uint64_t> delta_totals;  ///< sum |D^r_i| per radius, including r = 0
  ExpandStats expand;
  std::uint64_t expand_bound = 0;
  std::size_t audit_checks = 0;
  std::size_t audit_violations = 0;
};

/// One radius step: expand, reorder, permute, re-delta. `nsds` must be fresh.
DeltaEncoding implicit_step(const DeltaEncoding& enc, NeighbourSetStructure& nsds,
                            const ImplicitOptions& options, Rng& rng,
                            ImplicitStats* stats = nullptr);

/// Decides diam <= k of the graph behind the factory's structures (n vertices).
bool k_diameter_implicit(const NsdsFactory& factory, std::size_t n, std::uint32_t k,
                         const ImplicitOptions& options, Rng& rng, ImplicitStats* stats = nullptr);

}  // namespace kdiam

#endif  // KDIAM_IMPLICIT_DIAMETER_HPP
