#ifndef KDIAM_EXPLICIT_DIAMETER_HPP
#define KDIAM_EXPLICIT_DIAMETER_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "kdiam/graph.hpp"
#include "kdiam/hypergraph_order.hpp"
#include "kdiam/interval_set.hpp"

namespace kdiam {

/**
 * Balls N^r[v] for every vertex, each stored as intervals of positions in
 * `order`. Positions are 0-based: position p holds vertex order[p].
 */
struct BallEncoding {
  std::uint32_t radius = 0;
  std::vector<Vertex> order;
  std::vector<IntervalSet> reps;  ///< indexed by vertex id
};

/// I^0_v = I({v}) under the identity order.
BallEncoding trivial_encoding(std::size_t vertex_count);

/// The vertex set a representation stands for under `order`, sorted.
VertexSet decode(const IntervalSet& rep, std::span<const Vertex> order);
VertexSet decode(const BallEncoding& enc, Vertex v);

/// Inverse of an order: position of each vertex. Throws unless a permutation.
std::vector<Position> positions_of(std::span<const Vertex> order);

/**
 * Re-expresses per-vertex representations from `order_old` to `order_new`.
 * Only consecutive differences A_i = N[v_i] \ N[v_i-1] and
 * B_i = N[v_i] \ N[v_i+1] are enumerated; they become left and right interval
 * endpoints directly.
 */
std::vector<IntervalSet> rebase(std::span<const IntervalSet> reps_old,
                                std::span<const Vertex> order_old,
                                std::span<const Vertex> order_new);

struct ExplicitOptions {
  OrderOptions order;
  bool freeze_order = false;  ///< keep the starting order at every radius
  bool audit = false;         ///< check canonicality and decoding after each step
};

struct ExplicitStats {
  std::size_t steps = 0;
  std::uint64_t union_input_intervals = 0;
  std::uint64_t rebase_endpoints = 0;
  std::uint64_t interval_total = 0;  ///< sum of |I^r_v| after the last step
  std::size_t audit_checks = 0;
  std::size_t audit_violations = 0;
};

/// One radius step: union over N[v], fresh weighted order, rebase.
BallEncoding expand_step(const Graph& g, const BallEncoding& enc, const ExplicitOptions& options,
                         Rng& rng, ExplicitStats* stats = nullptr);

/// Decides diam(g) <= k. Throws InputError for k < 1, DisconnectedGraphError if disconnected.
bool k_diameter_explicit(const Graph& g, std::uint32_t k, const ExplicitOptions& options, Rng& rng,
                         ExplicitStats* stats = nullptr);

/// Number of representations that fail canonicality or decode to the wrong ball.
std::size_t audit_encoding(const Graph& g, const BallEncoding& enc);

}  // namespace kdiam

#endif  // KDIAM_EXPLICIT_DIAMETER_HPP
