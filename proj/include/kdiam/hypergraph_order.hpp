#ifndef KDIAM_HYPERGRAPH_ORDER_HPP
#define KDIAM_HYPERGRAPH_ORDER_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "kdiam/graph.hpp"

namespace kdiam {

using Rng = std::mt19937_64;

/// For a ground-set element x, the ids of all hyperedges that contain x.
using MembershipOracle = std::function<std::vector<std::uint32_t>(std::uint32_t)>;

struct OrderOptions {
  int d = 4;           ///< VC-dimension bound; the sample has ceil(|R|^(1/d)) elements
  double alpha = 1.0;  ///< net constant, only feeds the recorded epsilon
};

/**
 * The random sample driving one order construction.
 *
 * `sample` lists ground-set elements x_1..x_s in draw order; prefixes of length
 * `prefix_sizes[k]` = s / 2^k are themselves uniform samples.
 */
struct NetSchedule {
  std::size_t sample_size = 0;
  std::vector<std::uint32_t> sample;
  std::vector<std::size_t> prefix_sizes;
  double epsilon = 0.0;
  double alpha = 1.0;
};

/// Smallest s with s^d >= num_edges (at least 1).
std::size_t net_sample_size(std::size_t num_edges, int d);

/// Uniform sample without replacement; all of X in random order when s >= |X|.
NetSchedule make_net_schedule(std::size_t num_edges, std::size_t num_elements,
                              const OrderOptions& options, Rng& rng);

/**
 * Sample where element x stands for weights[x] indistinguishable copies; copies
 * are drawn uniformly without replacement, so an element can repeat.
 */
NetSchedule make_weighted_net_schedule(std::size_t num_edges, std::span<const std::uint64_t> weights,
                                       const OrderOptions& options, Rng& rng);

struct TreeEdge {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  bool primary = true;

  friend bool operator==(const TreeEdge&, const TreeEdge&) = default;
};

/**
 * Splits the hyperedge set by membership of each sampled element in turn,
 * adding one primary edge per real split, then chains the members of each
 * surviving part in ascending id order with secondary edges.
 */
std::vector<TreeEdge> build_spanning_tree_from_sample(const MembershipOracle& membership,
                                                      std::size_t num_edges,
                                                      std::span<const std::uint32_t> sample);

std::vector<TreeEdge> build_spanning_tree(const MembershipOracle& membership, std::size_t num_edges,
                                          std::size_t num_elements, const OrderOptions& options,
                                          Rng& rng);

/// A permutation of hyperedge (or vertex) ids.
struct EdgeOrder {
  std::vector<std::uint32_t> order;
  std::optional<std::uint64_t> total_difference;

  bool is_permutation() const;
};

/// Full closed walk of a depth-first traversal: 2n - 1 entries for n nodes.
std::vector<std::uint32_t> euler_tour(std::span<const TreeEdge> tree, std::size_t num_nodes,
                                      std::uint32_t root);

/// Euler tour pruned to first visits. Throws InputError unless `tree` is a tree.
EdgeOrder euler_order(std::span<const TreeEdge> tree, std::size_t num_nodes, std::uint32_t root = 0);

/// Low-difference order of a hypergraph given by its membership oracle.
EdgeOrder order_hyperedges(const MembershipOracle& membership, std::size_t num_edges,
                           std::size_t num_elements, const OrderOptions& options, Rng& rng);

EdgeOrder order_hyperedges_weighted(const MembershipOracle& membership, std::size_t num_edges,
                                    std::span<const std::uint64_t> weights,
                                    const OrderOptions& options, Rng& rng);

/// Vertex order with small sum of |N^k[v_i] (+) N^k[v_i+1]|.
EdgeOrder order_by_k_neighborhoods(const Graph& g, std::uint32_t k, const OrderOptions& options,
                                   Rng& rng);

/// Vertex order with small sum of weight(x) * |I(N^k[x])|. Weights must be >= 1.
EdgeOrder weighted_order(const Graph& g, std::uint32_t k, std::span<const std::uint64_t> weights,
                         const OrderOptions& options, Rng& rng);

std::uint64_t symmetric_difference_size(std::span<const Vertex> a, std::span<const Vertex> b);

/// Sum of symmetric-difference sizes between consecutive sets along `order`.
std::uint64_t total_difference(std::span<const std::uint32_t> order,
                               const std::function<VertexSet(std::uint32_t)>& set_of);

/// total_difference for ball sets N^k[v] along a vertex order.
std::uint64_t ball_total_difference(const Graph& g, std::uint32_t k,
                                    std::span<const std::uint32_t> order);

}  // namespace kdiam

#endif  // KDIAM_HYPERGRAPH_ORDER_HPP
