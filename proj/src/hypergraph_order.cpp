#include "kdiam/hypergraph_order.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "kdiam/error.hpp"

namespace kdiam {

namespace {

void fill_prefix_schedule(NetSchedule& schedule, std::size_t ground_size, double alpha) {
  schedule.sample_size = schedule.sample.size();
  schedule.alpha = alpha;
  schedule.prefix_sizes.clear();
  for (std::size_t s = schedule.sample_size; s >= 1; s /= 2) schedule.prefix_sizes.push_back(s);
  if (schedule.sample_size > 0 && ground_size > 1) {
    schedule.epsilon = 2.0 * alpha * std::log2(static_cast<double>(ground_size)) /
                       static_cast<double>(schedule.sample_size);
  } else {
    schedule.epsilon = 0.0;
  }
}

void check_options(const OrderOptions& options) {
  if (options.d < 2) throw InputError("VC-dimension parameter d must be >= 2");
  if (!(options.alpha > 0)) throw InputError("net constant alpha must be positive");
}

}  // namespace

std::size_t net_sample_size(std::size_t num_edges, int d) {
  if (d < 1) throw InputError("d must be positive");
  std::size_t s = 1;
  auto power_reaches = [&](std::size_t base) {
    long double acc = 1;
    for (int i = 0; i < d; ++i) acc *= static_cast<long double>(base);
    return acc >= static_cast<long double>(num_edges);
  };
  while (!power_reaches(s)) ++s;
  return s;
}

NetSchedule make_net_schedule(std::size_t num_edges, std::size_t num_elements,
                              const OrderOptions& options, Rng& rng) {
  check_options(options);
  const std::size_t s = std::min(net_sample_size(num_edges, options.d), num_elements);
  std::vector<std::uint32_t> pool(num_elements);
  std::iota(pool.begin(), pool.end(), 0U);
  // partial Fisher-Yates
  for (std::size_t i = 0; i < s; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, num_elements - 1);
    std::swap(pool[i], pool[pick(rng)]);
  }
  NetSchedule schedule;
  schedule.sample.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(s));
  fill_prefix_schedule(schedule, num_elements, options.alpha);
  return schedule;
}

NetSchedule make_weighted_net_schedule(std::size_t num_edges, std::span<const std::uint64_t> weights,
                                       const OrderOptions& options, Rng& rng) {
  check_options(options);
  std::uint64_t total = 0;
  for (auto w : weights) {
    if (w == 0) throw InputError("vertex weights must be positive");
    total += w;
  }
  std::vector<std::uint64_t> remaining(weights.begin(), weights.end());
  const std::size_t s = static_cast<std::size_t>(
      std::min<std::uint64_t>(net_sample_size(num_edges, options.d), total));
  NetSchedule schedule;
  for (std::size_t i = 0; i < s; ++i) {
    std::uniform_int_distribution<std::uint64_t> pick(0, total - 1);
    std::uint64_t r = pick(rng);
    std::size_t x = 0;
    while (r >= remaining[x]) r -= remaining[x++];
    --remaining[x];
    --total;
    schedule.sample.push_back(static_cast<std::uint32_t>(x));
  }
  std::uint64_t ground = 0;
  for (auto w : weights) ground += w;
  fill_prefix_schedule(schedule, static_cast<std::size_t>(ground), options.alpha);
  return schedule;
}

std::vector<TreeEdge> build_spanning_tree_from_sample(const MembershipOracle& membership,
                                                      std::size_t num_edges,
                                                      std::span<const std::uint32_t> sample) {
  if (num_edges == 0) throw InputError("hypergraph has no hyperedges");
  std::vector<std::uint32_t> component(num_edges, 0);
  std::vector<std::vector<std::uint32_t>> members(1);
  members[0].resize(num_edges);
  std::iota(members[0].begin(), members[0].end(), 0U);

  std::vector<TreeEdge> tree;
  std::vector<std::size_t> hit_stamp(num_edges, 0);
  std::vector<std::size_t> in_count;
  std::vector<std::uint32_t> touched;

  for (std::size_t step = 0; step < sample.size(); ++step) {
    const std::size_t stamp = step + 1;
    in_count.assign(members.size(), 0);
    touched.clear();
    for (std::uint32_t e : membership(sample[step])) {
      if (e >= num_edges) throw InputError("membership oracle returned an invalid hyperedge id");
      if (hit_stamp[e] == stamp) continue;
      hit_stamp[e] = stamp;
      const std::uint32_t c = component[e];
      if (in_count[c]++ == 0) touched.push_back(c);
    }
    for (std::uint32_t c : touched) {
      if (in_count[c] == members[c].size()) continue;  // not a real split
      std::vector<std::uint32_t> inside;
      std::vector<std::uint32_t> outside;
      inside.reserve(in_count[c]);
      outside.reserve(members[c].size() - in_count[c]);
      for (std::uint32_t e : members[c]) (hit_stamp[e] == stamp ? inside : outside).push_back(e);
      const auto fresh = static_cast<std::uint32_t>(members.size());
      for (std::uint32_t e : inside) component[e] = fresh;
      tree.push_back({outside.front(), inside.front(), true});
      members[c] = std::move(outside);
      members.push_back(std::move(inside));
    }
  }

  // Primary edges already link the parts; hyperedges the sample never separated are
  // chained inside their part in ascending id order.
  for (const auto& m : members) {
    for (std::size_t i = 1; i < m.size(); ++i) tree.push_back({m[i - 1], m[i], false});
  }
  return tree;
}

std::vector<TreeEdge> build_spanning_tree(const MembershipOracle& membership, std::size_t num_edges,
                                          std::size_t num_elements, const OrderOptions& options,
                                          Rng& rng) {
  if (num_edges == 0) throw InputError("hypergraph has no hyperedges");
  auto schedule = make_net_schedule(num_edges, num_elements, options, rng);
  return build_spanning_tree_from_sample(membership, num_edges, schedule.sample);
}

bool EdgeOrder::is_permutation() const {
  std::vector<char> seen(order.size(), 0);
  for (auto v : order) {
    if (v >= order.size() || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

namespace {

std::vector<std::vector<std::uint32_t>> tree_adjacency(std::span<const TreeEdge> tree,
                                                       std::size_t num_nodes, std::uint32_t root) {
  if (num_nodes == 0) throw InputError("tree has no nodes");
  if (root >= num_nodes) throw InputError("tree root out of range");
  if (tree.size() != num_nodes - 1) throw InputError("edge count does not match a tree");
  std::vector<std::uint32_t> parent(num_nodes);
  std::iota(parent.begin(), parent.end(), 0U);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::vector<std::uint32_t>> adj(num_nodes);
  for (const auto& e : tree) {
    if (e.a >= num_nodes || e.b >= num_nodes) throw InputError("tree edge endpoint out of range");
    auto ra = find(e.a);
    auto rb = find(e.b);
    if (ra == rb) throw InputError("edges contain a cycle");
    parent[ra] = rb;
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

}  // namespace

std::vector<std::uint32_t> euler_tour(std::span<const TreeEdge> tree, std::size_t num_nodes,
                                      std::uint32_t root) {
  auto adj = tree_adjacency(tree, num_nodes, root);
  std::vector<std::uint32_t> walk;
  walk.reserve(2 * num_nodes - 1);
  struct Frame {
    std::uint32_t node;
    std::uint32_t parent;
    std::size_t next;
  };
  constexpr std::uint32_t kNoParent = std::numeric_limits<std::uint32_t>::max();
  std::vector<Frame> stack{{root, kNoParent, 0}};
  walk.push_back(root);
  while (!stack.empty()) {
    auto& top = stack.back();
    if (top.next < adj[top.node].size()) {
      const std::uint32_t child = adj[top.node][top.next++];
      if (child == top.parent) continue;
      stack.push_back({child, top.node, 0});
      walk.push_back(child);
    } else {
      stack.pop_back();
      if (!stack.empty()) walk.push_back(stack.back().node);
    }
  }
  return walk;
}

EdgeOrder euler_order(std::span<const TreeEdge> tree, std::size_t num_nodes, std::uint32_t root) {
  auto walk = euler_tour(tree, num_nodes, root);
  EdgeOrder out;
  std::vector<char> seen(num_nodes, 0);
  for (auto v : walk) {
    if (!seen[v]) {
      seen[v] = 1;
      out.order.push_back(v);
    }
  }
  return out;
}

EdgeOrder order_hyperedges(const MembershipOracle& membership, std::size_t num_edges,
                           std::size_t num_elements, const OrderOptions& options, Rng& rng) {
  auto tree = build_spanning_tree(membership, num_edges, num_elements, options, rng);
  return euler_order(tree, num_edges, 0);
}

EdgeOrder order_hyperedges_weighted(const MembershipOracle& membership, std::size_t num_edges,
                                    std::span<const std::uint64_t> weights,
                                    const OrderOptions& options, Rng& rng) {
  if (num_edges == 0) throw InputError("hypergraph has no hyperedges");
  auto schedule = make_weighted_net_schedule(num_edges, weights, options, rng);
  auto tree = build_spanning_tree_from_sample(membership, num_edges, schedule.sample);
  return euler_order(tree, num_edges, 0);
}

EdgeOrder order_by_k_neighborhoods(const Graph& g, std::uint32_t k, const OrderOptions& options,
                                   Rng& rng) {
  if (k < 1) throw InputError("k must be >= 1");
  BallScanner scanner(g);
  // x lies in N^k[v] iff v lies in N^k[x]
  MembershipOracle oracle = [&](std::uint32_t x) { return scanner.ball(x, k); };
  return order_hyperedges(oracle, g.vertex_count(), g.vertex_count(), options, rng);
}

EdgeOrder weighted_order(const Graph& g, std::uint32_t k, std::span<const std::uint64_t> weights,
                         const OrderOptions& options, Rng& rng) {
  if (weights.size() != g.vertex_count()) throw InputError("one weight per vertex is required");
  BallScanner scanner(g);
  MembershipOracle oracle = [&](std::uint32_t x) { return scanner.ball(x, k); };
  return order_hyperedges_weighted(oracle, g.vertex_count(), weights, options, rng);
}

std::uint64_t symmetric_difference_size(std::span<const Vertex> a, std::span<const Vertex> b) {
  std::uint64_t common = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++common;
      ++i;
      ++j;
    }
  }
  return a.size() + b.size() - 2 * common;
}

std::uint64_t total_difference(std::span<const std::uint32_t> order,
                               const std::function<VertexSet(std::uint32_t)>& set_of) {
  std::uint64_t sum = 0;
  VertexSet previous;
  for (std::size_t i = 0; i < order.size(); ++i) {
    VertexSet current = set_of(order[i]);
    if (i > 0) sum += symmetric_difference_size(previous, current);
    previous = std::move(current);
  }
  return sum;
}

std::uint64_t ball_total_difference(const Graph& g, std::uint32_t k,
                                    std::span<const std::uint32_t> order) {
  BallScanner scanner(g);
  return total_difference(order, [&](std::uint32_t v) { return scanner.ball(v, k); });
}

}  // namespace kdiam
