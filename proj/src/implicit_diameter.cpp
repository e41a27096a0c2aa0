#include "kdiam/implicit_diameter.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "kdiam/error.hpp"

namespace kdiam {

DeltaEncoding trivial_delta_encoding(std::span<const Vertex> order) {
  DeltaEncoding enc;
  enc.order.assign(order.begin(), order.end());
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i == 0) {
      enc.deltas.push_back({order[0]});
    } else {
      enc.deltas.push_back({std::min(order[i - 1], order[i]), std::max(order[i - 1], order[i])});
    }
  }
  return enc;
}

VertexSet reconstruct_prefix(const DeltaEncoding& enc, std::size_t i) {
  VertexSet acc;
  VertexSet next;
  for (std::size_t j = 0; j <= i && j < enc.deltas.size(); ++j) {
    next.clear();
    std::set_symmetric_difference(acc.begin(), acc.end(), enc.deltas[j].begin(),
                                  enc.deltas[j].end(), std::back_inserter(next));
    acc.swap(next);
  }
  return acc;
}

std::uint64_t expand_cost_bound(std::uint64_t a, std::uint64_t b, std::uint64_t t) {
  std::uint64_t log = 0;
  while ((std::uint64_t{1} << log) < t) ++log;
  return a + 3 * b * (log + 1) + 2 * t;
}

namespace {

class BallExpander {
 public:
  BallExpander(std::span<const VertexSet> deltas, NeighbourSetStructure& nsds, ExpandStats* stats)
      : deltas_(deltas), nsds_(nsds), stats_(stats), stamp_(nsds.vertex_count(), 0),
        parity_(nsds.vertex_count(), 0), prefix_(deltas.size() + 1, 0), out_(deltas.size()) {
    for (std::size_t i = 0; i < deltas.size(); ++i) {
      for (Vertex x : deltas[i]) {
        if (x >= nsds.vertex_count()) throw InputError("delta vertex out of range");
      }
      prefix_[i + 1] = prefix_[i] + deltas[i].size();
    }
  }

  std::vector<SetHandle> run() {
    recurse(kEmptySet, deltas_[0], 0, deltas_.size());
    return std::move(out_);
  }

 private:
  // Sets are `first`, deltas_[lo+1], ..., deltas_[hi-1].
  void recurse(SetHandle base, const VertexSet& first, std::size_t lo, std::size_t hi) {
    const std::size_t t = hi - lo;
    if (stats_) {
      ++stats_->calls;
      stats_->cost += t + first.size() + (prefix_[hi] - prefix_[lo + 1]);
    }
    ++epoch_;
    for (std::size_t i = lo + 1; i < hi; ++i) {
      for (Vertex x : deltas_[i]) stamp_[x] = epoch_;
    }
    VertexSet reduced;
    for (Vertex v : first) {
      if (stamp_[v] == epoch_) {
        reduced.push_back(v);
      } else {
        base = nsds_.add_neighbours(base, v);
        if (stats_) ++stats_->add_neighbours;
      }
    }
    if (t == 1) {
      out_[lo] = base;
      return;
    }
    const std::size_t m = t / 2 + 1;  // 1-based start of the right half
    const std::size_t split = lo + m - 1;

    // D'_m = D'_1 xor D_2 xor ... xor D_m
    VertexSet touched;
    auto toggle = [&](Vertex x) {
      if (!touched_flag(x)) touched.push_back(x);
      parity_[x] ^= 1;
    };
    touched_epoch_ = ++epoch_;
    for (Vertex x : reduced) toggle(x);
    for (std::size_t i = lo + 1; i <= split; ++i) {
      for (Vertex x : deltas_[i]) toggle(x);
    }
    VertexSet right_first;
    for (Vertex x : touched) {
      if (parity_[x]) right_first.push_back(x);
      parity_[x] = 0;
    }
    std::sort(right_first.begin(), right_first.end());

    recurse(base, reduced, lo, split);
    recurse(base, right_first, split, hi);
  }

  bool touched_flag(Vertex x) {
    if (stamp_[x] == touched_epoch_) return true;
    stamp_[x] = touched_epoch_;
    return false;
  }

  std::span<const VertexSet> deltas_;
  NeighbourSetStructure& nsds_;
  ExpandStats* stats_;
  std::vector<std::uint64_t> stamp_;
  std::vector<std::uint8_t> parity_;
  std::vector<std::uint64_t> prefix_;
  std::vector<SetHandle> out_;
  std::uint64_t epoch_ = 0;
  std::uint64_t touched_epoch_ = 0;
};

}  // namespace

std::vector<SetHandle> expand_balls(std::span<const VertexSet> deltas, NeighbourSetStructure& nsds,
                                    ExpandStats* stats) {
  if (deltas.empty()) throw InputError("expand_balls needs at least one set");
  return BallExpander(deltas, nsds, stats).run();
}

BfsResult simulate_bfs(NeighbourSetStructure& nsds, Vertex v, std::uint32_t r) {
  const std::size_t n = nsds.vertex_count();
  if (v >= n) throw InputError("vertex " + std::to_string(v) + " out of range");
  BfsResult result;
  result.dist.assign(n, kUnreachable);
  result.dist[v] = 0;
  std::deque<Vertex> queue{v};
  SetHandle explored = kEmptySet;
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    if (result.dist[x] >= r) continue;
    const SetHandle grown = nsds.add_neighbours(explored, x);
    for (Vertex w : nsds.list_differences(explored, grown)) {
      if (w == v) continue;
      result.dist[w] = result.dist[x] + 1;
      queue.push_back(w);
    }
    explored = grown;
  }
  for (Vertex x = 0; x < n; ++x) {
    if (result.dist[x] <= r) result.ball.push_back(x);
  }
  return result;
}

DeltaEncoding implicit_step(const DeltaEncoding& enc, NeighbourSetStructure& nsds,
                            const ImplicitOptions& options, Rng& rng, ImplicitStats* stats) {
  const std::size_t n = nsds.vertex_count();
  if (enc.order.size() != n || enc.deltas.size() != n) {
    throw InputError("encoding does not match the structure");
  }
  const std::uint32_t r = enc.radius + 1;

  // 1. handles[j] denotes N^r[enc.order[j]].
  ExpandStats local;
  auto handles = expand_balls(enc.deltas, nsds, &local);

  // 2. new order; x lies in N^r[v] iff v lies in N^r[x].
  DeltaEncoding next;
  next.radius = r;
  if (n <= 1) {
    next.order = enc.order;
  } else {
    MembershipOracle oracle = [&](std::uint32_t x) { return simulate_bfs(nsds, x, r).ball; };
    next.order = order_hyperedges(oracle, n, n, options.order, rng).order;
  }

  // 3. pi maps new positions to old ones.
  std::vector<std::size_t> old_pos(n);
  for (std::size_t j = 0; j < n; ++j) old_pos[enc.order[j]] = j;
  std::vector<std::size_t> pi(n);
  for (std::size_t i = 0; i < n; ++i) pi[i] = old_pos[next.order[i]];

  // 4. deltas from consecutive handles.
  next.deltas.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    next.deltas.push_back(nsds.list_differences(i == 0 ? kEmptySet : handles[pi[i - 1]], handles[pi[i]]));
  }

  if (stats) {
    std::uint64_t a = enc.deltas[0].size();
    std::uint64_t b = 0;
    for (std::size_t i = 1; i < n; ++i) b += enc.deltas[i].size();
    ++stats->steps;
    stats->expand.calls += local.calls;
    stats->expand.cost += local.cost;
    stats->expand.add_neighbours += local.add_neighbours;
    stats->expand_bound += expand_cost_bound(a, b, n);
    std::uint64_t total = 0;
    for (const auto& d : next.deltas) total += d.size();
    stats->delta_totals.push_back(total);

    if (options.audit) {
      Rng audit_rng(options.audit_seed + r);
      std::bernoulli_distribution pick(0.1);
      std::vector<std::uint8_t> in_ball(n, 0);
      for (std::size_t i = 0; i < n; ++i) {
        for (Vertex x : next.deltas[i]) in_ball[x] ^= 1;
        if (!pick(audit_rng) && i != 0) continue;
        VertexSet prefix;
        for (Vertex x = 0; x < n; ++x) {
          if (in_ball[x]) prefix.push_back(x);
        }
        ++stats->audit_checks;
        if (prefix != simulate_bfs(nsds, next.order[i], r).ball) ++stats->audit_violations;
      }
    }
  }
  return next;
}

bool k_diameter_implicit(const NsdsFactory& factory, std::size_t n, std::uint32_t k,
                         const ImplicitOptions& options, Rng& rng, ImplicitStats* stats) {
  if (k < 1) throw InputError("k must be >= 1");
  if (options.order.d < 2) throw InputError("d must be >= 2");
  if (n == 0) throw InputError("graph has no vertices");

  std::vector<Vertex> identity(n);
  std::iota(identity.begin(), identity.end(), Vertex{0});
  DeltaEncoding enc = trivial_delta_encoding(identity);
  if (stats) stats->delta_totals.push_back(2 * n - 1);

  for (std::uint32_t r = 0; r < k; ++r) {
    auto nsds = factory();
    if (!nsds || nsds->vertex_count() != n) throw InputError("factory produced a mismatched structure");
    enc = implicit_step(enc, *nsds, options, rng, stats);
    if (r + 2 >= n) break;
  }
  if (enc.deltas[0].size() != n) return false;
  return std::all_of(enc.deltas.begin() + 1, enc.deltas.end(),
                     [](const VertexSet& d) { return d.empty(); });
}

}  // namespace kdiam
