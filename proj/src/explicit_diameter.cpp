#include "kdiam/explicit_diameter.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "kdiam/error.hpp"

namespace kdiam {

BallEncoding trivial_encoding(std::size_t vertex_count) {
  BallEncoding enc;
  enc.order.resize(vertex_count);
  std::iota(enc.order.begin(), enc.order.end(), Vertex{0});
  enc.reps.reserve(vertex_count);
  for (std::size_t v = 0; v < vertex_count; ++v) {
    auto p = static_cast<Position>(v);
    enc.reps.push_back(IntervalSet::from_canonical({{p, p}}));
  }
  return enc;
}

VertexSet decode(const IntervalSet& rep, std::span<const Vertex> order) {
  VertexSet out;
  out.reserve(rep.cardinality());
  for (const auto& iv : rep.intervals()) {
    if (iv.last >= order.size()) throw InputError("interval exceeds the order length");
    for (std::size_t p = iv.first; p <= iv.last; ++p) out.push_back(order[p]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet decode(const BallEncoding& enc, Vertex v) { return decode(enc.reps.at(v), enc.order); }

std::vector<Position> positions_of(std::span<const Vertex> order) {
  constexpr Position kUnset = std::numeric_limits<Position>::max();
  std::vector<Position> pos(order.size(), kUnset);
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] >= order.size() || pos[order[i]] != kUnset) {
      throw InputError("order is not a permutation");
    }
    pos[order[i]] = static_cast<Position>(i);
  }
  return pos;
}

std::vector<IntervalSet> rebase(std::span<const IntervalSet> reps_old,
                                std::span<const Vertex> order_old,
                                std::span<const Vertex> order_new) {
  const std::size_t n = reps_old.size();
  if (order_old.size() != n || order_new.size() != n) {
    throw InputError("representation count does not match the order length");
  }
  positions_of(order_old);
  positions_of(order_new);

  std::vector<std::vector<Position>> opens(n);
  std::vector<std::vector<Position>> closes(n);
  auto emit = [&](const IntervalSet& diff, std::vector<std::vector<Position>>& target, Position i) {
    for (const auto& iv : diff.intervals()) {
      for (std::size_t p = iv.first; p <= iv.last; ++p) target[order_old[p]].push_back(i);
    }
  };
  const IntervalSet none;
  for (std::size_t i = 0; i < n; ++i) {
    const IntervalSet& here = reps_old[order_new[i]];
    const IntervalSet& before = i == 0 ? none : reps_old[order_new[i - 1]];
    const IntervalSet& after = i + 1 == n ? none : reps_old[order_new[i + 1]];
    emit(i == 0 ? here : set_difference(here, before), opens, static_cast<Position>(i));
    emit(i + 1 == n ? here : set_difference(here, after), closes, static_cast<Position>(i));
  }

  std::vector<IntervalSet> out;
  out.reserve(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (opens[x].size() != closes[x].size()) throw InputError("inconsistent representations");
    std::vector<Interval> ivs(opens[x].size());
    for (std::size_t j = 0; j < ivs.size(); ++j) ivs[j] = {opens[x][j], closes[x][j]};
    out.push_back(IntervalSet::from_canonical(std::move(ivs)));
  }
  return out;
}

BallEncoding expand_step(const Graph& g, const BallEncoding& enc, const ExplicitOptions& options,
                         Rng& rng, ExplicitStats* stats) {
  const std::size_t n = g.vertex_count();
  if (enc.reps.size() != n || enc.order.size() != n) {
    throw InputError("encoding does not match the graph");
  }

  // Step 1: N^r[v] is the union of N^(r-1)[x] over x in N[v].
  std::vector<IntervalSet> grown;
  grown.reserve(n);
  std::vector<const IntervalSet*> parts;
  for (Vertex v = 0; v < n; ++v) {
    parts.assign(1, &enc.reps[v]);
    for (Vertex u : g.neighbors(v)) parts.push_back(&enc.reps[u]);
    if (stats) {
      for (auto* p : parts) stats->union_input_intervals += p->size();
    }
    grown.push_back(union_sweep(std::span<const IntervalSet* const>(parts)));
  }

  // Step 2: order the new balls; x lies in N^r[v] iff v lies in N^r[x].
  BallEncoding next;
  next.radius = enc.radius + 1;
  if (options.freeze_order || n <= 1) {
    next.order = enc.order;
  } else {
    std::vector<std::uint64_t> weights(n);
    for (Vertex v = 0; v < n; ++v) weights[v] = g.degree(v) + 1;
    MembershipOracle oracle = [&](std::uint32_t x) { return decode(grown[x], enc.order); };
    next.order = order_hyperedges_weighted(oracle, n, weights, options.order, rng).order;
  }

  // Step 3.
  next.reps = rebase(grown, enc.order, next.order);
  if (stats) {
    ++stats->steps;
    stats->interval_total = 0;
    for (const auto& r : next.reps) {
      stats->rebase_endpoints += 2 * r.size();
      stats->interval_total += r.size();
    }
    if (options.audit) {
      stats->audit_checks += n;
      stats->audit_violations += audit_encoding(g, next);
    }
  }
  return next;
}

bool k_diameter_explicit(const Graph& g, std::uint32_t k, const ExplicitOptions& options, Rng& rng,
                         ExplicitStats* stats) {
  if (k < 1) throw InputError("k must be >= 1");
  if (options.order.d < 2) throw InputError("d must be >= 2");
  const std::size_t n = g.vertex_count();
  if (n == 0) throw InputError("graph has no vertices");
  if (!g.is_connected()) throw DisconnectedGraphError();

  BallEncoding enc = trivial_encoding(n);
  for (std::uint32_t r = 0; r < k; ++r) {
    enc = expand_step(g, enc, options, rng, stats);
    if (r + 2 >= n) break;  // radius n-1 already covers a connected graph
  }
  const Interval full{0, static_cast<Position>(n - 1)};
  return std::all_of(enc.reps.begin(), enc.reps.end(), [&](const IntervalSet& rep) {
    return rep.size() == 1 && rep.intervals().front() == full;
  });
}

std::size_t audit_encoding(const Graph& g, const BallEncoding& enc) {
  std::size_t bad = 0;
  BallScanner scanner(g);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto& rep = enc.reps[v];
    if (!is_canonical(rep.intervals()) || decode(rep, enc.order) != scanner.ball(v, enc.radius)) ++bad;
  }
  return bad;
}

}  // namespace kdiam
