#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "helpers.hpp"
#include "kdiam/error.hpp"
#include "kdiam/explicit_diameter.hpp"
#include "kdiam/generators.hpp"

namespace kdiam {
namespace {

using testing::complete_graph;
using testing::cycle_graph;
using testing::path_graph;

BallEncoding encoding_from_oracle(const Graph& g, std::uint32_t r, std::vector<Vertex> order) {
  BallEncoding enc;
  enc.radius = r;
  enc.order = std::move(order);
  auto pos = positions_of(enc.order);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::vector<Position> p;
    for (Vertex u : neighborhood(g, v, r)) p.push_back(pos[u]);
    enc.reps.push_back(canonicalize(p));
  }
  return enc;
}

ExplicitOptions opts_with_d(int d) {
  ExplicitOptions o;
  o.order.d = d;
  return o;
}

TEST(EncodingTest, TrivialEncodingDecodesToSingletons) {
  auto enc = trivial_encoding(4);
  for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(decode(enc, v), (VertexSet{v}));
}

TEST(RebaseTest, IdentityReorderKeepsRepresentations) {
  auto g = path_graph(6);
  std::vector<Vertex> id{0, 1, 2, 3, 4, 5};
  auto enc = encoding_from_oracle(g, 1, id);
  EXPECT_EQ(rebase(enc.reps, id, id), enc.reps);
}

TEST(RebaseTest, CompleteGraphIsOneFullInterval) {
  auto g = complete_graph(3);
  auto enc = encoding_from_oracle(g, 1, {0, 1, 2});
  std::vector<Vertex> order{2, 0, 1};
  for (const auto& rep : rebase(enc.reps, enc.order, order)) {
    EXPECT_EQ(rep.intervals(), (std::vector<Interval>{{0, 2}}));
  }
}

TEST(RebaseTest, RandomReordersPreserveDecoding) {
  Rng rng(1);
  for (int t = 0; t < 30; ++t) {
    Graph g = t < 5 ? path_graph(5) : random_connected_graph(20, 35, rng);
    std::vector<Vertex> a(g.vertex_count()), b(g.vertex_count());
    std::iota(a.begin(), a.end(), 0U);
    std::iota(b.begin(), b.end(), 0U);
    std::shuffle(a.begin(), a.end(), rng);
    std::shuffle(b.begin(), b.end(), rng);
    const std::uint32_t r = 1 + t % 3;
    auto enc = encoding_from_oracle(g, r, a);
    auto reps = rebase(enc.reps, a, b);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      EXPECT_TRUE(is_canonical(reps[v].intervals()));
      EXPECT_EQ(decode(reps[v], b), neighborhood(g, v, r));
    }
  }
}

TEST(RebaseTest, SizeMismatchRejected) {
  auto enc = trivial_encoding(3);
  std::vector<Vertex> shorter{0, 1};
  EXPECT_THROW(rebase(enc.reps, enc.order, shorter), InputError);
}

TEST(ExpandStepTest, Examples) {
  Rng rng(2);
  auto k3 = complete_graph(3);
  auto e = expand_step(k3, trivial_encoding(3), opts_with_d(2), rng);
  for (const auto& rep : e.reps) EXPECT_EQ(rep.intervals(), (std::vector<Interval>{{0, 2}}));

  auto p4 = path_graph(4);
  e = expand_step(p4, trivial_encoding(4), opts_with_d(2), rng);
  for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(decode(e, v), neighborhood(p4, v, 1));

  auto c5 = cycle_graph(5);
  e = expand_step(c5, expand_step(c5, trivial_encoding(5), opts_with_d(2), rng), opts_with_d(2), rng);
  EXPECT_EQ(e.radius, 2u);
  for (Vertex v = 0; v < 5; ++v) EXPECT_EQ(decode(e, v), (VertexSet{0, 1, 2, 3, 4}));
}

// Decoding, canonicality and monotonicity after every step.
TEST(ExpandStepTest, InvariantsOnRandomGraphs) {
  Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    Graph g = random_connected_graph(30, 45, rng);
    auto enc = trivial_encoding(30);
    for (std::uint32_t r = 1; r <= 5; ++r) {
      auto next = expand_step(g, enc, opts_with_d(3), rng);
      EXPECT_EQ(audit_encoding(g, next), 0u);
      for (Vertex v = 0; v < 30; ++v) {
        EXPECT_TRUE(is_canonical(next.reps[v].intervals()));
        auto prev = decode(enc, v);
        auto cur = decode(next, v);
        EXPECT_TRUE(std::includes(cur.begin(), cur.end(), prev.begin(), prev.end()));
      }
      enc = std::move(next);
    }
  }
}

TEST(KDiameterExplicitTest, Examples) {
  Rng rng(4);
  EXPECT_TRUE(k_diameter_explicit(complete_graph(3), 1, opts_with_d(2), rng));
  EXPECT_FALSE(k_diameter_explicit(path_graph(5), 2, opts_with_d(2), rng));
  EXPECT_TRUE(k_diameter_explicit(path_graph(5), 4, opts_with_d(2), rng));
  EXPECT_TRUE(k_diameter_explicit(path_graph(1), 1, opts_with_d(2), rng));
  EXPECT_THROW(k_diameter_explicit(path_graph(3), 0, opts_with_d(2), rng), InputError);
  std::vector<Edge> e{{0, 1}};
  EXPECT_THROW(k_diameter_explicit(Graph(3, e), 1, opts_with_d(2), rng), DisconnectedGraphError);
}

TEST(KDiameterExplicitTest, MatchesNaive) {
  Rng rng(5);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 2 + rng() % 30;
    const std::size_t m = std::min(n * (n - 1) / 2, n - 1 + rng() % (2 * n));
    Graph g = random_connected_graph(n, m, rng);
    for (std::uint32_t k = 1; k <= 5; ++k) {
      ExplicitOptions o = opts_with_d(2 + t % 3);
      o.freeze_order = t % 4 == 0;
      o.audit = true;
      ExplicitStats stats;
      EXPECT_EQ(k_diameter_explicit(g, k, o, rng, &stats), k_diameter_naive(g, k));
      EXPECT_EQ(stats.audit_violations, 0u);
    }
  }
}

TEST(KDiameterExplicitTest, AnswerIndependentOfSeed) {
  Rng gen(6);
  Graph g = random_connected_graph(40, 60, gen);
  const bool expect = k_diameter_naive(g, 4);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Rng rng(seed);
    EXPECT_EQ(k_diameter_explicit(g, 4, opts_with_d(4), rng), expect);
  }
}

}  // namespace
}  // namespace kdiam
