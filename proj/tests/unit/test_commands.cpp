#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>
#include <string>

#include "kdiam/commands.hpp"
#include "kdiam/error.hpp"
#include "kdiam/io.hpp"

namespace kdiam {
namespace {

const std::string kData = KDIAM_TEST_DATA_DIR;

std::string gen_text(GenOptions o) {
  std::ostringstream out;
  cmd_gen(o, out);
  return out.str();
}

std::size_t line_count(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

TEST(GenTest, SquaresFileShapeAndDeterminism) {
  GenOptions o;
  o.kind = "unit-squares";
  o.n = 10;
  o.box = 5;
  o.seed = 1;
  const auto a = gen_text(o);
  EXPECT_EQ(line_count(a), 10u);
  EXPECT_EQ(a, gen_text(o));
  o.seed = 2;
  EXPECT_NE(a, gen_text(o));
}

TEST(GenTest, SparseGraphIsConnected) {
  GenOptions o;
  o.kind = "sparse-graph";
  o.n = 20;
  o.m = 30;
  o.seed = 2;
  std::istringstream in(gen_text(o));
  Graph g = read_edge_list(in);
  EXPECT_EQ(g.vertex_count(), 20u);
  EXPECT_EQ(g.edge_count(), 30u);
  EXPECT_TRUE(g.is_connected());
}

TEST(GenTest, PolygonPointsWritesShape) {
  GenOptions o;
  o.kind = "polygon-points";
  o.n = 15;
  o.box = 3;
  o.connected = true;
  std::ostringstream pts, poly;
  cmd_gen(o, pts, &poly);
  std::istringstream pin(poly.str());
  EXPECT_EQ(read_polygon(pin).sides(), 5);
  o.kind = "triangles";
  EXPECT_THROW(gen_text(o), InputError);
}

TEST(DiamTest, Examples) {
  DiamOptions o;
  o.algo = "naive";
  o.k = 1;
  EXPECT_TRUE(run_algorithm(load_instance(kData + "/k3.edges"), o).answer);

  o.algo = "explicit";
  o.k = 4;
  o.d = 2;
  const auto p5 = load_instance(kData + "/p5.edges");
  auto rep = run_algorithm(p5, o);
  EXPECT_TRUE(rep.answer);
  EXPECT_GT(rep.counters.at("interval_total"), 0u);
  o.k = 3;
  EXPECT_FALSE(run_algorithm(p5, o).answer);

  o.algo = "implicit-naive";
  EXPECT_FALSE(run_algorithm(p5, o).answer);
}

TEST(DiamTest, ImplicitOnPoints) {
  const auto chain = load_instance(kData + "/chain_squares.csv");
  ASSERT_TRUE(chain.geometric);
  DiamOptions o;
  o.algo = "implicit";
  o.k = 2;
  auto rep = run_algorithm(chain, o);
  EXPECT_TRUE(rep.answer);
  EXPECT_EQ(rep.d, 4);
  EXPECT_GT(rep.counters.at("nodes_visited"), 0u);
  o.k = 1;
  EXPECT_FALSE(run_algorithm(chain, o).answer);

  const auto hex = load_instance(kData + "/hex_points.csv", kData + "/hexagon.poly");
  for (std::uint32_t k = 1; k <= 4; ++k) {
    o.k = k;
    o.algo = "naive";
    const bool expect = run_algorithm(hex, o).answer;
    o.algo = "implicit";
    EXPECT_EQ(run_algorithm(hex, o).answer, expect);
  }
}

TEST(DiamTest, UsageErrors) {
  const auto k3 = load_instance(kData + "/k3.edges");
  DiamOptions o;
  o.algo = "implicit";
  o.d = 2;
  EXPECT_THROW(run_algorithm(k3, o), InputError);
  o.algo = "explicit";
  o.d = 0;
  EXPECT_THROW(run_algorithm(k3, o), InputError);
  o.algo = "quantum";
  EXPECT_THROW(run_algorithm(k3, o), InputError);
  EXPECT_THROW(load_instance(kData + "/missing.edges"), InputError);
}

TEST(DiamTest, ReportJson) {
  DiamOptions o;
  o.k = 1;
  auto j = run_algorithm(load_instance(kData + "/k3.edges"), o).to_json();
  EXPECT_EQ(j["algorithm"], "naive");
  EXPECT_EQ(j["answer"], true);
  EXPECT_TRUE(j.contains("counters"));
}

TEST(VerifyTest, EmptySetPassesVacuously) {
  VerifyOptions o;
  auto s = cmd_verify(o);
  EXPECT_TRUE(s.passed());
  EXPECT_EQ(s.instances, 0u);
}

TEST(VerifyTest, CorpusAndGeneratedInstancesAgree) {
  VerifyOptions o;
  o.inputs = {kData + "/k3.edges", kData + "/p5.edges", kData + "/chain_squares.csv"};
  o.trials = 50;
  o.n = 10;
  auto s = cmd_verify(o);
  EXPECT_TRUE(s.passed()) << s.to_json().dump();
  EXPECT_EQ(s.instances, 53u);
  o.inputs.clear();
  o.kind = "unit-squares";
  o.trials = 10;
  o.n = 30;
  EXPECT_TRUE(cmd_verify(o).passed());
}

TEST(BenchTest, RowsDeterministicCounters) {
  BenchOptions o;
  o.sizes = {200, 400};
  auto a = cmd_bench(o);
  ASSERT_EQ(a.size(), 2u);
  auto b = cmd_bench(o);
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_EQ(a[i].diff_sum, b[i].diff_sum);
    EXPECT_EQ(a[i].edges, b[i].edges);
  }
  std::ostringstream csv;
  write_bench_csv(csv, a);
  EXPECT_NE(csv.str().find("slope"), std::string::npos);
  EXPECT_EQ(bench_json(a).size(), 2u);
}

TEST(BenchTest, LogLogSlope) {
  EXPECT_NEAR(loglog_slope({1, 2, 4, 8}, {3, 12, 48, 192}), 2.0, 1e-12);
  EXPECT_NEAR(loglog_slope({10, 100}, {5, 50}), 1.0, 1e-12);
  EXPECT_THROW(loglog_slope({1}, {1}), InputError);
  EXPECT_THROW(loglog_slope({1, 1}, {1, 2}), InputError);
}

}  // namespace
}  // namespace kdiam
