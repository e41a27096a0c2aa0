#ifndef KDIAM_COMMANDS_HPP
#define KDIAM_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "kdiam/geometry.hpp"
#include "kdiam/graph.hpp"

namespace kdiam {

/// Either an explicit graph or points plus a shape whose intersection graph is meant.
struct Instance {
  std::string descriptor;
  bool geometric = false;
  Graph graph;  ///< the explicit graph, or the materialized intersection graph
  std::vector<Point> points;
  ConvexPolygon shape;
};

Instance graph_instance(Graph g, std::string descriptor);
Instance geometric_instance(std::vector<Point> points, ConvexPolygon shape, std::string descriptor);

/**
 * Reads an edge list, or a points CSV when the first data line has a comma.
 * Geometric instances use `polygon_path` as the shape (unit square if empty).
 */
Instance load_instance(const std::string& path, const std::string& polygon_path = "");

struct GenOptions {
  std::string kind;  ///< sparse-graph | unit-squares | polygon-points
  std::size_t n = 20;
  std::size_t m = 0;  ///< sparse-graph edges; 0 means 2n (capped)
  double box = 10.0;
  int sides = 5;
  std::uint64_t seed = 1;
  bool connected = false;  ///< redraw point sets until connected
};

/// Writes the instance; polygon-points also writes its shape to `polygon_out` when given.
void cmd_gen(const GenOptions& options, std::ostream& out, std::ostream* polygon_out = nullptr);

struct DiamOptions {
  std::string algo = "naive";  ///< naive | explicit | implicit | implicit-naive
  std::uint32_t k = 1;
  int d = 0;  ///< 0: 4 for geometric instances, required otherwise
  std::uint64_t seed = 1;
  bool freeze_order = false;
  bool audit = false;
};

struct RunReport {
  std::string instance;
  std::string algorithm;
  std::uint32_t k = 0;
  int d = 0;
  std::uint64_t seed = 0;
  bool answer = false;
  double wall_ms = 0.0;
  std::map<std::string, std::uint64_t> counters;

  nlohmann::json to_json() const;
};

/// Throws InputError for unknown or incompatible algorithm choices.
RunReport run_algorithm(const Instance& instance, const DiamOptions& options);

struct VerifyOptions {
  std::vector<std::string> inputs;
  std::string polygon;
  std::uint32_t k_max = 4;
  int d = 4;
  std::size_t trials = 0;  ///< extra generated instances
  std::string kind = "sparse-graph";
  std::size_t n = 12;  ///< largest generated instance
  std::uint64_t seed = 1;
};

struct VerifySummary {
  std::size_t instances = 0;
  std::size_t runs = 0;
  std::size_t mismatches = 0;
  std::vector<std::string> failures;

  bool passed() const { return mismatches == 0; }
  nlohmann::json to_json() const;
};

/// Runs every applicable algorithm for k = 1..k_max and compares with the naive answer.
VerifySummary cmd_verify(const VerifyOptions& options);

struct BenchOptions {
  std::string kind = "unit-squares";  ///< unit-squares | sparse-graph
  std::vector<std::size_t> sizes;
  std::uint32_t k = 2;
  int d = 4;
  std::uint64_t seed = 1;
  double box = 5.0;
  std::string algo = "order";  ///< order | explicit | implicit
};

struct BenchRow {
  std::size_t n = 0;
  std::size_t edges = 0;
  bool connected = false;
  std::string algo;
  std::optional<bool> answer;
  double time_ms = 0.0;
  std::uint64_t diff_sum = 0;           ///< sum |N^k[v_i] xor N^k[v_i+1]| under the computed order
  std::uint64_t identity_diff_sum = 0;  ///< the same under the input order
  std::uint64_t interval_total = 0;
  std::uint64_t delta_total = 0;
  std::uint64_t nodes_visited = 0;
};

std::vector<BenchRow> cmd_bench(const BenchOptions& options);
void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);
nlohmann::json bench_json(const std::vector<BenchRow>& rows);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace kdiam

#endif  // KDIAM_COMMANDS_HPP
