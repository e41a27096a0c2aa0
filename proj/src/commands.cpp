#include "kdiam/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <memory>
#include <numeric>
#include <ostream>

#include "kdiam/error.hpp"
#include "kdiam/explicit_diameter.hpp"
#include "kdiam/generators.hpp"
#include "kdiam/implicit_diameter.hpp"
#include "kdiam/io.hpp"
#include "kdiam/plane_structure.hpp"

namespace kdiam {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Forwards to a geometric structure and reports its node visits when dropped.
class CountingNsds final : public NeighbourSetStructure {
 public:
  CountingNsds(std::unique_ptr<GeometricNsds> inner, std::shared_ptr<std::uint64_t> visits)
      : inner_(std::move(inner)), visits_(std::move(visits)) {}
  ~CountingNsds() override {
    const auto s = inner_->plane().stripe_stats();
    *visits_ += s.mark_visits + s.list_visits + inner_->plane().stats().aux_visits;
  }
  std::size_t vertex_count() const override { return inner_->vertex_count(); }
  std::size_t version_count() const override { return inner_->version_count(); }
  SetHandle add_neighbours(SetHandle h, Vertex v) override { return inner_->add_neighbours(h, v); }
  VertexSet list_differences(SetHandle a, SetHandle b) override {
    return inner_->list_differences(a, b);
  }

 private:
  std::unique_ptr<GeometricNsds> inner_;
  std::shared_ptr<std::uint64_t> visits_;
};

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

Instance graph_instance(Graph g, std::string descriptor) {
  Instance inst;
  inst.descriptor = std::move(descriptor);
  inst.graph = std::move(g);
  return inst;
}

Instance geometric_instance(std::vector<Point> points, ConvexPolygon shape, std::string descriptor) {
  Instance inst;
  inst.descriptor = std::move(descriptor);
  inst.geometric = true;
  inst.graph = intersection_graph_naive(points, shape);
  inst.points = std::move(points);
  inst.shape = std::move(shape);
  return inst;
}

Instance load_instance(const std::string& path, const std::string& polygon_path) {
  std::ifstream probe(path);
  if (!probe) throw InputError("cannot open " + path);
  std::string line;
  bool points = false;
  while (std::getline(probe, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    points = line.find(',') != std::string::npos;
    break;
  }
  if (!points) return graph_instance(read_edge_list_file(path), path);
  ConvexPolygon shape = polygon_path.empty() ? ConvexPolygon::square(1.0) : read_polygon_file(polygon_path);
  std::string descriptor = path + (polygon_path.empty() ? "" : " + " + polygon_path);
  return geometric_instance(read_points_file(path), std::move(shape), std::move(descriptor));
}

void cmd_gen(const GenOptions& options, std::ostream& out, std::ostream* polygon_out) {
  Rng rng(options.seed);
  const std::size_t n = options.n;
  if (n == 0) throw InputError("n must be positive");
  if (options.kind == "sparse-graph") {
    const std::size_t max_edges = n * (n - 1) / 2;
    std::size_t m = options.m != 0 ? options.m : std::min(2 * n, max_edges);
    m = std::max(m, n - 1);
    write_edge_list(out, random_connected_graph(n, m, rng));
  } else if (options.kind == "unit-squares" || options.kind == "polygon-points") {
    const ConvexPolygon shape = options.kind == "unit-squares"
                                    ? ConvexPolygon::square(1.0)
                                    : random_convex_polygon(options.sides, 0.5, rng);
    auto pts = options.connected ? random_connected_points(n, options.box, shape, rng)
                                 : random_points(n, options.box, rng);
    write_points(out, pts);
    if (polygon_out) write_polygon(*polygon_out, shape);
  } else {
    throw InputError("unknown instance kind '" + options.kind + "'");
  }
}

nlohmann::json RunReport::to_json() const {
  return {{"instance", instance}, {"algorithm", algorithm}, {"k", k},         {"d", d},
          {"seed", seed},         {"answer", answer},       {"wall_ms", wall_ms}, {"counters", counters}};
}

RunReport run_algorithm(const Instance& instance, const DiamOptions& options) {
  static const std::vector<std::string> kAlgos = {"naive", "explicit", "implicit", "implicit-naive"};
  if (std::find(kAlgos.begin(), kAlgos.end(), options.algo) == kAlgos.end()) {
    throw InputError("unknown algorithm '" + options.algo + "'");
  }
  if (options.algo == "implicit" && !instance.geometric) {
    throw InputError("implicit needs a point instance; use implicit-naive for graphs");
  }
  int d = options.d;
  if (d == 0) {
    if (!instance.geometric && options.algo != "naive") {
      throw InputError("--d is required for graph instances");
    }
    d = 4;
  }
  if (options.k < 1) throw InputError("k must be >= 1");
  if (!instance.graph.is_connected()) throw DisconnectedGraphError();

  RunReport report;
  report.instance = instance.descriptor;
  report.algorithm = options.algo;
  report.k = options.k;
  report.d = d;
  report.seed = options.seed;
  report.counters["vertices"] = instance.graph.vertex_count();
  report.counters["edges"] = instance.graph.edge_count();

  Rng rng(options.seed);
  const auto start = Clock::now();
  if (options.algo == "naive") {
    report.answer = k_diameter_naive(instance.graph, options.k);
  } else if (options.algo == "explicit") {
    ExplicitOptions eo;
    eo.order.d = d;
    eo.freeze_order = options.freeze_order;
    eo.audit = options.audit;
    ExplicitStats st;
    report.answer = k_diameter_explicit(instance.graph, options.k, eo, rng, &st);
    report.counters["steps"] = st.steps;
    report.counters["interval_total"] = st.interval_total;
    report.counters["union_input_intervals"] = st.union_input_intervals;
    report.counters["rebase_endpoints"] = st.rebase_endpoints;
    if (options.audit) report.counters["audit_violations"] = st.audit_violations;
  } else {
    ImplicitOptions io;
    io.order.d = d;
    io.audit = options.audit;
    ImplicitStats st;
    auto visits = std::make_shared<std::uint64_t>(0);
    NsdsFactory factory;
    if (options.algo == "implicit") {
      factory = [&instance, visits, seed = options.seed]() -> std::unique_ptr<NeighbourSetStructure> {
        return std::make_unique<CountingNsds>(
            std::make_unique<GeometricNsds>(instance.points, instance.shape, seed), visits);
      };
    } else {
      factory = naive_nsds_factory(instance.graph, options.seed);
    }
    report.answer = k_diameter_implicit(factory, instance.graph.vertex_count(), options.k, io, rng, &st);
    report.counters["steps"] = st.steps;
    report.counters["delta_total"] = st.delta_totals.empty() ? 0 : st.delta_totals.back();
    report.counters["delta_sum"] = std::accumulate(st.delta_totals.begin(), st.delta_totals.end(), std::uint64_t{0});
    report.counters["expand_cost"] = st.expand.cost;
    report.counters["expand_bound"] = st.expand_bound;
    report.counters["add_neighbours"] = st.expand.add_neighbours;
    if (options.algo == "implicit") report.counters["nodes_visited"] = *visits;
    if (options.audit) report.counters["audit_violations"] = st.audit_violations;
  }
  report.wall_ms = elapsed_ms(start);
  return report;
}

nlohmann::json VerifySummary::to_json() const {
  return {{"instances", instances}, {"runs", runs},     {"mismatches", mismatches},
          {"passed", passed()},     {"failures", failures}};
}

VerifySummary cmd_verify(const VerifyOptions& options) {
  VerifySummary summary;
  auto check = [&](const Instance& inst, std::uint64_t seed) {
    ++summary.instances;
    if (!inst.graph.is_connected()) {
      ++summary.mismatches;
      summary.failures.push_back(inst.descriptor + ": disconnected");
      return;
    }
    std::vector<std::string> algos = {"explicit", "implicit-naive"};
    if (inst.geometric) algos.push_back("implicit");
    for (std::uint32_t k = 1; k <= options.k_max; ++k) {
      const bool expected = k_diameter_naive(inst.graph, k);
      for (const auto& algo : algos) {
        DiamOptions dopt;
        dopt.algo = algo;
        dopt.k = k;
        dopt.d = options.d;
        dopt.seed = seed;
        ++summary.runs;
        const bool got = run_algorithm(inst, dopt).answer;
        if (got != expected) {
          ++summary.mismatches;
          summary.failures.push_back(inst.descriptor + ": " + algo + " k=" + std::to_string(k) +
                                     " answered " + (got ? "true" : "false"));
        }
      }
    }
  };

  for (const auto& path : options.inputs) check(load_instance(path, options.polygon), options.seed);

  Rng rng(options.seed);
  const std::size_t n_max = std::max<std::size_t>(options.n, 2);
  for (std::size_t t = 0; t < options.trials; ++t) {
    std::uniform_int_distribution<std::size_t> size(2, n_max);
    const std::size_t n = size(rng);
    const std::string name = options.kind + "#" + std::to_string(t);
    if (options.kind == "sparse-graph") {
      std::uniform_int_distribution<std::size_t> edges(n - 1, std::min(n * (n - 1) / 2, 3 * n));
      check(graph_instance(random_connected_graph(n, edges(rng), rng), name), mix_seed(options.seed, t));
    } else if (options.kind == "unit-squares" || options.kind == "polygon-points") {
      ConvexPolygon shape = options.kind == "unit-squares" ? ConvexPolygon::square(1.0)
                                                           : random_convex_polygon(5, 0.5, rng);
      const double box = std::max(1.0, std::sqrt(static_cast<double>(n)) * (options.kind == "unit-squares" ? 0.8 : 0.5));
      auto pts = random_connected_points(n, box, shape, rng);
      check(geometric_instance(std::move(pts), std::move(shape), name), mix_seed(options.seed, t));
    } else {
      throw InputError("unknown instance kind '" + options.kind + "'");
    }
  }
  return summary;
}

std::vector<BenchRow> cmd_bench(const BenchOptions& options) {
  if (options.kind != "unit-squares" && options.kind != "sparse-graph") {
    throw InputError("bench supports unit-squares and sparse-graph");
  }
  if (options.algo != "order" && options.algo != "explicit" && options.algo != "implicit") {
    throw InputError("bench algo must be order, explicit or implicit");
  }
  std::vector<BenchRow> rows;
  for (std::size_t n : options.sizes) {
    Rng rng(mix_seed(options.seed, n));
    Instance inst = options.kind == "unit-squares"
                        ? geometric_instance(random_points(n, options.box, rng), ConvexPolygon::square(1.0),
                                             "unit-squares n=" + std::to_string(n))
                        : graph_instance(random_connected_graph(n, std::min(2 * n, n * (n - 1) / 2), rng),
                                         "sparse-graph n=" + std::to_string(n));
    BenchRow row;
    row.n = n;
    row.edges = inst.graph.edge_count();
    row.connected = inst.graph.is_connected();
    row.algo = options.algo;

    OrderOptions oo;
    oo.d = options.d;
    const auto start = Clock::now();
    auto order = order_by_k_neighborhoods(inst.graph, options.k, oo, rng);
    row.time_ms = elapsed_ms(start);
    row.diff_sum = ball_total_difference(inst.graph, options.k, order.order);
    std::vector<std::uint32_t> identity(n);
    std::iota(identity.begin(), identity.end(), 0U);
    row.identity_diff_sum = ball_total_difference(inst.graph, options.k, identity);

    if (options.algo != "order" && row.connected) {
      DiamOptions dopt;
      dopt.algo = options.algo == "implicit" && !inst.geometric ? "implicit-naive" : options.algo;
      dopt.k = options.k;
      dopt.d = options.d;
      dopt.seed = options.seed;
      auto report = run_algorithm(inst, dopt);
      row.answer = report.answer;
      row.time_ms = report.wall_ms;
      row.interval_total = report.counters["interval_total"];
      row.delta_total = report.counters["delta_total"];
      row.nodes_visited = report.counters["nodes_visited"];
    }
    rows.push_back(row);
  }
  return rows;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw InputError("slope needs at least two points");
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0) || !(y[i] > 0)) throw InputError("log-log slope needs positive values");
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(x.size());
  double num = 0, den = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mx;
    num += dx * (std::log(y[i]) - my);
    den += dx * dx;
  }
  if (den == 0) throw InputError("log-log slope needs distinct sizes");
  return num / den;
}

namespace {

std::optional<double> diff_slope(const std::vector<BenchRow>& rows) {
  std::vector<double> x, y;
  for (const auto& r : rows) {
    if (r.diff_sum == 0) return std::nullopt;
    x.push_back(static_cast<double>(r.n));
    y.push_back(static_cast<double>(r.diff_sum));
  }
  if (x.size() < 2) return std::nullopt;
  return loglog_slope(x, y);
}

}  // namespace

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << "n,edges,connected,algo,answer,time_ms,diff_sum,identity_diff_sum,interval_total,delta_total,nodes_visited\n";
  for (const auto& r : rows) {
    out << r.n << ',' << r.edges << ',' << (r.connected ? "true" : "false") << ',' << r.algo << ','
        << (r.answer ? (*r.answer ? "true" : "false") : "") << ',' << r.time_ms << ',' << r.diff_sum << ','
        << r.identity_diff_sum << ',' << r.interval_total << ',' << r.delta_total << ','
        << r.nodes_visited << '\n';
  }
  if (auto s = diff_slope(rows)) out << "# diff_sum loglog slope: " << *s << '\n';
}

nlohmann::json bench_json(const std::vector<BenchRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json j = {{"n", r.n},
                        {"edges", r.edges},
                        {"connected", r.connected},
                        {"algo", r.algo},
                        {"time_ms", r.time_ms},
                        {"diff_sum", r.diff_sum},
                        {"identity_diff_sum", r.identity_diff_sum},
                        {"interval_total", r.interval_total},
                        {"delta_total", r.delta_total},
                        {"nodes_visited", r.nodes_visited}};
    if (r.answer) j["answer"] = *r.answer;
    arr.push_back(j);
  }
  nlohmann::json out = {{"rows", arr}};
  if (auto s = diff_slope(rows)) out["diff_sum_slope"] = *s;
  return out;
}

}  // namespace kdiam
