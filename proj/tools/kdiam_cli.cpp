#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "kdiam/commands.hpp"
#include "kdiam/error.hpp"

namespace {

bool debug_logging() {
  const char* level = std::getenv("KDIAM_LOG_LEVEL");
  return level != nullptr && std::string(level) == "debug";
}

// Opens --output, or returns std::cout when it is empty or "-".
std::ostream& open_output(const std::string& path, std::unique_ptr<std::ofstream>& holder) {
  if (path.empty() || path == "-") return std::cout;
  holder = std::make_unique<std::ofstream>(path);
  if (!*holder) throw kdiam::InputError("cannot write " + path);
  return *holder;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-diameter decision for graphs and geometric intersection graphs"};
  app.require_subcommand(1);

  std::string output;
  std::string format;
  std::uint64_t seed = 1;

  kdiam::GenOptions gen;
  std::string polygon_output;
  auto* gen_cmd = app.add_subcommand("gen", "generate a seeded instance");
  gen_cmd->add_option("kind", gen.kind, "sparse-graph | unit-squares | polygon-points")->required();
  gen_cmd->add_option("--n", gen.n, "vertex / point count");
  gen_cmd->add_option("--m", gen.m, "edge count for sparse-graph (default 2n)");
  gen_cmd->add_option("--box", gen.box, "side of the square the points are drawn from");
  gen_cmd->add_option("--sides", gen.sides, "polygon-points: number of polygon sides");
  gen_cmd->add_flag("--connected", gen.connected, "redraw point sets until the intersection graph is connected");
  gen_cmd->add_option("--polygon-output", polygon_output, "polygon-points: where to write the polygon");
  gen_cmd->add_option("--seed", seed);
  gen_cmd->add_option("--output", output);

  kdiam::DiamOptions diam;
  std::string input;
  std::string polygon;
  auto* diam_cmd = app.add_subcommand("diam", "decide whether the diameter is at most k");
  diam_cmd->add_option("--algo", diam.algo, "naive | explicit | implicit | implicit-naive");
  diam_cmd->add_option("--k", diam.k)->required();
  diam_cmd->add_option("--d", diam.d, "VC-dimension parameter (default 4 for point instances)");
  diam_cmd->add_option("--input", input, "edge list or points CSV")->required();
  diam_cmd->add_option("--polygon", polygon, "shape for point instances (default unit square)");
  diam_cmd->add_flag("--freeze-order", diam.freeze_order, "explicit: keep the starting order");
  diam_cmd->add_flag("--audit", diam.audit, "run invariant audits while computing");
  diam_cmd->add_option("--seed", seed);
  diam_cmd->add_option("--output", output);
  diam_cmd->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));

  kdiam::VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "cross-check all algorithms against the naive answer");
  verify_cmd->add_option("--input", verify.inputs, "instance files");
  verify_cmd->add_option("--polygon", verify.polygon);
  verify_cmd->add_option("--k", verify.k_max, "check k = 1..K");
  verify_cmd->add_option("--d", verify.d);
  verify_cmd->add_option("--trials", verify.trials, "additional generated instances");
  verify_cmd->add_option("--kind", verify.kind, "kind of generated instances");
  verify_cmd->add_option("--n", verify.n, "largest generated instance");
  verify_cmd->add_option("--seed", seed);
  verify_cmd->add_option("--output", output);

  kdiam::BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "scaling table over instance sizes");
  bench_cmd->add_option("kind", bench.kind, "unit-squares | sparse-graph");
  bench_cmd->add_option("--n", bench.sizes, "sizes")->required();
  bench_cmd->add_option("--k", bench.k);
  bench_cmd->add_option("--d", bench.d);
  bench_cmd->add_option("--box", bench.box);
  bench_cmd->add_option("--algo", bench.algo, "order | explicit | implicit");
  bench_cmd->add_option("--seed", seed);
  bench_cmd->add_option("--output", output);
  bench_cmd->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));

  CLI11_PARSE(app, argc, argv);

  try {
    std::unique_ptr<std::ofstream> holder;
    if (*gen_cmd) {
      gen.seed = seed;
      std::ostream& out = open_output(output, holder);
      std::unique_ptr<std::ofstream> poly;
      if (!polygon_output.empty()) {
        poly = std::make_unique<std::ofstream>(polygon_output);
        if (!*poly) throw kdiam::InputError("cannot write " + polygon_output);
      }
      kdiam::cmd_gen(gen, out, poly.get());
      return 0;
    }
    if (*diam_cmd) {
      diam.seed = seed;
      const auto instance = kdiam::load_instance(input, polygon);
      const auto report = kdiam::run_algorithm(instance, diam);
      std::ostream& out = open_output(output, holder);
      if (format == "csv") {
        out << "instance,algorithm,k,d,seed,answer,wall_ms\n"
            << report.instance << ',' << report.algorithm << ',' << report.k << ',' << report.d << ','
            << report.seed << ',' << (report.answer ? "true" : "false") << ',' << report.wall_ms << '\n';
      } else {
        out << report.to_json().dump(2) << '\n';
      }
      if (debug_logging()) std::cerr << "wall_ms " << report.wall_ms << '\n';
      return 0;
    }
    if (*verify_cmd) {
      verify.seed = seed;
      const auto summary = kdiam::cmd_verify(verify);
      open_output(output, holder) << summary.to_json().dump(2) << '\n';
      return summary.passed() ? 0 : 1;
    }
    if (*bench_cmd) {
      bench.seed = seed;
      const auto rows = kdiam::cmd_bench(bench);
      std::ostream& out = open_output(output, holder);
      if (format == "json") {
        out << kdiam::bench_json(rows).dump(2) << '\n';
      } else {
        kdiam::write_bench_csv(out, rows);
      }
      return 0;
    }
  } catch (const kdiam::InputError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
