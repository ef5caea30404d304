// mdcsp - most degree-central shortest paths.
//
//   mdcsp solve graph.txt [--weighted] [--min-vertices N] [--dump-path out.txt]
//   mdcsp gen --model ws --n 100 --k 4 --p 0.1 --seed 7 -o ws.txt
//   mdcsp bench --config bench.cfg --format markdown
//   mdcsp oracle-check --seeds 200 [--per-vertex] [--weighted integer]
//   mdcsp reduce-verify instance.sat2 | --random 2 4 100

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>

#include "mdcsp/bench.hpp"
#include "mdcsp/generators.hpp"
#include "mdcsp/io.hpp"
#include "mdcsp/oracle.hpp"
#include "mdcsp/reduction.hpp"
#include "mdcsp/search.hpp"
#include "mdcsp/weighted.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitNoPath = 3;

using namespace mdcsp;

struct SolveArgs {
  std::string input;
  bool directed = false;
  bool weighted = false;
  bool continuous = false;
  double tie_epsilon = 1e-9;
  std::size_t min_vertices = 2;
  bool include_singletons = false;
  bool diameter = false;
  std::string dump_path;
  unsigned workers = 1;
};

bool integral_weights(const Graph& g) {
  for (const Edge& e : g.edges())
    if (std::floor(e.weight) != e.weight) return false;
  return true;
}

int run_solve(const SolveArgs& a) {
  const io::LabeledGraph lg = io::load_graph_file(a.input, {.directed = a.directed, .weighted = a.weighted});
  if (lg.duplicate_edges || lg.self_loops)
    std::cerr << "warning: dropped " << lg.duplicate_edges << " duplicate edge(s) and " << lg.self_loops
              << " self-loop(s)\n";
  const Graph& g = lg.graph;
  SolveOptions opts;
  opts.min_vertices = a.include_singletons ? 1 : a.min_vertices;
  opts.workers = a.workers;

  std::optional<CentralityResult> result;
  if (g.directed()) {
    std::cerr << "note: directed input is solved by exhaustive enumeration\n";
    oracle::BruteForceOptions bo;
    bo.min_vertices = opts.min_vertices;
    result = oracle::brute_force_best(g, bo);
  } else if (g.weighted()) {
    if (a.continuous || !integral_weights(g)) {
      result = weighted::mdcsp_continuous_weighted(g, {.tie_epsilon = a.tie_epsilon, .min_vertices = opts.min_vertices});
    } else {
      result = weighted::mdcsp_integer_weighted(g, opts);
    }
  } else if (a.diameter) {
    result = best_at_diameter(g, opts);
  } else {
    result = best_overall(g, opts);
  }

  if (!result) {
    std::cout << "no path\n";
    return kExitNoPath;
  }
  std::cout << "centrality=" << result->centrality << " length=" << result->length << '\n';
  if (g.weighted()) std::cout << "distance=" << result->distance << '\n';
  std::cout << "source=" << lg.label(result->source) << " target=" << lg.label(result->target) << '\n';
  std::cout << "path=";
  for (std::size_t i = 0; i < result->path.size(); ++i) std::cout << (i ? " " : "") << lg.label(result->path[i]);
  std::cout << '\n';
  if (!a.dump_path.empty()) {
    std::ofstream out(a.dump_path);
    if (!out) throw Error("cannot write '" + a.dump_path + "'");
    for (Vertex v : result->path) out << lg.label(v) << '\n';
  }
  return 0;
}

struct GenArgs {
  std::string model = "ws";
  gen::GenSpec spec;
  std::string output;
};

int run_gen(GenArgs a) {
  a.spec.model = gen::parse_gen_spec(a.model).model;
  const Graph g = gen::generate(a.spec);
  const std::string text = io::write_edge_list(g);
  if (a.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(a.output);
    if (!out) throw Error("cannot write '" + a.output + "'");
    out << text;
  }
  std::cerr << gen::describe(a.spec) << " seed=" << a.spec.seed << ": |V|=" << g.vertex_count()
            << " |E|=" << g.edge_count() << '\n';
  return 0;
}

struct BenchArgs {
  std::string config;
  std::vector<std::string> instances;
  std::optional<std::size_t> repetitions;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> workers;
  std::optional<double> timeout;
  std::optional<std::string> format;
  std::optional<std::string> output;
};

int run_bench_cmd(const BenchArgs& a) {
  bench::BenchConfig cfg;
  if (!a.config.empty()) cfg = bench::parse_bench_config(io::read_file(a.config));
  for (const std::string& spec : a.instances) {
    bench::InstanceSpec inst;
    if (spec.rfind("file:", 0) == 0) {
      inst.file = spec.substr(5);
    } else {
      inst.generated = gen::parse_gen_spec(spec);
    }
    cfg.instances.push_back(inst);
  }
  if (a.repetitions) cfg.repetitions = *a.repetitions;
  if (a.seed) cfg.seed_base = *a.seed;
  if (a.workers) cfg.workers = *a.workers;
  if (a.timeout) cfg.timeout_seconds = *a.timeout;
  if (a.format) cfg.format = io::parse_format(*a.format);
  if (a.output) cfg.output = *a.output;
  if (cfg.instances.empty()) throw Error("bench: no instances given (use --instance or a config file)");

  const auto rows = bench::run_bench(cfg, [](const io::BenchRow& r) {
    std::cerr << r.instance << ": " << r.status << " centrality=" << r.path_centrality << '\n';
  });
  const std::string text = io::write_results(rows, cfg.format);
  if (cfg.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(cfg.output);
    if (!out) throw Error("cannot write '" + cfg.output + "'");
    out << text;
  }
  return 0;
}

struct OracleArgs {
  bench::OracleCheckConfig cfg;
  std::string weighted;
};

int run_oracle_check(OracleArgs a) {
  if (a.weighted == "integer") {
    a.cfg.weighted = bench::WeightKind::Integer;
  } else if (a.weighted == "continuous") {
    a.cfg.weighted = bench::WeightKind::Continuous;
  } else if (!a.weighted.empty()) {
    throw Error("--weighted expects 'integer' or 'continuous'");
  }
  if (a.cfg.corpus.min_n < 2 || a.cfg.corpus.max_n < a.cfg.corpus.min_n) throw Error("need 2 <= min-n <= max-n");
  const auto report = bench::oracle_check(a.cfg);
  for (const auto& m : report.mismatches) std::cout << "MISMATCH seed=" << m.seed << " " << m.detail << '\n';
  for (auto seed : report.budget_overflows) std::cout << "BUDGET seed=" << seed << " enumeration cap exceeded\n";
  std::cout << "checked=" << report.checked << " mismatches=" << report.mismatches.size()
            << " overflows=" << report.budget_overflows.size() << " -> " << (report.ok() ? "PASS" : "FAIL") << '\n';
  return report.ok() ? 0 : kExitFailure;
}

struct ReduceArgs {
  std::string input;
  std::vector<std::size_t> random;  // U C count
  std::uint64_t seed = 0;
  bool quiet = false;
};

int run_reduce_verify(const ReduceArgs& a) {
  std::vector<reduction::Sat2Instance> instances;
  if (!a.input.empty()) instances.push_back(reduction::parse_sat2(io::read_file(a.input)));
  if (!a.random.empty()) {
    if (a.random.size() != 3) throw Error("--random expects U C COUNT");
    for (std::size_t i = 0; i < a.random[2]; ++i)
      instances.push_back(reduction::random_instance(a.random[0], a.random[1], a.seed + i));
  }
  if (instances.empty()) throw Error("reduce-verify: give a sat2 file or --random U C COUNT");
  std::size_t failed = 0;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto report = reduction::verify_reduction(instances[i]);
    if (!report.clean()) ++failed;
    if (!a.quiet || !report.clean()) {
      if (!a.random.empty()) std::cout << "# seed " << a.seed + i << '\n';
      std::cout << reduction::format_report(report);
      if (!report.clean()) std::cout << reduction::format_sat2(instances[i]);
    }
  }
  std::cout << "instances=" << instances.size() << " failed=" << failed << " -> " << (failed ? "FAIL" : "PASS")
            << '\n';
  return failed ? kExitFailure : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Most degree-central shortest paths"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* cmd_solve = app.add_subcommand("solve", "Find the most degree-central shortest path of a graph file");
  cmd_solve->add_option("input", solve.input, "Edge list or Matrix Market file")->required()->check(CLI::ExistingFile);
  cmd_solve->add_flag("--directed", solve.directed, "Read edges as directed (solved exhaustively)");
  cmd_solve->add_flag("--weighted", solve.weighted, "Read a third column as edge weight");
  cmd_solve->add_flag("--continuous", solve.continuous, "Use the all-pairs route for weighted input");
  cmd_solve->add_option("--tie-epsilon", solve.tie_epsilon, "Relative tolerance for weight ties");
  cmd_solve->add_option("--min-vertices", solve.min_vertices, "Minimum path vertex count")->check(CLI::PositiveNumber);
  cmd_solve->add_flag("--include-singletons", solve.include_singletons, "Admit single-vertex paths");
  cmd_solve->add_flag("--diameter", solve.diameter, "Restrict to diameter-length shortest paths");
  cmd_solve->add_option("--dump-path", solve.dump_path, "Write the path labels to this file");
  cmd_solve->add_option("--workers", solve.workers, "Worker threads")->check(CLI::PositiveNumber);

  GenArgs gen_args;
  auto* cmd_gen = app.add_subcommand("gen", "Generate a seeded synthetic graph as an edge list");
  cmd_gen->add_option("--model", gen_args.model, "ws | ba | uniform")->required();
  cmd_gen->add_option("--n", gen_args.spec.n, "Vertex count")->required();
  cmd_gen->add_option("--k", gen_args.spec.k, "Watts-Strogatz lattice degree");
  cmd_gen->add_option("--p", gen_args.spec.p, "Watts-Strogatz rewiring probability");
  cmd_gen->add_option("--m", gen_args.spec.m, "Barabasi-Albert edges per new vertex");
  cmd_gen->add_option("--edge-prob", gen_args.spec.edge_prob, "Uniform random edge probability");
  cmd_gen->add_option("--seed", gen_args.spec.seed, "PRNG seed");
  cmd_gen->add_option("-o,--output", gen_args.output, "Output file (default stdout)");

  BenchArgs bench_args;
  auto* cmd_bench = app.add_subcommand("bench", "Run the benchmark protocol and write a results table");
  cmd_bench->add_option("--config", bench_args.config, "key = value config file")->check(CLI::ExistingFile);
  cmd_bench->add_option("--instance", bench_args.instances, "Generator spec or file:<path> (repeatable)");
  cmd_bench->add_option("--repetitions", bench_args.repetitions, "Repetitions per synthetic setting");
  cmd_bench->add_option("--seed", bench_args.seed, "Seed base; instance i uses seed base + i");
  cmd_bench->add_option("--workers", bench_args.workers, "Worker threads");
  cmd_bench->add_option("--timeout", bench_args.timeout, "Per-instance timeout in seconds");
  cmd_bench->add_option("--format", bench_args.format, "csv | markdown");
  cmd_bench->add_option("--output", bench_args.output, "Output file (default stdout)");

  OracleArgs oracle_args;
  auto* cmd_oracle = app.add_subcommand("oracle-check", "Compare the search with exhaustive enumeration");
  cmd_oracle->add_option("--seeds", oracle_args.cfg.seeds, "Number of random graphs");
  cmd_oracle->add_option("--seed", oracle_args.cfg.seed_base, "First seed");
  cmd_oracle->add_option("--min-n", oracle_args.cfg.corpus.min_n, "Smallest vertex count");
  cmd_oracle->add_option("--max-n", oracle_args.cfg.corpus.max_n, "Largest vertex count");
  cmd_oracle->add_flag("--per-vertex", oracle_args.cfg.per_vertex, "Also compare every single-source path");
  cmd_oracle->add_option("--weighted", oracle_args.weighted, "integer | continuous weighted corpus");
  cmd_oracle->add_option("--workers", oracle_args.cfg.workers, "Worker threads");

  ReduceArgs reduce_args;
  auto* cmd_reduce = app.add_subcommand("reduce-verify", "Check the Max 2-SAT threshold equivalence on gadgets");
  cmd_reduce->add_option("input", reduce_args.input, "sat2 file")->check(CLI::ExistingFile);
  cmd_reduce->add_option("--random", reduce_args.random, "U C COUNT random instances")->expected(3);
  cmd_reduce->add_option("--seed", reduce_args.seed, "First seed for --random");
  cmd_reduce->add_flag("--quiet", reduce_args.quiet, "Only print failing instances");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_solve->parsed()) return run_solve(solve);
    if (cmd_gen->parsed()) return run_gen(gen_args);
    if (cmd_bench->parsed()) return run_bench_cmd(bench_args);
    if (cmd_oracle->parsed()) return run_oracle_check(oracle_args);
    if (cmd_reduce->parsed()) return run_reduce_verify(reduce_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}
