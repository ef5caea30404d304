#include "mdcsp/bench.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <sstream>

#include "mdcsp/oracle.hpp"
#include "mdcsp/weighted.hpp"

namespace mdcsp::bench {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

void validate(const BenchConfig& config) {
  if (config.repetitions < 1) throw Error("repetitions must be at least 1");
  if (!(config.timeout_seconds > 0.0)) throw Error("timeout must be positive");
  if (config.workers < 1) throw Error("workers must be at least 1");
}

BenchConfig parse_bench_config(const std::string& text) {
  BenchConfig cfg;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw Error("config line " + std::to_string(line_no) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    try {
      if (key == "instance") {
        InstanceSpec spec;
        if (value.rfind("file:", 0) == 0) {
          spec.file = value.substr(5);
        } else {
          spec.generated = gen::parse_gen_spec(value);
        }
        cfg.instances.push_back(spec);
      } else if (key == "repetitions") {
        cfg.repetitions = std::stoul(value);
      } else if (key == "seed_base") {
        cfg.seed_base = std::stoull(value);
      } else if (key == "workers") {
        cfg.workers = static_cast<unsigned>(std::stoul(value));
      } else if (key == "timeout") {
        cfg.timeout_seconds = std::stod(value);
      } else if (key == "format") {
        cfg.format = io::parse_format(value);
      } else if (key == "output") {
        cfg.output = value;
      } else {
        throw Error("unknown key '" + key + "'");
      }
    } catch (const std::logic_error&) {
      throw Error("config line " + std::to_string(line_no) + ": bad value '" + value + "' for " + key);
    }
  }
  validate(cfg);
  return cfg;
}

io::BenchRow measure(const std::string& name, const Graph& g, std::optional<std::uint64_t> seed, unsigned workers,
                     double timeout_seconds) {
  io::BenchRow row;
  row.instance = name;
  row.seed = seed;
  row.vertices = static_cast<double>(g.vertex_count());
  row.edges = static_cast<double>(g.edge_count());
  std::size_t max_degree = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) max_degree = std::max(max_degree, g.degree(v));
  row.max_degree = static_cast<double>(max_degree);

  SolveOptions opts;
  opts.workers = workers;
  const auto start = std::chrono::steady_clock::now();
  opts.deadline = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                              std::chrono::duration<double>(timeout_seconds));
  try {
    const SolveSummary summary = solve_all(g, opts);
    row.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    row.diameter = static_cast<double>(summary.diameter);
    if (summary.at_diameter) row.diam_centrality = static_cast<double>(summary.at_diameter->centrality);
    if (summary.best) {
      row.path_length = static_cast<double>(summary.best->length);
      row.path_centrality = static_cast<double>(summary.best->centrality);
    } else {
      row.status = "no_path";
    }
  } catch (const TimeoutError&) {
    row.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    row.status = "timeout";
  }
  return row;
}

io::BenchRow mean_row(const std::string& name, const std::vector<io::BenchRow>& rows) {
  io::BenchRow m;
  m.instance = name;
  m.aggregate = true;
  std::size_t count = 0;
  for (const io::BenchRow& r : rows) {
    if (r.status != "ok") continue;
    ++count;
    m.vertices += r.vertices;
    m.edges += r.edges;
    m.max_degree += r.max_degree;
    m.diameter += r.diameter;
    m.diam_centrality += r.diam_centrality;
    m.path_length += r.path_length;
    m.path_centrality += r.path_centrality;
    m.runtime_seconds += r.runtime_seconds;
  }
  if (count == 0) {
    m.status = "no_data";
    return m;
  }
  const double c = static_cast<double>(count);
  for (double* f : {&m.vertices, &m.edges, &m.max_degree, &m.diameter, &m.diam_centrality, &m.path_length,
                    &m.path_centrality, &m.runtime_seconds})
    *f /= c;
  if (count != rows.size()) m.status = "partial";
  return m;
}

std::vector<io::BenchRow> run_bench(const BenchConfig& config,
                                    const std::function<void(const io::BenchRow&)>& progress) {
  validate(config);
  std::vector<io::BenchRow> out;
  std::uint64_t index = 0;
  for (const InstanceSpec& inst : config.instances) {
    if (inst.generated) {
      std::vector<io::BenchRow> setting;
      const std::string name = gen::describe(*inst.generated);
      for (std::size_t r = 0; r < config.repetitions; ++r, ++index) {
        gen::GenSpec spec = *inst.generated;
        spec.seed = config.seed_base + index;
        const Graph g = gen::generate(spec);
        io::BenchRow row = measure(name + "#" + std::to_string(r), g, spec.seed, config.workers,
                                   config.timeout_seconds);
        if (progress) progress(row);
        setting.push_back(row);
      }
      out.insert(out.end(), setting.begin(), setting.end());
      io::BenchRow mean = mean_row("mean " + name, setting);
      if (progress) progress(mean);
      out.push_back(std::move(mean));
    } else {
      const io::LabeledGraph lg = io::load_graph_file(inst.file);
      io::BenchRow row = measure(inst.file, lg.graph, std::nullopt, config.workers, config.timeout_seconds);
      if (progress) progress(row);
      out.push_back(std::move(row));
    }
  }
  return out;
}

gen::GenSpec corpus_spec(std::uint64_t seed, const CorpusOptions& options) {
  gen::Rng rng(seed ^ 0x5eed5eed5eed5eedULL);
  gen::GenSpec spec;
  spec.model = gen::Model::UniformRandom;
  spec.n = options.min_n + rng.below(options.max_n - options.min_n + 1);
  spec.edge_prob = options.edge_probs[rng.below(options.edge_probs.size())];
  spec.seed = seed;
  return spec;
}

Graph weighted_corpus_graph(std::uint64_t seed, WeightKind kind, std::size_t max_n) {
  gen::Rng rng(seed ^ 0x77e1647ed0000000ULL);
  const std::size_t n = 3 + rng.below(max_n - 2);
  const double prob = rng.uniform() < 0.5 ? 0.3 : 0.5;
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (rng.uniform() >= prob) continue;
      const double w = kind == WeightKind::Integer ? static_cast<double>(1 + rng.below(4)) : 0.5 + 4.0 * rng.uniform();
      edges.push_back({i, j, w});
    }
  }
  return Graph::from_edge_list(edges, {.weighted = true, .vertex_count = n});
}

namespace {

std::string centrality_text(const std::optional<CentralityResult>& r) {
  return r ? std::to_string(r->centrality) : std::string("none");
}

void check_seed(const OracleCheckConfig& cfg, std::uint64_t seed, OracleCheckReport& report) {
  std::ostringstream why;
  if (cfg.weighted) {
    const Graph g = weighted_corpus_graph(seed, *cfg.weighted);
    const auto expect = oracle::brute_force_best(g);
    std::optional<CentralityResult> got;
    if (*cfg.weighted == WeightKind::Integer) {
      got = weighted::mdcsp_integer_weighted(g);
    } else {
      got = weighted::mdcsp_continuous_weighted(g);
    }
    if (centrality_text(got) != centrality_text(expect))
      why << "n=" << g.vertex_count() << " search=" << centrality_text(got)
          << " oracle=" << centrality_text(expect);
  } else {
    const Graph g = gen::uniform_random(corpus_spec(seed, cfg.corpus));
    SolveOptions opts;
    opts.workers = cfg.workers;
    const auto got = best_overall(g, opts);
    const auto expect = oracle::brute_force_best(g);
    if (centrality_text(got) != centrality_text(expect))
      why << "n=" << g.vertex_count() << " best_overall=" << centrality_text(got)
          << " oracle=" << centrality_text(expect);
    if (cfg.per_vertex) {
      std::size_t bad = 0;
      for (Vertex s = 0; s < g.vertex_count(); ++s) {
        const SourceSearchState st = single_source(g, s);
        const auto maxima = oracle::per_target_maxima(g, s);
        for (Vertex v = 0; v < g.vertex_count(); ++v)
          if (maxima[v] && (!st.reached(v) || st.centrality(v) != *maxima[v])) ++bad;
      }
      if (bad) why << (why.tellp() > 0 ? "; " : "") << bad << " (source, target) pairs below the oracle maximum";
    }
  }
  if (why.tellp() > 0) report.mismatches.push_back({seed, why.str()});
}

}  // namespace

OracleCheckReport oracle_check(const OracleCheckConfig& config) {
  OracleCheckReport report;
  for (std::uint64_t i = 0; i < config.seeds; ++i) {
    const std::uint64_t seed = config.seed_base + i;
    try {
      check_seed(config, seed, report);
    } catch (const oracle::BudgetExceeded&) {
      report.budget_overflows.push_back(seed);
    }
    ++report.checked;
  }
  return report;
}

}  // namespace mdcsp::bench
