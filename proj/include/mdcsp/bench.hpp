#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mdcsp/generators.hpp"
#include "mdcsp/graph.hpp"
#include "mdcsp/io.hpp"
#include "mdcsp/search.hpp"

namespace mdcsp::bench {

struct InstanceSpec {
  std::optional<gen::GenSpec> generated;  // set for synthetic instances
  std::string file;                       // set for file instances
};

struct BenchConfig {
  std::vector<InstanceSpec> instances;
  std::size_t repetitions = 30;  // synthetic instances only
  std::uint64_t seed_base = 1;
  unsigned workers = 1;
  double timeout_seconds = 3600.0;
  std::string output;  // empty: stdout
  io::Format format = io::Format::Csv;
};

void validate(const BenchConfig& config);

/// `key = value` lines, `#` comments. Keys: instance (repeatable; a generator
/// spec such as `ws:n=100,k=4,p=0.1` or `file:<path>`), repetitions,
/// seed_base, workers, timeout, format, output.
BenchConfig parse_bench_config(const std::string& text);

/// Measures one graph. Runtime covers the all-sources solve only.
io::BenchRow measure(const std::string& name, const Graph& g, std::optional<std::uint64_t> seed, unsigned workers,
                     double timeout_seconds);

/// Runs every instance (synthetic ones `repetitions` times with seed
/// seed_base + i) and appends one mean row per synthetic setting.
std::vector<io::BenchRow> run_bench(const BenchConfig& config,
                                    const std::function<void(const io::BenchRow&)>& progress = {});

/// Arithmetic mean of the ok rows, flagged as an aggregate row.
io::BenchRow mean_row(const std::string& name, const std::vector<io::BenchRow>& rows);

// Random test corpus shared by the oracle check and the acceptance suite.
struct CorpusOptions {
  std::size_t min_n = 4;
  std::size_t max_n = 30;
  std::vector<double> edge_probs = {0.15, 0.3, 0.6};
};

gen::GenSpec corpus_spec(std::uint64_t seed, const CorpusOptions& options = {});

enum class WeightKind { Integer, Continuous };

/// Random connected-or-not graph on at most `max_n` vertices with weights in
/// {1..4} (Integer) or uniform in [0.5, 4.5) (Continuous).
Graph weighted_corpus_graph(std::uint64_t seed, WeightKind kind, std::size_t max_n = 12);

struct OracleCheckConfig {
  std::size_t seeds = 200;
  std::uint64_t seed_base = 0;
  CorpusOptions corpus;
  bool per_vertex = false;
  std::optional<WeightKind> weighted;
  unsigned workers = 1;
};

struct OracleMismatch {
  std::uint64_t seed = 0;
  std::string detail;
};

struct OracleCheckReport {
  std::size_t checked = 0;
  std::vector<OracleMismatch> mismatches;
  std::vector<std::uint64_t> budget_overflows;

  bool ok() const { return mismatches.empty() && budget_overflows.empty(); }
};

OracleCheckReport oracle_check(const OracleCheckConfig& config);

}  // namespace mdcsp::bench
