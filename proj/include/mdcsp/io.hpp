#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mdcsp/graph.hpp"

namespace mdcsp::io {

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Graph with dense ids plus the original label of each id.
struct LabeledGraph {
  Graph graph;
  std::vector<std::string> labels;
  // Warning counters filled by the loaders.
  std::size_t duplicate_edges = 0;
  std::size_t self_loops = 0;

  std::string label(Vertex v) const { return v < labels.size() ? labels[v] : std::to_string(v); }
};

struct EdgeListOptions {
  bool directed = false;
  // Read a third column as the edge weight; otherwise extra columns are ignored.
  bool weighted = false;
};

/// Whitespace-separated `u v` or `u v w` lines; `#` and `%` start comments.
/// Labels are mapped to ids in order of first appearance. Repeated edges are
/// kept once and counted; self-loops are dropped and counted.
LabeledGraph load_edge_list(const std::string& text, const EdgeListOptions& options = {});

/// Matrix Market `coordinate` files with pattern, integer or real fields and
/// general or symmetric storage. Entries become undirected edges between the
/// 0-based row and column ids; diagonal entries are dropped with a warning
/// and values are ignored.
LabeledGraph load_matrix_market(const std::string& text);

std::string read_file(const std::string& path);

/// Picks the Matrix Market loader for `.mtx` files or when the text starts
/// with a `%%MatrixMarket` banner, the edge-list loader otherwise.
LabeledGraph load_graph_file(const std::string& path, const EdgeListOptions& options = {});

/// Canonical edge list: one `u v` (or `u v w`) line per edge using labels.
std::string write_edge_list(const LabeledGraph& g);
std::string write_edge_list(const Graph& g);

/// One row of the benchmark tables. Integer-valued columns are stored as
/// doubles so that per-setting mean rows share the type.
struct BenchRow {
  std::string instance;
  double vertices = 0;
  double edges = 0;
  double max_degree = 0;
  double diameter = 0;
  double diam_centrality = 0;
  double path_length = 0;
  double path_centrality = 0;
  double runtime_seconds = 0;
  std::optional<std::uint64_t> seed;
  std::string status = "ok";  // ok | timeout | no_path | error
  bool aggregate = false;     // mean row: numbers printed with 2 decimals
};

enum class Format { Csv, Markdown };

Format parse_format(const std::string& name);

/// Columns, in order: instance, V, E, max_degree, diam, diam_centrality,
/// path_length, path_centrality, runtime_seconds, seed, status.
std::string write_results(const std::vector<BenchRow>& rows, Format format);

}  // namespace mdcsp::io
