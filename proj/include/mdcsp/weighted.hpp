#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mdcsp/graph.hpp"
#include "mdcsp/search.hpp"

namespace mdcsp::weighted {

/// Raised when continuous weights produce tied path weights, so the
/// shortest path of some pair is not unique.
class AmbiguityError : public Error {
 public:
  using Error::Error;
};

struct ChainPosition {
  Vertex u = kNoVertex;
  Vertex v = kNoVertex;
  std::size_t position = 0;  // 1..w-1 counted from u
};

/// Unit-weight graph where each edge of integer weight w becomes a chain of
/// w unit edges through w-1 auxiliary vertices. Original vertices keep their
/// ids; auxiliaries are numbered from `original_count` upwards.
struct AugmentedGraph {
  Graph unit_graph;
  std::size_t original_count = 0;
  std::vector<ChainPosition> origin_of;  // indexed by aux id - original_count
  double weight_sum = 0.0;

  bool is_auxiliary(Vertex v) const { return v >= original_count; }
};

AugmentedGraph augment_integer(const Graph& g);

/// The centrality search run on the augmented graph. Sources and reported
/// endpoints are original vertices, and only original vertices adjacent via
/// original edges count as neighbors. The returned path is projected back to
/// original vertices; `distance` is its weight.
std::optional<CentralityResult> mdcsp_integer_weighted(const Graph& g, const SolveOptions& options = {});

struct ApspTables {
  std::size_t n = 0;
  std::vector<double> dist;     // row-major n x n
  std::vector<Vertex> next_hop;  // kNoVertex when unreachable or i == j

  double distance(Vertex i, Vertex j) const { return dist[i * n + j]; }
  Vertex next(Vertex i, Vertex j) const { return next_hop[i * n + j]; }
  // Empty when j is unreachable from i.
  Path path(Vertex i, Vertex j) const;
};

ApspTables floyd_warshall(const Graph& g);

struct ContinuousOptions {
  double tie_epsilon = 1e-9;  // relative
  std::size_t min_vertices = 2;
};

/// All-pairs route for generic real weights: reconstructs the shortest path
/// of every ordered pair and keeps the most central one. Throws
/// AmbiguityError when two edges carry equal weights or some pair has more
/// than one shortest path (both within tie_epsilon).
std::optional<CentralityResult> mdcsp_continuous_weighted(const Graph& g, const ContinuousOptions& options = {});

}  // namespace mdcsp::weighted
