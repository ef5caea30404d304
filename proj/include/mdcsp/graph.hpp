#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mdcsp/vertex_set.hpp"

namespace mdcsp {

using Vertex = std::uint32_t;

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a graph cannot be constructed from the given edges.
class GraphError : public Error {
 public:
  using Error::Error;
};

/// Raised when a vertex sequence is not a path of the graph.
class PathError : public Error {
 public:
  using Error::Error;
};

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  double weight = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct GraphOptions {
  bool directed = false;
  bool weighted = false;
  // When unset the vertex count is 1 + the largest endpoint id.
  std::optional<std::size_t> vertex_count;
};

/// Which incident edges make two vertices adjacent for neighborhood purposes.
/// Only differs from `Out` on directed graphs.
enum class Adjacency { Out, Any };

/// Immutable simple graph in CSR form. Adjacency lists are sorted by neighbor
/// id; for undirected graphs every edge appears in both endpoint lists.
class Graph {
 public:
  Graph() = default;

  static Graph from_edge_list(std::span<const Edge> edges, GraphOptions options = {});

  std::size_t vertex_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return edges_.size(); }
  bool directed() const { return directed_; }
  bool weighted() const { return weighted_; }

  std::span<const Vertex> out(Vertex v) const;
  std::span<const double> out_weights(Vertex v) const;
  // Same as `out` for undirected graphs.
  std::span<const Vertex> in(Vertex v) const;
  std::span<const double> in_weights(Vertex v) const;

  std::size_t degree(Vertex v) const { return out(v).size(); }
  bool has_edge(Vertex u, Vertex v) const;
  // Weight of the edge u->v, or nullopt when absent.
  std::optional<double> weight(Vertex u, Vertex v) const;

  // Canonical edge list: sorted, with u < v for undirected graphs.
  const std::vector<Edge>& edges() const { return edges_; }

  bool contains(Vertex v) const { return v < vertex_count(); }

 private:
  bool directed_ = false;
  bool weighted_ = false;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
  std::vector<double> weights_;
  std::vector<std::size_t> in_offsets_;
  std::vector<Vertex> in_sources_;
  std::vector<double> in_weights_;
};

/// Ordered sequence of distinct vertices. Validity against a particular graph
/// is checked by `validate_path`.
class Path {
 public:
  Path() = default;
  explicit Path(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {}

  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  std::size_t length() const { return vertices_.empty() ? 0 : vertices_.size() - 1; }
  Vertex front() const { return vertices_.front(); }
  Vertex back() const { return vertices_.back(); }
  Vertex operator[](std::size_t i) const { return vertices_[i]; }

  Path reversed() const;

  auto begin() const { return vertices_.begin(); }
  auto end() const { return vertices_.end(); }

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;

 private:
  std::vector<Vertex> vertices_;
};

struct GraphStats {
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::size_t max_degree = 0;
  // Longest finite shortest-path length in edges; unreachable pairs skipped.
  std::size_t diameter = 0;
  bool connected = true;
};

// Throws PathError unless every vertex is in range, no vertex repeats and
// consecutive vertices are joined by an edge (respecting direction).
void validate_path(const Graph& g, const Path& p);

/// Vertices adjacent to some path vertex, minus the path's own vertices.
VertexSet neighborhood(const Graph& g, const Path& p, Adjacency mode = Adjacency::Out);
std::size_t centrality(const Graph& g, const Path& p, Adjacency mode = Adjacency::Out);

// Sum of edge weights along the path (edge count when unweighted).
double path_weight(const Graph& g, const Path& p);

/// BFS on unweighted graphs, Dijkstra otherwise. Unreachable vertices get
/// kInfinity.
std::vector<double> shortest_distances(const Graph& g, Vertex source);

GraphStats stats(const Graph& g);

bool is_shortest_path(const Graph& g, const Path& p);

// Relative comparison used wherever floating path sums are compared.
bool nearly_equal(double a, double b, double rel_eps = 1e-9);

}  // namespace mdcsp
