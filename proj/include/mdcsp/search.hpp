#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mdcsp/graph.hpp"
#include "mdcsp/vertex_set.hpp"

namespace mdcsp {

class TimeoutError : public Error {
 public:
  using Error::Error;
};

struct CentralityResult {
  Path path;
  std::size_t centrality = 0;
  Vertex source = kNoVertex;
  Vertex target = kNoVertex;
  // Edge count of `path`.
  std::size_t length = 0;
  // Sum of weights along the path; equals `length` on unit-weight graphs.
  double distance = 0.0;

  friend bool operator==(const CentralityResult&, const CentralityResult&) = default;
};

/// Ordering used to pick a single optimum: higher centrality, then shorter
/// length, then smaller (source, target, path).
bool preferred(const CentralityResult& a, const CentralityResult& b);

/// Per-source output of the degree-central shortest path search. Holds, for
/// every reached vertex v, the distance from the source, the best shortest
/// path found to v (stored as an anchor so it can be rebuilt), its
/// neighborhood, its vertex membership, and the set of shortest-path
/// predecessors of v.
class SourceSearchState {
 public:
  static constexpr std::uint32_t kUnreached = UINT32_MAX;

  Vertex source() const { return source_; }
  std::size_t vertex_count() const { return dist_.size(); }

  bool reached(Vertex v) const { return dist_[v] != kUnreached; }
  std::uint32_t distance(Vertex v) const { return dist_[v]; }
  std::size_t centrality(Vertex v) const { return neighborhood_[v].size(); }
  const VertexSet& neighborhood(Vertex v) const { return neighborhood_[v]; }
  const VertexSet& members(Vertex v) const { return members_[v]; }
  const std::vector<Vertex>& predecessors(Vertex v) const { return preds_[v]; }

  // Rebuilds the stored best path s -> v. Throws PathError if v is unreached.
  Path path(Vertex v) const;

 private:
  friend class SearchEngine;

  struct Anchor {
    Vertex w = kNoVertex;  // best path to v is <path(w), u, v>
    Vertex u = kNoVertex;
  };

  Vertex source_ = kNoVertex;
  std::vector<std::uint32_t> dist_;
  std::vector<Anchor> anchor_;
  std::vector<VertexSet> neighborhood_;
  std::vector<VertexSet> members_;
  std::vector<std::vector<Vertex>> preds_;
};

/// Neighborhood and membership of the candidate <P_w, u, v>, built from the
/// stored state of w without walking the candidate path.
struct Extension {
  VertexSet neighborhood;
  VertexSet members;
};

Extension extend(const Graph& g, const SourceSearchState& state, Vertex w, Vertex u, Vertex v);

/// Single-source most degree-central shortest paths on an undirected,
/// unweighted graph. Throws GraphError for directed or weighted input.
SourceSearchState single_source(const Graph& g, Vertex s);

struct SolveOptions {
  // Smallest number of path vertices a candidate may have. 1 admits <v>.
  std::size_t min_vertices = 2;
  unsigned workers = 1;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct SolveSummary {
  std::optional<CentralityResult> best;
  // Most central shortest path among those whose length equals `diameter`.
  std::optional<CentralityResult> at_diameter;
  std::size_t diameter = 0;
};

/// Runs the single-source search from every vertex and folds the results.
/// Output does not depend on `workers`.
SolveSummary solve_all(const Graph& g, const SolveOptions& options = {});

std::optional<CentralityResult> best_overall(const Graph& g, const SolveOptions& options = {});
std::optional<CentralityResult> best_at_diameter(const Graph& g, const SolveOptions& options = {});

namespace detail {

// Runs the search over `traversal` while scoring neighborhoods with
// `contributions` (a graph on the same vertex ids whose adjacency lists say
// which vertices each path vertex makes adjacent). For the plain solver both
// are the same graph.
SourceSearchState run_search(const Graph& traversal, const Graph& contributions, Vertex s);

struct DriverConfig {
  const Graph* traversal = nullptr;
  const Graph* contributions = nullptr;
  // Only ids below this count are used as sources or targets and only they
  // survive in reported paths.
  std::size_t original_count = 0;
  SolveOptions options;
};

SolveSummary drive(const DriverConfig& config);

void require_plain_undirected(const Graph& g);

}  // namespace detail

}  // namespace mdcsp
