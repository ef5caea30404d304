#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mdcsp/graph.hpp"
#include "mdcsp/search.hpp"

namespace mdcsp::oracle {

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

struct EnumerationBudget {
  std::size_t max_paths = 1'000'000;  // per (s, t) pair
  std::size_t max_total = 50'000'000;
};

// Validates caps and throws Error when either is zero.
void check_budget(const EnumerationBudget& budget);

/// Every shortest s -> t path, found by walking the shortest-path
/// predecessor DAG backwards from t. Empty when t is unreachable.
std::vector<Path> enumerate_shortest_paths(const Graph& g, Vertex s, Vertex t,
                                           const EnumerationBudget& budget = {});

/// Number of shortest s -> t paths by the predecessor-count recurrence.
double count_shortest_paths(const Graph& g, Vertex s, Vertex t);

struct BruteForceOptions {
  std::size_t min_vertices = 2;
  Adjacency adjacency = Adjacency::Out;
  EnumerationBudget budget;
};

/// Maximum centrality over all shortest paths by exhaustion. Works on
/// directed and weighted graphs.
std::optional<CentralityResult> brute_force_best(const Graph& g, const BruteForceOptions& options = {});

/// For a fixed source: the maximum centrality over shortest s -> v paths for
/// every target v (nullopt when v is unreachable).
std::vector<std::optional<std::size_t>> per_target_maxima(const Graph& g, Vertex s,
                                                         const BruteForceOptions& options = {});

}  // namespace mdcsp::oracle
