#include "mdcsp/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace mdcsp::oracle {
namespace {

bool on_dag(const std::vector<double>& dist, Vertex u, double w, Vertex v) {
  return dist[u] != kInfinity && dist[v] != kInfinity && nearly_equal(dist[u] + w, dist[v]);
}

// Topological order of the shortest-path DAG: increasing distance.
std::vector<Vertex> by_distance(const std::vector<double>& dist) {
  std::vector<Vertex> order;
  for (Vertex v = 0; v < dist.size(); ++v)
    if (dist[v] != kInfinity) order.push_back(v);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return dist[a] < dist[b]; });
  return order;
}

}  // namespace

void check_budget(const EnumerationBudget& budget) {
  if (budget.max_paths == 0 || budget.max_total == 0) throw Error("enumeration caps must be positive");
}

std::vector<Path> enumerate_shortest_paths(const Graph& g, Vertex s, Vertex t, const EnumerationBudget& budget) {
  check_budget(budget);
  if (!g.contains(s) || !g.contains(t)) throw Error("vertex out of range");
  const std::vector<double> dist = shortest_distances(g, s);
  std::vector<Path> paths;
  if (dist[t] == kInfinity) return paths;

  std::vector<Vertex> stack{t};
  std::function<void(Vertex)> walk = [&](Vertex cur) {
    if (cur == s) {
      if (paths.size() >= budget.max_paths || paths.size() >= budget.max_total)
        throw BudgetExceeded("more than " + std::to_string(std::min(budget.max_paths, budget.max_total)) +
                             " shortest paths from " + std::to_string(s) + " to " + std::to_string(t));
      paths.emplace_back(std::vector<Vertex>(stack.rbegin(), stack.rend()));
      return;
    }
    auto preds = g.in(cur);
    auto ws = g.in_weights(cur);
    for (std::size_t i = 0; i < preds.size(); ++i) {
      if (!on_dag(dist, preds[i], ws[i], cur)) continue;
      stack.push_back(preds[i]);
      walk(preds[i]);
      stack.pop_back();
    }
  };
  walk(t);
  std::sort(paths.begin(), paths.end());
  return paths;
}

double count_shortest_paths(const Graph& g, Vertex s, Vertex t) {
  const std::vector<double> dist = shortest_distances(g, s);
  if (dist[t] == kInfinity) return 0.0;
  std::vector<double> sigma(g.vertex_count(), 0.0);
  sigma[s] = 1.0;
  for (Vertex v : by_distance(dist)) {
    if (v == s) continue;
    auto preds = g.in(v);
    auto ws = g.in_weights(v);
    for (std::size_t i = 0; i < preds.size(); ++i)
      if (on_dag(dist, preds[i], ws[i], v)) sigma[v] += sigma[preds[i]];
  }
  return sigma[t];
}

namespace {

// Calls visit(path) for every shortest path starting at s, including <s>.
template <typename Visit>
void for_each_shortest_path_from(const Graph& g, Vertex s, const EnumerationBudget& budget,
                                 std::size_t& total, Visit&& visit) {
  const std::vector<double> dist = shortest_distances(g, s);
  std::vector<std::size_t> per_target(g.vertex_count(), 0);
  std::vector<Vertex> stack{s};
  std::function<void(Vertex)> walk = [&](Vertex u) {
    if (++per_target[u] > budget.max_paths)
      throw BudgetExceeded("more than " + std::to_string(budget.max_paths) + " shortest paths from " +
                           std::to_string(s) + " to " + std::to_string(u));
    if (++total > budget.max_total)
      throw BudgetExceeded("more than " + std::to_string(budget.max_total) + " shortest paths in total");
    visit(Path(stack));
    auto nbrs = g.out(u);
    auto ws = g.out_weights(u);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (!on_dag(dist, u, ws[i], nbrs[i])) continue;
      stack.push_back(nbrs[i]);
      walk(nbrs[i]);
      stack.pop_back();
    }
  };
  walk(s);
}

}  // namespace

std::optional<CentralityResult> brute_force_best(const Graph& g, const BruteForceOptions& options) {
  check_budget(options.budget);
  std::optional<CentralityResult> best;
  std::size_t total = 0;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    for_each_shortest_path_from(g, s, options.budget, total, [&](const Path& p) {
      if (p.size() < options.min_vertices) return;
      CentralityResult r;
      r.centrality = centrality(g, p, options.adjacency);
      r.source = p.front();
      r.target = p.back();
      r.length = p.length();
      r.distance = path_weight(g, p);
      r.path = p;
      if (!best || preferred(r, *best)) best = std::move(r);
    });
  }
  return best;
}

std::vector<std::optional<std::size_t>> per_target_maxima(const Graph& g, Vertex s,
                                                         const BruteForceOptions& options) {
  check_budget(options.budget);
  std::vector<std::optional<std::size_t>> best(g.vertex_count());
  std::size_t total = 0;
  for_each_shortest_path_from(g, s, options.budget, total, [&](const Path& p) {
    const std::size_t c = centrality(g, p, options.adjacency);
    auto& slot = best[p.back()];
    if (!slot || c > *slot) slot = c;
  });
  return best;
}

}  // namespace mdcsp::oracle
