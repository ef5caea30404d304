#include "mdcsp/weighted.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace mdcsp::weighted {

AugmentedGraph augment_integer(const Graph& g) {
  AugmentedGraph aug;
  aug.original_count = g.vertex_count();
  std::vector<Edge> unit_edges;
  Vertex next_id = static_cast<Vertex>(g.vertex_count());
  for (const Edge& e : g.edges()) {
    const double w = e.weight;
    if (!(w >= 1.0) || std::floor(w) != w) {
      std::ostringstream os;
      os << "edge (" << e.u << ", " << e.v << ") has weight " << w << "; positive integers required";
      throw GraphError(os.str());
    }
    aug.weight_sum += w;
    const auto steps = static_cast<std::size_t>(w);
    Vertex prev = e.u;
    for (std::size_t pos = 1; pos < steps; ++pos) {
      const Vertex aux = next_id++;
      aug.origin_of.push_back({e.u, e.v, pos});
      unit_edges.push_back({prev, aux});
      prev = aux;
    }
    unit_edges.push_back({prev, e.v});
  }
  aug.unit_graph = Graph::from_edge_list(unit_edges, {.directed = g.directed(), .vertex_count = next_id});
  return aug;
}

std::optional<CentralityResult> mdcsp_integer_weighted(const Graph& g, const SolveOptions& options) {
  if (g.directed()) throw GraphError("the integer-weight route requires an undirected graph");
  const AugmentedGraph aug = augment_integer(g);

  // Original adjacency over the augmented id space; auxiliaries stay isolated
  // and therefore never count as neighbors.
  std::vector<Edge> original;
  original.reserve(g.edge_count());
  for (const Edge& e : g.edges()) original.push_back({e.u, e.v});
  const Graph contributions =
      Graph::from_edge_list(original, {.vertex_count = aug.unit_graph.vertex_count()});

  detail::DriverConfig cfg;
  cfg.traversal = &aug.unit_graph;
  cfg.contributions = &contributions;
  cfg.original_count = aug.original_count;
  cfg.options = options;
  return detail::drive(cfg).best;
}

Path ApspTables::path(Vertex i, Vertex j) const {
  if (distance(i, j) == kInfinity) return {};
  std::vector<Vertex> out{i};
  Vertex cur = i;
  while (cur != j) {
    cur = next(cur, j);
    out.push_back(cur);
  }
  return Path(std::move(out));
}

ApspTables floyd_warshall(const Graph& g) {
  const std::size_t n = g.vertex_count();
  ApspTables t;
  t.n = n;
  t.dist.assign(n * n, kInfinity);
  t.next_hop.assign(n * n, kNoVertex);
  for (Vertex i = 0; i < n; ++i) t.dist[i * n + i] = 0.0;
  for (Vertex u = 0; u < n; ++u) {
    auto nbrs = g.out(u);
    auto ws = g.out_weights(u);
    for (std::size_t e = 0; e < nbrs.size(); ++e) {
      t.dist[u * n + nbrs[e]] = ws[e];
      t.next_hop[u * n + nbrs[e]] = nbrs[e];
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      const double dik = t.dist[i * n + k];
      if (dik == kInfinity) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const double cand = dik + t.dist[k * n + j];
        if (cand < t.dist[i * n + j]) {
          t.dist[i * n + j] = cand;
          t.next_hop[i * n + j] = t.next_hop[i * n + k];
        }
      }
    }
  }
  return t;
}

namespace {

void check_generic_weights(const Graph& g, const ApspTables& apsp, double eps) {
  std::vector<double> ws;
  ws.reserve(g.edge_count());
  for (const Edge& e : g.edges()) ws.push_back(e.weight);
  std::sort(ws.begin(), ws.end());
  for (std::size_t i = 1; i < ws.size(); ++i) {
    if (nearly_equal(ws[i - 1], ws[i], eps)) {
      std::ostringstream os;
      os << "two edges share weight " << ws[i]
         << "; shortest paths may not be unique. Use the integer-weight route or perturb the weights";
      throw AmbiguityError(os.str());
    }
  }
  const std::size_t n = g.vertex_count();
  for (Vertex s = 0; s < n; ++s) {
    for (Vertex v = 0; v < n; ++v) {
      if (v == s || apsp.distance(s, v) == kInfinity) continue;
      auto preds = g.in(v);
      auto pw = g.in_weights(v);
      std::size_t tight = 0;
      for (std::size_t i = 0; i < preds.size(); ++i) {
        const double via = apsp.distance(s, preds[i]);
        if (via != kInfinity && nearly_equal(via + pw[i], apsp.distance(s, v), eps)) ++tight;
      }
      if (tight > 1) {
        std::ostringstream os;
        os << "pair (" << s << ", " << v << ") has tied shortest paths; use the integer-weight route"
           << " or perturb the weights";
        throw AmbiguityError(os.str());
      }
    }
  }
}

}  // namespace

std::optional<CentralityResult> mdcsp_continuous_weighted(const Graph& g, const ContinuousOptions& options) {
  const ApspTables apsp = floyd_warshall(g);
  check_generic_weights(g, apsp, options.tie_epsilon);
  std::optional<CentralityResult> best;
  const std::size_t n = g.vertex_count();
  for (Vertex s = 0; s < n; ++s) {
    for (Vertex t = 0; t < n; ++t) {
      if (apsp.distance(s, t) == kInfinity) continue;
      Path p = s == t ? Path({s}) : apsp.path(s, t);
      if (p.size() < options.min_vertices) continue;
      CentralityResult r;
      r.centrality = centrality(g, p);
      r.source = s;
      r.target = t;
      r.length = p.length();
      r.distance = apsp.distance(s, t);
      r.path = std::move(p);
      if (!best || preferred(r, *best)) best = std::move(r);
    }
  }
  return best;
}

}  // namespace mdcsp::weighted
