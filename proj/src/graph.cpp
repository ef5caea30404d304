#include "mdcsp/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <queue>
#include <sstream>

namespace mdcsp {
namespace {

std::string describe(const Edge& e) {
  std::ostringstream os;
  os << "(" << e.u << ", " << e.v << ")";
  return os.str();
}

// Builds CSR arrays from (from, to, weight) triples sorted by (from, to).
void build_csr(std::size_t n, std::vector<Edge> arcs, std::vector<std::size_t>& offsets,
               std::vector<Vertex>& targets, std::vector<double>& weights) {
  std::sort(arcs.begin(), arcs.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  offsets.assign(n + 1, 0);
  for (const Edge& a : arcs) ++offsets[a.u + 1];
  for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
  targets.resize(arcs.size());
  weights.resize(arcs.size());
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    targets[i] = arcs[i].v;
    weights[i] = arcs[i].weight;
  }
}

}  // namespace

Graph Graph::from_edge_list(std::span<const Edge> edges, GraphOptions options) {
  std::size_t n = 0;
  for (const Edge& e : edges) n = std::max<std::size_t>(n, std::max(e.u, e.v) + std::size_t{1});
  if (options.vertex_count) {
    if (*options.vertex_count < n)
      throw GraphError("vertex count " + std::to_string(*options.vertex_count) +
                       " is smaller than the largest endpoint id + 1 (" + std::to_string(n) + ")");
    n = *options.vertex_count;
  }
  if (n >= kNoVertex) throw GraphError("too many vertices");

  Graph g;
  g.directed_ = options.directed;
  g.weighted_ = options.weighted;
  g.edges_.reserve(edges.size());
  for (Edge e : edges) {
    if (e.u == e.v) throw GraphError("self-loop on edge " + describe(e));
    if (!options.weighted) {
      e.weight = 1.0;
    } else if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
      throw GraphError("non-positive or non-finite weight on edge " + describe(e));
    }
    if (!options.directed && e.u > e.v) std::swap(e.u, e.v);
    g.edges_.push_back(e);
  }
  std::sort(g.edges_.begin(), g.edges_.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end(), [](const Edge& a, const Edge& b) {
    return a.u == b.u && a.v == b.v;
  });
  if (dup != g.edges_.end()) throw GraphError("duplicate edge " + describe(*dup));

  std::vector<Edge> arcs;
  arcs.reserve(g.edges_.size() * (options.directed ? 1 : 2));
  for (const Edge& e : g.edges_) {
    arcs.push_back(e);
    if (!options.directed) arcs.push_back({e.v, e.u, e.weight});
  }
  build_csr(n, arcs, g.offsets_, g.targets_, g.weights_);
  if (options.directed) {
    for (Edge& a : arcs) std::swap(a.u, a.v);
    build_csr(n, std::move(arcs), g.in_offsets_, g.in_sources_, g.in_weights_);
  }
  return g;
}

std::span<const Vertex> Graph::out(Vertex v) const {
  return {targets_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

std::span<const double> Graph::out_weights(Vertex v) const {
  return {weights_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

std::span<const Vertex> Graph::in(Vertex v) const {
  if (!directed_) return out(v);
  return {in_sources_.data() + in_offsets_[v], in_offsets_[v + 1] - in_offsets_[v]};
}

std::span<const double> Graph::in_weights(Vertex v) const {
  if (!directed_) return out_weights(v);
  return {in_weights_.data() + in_offsets_[v], in_offsets_[v + 1] - in_offsets_[v]};
}

bool Graph::has_edge(Vertex u, Vertex v) const { return weight(u, v).has_value(); }

std::optional<double> Graph::weight(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return std::nullopt;
  auto nbrs = out(u);
  auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v);
  if (it == nbrs.end() || *it != v) return std::nullopt;
  return out_weights(u)[static_cast<std::size_t>(it - nbrs.begin())];
}

Path Path::reversed() const {
  return Path(std::vector<Vertex>(vertices_.rbegin(), vertices_.rend()));
}

void validate_path(const Graph& g, const Path& p) {
  if (p.empty()) throw PathError("empty path");
  VertexSet seen(g.vertex_count());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!g.contains(p[i])) throw PathError("vertex " + std::to_string(p[i]) + " out of range");
    if (!seen.insert(p[i])) throw PathError("vertex " + std::to_string(p[i]) + " repeats");
    if (i > 0 && !g.has_edge(p[i - 1], p[i]))
      throw PathError("no edge " + std::to_string(p[i - 1]) + " -> " + std::to_string(p[i]));
  }
}

VertexSet neighborhood(const Graph& g, const Path& p, Adjacency mode) {
  validate_path(g, p);
  VertexSet result(g.vertex_count());
  const bool both = mode == Adjacency::Any && g.directed();
  for (Vertex u : p) {
    for (Vertex v : g.out(u)) result.insert(v);
    if (both)
      for (Vertex v : g.in(u)) result.insert(v);
  }
  for (Vertex u : p) result.erase(u);
  return result;
}

std::size_t centrality(const Graph& g, const Path& p, Adjacency mode) {
  return neighborhood(g, p, mode).size();
}

double path_weight(const Graph& g, const Path& p) {
  double total = 0.0;
  for (std::size_t i = 1; i < p.size(); ++i) {
    auto w = g.weight(p[i - 1], p[i]);
    if (!w) throw PathError("no edge " + std::to_string(p[i - 1]) + " -> " + std::to_string(p[i]));
    total += *w;
  }
  return total;
}

namespace {

std::vector<double> bfs_hops(const Graph& g, Vertex source) {
  std::vector<double> dist(g.vertex_count(), kInfinity);
  std::deque<Vertex> queue{source};
  dist[source] = 0.0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex v : g.out(u)) {
      if (dist[v] == kInfinity) {
        dist[v] = dist[u] + 1.0;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

}  // namespace

std::vector<double> shortest_distances(const Graph& g, Vertex source) {
  if (!g.weighted()) return bfs_hops(g, source);
  std::vector<double> dist(g.vertex_count(), kInfinity);
  using Item = std::pair<double, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[source] = 0.0;
  heap.emplace(0.0, source);
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (d > dist[u]) continue;
    auto nbrs = g.out(u);
    auto ws = g.out_weights(u);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      double nd = d + ws[i];
      if (nd < dist[nbrs[i]]) {
        dist[nbrs[i]] = nd;
        heap.emplace(nd, nbrs[i]);
      }
    }
  }
  return dist;
}

GraphStats stats(const Graph& g) {
  GraphStats s;
  s.vertex_count = g.vertex_count();
  s.edge_count = g.edge_count();
  for (Vertex v = 0; v < g.vertex_count(); ++v) s.max_degree = std::max(s.max_degree, g.degree(v));
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (double d : bfs_hops(g, v)) {
      if (d == kInfinity) {
        s.connected = false;
      } else {
        s.diameter = std::max(s.diameter, static_cast<std::size_t>(d));
      }
    }
  }
  return s;
}

bool nearly_equal(double a, double b, double rel_eps) {
  if (a == b) return true;
  return std::abs(a - b) <= rel_eps * std::max({1.0, std::abs(a), std::abs(b)});
}

bool is_shortest_path(const Graph& g, const Path& p) {
  validate_path(g, p);
  if (p.size() == 1) return true;
  const double d = shortest_distances(g, p.front())[p.back()];
  return nearly_equal(path_weight(g, p), d);
}

}  // namespace mdcsp
