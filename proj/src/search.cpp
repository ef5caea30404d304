#include "mdcsp/search.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <deque>
#include <exception>
#include <mutex>
#include <thread>
#include <tuple>

namespace mdcsp {

bool preferred(const CentralityResult& a, const CentralityResult& b) {
  if (a.centrality != b.centrality) return a.centrality > b.centrality;
  if (a.length != b.length) return a.length < b.length;
  return std::tie(a.source, a.target, a.path) < std::tie(b.source, b.target, b.path);
}

Path SourceSearchState::path(Vertex v) const {
  if (v >= dist_.size() || !reached(v))
    throw PathError("vertex " + std::to_string(v) + " not reached from " + std::to_string(source_));
  std::vector<Vertex> rev;
  rev.reserve(dist_[v] + 1);
  Vertex cur = v;
  while (cur != source_) {
    const Anchor& a = anchor_[cur];
    rev.push_back(cur);
    if (a.w == kNoVertex) break;  // distance-1 vertex: path is <s, cur>
    rev.push_back(a.u);
    cur = a.w;
  }
  rev.push_back(source_);
  std::reverse(rev.begin(), rev.end());
  return Path(std::move(rev));
}

class SearchEngine {
 public:
  SearchEngine(const Graph& traversal, const Graph& contributions)
      : traversal_(traversal), contrib_(contributions) {}

  SourceSearchState run(Vertex s) {
    const std::size_t n = traversal_.vertex_count();
    SourceSearchState st;
    st.source_ = s;
    st.dist_.assign(n, SourceSearchState::kUnreached);
    st.anchor_.assign(n, {});
    st.neighborhood_.assign(n, VertexSet());
    st.members_.assign(n, VertexSet());
    st.preds_.assign(n, {});

    st.dist_[s] = 0;
    st.members_[s] = VertexSet(n);
    st.members_[s].insert(s);
    st.neighborhood_[s] = VertexSet(n);
    for (Vertex x : contrib_.out(s)) st.neighborhood_[s].insert(x);
    st.neighborhood_[s].erase(s);

    // Unit weights: FIFO order pops vertices in nondecreasing distance.
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      const std::uint32_t d_new = st.dist_[u] + 1;
      for (Vertex v : traversal_.out(u)) {
        if (d_new == 1) {
          queue.push_back(v);
          st.dist_[v] = 1;
          st.preds_[v] = {s};
          seed_neighbor(st, s, v);
        } else if (d_new < st.dist_[v]) {
          assert(st.dist_[v] == SourceSearchState::kUnreached);
          queue.push_back(v);
          st.dist_[v] = d_new;
          st.preds_[v].push_back(u);
          relax(st, u, v, /*undefined=*/true);
        } else if (d_new == st.dist_[v]) {
          st.preds_[v].push_back(u);
          relax(st, u, v, /*undefined=*/false);
        }
      }
    }
    return st;
  }

  // C(<P_w, u, v>) without materializing anything.
  std::size_t candidate_centrality(const SourceSearchState& st, Vertex w, Vertex u, Vertex v) const {
    const VertexSet& nw = st.neighborhood_[w];
    const VertexSet& mw = st.members_[w];
    std::size_t count = nw.size();
    if (nw.contains(u)) --count;
    if (nw.contains(v)) --count;
    auto fresh = [&](Vertex x) { return x != u && x != v && !nw.contains(x) && !mw.contains(x); };
    auto a = contrib_.out(u);
    auto b = contrib_.out(v);
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      Vertex x;
      if (j == b.size() || (i < a.size() && a[i] < b[j])) {
        x = a[i++];
      } else if (i == a.size() || b[j] < a[i]) {
        x = b[j++];
      } else {
        x = a[i++];
        ++j;
      }
      if (fresh(x)) ++count;
    }
    return count;
  }

  Extension materialize(const SourceSearchState& st, Vertex w, Vertex u, Vertex v) const {
    Extension ext{st.neighborhood_[w], st.members_[w]};
    for (Vertex x : contrib_.out(u))
      if (!ext.members.contains(x)) ext.neighborhood.insert(x);
    for (Vertex x : contrib_.out(v))
      if (!ext.members.contains(x)) ext.neighborhood.insert(x);
    ext.neighborhood.erase(u);
    ext.neighborhood.erase(v);
    ext.members.insert(u);
    ext.members.insert(v);
    return ext;
  }

 private:
  // P_v = <s, v>.
  void seed_neighbor(SourceSearchState& st, Vertex s, Vertex v) const {
    VertexSet nb = st.neighborhood_[s];
    for (Vertex x : contrib_.out(v))
      if (x != s) nb.insert(x);
    nb.erase(v);
    VertexSet mem = st.members_[s];
    mem.insert(v);
    st.neighborhood_[v] = std::move(nb);
    st.members_[v] = std::move(mem);
    st.anchor_[v] = {};
  }

  // Tries <P_w, u, v> for every w in preds(u); strict improvement only.
  void relax(SourceSearchState& st, Vertex u, Vertex v, bool undefined) const {
    std::size_t best = undefined ? 0 : st.neighborhood_[v].size();
    Vertex best_w = kNoVertex;
    for (Vertex w : st.preds_[u]) {
      const std::size_t c = candidate_centrality(st, w, u, v);
      if (undefined || c > best) {
        best = c;
        best_w = w;
        undefined = false;
      }
    }
    if (best_w == kNoVertex) return;
    Extension ext = materialize(st, best_w, u, v);
    st.neighborhood_[v] = std::move(ext.neighborhood);
    st.members_[v] = std::move(ext.members);
    st.anchor_[v] = {best_w, u};
  }

  const Graph& traversal_;
  const Graph& contrib_;
};

Extension extend(const Graph& g, const SourceSearchState& state, Vertex w, Vertex u, Vertex v) {
  return SearchEngine(g, g).materialize(state, w, u, v);
}

namespace detail {

void require_plain_undirected(const Graph& g) {
  if (g.directed()) throw GraphError("the centrality search requires an undirected graph");
  if (g.weighted()) throw GraphError("the centrality search requires unit edge weights");
}

SourceSearchState run_search(const Graph& traversal, const Graph& contributions, Vertex s) {
  if (!traversal.contains(s)) throw GraphError("source " + std::to_string(s) + " out of range");
  return SearchEngine(traversal, contributions).run(s);
}

namespace {

// Comparable key for a candidate (s, v) pair; paths are only built for winners.
struct Candidate {
  std::size_t centrality = 0;
  std::size_t length = 0;  // projected edge count
  std::uint32_t hops = 0;  // traversal distance
  Vertex source = kNoVertex;
  Vertex target = kNoVertex;

  bool valid() const { return target != kNoVertex; }
  bool beats(const Candidate& o) const {
    if (!o.valid()) return valid();
    if (!valid()) return false;
    if (centrality != o.centrality) return centrality > o.centrality;
    if (length != o.length) return length < o.length;
    return std::tie(source, target) < std::tie(o.source, o.target);
  }
};

struct SourceOutcome {
  std::optional<CentralityResult> best;
  std::optional<CentralityResult> at_max_distance;
  std::uint32_t max_distance = 0;
};

CentralityResult build_result(const SourceSearchState& st, const Candidate& c, std::size_t original_count) {
  Path full = st.path(c.target);
  std::vector<Vertex> kept;
  kept.reserve(full.size());
  for (Vertex x : full)
    if (x < original_count) kept.push_back(x);
  CentralityResult r;
  r.path = Path(std::move(kept));
  r.centrality = c.centrality;
  r.source = c.source;
  r.target = c.target;
  r.length = r.path.length();
  r.distance = c.hops;
  return r;
}

SourceOutcome process_source(const DriverConfig& cfg, Vertex s) {
  SourceSearchState st = run_search(*cfg.traversal, *cfg.contributions, s);
  const std::size_t originals = cfg.original_count;
  Candidate best, far;
  std::uint32_t max_distance = 0;
  for (Vertex v = 0; v < originals; ++v) {
    if (!st.reached(v)) continue;
    Candidate c;
    c.centrality = st.centrality(v);
    c.hops = st.distance(v);
    c.source = s;
    c.target = v;
    const VertexSet& mem = st.members(v);
    // Count original vertices on the path.
    std::size_t on_path = 0;
    if (originals == cfg.traversal->vertex_count()) {
      on_path = mem.size();
    } else {
      for (std::size_t x : mem.members())
        if (x < originals) ++on_path;
    }
    c.length = on_path - 1;
    if (c.hops > max_distance) {
      max_distance = c.hops;
      far = c;
    } else if (c.hops == max_distance && c.beats(far)) {
      far = c;
    }
    if (on_path >= cfg.options.min_vertices && c.beats(best)) best = c;
  }
  SourceOutcome out;
  out.max_distance = max_distance;
  if (best.valid()) out.best = build_result(st, best, originals);
  if (far.valid() && max_distance > 0) out.at_max_distance = build_result(st, far, originals);
  return out;
}

}  // namespace

SolveSummary drive(const DriverConfig& cfg) {
  const std::size_t sources = cfg.original_count;
  std::vector<SourceOutcome> outcomes(sources);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> timed_out{false};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    try {
      for (;;) {
        if (timed_out.load()) return;
        const std::size_t s = next.fetch_add(1);
        if (s >= sources) return;
        if (cfg.options.deadline && std::chrono::steady_clock::now() > *cfg.options.deadline) {
          timed_out = true;
          return;
        }
        outcomes[s] = process_source(cfg, static_cast<Vertex>(s));
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      timed_out = true;
    }
  };

  const unsigned workers = std::max(1u, cfg.options.workers);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  if (timed_out) throw TimeoutError("solve exceeded its deadline");

  // Fold in source order so the outcome is independent of scheduling.
  SolveSummary summary;
  for (const SourceOutcome& o : outcomes) {
    if (o.best && (!summary.best || preferred(*o.best, *summary.best))) summary.best = o.best;
    if (!o.at_max_distance) continue;
    if (o.max_distance > summary.diameter) {
      summary.diameter = o.max_distance;
      summary.at_diameter = o.at_max_distance;
    } else if (o.max_distance == summary.diameter &&
               (!summary.at_diameter || preferred(*o.at_max_distance, *summary.at_diameter))) {
      summary.at_diameter = o.at_max_distance;
    }
  }
  return summary;
}

}  // namespace detail

SourceSearchState single_source(const Graph& g, Vertex s) {
  detail::require_plain_undirected(g);
  return detail::run_search(g, g, s);
}

SolveSummary solve_all(const Graph& g, const SolveOptions& options) {
  detail::require_plain_undirected(g);
  detail::DriverConfig cfg;
  cfg.traversal = &g;
  cfg.contributions = &g;
  cfg.original_count = g.vertex_count();
  cfg.options = options;
  return detail::drive(cfg);
}

std::optional<CentralityResult> best_overall(const Graph& g, const SolveOptions& options) {
  return solve_all(g, options).best;
}

std::optional<CentralityResult> best_at_diameter(const Graph& g, const SolveOptions& options) {
  return solve_all(g, options).at_diameter;
}

}  // namespace mdcsp
