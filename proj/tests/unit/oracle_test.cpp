#include <doctest.h>

#include "mdcsp/bench.hpp"
#include "mdcsp/oracle.hpp"
#include "test_support.hpp"

using namespace mdcsp;
using namespace mdcsp::testing;

TEST_CASE("enumerate_shortest_paths examples") {
  CHECK(oracle::enumerate_shortest_paths(line(4), 0, 3) == std::vector<Path>{Path({0, 1, 2, 3})});

  const auto c4 = oracle::enumerate_shortest_paths(cycle(4), 0, 2);
  CHECK(c4 == std::vector<Path>{Path({0, 1, 2}), Path({0, 3, 2})});

  // K_{2,3}: sides {0,1} and {2,3,4}.
  const Graph k23 = graph_of({{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
  const auto across = oracle::enumerate_shortest_paths(k23, 0, 1);
  CHECK(across.size() == 3);
  for (const Path& p : across) CHECK(p.length() == 2);

  CHECK(oracle::enumerate_shortest_paths(graph_of({{0, 1}}, 3), 0, 2).empty());
  CHECK(oracle::enumerate_shortest_paths(line(3), 1, 1) == std::vector<Path>{Path({1})});
}

TEST_CASE("enumeration agrees with path counts and is_shortest_path") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = random_graph(seed, 14, 0.25);
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
      for (Vertex t = 0; t < g.vertex_count(); ++t) {
        const auto paths = oracle::enumerate_shortest_paths(g, s, t);
        CHECK(static_cast<double>(paths.size()) == oracle::count_shortest_paths(g, s, t));
        for (const Path& p : paths) CHECK(is_shortest_path(g, p));
      }
    }
  }
}

TEST_CASE("budget") {
  CHECK_THROWS_AS(oracle::check_budget({.max_paths = 0}), Error);
  // 2^5 shortest paths across a chain of five diamonds.
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    const Vertex a = 3 * i, top = a + 1, bottom = a + 2, b = a + 3;
    edges.push_back({a, top});
    edges.push_back({a, bottom});
    edges.push_back({top, b});
    edges.push_back({bottom, b});
  }
  const Graph g = Graph::from_edge_list(edges);
  CHECK(oracle::count_shortest_paths(g, 0, 15) == 32);
  CHECK_THROWS_AS(oracle::enumerate_shortest_paths(g, 0, 15, {.max_paths = 10}), oracle::BudgetExceeded);
}

TEST_CASE("brute_force_best examples") {
  CHECK(oracle::brute_force_best(star(4))->centrality == 3);

  // Triangle 0-1-2 with pendant 3 on 2. Hand enumeration: <3,2> sees 0 and 1.
  const Graph g = graph_of({{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  const auto best = oracle::brute_force_best(g);
  CHECK(best->centrality == 2);
  CHECK(best->path == Path({0, 2}));

  // 4-cycle with a pendant: <1, 0> sees 2, 3 and 4.
  const Graph adv = graph_of({{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}});
  CHECK(oracle::brute_force_best(adv)->centrality == 3);
  CHECK(oracle::brute_force_best(adv)->path == Path({0, 1}));
  CHECK(best_overall(adv)->centrality == 3);

  CHECK_FALSE(oracle::brute_force_best(Graph::from_edge_list({}, {.vertex_count = 3})));
}

TEST_CASE("brute_force_best dominates every shortest path") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = random_graph(seed, 10, 0.3);
    const auto best = oracle::brute_force_best(g);
    if (!best) continue;
    for (Vertex s = 0; s < g.vertex_count(); ++s)
      for (Vertex t = 0; t < g.vertex_count(); ++t)
        if (s != t)
          for (const Path& p : oracle::enumerate_shortest_paths(g, s, t)) CHECK(best->centrality >= centrality(g, p));
  }
}

TEST_CASE("directed and weighted graphs") {
  std::vector<Edge> arcs{{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 5.0}, {2, 3, 1.0}};
  const Graph g = Graph::from_edge_list(arcs, {.directed = true, .weighted = true});
  CHECK(oracle::enumerate_shortest_paths(g, 0, 2) == std::vector<Path>{Path({0, 1, 2})});
  CHECK(oracle::enumerate_shortest_paths(g, 2, 0).empty());
  CHECK(oracle::count_shortest_paths(g, 0, 3) == 1);
}
