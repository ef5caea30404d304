#include <doctest.h>

#include "mdcsp/bench.hpp"
#include "mdcsp/oracle.hpp"
#include "mdcsp/weighted.hpp"
#include "test_support.hpp"

using namespace mdcsp;
using namespace mdcsp::testing;
using namespace mdcsp::weighted;

namespace {

Graph weighted_of(std::initializer_list<Edge> edges, std::size_t n = 0) {
  GraphOptions opts{.weighted = true};
  if (n) opts.vertex_count = n;
  return Graph::from_edge_list(std::vector<Edge>(edges), opts);
}

Graph with_unit_weights(const Graph& g) {
  std::vector<Edge> edges = g.edges();
  return Graph::from_edge_list(edges, {.weighted = true, .vertex_count = g.vertex_count()});
}

}  // namespace

TEST_CASE("augment_integer") {
  SUBCASE("one edge of weight 3") {
    const AugmentedGraph a = augment_integer(weighted_of({{0, 1, 3.0}}));
    CHECK(a.unit_graph.vertex_count() == 4);
    CHECK(a.unit_graph.edge_count() == 3);
    CHECK(a.original_count == 2);
    CHECK(a.origin_of.size() == 2);
    CHECK(a.is_auxiliary(2));
    CHECK(shortest_distances(a.unit_graph, 0)[1] == 3);
    CHECK(a.weight_sum == 3);
  }
  SUBCASE("unit weights change nothing") {
    const Graph g = random_graph(4, 15, 0.3);
    const AugmentedGraph a = augment_integer(with_unit_weights(g));
    CHECK(a.origin_of.empty());
    CHECK(a.unit_graph.edges() == g.edges());
  }
  SUBCASE("distances between originals are preserved") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const Graph g = bench::weighted_corpus_graph(seed, bench::WeightKind::Integer);
      const AugmentedGraph a = augment_integer(g);
      const auto oracle = all_pairs_oracle(g);
      for (Vertex s = 0; s < g.vertex_count(); ++s) {
        const auto d = shortest_distances(a.unit_graph, s);
        for (Vertex t = 0; t < g.vertex_count(); ++t) CHECK(d[t] == oracle[s][t]);
      }
    }
  }
  SUBCASE("non-integer weights are rejected") {
    CHECK_THROWS_AS(augment_integer(weighted_of({{0, 1, 1.5}})), GraphError);
  }
}

TEST_CASE("mdcsp_integer_weighted") {
  SUBCASE("all-unit weights reproduce best_overall") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      const Graph g = gen::uniform_random(bench::corpus_spec(seed));
      CHECK(mdcsp_integer_weighted(with_unit_weights(g)) == best_overall(g));
    }
  }
  SUBCASE("triangle with a heavy edge") {
    const Graph g = weighted_of({{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 3.0}});
    const auto got = mdcsp_integer_weighted(g);
    const auto want = oracle::brute_force_best(g);
    CHECK(got->centrality == want->centrality);
    CHECK(got->centrality == 1);
    CHECK(is_shortest_path(g, got->path));
  }
  SUBCASE("pendant hanging off a heavy edge") {
    // Auxiliary vertices never count as neighbors.
    const Graph g = weighted_of({{0, 1, 4.0}, {1, 2, 1.0}});
    const auto got = mdcsp_integer_weighted(g);
    CHECK(got->centrality == 1);
    CHECK(got->length == 1);
  }
  SUBCASE("random graphs match the weighted oracle") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const Graph g = bench::weighted_corpus_graph(seed, bench::WeightKind::Integer);
      const auto got = mdcsp_integer_weighted(g);
      const auto want = oracle::brute_force_best(g);
      REQUIRE(got.has_value() == want.has_value());
      if (!got) continue;
      INFO("seed " << seed);
      CHECK(got->centrality == want->centrality);
      CHECK(got->centrality == recount_centrality(g, got->path));
      CHECK(is_shortest_path(g, got->path));
      CHECK(got->distance == path_weight(g, got->path));
    }
  }
  SUBCASE("directed input is rejected") {
    std::vector<Edge> e{{0, 1, 2.0}};
    CHECK_THROWS_AS(mdcsp_integer_weighted(Graph::from_edge_list(e, {.directed = true, .weighted = true})),
                    GraphError);
  }
}

TEST_CASE("floyd_warshall") {
  SUBCASE("unit triangle") {
    const ApspTables t = floyd_warshall(complete(3));
    for (Vertex i = 0; i < 3; ++i)
      for (Vertex j = 0; j < 3; ++j) CHECK(t.distance(i, j) == (i == j ? 0 : 1));
  }
  SUBCASE("weighted line") {
    const ApspTables t = floyd_warshall(weighted_of({{0, 1, 2.0}, {1, 2, 5.0}}));
    CHECK(t.distance(0, 2) == 7);
    CHECK(t.path(0, 2) == Path({0, 1, 2}));
  }
  SUBCASE("unreachable pairs") {
    const ApspTables t = floyd_warshall(graph_of({{0, 1}}, 3));
    CHECK(t.distance(0, 2) == kInfinity);
    CHECK(t.path(0, 2).empty());
  }
  SUBCASE("matches Dijkstra on random graphs") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const Graph g = bench::weighted_corpus_graph(seed, bench::WeightKind::Continuous);
      const ApspTables t = floyd_warshall(g);
      for (Vertex s = 0; s < g.vertex_count(); ++s) {
        const auto d = shortest_distances(g, s);
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
          if (d[v] == kInfinity) {
            CHECK(t.distance(s, v) == kInfinity);
          } else {
            CHECK(nearly_equal(t.distance(s, v), d[v]));
            if (s != v) CHECK(nearly_equal(path_weight(g, t.path(s, v)), d[v]));
          }
        }
      }
    }
  }
}

TEST_CASE("mdcsp_continuous_weighted") {
  SUBCASE("4-cycle with power-of-two weights") {
    const Graph g = weighted_of({{0, 1, 1.0}, {1, 2, 2.0}, {2, 3, 4.0}, {3, 0, 8.0}});
    const auto got = mdcsp_continuous_weighted(g);
    const auto want = oracle::brute_force_best(g);
    CHECK(got->centrality == want->centrality);
    CHECK(got->centrality == 2);
  }
  SUBCASE("unit K3 is ambiguous") {
    CHECK_THROWS_AS(mdcsp_continuous_weighted(complete(3)), AmbiguityError);
  }
  SUBCASE("tied path weights are ambiguous") {
    // 0-1-2 weighs 1.5 + 2.5 = 4 and so does the direct edge.
    const Graph g = weighted_of({{0, 1, 1.5}, {1, 2, 2.5}, {0, 2, 4.0}});
    CHECK_THROWS_AS(mdcsp_continuous_weighted(g), AmbiguityError);
  }
  SUBCASE("random graphs match the weighted oracle") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const Graph g = bench::weighted_corpus_graph(seed, bench::WeightKind::Continuous);
      const auto got = mdcsp_continuous_weighted(g);
      const auto want = oracle::brute_force_best(g);
      REQUIRE(got.has_value() == want.has_value());
      if (!got) continue;
      INFO("seed " << seed);
      CHECK(got->centrality == want->centrality);
      // The returned path is the only shortest path between its endpoints.
      CHECK(oracle::enumerate_shortest_paths(g, got->source, got->target) == std::vector<Path>{got->path});
    }
  }
}
