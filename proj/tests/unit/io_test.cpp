#include <doctest.h>

#include <sstream>

#include "mdcsp/bench.hpp"
#include "mdcsp/io.hpp"
#include "test_support.hpp"

using namespace mdcsp;
using namespace mdcsp::io;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("load_edge_list") {
  SUBCASE("labels in order of appearance") {
    const LabeledGraph lg = load_edge_list("a b\nb c\n");
    CHECK(lg.graph.vertex_count() == 3);
    CHECK(lg.graph.edge_count() == 2);
    CHECK(lg.labels == std::vector<std::string>{"a", "b", "c"});
    CHECK(lg.graph.has_edge(0, 1));
    CHECK(lg.graph.has_edge(1, 2));
  }
  SUBCASE("repeated edge is kept once with a warning") {
    const LabeledGraph lg = load_edge_list("a b\nb a\n");
    CHECK(lg.graph.edge_count() == 1);
    CHECK(lg.duplicate_edges == 1);
  }
  SUBCASE("self-loops, comments and blank lines") {
    const LabeledGraph lg = load_edge_list("# header\n% other\n\n1 1\n1 2  # trailing\n");
    CHECK(lg.graph.edge_count() == 1);
    CHECK(lg.self_loops == 1);
  }
  SUBCASE("weights") {
    const LabeledGraph lg = load_edge_list("a b 2.5\nb c 1\n", {.weighted = true});
    CHECK(lg.graph.weighted());
    CHECK(lg.graph.weight(0, 1) == 2.5);
    CHECK_THROWS_AS(load_edge_list("a b\n", {.weighted = true}), ParseError);
    CHECK_THROWS_AS(load_edge_list("a b x\n", {.weighted = true}), ParseError);
  }
  SUBCASE("malformed line") { CHECK_THROWS_AS(load_edge_list("a\n"), ParseError); }
}

TEST_CASE("load_matrix_market") {
  SUBCASE("pattern symmetric P3") {
    const LabeledGraph lg = load_matrix_market(
        "%%MatrixMarket matrix coordinate pattern symmetric\n% comment\n3 3 2\n2 1\n3 2\n");
    CHECK(lg.graph.vertex_count() == 3);
    CHECK(lg.graph.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  }
  SUBCASE("diagonal entry dropped with a warning") {
    const LabeledGraph lg =
        load_matrix_market("%%MatrixMarket matrix coordinate real symmetric\n2 2 2\n1 1 4.0\n2 1 1.0\n");
    CHECK(lg.self_loops == 1);
    CHECK(lg.graph.edge_count() == 1);
  }
  SUBCASE("general storage collapses mirrored entries") {
    const LabeledGraph lg =
        load_matrix_market("%%MatrixMarket matrix coordinate integer general\n2 2 2\n1 2 1\n2 1 1\n");
    CHECK(lg.graph.edge_count() == 1);
  }
  SUBCASE("unsupported or broken input") {
    CHECK_THROWS_AS(load_matrix_market("%%MatrixMarket matrix array real general\n2 2\n1\n2\n3\n4\n"), ParseError);
    CHECK_THROWS_AS(load_matrix_market("%%MatrixMarket matrix coordinate complex general\n1 1 0\n"), ParseError);
    CHECK_THROWS_AS(load_matrix_market("%%MatrixMarket matrix coordinate pattern general\n2 2 2\n1 2\n"), ParseError);
    CHECK_THROWS_AS(load_matrix_market("%%MatrixMarket matrix coordinate pattern general\n2 2 1\n1 3\n"), ParseError);
    CHECK_THROWS_AS(load_matrix_market("no banner\n"), ParseError);
  }
}

TEST_CASE("edge list round trip") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = testing::random_graph(seed, 15, 0.3);
    const LabeledGraph back = load_edge_list(write_edge_list(g));
    // Ids may be renumbered, so compare through labels.
    std::vector<std::pair<int, int>> a, b;
    for (const Edge& e : g.edges()) a.emplace_back(e.u, e.v);
    for (const Edge& e : back.graph.edges()) {
      int u = std::stoi(back.label(e.u)), v = std::stoi(back.label(e.v));
      b.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::ranges::sort(b);
    CHECK(a == b);
  }
  const LabeledGraph lg = load_edge_list("x y 1.5\ny z 2\n", {.weighted = true});
  CHECK(load_edge_list(write_edge_list(lg), {.weighted = true}).graph.edges() == lg.graph.edges());
}

TEST_CASE("write_results") {
  const std::string header =
      "instance,V,E,max_degree,diam,diam_centrality,path_length,path_centrality,runtime_seconds,seed,status";
  SUBCASE("empty") { CHECK(lines_of(write_results({}, Format::Csv)) == std::vector<std::string>{header}); }
  SUBCASE("one row") {
    BenchRow row{.instance = "krebs", .vertices = 62, .edges = 153, .max_degree = 22, .diameter = 5,
                 .diam_centrality = 38, .path_length = 3, .path_centrality = 40, .runtime_seconds = 0.25};
    const auto lines = lines_of(write_results({row}, Format::Csv));
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == header);
    CHECK(lines[1] == "krebs,62,153,22,5,38,3,40,0.250000,,ok");
  }
  SUBCASE("mean rows use two decimals and names are quoted when needed") {
    BenchRow row{.instance = "mean ws(n=100,k=4,p=0.1)", .vertices = 100, .path_centrality = 23.1666};
    row.aggregate = true;
    const auto lines = lines_of(write_results({row}, Format::Csv));
    CHECK(lines[1].starts_with("\"mean ws(n=100,k=4,p=0.1)\",100.00,"));
    CHECK(lines[1].find(",23.17,") != std::string::npos);
  }
  SUBCASE("markdown") {
    const auto lines = lines_of(write_results({BenchRow{.instance = "g"}}, Format::Markdown));
    REQUIRE(lines.size() == 3);
    CHECK(lines[0].starts_with("| instance |"));
    CHECK(lines[1].starts_with("| --- |"));
  }
  CHECK(parse_format("markdown") == Format::Markdown);
  CHECK_THROWS_AS(parse_format("xml"), Error);
}

TEST_CASE("bench") {
  SUBCASE("config parsing") {
    const bench::BenchConfig cfg = bench::parse_bench_config(
        "# sweep\ninstance = ws:n=30,k=4,p=0.1\ninstance = file:graph.txt\nrepetitions = 3\nseed_base = 7\n"
        "workers = 2\ntimeout = 5\nformat = markdown\n");
    CHECK(cfg.instances.size() == 2);
    CHECK(cfg.instances[1].file == "graph.txt");
    CHECK(cfg.repetitions == 3);
    CHECK(cfg.seed_base == 7);
    CHECK(cfg.format == Format::Markdown);
    CHECK_THROWS_AS(bench::parse_bench_config("repetitions = 0\n"), Error);
    CHECK_THROWS_AS(bench::parse_bench_config("colour = blue\n"), Error);
    CHECK_THROWS_AS(bench::parse_bench_config("workers = many\n"), Error);
  }
  SUBCASE("per-instance rows plus a mean row, deterministic apart from runtime") {
    bench::BenchConfig cfg;
    cfg.instances.push_back({gen::parse_gen_spec("ba:n=40,m=2"), ""});
    cfg.repetitions = 4;
    const auto rows = bench::run_bench(cfg);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0].seed == 1);
    CHECK(rows[3].seed == 4);
    CHECK(rows[4].aggregate);
    double sum = 0;
    for (int i = 0; i < 4; ++i) {
      CHECK(rows[i].edges == 76);
      sum += rows[i].path_centrality;
    }
    CHECK(rows[4].path_centrality == doctest::Approx(sum / 4));

    cfg.workers = 8;
    auto again = bench::run_bench(cfg);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      auto a = rows[i], b = again[i];
      a.runtime_seconds = b.runtime_seconds = 0;
      CHECK(write_results({a}, Format::Csv) == write_results({b}, Format::Csv));
    }
  }
  SUBCASE("timeouts are flagged and the run continues") {
    const io::BenchRow row = bench::measure("k", testing::complete(60), 1, 1, 1e-9);
    CHECK(row.status == "timeout");
    const io::BenchRow none = bench::measure("e", Graph::from_edge_list({}, {.vertex_count = 3}), 1, 1, 10);
    CHECK(none.status == "no_path");
  }
  SUBCASE("mean skips rows that are not ok") {
    io::BenchRow a{.instance = "a", .path_centrality = 4};
    io::BenchRow b{.instance = "b", .path_centrality = 100};
    b.status = "timeout";
    const io::BenchRow m = bench::mean_row("m", {a, b});
    CHECK(m.path_centrality == 4);
    CHECK(m.status == "partial");
  }
}

TEST_CASE("oracle check") {
  bench::OracleCheckConfig cfg;
  cfg.seeds = 20;
  CHECK(bench::oracle_check(cfg).ok());
  cfg.weighted = bench::WeightKind::Integer;
  CHECK(bench::oracle_check(cfg).ok());
}
