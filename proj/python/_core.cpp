#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mdcsp/bench.hpp"
#include "mdcsp/generators.hpp"
#include "mdcsp/graph.hpp"
#include "mdcsp/io.hpp"
#include "mdcsp/oracle.hpp"
#include "mdcsp/reduction.hpp"
#include "mdcsp/search.hpp"
#include "mdcsp/weighted.hpp"

namespace py = pybind11;
using namespace mdcsp;

namespace {

Graph make_graph(const std::vector<py::tuple>& edges, bool directed, std::optional<std::size_t> vertex_count) {
  std::vector<Edge> list;
  bool weighted = false;
  for (const py::tuple& t : edges) {
    if (t.size() != 2 && t.size() != 3) throw py::value_error("edges are (u, v) or (u, v, weight) tuples");
    Edge e{t[0].cast<Vertex>(), t[1].cast<Vertex>()};
    if (t.size() == 3) {
      e.weight = t[2].cast<double>();
      weighted = true;
    }
    list.push_back(e);
  }
  return Graph::from_edge_list(list, {.directed = directed, .weighted = weighted, .vertex_count = vertex_count});
}

std::vector<py::tuple> edge_tuples(const Graph& g) {
  std::vector<py::tuple> out;
  for (const Edge& e : g.edges())
    out.push_back(g.weighted() ? py::tuple(py::make_tuple(e.u, e.v, e.weight)) : py::tuple(py::make_tuple(e.u, e.v)));
  return out;
}

Path to_path(const std::vector<Vertex>& v) { return Path(v); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Most degree-central shortest paths";

  py::register_exception<Error>(m, "Error");
  py::register_exception<GraphError>(m, "GraphError", m.attr("Error"));
  py::register_exception<PathError>(m, "PathError", m.attr("Error"));
  py::register_exception<TimeoutError>(m, "TimeoutError", m.attr("Error"));
  py::register_exception<weighted::AmbiguityError>(m, "AmbiguityError", m.attr("Error"));
  py::register_exception<oracle::BudgetExceeded>(m, "BudgetExceeded", m.attr("Error"));
  py::register_exception<io::ParseError>(m, "ParseError", m.attr("Error"));

  py::class_<Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("edges"), py::kw_only(), py::arg("directed") = false,
           py::arg("vertex_count") = py::none())
      .def_property_readonly("vertex_count", &Graph::vertex_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def_property_readonly("directed", &Graph::directed)
      .def_property_readonly("weighted", &Graph::weighted)
      .def("neighbors", [](const Graph& g, Vertex v) {
        if (!g.contains(v)) throw py::index_error("vertex out of range");
        auto span = g.out(v);
        return std::vector<Vertex>(span.begin(), span.end());
      })
      .def("degree", &Graph::degree)
      .def("has_edge", &Graph::has_edge)
      .def("edges", &edge_tuples)
      .def("__repr__", [](const Graph& g) {
        return "Graph(vertex_count=" + std::to_string(g.vertex_count()) +
               ", edge_count=" + std::to_string(g.edge_count()) + ")";
      });

  py::class_<GraphStats>(m, "GraphStats")
      .def_readonly("vertex_count", &GraphStats::vertex_count)
      .def_readonly("edge_count", &GraphStats::edge_count)
      .def_readonly("max_degree", &GraphStats::max_degree)
      .def_readonly("diameter", &GraphStats::diameter)
      .def_readonly("connected", &GraphStats::connected);

  py::class_<CentralityResult>(m, "CentralityResult")
      .def_property_readonly("path", [](const CentralityResult& r) { return r.path.vertices(); })
      .def_readonly("centrality", &CentralityResult::centrality)
      .def_readonly("source", &CentralityResult::source)
      .def_readonly("target", &CentralityResult::target)
      .def_readonly("length", &CentralityResult::length)
      .def_readonly("distance", &CentralityResult::distance)
      .def("__repr__", [](const CentralityResult& r) {
        return "CentralityResult(centrality=" + std::to_string(r.centrality) +
               ", length=" + std::to_string(r.length) + ")";
      });

  py::class_<SolveSummary>(m, "SolveSummary")
      .def_readonly("best", &SolveSummary::best)
      .def_readonly("at_diameter", &SolveSummary::at_diameter)
      .def_readonly("diameter", &SolveSummary::diameter);

  m.def("neighborhood", [](const Graph& g, const std::vector<Vertex>& p, bool any_direction) {
        const VertexSet n = neighborhood(g, to_path(p), any_direction ? Adjacency::Any : Adjacency::Out);
        std::vector<Vertex> out;
        for (std::size_t v : n.members()) out.push_back(static_cast<Vertex>(v));
        return out;
      }, py::arg("graph"), py::arg("path"), py::arg("any_direction") = false);
  m.def("centrality", [](const Graph& g, const std::vector<Vertex>& p, bool any_direction) {
        return centrality(g, to_path(p), any_direction ? Adjacency::Any : Adjacency::Out);
      }, py::arg("graph"), py::arg("path"), py::arg("any_direction") = false);
  m.def("shortest_distances", &shortest_distances, py::arg("graph"), py::arg("source"));
  m.def("stats", &stats, py::arg("graph"));
  m.def("is_shortest_path", [](const Graph& g, const std::vector<Vertex>& p) { return is_shortest_path(g, to_path(p)); },
        py::arg("graph"), py::arg("path"));

  const auto options = [](std::size_t min_vertices, unsigned workers) {
    SolveOptions o;
    o.min_vertices = min_vertices;
    o.workers = workers;
    return o;
  };
  m.def("best_overall", [=](const Graph& g, std::size_t min_vertices, unsigned workers) {
        py::gil_scoped_release release;
        return best_overall(g, options(min_vertices, workers));
      }, py::arg("graph"), py::kw_only(), py::arg("min_vertices") = 2, py::arg("workers") = 1);
  m.def("best_at_diameter", [=](const Graph& g, std::size_t min_vertices, unsigned workers) {
        py::gil_scoped_release release;
        return best_at_diameter(g, options(min_vertices, workers));
      }, py::arg("graph"), py::kw_only(), py::arg("min_vertices") = 2, py::arg("workers") = 1);
  m.def("solve_all", [=](const Graph& g, std::size_t min_vertices, unsigned workers) {
        py::gil_scoped_release release;
        return solve_all(g, options(min_vertices, workers));
      }, py::arg("graph"), py::kw_only(), py::arg("min_vertices") = 2, py::arg("workers") = 1);
  m.def("single_source", [](const Graph& g, Vertex s) {
        const SourceSearchState st = single_source(g, s);
        py::dict out;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
          if (st.reached(v)) out[py::int_(v)] = py::make_tuple(st.path(v).vertices(), st.centrality(v));
        return out;
      }, py::arg("graph"), py::arg("source"),
      "Maps each reached vertex to (path, centrality) of the path the search keeps.");

  m.def("brute_force_best", [](const Graph& g, std::size_t min_vertices, bool any_direction) {
        oracle::BruteForceOptions o;
        o.min_vertices = min_vertices;
        o.adjacency = any_direction ? Adjacency::Any : Adjacency::Out;
        return oracle::brute_force_best(g, o);
      }, py::arg("graph"), py::kw_only(), py::arg("min_vertices") = 2, py::arg("any_direction") = false);
  m.def("enumerate_shortest_paths", [](const Graph& g, Vertex s, Vertex t) {
        std::vector<std::vector<Vertex>> out;
        for (const Path& p : oracle::enumerate_shortest_paths(g, s, t)) out.push_back(p.vertices());
        return out;
      }, py::arg("graph"), py::arg("source"), py::arg("target"));

  m.def("mdcsp_integer_weighted", [](const Graph& g) { return weighted::mdcsp_integer_weighted(g); }, py::arg("graph"));
  m.def("mdcsp_continuous_weighted", [](const Graph& g, double tie_epsilon) {
        weighted::ContinuousOptions o;
        o.tie_epsilon = tie_epsilon;
        return weighted::mdcsp_continuous_weighted(g, o);
      }, py::arg("graph"), py::kw_only(), py::arg("tie_epsilon") = 1e-9);

  m.def("generate", [](const std::string& spec, std::uint64_t seed) {
        gen::GenSpec s = gen::parse_gen_spec(spec);
        s.seed = seed;
        return gen::generate(s);
      }, py::arg("spec"), py::arg("seed") = 0, "Spec text such as 'ws:n=100,k=4,p=0.1' or 'ba:n=100,m=2'.");

  m.def("load_graph", [](const std::string& path, bool directed, bool weighted) {
        const io::LabeledGraph lg = io::load_graph_file(path, {.directed = directed, .weighted = weighted});
        return py::make_tuple(lg.graph, lg.labels);
      }, py::arg("path"), py::kw_only(), py::arg("directed") = false, py::arg("weighted") = false,
      "Returns (graph, labels).");
  m.def("parse_edge_list", [](const std::string& text, bool directed, bool weighted) {
        const io::LabeledGraph lg = io::load_edge_list(text, {.directed = directed, .weighted = weighted});
        return py::make_tuple(lg.graph, lg.labels);
      }, py::arg("text"), py::kw_only(), py::arg("directed") = false, py::arg("weighted") = false);

  m.def("verify_reduction", [](const std::string& sat2_text) {
        const reduction::ReductionReport r = reduction::verify_reduction(reduction::parse_sat2(sat2_text));
        py::dict out;
        out["clean"] = r.clean();
        out["max_satisfiable"] = r.max_satisfiable;
        out["best_centrality"] = r.best ? py::object(py::int_(r.best->centrality)) : py::object(py::none());
        out["decoded_assignment"] = r.decoded_assignment;
        out["report"] = reduction::format_report(r);
        return out;
      }, py::arg("sat2_text"));
}
