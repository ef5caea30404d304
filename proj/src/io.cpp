#include "mdcsp/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace mdcsp::io {
namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  for (std::string t; is >> t;) out.push_back(t);
  return out;
}

bool parse_double(const std::string& s, double& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

bool parse_index(const std::string& s, std::size_t& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::string format_weight(double w) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", w);
  return buf;
}

}  // namespace

LabeledGraph load_edge_list(const std::string& text, const EdgeListOptions& options) {
  LabeledGraph out;
  std::unordered_map<std::string, Vertex> ids;
  auto id_of = [&](const std::string& label) {
    auto [it, fresh] = ids.try_emplace(label, static_cast<Vertex>(out.labels.size()));
    if (fresh) out.labels.push_back(label);
    return it->second;
  };

  std::vector<Edge> edges;
  std::set<std::pair<Vertex, Vertex>> seen;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto cut = line.find_first_of("#%");
    if (cut != std::string::npos) line.resize(cut);
    const auto tok = tokens(line);
    if (tok.empty()) continue;
    if (tok.size() < 2 || (options.weighted && tok.size() < 3))
      throw ParseError("line " + std::to_string(line_no) + ": expected '" +
                       (options.weighted ? "u v w" : "u v") + "', got '" + line + "'");
    double w = 1.0;
    if (options.weighted && (!parse_double(tok[2], w) || !(w > 0.0)))
      throw ParseError("line " + std::to_string(line_no) + ": bad weight '" + tok[2] + "'");
    const Vertex u = id_of(tok[0]);
    const Vertex v = id_of(tok[1]);
    if (u == v) {
      ++out.self_loops;
      continue;
    }
    auto key = options.directed ? std::pair{u, v} : std::pair{std::min(u, v), std::max(u, v)};
    if (!seen.insert(key).second) {
      ++out.duplicate_edges;
      continue;
    }
    edges.push_back({u, v, w});
  }
  out.graph = Graph::from_edge_list(
      edges, {.directed = options.directed, .weighted = options.weighted, .vertex_count = out.labels.size()});
  return out;
}

LabeledGraph load_matrix_market(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw ParseError("empty Matrix Market input");
  ++line_no;
  const auto banner = tokens(lower(line));
  if (banner.size() < 5 || banner[0] != "%%matrixmarket")
    throw ParseError("missing %%MatrixMarket banner");
  if (banner[1] != "matrix" || banner[2] != "coordinate")
    throw ParseError("unsupported Matrix Market object/format '" + banner[1] + " " + banner[2] + "'");
  const std::string& field = banner[3];
  const std::string& symmetry = banner[4];
  if (field != "pattern" && field != "real" && field != "integer")
    throw ParseError("unsupported Matrix Market field '" + field + "'");
  if (symmetry != "general" && symmetry != "symmetric")
    throw ParseError("unsupported Matrix Market symmetry '" + symmetry + "'");

  std::size_t rows = 0, cols = 0, nnz = 0;
  bool have_size = false;
  LabeledGraph out;
  std::vector<Edge> edges;
  std::set<std::pair<Vertex, Vertex>> seen;
  std::size_t entries = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '%') continue;
    const auto tok = tokens(line);
    if (tok.empty()) continue;
    if (!have_size) {
      if (tok.size() != 3 || !parse_index(tok[0], rows) || !parse_index(tok[1], cols) || !parse_index(tok[2], nnz))
        throw ParseError("line " + std::to_string(line_no) + ": bad size line '" + line + "'");
      if (rows != cols) throw ParseError("matrix is not square (" + tok[0] + " x " + tok[1] + ")");
      have_size = true;
      continue;
    }
    std::size_t i = 0, j = 0;
    const std::size_t want = field == "pattern" ? 2 : 3;
    if (tok.size() < want || !parse_index(tok[0], i) || !parse_index(tok[1], j) || i == 0 || j == 0 || i > rows ||
        j > cols)
      throw ParseError("line " + std::to_string(line_no) + ": bad entry '" + line + "'");
    ++entries;
    if (i == j) {
      ++out.self_loops;
      continue;
    }
    const auto a = static_cast<Vertex>(std::min(i, j) - 1);
    const auto b = static_cast<Vertex>(std::max(i, j) - 1);
    if (!seen.insert({a, b}).second) {
      ++out.duplicate_edges;
      continue;
    }
    edges.push_back({a, b});
  }
  if (!have_size) throw ParseError("missing Matrix Market size line");
  if (entries != nnz)
    throw ParseError("size line declares " + std::to_string(nnz) + " entries, found " + std::to_string(entries));
  out.labels.reserve(rows);
  for (std::size_t v = 1; v <= rows; ++v) out.labels.push_back(std::to_string(v));
  out.graph = Graph::from_edge_list(edges, {.vertex_count = rows});
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

LabeledGraph load_graph_file(const std::string& path, const EdgeListOptions& options) {
  const std::string text = read_file(path);
  const bool mtx = (path.size() > 4 && lower(path.substr(path.size() - 4)) == ".mtx") ||
                   lower(text.substr(0, 14)) == "%%matrixmarket";
  return mtx ? load_matrix_market(text) : load_edge_list(text, options);
}

std::string write_edge_list(const LabeledGraph& g) {
  std::ostringstream os;
  for (const Edge& e : g.graph.edges()) {
    os << g.label(e.u) << ' ' << g.label(e.v);
    if (g.graph.weighted()) os << ' ' << format_weight(e.weight);
    os << '\n';
  }
  return os.str();
}

std::string write_edge_list(const Graph& g) {
  LabeledGraph lg;
  lg.graph = g;
  return write_edge_list(lg);
}

Format parse_format(const std::string& name) {
  const std::string n = lower(name);
  if (n == "csv") return Format::Csv;
  if (n == "markdown" || n == "md") return Format::Markdown;
  throw Error("unknown output format '" + name + "' (expected csv or markdown)");
}

namespace {

const std::vector<std::string>& columns() {
  static const std::vector<std::string> cols = {
      "instance",        "V",           "E",               "max_degree",      "diam",   "diam_centrality",
      "path_length",     "path_centrality", "runtime_seconds", "seed",          "status"};
  return cols;
}

std::string number(double v, bool aggregate, int int_decimals = 0) {
  char buf[64];
  if (aggregate) {
    std::snprintf(buf, sizeof buf, "%.2f", v);
  } else {
    std::snprintf(buf, sizeof buf, "%.*f", int_decimals, v);
  }
  return buf;
}

std::vector<std::string> cells(const BenchRow& r) {
  return {r.instance,
          number(r.vertices, r.aggregate),
          number(r.edges, r.aggregate),
          number(r.max_degree, r.aggregate),
          number(r.diameter, r.aggregate),
          number(r.diam_centrality, r.aggregate),
          number(r.path_length, r.aggregate),
          number(r.path_centrality, r.aggregate),
          number(r.runtime_seconds, r.aggregate, 6),
          r.seed ? std::to_string(*r.seed) : "",
          r.status};
}

}  // namespace

std::string write_results(const std::vector<BenchRow>& rows, Format format) {
  std::ostringstream os;
  auto emit = [&](const std::vector<std::string>& cs) {
    if (format == Format::Csv) {
      for (std::size_t i = 0; i < cs.size(); ++i) {
        const bool quote = cs[i].find_first_of(",\"\n") != std::string::npos;
        if (i) os << ',';
        if (quote) {
          os << '"';
          for (char c : cs[i]) os << (c == '"' ? "\"\"" : std::string(1, c));
          os << '"';
        } else {
          os << cs[i];
        }
      }
      os << '\n';
    } else {
      os << '|';
      for (const auto& c : cs) os << ' ' << c << " |";
      os << '\n';
    }
  };
  emit(columns());
  if (format == Format::Markdown) {
    os << '|';
    for (std::size_t i = 0; i < columns().size(); ++i) os << (i == 0 ? " --- |" : " ---: |");
    os << '\n';
  }
  for (const BenchRow& r : rows) emit(cells(r));
  return os.str();
}

}  // namespace mdcsp::io
