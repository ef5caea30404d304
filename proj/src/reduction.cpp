#include "mdcsp/reduction.hpp"

#include <algorithm>
#include <sstream>

#include "mdcsp/generators.hpp"
#include "mdcsp/oracle.hpp"

namespace mdcsp::reduction {

void validate(const Sat2Instance& inst) {
  if (inst.num_vars == 0) throw Error("a Max 2-SAT instance needs at least one variable");
  for (std::size_t c = 0; c < inst.clauses.size(); ++c)
    for (const Literal& lit : inst.clauses[c])
      if (lit.var >= inst.num_vars)
        throw Error("clause " + std::to_string(c + 1) + " uses variable " + std::to_string(lit.var + 1) +
                    " but only " + std::to_string(inst.num_vars) + " exist");
}

std::size_t satisfied_count(const Sat2Instance& inst, const std::vector<bool>& assignment) {
  std::size_t count = 0;
  for (const Clause& c : inst.clauses) {
    const bool sat = std::any_of(c.begin(), c.end(),
                                 [&](const Literal& l) { return assignment[l.var] != l.negated; });
    if (sat) ++count;
  }
  return count;
}

std::size_t max_satisfiable(const Sat2Instance& inst) {
  validate(inst);
  if (inst.num_vars > 20) throw Error("max_satisfiable is exhaustive and limited to 20 variables");
  std::size_t best = 0;
  std::vector<bool> assignment(inst.num_vars);
  for (std::uint32_t mask = 0; mask < (1u << inst.num_vars); ++mask) {
    for (std::size_t i = 0; i < inst.num_vars; ++i) assignment[i] = (mask >> i) & 1u;
    best = std::max(best, satisfied_count(inst, assignment));
  }
  return best;
}

GadgetGraph build_gadget(const Sat2Instance& inst) {
  validate(inst);
  GadgetGraph gg;
  const std::size_t u = inst.num_vars;
  gg.num_vars = u;
  const std::size_t n = 2 * u + 4 + inst.clauses.size();
  gg.roles.resize(n);
  for (std::size_t i = 0; i < u; ++i) {
    gg.roles[i] = {Role::Positive, i};
    gg.roles[u + i] = {Role::Negative, i};
  }
  gg.roles[gg.source()] = {Role::Source, 0};
  gg.roles[gg.source_bar()] = {Role::SourceBar, 0};
  gg.roles[gg.sink()] = {Role::Sink, 0};
  gg.roles[gg.sink_bar()] = {Role::SinkBar, 0};

  std::vector<Edge> arcs;
  auto lit = [&](std::size_t i, bool neg) { return gg.literal_vertex({i, neg}); };
  for (std::size_t i = 0; i + 1 < u; ++i) {
    for (bool from : {false, true})
      for (bool to : {false, true}) arcs.push_back({lit(i, from), lit(i + 1, to), 1.0});
  }
  gg.spine_edges = arcs.size();
  for (bool neg : {false, true}) {
    arcs.push_back({lit(0, neg), gg.source(), 1.0});
    arcs.push_back({lit(0, neg), gg.source_bar(), 1.0});
    arcs.push_back({lit(u - 1, neg), gg.sink(), 1.0});
    arcs.push_back({lit(u - 1, neg), gg.sink_bar(), 1.0});
  }
  gg.terminal_edges = arcs.size() - gg.spine_edges;

  const auto link_weight = static_cast<double>(u);
  for (std::size_t c = 0; c < inst.clauses.size(); ++c) {
    const Vertex y = gg.clause_vertex(c);
    gg.roles[y] = {Role::ClauseVertex, c};
    const Clause& clause = inst.clauses[c];
    const std::size_t distinct = clause[0] == clause[1] ? 1 : 2;
    for (std::size_t j = 0; j < distinct; ++j) {
      const Vertex z = gg.literal_vertex(clause[j]);
      arcs.push_back({z, y, link_weight});
      arcs.push_back({y, z, link_weight});
      ++gg.clause_links;
    }
  }
  gg.graph = Graph::from_edge_list(arcs, {.directed = true, .weighted = true, .vertex_count = n});
  return gg;
}

namespace {

// Spine level (0-based) of a literal vertex.
std::size_t level_of(const GadgetGraph& gg, Vertex v) { return v < gg.num_vars ? v : v - gg.num_vars; }

}  // namespace

Normalization path_to_assignment(const GadgetGraph& gg, const Path& p) {
  validate_path(gg.graph, p);
  Normalization out;
  out.original_centrality = centrality(gg.graph, p, kGadgetAdjacency);

  std::vector<Vertex> core(p.begin(), p.end());
  auto strip = [&](auto pred) {
    while (!core.empty() && pred(core.back())) core.pop_back();
    while (!core.empty() && pred(core.front())) core.erase(core.begin());
  };
  strip([&](Vertex v) { return gg.is_terminal(v); });
  strip([&](Vertex v) { return gg.is_clause(v); });

  for (std::size_t i = 0; i < core.size(); ++i) {
    if (!gg.is_literal(core[i]))
      throw PathError("path is not normalizable: vertex " + std::to_string(core[i]) + " is interior");
    if (i > 0 && level_of(gg, core[i]) != level_of(gg, core[i - 1]) + 1)
      throw PathError("path is not normalizable: spine levels are not consecutive");
  }

  const std::size_t first = core.empty() ? 0 : level_of(gg, core.front());
  const std::size_t last = core.empty() ? 0 : level_of(gg, core.back()) + 1;
  std::vector<Vertex> full;
  full.reserve(gg.num_vars);
  for (std::size_t i = 0; i < first; ++i) full.push_back(gg.literal_vertex({i, false}));
  full.insert(full.end(), core.begin(), core.end());
  for (std::size_t i = core.empty() ? 0 : last; i < gg.num_vars; ++i) full.push_back(gg.literal_vertex({i, false}));

  out.normalized = Path(std::move(full));
  out.normalized_centrality = centrality(gg.graph, out.normalized, kGadgetAdjacency);
  out.assignment.resize(gg.num_vars);
  for (Vertex v : out.normalized) out.assignment[level_of(gg, v)] = v < gg.num_vars;
  return out;
}

bool ReductionReport::clean() const {
  return counts_ok && std::all_of(rows.begin(), rows.end(), [](const ThresholdRow& r) { return r.ok(); });
}

ReductionReport verify_reduction(const Sat2Instance& inst) {
  validate(inst);
  if (inst.num_vars > 6 || inst.clauses.size() > 8)
    throw Error("verify_reduction is exhaustive and limited to |U| <= 6, |C| <= 8");
  const GadgetGraph gg = build_gadget(inst);
  ReductionReport report;
  report.num_vars = inst.num_vars;
  report.num_clauses = inst.clauses.size();
  report.max_satisfiable = max_satisfiable(inst);

  std::size_t distinct_links = 0;
  for (const Clause& c : inst.clauses) distinct_links += c[0] == c[1] ? 1 : 2;
  report.counts_ok = gg.graph.vertex_count() == 2 * inst.num_vars + 4 + inst.clauses.size() &&
                     gg.edge_count() == 4 * (inst.num_vars - 1) + 8 + distinct_links;

  oracle::BruteForceOptions opts;
  opts.adjacency = kGadgetAdjacency;
  report.best = oracle::brute_force_best(gg.graph, opts);
  const std::size_t best_c = report.best ? report.best->centrality : 0;
  for (std::size_t k = 1; k <= inst.clauses.size(); ++k) {
    ThresholdRow row;
    row.k = k;
    row.assignment_side = report.max_satisfiable >= k;
    row.path_side = best_c >= inst.num_vars + k + 4;
    report.rows.push_back(row);
  }
  if (report.best) {
    const Normalization norm = path_to_assignment(gg, report.best->path);
    report.decoded_assignment = norm.assignment;
    report.decoded_satisfied = satisfied_count(inst, norm.assignment);
  }
  return report;
}

Sat2Instance random_instance(std::size_t num_vars, std::size_t num_clauses, std::uint64_t seed) {
  gen::Rng rng(seed);
  Sat2Instance inst;
  inst.num_vars = num_vars;
  auto draw = [&] { return Literal{rng.below(num_vars), rng.uniform() < 0.5}; };
  for (std::size_t c = 0; c < num_clauses; ++c) {
    Clause clause{draw(), draw()};
    while (clause[1] == clause[0]) clause[1] = draw();
    inst.clauses.push_back(clause);
  }
  inst.k = std::max<std::size_t>(1, num_clauses);
  validate(inst);
  return inst;
}

Sat2Instance parse_sat2(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  bool header = false;
  std::size_t declared = 0;
  Sat2Instance inst;
  auto fail = [&](const std::string& why) {
    throw Error("sat2 line " + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first == "c" || first[0] == '#') continue;
    if (first == "p") {
      std::string fmt;
      if (header) fail("duplicate header");
      if (!(ls >> fmt >> inst.num_vars >> declared) || fmt != "sat2") fail("expected 'p sat2 <U> <C>'");
      header = true;
      continue;
    }
    if (!header) fail("clause before header");
    long a = 0, b = 0;
    std::istringstream cs(line);
    if (!(cs >> a >> b) || a == 0 || b == 0) fail("expected two nonzero literals");
    long trailing = 0;
    if (cs >> trailing && trailing != 0) fail("more than two literals");
    auto to_lit = [&](long x) {
      const auto var = static_cast<std::size_t>(x < 0 ? -x : x);
      if (var > inst.num_vars) fail("variable " + std::to_string(var) + " out of range");
      return Literal{var - 1, x < 0};
    };
    inst.clauses.push_back({to_lit(a), to_lit(b)});
  }
  if (!header) throw Error("sat2: missing 'p sat2' header");
  if (inst.clauses.size() != declared)
    throw Error("sat2: header declares " + std::to_string(declared) + " clauses, found " +
                std::to_string(inst.clauses.size()));
  inst.k = std::max<std::size_t>(1, inst.clauses.size());
  validate(inst);
  return inst;
}

std::string format_sat2(const Sat2Instance& inst) {
  std::ostringstream os;
  os << "p sat2 " << inst.num_vars << ' ' << inst.clauses.size() << '\n';
  for (const Clause& c : inst.clauses) {
    for (std::size_t j = 0; j < 2; ++j) {
      const long id = static_cast<long>(c[j].var + 1);
      os << (c[j].negated ? -id : id) << (j == 0 ? ' ' : '\n');
    }
  }
  return os.str();
}

std::string format_report(const ReductionReport& report) {
  std::ostringstream os;
  os << "|U|=" << report.num_vars << " |C|=" << report.num_clauses << " max_satisfiable=" << report.max_satisfiable
     << " best_centrality=" << (report.best ? std::to_string(report.best->centrality) : "-")
     << " decoded_satisfied=" << report.decoded_satisfied << (report.counts_ok ? "" : " COUNT-MISMATCH") << '\n';
  os << "k\tassignment>=k\tpath>=|U|+k+4\tok\n";
  for (const ThresholdRow& r : report.rows)
    os << r.k << '\t' << (r.assignment_side ? "yes" : "no") << '\t' << (r.path_side ? "yes" : "no") << '\t'
       << (r.ok() ? "ok" : "FAIL") << '\n';
  os << (report.clean() ? "clean" : "FAILED") << '\n';
  return os.str();
}

}  // namespace mdcsp::reduction
