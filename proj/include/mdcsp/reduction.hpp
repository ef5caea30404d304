#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mdcsp/graph.hpp"
#include "mdcsp/search.hpp"

namespace mdcsp::reduction {

struct Literal {
  std::size_t var = 0;  // 0-based
  bool negated = false;

  friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::array<Literal, 2>;

/// Max 2-SAT instance: does some assignment satisfy at least k clauses?
struct Sat2Instance {
  std::size_t num_vars = 0;
  std::vector<Clause> clauses;
  std::size_t k = 1;
};

void validate(const Sat2Instance& inst);

std::size_t satisfied_count(const Sat2Instance& inst, const std::vector<bool>& assignment);

// Exhaustive over all 2^|U| assignments; throws Error when |U| > 20.
std::size_t max_satisfiable(const Sat2Instance& inst);

enum class Role : std::uint8_t { Positive, Negative, Source, SourceBar, Sink, SinkBar, ClauseVertex };

struct VertexRole {
  Role role = Role::Positive;
  std::size_t index = 0;  // variable index for literals, clause index for clause vertices
};

/// Directed weighted graph of the Max 2-SAT hardness construction.
///
/// Layout: x_i = i, x̄_i = |U| + i, then s, s̄, t, t̄, then one y_c per clause.
/// Spine arcs x_i -> x_{i+1}, x̄_i -> x̄_{i+1}, x_i -> x̄_{i+1}, x̄_i -> x_{i+1}
/// have unit weight, as do the terminal arcs from x_1, x̄_1 into s, s̄ and
/// from x_|U|, x̄_|U| into t, t̄. Each clause vertex is joined in both
/// directions, with weight |U|, to the literal vertices of its clause.
struct GadgetGraph {
  Graph graph;
  std::vector<VertexRole> roles;
  std::size_t num_vars = 0;
  std::size_t spine_edges = 0;
  std::size_t terminal_edges = 0;
  std::size_t clause_links = 0;  // undirected clause edges

  Vertex literal_vertex(Literal lit) const {
    return static_cast<Vertex>(lit.negated ? num_vars + lit.var : lit.var);
  }
  Vertex source() const { return static_cast<Vertex>(2 * num_vars); }
  Vertex source_bar() const { return source() + 1; }
  Vertex sink() const { return source() + 2; }
  Vertex sink_bar() const { return source() + 3; }
  Vertex clause_vertex(std::size_t c) const { return static_cast<Vertex>(2 * num_vars + 4 + c); }

  // Edge count with each undirected clause link counted once.
  std::size_t edge_count() const { return spine_edges + terminal_edges + clause_links; }
  bool is_literal(Vertex v) const { return v < 2 * num_vars; }
  bool is_terminal(Vertex v) const { return v >= source() && v <= sink_bar(); }
  bool is_clause(Vertex v) const { return v > sink_bar(); }
};

GadgetGraph build_gadget(const Sat2Instance& inst);

/// Neighborhoods in the gadget count adjacency in either direction.
inline constexpr Adjacency kGadgetAdjacency = Adjacency::Any;

struct Normalization {
  Path normalized;  // one literal per level, levels 1..|U| in order
  std::vector<bool> assignment;
  std::size_t original_centrality = 0;
  std::size_t normalized_centrality = 0;
};

/// Strips terminal and clause endpoints, extends the remaining spine segment
/// to cover every level (positive literals fill the gaps), and reads variable
/// i as true iff x_i is on the result. Throws PathError when what remains is
/// not a run of consecutive spine levels.
Normalization path_to_assignment(const GadgetGraph& gg, const Path& p);

struct ThresholdRow {
  std::size_t k = 0;
  bool assignment_side = false;  // some assignment satisfies >= k clauses
  bool path_side = false;        // some shortest path has centrality >= |U| + k + 4
  bool ok() const { return assignment_side == path_side; }
};

struct ReductionReport {
  std::size_t num_vars = 0;
  std::size_t num_clauses = 0;
  std::size_t max_satisfiable = 0;
  std::optional<CentralityResult> best;
  std::vector<ThresholdRow> rows;
  std::vector<bool> decoded_assignment;
  std::size_t decoded_satisfied = 0;
  bool counts_ok = true;  // vertex/edge counts match the construction formulas

  bool clean() const;
};

/// Checks, for every k in 1..|C|, both directions of the threshold
/// equivalence using exhaustive search on the gadget. Limited to |U| <= 6
/// and |C| <= 8.
ReductionReport verify_reduction(const Sat2Instance& inst);

Sat2Instance random_instance(std::size_t num_vars, std::size_t num_clauses, std::uint64_t seed);

/// Text format: `c` comment lines, a header `p sat2 <U> <C>`, then one clause
/// per line as two nonzero signed 1-based variable ids (negative = negated).
Sat2Instance parse_sat2(const std::string& text);
std::string format_sat2(const Sat2Instance& inst);

std::string format_report(const ReductionReport& report);

}  // namespace mdcsp::reduction
