"""Most degree-central shortest paths."""

from ._core import (
    AmbiguityError,
    BudgetExceeded,
    CentralityResult,
    Error,
    Graph,
    GraphError,
    GraphStats,
    ParseError,
    PathError,
    SolveSummary,
    TimeoutError,
    best_at_diameter,
    best_overall,
    brute_force_best,
    centrality,
    enumerate_shortest_paths,
    generate,
    is_shortest_path,
    load_graph,
    mdcsp_continuous_weighted,
    mdcsp_integer_weighted,
    neighborhood,
    parse_edge_list,
    shortest_distances,
    single_source,
    solve_all,
    stats,
    verify_reduction,
)

__all__ = [name for name in dir() if not name.startswith("_")]
