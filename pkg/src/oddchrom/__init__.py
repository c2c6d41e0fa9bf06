"""oddchrom: graphs without short odd cycles.

Constructions (cycles, Schrijver graphs, Mycielski extensions), sphere
independence and odd girth certificates, ball-carving decompositions,
constructive and exact colorings, bound tables for the n-colorability
threshold, and an enumeration oracle for its exact small values.
"""

from .bounds import (
    BoundsRow,
    RecurrenceTable,
    bounds_row,
    bounds_rows,
    bounds_table,
    erdos_upper,
    factorial_lower,
    kst_lower,
    quad_lower,
    recurrent_lower,
    rising_factorial,
    schrijver_upper,
)
from .coloring import (
    ChromaticResult,
    DisconnectedError,
    EccentricityError,
    FailureReport,
    NoAbsentColorError,
    dsatur_greedy,
    exact_chromatic,
    extend_inside_ball,
    layer_2_coloring,
    recursive_carve_coloring,
    search_coloring,
    verify_coloring,
)
from .constructions import (
    SchrijverParams,
    cycle_graph,
    mycielski,
    predicted_schrijver_properties,
    schrijver_graph,
    schrijver_vertices,
)
from .decomposition import (
    CarveResult,
    CarveStep,
    carve,
    carve_by_order,
    max_ball_size,
    verify_carve,
)
from .formats import (
    FormatError,
    format_dimacs,
    format_edge_list,
    parse_dimacs,
    parse_edge_list,
    read_graph,
    write_graph,
)
from .graphs import (
    Coloring,
    Graph,
    ball,
    distances_from,
    graph_from_edges,
    induced_subgraph,
    outer_boundary,
    sphere,
)
from .oddgirth import (
    OddCycleCertificate,
    SphereIndependenceError,
    SphereViolation,
    bipartite_2_coloring,
    check_sphere_independence,
    odd_cycle_from_violation,
    odd_girth_at_least,
    shortest_odd_cycle,
)
from .oracle import (
    OracleResult,
    canonical_certificate,
    check_ball_sizes,
    enumerate_graphs,
    exact_threshold,
    isomorphic,
)

__version__ = "0.1.0"

__all__ = [
    "BoundsRow",
    "CarveResult",
    "CarveStep",
    "ChromaticResult",
    "Coloring",
    "DisconnectedError",
    "EccentricityError",
    "FailureReport",
    "FormatError",
    "Graph",
    "NoAbsentColorError",
    "OddCycleCertificate",
    "OracleResult",
    "RecurrenceTable",
    "SchrijverParams",
    "SphereIndependenceError",
    "SphereViolation",
    "ball",
    "bipartite_2_coloring",
    "bounds_row",
    "bounds_rows",
    "bounds_table",
    "canonical_certificate",
    "carve",
    "carve_by_order",
    "check_ball_sizes",
    "check_sphere_independence",
    "cycle_graph",
    "distances_from",
    "dsatur_greedy",
    "enumerate_graphs",
    "erdos_upper",
    "exact_chromatic",
    "exact_threshold",
    "extend_inside_ball",
    "factorial_lower",
    "format_dimacs",
    "format_edge_list",
    "graph_from_edges",
    "induced_subgraph",
    "isomorphic",
    "kst_lower",
    "layer_2_coloring",
    "max_ball_size",
    "mycielski",
    "odd_cycle_from_violation",
    "odd_girth_at_least",
    "outer_boundary",
    "parse_dimacs",
    "parse_edge_list",
    "predicted_schrijver_properties",
    "quad_lower",
    "read_graph",
    "recurrent_lower",
    "recursive_carve_coloring",
    "rising_factorial",
    "schrijver_graph",
    "schrijver_upper",
    "schrijver_vertices",
    "search_coloring",
    "shortest_odd_cycle",
    "sphere",
    "verify_coloring",
    "write_graph",
]
