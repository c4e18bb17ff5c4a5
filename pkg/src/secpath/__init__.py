"""Length- and neighborhood-constrained path problems.

Four decision problems on undirected simple graphs, each asking for a
simple non-empty path P subject to a size bound on |V(P)| and a bound
on the open neighborhood size |N(V(P))|:

  ssp  short secluded:    |V(P)| <= k and |N(V(P))| <= l
  lsp  long secluded:     |V(P)| >= k and |N(V(P))| <= l
  sup  short unsecluded:  |V(P)| <= k and |N(V(P))| >= l
  lup  long unsecluded:   |V(P)| >= k and |N(V(P))| >= l

Instances are free (any path) or terminal-pair (both endpoints fixed).
The package provides an exhaustive oracle, parameterized solvers for the
short variants, certificate checking, hardness-gadget transformations,
and a disjunction combinator, plus a command line front end.
"""

from .graph import (
    DegreePartition,
    DuplicateEdgeError,
    Graph,
    GraphFormatError,
    InvalidGraphError,
    InvalidInstanceError,
    PathCertificate,
    ProblemInstance,
    SelfLoopError,
    Variant,
    VertexRangeError,
    VertexSet,
    VerificationReport,
    build_graph,
    degree_partition,
    neighborhood,
    parse_graph_file,
    serialize_graph,
    verify_certificate,
)
from .oracle import Answer, OracleStats, enumerate_paths, iter_path_stats, oracle_decide
from .flow import (
    Arc,
    Flow,
    FlowNetwork,
    build_flow_network,
    dump_arcs,
    min_cost_flow,
    short_path_through_vertex,
    shortest_route_through,
    split_nodes,
)
from .solvers import (
    SolverStats,
    branch_decide,
    free_variant_decide,
    st_ssp_decide,
    st_sup_decide,
)
from .reductions import (
    NonCubicWarning,
    ReductionOutput,
    clique_to_ssp,
    or_compose,
    pchc_to_st_variant,
    pchp_to_variant,
    rbds_to_sup,
    reduce_to_st,
)

__all__ = [
    "Answer",
    "Arc",
    "DegreePartition",
    "DuplicateEdgeError",
    "Flow",
    "FlowNetwork",
    "Graph",
    "GraphFormatError",
    "InvalidGraphError",
    "InvalidInstanceError",
    "NonCubicWarning",
    "OracleStats",
    "PathCertificate",
    "ProblemInstance",
    "ReductionOutput",
    "SelfLoopError",
    "SolverStats",
    "Variant",
    "VerificationReport",
    "VertexRangeError",
    "VertexSet",
    "branch_decide",
    "build_flow_network",
    "build_graph",
    "clique_to_ssp",
    "degree_partition",
    "dump_arcs",
    "enumerate_paths",
    "free_variant_decide",
    "iter_path_stats",
    "min_cost_flow",
    "neighborhood",
    "oracle_decide",
    "or_compose",
    "parse_graph_file",
    "pchc_to_st_variant",
    "pchp_to_variant",
    "rbds_to_sup",
    "reduce_to_st",
    "serialize_graph",
    "short_path_through_vertex",
    "shortest_route_through",
    "split_nodes",
    "st_ssp_decide",
    "st_sup_decide",
    "verify_certificate",
]

__version__ = "0.1.0"
