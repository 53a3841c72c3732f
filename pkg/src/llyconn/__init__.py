"""Exact Lin-Lu-Yau curvature and graph connectivity, with executable checks
of the inequalities relating them."""

from .connectivity import ConnectivityWitness, edge_connectivity, vertex_connectivity, whitney_check
from .curvature import (
    CurvatureValue,
    MatchingBoundCertificate,
    curvature_at_scale,
    is_positively_curved,
    kappa_p,
    lly_curvature,
    lly_equal_degree,
    matching_transport_bound,
)
from .graph import (
    UNREACHABLE,
    Graph,
    GraphError,
    build_graph,
    diameter,
    distance,
    edge_split,
    max_bipartite_matching,
    min_degree,
)
from .report import TheoremReport
from .theorems import CHECKS, run_suite
from .transport import (
    DualCertificate,
    TransportPlan,
    plan_cost,
    plan_upper_bound,
    vertex_measure,
    wasserstein,
    wasserstein_forced,
)

__version__ = "0.1.0"

__all__ = [
    "ConnectivityWitness",
    "edge_connectivity",
    "vertex_connectivity",
    "whitney_check",
    "CurvatureValue",
    "MatchingBoundCertificate",
    "curvature_at_scale",
    "is_positively_curved",
    "kappa_p",
    "lly_curvature",
    "lly_equal_degree",
    "matching_transport_bound",
    "UNREACHABLE",
    "Graph",
    "GraphError",
    "build_graph",
    "diameter",
    "distance",
    "edge_split",
    "max_bipartite_matching",
    "min_degree",
    "TheoremReport",
    "CHECKS",
    "run_suite",
    "DualCertificate",
    "TransportPlan",
    "plan_cost",
    "plan_upper_bound",
    "vertex_measure",
    "wasserstein",
    "wasserstein_forced",
]
