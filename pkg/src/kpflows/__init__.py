"""Exact Kostant partition functions as integer flows on signed multigraphs.

The package counts nonnegative integer flows with exact arithmetic, verifies
the divisibility identities relating a graph's count to the count after
deleting the edge (n-1, n), and materializes the partial-flow fibration that
explains them.
"""

from .errors import (
    DimensionMismatch,
    HypothesisUnmet,
    IndexOutOfRange,
    InfeasibleParams,
    InvalidEdge,
    InvalidFlow,
    KindViolation,
    KPFlowsError,
    LimitExceeded,
    MissingEdge,
    NegativeExtension,
)
from .graphs import (
    NEG,
    POS,
    BVCondition,
    GraphKind,
    SignedMultigraph,
    Theorem,
    build_graph,
    bv_hypothesis,
    complete_type_a,
    delete_edges,
    distinguished_edges,
    is_connected,
    necessary_feasible_a,
    netflow_y,
    root_multiset,
    root_of_edge,
)
from .counting import (
    brute_force_count,
    check_flow,
    count,
    enumerate_flows,
    vertex_weights,
    weight_bound,
)
from .partial_flows import (
    PartialCount,
    PartialFlow,
    applicable_theorem,
    count_via_partial,
    decompose,
    enumerate_partial_flows,
    extend_unique,
    extend_with_index,
    materialize_fiber,
    strip_distinguished,
)
from .identities import (
    IdentityReport,
    generate_bv_family,
    report_json_dict,
    verify_identity_a,
    verify_identity_c,
)
from .catalan import catalan_graph, catalan_netflow, catalan_number, catalan_product

__version__ = "0.1.0"

__all__ = [
    "BVCondition",
    "DimensionMismatch",
    "GraphKind",
    "HypothesisUnmet",
    "IdentityReport",
    "IndexOutOfRange",
    "InfeasibleParams",
    "InvalidEdge",
    "InvalidFlow",
    "KPFlowsError",
    "KindViolation",
    "LimitExceeded",
    "MissingEdge",
    "NEG",
    "NegativeExtension",
    "PartialCount",
    "PartialFlow",
    "POS",
    "SignedMultigraph",
    "Theorem",
    "applicable_theorem",
    "brute_force_count",
    "build_graph",
    "bv_hypothesis",
    "catalan_graph",
    "catalan_netflow",
    "catalan_number",
    "catalan_product",
    "check_flow",
    "complete_type_a",
    "count",
    "count_via_partial",
    "decompose",
    "delete_edges",
    "distinguished_edges",
    "enumerate_flows",
    "enumerate_partial_flows",
    "extend_unique",
    "extend_with_index",
    "generate_bv_family",
    "is_connected",
    "materialize_fiber",
    "necessary_feasible_a",
    "netflow_y",
    "report_json_dict",
    "root_multiset",
    "root_of_edge",
    "strip_distinguished",
    "verify_identity_a",
    "verify_identity_c",
    "vertex_weights",
    "weight_bound",
]
