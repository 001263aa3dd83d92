"""Exact invariants of normal surface singularities from weighted dual graphs.

Everything is computed in exact rational arithmetic: the fundamental
cycle, the canonical cycle and its boundary variant, the delta family
of self-intersection invariants (including the constrained minimum
delta_min), mu, and the chain determinant calculus.  See the README for
the input format and the CLI.
"""

from .classify import (
    Classification,
    GraphShape,
    ShapeKind,
    SingularityKind,
    classify,
    graph_shape,
    is_log_canonical,
    is_log_terminal,
    singularity_kind,
)
from .continuant import (
    EndBound,
    chain_delta_y,
    continuant,
    discrepancy_complement,
    inverse_entry,
    inverse_matrix,
    pullback_end_bound,
)
from .cycles import (
    BoundaryComponent,
    BoundaryData,
    CycleSet,
    EMPTY_BOUNDARY,
    arithmetic_genus,
    boundary_component,
    boundary_cycle,
    canonical_cycle,
    exceptional_pullback,
    fundamental_cycle,
)
from .graph import (
    DisconnectedGraphError,
    DualGraph,
    Edge,
    ExcDivisor,
    GraphValidationError,
    IllegalWeightError,
    IntersectionMatrix,
    NotNegativeDefiniteError,
    Vertex,
    build_graph,
    canonical_degree,
    intersection_matrix,
    solve_exceptional,
    validate,
)
from .invariants import (
    DEFAULT_EPSILON,
    DeltaMinResult,
    DeltaPrime,
    DeltaPrimeKind,
    HypothesisCheck,
    InvalidNefError,
    NegativeIntersectionError,
    NotLogTerminalError,
    check_hypotheses,
    delta,
    delta_by,
    delta_min,
    delta_min_exhaustive,
    delta_prime,
    delta_y,
    mu,
    quadratic_norm,
)
from .report import NefData, SingularityReport, build_report, render_text, report_to_dict

__version__ = "0.1.0"

__all__ = [
    "BoundaryComponent",
    "BoundaryData",
    "Classification",
    "CycleSet",
    "DEFAULT_EPSILON",
    "DeltaMinResult",
    "DeltaPrime",
    "DeltaPrimeKind",
    "DisconnectedGraphError",
    "DualGraph",
    "Edge",
    "EMPTY_BOUNDARY",
    "EndBound",
    "ExcDivisor",
    "GraphShape",
    "GraphValidationError",
    "HypothesisCheck",
    "IllegalWeightError",
    "IntersectionMatrix",
    "InvalidNefError",
    "NefData",
    "NegativeIntersectionError",
    "NotLogTerminalError",
    "NotNegativeDefiniteError",
    "ShapeKind",
    "SingularityKind",
    "SingularityReport",
    "Vertex",
    "arithmetic_genus",
    "boundary_component",
    "boundary_cycle",
    "build_graph",
    "build_report",
    "canonical_cycle",
    "canonical_degree",
    "chain_delta_y",
    "check_hypotheses",
    "classify",
    "continuant",
    "delta",
    "delta_by",
    "delta_min",
    "delta_min_exhaustive",
    "delta_prime",
    "delta_y",
    "discrepancy_complement",
    "exceptional_pullback",
    "fundamental_cycle",
    "graph_shape",
    "intersection_matrix",
    "inverse_entry",
    "inverse_matrix",
    "is_log_canonical",
    "is_log_terminal",
    "mu",
    "pullback_end_bound",
    "quadratic_norm",
    "render_text",
    "report_to_dict",
    "singularity_kind",
    "solve_exceptional",
    "validate",
]
