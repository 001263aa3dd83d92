"""Singularity kind, graph shape, and log-terminal predicates.

Shapes follow the standard quotient-singularity dual graphs: a chain
(type A), a fork whose valence-3 vertex carries two single weight-2
arms (type D, the dihedral shape), or a fork whose three arm
determinants are (2,3,3), (2,3,4) or (2,3,5) (type E).  Everything else
is Other; graphs with positive genus or multiple edges are outside the
classification and report Unsupported.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .continuant import continuant
from .cycles import BoundaryData, boundary_cycle, CycleSet
from .graph import DualGraph, ExcDivisor


class SingularityKind(enum.Enum):
    SMOOTH = "smooth"
    RDP = "rdp"
    SINGULAR = "singular"


class ShapeKind(enum.Enum):
    CHAIN = "chain"
    FORK_D = "fork_d"
    FORK_E = "fork_e"
    OTHER = "other"
    UNSUPPORTED = "unsupported"


@dataclass(frozen=True)
class GraphShape:
    kind: ShapeKind
    length: int | None = None  # chain only
    ends: tuple[int, int] | None = None  # chain only; equal indices when n = 1


@dataclass(frozen=True)
class Classification:
    kind: SingularityKind
    shape: GraphShape
    log_terminal: bool
    log_canonical: bool

    @property
    def smooth(self) -> bool:
        return self.kind is SingularityKind.SMOOTH

    @property
    def rdp(self) -> bool:
        return self.kind is SingularityKind.RDP


def is_log_terminal(boundary: BoundaryData, e: ExcDivisor) -> bool:
    """All boundary coefficients < 1 and all e_j < 1."""
    return all(c.coeff < 1 for c in boundary.components) and all(
        ej < 1 for ej in e
    )


def is_log_canonical(boundary: BoundaryData, e: ExcDivisor) -> bool:
    """All boundary coefficients <= 1 and all e_j <= 1."""
    return all(c.coeff <= 1 for c in boundary.components) and all(
        ej <= 1 for ej in e
    )


def singularity_kind(graph: DualGraph) -> SingularityKind:
    first = graph.vertices[0]
    if graph.n == 1 and first.weight == 1 and first.genus == 0:
        return SingularityKind.SMOOTH
    if all(v.weight == 2 and v.genus == 0 for v in graph.vertices):
        # equivalent to a vanishing canonical cycle
        return SingularityKind.RDP
    return SingularityKind.SINGULAR


def _pair_multiplicities(graph: DualGraph) -> dict[tuple[int, int], int]:
    pairs: dict[tuple[int, int], int] = {}
    for e in graph.edges:
        i, j = sorted((graph.index[e.a], graph.index[e.b]))
        pairs[(i, j)] = pairs.get((i, j), 0) + e.multiplicity
    return pairs


def graph_shape(graph: DualGraph) -> GraphShape:
    """Classify a validated graph by shape; see the module docstring."""
    if any(v.genus != 0 for v in graph.vertices):
        return GraphShape(ShapeKind.UNSUPPORTED)
    pairs = _pair_multiplicities(graph)
    if any(m > 1 for m in pairs.values()):
        return GraphShape(ShapeKind.UNSUPPORTED)
    n = graph.n
    if len(pairs) != n - 1:
        return GraphShape(ShapeKind.OTHER)  # connected with a cycle
    degrees = [len(graph.adjacency[i]) for i in range(n)]
    if max(degrees) > 3:
        return GraphShape(ShapeKind.OTHER)
    centers = [i for i, d in enumerate(degrees) if d == 3]
    if not centers:
        ends = [i for i, d in enumerate(degrees) if d <= 1]
        if n == 1:
            return GraphShape(ShapeKind.CHAIN, length=1, ends=(0, 0))
        return GraphShape(ShapeKind.CHAIN, length=n, ends=(ends[0], ends[1]))
    if len(centers) > 1:
        return GraphShape(ShapeKind.OTHER)
    center = centers[0]
    arms = []
    for start in sorted(graph.adjacency[center]):
        arm = []
        prev, cur = center, start
        while True:
            arm.append(graph.vertices[cur].weight)
            nxt = [k for k in graph.adjacency[cur] if k != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
        arms.append(tuple(arm))
    short_rdp_arms = sum(1 for arm in arms if arm == (2,))
    if short_rdp_arms >= 2:
        return GraphShape(ShapeKind.FORK_D)
    dets = sorted(continuant(arm) for arm in arms)
    if dets in ([2, 3, 3], [2, 3, 4], [2, 3, 5]):
        return GraphShape(ShapeKind.FORK_E)
    return GraphShape(ShapeKind.OTHER)


def classify(
    graph: DualGraph,
    boundary: BoundaryData | None = None,
    *,
    cycles: CycleSet | None = None,
) -> Classification:
    from .cycles import EMPTY_BOUNDARY

    boundary = EMPTY_BOUNDARY if boundary is None else boundary
    if cycles is None:
        cycles = boundary_cycle(graph, boundary)
    e = cycles.boundary_canonical
    return Classification(
        kind=singularity_kind(graph),
        shape=graph_shape(graph),
        log_terminal=is_log_terminal(boundary, e),
        log_canonical=is_log_canonical(boundary, e),
    )
