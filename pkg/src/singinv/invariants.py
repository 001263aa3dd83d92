"""The delta family of singularity invariants.

delta_y = -(Z - Delta)^2 and delta_by = -(Z - Delta_B)^2 are plain
quadratic-form evaluations.  delta_min minimizes -(Z - Delta_B + x)^2
over effective exceptional x: a strictly convex quadratic over the
nonnegative cone, solved exactly by active-set search.  For a candidate
active set S we solve the stationarity equations on S, require the
solution to be nonnegative there and the gradient to be nonnegative off
S; any subset passing both is a KKT certificate and hence the unique
global minimum.  Subsets are visited in increasing size with a
first-hit exit; `delta_min_exhaustive` instead scans all 2^n subsets
and compares objectives only, giving an independent route to the same
answer.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .classify import GraphShape, ShapeKind, graph_shape, is_log_terminal
from .cycles import (
    BoundaryData,
    EMPTY_BOUNDARY,
    boundary_cycle,
    canonical_cycle,
    fundamental_cycle,
)
from .graph import DualGraph, ExcDivisor, intersection_matrix
from .linalg import matvec, quadratic_form, solve

DEFAULT_EPSILON = Fraction(1, 1000)

# Exact active-set search is exponential in the worst case; exceptional
# configurations are tiny, so a hard cap documents the intended regime.
ACTIVE_SET_LIMIT = 30
EXHAUSTIVE_LIMIT = 16


class NotLogTerminalError(ValueError):
    """Operation is only defined for log-terminal inputs."""


class InvalidNefError(ValueError):
    """A nef and big divisor must have positive self-intersection."""


class NegativeIntersectionError(ValueError):
    """min M.C must be nonnegative for nef M."""


@dataclass(frozen=True)
class DeltaMinResult:
    value: Fraction
    minimizer: ExcDivisor  # x0 >= 0
    active_set: frozenset[int]  # indices with x0_j > 0


class DeltaPrimeKind(enum.Enum):
    CHAIN_END_VALUE = "chain_end_value"  # exact value 1 - max{e at the chain ends}
    ANY_POSITIVE = "any_positive"  # any positive number works (dihedral fork)
    ZERO = "zero"


@dataclass(frozen=True)
class DeltaPrime:
    kind: DeltaPrimeKind
    value: Fraction | None = None  # exact for CHAIN_END_VALUE, 0 for ZERO
    epsilon: Fraction | None = None  # display stand-in for ANY_POSITIVE


def quadratic_norm(graph: DualGraph, v: ExcDivisor) -> Fraction:
    """-v^2 = v^T N v; zero exactly when v is."""
    if len(v) != graph.n:
        raise ValueError(
            f"dimension mismatch: graph has {graph.n} vertices, divisor has {len(v)}"
        )
    return quadratic_form(intersection_matrix(graph).positive_form, v.coeffs)


def delta_y(graph: DualGraph) -> Fraction:
    """-(Z - Delta)^2."""
    z = fundamental_cycle(graph)
    return quadratic_norm(graph, z - canonical_cycle(graph))


def delta_by(graph: DualGraph, boundary: BoundaryData | None = None) -> Fraction:
    """-(Z - Delta_B)^2."""
    cs = boundary_cycle(graph, boundary)
    return quadratic_norm(graph, cs.fundamental - cs.boundary_canonical)


def _stationary_on(
    form: Sequence[Sequence[int]], nv: list[Fraction], subset: tuple[int, ...]
) -> list[Fraction] | None:
    """Solve the stationarity equations on `subset`; None if some x_j < 0."""
    n = len(nv)
    x = [Fraction(0)] * n
    if subset:
        sub_form = [[form[i][j] for j in subset] for i in subset]
        rhs = [-nv[i] for i in subset]
        sol = solve(sub_form, rhs)
        if any(s < 0 for s in sol):
            return None
        for i, s in zip(subset, sol):
            x[i] = s
    return x


def _objective(
    form: Sequence[Sequence[int]], v: ExcDivisor, x: list[Fraction]
) -> Fraction:
    shifted = [a + b for a, b in zip(v.coeffs, x)]
    return quadratic_form(form, shifted)


def _result(x: list[Fraction], value: Fraction) -> DeltaMinResult:
    return DeltaMinResult(
        value=value,
        minimizer=ExcDivisor(tuple(x)),
        active_set=frozenset(j for j, xj in enumerate(x) if xj > 0),
    )


def delta_min(graph: DualGraph, boundary: BoundaryData | None = None) -> DeltaMinResult:
    """Exact minimum of -(Z - Delta_B + x)^2 over effective exceptional x."""
    n = graph.n
    if n > ACTIVE_SET_LIMIT:
        raise ValueError(f"active-set search is capped at {ACTIVE_SET_LIMIT} vertices")
    cs = boundary_cycle(graph, boundary)
    v = cs.fundamental - cs.boundary_canonical
    form = intersection_matrix(graph).positive_form
    nv = matvec(form, v.coeffs)
    for size in range(n + 1):
        for subset in itertools.combinations(range(n), size):
            x = _stationary_on(form, nv, subset)
            if x is None:
                continue
            inside = set(subset)
            gradient_ok = True
            for j in range(n):
                if j in inside:
                    continue  # zero on the subset by construction
                g = nv[j] + sum(form[j][k] * x[k] for k in subset)
                if g < 0:
                    gradient_ok = False
                    break
            if gradient_ok:
                return _result(x, _objective(form, v, x))
    raise RuntimeError("no KKT certificate found; is the form positive definite?")


def delta_min_exhaustive(
    graph: DualGraph, boundary: BoundaryData | None = None
) -> DeltaMinResult:
    """Same minimum by scanning every active set and comparing objectives."""
    n = graph.n
    if n > EXHAUSTIVE_LIMIT:
        raise ValueError(f"exhaustive enumeration is capped at {EXHAUSTIVE_LIMIT} vertices")
    cs = boundary_cycle(graph, boundary)
    v = cs.fundamental - cs.boundary_canonical
    form = intersection_matrix(graph).positive_form
    nv = matvec(form, v.coeffs)
    best: tuple[Fraction, list[Fraction]] | None = None
    for size in range(n + 1):
        for subset in itertools.combinations(range(n), size):
            x = _stationary_on(form, nv, subset)
            if x is None:
                continue
            value = _objective(form, v, x)
            if best is None or value < best[0]:
                best = (value, x)
    assert best is not None  # the empty set always yields x = 0
    return _result(best[1], best[0])


def mu(graph: DualGraph, boundary: BoundaryData | None = None) -> Fraction:
    """Largest t >= 0 with t*(Z - Delta) below the boundary pullback.

    Equals min_j b'_j / (z_j - a_j); only defined on log-terminal inputs,
    where z_j - a_j > 0 for every j.  Zero exactly when the boundary
    misses the point.
    """
    boundary = EMPTY_BOUNDARY if boundary is None else boundary
    cs = boundary_cycle(graph, boundary)
    if not is_log_terminal(boundary, cs.boundary_canonical):
        raise NotLogTerminalError("mu is only defined for log-terminal inputs")
    return min(
        bp / (z - a)
        for bp, z, a in zip(cs.boundary_part, cs.fundamental, cs.canonical)
    )


def delta(graph: DualGraph, boundary: BoundaryData | None = None) -> Fraction:
    """delta_min when log-terminal, 0 otherwise."""
    boundary = EMPTY_BOUNDARY if boundary is None else boundary
    cs = boundary_cycle(graph, boundary)
    if not is_log_terminal(boundary, cs.boundary_canonical):
        return Fraction(0)
    return delta_min(graph, boundary).value


def delta_prime_from(
    shape: GraphShape,
    log_terminal: bool,
    e: ExcDivisor,
    epsilon: Fraction = DEFAULT_EPSILON,
) -> DeltaPrime:
    """delta' from an already-computed shape and boundary canonical cycle."""
    if log_terminal and shape.kind is ShapeKind.CHAIN:
        assert shape.ends is not None
        i, j = shape.ends
        return DeltaPrime(
            kind=DeltaPrimeKind.CHAIN_END_VALUE, value=1 - max(e[i], e[j])
        )
    if log_terminal and shape.kind is ShapeKind.FORK_D:
        if epsilon <= 0:
            raise ValueError("epsilon must be positive")
        return DeltaPrime(kind=DeltaPrimeKind.ANY_POSITIVE, epsilon=epsilon)
    return DeltaPrime(kind=DeltaPrimeKind.ZERO, value=Fraction(0))


def delta_prime(
    graph: DualGraph,
    boundary: BoundaryData | None = None,
    epsilon: Fraction = DEFAULT_EPSILON,
) -> DeltaPrime:
    """Curve-degree threshold: 1 - max{e at the chain ends} for chains,
    "any positive number" for dihedral forks, 0 otherwise."""
    boundary = EMPTY_BOUNDARY if boundary is None else boundary
    cs = boundary_cycle(graph, boundary)
    e = cs.boundary_canonical
    return delta_prime_from(
        graph_shape(graph), is_log_terminal(boundary, e), e, epsilon
    )


@dataclass(frozen=True)
class ScaledVariant:
    """One mu-scaled sufficient check: M^2 > (1-mu)^2 * basis and
    min M.C >= (1-mu) * basis / 2."""

    basis: Fraction
    m2_threshold: Fraction
    mc_threshold: Fraction
    m2_ok: bool
    mc_ok: bool

    @property
    def satisfied(self) -> bool:
        return self.m2_ok and self.mc_ok


@dataclass(frozen=True)
class ScaledCheck:
    mu: Fraction
    delta_y_variant: ScaledVariant
    delta_variant: ScaledVariant


@dataclass(frozen=True)
class HypothesisCheck:
    m2: Fraction
    min_mc: Fraction
    delta: Fraction
    delta_prime: DeltaPrime
    m2_exceeds_delta: bool
    mc_meets_delta_prime: bool
    scaled: ScaledCheck | None  # None when not log-terminal

    @property
    def satisfied(self) -> bool:
        return self.m2_exceeds_delta and self.mc_meets_delta_prime


def _scaled_variant(
    basis: Fraction, mu_value: Fraction, m2: Fraction, min_mc: Fraction
) -> ScaledVariant:
    m2_threshold = (1 - mu_value) ** 2 * basis
    mc_threshold = (1 - mu_value) * basis / 2
    return ScaledVariant(
        basis=basis,
        m2_threshold=m2_threshold,
        mc_threshold=mc_threshold,
        m2_ok=m2 > m2_threshold,
        mc_ok=min_mc >= mc_threshold,
    )


def check_hypotheses(
    graph: DualGraph,
    boundary: BoundaryData | None,
    m2: Fraction | int,
    min_mc: Fraction | int,
    epsilon: Fraction = DEFAULT_EPSILON,
) -> HypothesisCheck:
    """Evaluate M^2 > delta and min M.C against delta'.

    The delta' requirement is: >= the exact value for a chain; strictly
    positive for a dihedral fork (epsilon is only a reporting stand-in);
    >= 0 otherwise, which nef M satisfies automatically.  When the input
    is log-terminal the report also carries the mu-scaled sufficient
    checks, in both the delta_y and the delta basis.
    """
    m2 = Fraction(m2)
    min_mc = Fraction(min_mc)
    if m2 <= 0:
        raise InvalidNefError("M^2 must be positive for nef and big M")
    if min_mc < 0:
        raise NegativeIntersectionError("min M.C must be nonnegative for nef M")
    boundary = EMPTY_BOUNDARY if boundary is None else boundary
    cs = boundary_cycle(graph, boundary)
    e = cs.boundary_canonical
    log_terminal = is_log_terminal(boundary, e)
    d = delta_min(graph, boundary).value if log_terminal else Fraction(0)
    dp = delta_prime_from(graph_shape(graph), log_terminal, e, epsilon)
    if dp.kind is DeltaPrimeKind.CHAIN_END_VALUE:
        assert dp.value is not None
        mc_ok = min_mc >= dp.value
    elif dp.kind is DeltaPrimeKind.ANY_POSITIVE:
        mc_ok = min_mc > 0
    else:
        mc_ok = min_mc >= 0
    scaled = None
    if log_terminal:
        mu_value = mu(graph, boundary)
        scaled = ScaledCheck(
            mu=mu_value,
            delta_y_variant=_scaled_variant(delta_y(graph), mu_value, m2, min_mc),
            delta_variant=_scaled_variant(d, mu_value, m2, min_mc),
        )
    return HypothesisCheck(
        m2=m2,
        min_mc=min_mc,
        delta=d,
        delta_prime=dp,
        m2_exceeds_delta=m2 > d,
        mc_meets_delta_prime=mc_ok,
        scaled=scaled,
    )
