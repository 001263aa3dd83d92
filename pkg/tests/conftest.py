"""Shared helpers for the test suite: seeded random chains, boundaries,
and a small corpus of known-good graphs."""

from __future__ import annotations

import random
from fractions import Fraction

from singinv.classify import is_log_canonical, is_log_terminal
from singinv.cycles import BoundaryData, boundary_component, boundary_cycle
from singinv.families import (
    chain_graph,
    log_terminal_forks,
    rdp_family,
    smooth_graph,
)


def cofactor_determinant(rows):
    """Laplace expansion along the first row, skipping zero entries.

    Independent of the elimination-based determinant; fine for the small
    (mostly sparse) matrices the tests feed it.
    """
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    first = rows[0]
    rest = rows[1:]
    for j, entry in enumerate(first):
        if entry == 0:
            continue
        minor = [list(row[:j]) + list(row[j + 1 :]) for row in rest]
        total += (-1) ** j * entry * cofactor_determinant(minor)
    return total


def random_chain_weights(rng: random.Random, max_length=10, max_weight=9):
    length = rng.randint(1, max_length)
    return tuple(rng.randint(2, max_weight) for _ in range(length))


def base_graphs():
    """Log-terminal corpus: smooth point, all-2 RDPs, curated forks, chains."""
    graphs = [("smooth", smooth_graph())]
    graphs += rdp_family()
    graphs += log_terminal_forks()
    graphs += [
        ("chain(3)", chain_graph((3,))),
        ("chain(2,3)", chain_graph((2, 3))),
        ("chain(2,5,2)", chain_graph((2, 5, 2))),
        ("chain(4,2,3,6)", chain_graph((4, 2, 3, 6))),
        ("chain(7,2,2,2,5)", chain_graph((7, 2, 2, 2, 5))),
    ]
    return graphs


def random_boundary(graph, rng: random.Random, *, strict: bool, max_components=2):
    """Random boundary that is log-terminal (strict=True) or log-canonical.

    Coefficients are halved until the condition holds; if that never
    succeeds the component is moved off the fiber instead.
    """
    n = graph.n
    comps = []
    for k in range(rng.randint(0, max_components)):
        meets = [rng.choice((0, 0, 0, 1, 1, 2)) for _ in range(n)]
        coeff = Fraction(rng.randint(0, 4), 4)
        if strict and coeff == 1:
            coeff = Fraction(3, 4)
        comps.append([f"C{k + 1}", coeff, meets])
    predicate = is_log_terminal if strict else is_log_canonical
    for _ in range(40):
        boundary = BoundaryData(tuple(boundary_component(*c) for c in comps))
        cs = boundary_cycle(graph, boundary)
        if predicate(boundary, cs.boundary_canonical):
            return boundary
        for c in comps:
            c[1] = c[1] / 2
    for c in comps:
        c[2] = [0] * n
    return BoundaryData(tuple(boundary_component(*c) for c in comps))
