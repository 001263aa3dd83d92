"""Builders for the standard graph families used by tests and `enumerate`."""

from __future__ import annotations

import itertools
from typing import Iterator, Sequence

from .graph import DualGraph, build_graph


def chain_graph(weights: Sequence[int], prefix: str = "E") -> DualGraph:
    """Path graph with the given weights, vertices E1-E2-...-En."""
    ids = [f"{prefix}{k + 1}" for k in range(len(weights))]
    vertices = [(vid, int(w)) for vid, w in zip(ids, weights)]
    edges = [(ids[k], ids[k + 1]) for k in range(len(weights) - 1)]
    return build_graph(vertices, edges)


def smooth_graph() -> DualGraph:
    """The blown-up smooth point: a single (-1)-curve."""
    return build_graph([("E1", 1)])


def fork_graph(
    center_weight: int, arms: Sequence[Sequence[int]], prefix: str = "E"
) -> DualGraph:
    """A central vertex with chain arms attached, center listed first."""
    vertices = [(f"{prefix}1", int(center_weight))]
    edges = []
    counter = 2
    for arm in arms:
        previous = f"{prefix}1"
        for w in arm:
            vid = f"{prefix}{counter}"
            counter += 1
            vertices.append((vid, int(w)))
            edges.append((previous, vid))
            previous = vid
    return build_graph(vertices, edges)


def ade_graph(letter: str, n: int) -> DualGraph:
    """All-weight-2 Dynkin configuration A_n (n >= 1), D_n (n >= 4),
    E_6, E_7 or E_8."""
    if letter == "A":
        if n < 1:
            raise ValueError("A_n needs n >= 1")
        return chain_graph((2,) * n)
    if letter == "D":
        if n < 4:
            raise ValueError("D_n needs n >= 4")
        return fork_graph(2, [(2,), (2,), (2,) * (n - 3)])
    if letter == "E":
        arm_lengths = {6: (1, 2, 2), 7: (1, 2, 3), 8: (1, 2, 4)}
        if n not in arm_lengths:
            raise ValueError("E_n exists for n in {6, 7, 8}")
        return fork_graph(2, [(2,) * k for k in arm_lengths[n]])
    raise ValueError(f"unknown family letter {letter!r}")


def rdp_family() -> list[tuple[str, DualGraph]]:
    """A_1..A_8, D_4..D_8, E_6..E_8, all weights 2."""
    out = [(f"A{n}", ade_graph("A", n)) for n in range(1, 9)]
    out += [(f"D{n}", ade_graph("D", n)) for n in range(4, 9)]
    out += [(f"E{n}", ade_graph("E", n)) for n in (6, 7, 8)]
    return out


def log_terminal_forks() -> list[tuple[str, DualGraph]]:
    """Quotient-singularity forks that are log-terminal but not RDPs.

    Dihedral shapes (two single weight-2 arms) with assorted weights on
    the center and tail, plus forks with arm determinants (2,3,3),
    (2,3,4) and (2,3,5) realized by non-uniform weights.
    """
    samples = [
        ("D-fork center 3", fork_graph(3, [(2,), (2,), (2,)])),
        ("D-fork center 5", fork_graph(5, [(2,), (2,), (2,)])),
        ("D-fork tail (3,2)", fork_graph(2, [(2,), (2,), (3, 2)])),
        ("D-fork tail (2,4)", fork_graph(3, [(2,), (2,), (2, 4)])),
        ("E-fork dets (2,3,3)", fork_graph(2, [(2,), (3,), (3,)])),
        ("E-fork dets (2,3,4)", fork_graph(2, [(2,), (3,), (4,)])),
        ("E-fork dets (2,3,5)", fork_graph(2, [(2,), (3,), (5,)])),
        ("E-fork dets (2,3,5) long arm", fork_graph(2, [(2,), (3,), (3, 2)])),
    ]
    return samples


def iter_chain_weights(
    max_length: int, max_weight: int
) -> Iterator[tuple[int, ...]]:
    """All weight tuples of length 1..max_length with entries in [2, max_weight],
    ordered by length then lexicographically."""
    if max_weight < 2:
        raise ValueError("max_weight must be at least 2")
    for length in range(1, max_length + 1):
        yield from itertools.product(range(2, max_weight + 1), repeat=length)


def chain_family_size(max_length: int, max_weight: int) -> int:
    span = max_weight - 1
    return sum(span**k for k in range(1, max_length + 1))
