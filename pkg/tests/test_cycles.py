import itertools
import random
from fractions import Fraction

import pytest

from conftest import base_graphs, random_boundary, random_chain_weights
from singinv.cycles import (
    BoundaryData,
    arithmetic_genus,
    boundary_component,
    boundary_cycle,
    canonical_cycle,
    exceptional_pullback,
    fundamental_cycle,
)
from singinv.families import ade_graph, chain_graph, fork_graph, smooth_graph
from singinv.graph import ExcDivisor, build_graph, intersection_matrix
from singinv.linalg import int_matvec


def _anti_nef(graph, z):
    form = intersection_matrix(graph).positive_form
    return all(s >= 0 for s in int_matvec(form, list(z)))


def test_fundamental_cycle_single_vertex():
    for w in (1, 2, 7):
        g = build_graph([("E1", w)])
        assert fundamental_cycle(g).coeffs == (Fraction(1),)


def test_fundamental_cycle_chain():
    assert fundamental_cycle(chain_graph((2, 3))).coeffs == (Fraction(1), Fraction(1))


def test_fundamental_cycle_d4():
    g = ade_graph("D", 4)  # center listed first
    assert fundamental_cycle(g).coeffs == (
        Fraction(2),
        Fraction(1),
        Fraction(1),
        Fraction(1),
    )


@pytest.mark.parametrize(
    "graph", [chain_graph((2, 3)), ade_graph("D", 4), fork_graph(3, [(2,), (2,), (2,)])]
)
def test_fundamental_cycle_is_componentwise_minimal(graph):
    """Every anti-nef candidate in a box above Z dominates Z; nothing below works."""
    z = tuple(int(c) for c in fundamental_cycle(graph))
    assert _anti_nef(graph, z)
    for cand in itertools.product(*(range(1, zi + 3) for zi in z)):
        if _anti_nef(graph, cand):
            assert all(c >= zi for c, zi in zip(cand, z))


def test_fundamental_cycle_decrement_breaks_anti_nefness():
    for _, g in base_graphs():
        z = [int(c) for c in fundamental_cycle(g)]
        for j in range(g.n):
            if z[j] == 1:
                continue  # decrementing would leave the all->=1 region
            z[j] -= 1
            assert not _anti_nef(g, z)
            z[j] += 1


def test_fundamental_cycle_order_independent():
    rng = random.Random(31)
    graphs = [g for _, g in base_graphs()]
    graphs += [chain_graph(random_chain_weights(rng, 8, 5)) for _ in range(5)]
    for g in graphs:
        expected = fundamental_cycle(g)
        for _ in range(4):
            got = fundamental_cycle(g, tie_break=rng.choice)
            assert got == expected


def test_arithmetic_genus_examples():
    g = smooth_graph()
    assert arithmetic_genus(g, fundamental_cycle(g)) == 0
    d4 = ade_graph("D", 4)
    assert arithmetic_genus(d4, fundamental_cycle(d4)) == 0


def test_arithmetic_genus_nonnegative_on_fundamental_cycles():
    for _, g in base_graphs():
        assert arithmetic_genus(g, fundamental_cycle(g)) >= 0


def test_arithmetic_genus_errors():
    g = chain_graph((2, 3))
    with pytest.raises(ValueError, match="dimension mismatch"):
        arithmetic_genus(g, ExcDivisor.zero(3))
    with pytest.raises(ValueError, match="effective and integral"):
        arithmetic_genus(g, ExcDivisor.from_values(["1/2", 1]))


def test_canonical_cycle_examples():
    assert canonical_cycle(smooth_graph()).coeffs == (Fraction(-1),)
    assert canonical_cycle(chain_graph((2, 3))).coeffs == (
        Fraction(1, 5),
        Fraction(2, 5),
    )
    for letter, n in (("A", 5), ("D", 6), ("E", 8)):
        assert canonical_cycle(ade_graph(letter, n)).is_zero()


def test_canonical_cycle_effective_on_minimal_resolutions():
    for name, g in base_graphs():
        if name == "smooth":
            continue
        assert canonical_cycle(g).is_effective()


def test_exceptional_pullback_examples():
    g = chain_graph((2, 3))
    assert exceptional_pullback(g, [0, 0]).is_zero()
    assert exceptional_pullback(g, [1, 0]).coeffs == (Fraction(3, 5), Fraction(1, 5))
    assert exceptional_pullback(build_graph([("E1", 2)]), [1]).coeffs == (
        Fraction(1, 2),
    )
    with pytest.raises(ValueError, match="negative"):
        exceptional_pullback(g, [-1, 0])


def test_boundary_cycle_empty():
    g = chain_graph((2, 3))
    cs = boundary_cycle(g)
    assert cs.boundary_part.is_zero()
    assert cs.boundary_canonical == cs.canonical
    assert cs.fundamental_genus == 0


def test_boundary_cycle_single_vertex():
    g = build_graph([("E1", 3)])
    b = BoundaryData((boundary_component("C", "1/2", [1]),))
    cs = boundary_cycle(g, b)
    assert cs.boundary_part.coeffs == (Fraction(1, 6),)
    assert cs.boundary_canonical.coeffs == (Fraction(1, 2),)


def test_boundary_cycle_chain_2_5_2():
    g = chain_graph((2, 5, 2))
    b = BoundaryData((boundary_component("C", "1/2", [0, 1, 0]),))
    cs = boundary_cycle(g, b)
    assert cs.canonical.coeffs == (Fraction(3, 8), Fraction(3, 4), Fraction(3, 8))
    assert cs.boundary_part.coeffs == (
        Fraction(1, 16),
        Fraction(1, 8),
        Fraction(1, 16),
    )
    assert cs.boundary_canonical.coeffs == (
        Fraction(7, 16),
        Fraction(7, 8),
        Fraction(7, 16),
    )


def test_boundary_cycle_coefficient_identity_random():
    rng = random.Random(32)
    for name, g in base_graphs():
        for _ in range(3):
            b = random_boundary(g, rng, strict=False)
            cs = boundary_cycle(g, b)
            assert cs.boundary_canonical == cs.canonical + cs.boundary_part
            assert cs.fundamental.is_integral()
            assert all(z >= 1 for z in cs.fundamental)


def test_boundary_validation_errors():
    g = chain_graph((2, 3))
    with pytest.raises(ValueError, match="negative coefficient"):
        boundary_cycle(g, BoundaryData((boundary_component("C", "-1/2", [0, 0]),)))
    with pytest.raises(ValueError, match="> 1"):
        boundary_cycle(g, BoundaryData((boundary_component("C", "5/4", [0, 0]),)))
    with pytest.raises(ValueError, match="length"):
        boundary_cycle(g, BoundaryData((boundary_component("C", "1/2", [1]),)))
    with pytest.raises(ValueError, match="negative intersection"):
        boundary_cycle(g, BoundaryData((boundary_component("C", "1/2", [-1, 0]),)))


def test_boundary_part_monotone_in_coefficients():
    rng = random.Random(33)
    for name, g in base_graphs():
        b = random_boundary(g, rng, strict=False)
        if not b.components:
            continue
        cs = boundary_cycle(g, b)
        k = rng.randrange(len(b.components))
        bumped = list(b.components)
        comp = bumped[k]
        bumped[k] = boundary_component(
            comp.name, min(Fraction(1), comp.coeff + Fraction(1, 8)), comp.meets
        )
        cs2 = boundary_cycle(g, BoundaryData(tuple(bumped)))
        assert all(
            new >= old for new, old in zip(cs2.boundary_part, cs.boundary_part)
        )
