import random
from fractions import Fraction

import pytest

from conftest import base_graphs, random_boundary
from singinv.classify import SingularityKind, is_log_terminal, singularity_kind
from singinv.cycles import (
    BoundaryData,
    boundary_component,
    boundary_cycle,
)
from singinv.families import ade_graph, chain_graph, smooth_graph
from singinv.graph import ExcDivisor, build_graph, intersection_matrix
from singinv.invariants import (
    DEFAULT_EPSILON,
    DeltaPrimeKind,
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
from singinv.linalg import matvec


def _mid_boundary_252():
    return BoundaryData((boundary_component("C", "1/2", [0, 1, 0]),))


def _cusp_triangle():
    return build_graph(
        [("a", 3), ("b", 3), ("c", 3)],
        [("a", "b"), ("b", "c"), ("c", "a")],
    )


def test_quadratic_norm_examples():
    g = chain_graph((2, 3))
    assert quadratic_norm(g, ExcDivisor.zero(2)) == 0
    assert quadratic_norm(g, ExcDivisor.from_values(["4/5", "3/5"])) == Fraction(7, 5)
    assert quadratic_norm(smooth_graph(), ExcDivisor.from_values([2])) == 4
    with pytest.raises(ValueError, match="dimension mismatch"):
        quadratic_norm(g, ExcDivisor.zero(3))


def test_delta_y_examples():
    assert delta_y(smooth_graph()) == 4
    assert delta_y(build_graph([("E1", 2)])) == 2
    assert delta_y(chain_graph((2, 3))) == Fraction(7, 5)
    assert delta_y(chain_graph((2, 5, 2))) == Fraction(5, 4)


def test_delta_by_examples():
    g = chain_graph((2, 3))
    assert delta_by(g) == delta_y(g)
    g3 = build_graph([("E1", 3)])
    b = BoundaryData((boundary_component("C", "1/2", [1]),))
    assert delta_by(g3, b) == Fraction(3, 4)
    assert delta_by(chain_graph((2, 5, 2)), _mid_boundary_252()) == Fraction(17, 16)


def test_delta_min_gradient_positive_cases():
    res = delta_min(chain_graph((2, 3)))
    assert res.value == Fraction(7, 5)
    assert res.minimizer.is_zero()
    assert res.active_set == frozenset()
    smooth = delta_min(smooth_graph())
    assert smooth.value == 4
    assert smooth.minimizer.is_zero()


def test_delta_min_anchor_2_5_2():
    g = chain_graph((2, 5, 2))
    res = delta_min(g, _mid_boundary_252())
    assert res.value == Fraction(81, 80)
    assert res.minimizer.coeffs == (Fraction(0), Fraction(1, 10), Fraction(0))
    assert res.active_set == frozenset({1})
    assert res.value < delta_by(g, _mid_boundary_252())


def test_delta_min_matches_exhaustive_and_kkt():
    rng = random.Random(51)
    form_cache = {}
    for name, g in base_graphs():
        for trial in range(3):
            b = random_boundary(g, rng, strict=False) if trial else None
            fast = delta_min(g, b)
            slow = delta_min_exhaustive(g, b)
            assert fast.value == slow.value
            assert fast.minimizer == slow.minimizer
            # exact KKT certificate
            cs = boundary_cycle(g, b)
            v = cs.fundamental - cs.boundary_canonical
            form = form_cache.setdefault(name, intersection_matrix(g).positive_form)
            gradient = matvec(form, (v + fast.minimizer).coeffs)
            assert all(gj >= 0 for gj in gradient)
            assert all(x * gj == 0 for x, gj in zip(fast.minimizer, gradient))
            assert fast.minimizer.is_effective()
            assert fast.value == quadratic_norm(g, v + fast.minimizer)
            assert fast.value <= quadratic_norm(g, v)


def test_delta_min_below_random_feasible_points():
    rng = random.Random(52)
    g = chain_graph((2, 5, 2))
    b = _mid_boundary_252()
    res = delta_min(g, b)
    cs = boundary_cycle(g, b)
    v = cs.fundamental - cs.boundary_canonical
    for _ in range(200):
        x = ExcDivisor.from_values(
            [Fraction(rng.randint(0, 12), rng.randint(1, 6)) for _ in range(g.n)]
        )
        assert res.value <= quadratic_norm(g, v + x)


def test_mu_examples():
    assert mu(chain_graph((2, 3))) == 0
    g3 = build_graph([("E1", 3)])
    b = BoundaryData((boundary_component("C", "1/2", [1]),))
    assert mu(g3, b) == Fraction(1, 4)
    assert mu(chain_graph((2, 5, 2)), _mid_boundary_252()) == Fraction(1, 10)


def test_mu_smooth_point_is_half_multiplicity():
    g = smooth_graph()
    b = BoundaryData((boundary_component("C", "1/2", [1]),))
    # total multiplicity of the boundary at the point is 1/2
    assert 2 * mu(g, b) == Fraction(1, 2)


def test_mu_requires_log_terminal():
    with pytest.raises(NotLogTerminalError):
        mu(_cusp_triangle())
    g = chain_graph((2, 3))
    b = BoundaryData((boundary_component("C", 1, [0, 0]),))
    with pytest.raises(NotLogTerminalError):
        mu(g, b)


def test_delta_examples():
    assert delta(chain_graph((2, 3))) == Fraction(7, 5)
    assert delta(_cusp_triangle()) == 0  # some e_j = 1
    g = chain_graph((2, 3))
    full = BoundaryData((boundary_component("C", 1, [0, 0]),))
    assert delta(g, full) == 0


def test_delta_prime_examples():
    dp = delta_prime(chain_graph((2, 3)))
    assert dp.kind is DeltaPrimeKind.CHAIN_END_VALUE
    assert dp.value == Fraction(3, 5)
    one_vertex = delta_prime(build_graph([("E1", 2)]))
    assert one_vertex.value == 1
    assert delta_prime(ade_graph("E", 8)).kind is DeltaPrimeKind.ZERO
    d4 = delta_prime(ade_graph("D", 4))
    assert d4.kind is DeltaPrimeKind.ANY_POSITIVE
    assert d4.epsilon == DEFAULT_EPSILON
    custom = delta_prime(ade_graph("D", 4), epsilon=Fraction(1, 7))
    assert custom.epsilon == Fraction(1, 7)
    with pytest.raises(ValueError, match="positive"):
        delta_prime(ade_graph("D", 4), epsilon=Fraction(0))


def test_delta_prime_orientation_invariant():
    forward = delta_prime(chain_graph((2, 5, 2)), _mid_boundary_252())
    assert forward.value == Fraction(9, 16)
    asymmetric = BoundaryData((boundary_component("C", "1/2", [1, 0, 0]),))
    left = delta_prime(chain_graph((2, 5, 2)), asymmetric)
    flipped = BoundaryData((boundary_component("C", "1/2", [0, 0, 1]),))
    right = delta_prime(chain_graph((2, 5, 2)), flipped)
    assert left.value == right.value


def test_check_hypotheses_examples():
    g = chain_graph((2, 3))
    ok = check_hypotheses(g, None, 2, 1)
    assert ok.satisfied
    assert ok.m2_exceeds_delta and ok.mc_meets_delta_prime
    # strict inequality on M^2
    borderline = check_hypotheses(g, None, Fraction(7, 5), 1)
    assert not borderline.satisfied
    assert not borderline.m2_exceeds_delta
    # non-log-terminal: delta = delta' = 0, everything passes
    trivial = check_hypotheses(_cusp_triangle(), None, Fraction(1, 100), 0)
    assert trivial.satisfied
    assert trivial.delta == 0
    assert trivial.delta_prime.kind is DeltaPrimeKind.ZERO
    assert trivial.scaled is None


def test_check_hypotheses_dihedral_requires_positive_mc():
    d4 = ade_graph("D", 4)
    assert not check_hypotheses(d4, None, 3, 0).mc_meets_delta_prime
    assert check_hypotheses(d4, None, 3, Fraction(1, 10**6)).satisfied


def test_check_hypotheses_scaled_variants():
    g = chain_graph((2, 3))
    res = check_hypotheses(g, None, 2, 1)
    assert res.scaled is not None
    assert res.scaled.mu == 0
    dy = res.scaled.delta_y_variant
    assert dy.m2_threshold == Fraction(7, 5)
    assert dy.mc_threshold == Fraction(7, 10)
    assert dy.satisfied
    # with mu = 0 and delta = delta_min = delta_y on this input, both agree
    assert res.scaled.delta_variant.m2_threshold == Fraction(7, 5)


def test_check_hypotheses_input_errors():
    g = chain_graph((2, 3))
    with pytest.raises(InvalidNefError):
        check_hypotheses(g, None, 0, 1)
    with pytest.raises(NegativeIntersectionError):
        check_hypotheses(g, None, 1, -1)


def test_delta_by_upper_bounds_by_kind():
    # smooth: <= 4; RDP: <= 2; other log-terminal: < 2
    rng = random.Random(55)
    for name, g in base_graphs():
        kind = singularity_kind(g)
        for _ in range(4):
            b = random_boundary(g, rng, strict=True)
            cs = boundary_cycle(g, b)
            assert is_log_terminal(b, cs.boundary_canonical)
            dby = delta_by(g, b)
            if kind is SingularityKind.SMOOTH:
                assert dby <= 4
            elif kind is SingularityKind.RDP:
                assert dby <= 2
            else:
                assert dby < 2


def test_delta_prime_reversed_vertex_listing():
    g = build_graph([("E2", 3), ("E1", 2)], [("E1", "E2")])
    assert delta_prime(g).value == Fraction(3, 5)


def test_delta_chain_ordering_random():
    rng = random.Random(53)
    for _, g in base_graphs():
        for _ in range(3):
            b = random_boundary(g, rng, strict=False)
            dmin = delta_min(g, b).value
            dby = delta_by(g, b)
            dy = delta_y(g)
            assert dmin <= dby <= dy <= 4


def test_section_2_2_equalities_on_anchor():
    g = chain_graph((2, 5, 2))
    b = _mid_boundary_252()
    mu_value = mu(g, b)
    assert delta_min(g, b).value == (1 - mu_value) ** 2 * delta_y(g)
    dp = delta_prime(g, b)
    assert dp.value == (1 - mu_value) * delta_y(g) / 2
