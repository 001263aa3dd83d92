"""Determinant calculus for chain configurations.

For a chain of weights (w_1, ..., w_n) the intersection form is the
tridiagonal matrix A with diagonal w and off-diagonal -1.  Its
determinant a(w_1, ..., w_n) obeys the continuant recurrence

    a(w_1, ..., w_j) = w_j * a(w_1, ..., w_{j-1}) - a(w_1, ..., w_{j-2})

with a() = 1, and every entry of A^{-1} is a ratio of prefix/suffix
continuants:

    c_ij = a(w_1, ..., w_{i-1}) * a(w_{j+1}, ..., w_n) / a(w_1, ..., w_n)

for i <= j, extended symmetrically.  The same quotients give the
canonical-cycle coefficients:

    1 - a_i = (a(w_1, ..., w_{i-1}) + a(w_{i+1}, ..., w_n)) / a(w_1, ..., w_n).

Positions i, j are 1-based throughout, matching the chain notation.
All weights must be >= 2: the calculus is only invoked for chains that
resolve a singular point, and strict growth of the continuants (which
the end-coefficient bound relies on) needs w_j >= 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


def _check_weights(weights: Sequence[int]) -> tuple[int, ...]:
    ws = tuple(int(w) for w in weights)
    if any(w < 2 for w in ws):
        raise ValueError("chain weights must all be >= 2")
    return ws


def continuant(weights: Sequence[int]) -> int:
    """a(w_1, ..., w_n); the empty chain gives 1."""
    ws = _check_weights(weights)
    prev2, prev1 = 0, 1  # a of the (-1)- and 0-length prefixes
    for w in ws:
        prev2, prev1 = prev1, w * prev1 - prev2
    return prev1


def _prefix_continuants(ws: tuple[int, ...]) -> list[int]:
    """[a(), a(w_1), a(w_1 w_2), ...], length n+1."""
    out = [1]
    prev2, prev1 = 0, 1
    for w in ws:
        prev2, prev1 = prev1, w * prev1 - prev2
        out.append(prev1)
    return out


def _suffix_continuants(ws: tuple[int, ...]) -> list[int]:
    """[a(w_1..w_n), a(w_2..w_n), ..., a(w_n), a()], length n+1."""
    out = [1]
    prev2, prev1 = 0, 1
    for w in reversed(ws):
        prev2, prev1 = prev1, w * prev1 - prev2
        out.append(prev1)
    out.reverse()
    return out


def _check_position(n: int, i: int) -> None:
    if not 1 <= i <= n:
        raise IndexError(f"position {i} out of range for a chain of length {n}")


def inverse_entry(weights: Sequence[int], i: int, j: int) -> Fraction:
    """Entry (i, j) of the inverse intersection form, 1-based, symmetric."""
    ws = _check_weights(weights)
    n = len(ws)
    _check_position(n, i)
    _check_position(n, j)
    if i > j:
        i, j = j, i
    return Fraction(
        continuant(ws[: i - 1]) * continuant(ws[j:]), continuant(ws)
    )


def inverse_matrix(weights: Sequence[int]) -> tuple[tuple[Fraction, ...], ...]:
    """Full inverse of the chain intersection form, via one prefix/suffix pass."""
    ws = _check_weights(weights)
    n = len(ws)
    pre = _prefix_continuants(ws)
    suf = _suffix_continuants(ws)
    total = pre[n]
    rows = []
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            lo, hi = (i, j) if i <= j else (j, i)
            row.append(Fraction(pre[lo - 1] * suf[hi], total))
        rows.append(tuple(row))
    return tuple(rows)


def discrepancy_complement(weights: Sequence[int], i: int) -> Fraction:
    """1 - a_i for the canonical-cycle coefficient a_i at position i."""
    ws = _check_weights(weights)
    n = len(ws)
    _check_position(n, i)
    return Fraction(
        continuant(ws[: i - 1]) + continuant(ws[i:]), continuant(ws)
    )


def chain_delta_y(weights: Sequence[int]) -> Fraction:
    """delta_y of a chain in closed form: 2 - a_1 - a_n.

    For n = 1 the two ends coincide and this reads 2 - 2*a_1.  Must agree
    with the quadratic form -(Z - Delta)^2 on the corresponding graph.
    """
    ws = _check_weights(weights)
    n = len(ws)
    if n == 0:
        raise ValueError("chain must be nonempty")
    return discrepancy_complement(ws, 1) + discrepancy_complement(ws, n)


@dataclass(frozen=True)
class EndBound:
    """Outcome of the chain-end coefficient bound p_n <= a(w_1..w_{n-1}) * p_1."""

    holds: bool
    first: Fraction  # p_1
    last: Fraction  # p_n


def pullback_end_bound(
    weights: Sequence[int], q: Sequence[Fraction | int]
) -> EndBound:
    """Check the end-coefficient bound for p = A^{-1} q with q >= 0.

    p_j are the exceptional coefficients of the pullback of an effective
    divisor whose strict transform meets E_j with multiplicity q_j; the
    bound holds for every such q.
    """
    ws = _check_weights(weights)
    n = len(ws)
    if n == 0:
        raise ValueError("chain must be nonempty")
    qs = [Fraction(x) for x in q]
    if len(qs) != n:
        raise ValueError(f"dimension mismatch: chain length {n}, q has {len(qs)}")
    if any(x < 0 for x in qs):
        raise ValueError("q must be nonnegative")
    inv = inverse_matrix(ws)
    p_first = sum((qi * inv[i][0] for i, qi in enumerate(qs)), Fraction(0))
    p_last = sum((qi * inv[i][n - 1] for i, qi in enumerate(qs)), Fraction(0))
    bound = continuant(ws[:-1])
    return EndBound(holds=p_last <= bound * p_first, first=p_first, last=p_last)
