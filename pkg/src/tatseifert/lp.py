"""A small exact simplex solver over the rationals.

Only what the metric search needs: maximize ``c.x`` subject to ``A x = b``,
``x >= 0``. Two phases, Bland's rule, dense :class:`Fraction` tableau.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


class Unbounded(ValueError):
    pass


@dataclass
class LPResult:
    feasible: bool
    x: list[Fraction] | None = None
    value: Fraction | None = None


def _pivot(T: list[list[Fraction]], basis: list[int], r: int, c: int) -> None:
    piv = T[r][c]
    row = [v / piv for v in T[r]]
    T[r] = row
    for i in range(len(T)):
        if i != r and T[i][c] != 0:
            f = T[i][c]
            Ti = T[i]
            T[i] = [a - f * b for a, b in zip(Ti, row)]
    basis[r] = c


def _run(T, basis, ncols: int, allowed) -> None:
    """Minimize the objective held in the last row (reduced costs, rhs last column)."""
    while True:
        entering = None
        for j in range(ncols):
            if j in allowed and T[-1][j] < 0:
                entering = j
                break
        if entering is None:
            return
        best = None
        for i in range(len(T) - 1):
            a = T[i][entering]
            if a > 0:
                ratio = T[i][-1] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            raise Unbounded("objective is unbounded")
        _pivot(T, basis, best[1], entering)


def maximize(c: Sequence, A: Sequence[Sequence], b: Sequence) -> LPResult:
    m, n = len(A), len(c)
    rows = []
    for Ai, bi in zip(A, b):
        Ai = [Fraction(v) for v in Ai]
        bi = Fraction(bi)
        if bi < 0:
            Ai, bi = [-v for v in Ai], -bi
        rows.append((Ai, bi))
    # phase 1: artificials n..n+m-1
    T = []
    for i, (Ai, bi) in enumerate(rows):
        art = [Fraction(0)] * m
        art[i] = Fraction(1)
        T.append(Ai + art + [bi])
    basis = list(range(n, n + m))
    phase1 = [Fraction(0)] * (n + m + 1)
    for row in T:
        for j in range(n):
            phase1[j] -= row[j]
        phase1[-1] -= row[-1]
    T.append(phase1)
    _run(T, basis, n + m, set(range(n + m)))
    if T[-1][-1] != 0:
        return LPResult(False)
    # drive artificials out of the basis where possible
    for i in range(m):
        if basis[i] >= n:
            for j in range(n):
                if T[i][j] != 0:
                    _pivot(T, basis, i, j)
                    break
    keep = [i for i in range(m) if basis[i] < n]
    T = [T[i][:n] + [T[i][-1]] for i in keep]
    basis = [basis[i] for i in keep]
    cost = [-Fraction(v) for v in c] + [Fraction(0)]
    for i, bv in enumerate(basis):
        if cost[bv] != 0:
            f = cost[bv]
            cost = [x - f * y for x, y in zip(cost, T[i])]
    T.append(cost)
    _run(T, basis, n, set(range(n)))
    x = [Fraction(0)] * n
    for i, bv in enumerate(basis):
        x[bv] = T[i][-1]
    return LPResult(True, x, sum((Fraction(ci) * xi for ci, xi in zip(c, x)), Fraction(0)))


def max_min_solution(A: Sequence[Sequence], b: Sequence, n: int) -> tuple[list[Fraction], Fraction] | None:
    """Solve ``A x = b`` with every ``x_j >= delta``, ``delta`` as large as possible.

    Returns ``(x, delta)`` with ``delta > 0``, or ``None`` when no solution
    with all coordinates positive exists.
    """
    # x = y + delta * 1, variables (y_0..y_{n-1}, delta)
    A2 = [list(row) + [sum((Fraction(v) for v in row), Fraction(0))] for row in A]
    c = [0] * n + [1]
    try:
        res = maximize(c, A2, b)
    except Unbounded:
        return None
    if not res.feasible or res.value <= 0:
        return None
    d = res.x[-1]
    return [y + d for y in res.x[:-1]], d
