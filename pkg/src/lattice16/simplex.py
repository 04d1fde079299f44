"""Exact-rational phase-1 simplex for equality-constrained feasibility.

Solves: find x >= 0 with A x = b, everything in Fraction arithmetic.
Bland's rule keeps the pivoting finite; "infeasible" is therefore a
theorem about the constraint system, not a numeric judgement.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = ["feasible_nonneg_solution"]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def feasible_nonneg_solution(
    a_rows: list[list[Fraction]], b: list[Fraction]
) -> list[Fraction] | None:
    """A nonnegative exact solution of A x = b, or None if none exists."""
    m = len(a_rows)
    if m == 0:
        return []
    n = len(a_rows[0])

    # Phase-1 tableau: [A | I_artificial | b], artificials basic.
    tab = []
    for i in range(m):
        row = [Fraction(x) for x in a_rows[i]]
        bi = Fraction(b[i])
        if bi < 0:
            row = [-x for x in row]
            bi = -bi
        row += [_ONE if j == i else _ZERO for j in range(m)] + [bi]
        tab.append(row)
    basis = list(range(n, n + m))

    width = n + m + 1
    # Reduced-cost row for minimizing the sum of artificials.
    cost = [_ZERO] * width
    for i in range(m):
        for j in range(width):
            cost[j] -= tab[i][j]
    for i in range(m):
        cost[n + i] = _ZERO

    while True:
        # Bland: entering = lowest-index column with negative reduced cost.
        enter = next((j for j in range(n + m) if cost[j] < 0), None)
        if enter is None:
            break
        # Ratio test, ties broken by lowest basis index (Bland).
        leave = None
        best = None
        for i in range(m):
            if tab[i][enter] > 0:
                ratio = tab[i][-1] / tab[i][enter]
                if best is None or ratio < best or (
                    ratio == best and basis[i] < basis[leave]
                ):
                    best = ratio
                    leave = i
        if leave is None:
            raise ArithmeticError("phase-1 objective unbounded below")
        _pivot(tab, cost, basis, leave, enter)

    if -cost[-1] != 0:  # minimum of artificial sum
        return None
    x = [_ZERO] * n
    for i, bj in enumerate(basis):
        if bj < n:
            x[bj] = tab[i][-1]
        elif tab[i][-1] != 0:  # pragma: no cover - guarded by objective test
            return None
    return x


def _pivot(tab, cost, basis, leave: int, enter: int) -> None:
    piv = tab[leave][enter]
    prow = tab[leave]
    inv = _ONE / piv
    for j in range(len(prow)):
        prow[j] *= inv
    for i in range(len(tab)):
        if i == leave:
            continue
        factor = tab[i][enter]
        if factor:
            row = tab[i]
            for j in range(len(row)):
                row[j] -= factor * prow[j]
    factor = cost[enter]
    if factor:
        for j in range(len(cost)):
            cost[j] -= factor * prow[j]
    basis[leave] = enter
