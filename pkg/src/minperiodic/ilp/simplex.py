"""Two-phase dense tableau simplex over exact rationals.

Solves ``min c.x`` subject to ``A_eq x = b_eq``, ``A_ge x >= b_ge`` and
``x >= 0``.  Bland's rule is used throughout, so the method cannot cycle.
Problem sizes here are a handful of rows and columns; no attempt is made at
sparsity or numerical tricks since everything is a ``Fraction``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

Row = Sequence[Fraction]


class SolverError(Exception):
    pass


class InfeasibleError(SolverError):
    pass


class UnboundedError(SolverError):
    pass


@dataclass(frozen=True)
class LPResult:
    x: tuple[Fraction, ...]
    value: Fraction


def _pivot(T: list[list[Fraction]], basis: list[int], r: int, col: int) -> None:
    piv = T[r][col]
    T[r] = [v / piv for v in T[r]]
    prow = T[r]
    for i, row in enumerate(T):
        f = row[col]
        if i != r and f:
            T[i] = [a - f * b for a, b in zip(row, prow)]
    basis[r] = col


def _optimize(T, basis, cost: list[Fraction], allowed: range) -> None:
    while True:
        entering = None
        for j in allowed:
            if j in basis:
                continue
            reduced = cost[j] - sum(cost[basis[i]] * T[i][j] for i in range(len(T)))
            if reduced < 0:
                entering = j
                break
        if entering is None:
            return
        best = None
        for i, row in enumerate(T):
            a = row[entering]
            if a > 0:
                key = (row[-1] / a, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            raise UnboundedError("objective is unbounded below")
        _pivot(T, basis, best[1], entering)


def linprog(
    c: Row,
    A_eq: Sequence[Row] = (),
    b_eq: Sequence[Fraction] = (),
    A_ge: Sequence[Row] = (),
    b_ge: Sequence[Fraction] = (),
) -> LPResult:
    n = len(c)
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    n_ge = len(A_ge)
    for a, b in zip(A_eq, b_eq):
        rows.append([Fraction(v) for v in a] + [Fraction(0)] * n_ge)
        rhs.append(Fraction(b))
    for k, (a, b) in enumerate(zip(A_ge, b_ge)):
        surplus = [Fraction(0)] * n_ge
        surplus[k] = Fraction(-1)
        rows.append([Fraction(v) for v in a] + surplus)
        rhs.append(Fraction(b))
    m = len(rows)
    width = n + n_ge
    if m == 0:
        if any(Fraction(v) < 0 for v in c):
            raise UnboundedError("objective is unbounded below")
        return LPResult(tuple(Fraction(0) for _ in range(n)), Fraction(0))

    T: list[list[Fraction]] = []
    for i, (row, b) in enumerate(zip(rows, rhs)):
        sign = -1 if b < 0 else 1
        art = [Fraction(0)] * m
        art[i] = Fraction(1)
        T.append([sign * v for v in row] + art + [sign * b])
    basis = list(range(width, width + m))

    phase1 = [Fraction(0)] * width + [Fraction(1)] * m
    _optimize(T, basis, phase1, range(width + m))
    if any(T[i][-1] != 0 for i in range(m) if basis[i] >= width):
        raise InfeasibleError("constraints have no nonnegative solution")

    # drive zero-level artificials out of the basis; drop rows that are redundant
    i = 0
    while i < len(T):
        if basis[i] >= width:
            col = next((j for j in range(width) if T[i][j] != 0), None)
            if col is None:
                del T[i]
                del basis[i]
                continue
            _pivot(T, basis, i, col)
        i += 1
    T = [row[:width] + [row[-1]] for row in T]

    phase2 = [Fraction(v) for v in c] + [Fraction(0)] * n_ge
    _optimize(T, basis, phase2, range(width))

    x = [Fraction(0)] * width
    for i, j in enumerate(basis):
        x[j] = T[i][-1]
    sol = tuple(x[:n])
    return LPResult(sol, sum((Fraction(ci) * xi for ci, xi in zip(c, sol)), Fraction(0)))
