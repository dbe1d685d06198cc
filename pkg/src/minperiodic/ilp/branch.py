"""Exact integer minimization of a ConstraintSystem.

Parity-constrained counts are substituted as ``C = 2*D`` so every variable is
a plain nonnegative integer.  The integer program is then solved by
depth-first branch and bound on top of the rational simplex, and ties are
broken lexicographically by re-solving with the previous optimum pinned.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .constraints import ConstraintSystem, PointCounts
from .simplex import InfeasibleError, LPResult, SolverError, UnboundedError, linprog

MAX_NODES = 100_000

# lexicographic tie-break: smallest C3, then C2, then C1, then C0
TIE_BREAK = (3, 2, 1, 0)


def _integer_min(c, A_eq, b_eq, A_ge, b_ge) -> LPResult:
    n = len(c)
    best: LPResult | None = None
    stack: list[list[tuple[list[Fraction], Fraction]]] = [[]]
    root = True
    nodes = 0
    while stack:
        nodes += 1
        if nodes > MAX_NODES:
            raise SolverError(f"branch and bound exceeded {MAX_NODES} nodes")
        extra = stack.pop()
        try:
            lp = linprog(c, A_eq, b_eq, list(A_ge) + [a for a, _ in extra], list(b_ge) + [b for _, b in extra])
        except InfeasibleError:
            if root:
                raise
            continue
        finally:
            root = False
        if best is not None and lp.value >= best.value:
            continue
        frac = next((i for i, v in enumerate(lp.x) if v.denominator != 1), None)
        if frac is None:
            best = lp
            continue
        v = lp.x[frac]
        unit = [Fraction(0)] * n
        unit[frac] = Fraction(1)
        up = (unit, Fraction(math.ceil(v)))
        down = ([-u for u in unit], Fraction(-math.floor(v)))
        stack.append(extra + [up])
        stack.append(extra + [down])
    if best is None:
        raise InfeasibleError("no integer point satisfies the constraints")
    return best


def solve_min(cs: ConstraintSystem) -> PointCounts:
    """Integer, parity-respecting minimizer of ``cs``; ties go to smallest (C3, C2, C1, C0)."""
    scale = [2 if i in cs.parities else 1 for i in range(4)]

    def substituted(coeffs: Sequence[Fraction]) -> list[Fraction]:
        return [a * s for a, s in zip(coeffs, scale)]

    A_eq = [substituted(e.coeffs) for e in cs.equalities]
    b_eq = [e.rhs for e in cs.equalities]
    A_ge = [substituted(g.coeffs) for g in cs.inequalities]
    b_ge = [g.rhs for g in cs.inequalities]

    objective = substituted(cs.objective)
    best = _integer_min(objective, A_eq, b_eq, A_ge, b_ge)
    A_eq.append(objective)
    b_eq.append(best.value)
    for i in TIE_BREAK:
        unit = [Fraction(int(j == i)) for j in range(4)]
        best = _integer_min(unit, A_eq, b_eq, A_ge, b_ge)
        A_eq.append(unit)
        b_eq.append(best.value)

    d = best.x
    return PointCounts(*(int(v) * s for v, s in zip(d, scale)))


__all__ = ["solve_min", "SolverError", "InfeasibleError", "UnboundedError"]
