"""Exhaustive enumeration oracle for ConstraintSystem minimization.

Independent of the simplex path: every point of ``[0, B]^4`` is checked
against every constraint.  Rational rows are cleared to integers first so the
scan is exact in int64.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

import numpy as np

from .constraints import ConstraintSystem, PointCounts
from .simplex import SolverError


class EmptyBoxError(SolverError):
    pass


def _integer_row(coeffs: Sequence[Fraction], rhs: Fraction) -> tuple[np.ndarray, int]:
    den = math.lcm(*(Fraction(v).denominator for v in (*coeffs, rhs)))
    return np.array([int(v * den) for v in coeffs], dtype=np.int64), int(rhs * den)


def brute_force_min(cs: ConstraintSystem, box: int) -> PointCounts:
    """Minimizer over the integer box ``[0, box]^4`` with the solver's tie-break."""
    if box < 1:
        raise ValueError("box bound must be at least 1")
    eqs = [_integer_row(e.coeffs, e.rhs) for e in cs.equalities]
    ges = [_integer_row(g.coeffs, g.rhs) for g in cs.inequalities]
    obj, _ = _integer_row(cs.objective, Fraction(0))

    # one slab per value of C0; C1, C2, C3 vary over a dense grid whose
    # partial sums are computed once
    axis = np.arange(box + 1, dtype=np.int64)
    c1, c2, c3 = (g.ravel() for g in np.meshgrid(axis, axis, axis, indexing="ij"))
    rest = lambda a: a[1] * c1 + a[2] * c2 + a[3] * c3  # noqa: E731
    eq_parts = [(a[0], rest(a), b) for a, b in eqs]
    ge_parts = [(a[0], rest(a), b) for a, b in ges]
    base = np.ones(c1.shape, dtype=bool)
    for i in cs.parities:
        if i:
            base &= (c1, c2, c3)[i - 1] % 2 == 0
    obj_rest = rest(obj)

    best: tuple | None = None
    for c0 in range(box + 1):
        if 0 in cs.parities and c0 % 2:
            continue
        ok = base.copy()
        for a0, part, b in eq_parts:
            ok &= part == b - a0 * c0
        for a0, part, b in ge_parts:
            ok &= part >= b - a0 * c0
        if not ok.any():
            continue
        f1, f2, f3 = c1[ok], c2[ok], c3[ok]
        val = obj[0] * c0 + obj_rest[ok]
        # lexsort: last key is primary
        j = np.lexsort((f1, f2, f3, val))[0]
        key = (int(val[j]), int(f3[j]), int(f2[j]), int(f1[j]), c0)
        if best is None or key < best:
            best = key
    if best is None:
        raise EmptyBoxError(f"empty box: no feasible point in [0, {box}]^4")
    _, C3, C2, C1, C0 = best
    return PointCounts(C0, C1, C2, C3)
