"""Point-count constraint systems for one regularized component."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import NamedTuple, Sequence

from ..regularize import RegularizedComponent

VARIABLES = ("C0", "C1", "C2", "C3")


class PointCounts(NamedTuple):
    """Fixed points of the regular system by unstable dimension."""

    C0: int
    C1: int
    C2: int
    C3: int

    @property
    def total(self) -> int:
        return self.C0 + self.C1 + self.C2 + self.C3

    def alternating_sum(self) -> int:
        return self.C3 - self.C2 + self.C1 - self.C0

    def as_dict(self) -> dict[str, int]:
        return dict(zip(VARIABLES, self))


Vector = tuple[Fraction, Fraction, Fraction, Fraction]


def _vec(*coeffs) -> Vector:
    if len(coeffs) != 4:
        raise ValueError("coefficient vectors have exactly four entries")
    return tuple(Fraction(c) for c in coeffs)  # type: ignore[return-value]


@dataclass(frozen=True)
class LinearConstraint:
    name: str
    coeffs: Vector
    rhs: Fraction

    def lhs(self, counts: Sequence[int]) -> Fraction:
        return sum((a * v for a, v in zip(self.coeffs, counts)), Fraction(0))

    def describe(self, relation: str) -> str:
        terms = []
        for a, var in zip(self.coeffs, VARIABLES):
            if a == 0:
                continue
            sign = "-" if a < 0 else "+"
            mag = abs(a)
            terms.append(f"{sign} {var}" if mag == 1 else f"{sign} {mag}*{var}")
        text = " ".join(terms).lstrip("+ ")
        if text.startswith("- "):
            text = "-" + text[2:]
        return f"{text} {relation} {self.rhs}"


@dataclass(frozen=True)
class ConstraintSystem:
    """Equalities ``a.C = b``, inequalities ``a.C >= b``, and parity requirements.

    ``parities`` holds indices into ``VARIABLES`` of counts that must be even.
    The objective is minimized; it defaults to the total point count.
    """

    equalities: tuple[LinearConstraint, ...] = ()
    inequalities: tuple[LinearConstraint, ...] = ()
    parities: frozenset[int] = frozenset()
    objective: Vector = field(default_factory=lambda: _vec(1, 1, 1, 1))

    def value(self, counts: Sequence[int]) -> Fraction:
        return sum((a * v for a, v in zip(self.objective, counts)), Fraction(0))

    def violations(self, counts: Sequence[int]) -> list[str]:
        out = [f"nonnegative:{var}" for var, v in zip(VARIABLES, counts) if v < 0]
        out += [c.name for c in self.equalities if c.lhs(counts) != c.rhs]
        out += [c.name for c in self.inequalities if c.lhs(counts) < c.rhs]
        out += [f"even:{VARIABLES[i]}" for i in sorted(self.parities) if counts[i] % 2]
        return out

    def with_objective(self, objective: Sequence) -> "ConstraintSystem":
        return ConstraintSystem(self.equalities, self.inequalities, self.parities, _vec(*objective))

    def describe(self) -> list[str]:
        lines = [c.describe("=") for c in self.equalities]
        lines += [c.describe(">=") for c in self.inequalities]
        lines += [f"{VARIABLES[i]} even" for i in sorted(self.parities)]
        return lines


class ComponentCase(str, Enum):
    PLUS_ORIENTABLE = "plus-orientable"
    MINUS = "minus-covered"
    PLUS_NONORIENTABLE = "plus-nonorientable"


def component_case(rc: RegularizedComponent) -> ComponentCase:
    if rc.covered:
        return ComponentCase.MINUS
    return ComponentCase.PLUS_ORIENTABLE if rc.component_orientable else ComponentCase.PLUS_NONORIENTABLE


LEFSCHETZ = LinearConstraint("lefschetz", _vec(-1, 1, -1, 1), Fraction(0))


def build_constraints(rc: RegularizedComponent) -> ConstraintSystem:
    case = component_case(rc)
    if case is ComponentCase.MINUS:
        if rc.l1 <= 0 or rc.l1 % 2:
            raise ValueError(f"covered component {rc.source_component!r} needs positive even l1, got {rc.l1}")
        return ConstraintSystem(
            equalities=(LEFSCHETZ,),
            inequalities=(
                LinearConstraint("glued-sinks", _vec(1, 0, 0, 0), Fraction(rc.l1 + 2 * rc.l2)),
                LinearConstraint("saddle-skeleton", _vec(-1, 1, 0, 0), Fraction(rc.l1 - 2)),
                LinearConstraint("sources", _vec(0, 0, 0, 1), Fraction(2)),
            ),
            parities=frozenset({1, 2, 3}),
        )

    ineq = [
        LinearConstraint("connectivity", _vec(-1, 1, 0, 0), Fraction(-1)),
        LinearConstraint("glued-sinks", _vec(1, 0, 0, 0), Fraction(rc.l2)),
        LinearConstraint("sources", _vec(0, 0, 0, 1), Fraction(1)),
    ]
    if case is ComponentCase.PLUS_NONORIENTABLE:
        ineq += [
            LinearConstraint("index1-saddle", _vec(0, 1, 0, 0), Fraction(1)),
            LinearConstraint("index2-saddle", _vec(0, 0, 1, 0), Fraction(1)),
        ]
    return ConstraintSystem(equalities=(LEFSCHETZ,), inequalities=tuple(ineq))


def audit(rc: RegularizedComponent, candidate: Sequence[int]) -> list[str]:
    """Names of the constraints of ``rc``'s system that ``candidate`` violates."""
    return build_constraints(rc).violations(tuple(candidate))
