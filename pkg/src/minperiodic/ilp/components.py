"""Per-component minima and their aggregation over a whole system."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from ..model import SystemSpec, require_valid
from ..regularize import RegularizedComponent, regularize
from .branch import solve_min
from .constraints import ComponentCase, ConstraintSystem, PointCounts, build_constraints, component_case
from .oracle import brute_force_min

Solver = Callable[[ConstraintSystem, RegularizedComponent], PointCounts]


def default_box(rc: RegularizedComponent) -> int:
    return 4 * (rc.l1 + rc.l2) + 12


def oracle_solver(box: int | None = None) -> Solver:
    def solve(cs: ConstraintSystem, rc: RegularizedComponent) -> PointCounts:
        return brute_force_min(cs, box if box is not None else default_box(rc))

    return solve


@dataclass(frozen=True)
class Breakdown:
    """Isolated periodic points of ``f`` grouped by kind."""

    sources: int = 0
    index1_saddles: int = 0
    index2_saddles: int = 0
    sinks: int = 0

    @property
    def total(self) -> int:
        return self.sources + self.index1_saddles + self.index2_saddles + self.sinks

    def __add__(self, other: "Breakdown") -> "Breakdown":
        return Breakdown(
            self.sources + other.sources,
            self.index1_saddles + other.index1_saddles,
            self.index2_saddles + other.index2_saddles,
            self.sinks + other.sinks,
        )


def attribute(rc: RegularizedComponent, counts: PointCounts) -> Breakdown:
    """Translate regular-system counts back to isolated points of ``f``.

    Glued sinks are dropped; on a covered component every isolated point of
    ``f`` appears twice, so the remaining counts are halved.
    """
    own = (counts.C0 - rc.glued_sinks, counts.C1, counts.C2, counts.C3)
    if min(own) < 0:
        raise ValueError(f"counts {tuple(counts)} have fewer sinks than the {rc.glued_sinks} glued ones")
    if rc.covered:
        if any(v % 2 for v in own):
            raise ValueError(f"counts {tuple(counts)} do not descend through the double cover")
        own = tuple(v // 2 for v in own)
    sinks, s1, s2, sources = own
    return Breakdown(sources=sources, index1_saddles=s1, index2_saddles=s2, sinks=sinks)


@dataclass(frozen=True)
class ComponentSolution:
    component: str
    case: ComponentCase
    counts: PointCounts
    regular_total: int
    isolated_for_f: int
    breakdown: Breakdown


def component_solution(rc: RegularizedComponent, solver: Solver | None = None) -> ComponentSolution:
    cs = build_constraints(rc)
    counts = solver(cs, rc) if solver is not None else solve_min(cs)
    total = counts.total
    extra = total - rc.glued_sinks
    if rc.covered:
        if extra % 2:
            raise ValueError(f"covered component {rc.source_component!r}: odd surplus {extra}")
        isolated = extra // 2
    else:
        isolated = extra
    breakdown = attribute(rc, counts)
    assert breakdown.total == isolated
    return ComponentSolution(rc.source_component, component_case(rc), counts, total, isolated, breakdown)


@dataclass(frozen=True)
class GlobalMinimum:
    total: int
    per_component: tuple[ComponentSolution, ...]
    breakdown: Breakdown
    regularized: tuple[RegularizedComponent, ...]


def global_minimum(spec: SystemSpec, solver: Solver | None = None) -> GlobalMinimum:
    """Minimum number of isolated periodic points over all components of ``spec``.

    ``solver`` takes ``(system, descriptor)``; the default is the exact
    simplex/branch-and-bound path.
    """
    require_valid(spec)
    rcs = tuple(regularize(spec))
    sols = tuple(component_solution(rc, solver) for rc in rcs)
    breakdown = sum((s.breakdown for s in sols), Breakdown())
    return GlobalMinimum(sum(s.isolated_for_f for s in sols), sols, breakdown, rcs)
