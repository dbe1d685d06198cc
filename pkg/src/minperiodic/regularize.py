"""Count bookkeeping for the passage to a regular system.

Minus-side components are replaced by their orientation double cover, after
which every boundary component of the trapping neighbourhood is a 2-sphere.
Each sphere is capped with a ball carrying one hyperbolic sink.  Only the
resulting counts are tracked; no covering space or gluing map is built.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .model import ComponentSpec, Side, SystemSpec, require_valid


class OrbitSpace(str, Enum):
    PRODUCT_BUNDLE = "S2xS1"
    TWISTED_BUNDLE = "S2~xS1"


@dataclass(frozen=True)
class RegularizedComponent:
    source_component: str
    covered: bool
    boundary_spheres: int
    glued_sinks: int
    l1: int
    l2: int
    component_orientable: bool
    cycle_periods: tuple[int, ...]

    def __post_init__(self):
        spheres = self.l1 + 2 * self.l2 if self.covered else self.l2
        if self.boundary_spheres != spheres:
            raise ValueError(f"boundary_spheres={self.boundary_spheres}, expected {spheres}")
        if self.glued_sinks != self.boundary_spheres:
            raise ValueError("every boundary sphere carries exactly one glued sink")
        if sum(self.cycle_periods) != self.glued_sinks:
            raise ValueError(f"cycle periods {self.cycle_periods} do not sum to {self.glued_sinks}")

    @property
    def side(self) -> Side:
        return Side.MINUS if self.covered else Side.PLUS


def _cycles(sphere_periods: Sequence[int]) -> tuple[int, ...]:
    # spheres of period m form cycles of exactly m spheres
    out: list[int] = []
    for m, n in sorted(Counter(sphere_periods).items()):
        if n % m:
            raise ValueError(f"{n} spheres of period {m} do not split into whole cycles")
        out.extend([m] * (n // m))
    return tuple(out)


def regularize_component(c: ComponentSpec, bunch_periods: Sequence[int]) -> RegularizedComponent:
    """Regularized descriptor for one component.

    ``bunch_periods`` lists the period of each attached bunch basin, the
    ``l1`` degree-1 basins first and then the ``l2`` degree-2 basins.  On the
    minus side a degree-1 basin lifts to one sphere and a degree-2 basin to
    two, each keeping the basin's period.
    """
    periods = list(bunch_periods)
    if len(periods) != c.l1 + c.l2:
        raise ValueError(f"component {c.id!r}: got {len(periods)} periods for {c.l1 + c.l2} bunch basins")
    if any(isinstance(p, bool) or not isinstance(p, int) or p < 1 for p in periods):
        raise ValueError(f"component {c.id!r}: periods must be positive integers")

    covered = c.side is Side.MINUS
    if covered:
        spheres = periods[: c.l1] + [p for p in periods[c.l1:] for _ in range(2)]
    else:
        spheres = periods
    n = len(spheres)
    return RegularizedComponent(
        source_component=c.id,
        covered=covered,
        boundary_spheres=n,
        glued_sinks=n,
        l1=c.l1,
        l2=c.l2,
        component_orientable=c.orientable,
        cycle_periods=_cycles(spheres),
    )


def regularize(spec: SystemSpec) -> list[RegularizedComponent]:
    require_valid(spec)
    return [
        regularize_component(c, [b.period for b in spec.bunches_of(c.id)])
        for c in spec.components
    ]


def orbit_space_orientation(period: int, reverses: bool = False) -> OrbitSpace:
    """Orbit space of a basin cycle: twisted exactly when the return map reverses orientation."""
    if isinstance(period, bool) or not isinstance(period, int) or period < 1:
        raise ValueError("period must be a positive integer")
    return OrbitSpace.TWISTED_BUNDLE if reverses else OrbitSpace.PRODUCT_BUNDLE
