"""Domain types for systems with codimension-1 expanding attractors.

A system is described only combinatorially: which attractors exist, which
bunches each of them owns, and which connected component of the complement
of the attractor set each bunch basin faces.  Nothing geometric is stored.

All counting downstream is done for an iterate of ``f`` in which every
isolated periodic point and every boundary periodic point is fixed; bunch
periods are kept only for orbit bookkeeping.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence


class Side(str, Enum):
    PLUS = "plus"
    MINUS = "minus"

    @classmethod
    def parse(cls, value: str) -> "Side":
        try:
            return cls(str(value).lower())
        except ValueError:
            raise ValueError(f"unknown side {value!r}; expected 'plus' or 'minus'") from None


@dataclass(frozen=True)
class Bunch:
    id: str
    degree: int
    attractor: str
    component: str
    period: int = 1


@dataclass(frozen=True)
class AttractorSpec:
    id: str
    orientable: bool
    bunch_ids: tuple[str, ...]


@dataclass(frozen=True)
class ComponentSpec:
    """One connected component of ``M \\ Λ`` with its attached bunch counts."""

    id: str
    side: Side
    orientable: bool
    l1: int = 0
    l2: int = 0


@dataclass(frozen=True)
class SystemSpec:
    manifold_orientable: bool
    attractors: tuple[AttractorSpec, ...]
    components: tuple[ComponentSpec, ...]
    bunches: tuple[Bunch, ...]

    def component(self, cid: str) -> ComponentSpec:
        for c in self.components:
            if c.id == cid:
                return c
        raise KeyError(cid)

    def bunches_of(self, cid: str) -> list[Bunch]:
        """Bunches facing component ``cid``; degree-1 first, then input order."""
        attached = [b for b in self.bunches if b.component == cid]
        return sorted(attached, key=lambda b: b.degree)


@dataclass(frozen=True)
class Violation:
    code: str
    message: str
    ids: tuple[str, ...] = field(default=())

    def __str__(self) -> str:
        where = f" [{', '.join(self.ids)}]" if self.ids else ""
        return f"{self.code}: {self.message}{where}"


class InvalidSpecError(ValueError):
    def __init__(self, violations: Sequence[Violation]):
        self.violations = list(violations)
        lines = "\n".join(f"  - {v}" for v in self.violations)
        super().__init__(f"invalid system spec:\n{lines}")


def assemble(
    manifold_orientable: bool,
    attractors: Iterable[AttractorSpec],
    components: Iterable[tuple[str, Side, bool]],
    bunches: Iterable[Bunch],
) -> SystemSpec:
    """Build a SystemSpec, deriving each component's l1/l2 from the bunches."""
    bunches = tuple(bunches)
    per = Counter((b.component, b.degree) for b in bunches)
    comps = tuple(
        ComponentSpec(cid, Side(side), bool(orient), per[(cid, 1)], per[(cid, 2)])
        for cid, side, orient in components
    )
    return SystemSpec(bool(manifold_orientable), tuple(attractors), comps, bunches)


def _ids_ok(kind: str, ids: Sequence[str], out: list[Violation]) -> None:
    for i in ids:
        if not isinstance(i, str) or not i:
            out.append(Violation("bad-id", f"{kind} identifier must be a nonempty string", (repr(i),)))
    for i, n in Counter(ids).items():
        if n > 1:
            out.append(Violation("duplicate-id", f"{kind} identifier used {n} times", (str(i),)))


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def validate(spec: SystemSpec) -> list[Violation]:
    """Return every violated structural rule; an empty list means the spec is valid."""
    out: list[Violation] = []
    _ids_ok("attractor", [a.id for a in spec.attractors], out)
    _ids_ok("component", [c.id for c in spec.components], out)
    _ids_ok("bunch", [b.id for b in spec.bunches], out)

    attractor_ids = {a.id for a in spec.attractors}
    component_ids = {c.id for c in spec.components}
    bunch_by_id = {b.id: b for b in spec.bunches}

    for b in spec.bunches:
        if not _is_int(b.degree) or b.degree not in (1, 2):
            out.append(Violation("bad-degree", f"bunch degree must be 1 or 2, got {b.degree!r}", (b.id,)))
        if not _is_int(b.period) or b.period < 1:
            out.append(Violation("bad-period", f"bunch period must be a positive integer, got {b.period!r}", (b.id,)))
        if b.attractor not in attractor_ids:
            out.append(Violation("dangling-attractor", f"bunch refers to unknown attractor {b.attractor!r}", (b.id,)))
        if b.component not in component_ids:
            out.append(Violation("dangling-component", f"bunch refers to unknown component {b.component!r}", (b.id,)))

    owners: Counter[str] = Counter()
    for a in spec.attractors:
        if not a.bunch_ids:
            out.append(Violation("no-bunches", "attractor owns no bunches", (a.id,)))
        for bid in a.bunch_ids:
            owners[bid] += 1
            b = bunch_by_id.get(bid)
            if b is None:
                out.append(Violation("dangling-bunch", f"attractor lists unknown bunch {bid!r}", (a.id,)))
            elif b.attractor != a.id:
                out.append(Violation("owner-mismatch", f"bunch names attractor {b.attractor!r}", (a.id, bid)))
        has_one_bunch = any(bunch_by_id[bid].degree == 1 for bid in a.bunch_ids if bid in bunch_by_id)
        if a.orientable and has_one_bunch:
            out.append(Violation("orientability", "orientability contradicts 1-bunch", (a.id,)))
        if not a.orientable and a.bunch_ids and not has_one_bunch:
            out.append(Violation("orientability", "non-orientable attractor must own a 1-bunch", (a.id,)))
    for b in spec.bunches:
        if owners[b.id] != 1:
            out.append(Violation("ownership", f"bunch listed by {owners[b.id]} attractors, expected 1", (b.id,)))

    attached = Counter((b.component, b.degree) for b in spec.bunches)
    for c in spec.components:
        if not isinstance(c.side, Side):
            out.append(Violation("bad-side", f"unknown side {c.side!r}", (c.id,)))
            continue
        if (c.l1, c.l2) != (attached[(c.id, 1)], attached[(c.id, 2)]):
            out.append(Violation(
                "count-mismatch",
                f"l1={c.l1}, l2={c.l2} but attached bunches give "
                f"l1={attached[(c.id, 1)]}, l2={attached[(c.id, 2)]}",
                (c.id,),
            ))
        if c.l1 + c.l2 < 1:
            out.append(Violation("isolated-component", "component touches no bunch basin", (c.id,)))
        if c.side is Side.MINUS:
            if c.l1 <= 0:
                out.append(Violation("side", "minus component needs degree-1 bunches", (c.id,)))
            elif c.l1 % 2:
                out.append(Violation("parity", "l1 must be even", (c.id,)))
            if c.orientable:
                out.append(Violation("orientability", "minus component must be non-orientable", (c.id,)))
        elif c.l1 > 0:
            out.append(Violation("side", "degree-1 bunches may only face a minus component", (c.id,)))

        # basins of one orbit share degree and period and stay in one invariant component
        orbit = Counter((b.degree, b.period) for b in spec.bunches if b.component == c.id and _is_int(b.period))
        for (deg, per), n in sorted(orbit.items()):
            if per >= 1 and n % per:
                out.append(Violation(
                    "orbit", f"{n} degree-{deg} bunches of period {per} cannot form whole orbits", (c.id,)
                ))

    k1 = sum(1 for b in spec.bunches if b.degree == 1)
    k2 = sum(1 for b in spec.bunches if b.degree == 2)
    if k1 + k2 == 0:
        out.append(Violation("empty", "system has no bunches (k1 + k2 = 0)"))

    if spec.manifold_orientable:
        for c in spec.components:
            if c.side is Side.PLUS and not c.orientable:
                out.append(Violation("orientability", "non-orientable plus component in orientable manifold", (c.id,)))
            if c.side is Side.MINUS:
                out.append(Violation("orientability", "minus component in orientable manifold", (c.id,)))
    elif spec.attractors and all(a.orientable for a in spec.attractors):
        if not any(not c.orientable for c in spec.components):
            out.append(Violation(
                "orientability",
                "non-orientable manifold with orientable attractors needs a non-orientable component",
            ))
    return out


def require_valid(spec: SystemSpec) -> None:
    violations = validate(spec)
    if violations:
        raise InvalidSpecError(violations)


def totals(spec: SystemSpec) -> tuple[int, int, int]:
    """(k1, k2, s): bunches of degree 1, of degree 2, and complement components."""
    require_valid(spec)
    k1 = sum(1 for b in spec.bunches if b.degree == 1)
    k2 = sum(1 for b in spec.bunches if b.degree == 2)
    return k1, k2, len(spec.components)
