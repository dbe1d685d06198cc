"""Witness phase graphs that attain the minimum point counts.

A phase graph is a combinatorial stand-in for a Morse-Smale diffeomorphism:
fixed points with their unstable dimension, a total order compatible with
the Smale relation, and the pairs ``(p, q)`` with ``W^s_p`` meeting ``W^u_q``.
Sinks created by capping boundary spheres are tagged ``GLUED_SINK``; every
other point is an isolated periodic point of ``f``.  On a covered (minus)
component the graph lists the points of ``f`` itself; each stands for two
points of the double cover.

Three templates are provided, one per component shape built explicitly:
the flower for an orientable plus component, the ``RP^2 x [-1, 1]`` cylinder
for a minus component with two 1-bunches, and the twisted ``S^2 x S^1``
piece for a non-orientable plus component with one 2-bunch.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Mapping, Sequence

from .ilp.constraints import PointCounts, audit
from .model import AttractorSpec, Bunch, Side, SystemSpec, Violation, assemble
from .regularize import regularize


class Role(str, Enum):
    GLUED_SINK = "glued-sink"
    ISOLATED = "isolated"


@dataclass(frozen=True)
class FixedPoint:
    id: str
    index: int
    role: Role
    component: str

    def __post_init__(self):
        if self.index not in (0, 1, 2, 3):
            raise ValueError(f"point {self.id!r}: index must be 0..3, got {self.index!r}")
        if self.role is Role.GLUED_SINK and self.index != 0:
            raise ValueError(f"point {self.id!r}: a glued sink has index 0")


@dataclass(frozen=True)
class PhaseGraph:
    points: tuple[FixedPoint, ...]
    order: tuple[str, ...]
    connections: tuple[tuple[str, str], ...]
    bunch_assignment: Mapping[str, tuple[str, ...]] = field(default_factory=dict)

    def point(self, pid: str) -> FixedPoint:
        for p in self.points:
            if p.id == pid:
                return p
        raise KeyError(pid)

    @property
    def isolated_total(self) -> int:
        return sum(1 for p in self.points if p.role is Role.ISOLATED)

    def isolated_by_index(self) -> dict[int, int]:
        c = Counter(p.index for p in self.points if p.role is Role.ISOLATED)
        return {i: c[i] for i in range(4)}

    def to_dict(self) -> dict:
        return {
            "points": [
                {"id": p.id, "index": p.index, "role": p.role.value, "component": p.component}
                for p in self.points
            ],
            "order": list(self.order),
            "connections": [list(c) for c in self.connections],
            "bunch_assignment": {b: list(s) for b, s in self.bunch_assignment.items()},
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "PhaseGraph":
        return cls(
            points=tuple(
                FixedPoint(str(p["id"]), int(p["index"]), Role(p["role"]), str(p["component"]))
                for p in data["points"]
            ),
            order=tuple(data["order"]),
            connections=tuple((str(p), str(q)) for p, q in data["connections"]),
            bunch_assignment={str(b): tuple(s) for b, s in data.get("bunch_assignment", {}).items()},
        )


class UnsupportedShapeError(ValueError):
    pass


def _graph(points: Sequence[FixedPoint], connections, assignment) -> PhaseGraph:
    # within a component the listing order is already Smale-compatible; sort by index block
    ordered = sorted(enumerate(points), key=lambda t: (t[1].index, t[0]))
    return PhaseGraph(tuple(points), tuple(p.id for _, p in ordered), tuple(connections), dict(assignment))


def merge(graphs: Iterable[PhaseGraph]) -> PhaseGraph:
    """Disjoint union; the order keeps index blocks, then graph order, then local order."""
    graphs = list(graphs)
    points: list[FixedPoint] = []
    connections: list[tuple[str, str]] = []
    assignment: dict[str, tuple[str, ...]] = {}
    keyed = []
    for gi, g in enumerate(graphs):
        points.extend(g.points)
        connections.extend(g.connections)
        for bid, sinks in g.bunch_assignment.items():
            if bid in assignment:
                raise ValueError(f"bunch {bid!r} assigned in two graphs")
            assignment[bid] = sinks
        index = {p.id: p.index for p in g.points}
        keyed.extend(((index[pid], gi, k), pid) for k, pid in enumerate(g.order))
    order = tuple(pid for _, pid in sorted(keyed))
    return PhaseGraph(tuple(points), order, tuple(connections), assignment)


def _bunch_ids(component: str, given: Sequence[str] | None, n: int) -> list[str]:
    ids = list(given) if given is not None else [f"{component}/b{i + 1}" for i in range(n)]
    if len(ids) != n:
        raise ValueError(f"expected {n} bunch ids, got {len(ids)}")
    return ids


def realize_plus(l2: int, component: str = "plus", bunch_ids: Sequence[str] | None = None) -> PhaseGraph:
    """Flower: ``l2`` glued sinks chained by ``l2 - 1`` index-1 saddles, one source."""
    if l2 < 1:
        raise ValueError("a plus component needs at least one 2-bunch")
    bids = _bunch_ids(component, bunch_ids, l2)
    sinks = [FixedPoint(f"{component}/sink{i + 1}", 0, Role.GLUED_SINK, component) for i in range(l2)]
    saddles = [FixedPoint(f"{component}/saddle{i + 1}", 1, Role.ISOLATED, component) for i in range(l2 - 1)]
    source = FixedPoint(f"{component}/source", 3, Role.ISOLATED, component)
    conns = []
    for i, s in enumerate(saddles):
        conns += [(sinks[i].id, s.id), (sinks[i + 1].id, s.id)]
    conns += [(s.id, source.id) for s in saddles]
    conns += [(w.id, source.id) for w in sinks]
    return _graph(sinks + saddles + [source], conns, {b: (w.id,) for b, w in zip(bids, sinks)})


def realize_minus_pair(component: str = "minus", bunch_ids: Sequence[str] | None = None) -> PhaseGraph:
    """Product of the minimal system on ``RP^2`` with ``x -> 2x`` on the interval factor.

    The sink, saddle and source on ``RP^2`` become points of index 1, 2, 3;
    the two ends of the cylinder are the two 1-bunch boundaries.
    """
    bids = _bunch_ids(component, bunch_ids, 2)
    ends = [FixedPoint(f"{component}/end{i + 1}", 0, Role.GLUED_SINK, component) for i in range(2)]
    s1 = FixedPoint(f"{component}/saddle1", 1, Role.ISOLATED, component)
    s2 = FixedPoint(f"{component}/saddle2", 2, Role.ISOLATED, component)
    src = FixedPoint(f"{component}/source", 3, Role.ISOLATED, component)
    conns = [
        (ends[0].id, s1.id), (ends[1].id, s1.id),
        (ends[0].id, s2.id), (ends[1].id, s2.id), (s1.id, s2.id),
        (ends[0].id, src.id), (ends[1].id, src.id), (s1.id, src.id), (s2.id, src.id),
    ]
    return _graph(ends + [s1, s2, src], conns, {b: (e.id,) for b, e in zip(bids, ends)})


def _sink_source(component: str, bunch_id: str) -> PhaseGraph:
    return realize_plus(1, component, [bunch_id])


def _twisted(component: str, bunch_id: str) -> PhaseGraph:
    sink = FixedPoint(f"{component}/sink", 0, Role.GLUED_SINK, component)
    s1 = FixedPoint(f"{component}/saddle1", 1, Role.ISOLATED, component)
    s2 = FixedPoint(f"{component}/saddle2", 2, Role.ISOLATED, component)
    src = FixedPoint(f"{component}/source", 3, Role.ISOLATED, component)
    conns = [(sink.id, s1.id), (sink.id, s2.id), (s1.id, s2.id), (sink.id, src.id), (s2.id, src.id)]
    return _graph([sink, s1, s2, src], conns, {bunch_id: (sink.id,)})


def realize_nonorientable(k2: int, bunch_ids: Sequence[str] | None = None) -> PhaseGraph:
    """``k2 - 1`` sink-source spheres plus one twisted ``S^2 x S^1`` piece.

    Components are named ``sphere-1`` ... ``sphere-(k2-1)`` and ``twisted``;
    ``f`` keeps ``k2`` sources and one saddle of each index.
    """
    if k2 < 1:
        raise ValueError("need at least one 2-bunch")
    bids = list(bunch_ids) if bunch_ids is not None else [f"b{i + 1}" for i in range(k2)]
    if len(bids) != k2:
        raise ValueError(f"expected {k2} bunch ids, got {len(bids)}")
    parts = [_sink_source(f"sphere-{i + 1}", bids[i]) for i in range(k2 - 1)]
    parts.append(_twisted("twisted", bids[-1]))
    return merge(parts)


def realize(spec: SystemSpec) -> PhaseGraph:
    """Assemble a witness for ``spec`` from the per-component templates."""
    parts = []
    for c in spec.components:
        bids = [b.id for b in spec.bunches_of(c.id)]
        if c.side is Side.PLUS and c.orientable:
            parts.append(realize_plus(c.l2, c.id, bids))
        elif c.side is Side.MINUS and (c.l1, c.l2) == (2, 0):
            parts.append(realize_minus_pair(c.id, bids))
        elif c.side is Side.PLUS and c.l2 == 1:
            parts.append(_twisted(c.id, bids[0]))
        else:
            raise UnsupportedShapeError(
                f"component {c.id!r} ({c.side.value}, orientable={c.orientable}, "
                f"l1={c.l1}, l2={c.l2}) matches no realization template"
            )
    return merge(parts)


def regular_counts(spec: SystemSpec, g: PhaseGraph) -> dict[str, PointCounts]:
    """Counts of the regular system per component; covered components count points twice."""
    out = {}
    for c in spec.components:
        mult = 2 if c.side is Side.MINUS else 1
        glued = sum(1 for p in g.points if p.component == c.id and p.role is Role.GLUED_SINK)
        iso = Counter(p.index for p in g.points if p.component == c.id and p.role is Role.ISOLATED)
        out[c.id] = PointCounts(glued + mult * iso[0], mult * iso[1], mult * iso[2], mult * iso[3])
    return out


def _skeleton_connected(spec: SystemSpec, cid: str, g: PhaseGraph) -> bool:
    low = [p.id for p in g.points if p.component == cid and p.index <= 1]
    if not low:
        return True
    parent = {pid: pid for pid in low}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        parent[find(a)] = find(b)

    for p, q in g.connections:
        if p in parent and q in parent:
            union(p, q)
    # the two lifts of a 2-bunch sink on a covered component are one point downstairs
    if spec.component(cid).side is Side.MINUS:
        for b in spec.bunches_of(cid):
            sinks = [s for s in g.bunch_assignment.get(b.id, ()) if s in parent]
            for s in sinks[1:]:
                union(sinks[0], s)
    return len({find(x) for x in low}) == 1


def validate_phase_graph(spec: SystemSpec, g: PhaseGraph) -> list[Violation]:
    out: list[Violation] = []
    comp_ids = {c.id for c in spec.components}
    ids = [p.id for p in g.points]
    for pid, n in Counter(ids).items():
        if n > 1:
            out.append(Violation("duplicate-point", f"point id used {n} times", (pid,)))
    by_id = {p.id: p for p in g.points}
    for p in g.points:
        if p.component not in comp_ids:
            out.append(Violation("unknown-component", f"point lies in unknown component {p.component!r}", (p.id,)))

    # order
    if sorted(g.order) != sorted(ids):
        out.append(Violation("order", "order is not a permutation of the points"))
    pos = {pid: i for i, pid in enumerate(g.order)}
    indices = [by_id[pid].index for pid in g.order if pid in by_id]
    if any(a > b for a, b in zip(indices, indices[1:])):
        out.append(Violation("order", "order is not compatible with index blocks"))
    for p, q in g.connections:
        if p not in by_id or q not in by_id:
            out.append(Violation("connection", "connection refers to an unknown point", (p, q)))
            continue
        if by_id[p].component != by_id[q].component:
            out.append(Violation("connection", "connection crosses components", (p, q)))
        if p in pos and q in pos and pos[p] >= pos[q]:
            out.append(Violation("connection", "connection runs against the order", (p, q)))

    # bunch assignment
    used: Counter[str] = Counter()
    for b in spec.bunches:
        sinks = g.bunch_assignment.get(b.id)
        side = spec.component(b.component).side if b.component in comp_ids else None
        need = 2 if side is Side.MINUS and b.degree == 2 else 1
        if sinks is None:
            out.append(Violation("assignment", "bunch has no glued sink", (b.id,)))
            continue
        if len(sinks) != need:
            out.append(Violation("assignment", f"bunch needs {need} glued sink(s), got {len(sinks)}", (b.id,)))
        for s in sinks:
            used[s] += 1
            p = by_id.get(s)
            if p is None or p.role is not Role.GLUED_SINK or p.component != b.component:
                out.append(Violation("assignment", f"{s!r} is not a glued sink of component {b.component!r}", (b.id,)))
    known = {b.id for b in spec.bunches}
    for bid in g.bunch_assignment:
        if bid not in known:
            out.append(Violation("assignment", "assignment names an unknown bunch", (bid,)))
    for s, n in used.items():
        if n > 1:
            out.append(Violation("assignment", f"glued sink shared by {n} bunches", (s,)))
    for p in g.points:
        if p.role is Role.GLUED_SINK and used[p.id] == 0:
            out.append(Violation("assignment", "glued sink caps no bunch basin", (p.id,)))

    # counts per component
    counts = regular_counts(spec, g)
    for rc in regularize(spec):
        cid = rc.source_component
        cnt = counts[cid]
        if cnt.alternating_sum() != 0:
            out.append(Violation("lefschetz", f"C3 - C2 + C1 - C0 = {cnt.alternating_sum()} for {tuple(cnt)}", (cid,)))
        for name in audit(rc, cnt):
            if name != "lefschetz":
                out.append(Violation("infeasible", f"counts {tuple(cnt)} violate {name}", (cid, name)))
        if not _skeleton_connected(spec, cid, g):
            out.append(Violation("skeleton", "sinks and index-1 saddles do not form a connected graph", (cid,)))
    return out


# -- spec builders ----------------------------------------------------------

def minimal_spec(k1: int, k2: int) -> SystemSpec:
    """Shape used to attain ``(3/2) k1 + k2``: one attractor, a connected plus
    part facing every 2-bunch, and one ``RP^2 x [-1, 1]`` per pair of 1-bunches."""
    if k1 < 0 or k2 < 0 or k1 % 2 or k1 + k2 == 0:
        raise ValueError("need even k1 >= 0, k2 >= 0 and k1 + k2 > 0")
    bunches = [Bunch(f"one-{i + 1}", 1, "A", f"minus-{i // 2 + 1}") for i in range(k1)]
    bunches += [Bunch(f"two-{i + 1}", 2, "A", "plus") for i in range(k2)]
    comps = [("plus", Side.PLUS, True)] if k2 else []
    comps += [(f"minus-{j + 1}", Side.MINUS, False) for j in range(k1 // 2)]
    attractor = AttractorSpec("A", k1 == 0, tuple(b.id for b in bunches))
    return assemble(k1 == 0, [attractor], comps, bunches)


def nonorientable_spec(k2: int) -> SystemSpec:
    """Non-orientable manifold, one orientable attractor with ``k2`` 2-bunches,
    each facing its own plus component; only ``twisted`` is non-orientable."""
    if k2 < 1:
        raise ValueError("need k2 >= 1")
    comps = [f"sphere-{i + 1}" for i in range(k2 - 1)] + ["twisted"]
    bunches = [Bunch(f"b{i + 1}", 2, "A", cid) for i, cid in enumerate(comps)]
    attractor = AttractorSpec("A", True, tuple(b.id for b in bunches))
    return assemble(False, [attractor], [(cid, Side.PLUS, cid != "twisted") for cid in comps], bunches)

