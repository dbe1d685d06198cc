"""Deterministic, JSON-ready reports."""
from __future__ import annotations

import json
from typing import Mapping

from .ilp import (
    Breakdown,
    ComponentSolution,
    GlobalMinimum,
    PointCounts,
    audit,
    build_constraints,
    global_minimum,
)
from .ilp.components import Solver
from .model import Side, SystemSpec, totals
from .realize import PhaseGraph, regular_counts, validate_phase_graph
from .regularize import RegularizedComponent, orbit_space_orientation, regularize

ITERATE_NOTE = (
    "counts refer to an iterate of f under which every isolated periodic point "
    "and every boundary periodic point is fixed"
)
THEOREM1_TAG = "Theorem 1 bound: (3/2)k1+k2"
THEOREM2_TAG = "Theorem 2 bound: k+2"


def dumps(report: Mapping) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"


def _totals(spec: SystemSpec) -> dict:
    k1, k2, s = totals(spec)
    return {"k1": k1, "k2": k2, "s": s}


def regularized_dict(rc: RegularizedComponent) -> dict:
    return {
        "component": rc.source_component,
        "covered": rc.covered,
        "l1": rc.l1,
        "l2": rc.l2,
        "component_orientable": rc.component_orientable,
        "boundary_spheres": rc.boundary_spheres,
        "glued_sinks": rc.glued_sinks,
        "cycle_periods": list(rc.cycle_periods),
        "orbit_spaces": [orbit_space_orientation(m).value for m in rc.cycle_periods],
    }


def _breakdown_dict(b: Breakdown) -> dict:
    return {
        "sources": b.sources,
        "index1_saddles": b.index1_saddles,
        "index2_saddles": b.index2_saddles,
        "sinks": b.sinks,
    }


def _solution_dict(sol: ComponentSolution, rc: RegularizedComponent) -> dict:
    return {
        "component": sol.component,
        "case": sol.case.value,
        "constraints": build_constraints(rc).describe(),
        "counts": sol.counts.as_dict(),
        "regular_total": sol.regular_total,
        "isolated_for_f": sol.isolated_for_f,
        "breakdown": _breakdown_dict(sol.breakdown),
    }


def nonorientable_case(spec: SystemSpec) -> bool:
    return not spec.manifold_orientable and all(a.orientable for a in spec.attractors)


def _bounds(spec: SystemSpec, total: int) -> list[dict]:
    k1, k2, _ = totals(spec)
    t1 = 3 * k1 // 2 + k2
    bounds = [{"tag": THEOREM1_TAG, "formula": "(3/2)*k1 + k2", "value": t1, "attained": total == t1}]
    if nonorientable_case(spec):
        t2 = k1 + k2 + 2
        bounds.append({"tag": THEOREM2_TAG, "formula": "k + 2", "value": t2, "attained": total == t2})
    return bounds


def _annotations(spec: SystemSpec, total: int) -> list[str]:
    k1, k2, _ = totals(spec)
    notes = []
    if total == k1 + k2:
        notes += [
            "isolated points equal the number of bunches: all attractors and the manifold are orientable",
            "every isolated saddle has a one-dimensional unstable manifold",
            "each complement component is a punctured 3-sphere (stated, not computed)",
        ]
    if any(c.side is Side.PLUS and not c.orientable for c in spec.components):
        notes.append("non-orientable plus components force saddles of both indices")
    return notes


def min_report(spec: SystemSpec, solver: Solver | None = None, solver_name: str = "simplex") -> dict:
    gm = global_minimum(spec, solver)
    return _min_body("min", spec, gm, solver_name)


def _min_body(command: str, spec: SystemSpec, gm: GlobalMinimum, solver_name: str) -> dict:
    return {
        "command": command,
        "solver": solver_name,
        "note": ITERATE_NOTE,
        "totals": _totals(spec),
        "regularization": [regularized_dict(rc) for rc in gm.regularized],
        "components": [_solution_dict(s, rc) for s, rc in zip(gm.per_component, gm.regularized)],
        "total": gm.total,
        "breakdown": _breakdown_dict(gm.breakdown),
        "bounds": _bounds(spec, gm.total),
        "annotations": _annotations(spec, gm.total),
    }


def regularize_report(spec: SystemSpec) -> dict:
    rcs = regularize(spec)
    return {
        "command": "regularize",
        "note": ITERATE_NOTE,
        "totals": _totals(spec),
        "regularization": [regularized_dict(rc) for rc in rcs],
        "glued_sinks": sum(rc.glued_sinks for rc in rcs),
    }


def counts_dict(counts: Mapping[str, PointCounts]) -> dict:
    return {"components": {cid: c.as_dict() for cid, c in counts.items()}}


def audit_report(spec: SystemSpec, counts: Mapping[str, PointCounts]) -> tuple[dict, bool]:
    rows = []
    ok = True
    for rc in regularize(spec):
        cand = counts[rc.source_component]
        bad = audit(rc, cand)
        ok = ok and not bad
        rows.append({"component": rc.source_component, "counts": cand.as_dict(), "violations": bad})
    return {"command": "audit", "totals": _totals(spec), "components": rows, "ok": ok}, ok


def realize_report(
    spec: SystemSpec, witness: PhaseGraph, solver: Solver | None = None, solver_name: str = "simplex"
) -> tuple[dict, bool]:
    gm = global_minimum(spec, solver)
    body = _min_body("realize", spec, gm, solver_name)
    violations = [str(v) for v in validate_phase_graph(spec, witness)]
    matches = witness.isolated_total == gm.total
    body["witness"] = {
        "isolated_total": witness.isolated_total,
        "isolated_by_index": {str(i): n for i, n in witness.isolated_by_index().items()},
        "matches_minimum": matches,
        "violations": violations,
        "counts": counts_dict(regular_counts(spec, witness)),
        "graph": witness.to_dict(),
    }
    return body, matches and not violations
