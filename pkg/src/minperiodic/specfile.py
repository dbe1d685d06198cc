"""JSON spec and counts files."""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Mapping

from .ilp.constraints import VARIABLES, PointCounts
from .model import AttractorSpec, Bunch, Side, SystemSpec, assemble


class SpecParseError(ValueError):
    pass


def _get(obj: Mapping, key: str, kind: type | tuple, where: str) -> Any:
    if not isinstance(obj, Mapping):
        raise SpecParseError(f"{where}: expected an object")
    if key not in obj:
        raise SpecParseError(f"{where}: missing key {key!r}")
    value = obj[key]
    # bool is an int subclass; keep the two apart
    if kind is int and isinstance(value, bool) or not isinstance(value, kind):
        name = kind.__name__ if isinstance(kind, type) else "/".join(k.__name__ for k in kind)
        raise SpecParseError(f"{where}.{key}: expected {name}, got {type(value).__name__}")
    return value


def _read_json(path: str | Path) -> Any:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise SpecParseError(f"cannot read {path}: {exc.strerror or exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecParseError(f"{path}: not valid JSON ({exc.msg} at line {exc.lineno})") from exc


def spec_from_dict(data: Any) -> SystemSpec:
    if not isinstance(data, Mapping):
        raise SpecParseError("spec: top level must be an object")
    manifold_orientable = _get(data, "manifold_orientable", bool, "spec")
    attractors = []
    bunches = []
    for i, a in enumerate(_get(data, "attractors", list, "spec")):
        where = f"attractors[{i}]"
        aid = _get(a, "id", str, where)
        owned = []
        for j, b in enumerate(_get(a, "bunches", list, where)):
            bw = f"{where}.bunches[{j}]"
            period = b.get("period", 1) if isinstance(b, Mapping) else 1
            if isinstance(period, bool) or not isinstance(period, int):
                raise SpecParseError(f"{bw}.period: expected int")
            bunch = Bunch(
                id=_get(b, "id", str, bw),
                degree=_get(b, "degree", int, bw),
                attractor=aid,
                component=_get(b, "component", str, bw),
                period=period,
            )
            bunches.append(bunch)
            owned.append(bunch.id)
        attractors.append(AttractorSpec(aid, _get(a, "orientable", bool, where), tuple(owned)))
    components = []
    for i, c in enumerate(_get(data, "components", list, "spec")):
        where = f"components[{i}]"
        try:
            side = Side.parse(_get(c, "side", str, where))
        except ValueError as exc:
            raise SpecParseError(f"{where}.side: {exc}") from None
        components.append((_get(c, "id", str, where), side, _get(c, "orientable", bool, where)))
    return assemble(manifold_orientable, attractors, components, bunches)


def spec_to_dict(spec: SystemSpec) -> dict:
    by_id = {b.id: b for b in spec.bunches}
    return {
        "manifold_orientable": spec.manifold_orientable,
        "attractors": [
            {
                "id": a.id,
                "orientable": a.orientable,
                "bunches": [
                    {"id": bid, "degree": by_id[bid].degree, "component": by_id[bid].component,
                     "period": by_id[bid].period}
                    for bid in a.bunch_ids
                ],
            }
            for a in spec.attractors
        ],
        "components": [
            {"id": c.id, "side": c.side.value, "orientable": c.orientable} for c in spec.components
        ],
    }


def load_spec(path: str | Path) -> SystemSpec:
    return spec_from_dict(_read_json(path))


def counts_from_dict(data: Any) -> dict[str, PointCounts]:
    """``{"components": {id: {"C0": .., "C1": .., "C2": .., "C3": ..}}}``; a
    four-element list is accepted in place of the inner object."""
    comps = _get(data, "components", dict, "counts")
    out = {}
    for cid, value in comps.items():
        if isinstance(value, Mapping):
            vals = [_get(value, v, int, f"counts.components.{cid}") for v in VARIABLES]
        elif isinstance(value, list) and len(value) == 4 and all(
            isinstance(v, int) and not isinstance(v, bool) for v in value
        ):
            vals = value
        else:
            raise SpecParseError(f"counts.components.{cid}: expected an object with C0..C3 or a list of 4 ints")
        out[cid] = PointCounts(*vals)
    return out


def load_counts(path: str | Path) -> dict[str, PointCounts]:
    return counts_from_dict(_read_json(path))
