"""JSON round trip for spaces, regions and (finite prefixes of) subbases.

Rationals are written as ``"p/q"`` strings and intervals in the text form
``"[0,1/2)"``, so documents stay exact and readable.
"""
from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources

from . import _piecewise as pw
from .errors import SchemaError, WordSyntaxError
from .region import Component, Point, Region, SpaceDef, _as_box, format_frac, frac
from .subbase import DyadicSubbase
from .tword import format_seq, parse

FORMAT = "dyadic-subbase/1"


def _point_json(p: Point) -> dict:
    return {"component": p.component, "coords": [format_frac(c) for c in p.coords]}


def _point(obj) -> Point:
    return Point(int(obj.get("component", 0)), tuple(frac(c) for c in obj["coords"]))


def space_to_json(space: SpaceDef) -> dict:
    return {
        "name": space.name,
        "components": [{"dim": c.dim, "box": [[format_frac(lo), format_frac(hi)] for lo, hi in c.box]}
                       for c in space.components],
        "gluings": [[_point_json(p) for p in cls] for cls in space.gluings],
        "deletions": [_point_json(p) for p in space.deletions],
        "abstract_points": [{"id": k, "stream": format_seq(v)}
                            for k, v in sorted(space.abstract_points.items())],
    }


def space_from_json(obj: dict) -> SpaceDef:
    try:
        comps = []
        for c in obj["components"]:
            box = tuple((frac(lo), frac(hi)) for lo, hi in c["box"])
            if len(box) != int(c["dim"]):
                raise SchemaError("component box does not match its dimension")
            comps.append(Component(int(c["dim"]), box))
        return SpaceDef(
            comps,
            gluings=[[_point(p) for p in cls] for cls in obj.get("gluings", [])],
            deletions=[_point(p) for p in obj.get("deletions", [])],
            abstract_points={a["id"]: parse(a["stream"]) for a in obj.get("abstract_points", [])},
            name=obj.get("name", "space"),
        )
    except SchemaError:
        raise
    except (KeyError, TypeError, ValueError, ZeroDivisionError, WordSyntaxError) as exc:
        raise SchemaError(f"bad space definition: {exc}") from None


def region_to_json(r: Region) -> dict:
    return {
        "boxes": [{"component": i, "intervals": [str(iv) for iv in ivs]} for i, ivs in r.boxes()],
        "abstract": sorted(r.abstract),
    }


def region_from_json(space: SpaceDef, obj: dict) -> Region:
    try:
        parts = [pw.empty(d) for d in space.dims()]
        for b in obj.get("boxes", []):
            i = int(b.get("component", 0))
            dim = space.components[i].dim
            parts[i] = pw.union(parts[i], pw.box(_as_box(tuple(b["intervals"]), dim)), dim)
        unknown = set(obj.get("abstract", [])) - set(space.abstract_points)
        if unknown:
            raise SchemaError(f"unknown abstract points {sorted(unknown)}")
        return space.from_parts(parts, frozenset(obj.get("abstract", [])))
    except SchemaError:
        raise
    except (KeyError, IndexError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise SchemaError(f"bad region: {exc}") from None


def subbase_to_json(S: DyadicSubbase, depth: int) -> dict:
    return {
        "format": FORMAT,
        "name": S.name,
        "space": space_to_json(S.space),
        "pairs": [[region_to_json(r) for r in S.pair(n)] for n in range(depth)],
    }


def subbase_from_json(obj: dict) -> DyadicSubbase:
    if not isinstance(obj, dict) or obj.get("format") != FORMAT:
        raise SchemaError(f"expected a document with format {FORMAT!r}")
    space = space_from_json(obj.get("space", {}))
    pairs = []
    for k, pair in enumerate(obj.get("pairs", [])):
        if len(pair) != 2:
            raise SchemaError(f"pair {k} must have exactly two regions")
        pairs.append(tuple(region_from_json(space, r) for r in pair))
    return DyadicSubbase(space, pairs, name=obj.get("name", space.name))


def load_subbase(path) -> DyadicSubbase:
    try:
        with open(path, encoding="utf-8") as fh:
            obj = json.load(fh)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: {exc}") from None
    return subbase_from_json(obj)


def schema(name: str) -> dict:
    """One of the shipped JSON schemas: ``subbase``, ``check_report``, ``poset``, ``decode``."""
    text = resources.files("dyadic.schemas").joinpath(f"{name}.schema.json").read_text("utf-8")
    return json.loads(text)


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False, sort_keys=False, default=_default) + "\n"


def _default(o):
    if isinstance(o, Fraction):
        return format_frac(o)
    raise TypeError(f"not serializable: {type(o).__name__}")
