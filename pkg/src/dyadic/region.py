"""Exact subsets of spaces assembled from rational boxes.

A :class:`SpaceDef` is a disjoint union of closed rational boxes with
finitely many points glued together, finitely many points deleted, and
finitely many *abstract* points whose only structure is a prescribed
bottomed stream.  A :class:`Region` is a finite union of boxes of such a
space, stored per component in the canonical piecewise form of
:mod:`dyadic._piecewise`, so emptiness and equality are syntactic.

Closure is taken in the quotient-subspace topology: closure in the ambient
boxes, intersected with the carrier, then saturated over glue classes.
Abstract points are never touched by closure.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from . import _piecewise as pw
from .errors import NotInSpace, UnsaturatedRegion, WrongSpace
from .tword import Seq, as_seq


def frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass a Fraction or 'p/q' text")
    return Fraction(x)


def format_frac(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class Interval(NamedTuple):
    lo: Fraction
    hi: Fraction
    lo_closed: bool = True
    hi_closed: bool = True

    def __str__(self):
        if self.lo == self.hi:
            return "{" + format_frac(self.lo) + "}"
        return ("[" if self.lo_closed else "(") + format_frac(self.lo) + "," + \
            format_frac(self.hi) + ("]" if self.hi_closed else ")")


_IV = re.compile(r"^\s*([\[(])\s*([^,\s]+)\s*,\s*([^\])\s]+)\s*([\])])\s*$")
_PT = re.compile(r"^\s*\{\s*([^}\s]+)\s*\}\s*$")


def interval(text: str) -> Interval:
    """Parse ``"[0,1/2)"``, ``"(1/4,3/4)"`` or ``"{1/2}"``."""
    m = _PT.match(text)
    if m:
        x = frac(m.group(1))
        return Interval(x, x, True, True)
    m = _IV.match(text)
    if not m:
        raise ValueError(f"bad interval syntax: {text!r}")
    lo, hi = frac(m.group(2)), frac(m.group(3))
    if lo > hi:
        raise ValueError(f"empty interval {text!r}")
    return Interval(lo, hi, m.group(1) == "[", m.group(4) == "]")


class Point(NamedTuple):
    """A concrete point: component index plus rational coordinates."""

    component: int
    coords: tuple

    def __str__(self):
        c = ",".join(format_frac(x) for x in self.coords)
        body = c if len(self.coords) == 1 else f"({c})"
        return body if self.component == 0 else f"c{self.component}:{body}"


class AbstractPoint(NamedTuple):
    id: str

    def __str__(self):
        return "@" + self.id


def pt(*coords, component: int = 0) -> Point:
    return Point(component, tuple(frac(c) for c in coords))


@dataclass(frozen=True)
class Component:
    dim: int
    box: tuple  # tuple of (lo, hi) Fractions, one per axis

    def contains(self, coords) -> bool:
        return len(coords) == self.dim and all(lo <= c <= hi for c, (lo, hi) in zip(coords, self.box))


class SpaceDef:
    """A carrier assembled from boxes, gluings, deletions and abstract points.

    Identity semantics: two SpaceDefs are the same space only if they are
    the same object.  ``carrier`` (a Region of the parent when the space is
    a subspace) restricts the underlying set further.
    """

    def __init__(self, components: Sequence[Component], gluings: Iterable[Iterable[Point]] = (),
                 deletions: Iterable[Point] = (), abstract_points: dict | None = None,
                 name: str = "space", parent: "SpaceDef | None" = None, carrier_parts=None,
                 carrier_abstract=None):
        self.name = name
        self.components = tuple(components)
        self.gluings = tuple(tuple(_as_point(p) for p in cls) for cls in gluings)
        self.deletions = tuple(_as_point(p) for p in deletions)
        self.abstract_points = {k: as_seq(v) for k, v in (abstract_points or {}).items()}
        self.parent = parent
        for p in [q for cls in self.gluings for q in cls] + list(self.deletions):
            self._check_coords(p)
        deleted = set(self.deletions)
        for cls in self.gluings:
            if any(p in deleted for p in cls) and not all(p in deleted for p in cls):
                raise ValueError("a glue class is partially deleted")
        if carrier_parts is None:
            parts = []
            for i, comp in enumerate(self.components):
                part = pw.box([(lo, hi, True, True) for lo, hi in comp.box])
                for p in self.deletions:
                    if p.component == i:
                        part = pw.difference(part, pw.point(p.coords), comp.dim)
                parts.append(part)
            carrier_parts = tuple(parts)
        self._carrier_parts = tuple(carrier_parts)
        if carrier_abstract is None:
            carrier_abstract = frozenset(self.abstract_points)
        self._carrier_abstract = frozenset(carrier_abstract)
        self._glue_index = {}
        for k, cls in enumerate(self.gluings):
            for p in cls:
                self._glue_index[p] = k

    def __repr__(self):
        return f"SpaceDef({self.name!r})"

    def _check_coords(self, p: Point):
        if not 0 <= p.component < len(self.components):
            raise ValueError(f"no component {p.component}")
        if not self.components[p.component].contains(p.coords):
            raise ValueError(f"point {p} lies outside its component")

    def dims(self):
        return [c.dim for c in self.components]

    def whole(self) -> "Region":
        return Region(self, self._carrier_parts, self._carrier_abstract)

    def empty(self) -> "Region":
        return Region(self, tuple(pw.empty(d) for d in self.dims()), frozenset())

    def region(self, *boxes, component: int = 0, points: Iterable = (), remove: Iterable = (),
               abstract: Iterable[str] = (), saturate: bool = False) -> "Region":
        """Union of boxes given as interval text or Interval tuples.

        Each positional argument is one box: an interval (1-D) or a tuple of
        intervals.  ``points`` adds and ``remove`` deletes single points.
        The result must not split a glue class unless ``saturate`` is set.
        """
        comp = self.components[component]
        part = pw.empty(comp.dim)
        for b in boxes:
            ivs = _as_box(b, comp.dim)
            part = pw.union(part, pw.box(ivs), comp.dim)
        parts = list(pw.empty(d) for d in self.dims())
        parts[component] = part
        r = Region(self, tuple(parts), frozenset(abstract))
        extra = [_as_point(p, component) for p in points]
        if extra:
            r = r.union(self.points_region(extra))
        gone = [_as_point(p, component) for p in remove]
        if gone:
            r = r.difference(self.points_region(gone))
        r = r.intersect(self.whole())
        return r.saturated() if saturate else r.check_saturated()

    def from_parts(self, parts, abstract=frozenset()) -> "Region":
        r = Region(self, tuple(parts), frozenset(abstract))
        return r.intersect(self.whole()).check_saturated()

    def points_region(self, points: Iterable[Point]) -> "Region":
        parts = list(pw.empty(d) for d in self.dims())
        for p in points:
            self._check_coords(p)
            d = self.components[p.component].dim
            parts[p.component] = pw.union(parts[p.component], pw.point(p.coords), d)
        return Region(self, tuple(parts), frozenset())

    def glue_class(self, p: Point) -> tuple:
        k = self._glue_index.get(p)
        return (p,) if k is None else self.gluings[k]

    def contains_point(self, x) -> bool:
        if isinstance(x, AbstractPoint):
            return x.id in self._carrier_abstract
        x = _as_point(x)
        if not 0 <= x.component < len(self.components):
            return False
        comp = self.components[x.component]
        if not comp.contains(x.coords):
            return False
        return pw.contains(self._carrier_parts[x.component], x.coords)

    def subspace(self, region: "Region", name: str | None = None) -> "SpaceDef":
        """The subspace carried by ``region`` (topology inherited)."""
        if region.space is not self:
            raise WrongSpace("region belongs to another space")
        return SpaceDef(self.components, self.gluings, self.deletions,
                        {k: v for k, v in self.abstract_points.items() if k in region.abstract},
                        name=name or f"{self.name}|sub", parent=self,
                        carrier_parts=region.parts, carrier_abstract=region.abstract)

    def critical_points(self) -> list:
        """Glue representatives and abstract points (deleted points excluded)."""
        out = [p for cls in self.gluings for p in cls if self.contains_point(p)]
        out += [AbstractPoint(k) for k in sorted(self._carrier_abstract)]
        return out


def _as_point(p, component: int = 0) -> Point:
    if isinstance(p, Point):
        return p
    if isinstance(p, (tuple, list)):
        return Point(component, tuple(frac(c) for c in p))
    return Point(component, (frac(p),))


def _as_box(b, dim: int):
    if isinstance(b, (str, Interval)):
        b = (b,)
    ivs = []
    for iv in b:
        if isinstance(iv, str):
            iv = interval(iv)
        elif not isinstance(iv, Interval):
            iv = Interval(*iv)
        ivs.append((frac(iv.lo), frac(iv.hi), iv.lo_closed, iv.hi_closed))
    if len(ivs) != dim:
        raise ValueError(f"box has {len(ivs)} intervals, component has dimension {dim}")
    return ivs


@dataclass(frozen=True, eq=False)
class Region:
    """Immutable exact subset of a :class:`SpaceDef`."""

    space: SpaceDef
    parts: tuple
    abstract: frozenset = field(default_factory=frozenset)

    def __eq__(self, other):
        if not isinstance(other, Region):
            return NotImplemented
        return self.space is other.space and self.parts == other.parts and self.abstract == other.abstract

    def __hash__(self):
        return hash((id(self.space), self.parts, self.abstract))

    def _same(self, other: "Region"):
        if not isinstance(other, Region) or other.space is not self.space:
            raise WrongSpace(f"regions of different spaces ({self.space.name!r})")

    def _zip(self, other, fn):
        self._same(other)
        dims = self.space.dims()
        return tuple(fn(a, b, d) for a, b, d in zip(self.parts, other.parts, dims))

    def intersect(self, other: "Region") -> "Region":
        return Region(self.space, self._zip(other, pw.intersect), self.abstract & other.abstract)

    def union(self, other: "Region") -> "Region":
        return Region(self.space, self._zip(other, pw.union), self.abstract | other.abstract)

    def difference(self, other: "Region") -> "Region":
        return Region(self.space, self._zip(other, pw.difference), self.abstract - other.abstract)

    __and__ = intersect
    __or__ = union
    __sub__ = difference

    def complement(self) -> "Region":
        return self.space.whole().difference(self)

    def closure(self) -> "Region":
        dims = self.space.dims()
        parts = tuple(pw.closure(a, d) for a, d in zip(self.parts, dims))
        r = Region(self.space, parts, self.abstract)
        return r.intersect(Region(self.space, self.space._carrier_parts, self.abstract)).saturated()

    def interior(self) -> "Region":
        return self.complement().closure().complement()

    def exterior(self) -> "Region":
        return self.closure().complement()

    def boundary(self) -> "Region":
        return self.closure().intersect(self.complement().closure())

    def is_empty(self) -> bool:
        return not self.abstract and all(a == pw.empty(d) for a, d in zip(self.parts, self.space.dims()))

    def __bool__(self):
        return not self.is_empty()

    def is_regular_open(self) -> bool:
        return self.closure().interior() == self

    def is_subset(self, other: "Region") -> bool:
        return self.difference(other).is_empty()

    def member(self, x) -> bool:
        """Exact membership of a Point or AbstractPoint."""
        if isinstance(x, AbstractPoint):
            if x.id not in self.space.abstract_points:
                raise WrongSpace(f"unknown abstract point {x.id!r}")
            if not self.space.contains_point(x):
                raise NotInSpace(f"{x} is not in {self.space.name}")
            return x.id in self.abstract
        x = _as_point(x)
        if not self.space.contains_point(x):
            raise NotInSpace(f"{x} is not in {self.space.name}")
        return pw.contains(self.parts[x.component], x.coords)

    __contains__ = member

    def saturated(self) -> "Region":
        """Add every glue class that has a representative inside."""
        parts = list(self.parts)
        dims = self.space.dims()
        for cls in self.space.gluings:
            if any(pw.contains(parts[p.component], p.coords) for p in cls):
                for p in cls:
                    if self.space.contains_point(p):
                        parts[p.component] = pw.union(parts[p.component], pw.point(p.coords),
                                                      dims[p.component])
        return Region(self.space, tuple(parts), self.abstract)

    def check_saturated(self) -> "Region":
        for cls in self.space.gluings:
            inside = {pw.contains(self.parts[p.component], p.coords) for p in cls
                      if self.space.contains_point(p)}
            if len(inside) > 1:
                raise UnsaturatedRegion(f"region splits glue class {[str(p) for p in cls]}")
        return self

    def hull_diameter(self) -> Fraction:
        """Largest sup-metric diameter of a per-component bounding box (0 if empty)."""
        best = Fraction(0)
        for a, d in zip(self.parts, self.space.dims()):
            h = pw.hull(a, d)
            if h:
                best = max(best, max(hi - lo for lo, hi in h))
        return best

    def as_point(self):
        """The single point (or glue class) this region consists of, else None."""
        pts = []
        for i, (a, d) in enumerate(zip(self.parts, self.space.dims())):
            for b in pw.boxes(a, d):
                if not all(lo == hi for lo, hi, _, _ in b):
                    return None
                pts.append(Point(i, tuple(lo for lo, _, _, _ in b)))
        if self.abstract:
            if pts or len(self.abstract) > 1:
                return None
            return AbstractPoint(next(iter(self.abstract)))
        if not pts:
            return None
        if len(pts) == 1:
            return pts[0]
        cls = set(self.space.glue_class(pts[0]))
        return pts[0] if set(pts) <= cls else None

    def boxes(self) -> list[tuple[int, tuple[Interval, ...]]]:
        out = []
        for i, (a, d) in enumerate(zip(self.parts, self.space.dims())):
            for b in pw.boxes(a, d):
                out.append((i, tuple(Interval(*iv) for iv in b)))
        return out

    def __str__(self):
        return format_region(self)

    __repr__ = __str__


def format_region(r: Region) -> str:
    multi = len(r.space.components) > 1
    pieces = []
    for i, b in r.boxes():
        body = "×".join(str(iv) for iv in b)
        pieces.append(f"c{i}:{body}" if multi else body)
    pieces += ["@" + a for a in sorted(r.abstract)]
    return " ∪ ".join(pieces) if pieces else "∅"


def unit_interval(name: str = "I", **kw) -> SpaceDef:
    return SpaceDef([Component(1, ((Fraction(0), Fraction(1)),))], name=name, **kw)


def unit_square(name: str = "Z", **kw) -> SpaceDef:
    u = (Fraction(0), Fraction(1))
    return SpaceDef([Component(2, (u, u))], name=name, **kw)
