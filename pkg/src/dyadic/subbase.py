"""Dyadic subbases as indexed pairs of regions.

A :class:`DyadicSubbase` maps each index ``n`` to a pair of regions
``(S[n,0], S[n,1])``.  Pairs come from a callable (for the infinite
catalog families) or a finite list (for subbases loaded from JSON).
Abstract points are classified by their prescribed streams, never by the
region data.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Sequence

from . import _piecewise as pw
from .errors import EmptyBase, IndexBeyondSubbase, WrongSpace
from .region import AbstractPoint, Point, Region, SpaceDef, _as_point
from .tword import BOT, Seq, all_words, as_seq, compatible, digit

# prefix-region kinds
KIND_S, KIND_SBAR, KIND_SEX, KIND_SBAREX = "S", "Sbar", "Sex", "Sbarex"


class MembershipOracle:
    """Base for subbases that are not region-backed.

    Subclasses answer the compact-poset membership questions directly and
    classify their own points.
    """

    name = "oracle"
    depth_limit = None

    def in_ks(self, e: str) -> bool:
        raise NotImplementedError

    def in_whks(self, e: str) -> bool:
        raise NotImplementedError

    def in_es(self, e: str) -> bool:
        raise NotImplementedError

    def closures_meet(self, d: str, e: str) -> bool:
        raise NotImplementedError

    def encode(self, x, depth: int) -> str:
        raise NotImplementedError


class DyadicSubbase:
    def __init__(self, space: SpaceDef, pairs: Callable[[int], tuple] | Sequence[tuple],
                 name: str | None = None):
        self.space = space
        self.name = name or space.name
        if callable(pairs):
            self._pair_fn = pairs
            self.depth_limit = None
        else:
            pairs = list(pairs)
            self._pair_fn = pairs.__getitem__
            self.depth_limit = len(pairs)
        self._pairs: dict[int, tuple[Region, Region]] = {}
        self._parts: dict[tuple[int, str], Region] = {}
        self._prefix: dict[tuple[str, str], Region] = {}

    def __repr__(self):
        return f"DyadicSubbase({self.name!r})"

    def pair(self, n: int) -> tuple[Region, Region]:
        """``(S[n,0], S[n,1])`` with abstract points classified by their streams."""
        if n in self._pairs:
            return self._pairs[n]
        if self.depth_limit is not None and n >= self.depth_limit:
            raise IndexBeyondSubbase(f"subbase {self.name!r} has only {self.depth_limit} pairs")
        r0, r1 = self._pair_fn(n)
        out = []
        for a, r in zip("01", (r0, r1)):
            if r.space is not self.space:
                raise WrongSpace(f"pair {n} is not a region of {self.space.name}")
            ab = frozenset(k for k in self.space.whole().abstract
                           if digit(self.space.abstract_points[k], n) == a)
            out.append(Region(self.space, r.parts, ab))
        self._pairs[n] = (out[0], out[1])
        return self._pairs[n]

    def part(self, n: int, c: str) -> Region:
        """``S[n,c]`` for ``c`` in ``"0"``, ``"1"``, ``"_"`` (the common boundary)."""
        k = (n, c)
        if k not in self._parts:
            r0, r1 = self.pair(n)
            if c == "0":
                r = r0
            elif c == "1":
                r = r1
            else:
                r = r0.union(r1).complement()
            self._parts[k] = r
        return self._parts[k]

    def closed_part(self, n: int, c: str) -> Region:
        """``cl S[n,c]``; abstract points join when their digit is ``c`` or bottom."""
        k = (n, "cl" + c)
        if k not in self._parts:
            if c == BOT:
                r = self.part(n, BOT)
            else:
                box = self.part(n, c).closure()
                ab = frozenset(i for i in self.space.whole().abstract
                               if digit(self.space.abstract_points[i], n) in (c, BOT))
                r = Region(self.space, box.parts, ab)
            self._parts[k] = r
        return self._parts[k]

    def _factor(self, kind: str, n: int, c: str) -> Region | None:
        if c == BOT:
            return None if kind in (KIND_S, KIND_SBAR) else self.part(n, BOT)
        return self.part(n, c) if kind in (KIND_S, KIND_SEX) else self.closed_part(n, c)

    def prefix_region(self, kind: str, w: str) -> Region:
        """Intersection of the per-position factors of ``w`` (``w`` may end in bottoms)."""
        k = (kind, w)
        hit = self._prefix.get(k)
        if hit is not None:
            return hit
        if not w:
            r = self.space.whole()
        else:
            r = self.prefix_region(kind, w[:-1])
            f = self._factor(kind, len(w) - 1, w[-1])
            if f is not None and not r.is_empty():
                r = r.intersect(f)
        self._prefix[k] = r
        return r

    def classify(self, x, n: int) -> str:
        if isinstance(x, AbstractPoint):
            if not self.space.contains_point(x):
                raise WrongSpace(f"{x} is not a point of {self.space.name}")
            return digit(self.space.abstract_points[x.id], n)
        r0, r1 = self.pair(n)
        if r0.member(x):
            return "0"
        if r1.member(x):
            return "1"
        return BOT

    def encode(self, x, depth: int) -> str:
        if not isinstance(x, AbstractPoint):
            x = _as_point(x)
        return "".join(self.classify(x, n) for n in range(depth)).rstrip(BOT)


def _word_text(e) -> str:
    e = as_seq(e)
    if not isinstance(e, str):
        raise TypeError("a finite word is required here")
    return e


def classify(S: DyadicSubbase, x, n: int) -> str:
    return S.classify(x, n)


def encode(S, x, depth: int) -> str:
    """``phi_S(x)|_depth``."""
    return S.encode(x, depth)


def region_S(S: DyadicSubbase, e) -> Region:
    return S.prefix_region(KIND_S, _word_text(e))


def region_Sbar(S: DyadicSubbase, e) -> Region:
    return S.prefix_region(KIND_SBAR, _word_text(e))


def region_Sex(S: DyadicSubbase, p: Seq, n: int) -> Region:
    return S.prefix_region(KIND_SEX, "".join(digit(as_seq(p), k) for k in range(n)))


def region_Sbarex(S: DyadicSubbase, p: Seq, n: int) -> Region:
    return S.prefix_region(KIND_SBAREX, "".join(digit(as_seq(p), k) for k in range(n)))



@dataclass
class Verdict:
    ok: bool
    witness: str | None = None
    detail: str = ""

    def to_dict(self):
        return {"ok": self.ok, "witness": self.witness, "detail": self.detail}


@dataclass
class ValidationReport:
    subbase: str
    depth: int
    pairing: Verdict
    proper: Verdict
    independent: Verdict
    separation: Verdict = field(default_factory=lambda: Verdict(True))
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.pairing.ok and self.proper.ok and self.separation.ok

    def to_dict(self):
        return {
            "subbase": self.subbase,
            "depth": self.depth,
            "pairing": self.pairing.to_dict(),
            "proper": self.proper.to_dict(),
            "independent": self.independent.to_dict(),
            "separation": self.separation.to_dict(),
            "notes": list(self.notes),
        }


def _box(r: Region) -> Region:
    return Region(r.space, r.parts)


def check_pair(S: DyadicSubbase, n: int) -> str | None:
    """Reason pair ``n`` violates the dyadic pairing condition, or None.

    Only the box parts are compared; abstract points follow their streams.
    """
    box0, box1 = (_box(r) for r in S.pair(n))
    for a, b in (("0", box0), ("1", box1)):
        if _box(b.closure().interior()) != b:
            return f"S[{n},{a}] is not regular open"
    if _box(box0.exterior()) != box1:
        return f"S[{n},1] is not the exterior of S[{n},0]"
    if _box(box1.exterior()) != box0:
        return f"S[{n},0] is not the exterior of S[{n},1]"
    return None


def validate(S: DyadicSubbase, depth: int) -> ValidationReport:
    """Pairing, properness and independence, each certified only up to ``depth``."""
    pairing = Verdict(True)
    for n in range(depth):
        why = check_pair(S, n)
        if why:
            pairing = Verdict(False, str(n), why)
            break
    words = all_words(depth)
    proper = Verdict(True)
    for e in words:
        s = region_S(S, e)
        if s.closure() != region_Sbar(S, e):
            proper = Verdict(False, e, f"cl S({e or '⊥'}) = {s.closure()} but S̄({e or '⊥'}) = "
                                       f"{region_Sbar(S, e)}")
            break
    independent = Verdict(True)
    for e in words:
        if region_S(S, e).is_empty():
            independent = Verdict(False, e, f"S({e}) is empty")
            break
    separation = check_separation(S, depth, proper=proper.ok)
    notes = [f"verified for all words of length <= {depth} only",
             f"separation sampled on grid points of the first {depth} pairs, "
             f"codes compared to depth {2 * depth + 2}"]
    if S.space.abstract_points:
        notes.append("pairing checked on box parts; abstract points classified by their streams")
    return ValidationReport(S.name, depth, pairing, proper, independent, separation, notes)


def check_separation(S: DyadicSubbase, depth: int, proper: bool = False) -> Verdict:
    """Distinct sample points must be told apart by their codes.

    Points come from the grid of the first ``depth`` pairs (one per glue
    class); codes are taken to ``2 * depth + 2`` so that a point next to an
    abstract limit point still splits from it.  With ``proper`` the codes
    must be incompatible, i.e. some pair puts the points on opposite sides;
    otherwise they need only differ.
    """
    horizon = 2 * depth + 2
    done, pts, codes = set(), [], []
    for p in critical_points(S, depth):
        if isinstance(p, Point):
            cls = frozenset(S.space.glue_class(p))
            if cls in done:
                continue
            done.add(cls)
        pts.append(p)
        codes.append(S.encode(p, horizon))
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            a, b = codes[i], codes[j]
            clash = compatible(a, b) if proper else a == b
            if clash:
                how = "compatible" if proper else "equal"
                return Verdict(False, a, f"{pts[i]} and {pts[j]} have {how} codes "
                                         f"{a or '⊥'}, {b or '⊥'} to depth {horizon}")
    return Verdict(True)


def relativize(S: DyadicSubbase, e) -> DyadicSubbase:
    """The subbase ``T[n,a] = S[nu(n),a] ∩ S(e)`` on the subspace ``S(e)``.

    ``nu`` enumerates the indices outside ``dom(e)`` in increasing order.
    """
    e = _word_text(e)
    if not e:
        return S
    base = region_S(S, e)
    if base.is_empty():
        raise EmptyBase(f"S({e}) is empty")
    sub = S.space.subspace(base, name=f"{S.name}|{e}")
    free = [k for k in range(len(e)) if e[k] == BOT]

    def nu(n: int) -> int:
        if n < len(free):
            return free[n]
        return len(e) + n - len(free)

    def pairs(n: int):
        r0, r1 = S.pair(nu(n))
        return (Region(sub, r0.intersect(base).parts), Region(sub, r1.intersect(base).parts))

    T = DyadicSubbase(sub, pairs, name=f"{S.name}|{e}")
    if S.depth_limit is not None:
        T.depth_limit = S.depth_limit - len(e) + len(free)
    return T


def degree(S, x, horizon: int) -> int:
    """Number of bottoms of ``phi_S(x)`` below ``horizon``."""
    return S.encode(x, horizon).count(BOT)


@dataclass
class DegreeReport:
    value: int
    witness: str | None
    horizon: int
    candidates: int

    def to_dict(self):
        return {"value": self.value, "witness": self.witness, "horizon": self.horizon,
                "candidates": self.candidates, "note": f"verified to horizon {self.horizon}"}


def critical_points(S: DyadicSubbase, horizon: int) -> list:
    """One point per cell of the grid refining every pair below ``horizon``.

    Boundary sets are unions of such cells, so the list meets every
    possible bottom pattern.
    """
    out = []
    space = S.space
    for i, comp in enumerate(space.components):
        acc = [set() for _ in range(comp.dim)]
        for ax, (lo, hi) in enumerate(comp.box):
            acc[ax].update((lo, hi))
        for n in range(horizon):
            for r in S.pair(n):
                pw.axis_breaks(r.parts[i], comp.dim, acc)
        for p in space.deletions + tuple(q for cls in space.gluings for q in cls):
            if p.component == i:
                for ax, c in enumerate(p.coords):
                    acc[ax].add(c)
        samples = [[x for x in pw.sample_points(a) if lo <= x <= hi]
                   for a, (lo, hi) in zip(acc, comp.box)]
        for coords in product(*samples):
            p = Point(i, tuple(coords))
            if space.contains_point(p):
                out.append(p)
    out += [AbstractPoint(k) for k in sorted(space.whole().abstract)]
    return out


def degree_sup(S: DyadicSubbase, horizon: int) -> DegreeReport:
    best, who = -1, None
    pts = critical_points(S, horizon)
    for p in pts:
        d = degree(S, p, horizon)
        if d > best:
            best, who = d, str(p)
    return DegreeReport(max(best, 0), who, horizon, len(pts))
