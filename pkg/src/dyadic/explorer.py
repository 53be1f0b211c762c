"""Compact-element posets of a dyadic subbase and their structural checks.

Membership in K_S, ^K_S and the closure domain is decided exactly:

* ``e in K_S``   iff the extended region ``S_ex(e)`` (bottoms included as
  boundary factors) is nonempty;
* ``e in ^K_S``  iff the closed extended region is nonempty;
* ``e in E_S``   iff ``S(e)`` is nonempty.

Everything built on top (truncated posets, successor sets, cusl checks...)
works on words of length at most a stated depth and says so in its output.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from itertools import combinations

from .errors import BudgetExceeded, IncompatibleOperands, IncompatibleSet
from .subbase import (MembershipOracle, degree_sup, region_S, region_Sbar, region_Sbarex,
                      region_Sex)
from .tword import (BOT, Seq, TStream, all_words, as_seq, compatible, digits, format_seq,
                    is_total, join, join_all, key, leq, restrict)

KS, WHKS, ES = "ks", "whks", "es"
KINDS = (KS, WHKS, ES)
DEFAULT_BUDGET = 3 ** 12
BUDGET_ENV = "DYADIC_BUDGET"


def budget_limit(override: int | None = None) -> int:
    if override is not None:
        return override
    env = os.environ.get(BUDGET_ENV)
    return int(env) if env else DEFAULT_BUDGET


def _guard(depth: int, budget: int | None):
    limit = budget_limit(budget)
    if 3 ** depth > limit:
        raise BudgetExceeded(f"depth {depth} needs about {3 ** depth} words, budget is {limit}")


def in_KS(S, e) -> bool:
    e = as_seq(e)
    if isinstance(S, MembershipOracle):
        return S.in_ks(e)
    return not region_Sex(S, e, len(e)).is_empty()


def in_WhKS(S, e) -> bool:
    e = as_seq(e)
    if isinstance(S, MembershipOracle):
        return S.in_whks(e)
    return not region_Sbarex(S, e, len(e)).is_empty()


def in_ES(S, e) -> bool:
    e = as_seq(e)
    if isinstance(S, MembershipOracle):
        return S.in_es(e)
    return not region_S(S, e).is_empty()


_MEMBER = {KS: in_KS, WHKS: in_WhKS, ES: in_ES}


def _kind(kind: str) -> str:
    k = kind.lower().replace("_", "").replace("ŵ", "wh")
    k = {"k": KS, "ks": KS, "whks": WHKS, "whk": WHKS, "es": ES, "e": ES}.get(k)
    if k is None:
        raise ValueError(f"unknown poset kind {kind!r}")
    return k


def member(S, e, kind: str = KS) -> bool:
    return _MEMBER[_kind(kind)](S, e)


def _below(f: str):
    """Every canonical word strictly below ``f``, most digits first."""
    pos = [i for i, c in enumerate(f) if c != BOT]
    n = len(pos)
    out = []
    for mask in range((1 << n) - 1):
        keep = set(pos[i] for i in range(n) if mask >> i & 1)
        w = "".join(c if i in keep else BOT for i, c in enumerate(f)).rstrip(BOT)
        out.append((len(keep), w))
    out.sort(key=lambda t: (-t[0], key(t[1])))
    return [w for _, w in out]


@dataclass
class TruncatedPoset:
    subbase: object
    depth: int
    kind: str
    members: list
    hasse: list
    levels: dict
    notes: list = field(default_factory=list)

    def __contains__(self, e) -> bool:
        return as_seq(e) in self._set

    def __post_init__(self):
        self._set = set(self.members)
        self._covers: dict[str, list] = {}
        for lo, hi in self.hasse:
            self._covers.setdefault(hi, []).append(lo)

    def lower_covers(self, f: str) -> list:
        return self._covers.get(f, [])

    def upper_covers(self, e: str, horizon: int | None = None) -> list:
        h = self.depth if horizon is None else horizon
        return sorted((f for lo, f in self.hasse if lo == e and len(f) <= h), key=key)

    def to_dict(self):
        return {
            "subbase": getattr(self.subbase, "name", str(self.subbase)),
            "depth": self.depth,
            "kind": self.kind,
            "members": list(self.members),
            "hasse": [list(e) for e in self.hasse],
            "levels": dict(self.levels),
            "notes": list(self.notes),
        }


def build(S, depth: int, kind: str = KS, budget: int | None = None) -> TruncatedPoset:
    """All members of length at most ``depth`` with their Hasse diagram and levels.

    Membership is prefix closed, so candidates of length ``L`` are members
    of smaller length padded with bottoms and extended by one digit.
    """
    if depth < 0:
        raise ValueError("depth must be non-negative")
    kind = _kind(kind)
    _guard(depth, budget)
    test = _MEMBER[kind]
    members = [""]
    for L in range(1, depth + 1):
        layer = []
        for m in members:
            pad = m + BOT * (L - 1 - len(m))
            for a in "01":
                w = pad + a
                if test(S, w):
                    layer.append(w)
        members.extend(sorted(layer, key=key))
    mset = set(members)
    hasse = []
    levels = {"": 0}
    for f in members[1:]:
        covers: list[str] = []
        for g in _below(f):
            if g in mset and not any(leq(g, c) for c in covers):
                covers.append(g)
        covers.sort(key=key)
        hasse.extend((g, f) for g in covers)
        levels[f] = 1 + max(levels[g] for g in covers)
    notes = [f"truncated at length {depth}"]
    return TruncatedPoset(S, depth, kind, members, hasse, levels, notes)


@dataclass
class SuccResult:
    element: str
    depth: int
    successors: list
    stable: bool

    def to_dict(self):
        return {"element": self.element, "depth": self.depth, "successors": self.successors,
                "stable": self.stable}


def succ(S, e, depth: int, kind: str = KS, poset: TruncatedPoset | None = None) -> SuccResult:
    """Immediate successors of ``e`` among members of length at most ``depth``.

    ``stable`` records whether the set is the same one seen at ``depth - 1``.
    """
    e = as_seq(e)
    P = poset if poset is not None and poset.depth >= depth else build(S, depth, kind)
    now = P.upper_covers(e, depth)
    before = P.upper_covers(e, depth - 1) if depth > 0 else []
    return SuccResult(e, depth, now, now == before)


FB_LOOKAHEAD = 4


@dataclass
class BranchingReport:
    depth: int
    lookahead: int
    sizes: dict
    unstable: list
    max_size: int

    @property
    def all_stable(self) -> bool:
        return not self.unstable

    def to_dict(self):
        return {"depth": self.depth, "lookahead": self.lookahead, "succ_sizes": self.sizes,
                "growing": self.unstable, "max_succ": self.max_size,
                "all_stable": self.all_stable,
                "note": "stability is evidence only; members within the lookahead of the "
                        "horizon are not judged"}


def finite_branching_report(S, depth: int, kind: str = KS, lookahead: int = FB_LOOKAHEAD,
                            budget: int | None = None) -> BranchingReport:
    """Successor-set sizes and growth between ``depth - 1`` and ``depth``.

    Only members of length at most ``depth - lookahead`` are judged, since a
    successor may sit several positions past its predecessor; the least
    element is always judged.
    """
    P = build(S, depth, kind, budget)
    sizes, unstable = {}, []
    for e in P.members:
        if e and len(e) > depth - lookahead:
            continue
        r = succ(S, e, depth, kind, poset=P)
        sizes[e] = len(r.successors)
        if not r.stable:
            unstable.append(e)
    return BranchingReport(depth, lookahead, sizes, unstable, max(sizes.values(), default=0))


@dataclass
class CuslResult:
    ok: bool
    depth: int
    kind: str
    witness: tuple | None = None

    def to_dict(self):
        return {"ok": self.ok, "depth": self.depth, "kind": self.kind,
                "witness": None if self.witness is None else list(self.witness)}


def cusl_check(S, depth: int, kind: str = KS, budget: int | None = None) -> CuslResult:
    """Every compatible pair of members has its join among the members.

    On failure the witness is ``(d, e, bound)`` for the pair whose join is
    least, with ``bound`` the least member above the join.
    """
    kind = _kind(kind)
    P = build(S, depth, kind, budget)
    ms = P.members
    best = None
    for d, e in combinations(ms, 2):
        if leq(d, e) or leq(e, d) or not compatible(d, e):
            continue
        f = join(d, e)
        if f in P:
            continue
        hi, lo = (d, e) if key(d) > key(e) else (e, d)
        cand = (key(f), key(hi), key(lo), hi, lo, f)
        if best is None or cand < best:
            best = cand
    if best is None:
        return CuslResult(True, depth, kind)
    hi, lo, f = best[3:]
    ups = [m for m in ms if leq(f, m)]
    bound = min(ups, key=key) if ups else None
    return CuslResult(False, depth, kind, (hi, lo, bound))


def minimal_upper_bounds(S, A, kind: str = KS) -> list:
    """Minimal members above every word of ``A``, searched below the join's length."""
    A = [as_seq(a) for a in A]
    try:
        d = join_all(A)
    except IncompatibleOperands as exc:
        raise IncompatibleSet(str(exc)) from None
    test = _MEMBER[_kind(kind)]
    if test(S, d):
        return [d]
    free = [i for i, c in enumerate(d) if c == BOT]
    cands = []
    for mask in range(3 ** len(free)):
        w = list(d)
        m = mask
        for i in free:
            w[i] = "_01"[m % 3]
            m //= 3
        cands.append("".join(w).rstrip(BOT))
    ups = [w for w in set(cands) if test(S, w)]
    mins = [w for w in ups if not any(v != w and leq(v, w) for v in ups)]
    return sorted(mins, key=key)


@dataclass
class StreamVerdict:
    stream: str
    inside: bool
    verified_to: int
    failing_prefix: str | None = None

    def to_dict(self):
        return {"stream": self.stream, "verdict": "in" if self.inside else "out",
                "verified_to": self.verified_to, "failing_prefix": self.failing_prefix}


def stream_in_D(S, p: Seq, depth: int, kind: str = KS) -> StreamVerdict:
    """Check every prefix ``p|n`` (n <= depth); "out" is definitive, "in" holds to depth."""
    p = as_seq(p)
    test = _MEMBER[_kind(kind)]
    for n in range(1, depth + 1):
        w = restrict(p, n)
        if not test(S, w):
            return StreamVerdict(format_seq(p), False, n - 1, w)
    return StreamVerdict(format_seq(p), True, depth)


def is_limit(p: Seq) -> bool:
    return isinstance(as_seq(p), TStream)


@dataclass
class MinLimitResult:
    minimal_so_far: bool
    witness: object = None
    depth: int = 0

    def to_dict(self):
        return {"minimal_so_far": self.minimal_so_far,
                "witness": None if self.witness is None else format_seq(self.witness),
                "depth": self.depth}


def _weakenings(p: TStream, depth: int):
    head = digits(p, depth)
    pos = [i for i, c in enumerate(head) if c != BOT]
    if depth <= len(p.prefix):
        rest, per = p.prefix[depth:], p.period
    else:
        shift = (depth - len(p.prefix)) % len(p.period)
        rest, per = "", p.period[shift:] + p.period[:shift]
    for mask in range(1, 1 << len(pos)):
        drop = {pos[i] for i in range(len(pos)) if mask >> i & 1}
        if max(drop) < len(p.prefix):
            # keep the spelling of p when only its prefix is touched
            pre = "".join(BOT if i in drop else c for i, c in enumerate(p.prefix))
            yield TStream(pre, p.period)
        else:
            w = "".join(BOT if i in drop else c for i, c in enumerate(head))
            yield TStream(w + rest, per)


def min_limit_check(S, p: Seq, depth: int, kind: str = KS, budget: int | None = None,
                    verify: int | None = None) -> MinLimitResult:
    """Look for a limit strictly below ``p`` by blanking digits before ``depth``.

    Each weakening is checked on its prefixes up to ``verify`` (default
    ``2 * depth``) so the untouched tail takes part in the test.  Only "not
    minimal" is definitive; the tail is never weakened.
    """
    verify = 2 * depth if verify is None else verify
    p = as_seq(p)
    if not isinstance(p, TStream):
        raise ValueError("min_limit_check needs a limit stream")
    digits_below = sum(1 for c in digits(p, depth) if c != BOT)
    if 2 ** digits_below > budget_limit(budget):
        raise BudgetExceeded(f"{2 ** digits_below} weakenings exceed the budget")
    passing = [q for q in _weakenings(p, depth)
               if is_limit(q) and stream_in_D(S, q, verify, kind).inside]
    if not passing:
        return MinLimitResult(True, None, depth)
    return MinLimitResult(False, min(passing, key=lambda q: key(q, depth)), depth)


@dataclass
class AboveReport:
    point: str
    depth: int
    checked: int
    violations: list

    @property
    def ok(self):
        return not self.violations

    def to_dict(self):
        return {"point": self.point, "depth": self.depth, "checked": self.checked,
                "violations": self.violations, "ok": self.ok,
                "note": f"to-depth surrogate, depth {self.depth}"}


def compatible_implies_above(S, x, catalog, depth: int) -> AboveReport:
    """Every catalog stream compatible with the code of ``x`` should lie above it."""
    xt = S.encode(x, depth)
    bad, n = [], 0
    for p in catalog:
        p = as_seq(p)
        w = restrict(p, depth)
        if compatible(w, xt):
            n += 1
            if not leq(xt, w):
                bad.append(format_seq(p))
    return AboveReport(str(x), depth, n, bad)


def project_whd(S, p: Seq, depth: int) -> str:
    """Join of the ^K_S members below ``p|depth``."""
    w = restrict(as_seq(p), depth)
    below = [w] + _below(w) if w else [""]
    return join_all(v for v in below if in_WhKS(S, v))


@dataclass
class HeightReport:
    depth: int
    deg_sup: int | None
    chain_d: list
    chain_whd: list

    @property
    def limit_chain_max_d(self):
        return max(len(self.chain_d) - 1, 0)

    @property
    def limit_chain_max_whd(self):
        return max(len(self.chain_whd) - 1, 0)

    def to_dict(self):
        return {"depth": self.depth, "deg_sup": self.deg_sup,
                "D": {"limit_chain_max": self.limit_chain_max_d,
                      "chain": [format_seq(p) for p in self.chain_d]},
                "WhD": {"limit_chain_max": self.limit_chain_max_whd,
                        "chain": [format_seq(p) for p in self.chain_whd]},
                "note": f"catalog streams verified to depth {self.depth}"}


def _longest_chain(streams: list) -> list:
    order = sorted(streams, key=lambda q: sum(1 for c in digits(q, 64) if c != BOT))
    best: dict = {}
    for q in order:
        prev = [best[r] for r in best if r != q and leq(r, q)]
        best[q] = max(prev, key=len, default=[]) + [q]
    return max(best.values(), key=len, default=[])


def height_report(S, depth: int, catalog, horizon: int | None = None) -> HeightReport:
    """Longest strict chains of catalog limits lying in D_S and in ^D_S."""
    lims = [as_seq(p) for p in catalog if is_limit(p)]
    in_d = [p for p in lims if stream_in_D(S, p, depth, KS).inside]
    in_w = [p for p in lims if stream_in_D(S, p, depth, WHKS).inside]
    deg = None
    if not isinstance(S, MembershipOracle):
        deg = degree_sup(S, horizon if horizon is not None else depth).value
    return HeightReport(depth, deg, _longest_chain(in_d), _longest_chain(in_w))


@dataclass
class AdhesiveResult:
    depth: int
    witness: tuple | None

    def to_dict(self):
        return {"depth": self.depth,
                "nonadhesive_witness": None if self.witness is None else list(self.witness),
                "note": "a witness proves nonadhesive; none found is only evidence"}


def adhesive_probe(S, depth: int, budget: int | None = None) -> AdhesiveResult:
    """First pair (by word order) of nonempty basic opens with disjoint closures."""
    _guard(depth, budget)
    words = [w for w in all_words(depth) if in_ES(S, w)]
    if isinstance(S, MembershipOracle):
        for d, e in combinations(words, 2):
            if not S.closures_meet(d, e):
                return AdhesiveResult(depth, (d, e))
        return AdhesiveResult(depth, None)
    closures = {}
    for d in words:
        closures[d] = region_S(S, d).closure()
    for i, d in enumerate(words):
        for e in words[i + 1:]:
            if closures[d].intersect(closures[e]).is_empty():
                return AdhesiveResult(depth, (d, e))
    return AdhesiveResult(depth, None)


def to_dot(P: TruncatedPoset) -> str:
    """Hasse diagram with one rank per level."""
    def label(w):
        return w if w else "⊥"

    lines = [f'digraph "{getattr(P.subbase, "name", "poset")}_{P.kind}" {{', "  rankdir=BT;",
             '  node [shape=plaintext, fontname="monospace"];']
    by_level: dict[int, list] = {}
    for w in P.members:
        by_level.setdefault(P.levels[w], []).append(w)
    for lvl in sorted(by_level):
        nodes = " ".join(f'"{label(w)}";' for w in by_level[lvl])
        lines.append(f"  {{ rank=same; {nodes} }}")
    for lo, hi in P.hasse:
        lines.append(f'  "{label(lo)}" -> "{label(hi)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
