"""Built-in spaces and subbases.

Each entry bundles a space, its dyadic subbase (or, for ``a``, a
membership oracle) and a default list of candidate limit streams used by
height reports.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import _piecewise as pw
from .codec import gray_encode, tent_preimage
from .errors import OutOfRange
from .region import AbstractPoint, Component, Region, SpaceDef, pt, unit_interval, unit_square
from .subbase import DyadicSubbase, MembershipOracle
from .tword import BOT, Seq, fill, parse

ZERO, ONE, HALF = Fraction(0), Fraction(1), Fraction(1, 2)


@dataclass
class CatalogEntry:
    name: str
    title: str
    subbase: object
    limits: list = field(default_factory=list)
    notes: str = ""

    @property
    def space(self):
        return getattr(self.subbase, "space", None)

    @property
    def region_backed(self) -> bool:
        return isinstance(self.subbase, DyadicSubbase)


@lru_cache(maxsize=None)
def gray_level(n: int, a: str):
    """``G[n,a]`` as a 1-D piecewise set: ``t^{-n}`` of ``[0,1/2)`` or ``(1/2,1]``."""
    if n == 0:
        if a == "0":
            return pw.box([(ZERO, HALF, True, False)])
        return pw.box([(HALF, ONE, False, True)])
    return tent_preimage(gray_level(n - 1, a))


def _line(space: SpaceDef, part, component: int = 0) -> Region:
    parts = [pw.empty(d) for d in space.dims()]
    parts[component] = part
    return space.from_parts(parts)


def gray_subbase(space: SpaceDef | None = None, name: str = "gray") -> DyadicSubbase:
    space = space or unit_interval("I")
    return DyadicSubbase(space, lambda n: (_line(space, gray_level(n, "0")),
                                           _line(space, gray_level(n, "1"))), name=name)


def gray() -> CatalogEntry:
    limits = ["_1(0)*", "(0)*", "1(0)*", "0_1(0)*", "1_1(0)*", "01(0)*", "(01)*", "0(1)*"]
    return CatalogEntry("gray", "Gray subbase of the unit interval", gray_subbase(),
                        [parse(s) for s in limits])


def space_W() -> CatalogEntry:
    """Four unit intervals glued at 0; component ``2a+b`` is the copy indexed ``(a,b)``."""
    comps = [Component(1, ((ZERO, ONE),)) for _ in range(4)]
    z = [pt(0, component=i) for i in range(4)]
    space = SpaceDef(comps, gluings=[z], name="W")
    open_tail = pw.box([(ZERO, ONE, False, True)])
    none = pw.empty(1)

    def pairs(n):
        out = []
        for c in (0, 1):
            if n == 0:
                parts = [open_tail if i // 2 == c else none for i in range(4)]
            elif n == 1:
                parts = [open_tail if i % 2 == c else none for i in range(4)]
            else:
                parts = [gray_level(n - 2, str(c))] * 4
            out.append(space.from_parts(parts))
        return tuple(out)

    limits = ["__(0)*"] + [f"{a}_(0)*" for a in "01"] + [f"_{b}(0)*" for b in "01"] + \
        [f"{a}{b}(0)*" for a in "01" for b in "01"]
    return CatalogEntry("w", "four intervals glued at an endpoint", DyadicSubbase(space, pairs, "w"),
                        [parse(s) for s in limits])


def space_Y() -> CatalogEntry:
    """The unit interval with 1/4 and 3/4 identified."""
    q1, q3 = Fraction(1, 4), Fraction(3, 4)
    space = SpaceDef([Component(1, ((ZERO, ONE),))], gluings=[[pt(q1), pt(q3)]], name="Y")

    def pairs(n):
        g0, g1 = gray_level(n, "0"), gray_level(n, "1")
        if n == 0:
            g0 = pw.difference(g0, pw.point((q1,)), 1)
            g1 = pw.difference(g1, pw.point((q3,)), 1)
        return _line(space, g0), _line(space, g1)

    limits = ["__1(0)*", "_1(0)*", "_11(0)*", "_01(0)*"] + \
        [f"{a}{b}1(0)*" for a in "01" for b in "01"] + ["0_1(0)*", "1_1(0)*"]
    return CatalogEntry("y", "unit interval with 1/4 and 3/4 glued", DyadicSubbase(space, pairs, "y"),
                        [parse(s) for s in limits])


def _square_pairs(space: SpaceDef):
    unit = pw.box([(ZERO, ONE, True, True)])

    def pairs(n):
        k, axis = divmod(n, 2)
        out = []
        for a in "01":
            g = gray_level(k, a)
            part = pw.product(g, 1, unit) if axis == 0 else pw.product(unit, 1, g)
            out.append(space.from_parts([part]))
        return tuple(out)

    return pairs


def _square_limits():
    p = "11(0)*"
    items = ["__" + p] + [a + b + p for a in "01" for b in "01"] + \
        ["0_" + p, "1_" + p, "_0" + p, "_1" + p, "_011(01)*", "0011(01)*", "1011(01)*"]
    return [parse(s) for s in items]


def square_Z() -> CatalogEntry:
    space = unit_square("Z")
    return CatalogEntry("z", "unit square with the interleaved product subbase",
                        DyadicSubbase(space, _square_pairs(space), "z"), _square_limits())


def z0() -> CatalogEntry:
    space = unit_square("Z0", deletions=[pt(HALF, HALF)])
    return CatalogEntry("z0", "unit square minus its centre",
                        DyadicSubbase(space, _square_pairs(space), "z0"), _square_limits())


def z1() -> CatalogEntry:
    space = unit_square("Z1", deletions=[pt(HALF, Fraction(1, 3))])
    return CatalogEntry("z1", "unit square minus (1/2,1/3)",
                        DyadicSubbase(space, _square_pairs(space), "z1"), _square_limits())


Q_STREAM = "_011(01)*"


def z2() -> CatalogEntry:
    q = parse(Q_STREAM)
    abstract = {f"x{a}": fill(q, 0, a) for a in "01"}
    space = unit_square("Z2", deletions=[pt(HALF, Fraction(1, 3))], abstract_points=abstract)
    return CatalogEntry("z2", "z1 with two extra points x0, x1",
                        DyadicSubbase(space, _square_pairs(space), "z2"), _square_limits(),
                        notes="x0 and x1 carry the streams q[0:=0] and q[0:=1]")


def np_demo() -> CatalogEntry:
    """A dyadic subbase that is not proper: the first split is repeated."""
    space = unit_interval("I")

    def pairs(n):
        m = 0 if n < 2 else n - 2
        return _line(space, gray_level(m, "0")), _line(space, gray_level(m, "1"))

    return CatalogEntry("np_demo", "Gray subbase with its first pair duplicated",
                        DyadicSubbase(space, pairs, "np_demo"), [parse("_1(0)*")])


class SpaceAOracle(MembershipOracle):
    """Membership oracle for the adhesive space of dyadic irrationals plus positive integers.

    The integer ``n`` encodes as ``_^n 1 0^w`` and every dyadic irrational as its
    (total) Gray expansion.  Prefixes of total Gray expansions of dyadic
    irrationals are all of ``2^*``, so

    * K  = 2^* together with the words ``_^n 1 0^j`` (n >= 1, j >= 0);
    * ^K = every finite word, since any word lies below some ``e _^k 1 0^w``;
    * S(e) is never empty (the subbase is independent);
    * closures of nonempty open sets always meet (the space is adhesive).

    Membership follows this stream description, where the integer ``n``
    sits below ``_^n 1``, rather than any set formula over the ``G[n,a]``.
    """

    name = "a"

    def in_ks(self, e: str) -> bool:
        if BOT not in e:
            return True
        n = len(e) - len(e.lstrip(BOT))
        rest = e[n:]
        return n >= 1 and rest[:1] == "1" and BOT not in rest and "1" not in rest[1:]

    def in_whks(self, e: str) -> bool:
        return True

    def in_es(self, e: str) -> bool:
        return True

    def closures_meet(self, d: str, e: str) -> bool:
        return True

    def encode(self, x, depth: int) -> str:
        if isinstance(x, AbstractPoint):
            x = int(x.id)
        if isinstance(x, int) and not isinstance(x, bool):
            if x < 1:
                raise OutOfRange("integer points start at 1")
            return (BOT * x + "1" + "0" * depth)[:depth].rstrip(BOT)
        x = Fraction(x)
        if not 0 < x < 1 or (x.denominator & (x.denominator - 1)) == 0:
            raise OutOfRange(f"{x} is not a dyadic irrational of the unit interval")
        return gray_encode(x, depth)

    def sample_points(self, levels: int, integers: int) -> list:
        """Dyadic irrationals ``(3k+1)/(3*2^m)`` and integers ``1..integers``."""
        pts: list = []
        for m in range(levels + 1):
            for k in range(2 ** m):
                pts.append(Fraction(3 * k + 1, 3 * 2 ** m))
                pts.append(Fraction(3 * k + 2, 3 * 2 ** m))
        return pts + list(range(1, integers + 1))


def space_A_oracle() -> CatalogEntry:
    limits = [parse(s) for s in ("_1(0)*", "__1(0)*", "___1(0)*", "(01)*", "0(1)*")]
    return CatalogEntry("a", "adhesive space of dyadic irrationals plus positive integers",
                        SpaceAOracle(), limits, notes=SpaceAOracle.__doc__)


BUILDERS = {
    "gray": gray,
    "w": space_W,
    "y": space_Y,
    "z": square_Z,
    "z0": z0,
    "z1": z1,
    "z2": z2,
    "a": space_A_oracle,
    "np_demo": np_demo,
}


@lru_cache(maxsize=None)
def _build(name: str) -> CatalogEntry:
    return BUILDERS[name]()


def get(name: str) -> CatalogEntry:
    key = name.lower()
    if key not in BUILDERS:
        raise KeyError(f"unknown catalog entry {name!r}; choose from {', '.join(BUILDERS)}")
    return _build(key)


def names() -> list[str]:
    return list(BUILDERS)
