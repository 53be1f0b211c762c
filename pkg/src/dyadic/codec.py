"""Decoding, tent-map iteration and Gray/binary conversion."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import _piecewise as pw
from .errors import NonTotalInput, OutOfRange
from .region import Region, format_frac, frac
from .subbase import region_Sbar
from .tword import BOT, Seq, as_seq, is_total, restrict

HALF = Fraction(1, 2)


def tent(x) -> Fraction:
    """``t(x) = 2x`` on ``[0,1/2]`` and ``2(1-x)`` on ``[1/2,1]``."""
    x = frac(x)
    if not 0 <= x <= 1:
        raise OutOfRange(f"{x} is outside [0,1]")
    return 2 * x if x <= HALF else 2 * (1 - x)


@dataclass
class TentState:
    value: Fraction
    branch_history: str = ""

    def step(self) -> "TentState":
        v = self.value
        d = "0" if v < HALF else "1" if v > HALF else BOT
        return TentState(tent(v), self.branch_history + d)


def gray_encode(x, depth: int) -> str:
    """Gray expansion of ``x`` to ``depth`` digits by iterating the tent map."""
    st = TentState(frac(x))
    if not 0 <= st.value <= 1:
        raise OutOfRange(f"{st.value} is outside [0,1]")
    for _ in range(depth):
        st = st.step()
    return st.branch_history.rstrip(BOT)


def tent_preimage(part):
    """``t^{-1}`` of a 1-D piecewise subset of [0,1]."""
    left = pw.affine_1d(part, HALF, Fraction(0))
    right = pw.affine_1d(part, -HALF, Fraction(1))
    unit = pw.box([(Fraction(0), Fraction(1), True, True)])
    return pw.intersect(pw.union(left, right, 1), unit, 1)


def _require_total(w: str) -> str:
    if BOT in w:
        raise NonTotalInput(f"{w!r} contains bottom")
    if w.strip("01"):
        raise NonTotalInput(f"{w!r} is not a binary word")
    return w


def binary_to_gray(b: str) -> str:
    """``g[0] = b[0]``, ``g[n] = b[n] xor b[n-1]``; length is preserved."""
    _require_total(b)
    return "".join(b[i] if i == 0 else str(int(b[i]) ^ int(b[i - 1])) for i in range(len(b)))


def gray_to_binary(g: str) -> str:
    """Inverse of :func:`binary_to_gray`: running xor of the Gray digits."""
    _require_total(g)
    out, acc = [], 0
    for c in g:
        acc ^= int(c)
        out.append(str(acc))
    return "".join(out)


def binary_expansion(x, depth: int) -> str:
    """The first ``depth`` binary digits of ``x`` in [0,1) (the terminating expansion)."""
    x = frac(x)
    if not 0 <= x < 1:
        raise OutOfRange(f"{x} is outside [0,1)")
    out = []
    for _ in range(depth):
        x *= 2
        out.append("1" if x >= 1 else "0")
        if x >= 1:
            x -= 1
    return "".join(out)


@dataclass
class DecodeResult:
    region: Region
    diameter: Fraction
    point: object = None
    empty: bool = False
    depth: int = 0
    notes: list = field(default_factory=list)

    def to_dict(self):
        return {
            "region": str(self.region),
            "diameter": format_frac(self.diameter),
            "point": None if self.point is None else str(self.point),
            "empty": self.empty,
            "depth": self.depth,
        }


def decode(S, p: Seq, depth: int) -> DecodeResult:
    """``S̄(p|depth)`` with its hull diameter and, if it is one point, that point."""
    w = restrict(as_seq(p), depth)
    r = region_Sbar(S, w)
    return DecodeResult(r, r.hull_diameter(), r.as_point(), r.is_empty(), depth)


def rho_prime(S, p: Seq, depth: int) -> DecodeResult:
    """:func:`decode` restricted to total sequences; flags sequences naming no point."""
    p = as_seq(p)
    if isinstance(p, str):
        if not is_total(p, depth):
            raise NonTotalInput("rho_prime needs a total sequence")
    elif not is_total(p):
        raise NonTotalInput("rho_prime needs a total sequence")
    res = decode(S, p, depth)
    if res.empty:
        res.notes.append("p represents no point")
    return res
