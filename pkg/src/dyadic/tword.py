"""Bottomed words and ultimately periodic bottomed streams.

A finite bottomed word is a plain ``str`` over ``"0"``, ``"1"`` and ``"_"``
(``"_"`` stands for bottom) with trailing bottoms stripped, so the empty
string is the least element.  Infinite sequences are :class:`TStream` values
``prefix (period)^omega`` whose period holds at least one digit.

Every function here accepts either kind and returns the same kind it was
given wherever that makes sense.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Union

from .errors import IncompatibleOperands, WordSyntaxError

BOT = "_"
DIGITS = "01"
ALPHABET = "_01"


class TDigit(str, Enum):
    BOT = "_"
    ZERO = "0"
    ONE = "1"


# tie-break order: bottom < 0 < 1
_ORDER = str.maketrans("_01", "012")

_SYNTAX = re.compile(r"^([01_]*)(?:\(([01_]*)\)\*)?$")


@dataclass(frozen=True, eq=False)
class TStream:
    """An ultimately periodic bottomed sequence with infinitely many digits.

    The fields keep the spelling they were given (so text round-trips);
    equality and hashing use the canonical spelling with a primitive period
    and the shortest prefix.
    """

    prefix: str
    period: str

    def __post_init__(self):
        _check_chars(self.prefix)
        _check_chars(self.period)
        if not self.period or set(self.period) == {BOT}:
            raise WordSyntaxError("stream period must contain a digit; use a word instead")

    @property
    def canonical(self) -> tuple[str, str]:
        return _canonical(self.prefix, self.period)

    def __eq__(self, other):
        if not isinstance(other, TStream):
            return NotImplemented
        return self.canonical == other.canonical

    def __hash__(self):
        return hash(self.canonical)

    def __str__(self):
        return format_seq(self)

    def __getitem__(self, n: int) -> str:
        return digit(self, n)


Seq = Union[str, TStream]


def _check_chars(text: str) -> None:
    if not isinstance(text, str) or text.strip(ALPHABET):
        raise WordSyntaxError(f"not a bottomed word: {text!r}")


def _canonical(prefix: str, period: str) -> tuple[str, str]:
    n = len(period)
    for d in range(1, n + 1):
        if n % d == 0 and period[:d] * (n // d) == period:
            period = period[:d]
            break
    while prefix and prefix[-1] == period[-1]:
        period = period[-1] + period[:-1]
        prefix = prefix[:-1]
    return prefix, period


def word(text: str) -> str:
    """Validate ``text`` as a word and return its canonical form."""
    _check_chars(text)
    return text.rstrip(BOT)


def stream(prefix: str, period: str) -> Seq:
    """Build ``prefix (period)^omega``, collapsing to a word if the period is all bottom."""
    _check_chars(prefix)
    _check_chars(period)
    if not period:
        raise WordSyntaxError("empty period")
    if set(period) == {BOT}:
        return prefix.rstrip(BOT)
    return TStream(prefix, period)


def is_word(p: Seq) -> bool:
    return isinstance(p, str)


def as_seq(p) -> Seq:
    if isinstance(p, TStream):
        return p
    if isinstance(p, str):
        return parse(p) if "(" in p or "⊥" in p else word(p)
    raise TypeError(f"expected a word or TStream, got {type(p).__name__}")


def _shape(p: Seq) -> tuple[int, int]:
    if isinstance(p, str):
        return len(p), 1
    return len(p.prefix), len(p.period)


def _horizon(*seqs: Seq) -> tuple[int, int]:
    pre = 0
    per = 1
    for p in seqs:
        a, b = _shape(p)
        pre = max(pre, a)
        per = per * b // math.gcd(per, b)
    return pre, per


def digit(p: Seq, n: int) -> str:
    """The symbol ``p(n)``."""
    if n < 0:
        raise IndexError(n)
    if isinstance(p, str):
        return p[n] if n < len(p) else BOT
    if n < len(p.prefix):
        return p.prefix[n]
    return p.period[(n - len(p.prefix)) % len(p.period)]


def digits(p: Seq, n: int) -> str:
    """The first ``n`` symbols of ``p`` as a string, bottoms included."""
    if isinstance(p, str):
        return p[:n].ljust(n, BOT)
    return "".join(digit(p, k) for k in range(n))


def key(p: Seq, n: int | None = None):
    """Sort key: length first, then symbols with bottom < 0 < 1.

    Streams have no finite length; they are compared on the first ``n``
    symbols (default: prefix plus two periods).
    """
    if isinstance(p, str) and n is None:
        return (len(p), p.translate(_ORDER))
    if n is None:
        pre, per = _shape(p)
        n = pre + 2 * per
    return (math.inf if isinstance(p, TStream) else len(p), digits(p, n).translate(_ORDER))


def leq(d: Seq, e: Seq) -> bool:
    """``d`` is below ``e`` in the positionwise information order."""
    if isinstance(d, str) and isinstance(e, str):
        if len(d) > len(e):
            return False
        return all(a == BOT or a == b for a, b in zip(d, e))
    pre, per = _horizon(d, e)
    for k in range(pre + per):
        a = digit(d, k)
        if a != BOT and a != digit(e, k):
            return False
    return True


def compatible(d: Seq, e: Seq) -> bool:
    """No position carries opposite digits."""
    if isinstance(d, str) and isinstance(e, str):
        return all(a == BOT or b == BOT or a == b for a, b in zip(d, e))
    pre, per = _horizon(d, e)
    for k in range(pre + per):
        a, b = digit(d, k), digit(e, k)
        if a != BOT and b != BOT and a != b:
            return False
    return True


def _join_symbols(a: str, b: str, pos: int) -> str:
    if a == BOT:
        return b
    if b == BOT or a == b:
        return a
    raise IncompatibleOperands(f"opposite digits at position {pos}")


def join(d: Seq, e: Seq) -> Seq:
    """Positionwise least upper bound; raises :class:`IncompatibleOperands`."""
    if isinstance(d, str) and isinstance(e, str):
        n = max(len(d), len(e))
        return "".join(_join_symbols(digit(d, k), digit(e, k), k) for k in range(n))
    pre, per = _horizon(d, e)
    out = "".join(_join_symbols(digit(d, k), digit(e, k), k) for k in range(pre + per))
    return stream(out[:pre], out[pre:])


def join_all(seqs: Iterable[Seq]) -> Seq:
    out: Seq = ""
    for p in seqs:
        out = join(out, p)
    return out


def restrict(p: Seq, n: int) -> str:
    """``p|_n``: keep symbols below ``n``, bottom elsewhere."""
    if n < 0:
        raise ValueError("restriction index must be non-negative")
    return digits(p, n).rstrip(BOT)


def fill(p: Seq, n: int, a: str) -> Seq:
    """``p[n:=a]`` for a digit ``a``."""
    if a not in DIGITS or len(a) != 1:
        raise ValueError(f"fill value must be a digit, got {a!r}")
    if isinstance(p, str):
        w = p.ljust(n + 1, BOT)
        return w[:n] + a + w[n + 1:]
    pre = max(len(p.prefix), n + 1)
    head = digits(p, pre)
    head = head[:n] + a + head[n + 1:]
    period = "".join(digit(p, pre + k) for k in range(len(p.period)))
    return stream(head, period)


def is_total(p: Seq, n: int | None = None) -> bool:
    """No bottom among the first ``n`` symbols (or anywhere, for streams)."""
    if n is not None:
        return BOT not in digits(p, n)
    if isinstance(p, str):
        return BOT not in p
    return BOT not in p.prefix and BOT not in p.period


def has_infinitely_many_digits(p: Seq) -> bool:
    return isinstance(p, TStream)


class IndexSet:
    """Exact description of ``dom(p)`` for an ultimately periodic ``p``."""

    def __init__(self, p: Seq):
        self._p = p

    def __contains__(self, n: int) -> bool:
        return n >= 0 and digit(self._p, n) != BOT

    @property
    def is_finite(self) -> bool:
        return isinstance(self._p, str)

    @property
    def is_everything(self) -> bool:
        return isinstance(self._p, TStream) and is_total(self._p)

    def up_to(self, n: int) -> list[int]:
        return [k for k in range(n) if k in self]

    def __repr__(self):
        if isinstance(self._p, str):
            return f"IndexSet({self.up_to(len(self._p))})"
        p = self._p
        res = [k for k, c in enumerate(p.period) if c != BOT]
        head = [k for k, c in enumerate(p.prefix) if c != BOT]
        return f"IndexSet({head} + {{{len(p.prefix)} + r + {len(p.period)}j : r in {res}}})"


@dataclass(frozen=True)
class DigitStats:
    seq: Seq

    @property
    def dom(self) -> IndexSet:
        return IndexSet(self.seq)

    def bottom_count_up_to(self, n: int) -> int:
        return digits(self.seq, n).count(BOT)

    def digit_count_up_to(self, n: int) -> int:
        return n - self.bottom_count_up_to(n)


def digit_stats(p: Seq) -> DigitStats:
    return DigitStats(as_seq(p))


def parse(text: str) -> Seq:
    """Parse ``"01_1"`` or ``"_011(01)*"``; ``"⊥"`` is accepted for ``"_"``."""
    if not isinstance(text, str):
        raise WordSyntaxError(f"expected text, got {type(text).__name__}")
    m = _SYNTAX.match(text.strip().replace("⊥", BOT))
    if not m:
        raise WordSyntaxError(f"invalid bottomed sequence: {text!r}")
    prefix, period = m.group(1), m.group(2)
    if period is None:
        return prefix.rstrip(BOT)
    if not period:
        raise WordSyntaxError(f"empty period in {text!r}")
    return stream(prefix, period)


def format_seq(p: Seq) -> str:
    if isinstance(p, str):
        return p
    return f"{p.prefix}({p.period})*"


def pretty(p: Seq) -> str:
    """Human-facing rendering with ``⊥``; the empty word prints as ``⊥^ω``."""
    if isinstance(p, str):
        return p.replace(BOT, "⊥") if p else "⊥^ω"
    return p.prefix.replace(BOT, "⊥") + "(" + p.period.replace(BOT, "⊥") + ")^ω"


def all_words(max_len: int, alphabet: str = ALPHABET) -> list[str]:
    """Every canonical word of length at most ``max_len``, in tie-break order."""
    out = [""]
    layer = [""]
    for _ in range(max_len):
        layer = [w + c for w in layer for c in _sorted_alphabet(alphabet)]
        out.extend(w for w in layer if not w.endswith(BOT))
    return out


def _sorted_alphabet(alphabet: str) -> str:
    return "".join(c for c in ALPHABET if c in alphabet)


def total_words(max_len: int) -> list[str]:
    """All words of ``2^{<=max_len}`` (including the empty word)."""
    out = [""]
    layer = [""]
    for _ in range(max_len):
        layer = [w + c for w in layer for c in DIGITS]
        out.extend(layer)
    return out
