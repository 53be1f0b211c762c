"""Exact piecewise-constant subsets of R^d with rational breakpoints.

A 0-dimensional set is a bool.  A d-dimensional set is a pair
``(breaks, values)``: ``breaks`` is a strictly increasing tuple of
Fractions cutting the first axis into cells

    (-inf, b0), {b0}, (b0, b1), {b1}, ..., {b_m}, (b_m, +inf)

and ``values`` lists, for each cell in that order, the (d-1)-dimensional
slice over it.  Canonical form drops every break whose point cell agrees
with both neighbouring gaps, which makes equality structural.
"""
from __future__ import annotations

from bisect import bisect_left, bisect_right
from fractions import Fraction

# Interval = (lo, hi, lo_closed, hi_closed)


def const(dim: int, flag: bool):
    if dim == 0:
        return flag
    return ((), (const(dim - 1, flag),))


def empty(dim: int):
    return const(dim, False)


def _norm(breaks, vals):
    nb = []
    nv = [vals[0]]
    for i, b in enumerate(breaks):
        pt, right = vals[2 * i + 1], vals[2 * i + 2]
        if pt == nv[-1] and right == nv[-1]:
            continue
        nb.append(b)
        nv.append(pt)
        nv.append(right)
    return (tuple(nb), tuple(nv))


def _refine(pw, breaks):
    src_b, src_v = pw
    out = []
    i = 0
    nb = len(src_b)
    for b in breaks:
        gap = src_v[2 * i]
        out.append(gap)
        if i < nb and src_b[i] == b:
            out.append(src_v[2 * i + 1])
            i += 1
        else:
            out.append(gap)
    out.append(src_v[2 * i])
    return out


def _support(pw, dim):
    """First-axis bounds (lo, hi) of the nonempty cells, or None."""
    breaks, vals = pw
    e = empty(dim - 1)
    first = next((i for i, v in enumerate(vals) if v != e), None)
    if first is None:
        return None
    last = max(i for i, v in enumerate(vals) if v != e)
    lo = None if first == 0 else breaks[(first - 1) // 2]
    hi = None if last == len(vals) - 1 else breaks[last // 2]
    return lo, hi


def _window(pw, lo, hi):
    """A piecewise agreeing with ``pw`` on [lo, hi] (None = unbounded)."""
    breaks, vals = pw
    i = 0 if lo is None else bisect_left(breaks, lo)
    j = len(breaks) if hi is None else bisect_right(breaks, hi)
    if i == 0 and j == len(breaks):
        return pw
    return (breaks[i:j], vals[2 * i: 2 * j + 1])


def combine(a, b, op, dim: int):
    if dim == 0:
        return op(a, b)
    if a[0] == b[0]:
        breaks = a[0]
        va, vb = a[1], b[1]
    else:
        breaks = tuple(sorted(set(a[0]) | set(b[0])))
        va, vb = _refine(a, breaks), _refine(b, breaks)
    return _norm(breaks, [combine(x, y, op, dim - 1) for x, y in zip(va, vb)])


def _and(x, y):
    return x and y


def _or(x, y):
    return x or y


def _diff(x, y):
    return x and not y


def intersect(a, b, dim: int):
    if dim == 0:
        return a and b
    e = empty(dim)
    if a == e or b == e:
        return e
    # clip the larger operand to the smaller one's support before merging
    if len(a[0]) > len(b[0]):
        a, b = b, a
    sup = _support(a, dim)
    b = _window(b, *sup)
    return _norm_merge(a, b, dim)


def _norm_merge(a, b, dim):
    if a[0] == b[0]:
        breaks = a[0]
        va, vb = a[1], b[1]
    else:
        breaks = tuple(sorted(set(a[0]) | set(b[0])))
        va, vb = _refine(a, breaks), _refine(b, breaks)
    return _norm(breaks, [intersect(x, y, dim - 1) for x, y in zip(va, vb)])


def union(a, b, dim: int):
    return combine(a, b, _or, dim)


def difference(a, b, dim: int):
    return combine(a, b, _diff, dim)


def complement(a, dim: int):
    if dim == 0:
        return not a
    return (a[0], tuple(complement(v, dim - 1) for v in a[1]))


def closure(a, dim: int):
    """Topological closure in R^d."""
    if dim == 0:
        return a
    breaks, vals = a
    cv = [closure(v, dim - 1) for v in vals]
    out = list(cv)
    for i in range(1, len(cv), 2):
        out[i] = union(union(cv[i - 1], cv[i], dim - 1), cv[i + 1], dim - 1)
    return _norm(breaks, out)


def box(intervals):
    """Product of intervals ``(lo, hi, lo_closed, hi_closed)``."""
    if not intervals:
        return True
    dim = len(intervals)
    inner = box(intervals[1:])
    e = empty(dim - 1)
    lo, hi, lc, hc = intervals[0]
    if lo > hi:
        raise ValueError(f"interval with lo > hi: {lo} > {hi}")
    if inner == e:
        return empty(dim)
    if lo == hi:
        if not (lc and hc):
            return empty(dim)
        return _norm((lo,), (e, inner, e))
    return _norm((lo, hi), (e, inner if lc else e, inner, inner if hc else e, e))


def point(coords):
    return box([(c, c, True, True) for c in coords])


def product(a, dim_a: int, b):
    """``a x b`` for ``a`` of dimension ``dim_a``."""
    if dim_a == 0:
        return b if a else _empty_like(b)
    return _norm(a[0], [product(v, dim_a - 1, b) for v in a[1]])


def _empty_like(b):
    if isinstance(b, bool):
        return False
    return _empty_like_dim(b)


def _empty_like_dim(b):
    d = 0
    while not isinstance(b, bool):
        d += 1
        b = b[1][0]
    return empty(d)


def contains(a, coords) -> bool:
    for c in coords:
        breaks, vals = a
        i = bisect_left(breaks, c)
        if i < len(breaks) and breaks[i] == c:
            a = vals[2 * i + 1]
        else:
            a = vals[2 * i]
    return bool(a)


def hull(a, dim: int):
    """Per-axis (lo, hi) of the closure's bounding box, or None if empty."""
    if dim == 0:
        return [] if a else None
    sup = _support(a, dim)
    if sup is None:
        return None
    out = [sup]
    e = empty(dim - 1)
    inner = None
    for v in a[1]:
        if v == e:
            continue
        h = hull(v, dim - 1)
        if inner is None:
            inner = h
        else:
            inner = [(min(x[0], y[0]), max(x[1], y[1])) for x, y in zip(inner, h)]
    return out + inner


def _cell_interval(breaks, s, t):
    if s % 2:
        lo, lc = breaks[(s - 1) // 2], True
    else:
        lo, lc = (breaks[s // 2 - 1] if s else None), False
    if t % 2:
        hi, hc = breaks[(t - 1) // 2], True
    else:
        hi, hc = (breaks[t // 2] if t // 2 < len(breaks) else None), False
    return (lo, hi, lc, hc)


def boxes(a, dim: int):
    """Decompose into disjoint boxes, each a list of intervals."""
    if dim == 0:
        return [[]] if a else []
    breaks, vals = a
    e = empty(dim - 1)
    out = []
    i = 0
    n = len(vals)
    while i < n:
        if vals[i] == e:
            i += 1
            continue
        j = i
        while j + 1 < n and vals[j + 1] == vals[i]:
            j += 1
        iv = _cell_interval(breaks, i, j)
        for rest in boxes(vals[i], dim - 1):
            out.append([iv] + rest)
        i = j + 1
    return out


def axis_breaks(a, dim: int, acc=None):
    """Collect every breakpoint per axis into ``acc`` (list of sets)."""
    if acc is None:
        acc = [set() for _ in range(dim)]
    if dim == 0:
        return acc
    acc[-dim].update(a[0])
    for v in a[1]:
        axis_breaks(v, dim - 1, acc)
    return acc


def affine_1d(a, scale: Fraction, shift: Fraction):
    """Image of a 1-D set under ``x -> scale * x + shift`` (scale != 0)."""
    breaks, vals = a
    nb = [scale * b + shift for b in breaks]
    if scale < 0:
        return _norm(tuple(reversed(nb)), tuple(reversed(vals)))
    return _norm(tuple(nb), tuple(vals))


def sample_points(breaks):
    """One rational representative per 1-D cell between sorted breaks."""
    bs = sorted(breaks)
    if not bs:
        return [Fraction(0)]
    out = [bs[0] - 1]
    for x, y in zip(bs, bs[1:]):
        out.append(x)
        out.append((x + y) / 2)
    out.append(bs[-1])
    out.append(bs[-1] + 1)
    return out
