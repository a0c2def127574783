"""Points of (N u {inf})^d: order, meets, domination and Delta-set queries.

Points are plain tuples whose entries are non-negative ints or the
singleton :data:`INF`.  Index sets are given as iterables of 1-based
coordinate indices (``{1, 3}``) and stored internally as bitmasks where bit
``i - 1`` stands for coordinate ``i``.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Sequence

from .exceptions import UsageError

__all__ = [
    "INF",
    "ExtPoint",
    "is_finite",
    "check_point",
    "meet",
    "meet_all",
    "leq",
    "dominates",
    "delta",
    "delta_union",
    "orthogonal",
    "to_mask",
    "from_mask",
    "iter_masks",
    "format_point",
    "parse_point",
    "sort_points",
]


class _Infinity:
    """The point at infinity of N.  Compares above every int."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __reduce__(self):
        return (_Infinity, ())

    def __hash__(self):
        return hash("goodsemigroup.INF")

    def __eq__(self, other):
        return other is self

    def __ne__(self, other):
        return other is not self

    def __lt__(self, other):
        if other is self or isinstance(other, int):
            return False
        return NotImplemented

    def __le__(self, other):
        if other is self:
            return True
        if isinstance(other, int):
            return False
        return NotImplemented

    def __gt__(self, other):
        if other is self:
            return False
        if isinstance(other, int):
            return True
        return NotImplemented

    def __ge__(self, other):
        if other is self or isinstance(other, int):
            return True
        return NotImplemented


INF = _Infinity()

ExtPoint = tuple


def is_finite(a: Sequence) -> bool:
    return all(x is not INF for x in a)


def check_point(a, d: int | None = None, *, finite: bool = False) -> tuple:
    """Normalise ``a`` to a point tuple, raising :class:`UsageError` on junk."""
    try:
        coords = tuple(a)
    except TypeError:
        raise UsageError(f"not a point: {a!r}") from None
    out = []
    for x in coords:
        if x is INF:
            if finite:
                raise UsageError(f"point {format_point(coords)} has an infinite coordinate")
            out.append(INF)
            continue
        if isinstance(x, bool) or not hasattr(x, "__index__"):
            raise UsageError(f"bad coordinate {x!r} in {coords!r}")
        x = int(x)
        if x < 0:
            raise UsageError(f"negative coordinate in {coords!r}")
        out.append(x)
    if not out:
        raise UsageError("points need at least one coordinate")
    if d is not None and len(out) != d:
        raise UsageError(f"expected a point of dimension {d}, got {len(out)}")
    return tuple(out)


def _same_dim(a, b):
    if len(a) != len(b):
        raise UsageError(f"dimension mismatch: {len(a)} vs {len(b)}")


def meet(a: Sequence, b: Sequence) -> tuple:
    """Coordinate-wise minimum."""
    _same_dim(a, b)
    return tuple(x if x <= y else y for x, y in zip(a, b))


def meet_all(points: Iterable[Sequence]) -> tuple:
    it = iter(points)
    try:
        out = tuple(next(it))
    except StopIteration:
        raise UsageError("meet of an empty family") from None
    for p in it:
        out = meet(out, p)
    return out


def leq(a: Sequence, b: Sequence) -> bool:
    _same_dim(a, b)
    return all(x <= y for x, y in zip(a, b))


def dominates(b: Sequence, a: Sequence) -> bool:
    """True iff ``b`` strictly dominates ``a`` (``a << b``).

    On infinite coordinates the rule is: ``b_i = inf`` always qualifies, a
    finite ``b_i`` needs a finite ``a_i < b_i``.  For representatives of
    subspaces this says that some (equivalently every) point of the
    subspace of ``a`` is dominated by a point of the subspace of ``b``.
    """
    _same_dim(a, b)
    return all(y is INF or (x is not INF and y > x) for x, y in zip(a, b))


def to_mask(F: Iterable[int], d: int) -> int:
    mask = 0
    for i in F:
        if isinstance(i, bool) or not 1 <= int(i) <= d:
            raise UsageError(f"index {i!r} outside 1..{d}")
        mask |= 1 << (int(i) - 1)
    return mask


def from_mask(mask: int, d: int) -> frozenset:
    return frozenset(i + 1 for i in range(d) if mask >> i & 1)


def iter_masks(d: int, *, proper: bool = False, nonempty: bool = False) -> Iterator[int]:
    full = (1 << d) - 1
    for m in range(1 if nonempty else 0, full + 1):
        if proper and m == full:
            continue
        yield m


def orthogonal(F: Iterable[int], d: int) -> frozenset:
    """The complement of ``F`` in ``{1..d}``."""
    return from_mask(((1 << d) - 1) & ~to_mask(F, d), d)


def _in_delta(b, a, mask, closed):
    for i, (x, y) in enumerate(zip(a, b)):
        if mask >> i & 1:
            if y != x:
                return False
        elif closed:
            if y < x:
                return False
        elif not y > x:
            return False
    return not closed or b != a


def delta(reference: Iterable[Sequence], F: Iterable[int], a: Sequence,
          closed: bool = False) -> set:
    """Elements of ``reference`` agreeing with ``a`` on ``F``.

    Off ``F`` they must be strictly larger (``closed=False``), or weakly
    larger and different from ``a`` (``closed=True``).
    """
    a = tuple(a)
    mask = to_mask(F, len(a))
    out = set()
    for b in reference:
        _same_dim(a, b)
        if _in_delta(b, a, mask, closed):
            out.add(tuple(b))
    return out


def delta_union(reference: Iterable[Sequence], a: Sequence) -> set:
    """Union of the Delta sets of ``a`` over all singleton index sets."""
    a = tuple(a)
    d = len(a)
    reference = list(reference)
    out = set()
    for i in range(1, d + 1):
        out |= delta(reference, (i,), a)
    return out


def format_point(a: Sequence) -> str:
    return "(" + ",".join("inf" if x is INF else str(x) for x in a) + ")"


_POINT_RE = re.compile(r"^\(\s*([^()]*)\s*\)$")


def parse_point(text: str, d: int | None = None) -> tuple:
    """Parse ``(3,inf,11)``.  Parentheses are optional."""
    s = text.strip()
    m = _POINT_RE.match(s)
    body = m.group(1) if m else s
    coords = []
    for tok in body.split(","):
        tok = tok.strip().lower()
        if tok in ("inf", "∞"):
            coords.append(INF)
        elif tok.isdigit():
            coords.append(int(tok))
        else:
            raise UsageError(f"cannot parse point {text!r}")
    return check_point(coords, d)


def sort_points(points: Iterable[Sequence]) -> list:
    """Lexicographic order with INF after every integer."""
    return sorted(tuple(p) for p in points)
