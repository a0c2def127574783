"""Infinite subspaces of a level partition and the level-count theorem check.

A ``U``-subspace is written as a point with ``inf`` exactly off ``U``; it
stands for all points that agree with it on ``U`` and reach the ambient
conductor elsewhere.  Its dimension is the number of ``inf`` coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .exceptions import IndexNotInU, MixedU, UsageError
from .lattice import INF, check_point, format_point, meet

__all__ = [
    "Subspace",
    "TheoremReport",
    "canonical_representative",
    "subspace_meet",
    "subspace_sum",
    "subspaces_of_level",
    "h_k_set",
    "theorem_main_check",
    "theorem_thresholds",
]


@dataclass(frozen=True)
class Subspace:
    """``base`` carries ``inf`` exactly on the complement of ``U`` (1-based)."""

    base: tuple
    U: frozenset

    def __post_init__(self):
        base = check_point(self.base)
        U = frozenset(int(i) for i in self.U)
        if any(not 1 <= i <= len(base) for i in U):
            raise UsageError(f"index set {sorted(U)} outside 1..{len(base)}")
        finite = frozenset(i for i, x in enumerate(base, 1) if x is not INF)
        if finite != U:
            raise UsageError(f"{format_point(base)} is not a subspace with U={sorted(U)}")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "U", U)

    @classmethod
    def of(cls, point) -> "Subspace":
        p = check_point(point)
        return cls(p, frozenset(i for i, x in enumerate(p, 1) if x is not INF))

    @property
    def d(self) -> int:
        return len(self.base)

    @property
    def dimension(self) -> int:
        return self.d - len(self.U)

    def contains_point(self, x, conductor) -> bool:
        """Is the finite point ``x`` one of the points this subspace stands for?"""
        x = check_point(x, self.d, finite=True)
        for v, b, c in zip(x, self.base, conductor):
            if b is INF:
                if v < c:
                    return False
            elif v != b:
                return False
        return True

    def leq(self, other: "Subspace") -> bool:
        if self.U != other.U:
            raise MixedU("subspaces are only compared for equal U")
        return all(self.base[i - 1] <= other.base[i - 1] for i in self.U)

    def __str__(self):
        return format_point(self.base)

    def sort_key(self):
        return (-self.dimension, self.base)


def canonical_representative(E, a) -> tuple:
    """Representative of ``a`` in the complement of ``E``.

    Coordinates at or beyond the ideal conductor become ``inf``; raises
    :class:`~goodsemigroup.exceptions.NotInComplement` for points of ``E``
    or outside ``S``.
    """
    return E.canonical_representative(a)


def subspace_meet(x: Subspace, y: Subspace) -> Subspace:
    if x.d != y.d:
        raise UsageError("dimension mismatch")
    return Subspace(meet(x.base, y.base), x.U | y.U)


def subspace_sum(x: Subspace, y: Subspace) -> Subspace:
    """Coordinate sum on ``U``; both summands must share ``U``."""
    if x.U != y.U:
        raise MixedU(f"cannot add {x} and {y}: different finite index sets")
    base = tuple(INF if a is INF else a + b for a, b in zip(x.base, y.base))
    return Subspace(base, x.U)


def subspaces_of_level(P, i: int) -> list:
    """All representatives of level ``i`` as subspaces, by dimension then
    lexicographically."""
    return sorted((Subspace.of(r) for r in P[i]), key=Subspace.sort_key)


def h_k_set(reps: Iterable, x, k: int) -> set:
    """The ``U``-subspaces among ``reps`` sharing coordinate ``k`` with ``x``."""
    if not isinstance(x, Subspace):
        x = Subspace.of(x)
    if k not in x.U:
        raise IndexNotInU(f"index {k} is not a finite coordinate of {x}")
    out = set()
    for r in reps:
        s = r if isinstance(r, Subspace) else Subspace.of(r)
        if s.U == x.U and s.base[k - 1] == x.base[k - 1]:
            out.add(s)
    return out


def theorem_thresholds(w) -> list:
    """``[(k, N - s_k + 1)]`` for ``k = 1..d`` with ``s_k`` the prefix sums
    of ``w`` sorted descending."""
    w = sorted(w, reverse=True)
    N = sum(w)
    out = []
    s = 0
    for k, x in enumerate(w, 1):
        s += x
        out.append((k, N - s + 1))
    return out


@dataclass(frozen=True)
class TheoremReport:
    w: tuple
    N: int
    expected: int
    max_dimension: tuple
    violation: tuple | None

    @property
    def passed(self) -> bool:
        return self.N == self.expected and self.violation is None

    def to_text(self) -> str:
        line = f"N={self.N} expected={self.expected} {'PASS' if self.passed else 'FAIL'}"
        if self.violation is not None:
            k, i = self.violation
            line += f" first violation k={k} level={i}"
        return line


def theorem_main_check(P, w=None) -> TheoremReport:
    """Check the level count and the dimension thresholds for ``w + S``."""
    E = P.ideal
    if w is None:
        if not E.is_principal:
            raise UsageError("the ideal is not principal; pass w explicitly")
        w = E.generators[0]
    w = check_point(w, E.d, finite=True)
    d = len(w)
    maxdim = tuple(max(sum(x is INF for x in r) for r in lev) for lev in P.levels)
    N = P.N
    violation = None
    for k, start in theorem_thresholds(w):
        for i in range(1, N + 1):
            has = maxdim[i - 1] >= d - k
            if has != (i >= start):
                violation = (k, i)
                break
        if violation:
            break
    return TheoremReport(w, N, sum(w), maxdim, violation)
