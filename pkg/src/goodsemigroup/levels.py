"""The level partition of ``A = S \\ E`` and complete infimums.

Levels are built top-down.  At each round ``B`` holds the remaining
representatives that nothing remaining dominates, ``C`` the members of
``B`` that are complete infimums of members of ``B``, and ``D = B \\ C`` is
peeled off.  The rounds are numbered backwards, so the last set removed
is level 1.

Everything runs on box cells of ``[0, c_E]`` where the cell value ``c_E,i``
encodes ``inf``.  With that encoding both "some remaining point dominates
``a``" and "some point of ``B`` is strictly above ``a`` exactly on ``G``"
are suffix-OR lookups.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from ._box import DeltaIndex, suffix_any
from .exceptions import InternalInconsistency, PreconditionViolated, UsageError
from .ideal import ComplementSet, GoodIdeal, cells_to_reps, principal_ideal
from .lattice import INF, check_point, format_point, from_mask, leq

__all__ = [
    "LevelPartition",
    "CompleteInfimumWitness",
    "compute_levels",
    "level_of",
    "complete_infimum_witness",
    "propG2_decomposition",
    "apery",
    "find_block_partition",
]


@dataclass(frozen=True)
class CompleteInfimumWitness:
    """``center`` as the pairwise meet of ``parts``.

    Each part is ``(point, F)`` with ``F`` the 1-based coordinates on which
    the part agrees with the center.
    """

    center: tuple
    parts: tuple

    def strict_sets(self) -> list:
        d = len(self.center)
        return [frozenset(range(1, d + 1)) - F for _, F in self.parts]

    def lift(self, bound) -> "CompleteInfimumWitness":
        """Concrete finite points: ``inf`` becomes ``bound_i`` in the center
        and in parts that agree there, ``bound_i + 1`` where a part is
        strictly above."""
        center = tuple(b if x is INF else x for x, b in zip(self.center, bound))
        parts = []
        for p, F in self.parts:
            q = []
            for i, (x, b) in enumerate(zip(p, bound), 1):
                if x is INF:
                    q.append(b if i in F else b + 1)
                else:
                    q.append(x)
            parts.append((tuple(q), F))
        return CompleteInfimumWitness(center, tuple(parts))

    def to_text(self) -> str:
        bits = [format_point(p) + " F={" + ",".join(map(str, sorted(F))) + "}"
                for p, F in self.parts]
        return format_point(self.center) + " = " + " ^ ".join(bits)


@lru_cache(maxsize=None)
def _partition_masks(available: frozenset, full: int) -> tuple | None:
    """Split ``full`` into blocks drawn from ``available`` (finest first)."""
    order = sorted(available, key=lambda g: (bin(g).count("1"), g))

    def go(rest):
        if not rest:
            return ()
        low = rest & -rest
        for g in order:
            if g & low and g & rest == g:
                tail = go(rest & ~g)
                if tail is not None:
                    return (g,) + tail
        return None

    return go(full)


def find_block_partition(available: Iterable[int], full: int) -> tuple | None:
    """Public form of the block search on bitmasks (``None`` if impossible)."""
    avail = frozenset(g for g in available if g and g & full == g and g != full)
    return _partition_masks(avail, full)


def _proper_masks(d: int) -> list:
    full = (1 << d) - 1
    return [g for g in range(1, full)]


def _strict_lower(cells: np.ndarray, bound: np.ndarray) -> np.ndarray:
    # a finite coordinate needs a larger one; inf needs inf
    return np.minimum(cells + 1, bound)


def _availability(index: DeltaIndex, cells: np.ndarray, lo_strict: np.ndarray) -> np.ndarray:
    """``avail[r, g]``: some marked cell is strictly above ``cells[r]`` exactly
    on the bitmask ``g`` (``inf`` counting as strictly above itself)."""
    n, d = cells.shape
    masks = _proper_masks(d)
    avail = np.zeros((n, 1 << d), dtype=bool)
    full = (1 << d) - 1
    for g in masks:
        lo = cells.copy()
        cols = [i for i in range(d) if g >> i & 1]
        lo[:, cols] = lo_strict[:, cols]
        avail[:, g] = index.exists(full & ~g, lo)
    return avail


def _complete_infimum_flags(avail: np.ndarray, d: int) -> np.ndarray:
    full = (1 << d) - 1
    out = np.zeros(len(avail), dtype=bool)
    seen = {}
    for r, row in enumerate(avail):
        key = row.tobytes()
        hit = seen.get(key)
        if hit is None:
            hit = _partition_masks(frozenset(np.flatnonzero(row).tolist()), full) is not None
            seen[key] = hit
        out[r] = hit
    return out


def _peel(cells: np.ndarray, bound: np.ndarray) -> np.ndarray:
    """Round index (0 = first peeled) of every cell."""
    n, d = cells.shape
    shape = tuple(int(b) + 1 for b in bound)
    lo_strict = _strict_lower(cells, bound)
    rounds = np.full(n, -1, dtype=np.int64)
    remaining = np.ones(n, dtype=bool)
    k = 0
    while remaining.any():
        if k > n:
            raise InternalInconsistency("level iteration did not terminate")
        live = np.zeros(shape, dtype=bool)
        live[tuple(cells[remaining].T)] = True
        above = suffix_any(live, range(d))
        dominated = np.zeros(n, dtype=bool)
        dominated[remaining] = above[tuple(lo_strict[remaining].T)]
        B = remaining & ~dominated
        if not B.any():
            raise InternalInconsistency("no maximal representative left")
        bidx = np.flatnonzero(B)
        btable = np.zeros(shape, dtype=bool)
        btable[tuple(cells[bidx].T)] = True
        avail = _availability(DeltaIndex(btable), cells[bidx], lo_strict[bidx])
        C = _complete_infimum_flags(avail, d)
        D = bidx[~C]
        if not len(D):
            raise InternalInconsistency(
                "every maximal representative is a complete infimum: "
                + " ".join(format_point(p) for p in cells[bidx][:5].tolist()))
        rounds[D] = k
        remaining[D] = False
        k += 1
    return rounds


class LevelPartition:
    """Levels ``A_1, ..., A_N`` of the complement of an ideal."""

    def __init__(self, ideal: GoodIdeal, levels: tuple, cell_levels: np.ndarray, cells: np.ndarray):
        self.ideal = ideal
        self.levels = levels
        self.cell_levels = cell_levels
        self.cells = cells
        self._lookup = {r: i for i, lev in enumerate(levels, 1) for r in lev}

    @property
    def N(self) -> int:
        return len(self.levels)

    def __len__(self):
        return len(self.levels)

    def __iter__(self):
        return iter(self.levels)

    def __getitem__(self, i: int) -> tuple:
        """1-based level access."""
        if not 1 <= i <= self.N:
            raise UsageError(f"level index {i} outside 1..{self.N}")
        return self.levels[i - 1]

    def __repr__(self):
        sizes = ",".join(str(len(lv)) for lv in self.levels)
        return f"LevelPartition(N={self.N}, sizes=[{sizes}])"

    def level_table(self) -> np.ndarray:
        """Level of each cell of ``[0, c_E]``; 0 outside the complement."""
        out = np.zeros(tuple(c + 1 for c in self.ideal.conductor), dtype=np.int64)
        out[tuple(self.cells.T)] = self.cell_levels
        return out

    def level_of(self, a) -> int:
        rep = self.ideal.canonical_representative(a)
        return self._lookup[rep]

    def as_dict(self) -> dict:
        return dict(self._lookup)

    def to_text(self) -> str:
        out = []
        for i, lev in enumerate(self.levels, 1):
            out.append(f"A{i} ({len(lev)})")
            out.extend(format_point(p) for p in lev)
        return "\n".join(out) + "\n"


def compute_levels(A: ComplementSet, E: GoodIdeal | None = None) -> LevelPartition:
    """Level partition of the complement representatives ``A``."""
    if E is None:
        E = A.ideal
    elif E is not A.ideal:
        raise UsageError("complement set does not belong to this ideal")
    cells = A.cells
    if not len(cells):
        raise UsageError("empty complement")
    bound = np.array(E.conductor, dtype=np.int64)
    rounds = _peel(cells, bound)
    N = int(rounds.max()) + 1
    cell_levels = N - rounds
    levels = []
    for i in range(1, N + 1):
        sel = cells[cell_levels == i]
        levels.append(tuple(cells_to_reps(sel, E.conductor)))
    return LevelPartition(E, tuple(levels), cell_levels, cells)


def level_of(P: LevelPartition, a) -> int:
    return P.level_of(a)


def _candidate_masks(beta: Sequence, a: Sequence):
    """Strict bitmasks ``beta`` offers above ``a``; empty list if not ``>= a``."""
    if not leq(a, beta):
        return []
    fixed = 0
    flex = []
    for i, (x, y) in enumerate(zip(a, beta)):
        if x is INF and y is INF:
            flex.append(i)
        elif y > x:
            fixed |= 1 << i
    out = []
    for r in range(1 << len(flex)):
        g = fixed
        for j, i in enumerate(flex):
            if r >> j & 1:
                g |= 1 << i
        out.append(g)
    return out


def complete_infimum_witness(reference: Iterable, a) -> CompleteInfimumWitness | None:
    """A decomposition of ``a`` as complete infimum of elements of ``reference``.

    ``reference`` is any finite set of points, possibly with ``inf``
    coordinates.  A coordinate where both ``a`` and a candidate are ``inf``
    may count as equal or as strictly above, and ``a`` itself may serve as a
    part through those coordinates.  Among all decompositions the finest
    block structure is returned.
    """
    a = check_point(a)
    d = len(a)
    full = (1 << d) - 1
    providers = {}
    for beta in sorted(check_point(b, d) for b in reference):
        for g in _candidate_masks(beta, a):
            if g and g != full:
                providers.setdefault(g, beta)
    blocks = _partition_masks(frozenset(providers), full)
    if blocks is None:
        return None
    parts = tuple((providers[g], from_mask(full & ~g, d)) for g in blocks)
    return CompleteInfimumWitness(a, parts)


def propG2_decomposition(reference, a, b) -> CompleteInfimumWitness:
    """Write ``a`` as a complete infimum of ``b`` and further elements.

    ``reference`` is a :class:`GoodSemigroup` or :class:`GoodIdeal`;
    ``a`` and ``b`` are finite members with ``b`` agreeing with ``a`` on a
    nonempty proper index set ``F`` and strictly above it elsewhere.  The
    extra parts agree with ``a`` on sets containing the complement of ``F``
    whose intersection is exactly that complement.
    """
    d = reference.d
    a = check_point(a, d, finite=True)
    b = check_point(b, d, finite=True)
    if not reference.contains(a) or not reference.contains(b):
        raise PreconditionViolated("both points must belong to the reference set")
    full = (1 << d) - 1
    Fmask = 0
    for i, (x, y) in enumerate(zip(a, b)):
        if x == y:
            Fmask |= 1 << i
        elif y < x:
            raise PreconditionViolated(f"{format_point(b)} is not above {format_point(a)}")
    if Fmask in (0, full):
        raise PreconditionViolated("the agreement set must be nonempty and proper")
    index = reference.index
    bound = index.bound
    avec = np.array(a, dtype=np.int64)
    cell = np.minimum(avec, bound)
    strict = np.minimum(avec + 1, bound)
    found = {}
    for k in range(1, full):
        if k & Fmask != k:
            continue
        lo = cell.copy()
        cols = [i for i in range(d) if k >> i & 1]
        lo[cols] = strict[cols]
        hit = index.first(full & ~k, lo)
        if hit is not None:
            pt = list(hit)
            for i in range(d):
                if not k >> i & 1:
                    pt[i] = a[i]
                elif a[i] >= bound[i]:
                    pt[i] = a[i] + 1
            found[k] = tuple(int(v) for v in pt)
    blocks = _partition_masks(frozenset(found), Fmask)
    if blocks is None:
        raise InternalInconsistency(
            f"no decomposition of {format_point(a)} through {format_point(b)}")
    parts = [(b, from_mask(Fmask, d))]
    parts += [(found[k], from_mask(full & ~k, d)) for k in blocks]
    return CompleteInfimumWitness(a, tuple(parts))


def apery(S, w) -> LevelPartition:
    """Levels of the Apery set of ``S`` with respect to ``w``."""
    E = principal_ideal(S, w)
    return compute_levels(E.complement(), E)
