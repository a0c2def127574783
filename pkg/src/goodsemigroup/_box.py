"""Vectorised existence queries over boolean tables on a box [0, bound].

A table cell ``x`` stands for the point ``x`` itself; cells on the upper
face ``x_i = bound_i`` also stand for every point further out along axis
``i`` (membership is constant there).  Queries ask whether some marked cell
``y`` satisfies ``y_j == lo_j`` on a fixed mask and ``y_j >= lo_j`` off it.
They are answered in O(1) each after one reverse cumulative OR per mask.
"""

from __future__ import annotations

import numpy as np


def suffix_any(table: np.ndarray, axes) -> np.ndarray:
    """``out[x]`` is true iff some marked ``y`` has ``y >= x`` along ``axes``
    and ``y == x`` along the other axes."""
    out = table
    for ax in axes:
        out = np.flip(np.logical_or.accumulate(np.flip(out, ax), axis=ax), ax)
    return out


class DeltaIndex:
    """Lazy family of suffix tables, one per equality mask."""

    def __init__(self, table: np.ndarray):
        self.table = np.asarray(table, dtype=bool)
        self.d = self.table.ndim
        self.bound = np.array(self.table.shape, dtype=np.int64) - 1
        self._cache: dict[int, np.ndarray] = {}

    def suffix(self, fixed: int) -> np.ndarray:
        t = self._cache.get(fixed)
        if t is None:
            free = [ax for ax in range(self.d) if not fixed >> ax & 1]
            t = suffix_any(self.table, free)
            self._cache[fixed] = t
        return t

    def exists(self, fixed: int, lo: np.ndarray) -> np.ndarray:
        """Vectorised query; ``lo`` has shape (n, d) and must lie in the box."""
        lo = np.asarray(lo, dtype=np.int64)
        if lo.ndim == 1:
            return bool(self.suffix(fixed)[tuple(lo)])
        return self.suffix(fixed)[tuple(lo.T)]

    def first(self, fixed: int, lo) -> tuple | None:
        """Lexicographically first marked cell of the query region."""
        lo = [int(v) for v in lo]
        sl = tuple(slice(v, v + 1) if fixed >> ax & 1 else slice(v, None)
                   for ax, v in enumerate(lo))
        hits = np.argwhere(self.table[sl])
        if not len(hits):
            return None
        return tuple(int(h) + v for h, v in zip(hits[0], lo))


def strict_lower(a: np.ndarray, bound: np.ndarray) -> np.ndarray:
    """Cell bound for "strictly above ``a``" in a clamped table."""
    return np.minimum(a + 1, bound)


def box_cells(table: np.ndarray) -> np.ndarray:
    """Marked cells in lexicographic order, shape (n, d)."""
    return np.argwhere(table).astype(np.int64)


def clamp_table(table: np.ndarray, bound) -> np.ndarray:
    """Re-index a clamped table on a new box ``[0, bound]``."""
    top = np.array(table.shape) - 1
    idx = [np.minimum(np.arange(int(b) + 1), t) for b, t in zip(bound, top)]
    return table[np.ix_(*idx)]
