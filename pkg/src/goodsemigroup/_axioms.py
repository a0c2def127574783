"""Axiom checkers shared by semigroups and ideals.

Every checker works on a clamped membership table over ``[0, bound]`` and
returns the lexicographically first witness of a failure, or ``None``.
Pairs are visited as ``(cells[i], cells[j])`` with ``i < j`` in lexicographic
order of the cells.
"""

from __future__ import annotations

import numpy as np

from ._box import DeltaIndex

_CHUNK = 128


def _pt(row) -> tuple:
    return tuple(int(v) for v in row)


def _pair_blocks(n: int):
    for start in range(0, n, _CHUNK):
        stop = min(n, start + _CHUNK)
        rows = np.arange(start, stop)
        upper = np.arange(n)[None, :] > rows[:, None]
        yield rows, upper


def g1_failure(cells: np.ndarray, table: np.ndarray):
    """First pair whose meet is missing."""
    n = len(cells)
    for rows, upper in _pair_blocks(n):
        m = np.minimum(cells[rows][:, None, :], cells[None, :, :])
        bad = ~table[tuple(np.moveaxis(m, -1, 0))] & upper
        if bad.any():
            r, j = np.argwhere(bad)[0]
            return _pt(cells[rows[r]]), _pt(cells[j])
    return None


def closure_failure(left: np.ndarray, right: np.ndarray, target: np.ndarray,
                    *, symmetric: bool):
    """First pair ``(a, b)`` with ``a + b`` (clamped) outside ``target``.

    With ``symmetric`` the two operand lists coincide and only ``i <= j`` is
    visited.
    """
    bound = np.array(target.shape) - 1
    n = len(left)
    for start in range(0, n, _CHUNK):
        rows = np.arange(start, min(n, start + _CHUNK))
        s = np.minimum(left[rows][:, None, :] + right[None, :, :], bound)
        bad = ~target[tuple(np.moveaxis(s, -1, 0))]
        if symmetric:
            bad &= np.arange(len(right))[None, :] >= rows[:, None]
        if bad.any():
            r, j = np.argwhere(bad)[0]
            return _pt(left[rows[r]]), _pt(right[j])
    return None


def g2_failure(cells: np.ndarray, index: DeltaIndex):
    """First ``(a, b, i)`` (``i`` 1-based) with no lifting element."""
    n, d = cells.shape
    bound = index.bound
    weights = 1 << np.arange(d)
    for rows, upper in _pair_blocks(n):
        a = cells[rows][:, None, :]
        b = cells[None, :, :]
        m = np.minimum(a, b)
        neq = a != b
        fixed = (neq * weights).sum(axis=-1)
        bad = np.zeros(upper.shape + (d,), dtype=bool)
        for k in range(d):
            cand = upper & ~neq[..., k]
            if not cand.any():
                continue
            lo = np.broadcast_to(m, cand.shape + (d,)).copy()
            lo[..., k] = np.minimum(np.broadcast_to(a[..., k], cand.shape) + 1, bound[k])
            for q in np.unique(fixed[cand]):
                sel = cand & (fixed == q)
                ok = index.exists(int(q), lo[sel])
                bad[..., k][sel] = ~ok
        if bad.any():
            r, j, k = np.argwhere(bad)[0]
            return _pt(cells[rows[r]]), _pt(cells[j]), int(k) + 1
    return None


def conductor_failure(table: np.ndarray):
    """First 1-based axis ``i`` such that ``bound - e_i`` already has a full
    upper cone, i.e. the declared conductor is not minimal."""
    bound = np.array(table.shape) - 1
    for i in range(len(bound)):
        if bound[i] == 0:
            continue
        p = bound.copy()
        p[i] -= 1
        if table[tuple(p)]:
            return i + 1
    return None


def ideal_conductor(table: np.ndarray):
    """Least ``x`` whose upper cone lies in the clamped table, or ``None``
    when the set of such points has no minimum."""
    full = table
    for ax in range(table.ndim):
        full = np.flip(np.logical_and.accumulate(np.flip(full, ax), axis=ax), ax)
    pts = np.argwhere(full)
    if not len(pts):
        return None
    c = pts.min(axis=0)
    if not full[tuple(c)]:
        return None
    return _pt(c)
