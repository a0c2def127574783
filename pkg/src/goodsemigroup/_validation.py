"""Input checks shared by the estimator layer and the command line."""

from __future__ import annotations

import numpy as np

from .exceptions import UsageError
from .lattice import check_point, parse_point
from .semigroup import GoodSemigroup, from_small_elements


def check_points(X, d: int | None = None) -> np.ndarray:
    """A 2-d array of nonnegative integer rows.

    Accepts nested sequences, integer arrays and ``"(a,b)"`` strings.
    """
    if isinstance(X, np.ndarray):
        arr = X
    else:
        rows = [parse_point(x, d) if isinstance(x, str) else check_point(x, d, finite=True)
                for x in X]
        if not rows:
            raise UsageError("no points given")
        widths = {len(r) for r in rows}
        if len(widths) != 1:
            raise UsageError("points of mixed dimension")
        arr = np.array(rows)
    if arr.ndim == 1:
        arr = arr.reshape(1, -1)
    if arr.ndim != 2 or arr.shape[1] == 0:
        raise UsageError(f"expected a 2-d array of points, got shape {arr.shape}")
    if arr.size and not np.issubdtype(arr.dtype, np.integer):
        if not np.issubdtype(arr.dtype, np.floating) or not np.all(np.mod(arr, 1) == 0):
            raise UsageError("coordinates must be integers")
    arr = arr.astype(np.int64)
    if (arr < 0).any():
        raise UsageError("coordinates must be nonnegative")
    if d is not None and arr.shape[1] != d:
        raise UsageError(f"expected points of dimension {d}, got {arr.shape[1]}")
    return arr


def check_semigroup(S) -> GoodSemigroup:
    """A :class:`GoodSemigroup`, or small elements to be validated."""
    if isinstance(S, GoodSemigroup):
        return S
    pts = check_points(S)
    return from_small_elements(pts.shape[1], [tuple(int(v) for v in p) for p in pts])


def check_omega(w, d: int) -> tuple:
    if isinstance(w, str):
        return parse_point(w, d)
    return check_point(w, d, finite=True)
