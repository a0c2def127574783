"""Brute-force oracles and random corpora.

``brute_force_partition`` peels levels off explicit finite points of a
padded box ``[0, c_E + padding]`` instead of off representatives.  The
padding rows between ``c_E`` and the box edge are ordinary points, so the
oracle does not assume that levels are constant along rays there; it only
treats the outermost cell of each axis as standing for the points beyond
the box (without that, a truncated ray would be peeled off one cell per
round from its cut end).

``naive_partition`` and ``naive_axiom_violations`` are plain-Python
versions used to check the vectorised code on small inputs.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import _axioms
from ._box import DeltaIndex, box_cells, suffix_any
from .exceptions import (
    GenerationExhausted,
    GridTooLarge,
    InvalidNumericalSemigroup,
    UsageError,
)
from .ideal import GoodIdeal, _ideal_table
from .lattice import format_point
from .semigroup import (
    GoodSemigroup,
    _from_table,
    check_table,
    format_semigroup,
    from_small_elements,
)

__all__ = [
    "PaddedGrid",
    "GridPartition",
    "CorpusSpec",
    "brute_force_partition",
    "naive_partition",
    "naive_axiom_violations",
    "numerical_semigroup_gaps",
    "product_semigroup",
    "random_good_semigroup",
    "generate_corpus",
    "write_corpus",
    "default_padding",
    "DEFAULT_GRID_CAP",
]

DEFAULT_GRID_CAP = 2_000_000


def default_padding(w) -> tuple:
    """``max(w) + 2`` on every axis."""
    p = max(w) + 2
    return (p,) * len(w)


class PaddedGrid:
    """Membership of ``S \\ E`` on ``[0, c_E + padding]``, computed from the
    generators of ``E`` rather than from its conductor table."""

    def __init__(self, S: GoodSemigroup, E: GoodIdeal, padding, cap: int = DEFAULT_GRID_CAP):
        padding = _normalise_padding(padding, S.d)
        self.d = S.d
        self.padding = padding
        self.bound = tuple(c + p for c, p in zip(E.conductor, padding))
        cells = math.prod(b + 1 for b in self.bound)
        if cells > cap:
            raise GridTooLarge(f"grid {format_point(self.bound)} has {cells} cells (cap {cap})")
        self.in_S = S.table_on(self.bound)
        self.in_E = _ideal_table(S, E.generators, self.bound)
        self.in_A = self.in_S & ~self.in_E

    def contains(self, x) -> bool:
        return bool(self.in_A[tuple(x)])


def _normalise_padding(padding, d) -> tuple:
    if isinstance(padding, (int, np.integer)):
        padding = (int(padding),) * d
    padding = tuple(int(p) for p in padding)
    if len(padding) != d:
        raise UsageError(f"padding needs {d} entries")
    if any(p < 1 for p in padding):
        raise UsageError("padding must be at least 1 on each axis")
    return padding


@dataclass
class GridPartition:
    """Levels of the explicit grid points (``0`` outside the complement)."""

    grid: PaddedGrid
    table: np.ndarray
    N: int

    def level(self, x) -> int:
        return int(self.table[tuple(x)])

    def interior(self, gamma) -> np.ndarray:
        return self.table[tuple(slice(0, g + 1) for g in gamma)]


def _partitions_literally(available: list, full: int) -> bool:
    # try every family of at least two pairwise disjoint blocks
    for r in range(2, len(available) + 1):
        for fam in itertools.combinations(available, r):
            union = 0
            ok = True
            for g in fam:
                if union & g:
                    ok = False
                    break
                union |= g
            if ok and union == full:
                return True
    return False


def brute_force_partition(S: GoodSemigroup, E: GoodIdeal, padding=None,
                          cap: int = DEFAULT_GRID_CAP) -> GridPartition:
    """Peel levels off the explicit points of ``A ∩ [0, c_E + padding]``."""
    if padding is None:
        padding = default_padding(E.generators[0]) if E.is_principal else (2,) * S.d
    grid = PaddedGrid(S, E, padding, cap)
    d = S.d
    full = (1 << d) - 1
    bound = np.array(grid.bound, dtype=np.int64)
    pts = box_cells(grid.in_A)
    n = len(pts)
    # strictly above on axis i: larger, or both on the outer face
    lo = np.where(pts < bound, pts + 1, bound)
    rounds = np.full(n, -1, dtype=np.int64)
    remaining = np.ones(n, dtype=bool)
    k = 0
    while remaining.any():
        if k > n:
            raise GridTooLarge("grid peeling did not terminate")
        live = np.zeros(grid.in_A.shape, dtype=bool)
        live[tuple(pts[remaining].T)] = True
        dominated = np.zeros(n, dtype=bool)
        dominated[remaining] = suffix_any(live, range(d))[tuple(lo[remaining].T)]
        top = np.flatnonzero(remaining & ~dominated)
        btab = np.zeros_like(live)
        btab[tuple(pts[top].T)] = True
        index = DeltaIndex(btab)
        hit = np.zeros((len(top), full + 1), dtype=bool)
        for g in range(1, full):
            q = pts[top].copy()
            for i in range(d):
                if g >> i & 1:
                    q[:, i] = lo[top, i]
            hit[:, g] = index.exists(full & ~g, q)
        peel = []
        for r, row in enumerate(hit):
            if not _partitions_literally(np.flatnonzero(row).tolist(), full):
                peel.append(top[r])
        if not peel:
            raise GridTooLarge("grid peeling stalled")
        rounds[peel] = k
        remaining[peel] = False
        k += 1
    N = int(rounds.max()) + 1 if n else 0
    table = np.zeros(grid.in_A.shape, dtype=np.int64)
    table[tuple(pts.T)] = N - rounds
    return GridPartition(grid, table, N)


def naive_partition(points, bound) -> dict:
    """Pure-Python peeling of a finite point set (tail semantics at ``bound``)."""
    pts = [tuple(p) for p in points]
    d = len(bound)
    full = (1 << d) - 1

    def strict(b, a, i):
        return b[i] > a[i] or b[i] == a[i] == bound[i]

    rest = set(pts)
    rounds = []
    while rest:
        B = [a for a in rest if not any(all(strict(b, a, i) for i in range(d)) for b in rest)]
        D = []
        for a in B:
            masks = set()
            for b in B:
                if all(b[i] >= a[i] for i in range(d)):
                    flex = [i for i in range(d) if b[i] == a[i] == bound[i]]
                    must = sum(1 << i for i in range(d) if b[i] > a[i])
                    for r in range(len(flex) + 1):
                        for sub in itertools.combinations(flex, r):
                            g = must | sum(1 << i for i in sub)
                            if 0 < g < full:
                                masks.add(g)
            if not _partitions_literally(sorted(masks), full):
                D.append(a)
        if not D:
            raise GridTooLarge("naive peeling stalled")
        rounds.append(D)
        rest -= set(D)
    N = len(rounds)
    return {p: N - k for k, D in enumerate(rounds) for p in D}


def naive_axiom_violations(d: int, elements) -> set:
    """Axioms broken by a candidate small-element set, by direct enumeration.

    Membership of an arbitrary point is decided by clamping it at the
    coordinatewise maximum of the set.
    """
    P = {tuple(int(v) for v in p) for p in elements}
    c = tuple(max(p[i] for p in P) for i in range(d))
    bad = set()

    def member(x):
        return tuple(min(v, ci) for v, ci in zip(x, c)) in P

    if (0,) * d not in P:
        bad.add("zero")
    if c not in P:
        bad.add("maximum")
    items = sorted(P)
    for a in items:
        for b in items:
            if tuple(map(min, a, b)) not in P:
                bad.add("G1")
            if not member(tuple(x + y for x, y in zip(a, b))):
                bad.add("closure")
    for a, b in itertools.combinations(items, 2):
        for i in range(d):
            if a[i] != b[i]:
                continue
            ok = False
            for e in items:
                # e stands for itself and, on axes where it sits at c, for
                # every larger value
                if not (e[i] > a[i] or e[i] == c[i]):
                    continue
                good = True
                for j in range(d):
                    if j == i:
                        continue
                    m = min(a[j], b[j])
                    if a[j] != b[j]:
                        if e[j] != m:
                            good = False
                            break
                    elif e[j] < m:
                        good = False
                        break
                if good:
                    ok = True
                    break
            if not ok:
                bad.add("G2")
    for i in range(d):
        if c[i] == 0:
            continue
        base = list(c)
        base[i] -= 1
        ranges = [range(v, v + 2) for v in base]
        if all(member(x) for x in itertools.product(*ranges)):
            bad.add("conductor")
    return bad


# numerical semigroups and products


def numerical_semigroup_gaps(generators) -> list:
    """Gaps of the numerical semigroup generated by ``generators``."""
    gens = sorted({int(g) for g in generators if int(g) > 0})
    if not gens or math.gcd(*gens) != 1:
        raise InvalidNumericalSemigroup(f"generators {gens} do not have gcd 1")
    limit = gens[0] * gens[-1] + 1
    inside = [False] * (limit + 1)
    inside[0] = True
    for x in range(1, limit + 1):
        inside[x] = any(x >= g and inside[x - g] for g in gens)
    gaps = [x for x in range(1, limit + 1) if not inside[x]]
    return gaps


def _check_gaps(gaps) -> list:
    gaps = sorted({int(g) for g in gaps})
    if any(g <= 0 for g in gaps):
        raise InvalidNumericalSemigroup("gaps must be positive integers")
    gs = set(gaps)
    top = gaps[-1] if gaps else 0
    members = [x for x in range(top + 1) if x not in gs]
    for a in members:
        for b in members:
            if a + b <= top and a + b in gs:
                raise InvalidNumericalSemigroup(f"{a} + {b} = {a + b} is listed as a gap")
    return gaps


def product_semigroup(gap_lists) -> GoodSemigroup:
    """Product ``N_1 x ... x N_d`` of numerical semigroups given by gaps."""
    axes = []
    for gaps in gap_lists:
        gaps = _check_gaps(gaps)
        c = gaps[-1] + 1 if gaps else 0
        axes.append([x for x in range(c + 1) if x not in set(gaps)])
    if not axes:
        raise UsageError("need at least one factor")
    return from_small_elements(len(axes), itertools.product(*axes))


# random corpora


@dataclass(frozen=True)
class CorpusSpec:
    """Parameters of a reproducible corpus.

    ``kind`` is ``"product"`` or ``"closure"``; ``caps`` bounds the
    conductor on each axis.
    """

    seed: int
    d: int
    count: int = 1
    kind: str = "closure"
    caps: tuple = ()
    generators: int = 3
    nonlocal_rate: float = 0.15
    max_tries: int = 200

    def resolved_caps(self) -> tuple:
        caps = self.caps or ((8,) * self.d if self.d <= 2 else (6,) * self.d)
        if len(caps) != self.d:
            raise UsageError(f"caps need {self.d} entries")
        return tuple(int(c) for c in caps)


def _random_numerical(rng, cap: int) -> list:
    for _ in range(100):
        m = int(rng.integers(2, max(3, cap // 2 + 2)))
        k = int(rng.integers(1, 3))
        gens = [m] + [int(g) for g in rng.integers(m + 1, 2 * m + 2, size=k)]
        if math.gcd(*gens) != 1:
            continue
        gaps = numerical_semigroup_gaps(gens)
        if gaps and gaps[-1] + 1 <= cap:
            return gaps
    return [1]


def _close(table: np.ndarray) -> np.ndarray:
    """Close a clamped table under sums, meets and G2 lifts."""
    bound = np.array(table.shape) - 1
    while True:
        before = int(table.sum())
        cells = box_cells(table)
        s = np.minimum(cells[:, None, :] + cells[None, :, :], bound)
        table[tuple(np.moveaxis(s, -1, 0))] = True
        cells = box_cells(table)
        m = np.minimum(cells[:, None, :], cells[None, :, :])
        table[tuple(np.moveaxis(m, -1, 0))] = True
        if int(table.sum()) != before:
            continue
        w = _axioms.g2_failure(box_cells(table), DeltaIndex(table))
        if w is None:
            return table
        a, b, i = w
        eps = [min(x, y) for x, y in zip(a, b)]
        eps[i - 1] = min(a[i - 1] + 1, int(bound[i - 1]))
        table[tuple(eps)] = True


def _crop_to_conductor(table: np.ndarray) -> np.ndarray:
    c = _axioms.ideal_conductor(table)
    return np.ascontiguousarray(table[tuple(slice(0, v + 1) for v in c)])


def random_good_semigroup(spec: CorpusSpec, index: int = 0) -> GoodSemigroup:
    """One validated good semigroup, reproducible from ``(spec.seed, index)``."""
    if spec.kind not in ("product", "closure"):
        raise UsageError(f"unknown generator kind {spec.kind!r}")
    if spec.d < 1:
        raise UsageError("dimension must be positive")
    caps = spec.resolved_caps()
    rng = np.random.default_rng([int(spec.seed), int(index), spec.d])
    for _ in range(spec.max_tries):
        if spec.kind == "product":
            S = product_semigroup([_random_numerical(rng, c) for c in caps])
        else:
            table = np.zeros(tuple(c + 1 for c in caps), dtype=bool)
            table[(0,) * spec.d] = True
            table[tuple(caps)] = True
            for _g in range(spec.generators):
                v = [int(rng.integers(1, c + 1)) if c else 0 for c in caps]
                if spec.d > 1 and rng.random() < spec.nonlocal_rate:
                    v[int(rng.integers(spec.d))] = 0
                table[tuple(v)] = True
            table = _crop_to_conductor(_close(table))
            if table.size == 1:
                continue
            report = check_table(table)
            if not report.ok:
                continue
            S = _from_table(table)
        if len(S.small) > 1 and S.validate().ok:
            return S
    raise GenerationExhausted(f"no good semigroup after {spec.max_tries} samples")


def generate_corpus(spec: CorpusSpec) -> list:
    return [random_good_semigroup(spec, i) for i in range(spec.count)]


def write_corpus(spec: CorpusSpec, out_dir) -> list:
    """Write ``<seed>-<index>.gs`` files and return their paths."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = []
    for i, S in enumerate(generate_corpus(spec)):
        p = out / f"{spec.seed}-{i}.gs"
        p.write_text(format_semigroup(S), encoding="utf-8")
        paths.append(p)
    return paths
