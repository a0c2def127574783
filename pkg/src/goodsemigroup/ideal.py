"""Good ideals of a good semigroup and the representatives of their complement.

The complement ``A = S \\ E`` is infinite, but it is constant along every ray
leaving the ideal conductor box.  Each point of ``S \\ E ∩ [0, c_E]`` is
therefore turned into a representative by writing ``inf`` on the
coordinates that reach ``c_E``; the representative stands for the whole
ray, plane, ... of points above it in those directions.
"""

from __future__ import annotations

from typing import Iterable

import numpy as np

from . import _axioms
from ._box import DeltaIndex, box_cells
from .exceptions import (
    NotGoodIdeal,
    NotInComplement,
    NotInSemigroup,
    NotProper,
    UsageError,
    ZeroGenerator,
)
from .lattice import INF, check_point, format_point
from .semigroup import GoodSemigroup, _check_cells

__all__ = [
    "GoodIdeal",
    "ComplementSet",
    "principal_ideal",
    "ideal_from_generators",
    "complement",
    "cells_to_reps",
    "reps_to_cells",
]


def cells_to_reps(cells: np.ndarray, conductor) -> list:
    """Box cells to representatives: a coordinate equal to the conductor
    becomes ``INF``."""
    out = []
    for row in cells:
        out.append(tuple(INF if v == c else int(v) for v, c in zip(row, conductor)))
    return out


def reps_to_cells(reps, conductor) -> np.ndarray:
    arr = np.array([[c if v is INF else v for v, c in zip(r, conductor)] for r in reps],
                   dtype=np.int64)
    return arr.reshape(-1, len(conductor))


class GoodIdeal:
    """A good ideal ``E`` of ``parent`` with conductor ``c_E``.

    ``truncated`` is ``E ∩ [0, c_E]``; a point ``x`` lies in ``E`` iff
    ``min(x, c_E)`` does.
    """

    def __init__(self, parent: GoodSemigroup, generators: tuple, conductor: tuple,
                 table: np.ndarray):
        self.parent = parent
        self.generators = generators
        self.conductor = conductor
        self.gamma = tuple(v - 1 for v in conductor)
        self._table = table
        self._table.setflags(write=False)
        self._index = None
        self._complement = None

    @property
    def d(self) -> int:
        return self.parent.d

    @property
    def is_principal(self) -> bool:
        return len(self.generators) == 1

    @property
    def truncated(self) -> frozenset:
        return frozenset(tuple(int(v) for v in p) for p in box_cells(self._table))

    @property
    def index(self) -> DeltaIndex:
        if self._index is None:
            self._index = DeltaIndex(self._table)
        return self._index

    def __repr__(self):
        gens = " ".join(format_point(g) for g in self.generators)
        return f"GoodIdeal(generators={gens}, conductor={format_point(self.conductor)})"

    def contains(self, a) -> bool:
        a = check_point(a, self.d, finite=True)
        return bool(self._table[tuple(min(x, c) for x, c in zip(a, self.conductor))])

    __contains__ = contains

    def complement_table(self) -> np.ndarray:
        """``S \\ E`` on the box ``[0, c_E]``."""
        return self.parent.table_on(self.conductor) & ~self._table

    def canonical_representative(self, a) -> tuple:
        """Representative of the complement point ``a`` (ints and ``INF``).

        ``INF`` coordinates are read as "as large as needed".
        """
        a = check_point(a, self.d)
        cell = tuple(c if x is INF else min(x, c) for x, c in zip(a, self.conductor))
        if not self.complement_table()[cell]:
            raise NotInComplement(f"{format_point(a)} is not in S minus E")
        return tuple(INF if v == c else v for v, c in zip(cell, self.conductor))

    def complement(self) -> "ComplementSet":
        if self._complement is None:
            self._complement = ComplementSet(self)
        return self._complement

    def validate(self):
        """Axiom report for ``E ∩ [0, c_E]``: G1, G2, and ``E + S ⊆ E``."""
        from .semigroup import AxiomCheck, ValidationReport

        cells = box_cells(self._table)
        checks = []
        w = _axioms.g1_failure(cells, self._table)
        checks.append(AxiomCheck("G1", w is None, w))
        w = _axioms.g2_failure(cells, self.index)
        checks.append(AxiomCheck("G2", w is None, w))
        w = _axioms.closure_failure(cells, self.parent.cells, self._table, symmetric=False)
        checks.append(AxiomCheck("closure", w is None, w))
        inside = bool((self.parent.table_on(self.conductor) | ~self._table).all())
        checks.append(AxiomCheck("subset", inside))
        w = _axioms.conductor_failure(self._table)
        checks.append(AxiomCheck("conductor", w is None, w))
        return ValidationReport(tuple(checks))


class ComplementSet:
    """Representatives of ``S \\ E``, stored sorted with ``INF`` last."""

    def __init__(self, ideal: GoodIdeal):
        self.ideal = ideal
        self.cells = box_cells(ideal.complement_table())
        self.reps = tuple(cells_to_reps(self.cells, ideal.conductor))
        self._set = frozenset(self.reps)

    def __len__(self):
        return len(self.reps)

    def __iter__(self):
        return iter(self.reps)

    def __contains__(self, a):
        return tuple(a) in self._set

    def __repr__(self):
        return f"ComplementSet({len(self.reps)} representatives)"

    def to_text(self) -> str:
        return "".join(format_point(r) + "\n" for r in self.reps)


def _ideal_table(S: GoodSemigroup, gens, bound) -> np.ndarray:
    table = np.zeros(tuple(b + 1 for b in bound), dtype=bool)
    for g in gens:
        if any(gi > bi for gi, bi in zip(g, bound)):
            continue
        sub = S.table_on(tuple(b - gi for b, gi in zip(bound, g)))
        region = tuple(slice(gi, None) for gi in g)
        table[region] |= sub
    return table


def _check_generators(S: GoodSemigroup, gens) -> tuple:
    pts = []
    for g in gens:
        g = check_point(g, S.d, finite=True)
        if not S.contains(g):
            raise NotInSemigroup(f"{format_point(g)} is not in the semigroup")
        pts.append(g)
    if not pts:
        raise UsageError("an ideal needs at least one generator")
    return tuple(sorted(set(pts)))


def principal_ideal(S: GoodSemigroup, w) -> GoodIdeal:
    """``E = w + S`` with conductor ``c + w``."""
    (w,) = _check_generators(S, [w])
    if not any(w):
        raise ZeroGenerator("the zero vector generates the whole semigroup")
    bound = tuple(c + x for c, x in zip(S.conductor, w))
    _check_cells(bound)
    return GoodIdeal(S, (w,), bound, _ideal_table(S, [w], bound))


def ideal_from_generators(S: GoodSemigroup, gens: Iterable) -> GoodIdeal:
    """The ideal ``⋃ (g + S)``, validated for G1 and G2.

    Raises :class:`NotProper` when the union is all of ``S`` and
    :class:`NotGoodIdeal` (with ``axiom`` and ``witness``) when it is not good.
    """
    gens = _check_generators(S, gens)
    if any(not any(g) for g in gens):
        raise NotProper("a generator is zero, so the ideal is the whole semigroup")
    big = tuple(max(c + g[i] for g in gens) for i, c in enumerate(S.conductor))
    _check_cells(big)
    table = _ideal_table(S, gens, big)
    if (table == S.table_on(big)).all():
        raise NotProper("the generators produce the whole semigroup")
    # membership is only known to be clamp-constant beyond ``big``
    cells = box_cells(table)
    w = _axioms.g1_failure(cells, table)
    if w is not None:
        raise _not_good("G1", f"meet of {format_point(w[0])} and {format_point(w[1])} is missing", w)
    w = _axioms.g2_failure(cells, DeltaIndex(table))
    if w is not None:
        raise _not_good("G2", f"no lifting element for {format_point(w[0])}, "
                        f"{format_point(w[1])} at index {w[2]}", w)
    conductor = _axioms.ideal_conductor(table)
    if conductor is None:  # pragma: no cover - G1 makes the full-cone set meet-closed
        raise _not_good("conductor", "no least conductor", None)
    table = np.ascontiguousarray(table[tuple(slice(0, c + 1) for c in conductor)])
    return GoodIdeal(S, gens, conductor, table)


def _not_good(axiom, message, witness) -> NotGoodIdeal:
    err = NotGoodIdeal(f"ideal fails {axiom}: {message}", witness)
    err.axiom = axiom
    return err


def complement(E: GoodIdeal) -> ComplementSet:
    return E.complement()
