"""Good semigroups of N^d stored through their small elements.

A good semigroup is determined by its conductor ``c`` and the finite set
``S ∩ [0, c]``: a point ``x`` belongs to ``S`` iff ``min(x, c)`` is one of
the small elements.  Internally the small elements live in a boolean
numpy table indexed by ``[0, c]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

import numpy as np

from . import _axioms
from ._box import DeltaIndex, box_cells, clamp_table
from .exceptions import (
    ConductorNotMinimal,
    G1Violation,
    G2Violation,
    GridTooLarge,
    MissingZero,
    NoUniqueMaximum,
    NotAMonoid,
    UsageError,
)
from .lattice import check_point, format_point, meet_all, parse_point

__all__ = [
    "GoodSemigroup",
    "AxiomCheck",
    "ValidationReport",
    "from_small_elements",
    "contains",
    "minimal_nonzero",
    "validate",
    "check_small_elements",
    "parse_semigroup",
    "format_semigroup",
    "load_semigroup",
    "save_semigroup",
    "MAX_DIMENSION",
    "MAX_CELLS",
]

MAX_DIMENSION = 16
MAX_CELLS = 4_000_000

AXIOM_ORDER = ("zero", "maximum", "G1", "closure", "G2", "conductor")

_ERRORS = {
    "zero": MissingZero,
    "maximum": NoUniqueMaximum,
    "G1": G1Violation,
    "closure": NotAMonoid,
    "G2": G2Violation,
    "conductor": ConductorNotMinimal,
}


def _check_dimension(d) -> int:
    if isinstance(d, bool) or not isinstance(d, (int, np.integer)):
        raise UsageError(f"dimension must be an integer, got {d!r}")
    d = int(d)
    if not 1 <= d <= MAX_DIMENSION:
        raise UsageError(f"dimension must lie in 1..{MAX_DIMENSION}, got {d}")
    return d


def _check_cells(bound) -> None:
    cells = 1
    for b in bound:
        cells *= int(b) + 1
    if cells > MAX_CELLS:
        raise GridTooLarge(f"box {format_point(bound)} has {cells} cells (cap {MAX_CELLS})")


def _describe(axiom, witness) -> str:
    if axiom == "zero":
        return "the zero vector is missing"
    if axiom == "maximum":
        return "no unique maximum; maximal elements " + " ".join(map(format_point, witness))
    if axiom == "G1":
        a, b = witness
        return f"meet of {format_point(a)} and {format_point(b)} is missing"
    if axiom == "closure":
        a, b = witness
        return f"sum of {format_point(a)} and {format_point(b)} is missing"
    if axiom == "G2":
        a, b, i = witness
        return f"no lifting element for {format_point(a)}, {format_point(b)} at index {i}"
    if axiom == "conductor":
        return f"conductor is not minimal along index {witness}"
    return str(witness)


@dataclass(frozen=True)
class AxiomCheck:
    axiom: str
    passed: bool
    witness: object = None

    @property
    def message(self) -> str:
        return "pass" if self.passed else _describe(self.axiom, self.witness)


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple
    local: bool | None = None

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def first_failure(self) -> AxiomCheck | None:
        return next((c for c in self.checks if not c.passed), None)

    def __getitem__(self, axiom: str) -> AxiomCheck:
        for c in self.checks:
            if c.axiom == axiom:
                return c
        raise KeyError(axiom)

    def raise_for_failure(self) -> None:
        bad = self.first_failure
        if bad is not None:
            raise _ERRORS[bad.axiom](f"{bad.axiom}: {bad.message}", bad.witness)

    def to_text(self) -> str:
        lines = []
        for c in self.checks:
            lines.append(f"{c.axiom}: {'pass' if c.passed else 'FAIL ' + c.message}")
        if self.local is not None:
            lines.append(f"local: {'true' if self.local else 'false'}")
        lines.append("result: " + ("PASS" if self.ok else "FAIL"))
        return "\n".join(lines) + "\n"


def _table_from_points(points: np.ndarray, bound) -> np.ndarray:
    table = np.zeros(tuple(int(b) + 1 for b in bound), dtype=bool)
    if len(points):
        table[tuple(points.T)] = True
    return table


def _is_local(small: frozenset, conductor: tuple) -> bool:
    d = len(conductor)
    if d > 1 and any(v == 0 for v in conductor):
        return False
    return not any(any(v == 0 for v in p) for p in small if any(p))


def check_table(table: np.ndarray, *, zero_present: bool = True,
                maximum_witness=None) -> ValidationReport:
    """Run every axiom on a clamped membership table."""
    cells = box_cells(table)
    checks = [
        AxiomCheck("zero", zero_present),
        AxiomCheck("maximum", maximum_witness is None, maximum_witness),
    ]
    w = _axioms.g1_failure(cells, table)
    checks.append(AxiomCheck("G1", w is None, w))
    w = _axioms.closure_failure(cells, cells, table, symmetric=True)
    checks.append(AxiomCheck("closure", w is None, w))
    w = _axioms.g2_failure(cells, DeltaIndex(table))
    checks.append(AxiomCheck("G2", w is None, w))
    w = _axioms.conductor_failure(table)
    checks.append(AxiomCheck("conductor", w is None, w))
    return ValidationReport(tuple(checks))


def check_small_elements(d: int, elements: Iterable, conductor=None) -> ValidationReport:
    """Validate a candidate small-element list without building a semigroup."""
    d = _check_dimension(d)
    pts = {check_point(p, d, finite=True) for p in elements}
    if not pts:
        raise UsageError("empty element list")
    arr = np.array(sorted(pts), dtype=np.int64)
    top = tuple(int(v) for v in arr.max(axis=0))
    max_witness = None
    if top not in pts:
        maximal = [p for p in sorted(pts)
                   if not any(q != p and all(x <= y for x, y in zip(p, q)) for q in pts)]
        max_witness = tuple(maximal)
    elif conductor is not None:
        conductor = check_point(conductor, d, finite=True)
        if conductor != top:
            max_witness = (conductor, top)
    _check_cells(top)
    table = _table_from_points(arr, top)
    report = check_table(table, zero_present=(0,) * d in pts, maximum_witness=max_witness)
    local = _is_local(frozenset(pts), top) if report.ok else None
    return ValidationReport(report.checks, local)


class GoodSemigroup:
    """A validated good semigroup.

    Build instances with :func:`from_small_elements`, :func:`parse_semigroup`
    or the generators in :mod:`goodsemigroup.oracle`.
    """

    __slots__ = ("d", "small", "conductor", "gamma", "_table", "_index", "_cells")

    def __init__(self, d: int, small: frozenset, conductor: tuple, table: np.ndarray):
        self.d = d
        self.small = small
        self.conductor = conductor
        self.gamma = tuple(v - 1 for v in conductor)
        self._table = table
        self._table.setflags(write=False)
        self._index = None
        self._cells = None

    def __repr__(self):
        return f"GoodSemigroup(d={self.d}, conductor={format_point(self.conductor)}, small={len(self.small)})"

    def __eq__(self, other):
        return (isinstance(other, GoodSemigroup) and self.d == other.d
                and self.conductor == other.conductor and self.small == other.small)

    def __hash__(self):
        return hash((self.d, self.conductor, self.small))

    @property
    def is_local(self) -> bool:
        return _is_local(self.small, self.conductor)

    @property
    def index(self) -> DeltaIndex:
        if self._index is None:
            self._index = DeltaIndex(self._table)
        return self._index

    @property
    def cells(self) -> np.ndarray:
        if self._cells is None:
            self._cells = box_cells(self._table)
        return self._cells

    def table_on(self, bound) -> np.ndarray:
        """Membership table on ``[0, bound]`` for any finite ``bound``."""
        return clamp_table(self._table, bound)

    def contains(self, a) -> bool:
        a = check_point(a, self.d, finite=True)
        return bool(self._table[tuple(min(x, c) for x, c in zip(a, self.conductor))])

    __contains__ = contains

    def minimal_nonzero(self):
        if not self.is_local:
            return None
        nonzero = [p for p in self.small if any(p)]
        if not nonzero:
            return (1,)
        return meet_all(nonzero)

    def validate(self) -> ValidationReport:
        return check_small_elements(self.d, self.small)

    def to_text(self) -> str:
        return format_semigroup(self)


def from_small_elements(d: int, elements: Iterable, conductor=None) -> GoodSemigroup:
    """Validate ``elements`` as the small elements of a good semigroup.

    Raises the :class:`~goodsemigroup.exceptions.AxiomViolation` subclass of
    the first failing axiom, in the order zero, maximum, G1, closure, G2,
    conductor.
    """
    d = _check_dimension(d)
    elements = list(elements)
    report = check_small_elements(d, elements, conductor)
    report.raise_for_failure()
    pts = frozenset(check_point(p, d, finite=True) for p in elements)
    top = tuple(max(p[i] for p in pts) for i in range(d))
    table = _table_from_points(np.array(sorted(pts), dtype=np.int64), top)
    return GoodSemigroup(d, pts, top, table)


def _from_table(table: np.ndarray) -> GoodSemigroup:
    """Trusted constructor for tables already known to be good."""
    cells = box_cells(table)
    small = frozenset(tuple(int(v) for v in p) for p in cells)
    return GoodSemigroup(table.ndim, small, tuple(int(v) - 1 for v in table.shape), table.copy())


def contains(S: GoodSemigroup, a) -> bool:
    return S.contains(a)


def minimal_nonzero(S: GoodSemigroup):
    return S.minimal_nonzero()


def validate(S: GoodSemigroup) -> ValidationReport:
    return S.validate()


def parse_semigroup(text: str, *, validate: bool = True):
    """Parse the text format.  Returns a :class:`GoodSemigroup`.

    With ``validate=False`` returns ``(d, points, conductor_or_None)``
    instead, so that broken inputs can still be reported on.
    """
    d = None
    conductor = None
    points = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if d is None:
            head = line.split()
            if len(head) != 2 or head[0] != "d" or not head[1].isdigit():
                raise UsageError(f"line {lineno}: expected 'd <dimension>'")
            d = _check_dimension(int(head[1]))
            continue
        if line.startswith("c"):
            if conductor is not None or points:
                raise UsageError(f"line {lineno}: conductor line must precede the points")
            conductor = parse_point(line[1:], d)
            continue
        points.append(parse_point(line, d))
    if d is None:
        raise UsageError("missing 'd <dimension>' header")
    if not points:
        raise UsageError("no elements listed")
    if not validate:
        return d, points, conductor
    return from_small_elements(d, points, conductor)


def format_semigroup(S: GoodSemigroup) -> str:
    lines = [f"d {S.d}", f"c {format_point(S.conductor)}"]
    lines += [format_point(p) for p in sorted(S.small)]
    return "\n".join(lines) + "\n"


def load_semigroup(path) -> GoodSemigroup:
    return parse_semigroup(Path(path).read_text(encoding="utf-8"))


def save_semigroup(S: GoodSemigroup, path) -> None:
    Path(path).write_text(format_semigroup(S), encoding="utf-8")
