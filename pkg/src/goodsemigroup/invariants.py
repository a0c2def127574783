"""Structural invariants of good semigroups, ideals and level partitions.

Each check enumerates every applicable tuple on a finite window and
returns the tuples that break the statement.  Points are taken from
``[0, c_E]`` (``[0, c_E + 1]`` for points above them); membership and
levels are constant beyond ``c_E``, so existence questions about the
infinite sets are answered exactly by clamped table lookups.

Use :func:`run_suite` for everything at once.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from ._box import DeltaIndex, box_cells, clamp_table
from .ideal import GoodIdeal, cells_to_reps
from .lattice import INF
from .levels import LevelPartition, _partition_masks, propG2_decomposition
from .oracle import brute_force_partition
from .semigroup import GoodSemigroup

__all__ = ["CheckResult", "SuiteReport", "run_suite", "CHECKS"]

_MAX_REPORTED = 20


@dataclass
class CheckResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, ok: bool, witness) -> None:
        self.checked += 1
        if not ok and len(self.failures) < _MAX_REPORTED:
            self.failures.append(witness)

    def merge(self, other: "CheckResult") -> None:
        self.checked += other.checked
        room = _MAX_REPORTED - len(self.failures)
        self.failures.extend(other.failures[:max(room, 0)])


@dataclass
class SuiteReport:
    results: dict

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results.values())

    def merge(self, other: "SuiteReport") -> None:
        for name, r in other.results.items():
            if name in self.results:
                self.results[name].merge(r)
            else:
                self.results[name] = r

    def to_text(self) -> str:
        lines = []
        for name in sorted(self.results):
            r = self.results[name]
            state = "ok" if r.ok else f"{len(r.failures)} counterexamples, e.g. {r.failures[0]}"
            lines.append(f"{name}: {r.checked} tuples, {state}")
        return "\n".join(lines) + "\n"


def _bits(mask: int, d: int) -> list:
    return [i for i in range(d) if mask >> i & 1]


def _pt(x) -> tuple:
    return tuple(int(v) for v in x)


def _prefix_any(table: np.ndarray) -> np.ndarray:
    out = table
    for ax in range(table.ndim):
        out = np.logical_or.accumulate(out, axis=ax)
    return out


def _minimal_cells(table: np.ndarray) -> np.ndarray:
    """Marked cells with no other marked cell below them."""
    pre = _prefix_any(table)
    blocked = np.zeros_like(table)
    for ax in range(table.ndim):
        sl_dst = [slice(None)] * table.ndim
        sl_src = [slice(None)] * table.ndim
        sl_dst[ax] = slice(1, None)
        sl_src[ax] = slice(0, -1)
        blocked[tuple(sl_dst)] |= pre[tuple(sl_src)]
    return table & ~blocked


class _Window:
    """Clamped tables of ``S``, ``E``, ``A`` and the level map on
    ``[0, bound]``, ``bound = c + 1`` for the relevant conductor ``c``."""

    def __init__(self, S: GoodSemigroup, ideal_table: np.ndarray, conductor, levels=None):
        self.d = S.d
        self.full = (1 << self.d) - 1
        self.c = np.array(conductor, dtype=np.int64)
        self.bound = self.c + 1
        self.S = S.table_on(self.bound)
        self.E = clamp_table(ideal_table, self.bound)
        self.A = self.S & ~self.E
        self.lev = None if levels is None else clamp_table(levels, self.bound)
        self.N = 0 if levels is None else int(levels.max())
        self._idx = {}

    def index(self, key) -> DeltaIndex:
        ix = self._idx.get(key)
        if ix is None:
            if key == "S":
                t = self.S
            elif key == "E":
                t = self.E
            elif key == "A":
                t = self.A
            elif key == "notE":
                t = ~self.E
            elif key[0] == "lev":
                t = self.lev == key[1]
            elif key[0] == "levge":
                t = self.lev >= key[1]
            else:
                raise KeyError(key)
            ix = self._idx[key] = DeltaIndex(t)
        return ix

    def window_points(self, table) -> np.ndarray:
        """Marked cells of ``table`` inside ``[0, c]``."""
        return box_cells(table[tuple(slice(0, int(v) + 1) for v in self.c)])

    def open_delta(self, key, fixed: int, pts: np.ndarray) -> np.ndarray:
        lo = np.minimum(pts + 1, self.bound)
        cols = _bits(fixed, self.d)
        lo[:, cols] = pts[:, cols]
        return self.index(key).exists(fixed, lo)

    def closed_delta(self, key, fixed: int, pts: np.ndarray) -> np.ndarray:
        out = np.zeros(len(pts), dtype=bool)
        for g in range(self.full):
            if g & fixed == fixed:
                out |= self.open_delta(key, g, pts)
        return out

    def level_of(self, pts: np.ndarray) -> np.ndarray:
        return self.lev[tuple(np.minimum(pts, self.bound).T)]

    def successors(self, table: np.ndarray, a) -> np.ndarray:
        """Points of ``table`` consecutive above ``a`` (no marked point strictly
        between)."""
        a = np.asarray(a)
        sl = tuple(slice(int(v), None) for v in a)
        sub = table[sl].copy()
        sub[(0,) * self.d] = False
        return box_cells(_minimal_cells(sub)) + a


# set-level checks on explicit reference sets


def _encode(points, d) -> np.ndarray:
    big = 1 << 40
    return np.array([[big if v is INF else v for v in p] for p in points],
                    dtype=np.int64).reshape(-1, d)


def _delta_matrix(R: np.ndarray, d: int):
    """``open[F][a, b]``: ``R[b]`` in the open set of ``R[a]`` for agreement
    set ``F``; ``closed`` likewise for the closed variant."""
    eq = R[:, None, :] == R[None, :, :]
    gt = R[None, :, :] > R[:, None, :]
    ge = gt | eq
    same = eq.all(axis=-1)
    full = (1 << d) - 1
    opened, closed = {}, {}
    for F in range(full + 1):
        inF = np.array([F >> i & 1 for i in range(d)], dtype=bool)
        opened[F] = (eq[..., inF].all(axis=-1) & gt[..., ~inF].all(axis=-1))
        closed[F] = (eq[..., inF].all(axis=-1) & ge[..., ~inF].all(axis=-1) & ~same)
    return opened, closed


def check_reference_sets(points, d: int, res: dict) -> None:
    """Agreement-set identities that hold for any reference set."""
    R = _encode(sorted(points), d)
    if len(R) > 400:
        R = R[:400]
    full = (1 << d) - 1
    opened, closed = _delta_matrix(R, d)
    r1 = res.setdefault("closed_set_is_union", CheckResult("closed_set_is_union"))
    for F in range(full):
        union = np.zeros_like(closed[F])
        for G in range(full):
            if G & F == F:
                union |= opened[G]
        bad = np.argwhere(union != closed[F])
        r1.checked += len(R)
        for a, b in bad[:3]:
            r1.record(False, (F, _pt(R[a]), _pt(R[b])))
    r2 = res.setdefault("closed_set_monotone", CheckResult("closed_set_monotone"))
    for F in range(full + 1):
        for G in range(full + 1):
            if G & F != F:
                continue
            ok = not (closed[G] & ~closed[F]).any()
            r2.record(ok, (F, G))
    r3 = res.setdefault("delta_nesting", CheckResult("delta_nesting"))
    for F in range(full):
        for a, t in np.argwhere(opened[F]):
            for G in range(full):
                if G & F != F:
                    continue
                ok = not (closed[G][t] & ~opened[F][a]).any()
                r3.record(ok, (F, G, _pt(R[a]), _pt(R[t])))


def check_full_box_monotone(d: int, side: int, res: dict) -> None:
    """Inclusion of closed sets characterises inclusion of index sets when
    the reference set is a whole box."""
    pts = list(itertools.product(range(side), repeat=d))
    R = np.array(pts, dtype=np.int64)
    full = (1 << d) - 1
    _, closed = _delta_matrix(R, d)
    r = res.setdefault("closed_set_monotone_box", CheckResult("closed_set_monotone_box"))
    for F in range(full + 1):
        for G in range(full + 1):
            sub = not (closed[G] & ~closed[F]).any()
            r.record(sub == (G & F == F), (F, G))


# ideal checks: S itself and proper ideals


def check_ideal(win: _Window, S: GoodSemigroup, ideal, res: dict, tag: str) -> None:
    d, full = win.d, win.full
    pts = win.window_points(win.E)

    def R(name):
        return res.setdefault(name, CheckResult(name))

    nonempty = {F: win.open_delta("E", F, pts) for F in range(full)}

    r = R("ideal_lift_exists")
    for F in range(1, full):
        hit = nonempty[F]
        lifted = win.closed_delta("E", full & ~F, pts[hit])
        for p, ok in zip(pts[hit], lifted):
            r.record(bool(ok), (tag, F, _pt(p)))

    r = R("empty_chain_forces_empty")
    for F in range(1, full):
        for i in range(d):
            H = full & ~(1 << i)
            if H & F != F:
                continue
            chain = np.zeros(len(pts), dtype=bool)
            for G in range(full):
                if G & F == F and G & H == G:
                    chain |= nonempty[G]
            app = ~chain
            Fh = full & ~F
            for p, ok in zip(pts[app], ~nonempty[Fh][app]):
                r.record(bool(ok), (tag, F, i + 1, _pt(p)))

    r = R("empty_split")
    for F in range(full):
        subs = [G for G in range(F + 1) if G & F == G]
        for G1 in subs:
            for G2 in subs:
                if G1 | G2 != F or G1 > G2:
                    continue
                app = ~nonempty[F]
                ok = ~nonempty[G1][app] | ~nonempty[G2][app]
                for p, o in zip(pts[app], ok):
                    r.record(bool(o), (tag, F, G1, G2, _pt(p)))

    r = R("empty_above_forces_empty_below")
    for F in range(full):
        above = np.zeros(len(pts), dtype=bool)
        for H in range(full):
            if H & F == F and H != F:
                above |= nonempty[H]
        app = ~above
        Fh = full & ~F
        for H in range(1, full):
            if H & Fh == H and H != Fh:
                for p, o in zip(pts[app], ~nonempty[H][app]):
                    r.record(bool(o), (tag, F, H, _pt(p)))

    r = R("maximal_delta_dichotomy")
    for k, p in enumerate(pts):
        live = [F for F in range(full) if nonempty[F][k]]
        maximal = [F for F in live if not any(G != F and G & F == F for G in live)]
        for F in maximal:
            Fh = full & ~F
            for H in live:
                r.record(H & F == H or H & Fh == Fh, (tag, F, H, _pt(p)))

    r = R("meet_of_deltas")
    cells = box_cells(win.E)
    for p in pts:
        up = cells[(cells >= p).all(axis=1) & (cells != p).any(axis=1)]
        if not len(up):
            continue
        m = np.minimum(up[:, None, :], up[None, :, :])
        eqF = up == p
        union = eqF[:, None, :] | eqF[None, :, :]
        in_E = win.E[tuple(np.moveaxis(m, -1, 0))]
        pattern = (m == p) == union
        strict = (m > p) | union
        is_center = union.all(axis=-1)
        ok = in_E & pattern.all(axis=-1) & strict.all(axis=-1)
        ok &= np.where(is_center, (m == p).all(axis=-1), True)
        r.checked += ok.size
        for a, b in np.argwhere(~ok)[:3]:
            r.failures.append((tag, _pt(p), _pt(up[a]), _pt(up[b])))

    r = R("consecutive_blocks_supersets")
    for k, p in enumerate(pts):
        for b in win.successors(win.E, p):
            if (b > p).all():
                continue
            F = sum(1 << i for i in range(d) if b[i] == p[i])
            for H in range(full):
                if H & F == F and H != F:
                    r.record(not nonempty[H][k], (tag, F, H, _pt(p), _pt(b)))

    r = R("g2_decomposition")
    for k, p in enumerate(pts):
        for F in range(1, full):
            if not nonempty[F][k]:
                continue
            lo = np.minimum(p + 1, win.bound)
            cols = _bits(F, d)
            lo[cols] = p[cols]
            b = win.index("E").first(F, lo)
            try:
                w = propG2_decomposition(ideal, _pt(p), _pt(b))
                ok = _valid_decomposition(w, ideal, F, d)
            except Exception as exc:  # reported, not raised
                ok = False
                b = (b, repr(exc))
            r.record(ok, (tag, F, _pt(p), b))


def _valid_decomposition(w, ref, F: int, d: int) -> bool:
    full = (1 << d) - 1
    parts = w.parts
    if len(parts) < 2:
        return False
    Fh = {i + 1 for i in range(d) if not F >> i & 1}
    inter = set(range(1, d + 1))
    for q, agree in parts:
        if not ref.contains(q):
            return False
        if agree == frozenset(range(1, d + 1)) or not agree:
            return False
        for i in range(d):
            if (i + 1 in agree) != (q[i] == w.center[i]) or q[i] < w.center[i]:
                return False
        inter &= set(agree)
    for (q1, _), (q2, _) in itertools.combinations(parts, 2):
        if tuple(map(min, q1, q2)) != w.center:
            return False
    extra = [set(agree) for _, agree in parts[1:]]
    if not all(Fh <= g for g in extra):
        return False
    return not inter and set.intersection(*extra) == Fh and full > 0


def check_ideal_membership(win: _Window, res: dict, tag: str) -> None:
    """Rays leaving the conductor box are inside or outside as a whole."""
    d, full = win.d, win.full
    r = res.setdefault("conductor_ray_membership", CheckResult("conductor_ray_membership"))
    box = np.argwhere(np.ones(tuple(int(v) + 1 for v in win.c), dtype=bool))
    for F in range(1, full):
        cols = _bits(F, d)
        rest = [i for i in range(d) if i not in cols]
        sel = (box[:, cols] == win.c[cols]).all(axis=1) & (box[:, rest] < win.c[rest]).all(axis=1)
        pts = box[sel]
        if not len(pts):
            continue
        Fh = full & ~F
        member = win.E[tuple(pts.T)]
        all_in = ~win.closed_delta("notE", Fh, pts)
        some_in = win.closed_delta("E", Fh, pts)
        for p, a, b, c in zip(pts, member, all_in, some_in):
            r.record(bool(a == b == c), (tag, F, _pt(p)))


def check_complement_orthogonal(win: _Window, res: dict) -> None:
    full = win.full
    r = res.setdefault("complement_orthogonal_empty", CheckResult("complement_orthogonal_empty"))
    pts = win.window_points(win.A)
    for F in range(full):
        hit = win.open_delta("E", F, pts)
        bad = win.closed_delta("E", full & ~F, pts[hit])
        for p, b in zip(pts[hit], bad):
            r.record(not b, (F, _pt(p)))


# level checks


def _availability(win: _Window, key, pts) -> np.ndarray:
    full = win.full
    avail = np.zeros((len(pts), full + 1), dtype=bool)
    for g in range(1, full):
        avail[:, g] = win.open_delta(key, full & ~g, pts)
    return avail


def _partitionable(row, full) -> bool:
    return _partition_masks(frozenset(np.flatnonzero(row).tolist()), full) is not None


def check_levels(win: _Window, P: LevelPartition, S: GoodSemigroup, res: dict) -> None:
    d, full, N = win.d, win.full, win.N

    def R(name):
        return res.setdefault(name, CheckResult(name))

    Apts = win.window_points(win.A)
    lev = win.level_of(Apts)

    # dominated by the next level, or a complete infimum using it
    r = R("dominated_or_infimum")
    availA = _availability(win, "A", Apts)
    for i in range(1, N):
        sel = lev == i
        pts = Apts[sel]
        dom = win.open_delta(("lev", i + 1), 0, pts)
        avail_next = _availability(win, ("lev", i + 1), pts)
        for p, dm, an, aa in zip(pts, dom, avail_next, availA[sel]):
            ok = bool(dm)
            if not ok:
                for g in np.flatnonzero(an):
                    rest = full & ~int(g)
                    allowed = [h for h in np.flatnonzero(aa).tolist() if h & rest == h]
                    if _partition_masks(frozenset(allowed), rest) is not None:
                        ok = True
                        break
            r.record(ok, (i, _pt(p)))

    r = R("successor_above")
    for i in range(1, N):
        pts = Apts[lev == i]
        for p, ok in zip(pts, win.index(("lev", i + 1)).exists(0, pts)):
            r.record(bool(ok), (i, _pt(p)))

    r = R("no_domination_downward")
    for i in range(1, N + 1):
        pre = _prefix_any(win.lev >= i)
        pts = Apts[lev == i]
        for p in pts:
            if (p == 0).any():
                r.record(True, None)
                continue
            r.record(not pre[tuple(p - 1)], (i, _pt(p)))

    r = R("monotone_levels")
    for i in range(2, N + 1):
        lower = DeltaIndex((win.lev > 0) & (win.lev < i))
        pts = Apts[lev == i]
        for p, bad in zip(pts, lower.exists(0, pts)):
            r.record(not bad, (i, _pt(p)))

    r = R("infimum_drops_level")
    for i in range(1, N + 1):
        avail = _availability(win, ("lev", i), Apts)
        for p, l, row in zip(Apts, lev, avail):
            if _partitionable(row, full):
                r.record(l < i, (i, _pt(p), int(l)))

    r = R("consecutive_level_step")
    for key, table in (("S", win.S), ("A", win.A)):
        for p, l in zip(Apts, lev):
            for b in win.successors(table, p):
                if not win.A[tuple(b)]:
                    continue
                lb = int(win.lev[tuple(b)])
                if (b > p).all():
                    r.record(lb == l + 1, (key, _pt(p), _pt(b)))
                else:
                    r.record(lb in (l, l + 1), (key, _pt(p), _pt(b)))

    Spts = win.window_points(win.S)
    level_masks = {}
    for i in range(1, N + 1):
        level_masks[i] = np.stack([win.open_delta(("lev", i), F, Spts) for F in range(full)], axis=1)
    min_level = np.full((len(Spts), full), N + 1, dtype=np.int64)
    for i in range(N, 0, -1):
        min_level = np.where(level_masks[i], i, min_level)
    orth_in_A = np.stack([~win.open_delta("E", F, Spts) for F in range(full + 1)
                          if F < full] + [~win.E[tuple(Spts.T)]], axis=1)
    closed_in_A = np.stack([~win.closed_delta("E", G, Spts) for G in range(full)], axis=1)
    r1 = R("consecutive_not_higher")
    r2 = R("orthogonal_drop")
    r3 = R("consecutive_same_level")
    inA = win.A[tuple(Spts.T)]
    levS = win.level_of(Spts)
    for k, p in enumerate(Spts):
        succ = [(b, sum(1 << j for j in range(d) if b[j] == p[j])) for b in win.successors(win.S, p)]
        for F in range(full):
            i = int(min_level[k, F])
            if i > N:
                continue
            Fh = full & ~F
            if not orth_in_A[k, Fh]:
                continue
            for b, G in succ:
                if G == full or G & Fh != Fh or not closed_in_A[k, G]:
                    continue
                lb = int(win.lev[tuple(b)])
                r1.record(0 < lb <= i, (F, G, _pt(p), _pt(b), i))
            if inA[k] and Fh != full and closed_in_A[k, Fh]:
                r2.record(levS[k] < i, (F, _pt(p), i))
            elif inA[k] and Fh == full:
                r2.record(levS[k] < i, (F, _pt(p), i))
        if inA[k]:
            for b, G in succ:
                if G == full:
                    continue
                Gh = full & ~G
                if Gh == full:
                    continue
                if win.closed_delta("E", Gh, p[None, :])[0]:
                    r3.record(int(win.lev[tuple(b)]) == levS[k], (G, _pt(p), _pt(b)))
            if d == 2:
                # plane case: an ideal element on one line, a consecutive
                # semigroup element on the other
                r4 = R("plane_consecutive_same_level")
                for j in (0, 1):
                    if not win.open_delta("E", 1 << j, p[None, :])[0]:
                        continue
                    for b, G in succ:
                        if G == 1 << (1 - j):
                            r4.record(int(win.lev[tuple(b)]) == levS[k], (j + 1, _pt(p), _pt(b)))

    r = R("top_and_bottom_levels")
    gamma = tuple(int(v) - 1 for v in win.c)
    expect = set()
    for i in range(d):
        expect.add(tuple(gamma[j] if j == i else INF for j in range(d)))
    E = P.ideal
    # a zero coordinate in a generator leaves whole fibres in the ideal
    if all(all(g) for g in E.generators):
        r.record(set(P.levels[-1]) == expect, ("top", sorted(P.levels[-1])))
    if S.is_local and E.is_principal:
        r.record(P.levels[0] == ((0,) * d,), ("bottom", P.levels[0]))

    r = R("rep_domination_order")
    reps = [(rep, i) for i, lv in enumerate(P.levels, 1) for rep in lv]
    enc = _encode([x for x, _ in reps], d)
    levs = np.array([i for _, i in reps])
    big = 1 << 40
    dom = ((enc[None, :, :] > enc[:, None, :]) | ((enc[None, :, :] == big) & (enc[:, None, :] == big))).all(axis=-1)
    for a, b in np.argwhere(dom):
        r.record(levs[a] < levs[b], (reps[a][0], reps[b][0]))


def check_ray_constancy(S: GoodSemigroup, E: GoodIdeal, res: dict, padding) -> None:
    """Levels along rays leaving the conductor box, read off the brute-force
    grid rather than off representatives."""
    G = brute_force_partition(S, E, padding)
    d = S.d
    full = (1 << d) - 1
    c = np.array(E.conductor)
    bound = np.array(G.grid.bound)
    table = G.table
    r = res.setdefault("ray_constancy", CheckResult("ray_constancy"))
    box = np.argwhere(np.ones(tuple(c + 1), dtype=bool))
    for F in range(1, full):
        cols = _bits(F, d)
        rest = [i for i in range(d) if i not in cols]
        sel = (box[:, cols] == c[cols]).all(axis=1) & (box[:, rest] < c[rest]).all(axis=1)
        for p in box[sel]:
            region = tuple(slice(int(p[i]), int(bound[i]) + 1) if i in cols else int(p[i])
                           for i in range(d))
            vals = np.asarray(table[region]).ravel()
            own = int(table[tuple(p)])
            others = vals[1:]
            for i in range(1, G.N + 1):
                a = own == i
                b = bool((others == i).all())
                cc = bool((others == i).any())
                r.record(a == b == cc, (F, _pt(p), i))


# subspace checks


def _slice_at(win: _Window, table: np.ndarray, U: int):
    """Sub-table over the finite coordinates ``U`` with the others at ``c``."""
    d = win.d
    idx = tuple(slice(None) if U >> i & 1 else int(win.c[i]) for i in range(d))
    return table[idx]


def _embed(win: _Window, U: int, sub_pts: np.ndarray) -> np.ndarray:
    d = win.d
    out = np.tile(win.c, (len(sub_pts), 1))
    cols = _bits(U, d)
    out[:, cols] = sub_pts
    return out


def check_subspaces(win: _Window, P: LevelPartition, res: dict, grid=None) -> None:
    d, full, N = win.d, win.full, win.N

    def R(name):
        return res.setdefault(name, CheckResult(name))

    E = P.ideal
    conductor = tuple(int(v) for v in win.c)

    r = R("subspace_containment")
    for i, lv in enumerate(P.levels, 1):
        for rep in lv:
            inf_axes = [j for j in range(d) if rep[j] is INF]
            if not inf_axes:
                continue
            for extra in (0, 1, 3):
                for shift in itertools.product((0, extra), repeat=len(inf_axes)):
                    x = list(rep)
                    for j, s in zip(inf_axes, shift):
                        x[j] = conductor[j] + s
                    x = tuple(x)
                    ok = E.canonical_representative(x) == rep
                    if grid is not None and all(v <= b for v, b in zip(x, grid.grid.bound)):
                        ok &= grid.level(x) == i
                    r.record(ok, (rep, x))

    r = R("subspace_meet_closed")
    ecells = box_cells(E._table)
    ereps = set(cells_to_reps(ecells, conductor))
    er = sorted(ereps)
    enc = _encode(er, d)
    m = np.minimum(enc[:, None, :], enc[None, :, :])
    big = 1 << 40
    cell = np.where(m == big, win.c, m)
    ok = E._table[tuple(np.moveaxis(cell, -1, 0))]
    r.checked += ok.size
    for a, b in np.argwhere(~ok)[:5]:
        r.failures.append((er[a], er[b]))

    rl = R("subspace_lift_exists")
    ra = R("subspace_delta_agreement")
    rd = R("subspace_decomposition")
    rn = R("subspace_consecutive_same_level")
    for U in range(1, full + 1):
        cols = _bits(U, d)
        Uh = full & ~U
        subE = _slice_at(win, win.E, U)
        subS = _slice_at(win, win.S, U)
        sublev = _slice_at(win, win.lev, U)
        k_u = len(cols)
        ufull = (1 << k_u) - 1

        def lift(mask_u: int) -> int:
            return sum(1 << cols[t] for t in range(k_u) if mask_u >> t & 1)

        sub_box = tuple(int(win.c[j]) + 1 for j in cols)
        inner = tuple(slice(0, b) for b in sub_box)
        e_pts = box_cells(subE[inner])
        s_pts = box_cells(subS[inner])
        subE_cells = box_cells(subE)

        # enumerated subspace deltas vs point-level queries
        for sp in e_pts:
            base = _embed(win, U, sp[None, :])
            for Fu in range(ufull):
                F = lift(Fu)
                inF = np.array([Fu >> t & 1 for t in range(k_u)], dtype=bool)
                eq = subE_cells == sp
                gt = subE_cells > sp
                ge = gt | eq
                openset = (eq[:, inF].all(axis=1) & gt[:, ~inF].all(axis=1)).any()
                closedset = (eq[:, inF].all(axis=1) & ge[:, ~inF].all(axis=1)
                             & ~eq.all(axis=1)).any()
                q_open = win.open_delta("E", F | Uh, base)[0]
                q_closed = win.closed_delta("E", F | Uh, base)[0]
                ra.record(openset == q_open and closedset == q_closed, (U, F, _pt(base[0])))
                if q_open and Fu:
                    Ucomp = lift(ufull & ~Fu)
                    rl.record(bool(win.closed_delta("E", Ucomp | Uh, base)[0]),
                              (U, F, _pt(base[0])))
                    avail = []
                    for Ku in range(1, ufull + 1):
                        if Ku & Fu != Ku:
                            continue
                        G = lift(ufull & ~Ku) | Uh
                        if win.open_delta("E", G, base)[0]:
                            avail.append(Ku)
                    rd.record(_partition_masks(frozenset(avail), Fu) is not None,
                              (U, F, _pt(base[0])))

        # consecutive subspaces keep the level
        for sp in s_pts:
            base = _embed(win, U, sp[None, :])[0]
            li = int(win.lev[tuple(base)])
            if li == 0:
                continue
            sl = tuple(slice(int(v), None) for v in sp)
            up = subS[sl].copy()
            up[(0,) * k_u] = False
            succ = box_cells(_minimal_cells(up)) + sp
            for Fu in range(ufull):
                F = lift(Fu)
                if not win.open_delta("E", F | Uh, base[None, :])[0]:
                    continue
                need = ufull & ~Fu
                for t in succ:
                    Gu = sum(1 << q for q in range(k_u) if t[q] == sp[q])
                    if Gu == ufull or Gu & need != need:
                        continue
                    rn.record(int(sublev[tuple(t)]) == li, (U, F, _pt(base), _pt(t)))

    r = R("h_k_escape")
    maxdim = [max(sum(x is INF for x in rep) for rep in lv) for lv in P.levels]
    for i in range(1, N + 1):
        dim = maxdim[i - 1]
        size = d - dim
        for cols in itertools.combinations(range(d), size):
            U = sum(1 << j for j in cols)
            sublev = _slice_at(win, win.lev, U)
            subE = _slice_at(win, win.E, U)
            inner = tuple(slice(0, int(win.c[j]) + 1) for j in cols)
            members = box_cells(sublev[inner] == i)
            if not len(members):
                continue
            for t, k in enumerate(cols):
                # values of coordinate k whose whole slice avoids the ideal
                clean = ~np.moveaxis(subE, t, 0).reshape(subE.shape[t], -1).any(axis=1)
                for a in members:
                    ok = any(clean[b[t]] for b in members if b[t] >= a[t])
                    r.record(bool(ok), (i, [j + 1 for j in cols], k + 1, _pt(_embed(win, U, a[None, :])[0])))


# driver


CHECKS = (
    "closed_set_is_union", "closed_set_monotone", "closed_set_monotone_box", "delta_nesting",
    "ideal_lift_exists", "empty_chain_forces_empty", "meet_of_deltas",
    "consecutive_blocks_supersets", "empty_split", "empty_above_forces_empty_below",
    "maximal_delta_dichotomy", "g2_decomposition", "conductor_ray_membership",
    "complement_orthogonal_empty", "dominated_or_infimum", "successor_above",
    "no_domination_downward", "monotone_levels", "infimum_drops_level",
    "consecutive_level_step", "consecutive_not_higher", "orthogonal_drop",
    "consecutive_same_level", "top_and_bottom_levels", "rep_domination_order",
    "ray_constancy", "subspace_containment", "subspace_meet_closed",
    "subspace_lift_exists", "subspace_delta_agreement", "subspace_decomposition",
    "subspace_consecutive_same_level", "h_k_escape", "plane_consecutive_same_level",
)


def run_suite(S: GoodSemigroup, P: LevelPartition, padding=None) -> SuiteReport:
    """Every check on one semigroup and the level partition of one ideal."""
    E = P.ideal
    res: dict = {}
    if padding is None:
        padding = max(max(g) for g in E.generators) + 2
    check_reference_sets(S.small, S.d, res)
    check_reference_sets(E.complement().reps, S.d, res)
    check_full_box_monotone(S.d, 3, res)

    sw = _Window(S, S._table, S.conductor)
    check_ideal(sw, S, S, res, "S")
    check_ideal_membership(sw, res, "S")

    win = _Window(S, E._table, E.conductor, P.level_table())
    check_ideal(win, S, E, res, "E")
    check_ideal_membership(win, res, "E")
    check_complement_orthogonal(win, res)
    check_levels(win, P, S, res)
    check_ray_constancy(S, E, res, padding)
    grid = brute_force_partition(S, E, padding)
    check_subspaces(win, P, res, grid)
    for name in CHECKS:
        res.setdefault(name, CheckResult(name))
    return SuiteReport(res)
