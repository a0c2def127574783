"""Shared fixtures data and corpus recipes for the test suite."""

from pathlib import Path

import numpy as np

from goodsemigroup.oracle import CorpusSpec, generate_corpus

ROOT = Path(__file__).resolve().parent.parent
GOLDEN = Path(__file__).resolve().parent / "golden"
EXAMPLE_FILE = ROOT / "data" / "three_branch.gs"

# small elements of the worked three-branch example, origin included
SMALL_EX = [
    (0, 0, 0), (1, 2, 3), (1, 2, 6), (1, 2, 7), (1, 2, 8), (2, 3, 3), (2, 3, 6),
    (2, 3, 7), (2, 4, 3), (2, 4, 6), (2, 4, 9), (3, 3, 3), (3, 3, 6), (3, 3, 7),
    (3, 5, 3), (3, 5, 6), (3, 5, 9),
]

# (seed, d, count, kind, caps)
SWEEP_RECIPES = [
    (101, 2, 40, "closure", (12, 12)),
    (102, 2, 30, "product", (12, 12)),
    (103, 3, 40, "closure", (8, 8, 8)),
    (104, 3, 25, "product", (6, 6, 6)),
]

SUITE_RECIPES = [
    (201, 2, 6, "closure", (8, 8)),
    (202, 2, 5, "product", (7, 7)),
    (203, 3, 6, "closure", (4, 4, 4)),
    (204, 3, 5, "product", (4, 4, 4)),
]


def corpus(recipes):
    out = []
    for seed, d, count, kind, caps in recipes:
        out += generate_corpus(CorpusSpec(seed=seed, d=d, count=count, kind=kind, caps=caps))
    return out


def pick_omegas(S):
    """Three distinct nonzero elements of ``S`` in ``[0, c + 1]``: lightest,
    middle and heaviest."""
    bound = tuple(c + 1 for c in S.conductor)
    cells = np.argwhere(S.table_on(bound))
    nz = sorted((tuple(int(v) for v in p) for p in cells if p.any()),
                key=lambda p: (sum(p), p))
    return [nz[0], nz[len(nz) // 2], nz[-1]]
