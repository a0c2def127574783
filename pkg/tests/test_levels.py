import numpy as np
import pytest

from goodsemigroup import (
    apery,
    complete_infimum_witness,
    compute_levels,
    from_small_elements,
    principal_ideal,
    product_semigroup,
    propG2_decomposition,
)
from goodsemigroup.exceptions import (
    NotInComplement,
    PreconditionViolated,
    UsageError,
)
from goodsemigroup.lattice import INF, meet_all, parse_point
from goodsemigroup.levels import find_block_partition
from goodsemigroup.oracle import CorpusSpec, generate_corpus, naive_partition
from helpers import GOLDEN


def _golden_levels():
    levels = []
    for line in (GOLDEN / "apery_1_2_3.txt").read_text().splitlines():
        if line.startswith("A"):
            levels.append(set())
        else:
            levels[-1].add(parse_point(line))
    return levels


def test_example_levels_match_listing(P_ex):
    expected = _golden_levels()
    assert [len(lv) for lv in expected] == [1, 5, 13, 11, 6, 3]
    assert [set(lv) for lv in P_ex.levels] == expected
    assert P_ex.N == 6 == sum((1, 2, 3))


def test_first_level_is_the_origin(P_ex):
    assert P_ex[1] == ((0, 0, 0),)


def test_top_level_holds_the_planes(P_ex):
    assert set(P_ex[6]) == {(3, INF, INF), (INF, 6, INF), (INF, INF, 11)}


@pytest.mark.parametrize("point, level", [
    ((0, 0, 0), 1),
    ((1, 2, 8), 3),
    ((3, 6, 10), 4),
    ((2, 4, 100), 4),
    ((3, 50, 50), 6),
])
def test_level_of(P_ex, point, level):
    assert P_ex.level_of(point) == level


def test_level_of_rejects_ideal_points(P_ex):
    with pytest.raises(NotInComplement):
        P_ex.level_of((1, 2, 3))


def test_level_index_bounds(P_ex):
    with pytest.raises(UsageError):
        P_ex[0]
    with pytest.raises(UsageError):
        P_ex[7]


def test_free_plane_two_levels(N2):
    P = apery(N2, (1, 1))
    assert P.N == 2
    assert set(P[1]) == {(0, 0)}
    assert set(P[2]) == {(0, INF), (INF, 0)}


def test_product_of_numerical_semigroups():
    S = product_semigroup([[1], [1]])
    assert apery(S, (2, 2)).N == 4
    assert apery(S, (3, 2)).N == 5


def test_line_levels_are_singletons():
    # <3,5>: Apery set of 3 is {0, 5, 10}
    S = from_small_elements(1, [(0,), (3,), (5,), (6,), (8,)])
    P = apery(S, (3,))
    assert [set(lv) for lv in P.levels] == [{(0,)}, {(5,)}, {(10,)}]


def test_complement_must_belong_to_the_ideal(S_ex, E_ex):
    other = principal_ideal(S_ex, (2, 3, 3))
    with pytest.raises(UsageError):
        compute_levels(other.complement(), E_ex)


@pytest.mark.parametrize("recipe", [
    (11, 2, 6, "closure", (7, 7)),
    (12, 2, 4, "product", (6, 6)),
    (13, 3, 4, "closure", (3, 3, 3)),
])
def test_peeling_agrees_with_plain_python(recipe):
    seed, d, count, kind, caps = recipe
    for S in generate_corpus(CorpusSpec(seed=seed, d=d, count=count, kind=kind, caps=caps)):
        w = sorted(p for p in S.small if any(p))[0]
        P = apery(S, w)
        table = P.level_table()
        cells = [tuple(int(v) for v in p) for p in np.argwhere(table)]
        naive = naive_partition(cells, P.ideal.conductor)
        assert {p: int(table[p]) for p in cells} == naive


def test_complete_infimum_witness_example(S_ex):
    wit = complete_infimum_witness(S_ex.small, (2, 3, 3))
    assert wit is not None
    assert meet_all(p for p, _ in wit.parts) == (2, 3, 3)
    for p, F in wit.parts:
        assert p in S_ex.small
        assert all((p[i - 1] == 3 if i > 1 else p[0] == 2) for i in F)
    strict = wit.strict_sets()
    assert sorted(len(s) for s in strict) == [1, 1, 1]
    assert frozenset().union(*strict) == {1, 2, 3}


def test_infinite_witness_needs_flexible_coordinates(P_ex):
    reps = set(P_ex[6]) | set(P_ex[5])
    wit = complete_infimum_witness(reps, (3, 6, 11))
    assert wit is not None
    assert meet_all(p for p, _ in wit.lift((4, 7, 12)).parts) == (3, 6, 11)


def test_no_witness_for_a_maximal_point(S_ex):
    assert complete_infimum_witness(S_ex.small, (3, 5, 9)) is None
    assert complete_infimum_witness([], (1, 2)) is None


def test_decomposition_through_a_given_element(S_ex):
    wit = propG2_decomposition(S_ex, (2, 3, 3), (2, 3, 6))
    assert wit.parts[0] == ((2, 3, 6), frozenset({1, 2}))
    assert meet_all(p for p, _ in wit.parts) == (2, 3, 3)
    assert all(S_ex.contains(p) for p, _ in wit.parts)
    assert frozenset.intersection(*(F for _, F in wit.parts[1:])) == {3}
    assert "F={1,2}" in wit.to_text()


@pytest.mark.parametrize("a, b", [
    ((2, 3, 3), (2, 3, 3)),
    ((2, 3, 3), (3, 5, 9)),
    ((2, 3, 6), (2, 3, 3)),
    ((1, 2, 4), (1, 2, 6)),
])
def test_decomposition_preconditions(S_ex, a, b):
    with pytest.raises(PreconditionViolated):
        propG2_decomposition(S_ex, a, b)


def test_decomposition_in_an_ideal(S_ex, E_ex):
    wit = propG2_decomposition(E_ex, (2, 4, 6), (2, 4, 9))
    assert meet_all(p for p, _ in wit.parts) == (2, 4, 6)
    assert all(E_ex.contains(p) for p, _ in wit.parts)


@pytest.mark.parametrize("available, full, expected", [
    ([0b01, 0b10], 0b11, (0b01, 0b10)),
    ([0b11], 0b11, None),
    ([0b011, 0b100, 0b001], 0b111, (0b001, 0b100)),
    ([0b011, 0b110], 0b111, None),
])
def test_block_partition(available, full, expected):
    got = find_block_partition(available, full)
    if expected is None:
        assert got is None
    else:
        assert got is not None and sum(got) == full and len(got) >= 2
        assert all(a & b == 0 for i, a in enumerate(got) for b in got[i + 1:])
