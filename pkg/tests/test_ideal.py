import numpy as np
import pytest

from goodsemigroup import (
    complement,
    from_small_elements,
    ideal_from_generators,
    principal_ideal,
)
from goodsemigroup.exceptions import (
    NotGoodIdeal,
    NotInComplement,
    NotInSemigroup,
    NotProper,
    UsageError,
    ZeroGenerator,
)
from goodsemigroup.lattice import INF
from goodsemigroup.oracle import PaddedGrid


def test_principal_conductor(E_ex):
    assert E_ex.conductor == (4, 7, 12)
    assert E_ex.gamma == (3, 6, 11)
    assert E_ex.is_principal and E_ex.generators == ((1, 2, 3),)


def test_principal_conductor_other_generator(S_ex):
    assert principal_ideal(S_ex, (2, 3, 3)).conductor == (5, 8, 12)


@pytest.mark.parametrize("point, inside", [
    ((1, 2, 3), True),
    ((2, 4, 6), True),
    ((4, 7, 12), True),
    ((4, 7, 11), False),
    ((0, 0, 0), False),
    ((2, 3, 3), False),
])
def test_membership(E_ex, point, inside):
    assert E_ex.contains(point) is inside


def test_ideal_is_closed_under_adding_semigroup_elements(S_ex, E_ex):
    for e in E_ex.truncated:
        for s in S_ex.small:
            assert E_ex.contains(tuple(x + y for x, y in zip(e, s)))


def test_ideal_validates(E_ex):
    assert E_ex.validate().ok


def test_free_monoid_complement(N2):
    E = principal_ideal(N2, (1, 1))
    assert E.conductor == (1, 1)
    assert set(complement(E).reps) == set({(0, 0), (0, INF), (INF, 0)})


def test_non_good_union_is_rejected(S_ex):
    with pytest.raises(NotGoodIdeal) as info:
        ideal_from_generators(S_ex, [(1, 2, 3), (2, 3, 3)])
    assert info.value.axiom == "G1"
    a, b = info.value.witness
    assert S_ex.contains(a) and S_ex.contains(b)


def test_generator_errors(S_ex):
    with pytest.raises(NotProper):
        ideal_from_generators(S_ex, [(0, 0, 0)])
    with pytest.raises(NotInSemigroup):
        principal_ideal(S_ex, (1, 2, 4))
    with pytest.raises(ZeroGenerator):
        principal_ideal(S_ex, (0, 0, 0))
    with pytest.raises(UsageError):
        ideal_from_generators(S_ex, [])


def test_generated_principal_matches_principal(S_ex, E_ex):
    E = ideal_from_generators(S_ex, [(1, 2, 3)])
    assert E.conductor == E_ex.conductor
    assert E.truncated == E_ex.truncated


def test_two_axis_generators_break_g1(N2):
    with pytest.raises(NotGoodIdeal) as info:
        ideal_from_generators(N2, [(2, 0), (0, 2)])
    assert info.value.axiom == "G1"


def test_redundant_generators(N2):
    E = ideal_from_generators(N2, [(1, 2), (2, 1), (1, 1)])
    assert not E.is_principal
    assert E.conductor == (1, 1)
    assert E.truncated == principal_ideal(N2, (1, 1)).truncated


def test_two_generator_ideal_on_a_line():
    N = from_small_elements(1, [(0,)])
    E = ideal_from_generators(N, [(3,), (5,)])
    assert E.conductor == (3,)
    assert complement(E).reps == ((0,), (1,), (2,))


@pytest.mark.parametrize("padding", [1, 3])
def test_truncated_table_agrees_with_generator_grid(S_ex, E_ex, padding):
    grid = PaddedGrid(S_ex, E_ex, padding)
    for x in np.ndindex(*grid.in_E.shape):
        assert grid.in_E[x] == E_ex.contains(x)


def test_canonical_representative(E_ex):
    assert E_ex.canonical_representative((3, 100, 100)) == (3, INF, INF)
    assert E_ex.canonical_representative((3, INF, 12)) == (3, INF, INF)
    with pytest.raises(NotInComplement):
        E_ex.canonical_representative((1, 2, 3))
    with pytest.raises(NotInComplement):
        E_ex.canonical_representative((1, 2, 4))


def test_complement_text(E_ex):
    A = complement(E_ex)
    assert len(A.reps) == 39
    assert A.to_text().splitlines()[0].startswith("(")


def test_non_local_semigroup_allows_zero_coordinate_generator():
    S = from_small_elements(2, [(0, 0)])
    E = principal_ideal(S, (1, 0))
    assert E.contains((1, 0)) and not E.contains((0, 7))
