import pytest

from goodsemigroup import (
    Subspace,
    apery,
    canonical_representative,
    from_small_elements,
    h_k_set,
    product_semigroup,
    subspace_meet,
    subspace_sum,
    subspaces_of_level,
    theorem_main_check,
)
from goodsemigroup.exceptions import IndexNotInU, MixedU, UsageError
from goodsemigroup.lattice import INF
from goodsemigroup.subspace import theorem_thresholds


def test_subspace_of_point():
    s = Subspace.of((3, INF, INF))
    assert s.U == {1} and s.dimension == 2 and s.d == 3
    assert str(s) == "(3,inf,inf)"


def test_subspace_rejects_inconsistent_index_set():
    with pytest.raises(UsageError):
        Subspace((3, INF), frozenset({1, 2}))
    with pytest.raises(UsageError):
        Subspace((3, 4), frozenset({1, 3}))


def test_contains_point():
    s = Subspace.of((3, INF, INF))
    assert s.contains_point((3, 7, 12), (4, 7, 12))
    assert not s.contains_point((3, 6, 12), (4, 7, 12))
    assert not s.contains_point((2, 7, 12), (4, 7, 12))


def test_canonical_representative(E_ex):
    assert canonical_representative(E_ex, (3, 100, 100)) == (3, INF, INF)
    assert canonical_representative(E_ex, (0, 0, 0)) == (0, 0, 0)


def test_meet_unions_the_finite_coordinates():
    x = Subspace.of((3, INF, INF))
    y = Subspace.of((INF, 6, INF))
    m = subspace_meet(x, y)
    assert m.base == (3, 6, INF) and m.U == {1, 2}
    with pytest.raises(UsageError):
        subspace_meet(x, Subspace.of((1, INF)))


def test_sum_on_shared_coordinates():
    s = subspace_sum(Subspace.of((1, 2, INF)), Subspace.of((2, 4, INF)))
    assert s.base == (3, 6, INF)
    with pytest.raises(MixedU):
        subspace_sum(Subspace.of((1, 2, INF)), Subspace.of((1, INF, 2)))


def test_order_needs_equal_index_sets():
    assert Subspace.of((1, INF)).leq(Subspace.of((2, INF)))
    assert not Subspace.of((3, INF)).leq(Subspace.of((2, INF)))
    with pytest.raises(MixedU):
        Subspace.of((1, INF)).leq(Subspace.of((INF, 1)))


def test_top_level_subspaces(P_ex):
    subs = subspaces_of_level(P_ex, 6)
    assert [str(s) for s in subs] == ["(3,inf,inf)", "(inf,6,inf)", "(inf,inf,11)"]
    assert {s.dimension for s in subs} == {2}


def test_subspaces_sorted_by_dimension_first(P_ex):
    subs = subspaces_of_level(P_ex, 4)
    dims = [s.dimension for s in subs]
    assert dims == sorted(dims, reverse=True)
    assert str(subs[0]) == "(inf,inf,3)"


def test_h_k_set(P_ex):
    reps = P_ex[4]
    got = h_k_set(reps, (3, INF, 6), 1)
    assert {str(s) for s in got} == {"(3,inf,6)", "(3,inf,9)", "(3,inf,10)"}
    assert {str(s) for s in h_k_set(reps, Subspace.of((INF, 6, 6)), 2)} == {
        "(inf,6,6)", "(inf,6,9)", "(inf,6,10)"}
    with pytest.raises(IndexNotInU):
        h_k_set(reps, (3, INF, 6), 2)


@pytest.mark.parametrize("w, expected", [
    ((1, 2, 3), [(1, 4), (2, 2), (3, 1)]),
    ((2, 3, 3), [(1, 6), (2, 3), (3, 1)]),
    ((2, 2), [(1, 3), (2, 1)]),
])
def test_thresholds(w, expected):
    assert theorem_thresholds(w) == expected


@pytest.mark.parametrize("w, N", [((1, 2, 3), 6), ((2, 3, 3), 8), ((2, 4, 6), 12)])
def test_main_check_on_the_example(S_ex, w, N):
    report = theorem_main_check(apery(S_ex, w), w)
    assert report.passed, report.to_text()
    assert report.N == N == report.expected
    assert report.to_text() == f"N={N} expected={N} PASS"


def test_main_check_reads_a_principal_generator(P_ex):
    assert theorem_main_check(P_ex).w == (1, 2, 3)
    assert theorem_main_check(P_ex).max_dimension == (0, 1, 1, 2, 2, 2)


def test_main_check_in_the_plane():
    S = product_semigroup([[1], [1]])
    assert theorem_main_check(apery(S, (2, 2))).passed
    N2 = from_small_elements(2, [(0, 0)])
    assert theorem_main_check(apery(N2, (1, 1))).passed


def test_main_check_reports_a_wrong_generator(P_ex):
    report = theorem_main_check(P_ex, (2, 3, 3))
    assert not report.passed and "FAIL" in report.to_text()
