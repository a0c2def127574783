import pytest

from goodsemigroup import (
    from_small_elements,
    load_semigroup,
    parse_semigroup,
    product_semigroup,
    save_semigroup,
)
from goodsemigroup.exceptions import (
    AxiomViolation,
    ConductorNotMinimal,
    G1Violation,
    G2Violation,
    MissingZero,
    NoUniqueMaximum,
    NotAMonoid,
    UsageError,
)
from goodsemigroup.semigroup import AXIOM_ORDER, check_small_elements
from helpers import EXAMPLE_FILE, SMALL_EX


def test_example_invariants(S_ex):
    assert S_ex.d == 3
    assert S_ex.conductor == (3, 5, 9)
    assert S_ex.gamma == (2, 4, 8)
    assert S_ex.is_local
    assert S_ex.minimal_nonzero() == (1, 2, 3)
    assert len(S_ex.small) == 17


@pytest.mark.parametrize("point, inside", [
    ((4, 6, 10), True),
    ((3, 5, 9), True),
    ((1, 2, 100), False),
    ((1, 2, 4), False),
    ((1, 2, 10), False),
    ((3, 100, 4), False),
    ((0, 0, 0), True),
])
def test_membership(S_ex, point, inside):
    assert S_ex.contains(point) is inside
    assert (point in S_ex) is inside


def test_free_monoid_is_not_local():
    N2 = from_small_elements(2, [(0, 0)])
    assert N2.conductor == (0, 0)
    assert not N2.is_local and N2.minimal_nonzero() is None
    assert from_small_elements(3, [(0, 0, 0)]).minimal_nonzero() is None


def test_one_branch_is_local():
    S = from_small_elements(1, [(0,), (3,), (5,)])
    assert S.conductor == (5,) and S.minimal_nonzero() == (3,)
    N = from_small_elements(1, [(0,)])
    assert N.minimal_nonzero() == (1,)


def test_numerical_semigroup_on_one_axis():
    # <2,3>: gaps {1}, conductor 2
    S = product_semigroup([[1]])
    assert S.conductor == (2,) and S.small == {(0,), (2,)}
    assert S.minimal_nonzero() == (2,)


def test_product_of_two_is_not_local():
    S = product_semigroup([[1], [1, 2]])
    assert S.conductor == (2, 3)
    assert S.contains((2, 0)) and not S.is_local
    assert S.minimal_nonzero() is None


@pytest.mark.parametrize("removed", [(1, 2, 3), (2, 3, 3), (3, 3, 6), (1, 2, 8)])
def test_removing_an_element_breaks_an_axiom(removed):
    rest = [p for p in SMALL_EX if p != removed]
    report = check_small_elements(3, rest)
    assert not report.ok
    assert report.first_failure.witness is not None
    with pytest.raises(AxiomViolation):
        from_small_elements(3, rest)


@pytest.mark.parametrize("elements, exc", [
    ([(1, 1), (2, 2)], MissingZero),
    ([(0, 0), (2, 1), (1, 2)], NoUniqueMaximum),
    ([(0, 0), (2, 3), (3, 2), (3, 3)], G1Violation),
    ([(0,), (2,), (5,)], NotAMonoid),
    ([(0, 0), (1, 1), (1, 2), (2, 2)], G2Violation),
    ([(0, 0), (1, 1), (1, 2), (2, 1), (2, 2)], ConductorNotMinimal),
])
def test_each_axiom_has_its_error(elements, exc):
    with pytest.raises(exc) as info:
        from_small_elements(len(elements[0]), elements)
    assert info.value.witness is not None or exc is MissingZero


def test_report_lists_axioms_in_order(S_ex):
    report = S_ex.validate()
    assert report.ok
    assert tuple(c.axiom for c in report.checks) == AXIOM_ORDER
    assert "G1" in report.to_text()


def test_declared_conductor_must_match():
    report = check_small_elements(3, SMALL_EX, conductor=(3, 5, 8))
    assert not report.ok and report.first_failure.axiom == "maximum"
    assert check_small_elements(3, SMALL_EX, conductor=(3, 5, 9)).ok


def test_file_round_trip(tmp_path, S_ex):
    assert load_semigroup(EXAMPLE_FILE) == S_ex
    path = tmp_path / "s.gs"
    save_semigroup(S_ex, path)
    assert load_semigroup(path) == S_ex
    assert hash(load_semigroup(path)) == hash(S_ex)


@pytest.mark.parametrize("text", [
    "",
    "(0,0)\n",
    "d x\n(0,0)\n",
    "d 2\n",
    "d 2\n(0,0)\nc (1,1)\n",
    "d 2\n(0,0,0)\n",
])
def test_parse_errors(text):
    with pytest.raises(UsageError):
        parse_semigroup(text)


def test_parse_ignores_comments_and_blank_lines():
    S = parse_semigroup("# header\nd 1\n\n(0) # origin\n(2)\n")
    assert S.small == {(0,), (2,)}


def test_parse_without_validation_keeps_broken_input():
    d, pts, c = parse_semigroup("d 2\nc (2,2)\n(1,1)\n", validate=False)
    assert (d, pts, c) == (2, [(1, 1)], (2, 2))
