import pytest
from hypothesis import given, strategies as st

from errors import DuplicateEntryError, EnumerationBoundError, InvalidTableauError, RankMismatchError
from permutations import Perm, identity, inverse, longest_element
from rsk import (
    cell_relation, insertion_tableau, inverse_rs, recording_tableau, right_cell_members,
    robinson_schensted, row_insert,
)
from tableaux import StandardTableau, syt_count


def perms_of(n):
    return st.permutations(list(range(1, n + 1))).map(lambda xs: Perm(tuple(xs)))


@pytest.mark.parametrize("rows, x, expected, cell", [
    (((1, 3),), 5, ((1, 3, 5),), (1, 3)),
    (((1, 3),), 2, ((1, 2), (3,)), (2, 1)),
    (((1, 4), (3, 6), (5,)), 2, ((1, 2), (3, 4), (5, 6)), (3, 2)),
    ((), 1, ((1,),), (1, 1)),
])
def test_row_insert(rows, x, expected, cell):
    assert row_insert(rows, x) == (expected, cell)


def test_row_insert_rejects_duplicates():
    with pytest.raises(DuplicateEntryError):
        row_insert(((1, 3),), 3)


def test_robinson_schensted_examples():
    pair = robinson_schensted(identity(3))
    assert pair.P.rows == pair.Q.rows == ((1, 2, 3),)

    pair = robinson_schensted(Perm((3, 1, 2)))
    assert pair.P.rows == ((1, 2), (3,))
    assert pair.Q.rows == ((1, 3), (2,))

    pair = robinson_schensted(longest_element(4))
    assert pair.P.rows == pair.Q.rows == ((1,), (2,), (3,), (4,))


def test_rs_json():
    pair = robinson_schensted(Perm((4, 2, 1, 3)))
    assert pair.to_json() == {
        "P": {"shape": [2, 1, 1], "rows": [[1, 3], [2], [4]]},
        "Q": {"shape": [2, 1, 1], "rows": [[1, 4], [2], [3]]},
        "shape": [2, 1, 1],
    }


@pytest.mark.parametrize("P, Q, expected", [
    (((1, 2), (3,)), ((1, 3), (2,)), (3, 1, 2)),
    (((1, 2), (3, 4)), ((1, 3), (2, 4)), (3, 1, 4, 2)),
])
def test_inverse_rs_examples(P, Q, expected):
    assert inverse_rs(P, Q) == Perm(expected)


def test_inverse_rs_shape_mismatch():
    with pytest.raises(InvalidTableauError):
        inverse_rs(((1, 2), (3,)), ((1, 2, 3),))


def test_same_tableau_gives_involution():
    T = StandardTableau(((1, 3, 4), (2, 5)))
    w = inverse_rs(T, T)
    assert inverse(w) == w


@given(perms_of(8))
def test_rs_roundtrip(w):
    pair = robinson_schensted(w)
    assert inverse_rs(pair.P, pair.Q) == w


@given(perms_of(8))
def test_recording_tableau_is_insertion_of_inverse(w):
    assert recording_tableau(w) == insertion_tableau(inverse(w))


def test_cell_relation_examples():
    rel = cell_relation(Perm((2, 4, 3, 1)), Perm((4, 2, 1, 3)))
    assert rel.same_right

    w = Perm((4, 2, 1, 3))
    assert cell_relation(w, w).to_json() == {
        "same_right": True, "same_left": True, "same_two_sided": True,
    }

    rel = cell_relation(identity(3), longest_element(3))
    assert not (rel.same_right or rel.same_left or rel.same_two_sided)

    with pytest.raises(RankMismatchError):
        cell_relation(identity(3), identity(4))


def test_right_cell_members_examples():
    assert right_cell_members(Perm((3, 4, 1, 2))) == [Perm((3, 4, 1, 2)), Perm((3, 1, 4, 2))]
    assert right_cell_members(identity(5)) == [identity(5)]
    assert len(right_cell_members(Perm((4, 2, 1, 3)))) == 3


@given(perms_of(6))
def test_right_cell_is_a_class(w):
    members = right_cell_members(w)
    P = insertion_tableau(w)
    assert w in members
    assert len(members) == syt_count(P.shape)
    assert all(insertion_tableau(u) == P for u in members)


def test_right_cell_members_bound():
    with pytest.raises(EnumerationBoundError):
        right_cell_members(identity(5), bound=4)
