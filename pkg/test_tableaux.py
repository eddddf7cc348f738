import pytest

from errors import EnumerationBoundError, InvalidShapeError, InvalidTableauError
from tableaux import (
    Shape, StandardTableau, conjugate, hook_lengths, parse_shape, partitions, syt_count,
    syt_enumerate, two_column_hook_multiset, two_column_shape,
)


def test_shape_validation():
    with pytest.raises(InvalidShapeError):
        Shape((1, 2))
    with pytest.raises(InvalidShapeError):
        Shape((2, 0))
    with pytest.raises(InvalidShapeError):
        parse_shape("2,a")


def test_shape_columns():
    shape = parse_shape("2,1,1")
    assert shape.size == 4
    assert shape.column_lengths == (3, 1)
    assert shape.column_length(2) == 1
    assert shape.column_length(3) == 0
    assert conjugate(shape) == Shape((3, 1))


def test_conjugate_is_involution():
    for shape in partitions(6):
        assert conjugate(conjugate(shape)) == shape


def test_two_column_shape():
    assert two_column_shape(6, 2) == Shape((2, 2, 1, 1))
    assert two_column_shape(4, 0) == Shape((1, 1, 1, 1))
    assert two_column_shape(6, 2).column_lengths == (4, 2)
    with pytest.raises(InvalidShapeError):
        two_column_shape(4, 3)


def test_partitions_count_and_order():
    shapes = partitions(5)
    assert len(shapes) == 7
    assert shapes[0] == Shape((5,))
    assert shapes[1] == Shape((4, 1))
    assert shapes[-1] == Shape((1, 1, 1, 1, 1))


def test_tableau_validation():
    StandardTableau(((1, 3), (2,), (4,)))
    with pytest.raises(InvalidTableauError):
        StandardTableau(((1, 2), (4,)))
    with pytest.raises(InvalidTableauError):
        StandardTableau(((2, 1), (3,)))
    with pytest.raises(InvalidTableauError):
        StandardTableau(((1, 3), (4, 2)))


def test_tableau_json():
    t = StandardTableau(((1, 3), (2,), (4,)))
    assert t.to_json() == {"shape": [2, 1, 1], "rows": [[1, 3], [2], [4]]}
    assert t.column(1) == (1, 2, 4)
    assert t.column(2) == (3,)


@pytest.mark.parametrize("rows, expected", [
    ((2, 2), ((3, 2), (2, 1))),
    ((2, 1, 1), ((4, 1), (2,), (1,))),
    ((1,), ((1,),)),
])
def test_hook_lengths(rows, expected):
    assert hook_lengths(Shape(rows)) == expected


@pytest.mark.parametrize("rows, count", [
    ((2, 2), 2),
    ((5,), 1),
    ((2, 1, 1), 3),
    ((2, 2, 2), 5),
    ((3, 2, 1), 16),
])
def test_syt_count(rows, count):
    assert syt_count(Shape(rows)) == count


def test_syt_count_is_exact_for_large_shapes():
    # single row and single column of length 20 have one filling each
    assert syt_count(Shape((20,))) == 1
    assert syt_count(Shape((1,) * 20)) == 1
    assert syt_count(Shape((10, 10))) == 16796  # Catalan number C_10


def test_syt_enumerate_examples():
    found = syt_enumerate(Shape((2, 2)))
    assert [t.rows for t in found] == [((1, 2), (3, 4)), ((1, 3), (2, 4))]
    assert [t.rows for t in syt_enumerate(Shape((1, 1, 1)))] == [((1,), (2,), (3,))]
    assert len(syt_enumerate(Shape((2, 2, 2)))) == 5

    words = [t.reading_word() for t in syt_enumerate(Shape((3, 2)))]
    assert words[0] == (1, 2, 3, 4, 5)
    assert words == sorted(words) and len(set(words)) == 5


@pytest.mark.parametrize("n", range(1, 8))
def test_enumeration_matches_hook_formula(n):
    for shape in partitions(n):
        assert len(syt_enumerate(shape)) == syt_count(shape)


def test_syt_enumerate_bound():
    with pytest.raises(EnumerationBoundError) as excinfo:
        syt_enumerate(Shape((3, 2)), bound=4)
    assert excinfo.value.bound == 4
    assert excinfo.value.size == 5


@pytest.mark.parametrize("n, m", [(4, 1), (4, 2), (6, 3), (7, 2), (5, 0)])
def test_two_column_hook_multiset(n, m):
    hooks = hook_lengths(two_column_shape(n, m))
    first = tuple(row[0] for row in hooks)
    second = tuple(row[1] for row in hooks if len(row) > 1)
    assert two_column_hook_multiset(n, m) == (first, second)
