"""
Young Shapes and Standard Young Tableaux
Hook lengths, the hook-length count and a backtracking SYT enumerator
"""

from dataclasses import dataclass
from math import factorial, prod
from typing import List, Optional, Tuple

from errors import EnumerationBoundError, InvalidShapeError, InvalidTableauError
import config


@dataclass(frozen=True)
class Shape:
    """Partition stored as weakly decreasing row lengths"""
    rows: Tuple[int, ...]

    def __post_init__(self):
        rows = tuple(self.rows)
        object.__setattr__(self, 'rows', rows)
        if any(r < 1 for r in rows):
            raise InvalidShapeError(f"row lengths must be positive: {rows}")
        if any(rows[i] < rows[i + 1] for i in range(len(rows) - 1)):
            raise InvalidShapeError(f"row lengths must be weakly decreasing: {rows}")

    @property
    def size(self) -> int:
        return sum(self.rows)

    @property
    def column_lengths(self) -> Tuple[int, ...]:
        if not self.rows:
            return ()
        return tuple(sum(1 for r in self.rows if r > j) for j in range(self.rows[0]))

    def column_length(self, j: int) -> int:
        """Length of column j (1-based); 0 past the last column"""
        cols = self.column_lengths
        return cols[j - 1] if j <= len(cols) else 0

    def __str__(self):
        return "(" + ",".join(str(r) for r in self.rows) + ")"


def parse_shape(text: str) -> Shape:
    try:
        rows = tuple(int(t) for t in text.split(','))
    except ValueError:
        raise InvalidShapeError(f"shape must be comma-separated row lengths, got {text!r}")
    return Shape(rows)


def conjugate(shape: Shape) -> Shape:
    return Shape(shape.column_lengths)


def two_column_shape(n: int, m: int) -> Shape:
    """
    The diagram with column lengths (n-m, m)

    Row form: m rows of length 2 followed by n-2m rows of length 1.
    """
    if m < 0 or 2 * m > n:
        raise InvalidShapeError(f"column lengths ({n - m},{m}) are not a partition")
    return Shape((2,) * m + (1,) * (n - 2 * m))


def partitions(n: int) -> List[Shape]:
    """All partitions of n, reverse-lexicographic: (n), (n-1,1), ..."""
    result = []

    def build(remaining, largest, prefix):
        if remaining == 0:
            result.append(Shape(tuple(prefix)))
            return
        for part in range(min(remaining, largest), 0, -1):
            prefix.append(part)
            build(remaining - part, part, prefix)
            prefix.pop()

    build(n, n, [])
    return result


@dataclass(frozen=True)
class StandardTableau:
    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, 'rows', rows)
        shape = Shape(tuple(len(r) for r in rows))  # validates the diagram

        entries = sorted(x for r in rows for x in r)
        if entries != list(range(1, shape.size + 1)):
            raise InvalidTableauError(f"entries must be exactly 1..{shape.size}: {rows}")
        for r in rows:
            if any(r[j] >= r[j + 1] for j in range(len(r) - 1)):
                raise InvalidTableauError(f"row {r} is not increasing")
        for i in range(len(rows) - 1):
            if any(rows[i][j] >= rows[i + 1][j] for j in range(len(rows[i + 1]))):
                raise InvalidTableauError(f"columns of {rows} are not increasing")

    @property
    def shape(self) -> Shape:
        return Shape(tuple(len(r) for r in self.rows))

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def column(self, j: int) -> Tuple[int, ...]:
        """Entries of column j (1-based), top to bottom"""
        return tuple(r[j - 1] for r in self.rows if len(r) >= j)

    def reading_word(self) -> Tuple[int, ...]:
        return tuple(x for r in self.rows for x in r)

    def to_json(self) -> dict:
        return {"shape": list(self.shape.rows), "rows": [list(r) for r in self.rows]}

    def __str__(self):
        return " / ".join(" ".join(str(x) for x in r) for r in self.rows)


def hook_lengths(shape: Shape) -> Tuple[Tuple[int, ...], ...]:
    """
    Hook length of every cell: arm + leg + 1

    Args:
        shape: Young diagram

    Returns:
        grid with the same row lengths as shape
    """
    cols = shape.column_lengths
    return tuple(
        tuple((row_len - j - 1) + (cols[j] - i - 1) + 1 for j in range(row_len))
        for i, row_len in enumerate(shape.rows)
    )


def syt_count(shape: Shape) -> int:
    """Number of standard Young tableaux, size! / prod(hooks); exact Python ints"""
    hooks = prod(h for row in hook_lengths(shape) for h in row)
    count, remainder = divmod(factorial(shape.size), hooks)
    assert remainder == 0
    return count


def two_column_hook_multiset(n: int, m: int) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """
    Hooks of the diagram with columns (n-m, m), column by column, top to bottom:
    first (n-m+1, ..., n-2m+2, n-2m, ..., 1), second (m, ..., 1)
    """
    first = tuple(range(n - m + 1, n - 2 * m + 1, -1)) + tuple(range(n - 2 * m, 0, -1))
    second = tuple(range(m, 0, -1))
    return first, second


def syt_enumerate(shape: Shape, bound: Optional[int] = None) -> List[StandardTableau]:
    """
    Every SYT of the given shape, ordered by row-reading word

    Raises:
        EnumerationBoundError if shape.size > bound (default config.ENUMERATION_MAX_N)
    """
    if bound is None:
        bound = config.ENUMERATION_MAX_N
    if shape.size > bound:
        raise EnumerationBoundError("syt_enumerate", shape.size, bound)

    target = shape.rows
    filled = [[] for _ in target]
    found = []

    def place(k):
        if k > shape.size:
            found.append(tuple(tuple(r) for r in filled))
            return
        for i, row_len in enumerate(target):
            here = len(filled[i])
            if here < row_len and (i == 0 or len(filled[i - 1]) > here):
                filled[i].append(k)
                place(k + 1)
                filled[i].pop()

    place(1)
    return sorted((StandardTableau(rows) for rows in found), key=StandardTableau.reading_word)
