"""
Robinson-Schensted Correspondence
Row insertion, the bijection w <-> (P, Q), its inverse and right cells
"""

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from errors import (
    DuplicateEntryError, EnumerationBoundError, InvalidTableauError, RankMismatchError,
)
from permutations import Perm
from tableaux import StandardTableau, syt_enumerate
import config


@dataclass(frozen=True)
class RSPair:
    P: StandardTableau  # insertion tableau
    Q: StandardTableau  # recording tableau

    @property
    def shape(self):
        return self.P.shape

    def to_json(self) -> dict:
        return {"P": self.P.to_json(), "Q": self.Q.to_json(), "shape": list(self.shape.rows)}


@dataclass(frozen=True)
class CellRelation:
    same_right: bool      # P(u) = P(w)
    same_left: bool       # Q(u) = Q(w)
    same_two_sided: bool  # same shape

    def to_json(self) -> dict:
        return {
            "same_right": self.same_right,
            "same_left": self.same_left,
            "same_two_sided": self.same_two_sided,
        }


def _bump(rows: List[List[int]], x: int) -> Tuple[int, int]:
    """Schensted row insertion in place; returns the 0-based new cell"""
    r = 0
    while True:
        if r == len(rows):
            rows.append([x])
            return r, 0
        row = rows[r]
        j = bisect_right(row, x)
        if j == len(row):
            row.append(x)
            return r, j
        row[j], x = x, row[j]
        r += 1


def row_insert(P: Sequence[Sequence[int]], x: int):
    """
    Insert x into a partial tableau

    Args:
        P: rows of an increasing (partial) tableau, or a StandardTableau
        x: letter not already present

    Returns:
        (new rows, (row, column)) with the created cell 1-based
    """
    rows = [list(r) for r in (P.rows if isinstance(P, StandardTableau) else P)]
    if any(x in r for r in rows):
        raise DuplicateEntryError(f"{x} is already in the tableau")
    r, c = _bump(rows, x)
    return tuple(tuple(row) for row in rows), (r + 1, c + 1)


def _rs_rows(images: Tuple[int, ...]):
    p_rows: List[List[int]] = []
    q_rows: List[List[int]] = []
    for label, x in enumerate(images, start=1):
        r, _ = _bump(p_rows, x)
        if r == len(q_rows):
            q_rows.append([])
        q_rows[r].append(label)
    return tuple(map(tuple, p_rows)), tuple(map(tuple, q_rows))


@lru_cache(maxsize=config.RS_CACHE_SIZE)
def robinson_schensted(w: Perm) -> RSPair:
    """P inserts w(1), ..., w(n); Q records the step at which each cell appeared"""
    p_rows, q_rows = _rs_rows(w.images)
    return RSPair(StandardTableau(p_rows), StandardTableau(q_rows))


def insertion_tableau(w: Perm) -> StandardTableau:
    return robinson_schensted(w).P


def recording_tableau(w: Perm) -> StandardTableau:
    return robinson_schensted(w).Q


def _as_tableau(t) -> StandardTableau:
    return t if isinstance(t, StandardTableau) else StandardTableau(t)


def inverse_rs(P, Q) -> Perm:
    """
    The unique w with robinson_schensted(w) = (P, Q), by reverse bumping

    Raises:
        InvalidTableauError on shape mismatch or non-standard input
    """
    P, Q = _as_tableau(P), _as_tableau(Q)
    if P.shape != Q.shape:
        raise InvalidTableauError(f"shape mismatch: P has {P.shape}, Q has {Q.shape}")

    rows = [list(r) for r in P.rows]
    where = {label: i for i, r in enumerate(Q.rows) for label in r}
    n = P.size
    images = [0] * n

    for k in range(n, 0, -1):
        i = where[k]
        x = rows[i].pop()
        if not rows[i]:
            rows.pop()
        for r in range(i - 1, -1, -1):
            row = rows[r]
            j = bisect_left(row, x) - 1
            row[j], x = x, row[j]
        images[k - 1] = x

    return Perm(tuple(images))


def cell_relation(u: Perm, w: Perm) -> CellRelation:
    if u.n != w.n:
        raise RankMismatchError(f"cannot compare S_{u.n} with S_{w.n}")
    ru, rw = robinson_schensted(u), robinson_schensted(w)
    return CellRelation(
        same_right=ru.P == rw.P,
        same_left=ru.Q == rw.Q,
        same_two_sided=ru.shape == rw.shape,
    )


@lru_cache(maxsize=config.CELL_CACHE_SIZE)
def cell_members_of(P: StandardTableau) -> Tuple[Perm, ...]:
    """Right cell whose insertion tableau is P, in SYT enumeration order of Q"""
    return tuple(inverse_rs(P, Q) for Q in syt_enumerate(P.shape, bound=P.size))


def right_cell_members(w: Perm, bound: Optional[int] = None) -> List[Perm]:
    """
    All u with P(u) = P(w), in SYT enumeration order of the Q-tableau

    Raises:
        EnumerationBoundError if n exceeds the enumeration bound
    """
    if bound is None:
        bound = config.ENUMERATION_MAX_N
    if w.n > bound:
        raise EnumerationBoundError("right_cell_members", w.n, bound)
    return list(cell_members_of(insertion_tableau(w)))

