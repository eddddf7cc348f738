"""
Integral Weights for sl(n)
rho, the Weyl-group action, (p,q)-dominance and highest weights -w(rho) - rho
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

import numpy as np

from errors import ParameterRangeError, RankMismatchError
from permutations import Perm, inverse


@dataclass(frozen=True)
class Weight:
    """Coordinates stored doubled: doubled[i] = 2 * lambda_{i+1}"""
    doubled: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'doubled', tuple(int(x) for x in self.doubled))

    @property
    def n(self) -> int:
        return len(self.doubled)

    @property
    def coordinates(self) -> Tuple[Fraction, ...]:
        return tuple(Fraction(x, 2) for x in self.doubled)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.doubled, dtype=np.int64)

    @classmethod
    def from_array(cls, values) -> 'Weight':
        return cls(tuple(int(x) for x in values))

    def __neg__(self) -> 'Weight':
        return Weight.from_array(-self.as_array())

    def __sub__(self, other: 'Weight') -> 'Weight':
        _check_rank(self, other.n)
        return Weight.from_array(self.as_array() - other.as_array())

    def to_json(self) -> dict:
        return {"doubled": list(self.doubled)}

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.coordinates) + ")"


def _check_rank(lam: Weight, n: int):
    if lam.n != n:
        raise RankMismatchError(f"weight of rank {lam.n} used with rank {n}")


def rho(n: int) -> Weight:
    """rho_i = (n + 1 - 2i) / 2"""
    if n < 1:
        raise ParameterRangeError(f"n must be >= 1, got {n}")
    return Weight.from_array(n + 1 - 2 * np.arange(1, n + 1))


def act(w: Perm, lam: Weight) -> Weight:
    """(w.lam)_i = lam_{w^-1(i)}: the value at position j moves to position w(j)"""
    _check_rank(lam, w.n)
    moved = np.empty(w.n, dtype=np.int64)
    moved[np.asarray(w.images) - 1] = lam.as_array()
    return Weight.from_array(moved)


def neg_w_rho(w: Perm) -> Weight:
    """-w(rho), doubled coordinates 2 w^-1(i) - n - 1"""
    n = w.n
    return Weight(tuple(2 * x - n - 1 for x in inverse(w).images))


def neg_w_rho_rows(images: np.ndarray) -> np.ndarray:
    """-w(rho) doubled, one row per permutation in a (k, n) array of one-line images"""
    images = np.asarray(images, dtype=np.int64)
    n = images.shape[1]
    positions = np.argsort(images, axis=1) + 1  # row-wise w^-1
    return 2 * positions - n - 1


def highest_weight_of(w: Perm) -> Weight:
    """lambda = -w(rho) - rho, the highest weight of L_w"""
    return neg_w_rho(w) - rho(w.n)


def is_integral(lam: Weight) -> bool:
    return bool(np.all(lam.as_array() % 2 == 0))


def _check_split(n: int, p: int, q: int):
    if p < 1 or q < 1 or p + q != n:
        raise ParameterRangeError(f"(p,q)=({p},{q}) is not a split of n={n} with p,q >= 1")


def is_pq_dominant(lam: Weight, p: int, q: int) -> bool:
    """
    lam_i - lam_j is a nonnegative integer for i < j inside the first p
    coordinates and inside the last q coordinates

    Raises:
        ParameterRangeError unless p, q >= 1 and p + q = n
    """
    _check_split(lam.n, p, q)

    values = lam.doubled
    for i in range(lam.n - 1):
        if i == p - 1:
            continue
        step = values[i] - values[i + 1]  # doubled lam_i - lam_{i+1}
        if step < 0 or step % 2:
            return False
    return True


def pq_dominant_mask(rows: np.ndarray, p: int, q: int) -> np.ndarray:
    """is_pq_dominant over every row of a (k, n) array of doubled weights"""
    rows = np.asarray(rows, dtype=np.int64)
    _check_split(rows.shape[1], p, q)

    steps = -np.diff(rows, axis=1)
    steps = np.delete(steps, p - 1, axis=1)  # the step across the block boundary is free
    return np.all((steps >= 0) & (steps % 2 == 0), axis=1)
