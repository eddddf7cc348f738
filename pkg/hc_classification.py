"""
Highest Weight Harish-Chandra Classification
Membership in W_{p,q}, the rank m, canonical cell representatives,
associated-variety descriptors and Harish-Chandra cell sizes
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb, factorial, prod
from typing import List, Optional, Tuple

from errors import (
    DominanceError, EnumerationBoundError, InvalidShapeError, ParameterRangeError,
)
from permutations import Perm, inverse
from rsk import insertion_tableau
from tableaux import Shape
from weights import Weight, is_pq_dominant, neg_w_rho
import config


# ============================================
# TYPES
# ============================================

@dataclass(frozen=True)
class OrbitDescriptor:
    """Closure of O_m(p,q): strictly upper p x q blocks of rank <= m"""
    p: int
    q: int
    m: int

    def __post_init__(self):
        _check_triple(self.p, self.q, self.m)

    @property
    def n(self) -> int:
        return self.p + self.q

    @property
    def dim(self) -> int:
        return self.m * (self.n - self.m)

    @property
    def label(self) -> str:
        return f"O_{self.m}({self.p},{self.q})"

    def to_json(self) -> dict:
        return {"p": self.p, "q": self.q, "m": self.m, "dim": self.dim}

    def __str__(self):
        return f"O̅_{self.m}({self.p},{self.q}), dim {self.dim}"


@dataclass(frozen=True)
class Signature:
    p: int
    q: int
    m: int
    orbit: OrbitDescriptor
    gk_dim: int
    cell_size: int

    def to_json(self) -> dict:
        return {
            "p": self.p, "q": self.q, "m": self.m,
            "orbit": self.orbit.label, "dim": self.gk_dim, "cell_size": self.cell_size,
        }


@dataclass(frozen=True)
class Classification:
    w: Perm
    signatures: Tuple[Signature, ...]
    p_tableau_shape: Shape

    @property
    def is_harish_chandra(self) -> bool:
        return bool(self.signatures)

    def to_json(self) -> dict:
        return {
            "w": str(self.w),
            "shape": list(self.p_tableau_shape.rows),
            "signatures": [s.to_json() for s in self.signatures],
        }


@dataclass(frozen=True)
class CountIdentityReport:
    n: int
    p: int
    q: int
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs

    def to_json(self) -> dict:
        return {"n": self.n, "p": self.p, "q": self.q,
                "lhs": self.lhs, "rhs": self.rhs, "holds": self.holds}


@dataclass(frozen=True)
class CellSizeRow:
    orbit: OrbitDescriptor
    cell_size: int

    def to_json(self) -> dict:
        return {"m": self.orbit.m, "orbit": self.orbit.label,
                "dim": self.orbit.dim, "cell_size": self.cell_size}


@dataclass(frozen=True)
class CellSizeTable:
    n: int
    p: int
    q: int
    rows: Tuple[CellSizeRow, ...]

    @property
    def total(self) -> int:
        return sum(r.cell_size for r in self.rows)

    @property
    def expected(self) -> int:
        """n! / (p! q!)"""
        return comb(self.n, self.p)

    @property
    def holds(self) -> bool:
        return self.total == self.expected


def _check_triple(p: int, q: int, m: int):
    if p < 1 or q < 1:
        raise ParameterRangeError(f"p and q must be >= 1, got ({p},{q})")
    if not 0 <= m <= min(p, q):
        raise ParameterRangeError(f"m={m} outside 0..min(p,q)={min(p, q)}")


def valid_triples(n: int):
    """Every (p, q, m) with p + q = n, p, q >= 1, 0 <= m <= min(p, q)"""
    for p in range(1, n):
        q = n - p
        for m in range(min(p, q) + 1):
            yield p, q, m


# ============================================
# MEMBERSHIP AND THE RANK m
# ============================================

def hc_signatures(w: Perm) -> List[Tuple[int, int]]:
    """All (p, q), ascending in p, with -w(rho) (p,q)-dominant"""
    t = neg_w_rho(w)
    n = w.n
    return [(p, n - p) for p in range(1, n) if is_pq_dominant(t, p, n - p)]


def rank_m(t: Weight, p: int, q: int) -> int:
    """
    Largest m with indices i_1 < ... < i_m <= p < j_1 < ... < j_m and
    t_{i_k} <= t_{j_k}, pairs matched in the same order

    Both blocks are decreasing, so the last k indices of the first block
    against the first k of the second are the best choice for each k, and
    feasibility only gets easier as k shrinks.

    Raises:
        DominanceError if t is not (p,q)-dominant
    """
    if not is_pq_dominant(t, p, q):
        raise DominanceError(f"{t} is not ({p},{q})-dominant")

    values = t.doubled
    for k in range(min(p, q), 0, -1):
        if all(values[p - k + s] <= values[p + s] for s in range(k)):
            return k
    return 0


def rank_m_bruteforce(t: Weight, p: int, q: int) -> int:
    """Oracle for rank_m: try every pair of index sequences, longest first"""
    if p < 1 or q < 1 or p + q != t.n:
        raise ParameterRangeError(f"(p,q)=({p},{q}) is not a split of n={t.n}")

    values = t.doubled
    for k in range(min(p, q), 0, -1):
        for left in combinations(range(p), k):
            for right in combinations(range(p, p + q), k):
                if all(values[left[s]] <= values[right[s]] for s in range(k)):
                    return k
    return 0


# ============================================
# CANONICAL ELEMENTS
# ============================================

def canonical_elements(p: int, q: int, m: int) -> Tuple[Perm, Perm]:
    """
    w_{p,q,m} = (n, ..., p+m+1, p, ..., 1, p+m, ..., p+1)
    sigma_{p,q,m} = (n-q, ..., n-q-m+1, n, ..., n-q+1, p-m, ..., 1)
    """
    _check_triple(p, q, m)
    n = p + q
    w = tuple(range(n, p + m, -1)) + tuple(range(p, 0, -1)) + tuple(range(p + m, p, -1))
    sigma = (tuple(range(n - q, n - q - m, -1)) + tuple(range(n, n - q, -1))
             + tuple(range(p - m, 0, -1)))
    return Perm(w), Perm(sigma)


def inverse_canonical_mate(n: int, m: int) -> Perm:
    """(n-m, ..., 1, n, ..., n-m+1), right-cell equivalent to w_{p,q,m}^-1"""
    if not 0 <= m <= n:
        raise ParameterRangeError(f"m={m} outside 0..{n}")
    return Perm(tuple(range(n - m, 0, -1)) + tuple(range(n, n - m, -1)))


def neg_rho_closed_form(p: int, q: int, m: int) -> Weight:
    """
    1/2 (n-2m-1, ..., n-2m-2p+1, n-1, ..., n-2m+1, n-2m-2p-1, ..., 1-n),
    blocks of length p, m and q-m
    """
    _check_triple(p, q, m)
    n = p + q
    doubled = ([n - 2 * m - 1 - 2 * k for k in range(p)]
               + [n - 1 - 2 * k for k in range(m)]
               + [n - 2 * m - 2 * p - 1 - 2 * k for k in range(q - m)])
    return Weight(tuple(doubled))


def decreasing_representative(w: Perm) -> Perm:
    """
    z = (s_{n-m}, ..., s_1, a_m, ..., a_1): the first column of P(w) read
    bottom-up, then the second column bottom-up

    Raises:
        InvalidShapeError if P(w) has more than two columns
    """
    P = insertion_tableau(w)
    if P.shape.rows[0] > 2:
        raise InvalidShapeError(f"P({w}) has shape {P.shape}, more than two columns")
    return Perm(tuple(reversed(P.column(1))) + tuple(reversed(P.column(2))))


# ============================================
# CELL SIZES
# ============================================

def cell_size(n: int, m: int) -> int:
    """
    Number of L_w with V(L_w) the closure of O_m(p,q):
    1 if m = 0, n-1 if m = 1, n(n-1)...(n-m+2)(n-2m+1)/m! otherwise
    """
    if m < 0 or 2 * m > n:
        raise ParameterRangeError(f"cell_size needs 0 <= 2m <= n, got n={n}, m={m}")
    if m == 0:
        return 1
    numerator = prod(range(n - m + 2, n + 1)) * (n - 2 * m + 1)
    size, remainder = divmod(numerator, factorial(m))
    assert remainder == 0
    return size


def cell_size_table(n: int, p: int, q: int) -> CellSizeTable:
    if p < 1 or q < 1 or p + q != n:
        raise ParameterRangeError(f"(p,q)=({p},{q}) is not a split of n={n} with p,q >= 1")
    rows = tuple(
        CellSizeRow(OrbitDescriptor(p, q, m), cell_size(n, m))
        for m in range(min(p, q) + 1)
    )
    return CellSizeTable(n, p, q, rows)


def count_identity_check(n: int, p: int, q: int) -> CountIdentityReport:
    """n + sum_{2 <= m <= min(p,q)} cell_size(n, m) against n! / (p! q!)"""
    if p < 2 or q < 2:
        raise ParameterRangeError(f"identity needs p, q >= 2, got ({p},{q})")
    if p + q != n:
        raise ParameterRangeError(f"p + q = {p + q} differs from n = {n}")
    lhs = n + sum(cell_size(n, m) for m in range(2, min(p, q) + 1))
    rhs = factorial(n) // (factorial(p) * factorial(q))
    return CountIdentityReport(n, p, q, lhs, rhs)


# ============================================
# CLASSIFICATION
# ============================================

@lru_cache(maxsize=config.RS_CACHE_SIZE)
def classify(w: Perm) -> Classification:
    """Every Harish-Chandra signature of L_w with its orbit and cell size"""
    n = w.n
    t = neg_w_rho(w)
    signatures = []
    for p, q in hc_signatures(w):
        m = rank_m(t, p, q)
        orbit = OrbitDescriptor(p, q, m)
        signatures.append(Signature(p, q, m, orbit, orbit.dim, cell_size(n, m)))
    return Classification(w, tuple(signatures), insertion_tableau(w).shape)


def enumerate_Wpq(p: int, q: int, bound: Optional[int] = None) -> List[Perm]:
    """
    All w with -w(rho) (p,q)-dominant

    -w(rho) has doubled coordinates 2 w^-1(i) - n - 1, so w^-1 must be
    decreasing on both blocks; choosing the first block's values fixes w.
    """
    if p < 1 or q < 1:
        raise ParameterRangeError(f"p and q must be >= 1, got ({p},{q})")
    n = p + q
    if bound is None:
        bound = config.ENUMERATION_MAX_N
    if n > bound:
        raise EnumerationBoundError("enumerate_Wpq", n, bound)

    elements = []
    for first in combinations(range(1, n + 1), p):
        rest = [x for x in range(1, n + 1) if x not in first]
        w_inv = tuple(sorted(first, reverse=True)) + tuple(sorted(rest, reverse=True))
        elements.append(inverse(Perm(w_inv)))
    return elements
