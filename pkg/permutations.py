"""
Permutations of {1, ..., n} in one-line notation
Pattern containment, block-decreasing words and good full elements
"""

from dataclasses import dataclass
from itertools import combinations, permutations as _itertools_permutations
from typing import Iterator, Optional, Tuple

from errors import (
    InvalidPermutationError, ParameterRangeError, PermutationParseError,
)
import config


@dataclass(frozen=True)
class Perm:
    """An element of S_n; images[i-1] = w(i), values 1-based."""
    images: Tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, 'images', images)
        if not images:
            raise InvalidPermutationError("permutation must have at least one letter")
        if sorted(images) != list(range(1, len(images) + 1)):
            raise InvalidPermutationError(f"{images} is not a permutation of 1..{len(images)}")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __len__(self) -> int:
        return len(self.images)

    def __iter__(self):
        return iter(self.images)

    def __str__(self) -> str:
        return render_perm(self)


@dataclass(frozen=True)
class PatternOccurrence:
    positions: Tuple[int, ...]  # 1-based, strictly increasing
    pattern: Perm

    def subword(self, w: Perm) -> Tuple[int, ...]:
        return tuple(w(i) for i in self.positions)

    def to_json(self) -> dict:
        return {"pattern": render_perm(self.pattern), "positions": list(self.positions)}


def _is_number(token: str) -> bool:
    # ASCII digits only, so "²" and "٣" are rejected
    return token.isascii() and token.isdecimal()


def parse_perm(text: str) -> Perm:
    """
    Parse "4,2,1,3" or the compact digit form "4213"

    Raises:
        PermutationParseError naming the offending (1-based) position
    """
    text = text.strip()
    if not text:
        raise PermutationParseError("empty permutation")

    if ',' in text:
        tokens = [t.strip() for t in text.split(',')]
    elif _is_number(text):
        if len(text) > config.COMPACT_PERM_MAX_N:
            raise PermutationParseError(
                f"compact digit form only allowed for n <= {config.COMPACT_PERM_MAX_N}; use commas"
            )
        tokens = list(text)
    else:
        tokens = [text]

    n = len(tokens)
    values = []
    seen = set()
    for position, token in enumerate(tokens, start=1):
        if not _is_number(token):
            raise PermutationParseError(f"not a positive integer: {token!r}", position, token)
        value = int(token)
        if not 1 <= value <= n:
            raise PermutationParseError(f"value {value} out of range 1..{n}", position, token)
        if value in seen:
            raise PermutationParseError(f"duplicate value {value}", position, token)
        seen.add(value)
        values.append(value)

    return Perm(tuple(values))


def render_perm(w: Perm) -> str:
    return ",".join(str(x) for x in w.images)


def identity(n: int) -> Perm:
    return Perm(tuple(range(1, n + 1)))


def longest_element(n: int) -> Perm:
    """w0 = (n, n-1, ..., 1); stands in for the "w = -Id" of the m = 0 case"""
    if n < 1:
        raise ParameterRangeError(f"n must be >= 1, got {n}")
    return Perm(tuple(range(n, 0, -1)))


def inverse(w: Perm) -> Perm:
    inv = [0] * w.n
    for i, value in enumerate(w.images, start=1):
        inv[value - 1] = i
    return Perm(tuple(inv))


def compose(u: Perm, v: Perm) -> Perm:
    """(u o v)(i) = u(v(i))"""
    if u.n != v.n:
        raise InvalidPermutationError(f"cannot compose S_{u.n} with S_{v.n}")
    return Perm(tuple(u.images[x - 1] for x in v.images))


def all_perms(n: int) -> Iterator[Perm]:
    """S_n in lexicographic order"""
    for images in _itertools_permutations(range(1, n + 1)):
        yield Perm(images)


# ============================================
# PATTERNS
# ============================================

PATTERN_3412 = Perm((3, 4, 1, 2))
PATTERN_4231 = Perm((4, 2, 3, 1))
SMOOTHNESS_PATTERNS = (PATTERN_3412, PATTERN_4231)


def _order_isomorphic(letters, pattern_images) -> bool:
    k = len(letters)
    for s in range(k):
        for t in range(s + 1, k):
            if (letters[s] < letters[t]) != (pattern_images[s] < pattern_images[t]):
                return False
    return True


def contains_pattern_naive(w: Perm, pat: Perm) -> Optional[PatternOccurrence]:
    """Oracle: scan every k-subset of positions in lexicographic order"""
    k = pat.n
    if k > w.n:
        return None
    for chosen in combinations(range(w.n), k):
        if _order_isomorphic([w.images[i] for i in chosen], pat.images):
            return PatternOccurrence(tuple(i + 1 for i in chosen), pat)
    return None


def contains_pattern(w: Perm, pat: Perm) -> Optional[PatternOccurrence]:
    """
    Lexicographically smallest occurrence of pat in w, or None

    Depth-first over positions; a partial choice is abandoned as soon as its
    relative order disagrees with the pattern prefix, so the first complete
    choice is the smallest one.
    """
    n, k = w.n, pat.n
    if k > n:
        return None
    images, target = w.images, pat.images
    chosen = []

    def extend(start):
        t = len(chosen)
        if t == k:
            return True
        for j in range(start, n - (k - t) + 1):
            value = images[j]
            if all((images[chosen[s]] < value) == (target[s] < target[t]) for s in range(t)):
                chosen.append(j)
                if extend(j + 1):
                    return True
                chosen.pop()
        return False

    if extend(0):
        return PatternOccurrence(tuple(i + 1 for i in chosen), pat)
    return None


def find_smooth_obstruction(w: Perm) -> Optional[PatternOccurrence]:
    """First occurrence of 3412, else of 4231, else None"""
    for pat in SMOOTHNESS_PATTERNS:
        occurrence = contains_pattern(w, pat)
        if occurrence is not None:
            return occurrence
    return None


# ============================================
# BLOCK-DECREASING WORDS
# ============================================

def is_ab_decreasing(w: Perm, a: int, b: int) -> bool:
    """
    w = (x_a, ..., x_1, y_b, ..., y_1) with both blocks strictly decreasing
    and x_i < y_i for i = 1..min(a, b)
    """
    if a < 0 or b < 0 or a + b != w.n:
        raise ParameterRangeError(f"split ({a},{b}) does not add up to n={w.n}")

    images = w.images
    first, second = images[:a], images[a:]
    if any(first[i] <= first[i + 1] for i in range(len(first) - 1)):
        return False
    if any(second[i] <= second[i + 1] for i in range(len(second) - 1)):
        return False

    n = w.n
    return all(images[a - i] < images[n - i] for i in range(1, min(a, b) + 1))


def _good_full_separation(w: Perm, a: int) -> bool:
    """s_l > a_k, or one of them does not exist"""
    first, second = w.images[:a], w.images[a:]
    if not first or not second:
        return True
    top = first[0]          # s_{n-m}
    bottom = second[-1]     # a_1
    below_top = [x for x in second if x < top]
    above_bottom = [x for x in first if x > bottom]
    if not below_top or not above_bottom:
        return True
    return min(above_bottom) > max(below_top)


def is_good_full(w: Perm) -> Optional[Tuple[int, int]]:
    """
    Size (n-m, m) of a good full element, smallest m first; None otherwise
    """
    n = w.n
    for m in range(n + 1):
        a = n - m
        if is_ab_decreasing(w, a, m) and _good_full_separation(w, a):
            return (a, m)
    return None
