"""
Symmetric - Permutations of S_k, Bruhat order and Kazhdan-Lusztig polynomials.

The character formula for a tableau with k fundamental columns is a sum over
a Bruhat interval of S_k weighted by Kazhdan-Lusztig polynomials evaluated at
1. This module is the arithmetic core behind that sum.

Architecture:
    - Permutations are tuples in one-line notation, values 1..k
    - compose(u, w) is the function u o w; left multiplication by s_i swaps
      the values i and i+1, right multiplication swaps positions
    - KazhdanLusztigTable memoizes whole columns {x: P_{x,w}} keyed by w;
      a column of w^{-1} is served from a cached column of w by inversion
    - Columns are built by the standard recursion on a left descent with the
      mu-correction; inserts are serialized by a lock so a table can be
      shared by worker threads

Usage Example:
    >>> kl_polynomial((1, 3, 2, 4), (3, 4, 1, 2))
    (1, 1)
    >>> format_polynomial(kl_polynomial((1, 3, 2, 4), (3, 4, 1, 2)))
    '1+t'
    >>> bruhat_leq((3, 4, 1, 2), (4, 2, 3, 1))
    False

Author: grtab developers
Version: 2.0
Last Modified: October 17, 2026
"""

from __future__ import annotations

import threading
from itertools import permutations
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .config import Config
from .errors import DimensionMismatch, KTooLarge, OutOfRange
from .log import get_logger

logger = get_logger(__name__)

Permutation = Tuple[int, ...]
KLPolynomial = Tuple[int, ...]
KLColumn = Dict[Permutation, KLPolynomial]


# ==================== PERMUTATIONS ====================

def identity(k: int) -> Permutation:
    return tuple(range(1, k + 1))


def longest_element(k: int) -> Permutation:
    return tuple(range(k, 0, -1))


def simple_reflection(i: int, k: int) -> Permutation:
    if not 1 <= i < k:
        raise OutOfRange(f"s_{i} does not exist in S_{k}")
    w = list(range(1, k + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def validate_permutation(w: Sequence[int]) -> Permutation:
    w = tuple(int(x) for x in w)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise OutOfRange(f"{w} is not a permutation of 1..{len(w)}")
    return w


def length(w: Permutation) -> int:
    """Number of inversions."""
    k = len(w)
    return sum(1 for a in range(k) for b in range(a + 1, k) if w[a] > w[b])


def compose(u: Permutation, w: Permutation) -> Permutation:
    """The permutation a -> u(w(a))."""
    if len(u) != len(w):
        raise DimensionMismatch(f"S_{len(u)} vs S_{len(w)}")
    return tuple(u[x - 1] for x in w)


def inverse(w: Permutation) -> Permutation:
    inv = [0] * len(w)
    for a, x in enumerate(w, start=1):
        inv[x - 1] = a
    return tuple(inv)


def left_multiply(i: int, w: Permutation) -> Permutation:
    """s_i w: swap the values i and i+1."""
    return tuple(i + 1 if x == i else i if x == i + 1 else x for x in w)


def is_left_descent(w: Permutation, i: int) -> bool:
    """s_i w < w, i.e. i+1 appears before i."""
    return w.index(i + 1) < w.index(i)


def left_descents(w: Permutation) -> List[int]:
    return [i for i in range(1, len(w)) if is_left_descent(w, i)]


def bruhat_leq(u: Permutation, v: Permutation) -> bool:
    """Tableau criterion: every sorted prefix of u is dominated entrywise by v's."""
    if len(u) != len(v):
        raise DimensionMismatch(f"S_{len(u)} vs S_{len(v)}")
    for p in range(1, len(u)):
        if any(a > b for a, b in zip(sorted(u[:p]), sorted(v[:p]))):
            return False
    return True


def all_permutations(k: int) -> Iterator[Permutation]:
    return permutations(range(1, k + 1))


def check_size(k: int, cap: int, what: str) -> None:
    if k > cap:
        raise KTooLarge(k, cap, what=what)


# ==================== POLYNOMIALS ====================

def _accumulate(target: List[int], poly: Optional[KLPolynomial], shift: int, factor: int) -> None:
    if not poly:
        return
    needed = len(poly) + shift
    if len(target) < needed:
        target.extend([0] * (needed - len(target)))
    for d, c in enumerate(poly):
        target[d + shift] += factor * c


def _trim(poly: List[int]) -> KLPolynomial:
    while poly and poly[-1] == 0:
        poly.pop()
    return tuple(poly)


def format_polynomial(poly: KLPolynomial) -> str:
    """Render (1, 1) as '1+t' and (1, 0, 2) as '1+2t^2'."""
    terms = []
    for d, c in enumerate(poly):
        if c == 0:
            continue
        if d == 0:
            terms.append(str(c))
            continue
        coeff = "" if c == 1 else str(c)
        terms.append(f"{coeff}t" if d == 1 else f"{coeff}t^{d}")
    return "+".join(terms).replace("+-", "-") if terms else "0"


# ==================== KAZHDAN-LUSZTIG TABLE ====================

class KazhdanLusztigTable:
    """
    Memo of Kazhdan-Lusztig columns.

    column(w) returns {x: P_{x,w}} for every x <= w. Reading a finished
    column needs no lock; computing one holds a re-entrant lock, so
    concurrent callers never duplicate work and results never depend on
    thread schedule.

    Example:
        >>> table = KazhdanLusztigTable()
        >>> table.at_one((1, 2, 3, 4), (3, 4, 1, 2))
        2
        >>> len(table.column((3, 2, 1)))
        6
    """

    def __init__(self):
        self._columns: Dict[Permutation, KLColumn] = {}
        self._lengths: Dict[Permutation, int] = {}
        self._lock = threading.RLock()

    def length(self, w: Permutation) -> int:
        cached = self._lengths.get(w)
        if cached is None:
            cached = length(w)
            self._lengths[w] = cached
        return cached

    def column(self, w: Permutation) -> KLColumn:
        cached = self._columns.get(w)
        if cached is not None:
            return cached
        with self._lock:
            cached = self._columns.get(w)
            if cached is not None:
                return cached
            mirrored = self._columns.get(inverse(w))
            if mirrored is not None:
                result = {inverse(x): p for x, p in mirrored.items()}
            else:
                result = self._compute_column(w)
            self._columns[w] = result
            return result

    def _compute_column(self, w: Permutation) -> KLColumn:
        descents = left_descents(w)
        if not descents:
            return {w: (1,)}
        s = descents[0]
        v = left_multiply(s, w)
        col_v = self.column(v)
        len_v = self.length(v)
        len_w = len_v + 1

        # z < v with sz < z and nonzero top coefficient mu(z, v)
        corrections = []
        for z, pz in col_v.items():
            if z == v:
                continue
            gap = len_v - self.length(z)
            if gap % 2 == 0:
                continue
            top = (gap - 1) // 2
            if top < len(pz) and pz[top] and is_left_descent(z, s):
                corrections.append((self.column(z), pz[top], (len_w - self.length(z)) // 2))

        members = set(col_v)
        members.update(left_multiply(s, x) for x in col_v)
        result: KLColumn = {}
        for x in members:
            sx = left_multiply(s, x)
            c = 1 if is_left_descent(x, s) else 0
            poly: List[int] = []
            _accumulate(poly, col_v.get(sx), 1 - c, 1)
            _accumulate(poly, col_v.get(x), c, 1)
            for col_z, mu, shift in corrections:
                _accumulate(poly, col_z.get(x), shift, -mu)
            trimmed = _trim(poly)
            if trimmed:
                result[x] = trimmed

        if len(result) >= 1000:
            logger.debug("KL column of %s: %d elements, %d corrections", w, len(result), len(corrections))
        return result

    def polynomial(self, u: Permutation, v: Permutation) -> KLPolynomial:
        if len(u) != len(v):
            raise DimensionMismatch(f"S_{len(u)} vs S_{len(v)}")
        if not bruhat_leq(u, v):
            return ()
        return self.column(v).get(u, ())

    def at_one(self, u: Permutation, v: Permutation) -> int:
        return sum(self.polynomial(u, v))

    def interval(self, v: Permutation) -> List[Permutation]:
        """Every x <= v."""
        return list(self.column(v))

    def clear(self) -> None:
        with self._lock:
            self._columns.clear()
            self._lengths.clear()


_DEFAULT_TABLE = KazhdanLusztigTable()


def default_table() -> KazhdanLusztigTable:
    """Process-wide table shared by the character and immanant code."""
    return _DEFAULT_TABLE


def kl_polynomial(u: Permutation, v: Permutation, config: Optional[Config] = None) -> KLPolynomial:
    """
    P_{u,v} as a constant-first coefficient tuple; () when u is not below v.

    Raises:
        KTooLarge: If k exceeds Config.HARD_MAX_K
    """
    config = config or Config()
    check_size(len(v), config.HARD_MAX_K, "a Kazhdan-Lusztig polynomial")
    return _DEFAULT_TABLE.polynomial(validate_permutation(u), validate_permutation(v))


def kl_at_one(u: Permutation, v: Permutation, config: Optional[Config] = None) -> int:
    return sum(kl_polynomial(u, v, config))
