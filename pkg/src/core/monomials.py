"""
Monomials - Dominant monomials, multisegments and the dictionaries between them.

Dominant monomials in the variables Y_{i,s} label simple modules; tableaux in
the window C_l label the same objects on the cluster side. This module holds
the dictionaries connecting the two (psi and phi_tilde), the multisegment
language of type A, the Nakajima order on monomials, the Zelevinsky dual
(Moeglin-Waldspurger) and the Leclerc-style 4231/3412 reality criterion.

Architecture:
    - DominantMonomial is an immutable multiset of (i, s) pairs
    - Segments are pairs (b, e) with b <= e; Multisegment keeps them in the
      canonical print order (end descending, then start descending)
    - Columns of gap weight one correspond to single variables Y_{i,s}:
      column [j, j+n] minus {j+n-i} is Y_{i, i-2j}

Usage Example:
    >>> M = DominantMonomial.from_pairs([(2, 0), (2, -4), (4, -4), (2, -8)])
    >>> str(monomial_to_multisegment(M))
    '[0,1]+[-3,0]+[-2,-1]+[-4,-3]'
    >>> str(zelevinsky_dual(Multisegment.parse("[0,2]")))
    '[2,2]+[1,1]+[0,0]'

Author: grtab developers
Version: 2.0
Last Modified: October 17, 2026
"""

from __future__ import annotations

import re
from collections import Counter, defaultdict
from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .config import Config
from .errors import FormatError, KTooLarge, NotFundamental, OutOfRange, OutOfWindow, ParityError
from .tableaux import Column, Tableau, column_gap_weight, small_gaps_form

Segment = Tuple[int, int]
Node = Tuple[int, int]

_Y_TOKEN = re.compile(r"Y\[\s*(-?\d+)\s*,\s*(-?\d+)\s*\](?:\^(\d+))?")
_SEGMENT_TOKEN = re.compile(r"\[\s*(-?\d+)\s*,\s*(-?\d+)\s*\](?:\^(\d+))?")


# ==================== DOMINANT MONOMIALS ====================

@dataclass(frozen=True)
class DominantMonomial:
    """
    A finite multiset of variables Y_{i,s}.

    Attributes:
        factors (Tuple[Tuple[int, int, int], ...]): Sorted (i, s, multiplicity)

    Example:
        >>> M = DominantMonomial.from_pairs([(2, 0), (1, -1), (2, 0)])
        >>> str(M)
        'Y[1,-1] Y[2,0]^2'
        >>> M.degree
        3
    """

    factors: Tuple[Tuple[int, int, int], ...] = ()

    @classmethod
    def from_counter(cls, counts: Dict[Node, int]) -> "DominantMonomial":
        return cls(tuple((i, s, c) for (i, s), c in sorted(counts.items()) if c > 0))

    @classmethod
    def from_pairs(cls, pairs: Iterable[Node]) -> "DominantMonomial":
        return cls.from_counter(Counter(pairs))

    @classmethod
    def from_list(cls, data: Sequence[Sequence[int]]) -> "DominantMonomial":
        """Inverse of to_list: [[i, s, multiplicity], ...]."""
        counts: Counter = Counter()
        for item in data:
            i, s, c = (list(item) + [1])[:3]
            counts[(int(i), int(s))] += int(c)
        return cls.from_counter(counts)

    @classmethod
    def parse(cls, text: str) -> "DominantMonomial":
        """Read 'Y[1,-5] Y[1,-3]^2'; '1' is the empty monomial."""
        text = text.strip()
        if text in ("", "1"):
            return cls()
        counts: Counter = Counter()
        consumed = _Y_TOKEN.sub("", text).replace("*", "").strip()
        if consumed:
            raise FormatError(f"cannot parse monomial {text!r}")
        for i, s, power in _Y_TOKEN.findall(text):
            counts[(int(i), int(s))] += int(power) if power else 1
        return cls.from_counter(counts)

    def counter(self) -> Counter:
        return Counter({(i, s): c for i, s, c in self.factors})

    def pairs(self) -> List[Node]:
        out: List[Node] = []
        for i, s, c in self.factors:
            out.extend([(i, s)] * c)
        return out

    @property
    def degree(self) -> int:
        return sum(c for _, _, c in self.factors)

    def __mul__(self, other: "DominantMonomial") -> "DominantMonomial":
        return DominantMonomial.from_counter(self.counter() + other.counter())

    def to_list(self) -> List[List[int]]:
        return [[i, s, c] for i, s, c in self.factors]

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return " ".join(f"Y[{i},{s}]" + (f"^{c}" if c > 1 else "") for i, s, c in self.factors)


def monomial_weight(M: DominantMonomial, n: int) -> Tuple[int, ...]:
    """Weight sum over factors of omega_i (coordinates omega_1..omega_{n-1})."""
    w = [0] * (n - 1)
    for i, _, c in M.factors:
        if not 1 <= i <= n - 1:
            raise OutOfRange(f"node {i} outside [1, {n - 1}]")
        w[i - 1] += c
    return tuple(w)


def kr_monomial(i: int, k: int, s: int) -> DominantMonomial:
    """Kirillov-Reshetikhin string Y_{i,s} Y_{i,s+2} ... Y_{i,s+2k-2}."""
    return DominantMonomial.from_pairs((i, s + 2 * t) for t in range(k))


# ==================== COLUMNS AND VARIABLES ====================

def fundamental_column(i: int, s: int, n: int) -> Column:
    """
    The column of gap weight one attached to Y_{i,s}.

    Raises:
        OutOfRange: If i is not in [1, n-1]
        ParityError: If i - s is odd
        OutOfWindow: If the column would start below 1
    """
    if not 1 <= i <= n - 1:
        raise OutOfRange(f"node {i} outside [1, {n - 1}]")
    if (i - s) % 2:
        raise ParityError(f"Y[{i},{s}] has i - s odd")
    j = (i - s) // 2
    if j < 1:
        raise OutOfWindow(f"Y[{i},{s}] has no column (start {j} < 1)")
    return tuple(x for x in range(j, j + n + 1) if x != j + n - i)


def column_to_fundamental(col: Column) -> Node:
    """Inverse of fundamental_column."""
    if column_gap_weight(col) != 1:
        raise NotFundamental(f"column {col} has gap weight {column_gap_weight(col)}")
    n = len(col)
    j = col[0]
    missing = next(x for x in range(j, j + n + 1) if x not in col)
    i = j + n - missing
    return i, i - 2 * j


def in_window(i: int, s: int, n: int, m: int) -> bool:
    """Y_{i,s} belongs to the window C_l, l = m - n - 1."""
    if not 1 <= i <= n - 1 or (i - s) % 2:
        return False
    k = (i - s - 2) // 2
    return 0 <= k <= m - n - 1


def psi(T: Tableau) -> DominantMonomial:
    """Dominant monomial of T: one variable per fundamental column of T'."""
    T_prime, _ = small_gaps_form(T)
    return DominantMonomial.from_pairs(column_to_fundamental(col) for col in T_prime.columns)


def phi_tilde(M: DominantMonomial, n: int, m: int) -> Tableau:
    """
    Small-gaps tableau of a dominant monomial in the window C_{m-n-1}.

    Raises:
        OutOfWindow: If a factor lies outside the window
        ParityError: If a factor has i - s odd
    """
    cols = []
    for i, s in M.pairs():
        if (i - s) % 2:
            raise ParityError(f"Y[{i},{s}] has i - s odd")
        if not in_window(i, s, n, m):
            raise OutOfWindow(f"Y[{i},{s}] is outside the window of Gr({n},{m})")
        cols.append(fundamental_column(i, s, n))
    return Tableau.from_columns(cols, n, m)


def kr_plucker(i: int, t: int, n: int) -> Column:
    """Label of the initial-seed vertex (i, t): [1, n-i] ∪ [n-i+t+2, n+t+1]."""
    return tuple(range(1, n - i + 1)) + tuple(range(n - i + t + 2, n + t + 2))


# ==================== MULTISEGMENTS ====================

@dataclass(frozen=True)
class Multisegment:
    """
    A multiset of segments [b, e], kept sorted by end then start, both descending.

    Example:
        >>> str(Multisegment.of([(-2, -1), (0, 0)]))
        '[0,0]+[-2,-1]'
    """

    segments: Tuple[Segment, ...] = ()

    @classmethod
    def of(cls, segments: Iterable[Segment]) -> "Multisegment":
        segs = [(int(b), int(e)) for b, e in segments]
        for b, e in segs:
            if b > e:
                raise OutOfRange(f"segment [{b},{e}] is empty")
        return cls(tuple(sorted(segs, key=lambda seg: (-seg[1], -seg[0]))))

    @classmethod
    def parse(cls, text: str) -> "Multisegment":
        """Read '[0,1]+[-3,0]'; '0' is the empty multisegment."""
        text = text.strip()
        if text in ("", "0", "[]"):
            return cls()
        if _SEGMENT_TOKEN.sub("", text).replace("+", "").strip():
            raise FormatError(f"cannot parse multisegment {text!r}")
        segs: List[Segment] = []
        for b, e, power in _SEGMENT_TOKEN.findall(text):
            segs.extend([(int(b), int(e))] * (int(power) if power else 1))
        return cls.of(segs)

    def __len__(self) -> int:
        return len(self.segments)

    def to_list(self) -> List[List[int]]:
        return [[b, e] for b, e in self.segments]

    def __str__(self) -> str:
        if not self.segments:
            return "0"
        return "+".join(f"[{b},{e}]" for b, e in self.segments)


def segment_to_node(seg: Segment) -> Node:
    b, e = seg
    return e - b + 1, b + e - 1


def node_to_segment(i: int, s: int) -> Segment:
    if (s - i) % 2:
        raise ParityError(f"Y[{i},{s}] has i - s odd")
    return (s - i + 2) // 2, (s + i) // 2


def monomial_to_multisegment(M: DominantMonomial) -> Multisegment:
    return Multisegment.of(node_to_segment(i, s) for i, s in M.pairs())


def multisegment_to_monomial(ms: Multisegment) -> DominantMonomial:
    return DominantMonomial.from_pairs(segment_to_node(seg) for seg in ms.segments)


def segment_to_column(seg: Segment, n: int) -> Column:
    """Column [1-a, 1-a+n] minus {n-b} of a segment [a, b] of length below n."""
    a, b = seg
    if b - a + 1 > n - 1:
        raise OutOfRange(f"segment [{a},{b}] is too long for n = {n}")
    return tuple(x for x in range(1 - a, 2 - a + n) if x != n - b)


@dataclass(frozen=True)
class SegmentProfile:
    """
    Start and end sequences of a multisegment with the matching permutation.

    mu and lam are non-increasing; the multisegment equals
    {[mu_{w^{-1}(a)}, lam_a]}, and w is the maximal such permutation.
    """

    k: int
    mu: Tuple[int, ...]
    lam: Tuple[int, ...]
    w: Tuple[int, ...]


def _maximal_matching(pairs: Sequence[Tuple[int, int]], targets: Sequence[int]) -> Tuple[int, ...]:
    """
    Longest permutation sending position a (pairs sorted by key) to an index of targets.

    ``pairs`` lists (slot value, target value) in slot order; ``targets`` is
    the non-increasing target sequence. Within a block of equal slot values
    targets are taken in increasing value (decreasing index) and within a
    block of equal target values indices are handed out in decreasing order,
    which makes the permutation decreasing on both kinds of blocks.
    """
    order = sorted(range(len(pairs)), key=lambda a: (pairs[a][0], pairs[a][1]))
    available: Dict[int, List[int]] = defaultdict(list)
    for idx, value in enumerate(targets, start=1):
        available[value].append(idx)
    for stack in available.values():
        stack.sort(reverse=True)
    perm = [0] * len(pairs)
    for slot, a in enumerate(order):
        perm[slot] = available[pairs[a][1]].pop(0)
    return tuple(perm)


def segment_profile(ms: Multisegment) -> SegmentProfile:
    """
    Profile (mu, lam, w) of a multisegment.

    Example:
        >>> segment_profile(Multisegment.parse("[0,1]+[-1,0]+[-1,-1]+[-2,-2]")).w
        (1, 3, 2, 4)
    """
    k = len(ms)
    lam = tuple(sorted((e for _, e in ms.segments), reverse=True))
    mu = tuple(sorted((b for b, _ in ms.segments), reverse=True))
    # slot value -e makes slots follow lam (non-increasing ends)
    pairs = [(-e, b) for b, e in ms.segments]
    start_index = _maximal_matching(pairs, mu)  # a -> index into mu, i.e. w^{-1}
    w = [0] * k
    for a, idx in enumerate(start_index, start=1):
        w[idx - 1] = a
    return SegmentProfile(k, mu, lam, tuple(w))


# ==================== NAKAJIMA ORDER ====================

def a_root_expansion(i: int, s: int, n: int) -> Dict[Node, int]:
    """A_{i,s} = Y_{i,s+1} Y_{i,s-1} / (Y_{i-1,s} Y_{i+1,s}), nodes 0 and n omitted."""
    factors: Dict[Node, int] = {(i, s + 1): 1, (i, s - 1): 1}
    if i - 1 >= 1:
        factors[(i - 1, s)] = -1
    if i + 1 <= n - 1:
        factors[(i + 1, s)] = -1
    return factors


def monomial_leq(M: DominantMonomial, M_prime: DominantMonomial, n: int) -> bool:
    """
    M <= M' when M'/M is a product of A_{i,s} with nonnegative exponents.

    The quotient is peeled from its largest s downward: the variable
    Y_{i,s_max} can only come from A_{i,s_max-1}, which fixes that
    exponent. The process stops once the quotient is trivial.
    """
    diff: Dict[Node, int] = defaultdict(int)
    for node, c in M_prime.counter().items():
        diff[node] += c
    for node, c in M.counter().items():
        diff[node] -= c
    diff = {node: c for node, c in diff.items() if c}
    if not diff:
        return True
    if any(not 1 <= i <= n - 1 for i, _ in diff):
        return False
    floor = min(s for _, s in diff)
    exponents: Dict[Node, int] = defaultdict(int)
    while diff:
        top = max(s for _, s in diff)
        if top - 2 < floor:
            return False
        for i in sorted({i for i, s in diff if s == top}):
            c = diff.get((i, top), 0)
            if not c:
                continue
            exponents[(i, top - 1)] += c
            for node, e in a_root_expansion(i, top - 1, n).items():
                diff[node] = diff.get(node, 0) - c * e
            diff = {node: v for node, v in diff.items() if v}
    return all(c >= 0 for c in exponents.values())


# ==================== ZELEVINSKY DUAL ====================

def zelevinsky_dual(ms: Multisegment) -> Multisegment:
    """
    Moeglin-Waldspurger involution.

    Each pass starts at the largest end e0 with the largest start ending
    there, then walks e0-1, e0-2, ... choosing at each end the largest start
    strictly smaller than the previous one. A chain of length r+1 emits
    [e0-r, e0] and shortens every used segment by its last letter.

    Example:
        >>> str(zelevinsky_dual(Multisegment.parse("[0,0]+[-1,-1]+[-2,-1]+[-3,-2]+[-3,-2]+[-4,-3]+[-4,-4]+[-5,-5]")))
        '[-3,0]+[-2,-1]+[-5,-2]+[-4,-3]'
    """
    remaining: Counter = Counter(ms.segments)
    result: List[Segment] = []
    while remaining:
        e0 = max(e for _, e in remaining)
        chain: List[Segment] = []
        previous: Optional[int] = None
        end = e0
        while True:
            starts = [b for (b, e), c in remaining.items()
                      if c > 0 and e == end and (previous is None or b < previous)]
            if not starts:
                break
            start = max(starts)
            chain.append((start, end))
            previous = start
            end -= 1
        result.append((e0 - len(chain) + 1, e0))
        for seg in chain:
            remaining[seg] -= 1
            if remaining[seg] == 0:
                del remaining[seg]
            b, e = seg
            if b <= e - 1:
                remaining[(b, e - 1)] += 1
    return Multisegment.of(result)


# ==================== REALITY CRITERION ====================

class LMResult(Enum):
    REAL = "Real"
    NON_REAL = "NonReal"
    NOT_APPLICABLE = "NotApplicable"


def precedes(first: Segment, second: Segment) -> bool:
    """first precedes second: both ends move right and the union is a segment."""
    (b1, e1), (b2, e2) = first, second
    return b1 < b2 and e1 < e2 and b2 <= e1 + 1


def is_regular(ms: Multisegment) -> bool:
    starts = [b for b, _ in ms.segments]
    ends = [e for _, e in ms.segments]
    return len(set(starts)) == len(starts) and len(set(ends)) == len(ends)


def _is_4231(d: Sequence[Segment]) -> bool:
    k = len(d)
    b = [seg[0] for seg in d]
    chain = all(precedes(d[i + 1], d[i]) for i in range(2, k - 1))
    return chain and precedes(d[2], d[0]) and b[k - 1] < b[1] < b[k - 2]


def _is_3412(d: Sequence[Segment]) -> bool:
    k = len(d)
    b = [seg[0] for seg in d]
    last = 1 if k == 4 else k - 2
    chain = all(precedes(d[i + 1], d[i]) for i in range(3, k - 1))
    return chain and precedes(d[3], d[1]) and b[2] < b[k - 1] < b[0] < b[last]


def lm_reality(ms: Multisegment, config: Optional[Config] = None) -> LMResult:
    """
    Reality of a regular multisegment by the 4231/3412 pattern test.

    Segments are ordered by decreasing end; the module is real exactly when
    no sub-multisegment of size at least four has either pattern.

    Raises:
        KTooLarge: If there are more segments than Config.LM_MAX_SEGMENTS
    """
    config = config or Config()
    if not is_regular(ms):
        return LMResult.NOT_APPLICABLE
    if len(ms) > config.LM_MAX_SEGMENTS:
        raise KTooLarge(len(ms), config.LM_MAX_SEGMENTS, what="the LM pattern scan")
    ordered = sorted(ms.segments, key=lambda seg: -seg[1])
    for size in range(4, len(ordered) + 1):
        for sub in combinations(ordered, size):
            if _is_4231(sub) or _is_3412(sub):
                return LMResult.NON_REAL
    return LMResult.REAL
