"""
Characters - Kazhdan-Lusztig character formulas on both sides of the dictionary.

On the module side a dominant monomial M of degree k has a q-character that
is an alternating sum over S_k of products of fundamental classes, weighted
by Kazhdan-Lusztig polynomials at 1. On the Grassmannian side the same sum,
with fundamental classes replaced by Plucker coordinates, gives ch(T), the
candidate dual canonical basis element of a tableau. This module computes
both, lifts ch(T) to the Plucker ring, and uses it to decide reality,
primeness and compatibility.

Architecture:
    - qchar_formula: symbolic sum over multiset products of chi(Y_{i,s})
    - tableau_indexing / p_u_T: the (i, j, w_T) data of a small-gaps tableau
      and the standard monomial attached to each permutation
    - ch_small_gaps: the sweep over the Bruhat interval below w_T w_0; the
      interval comes from one Kazhdan-Lusztig column, the sweep itself can
      run on a thread pool (results are merged with Counter addition)
    - ch: frozen Laurent prefactor of the small-gaps factorization, then
      clearing of the denominator
    - MS matrix and Kazhdan-Lusztig immanants give an independent
      evaluation path (immanant_check)

Usage Example:
    >>> T = Tableau.from_columns([(1, 2, 4), (3, 5, 6)], 3, 6)
    >>> str(ch(T))
    'P124*P356 - P123*P456'
    >>> str(qchar_formula(DominantMonomial.parse("Y[2,-4] Y[1,-1]")))
    'chi(Y[1,-1])*chi(Y[2,-4]) - chi(Y[3,-3])'

Author: grtab developers
Version: 2.0
Last Modified: October 17, 2026
"""

from __future__ import annotations

from collections import Counter, defaultdict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

import sympy

from .config import Config
from .errors import DimensionMismatch, KTooLarge, NotFundamental
from .log import get_logger
from .monomials import (
    DominantMonomial,
    Node,
    monomial_to_multisegment,
    segment_profile,
    segment_to_node,
)
from .plucker import Monomial, PluckerPolynomial, quotient_equal
from .symmetric import (
    Permutation,
    check_size,
    compose,
    default_table,
    inverse,
    length,
    longest_element,
    validate_permutation,
)
from .tableaux import Column, Tableau, reduce, small_gaps_form, union

logger = get_logger(__name__)

FundamentalProduct = Tuple[Node, ...]


# ==================== Q-CHARACTERS ====================

@dataclass(frozen=True)
class QCharFormula:
    """
    A Z-combination of products of fundamental classes chi(Y_{i,s}).

    Each key is a sorted tuple of (i, s) nodes; the empty tuple is the unit.

    Example:
        >>> f = qchar_formula(DominantMonomial.parse("Y[2,-4] Y[1,-1]"), n=3)
        >>> str(f)
        'chi(Y[1,-1])*chi(Y[2,-4]) - 1'
    """

    terms: Tuple[Tuple[FundamentalProduct, int], ...] = ()

    @classmethod
    def from_counter(cls, counts: Dict[FundamentalProduct, int]) -> "QCharFormula":
        ordered = sorted(((key, c) for key, c in counts.items() if c), key=lambda item: (-len(item[0]), item[0]))
        return cls(tuple(ordered))

    def as_dict(self) -> Dict[FundamentalProduct, int]:
        return dict(self.terms)

    def to_dict(self) -> dict:
        return {"terms": [{"coeff": c, "factors": [list(node) for node in key]} for key, c in self.terms]}

    @classmethod
    def from_dict(cls, data: dict) -> "QCharFormula":
        counts: Counter = Counter()
        for term in data["terms"]:
            counts[tuple(sorted(tuple(node) for node in term["factors"]))] += int(term["coeff"])
        return cls.from_counter(counts)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for idx, (key, c) in enumerate(self.terms):
            factors = "*".join(f"chi(Y[{i},{s}])" for i, s in key)
            magnitude = abs(c)
            if not factors:
                text = str(magnitude)
            elif magnitude == 1:
                text = factors
            else:
                text = f"{magnitude}*{factors}"
            if idx == 0:
                pieces.append(text if c > 0 else f"-{text}")
            else:
                pieces.append(f"+ {text}" if c > 0 else f"- {text}")
        return " ".join(pieces)


def _fundamental_factor(b: int, e: int, n: Optional[int]):
    """Node of the segment [b, e], () for the unit, None for zero."""
    if b == e + 1:
        return ()
    if b > e + 1:
        return None
    i, s = segment_to_node((b, e))
    if n is not None:
        if i == n:
            return ()
        if i > n:
            return None
    return ((i, s),)


def qchar_formula(M: DominantMonomial, n: Optional[int] = None, config: Optional[Config] = None) -> QCharFormula:
    """
    q-character of L(M) as a signed sum of products of fundamental classes.

    The term of u in S_k has sign (-1)^{l(u w)}, coefficient p_{u w0, w w0}(1)
    and factors chi of the segments [mu_{u^{-1}(a)}, lam_a]. Segments of
    length n collapse to 1 and longer ones vanish when n is given.

    Raises:
        KTooLarge: If deg M exceeds Config.MAX_K
    """
    config = config or Config()
    k = M.degree
    check_size(k, config.MAX_K, "a q-character formula")
    if k == 0:
        return QCharFormula.from_counter({(): 1})
    profile = segment_profile(monomial_to_multisegment(M))
    w0 = longest_element(k)
    target = compose(profile.w, w0)
    column = default_table().column(target)
    len_w = length(profile.w)

    counts: Counter = Counter()
    for x, poly in column.items():
        u = compose(x, w0)
        u_inv = inverse(u)
        factors: List[Node] = []
        vanished = False
        for a in range(1, k + 1):
            piece = _fundamental_factor(profile.mu[u_inv[a - 1] - 1], profile.lam[a - 1], n)
            if piece is None:
                vanished = True
                break
            factors.extend(piece)
        if vanished:
            continue
        sign = -1 if (length(u) + len_w) % 2 else 1
        counts[tuple(sorted(factors))] += sign * sum(poly)
    return QCharFormula.from_counter(counts)


# ==================== TABLEAU INDEXING ====================

@dataclass(frozen=True)
class TableauIndexing:
    """
    Index data of a small-gaps tableau.

    Column a of the tableau (sorted by deleted entry) is
    [i_{w(a)}, i_{w(a)}+n] minus {j_a}; w is the longest such permutation.
    """

    i: Tuple[int, ...]
    j: Tuple[int, ...]
    w: Permutation


def _deleted_entry(col: Column) -> Tuple[int, int]:
    n = len(col)
    first = col[0]
    missing = [x for x in range(first, first + n + 1) if x not in col]
    if len(missing) != 1 or col[-1] != first + n:
        raise NotFundamental(f"column {col} is not fundamental")
    return first, missing[0]


def tableau_indexing(T_prime: Tableau) -> TableauIndexing:
    """
    The sequences i, j and the permutation w_T of a small-gaps tableau.

    Example:
        >>> T = Tableau.from_columns([(1, 2, 4), (3, 5, 6)], 3, 6)
        >>> tableau_indexing(T)
        TableauIndexing(i=(1, 3), j=(3, 4), w=(1, 2))
    """
    pairs = [_deleted_entry(col) for col in T_prime.columns]
    i_seq = tuple(sorted(i for i, _ in pairs))
    j_seq = tuple(sorted(j for _, j in pairs))
    stacks: Dict[int, List[int]] = defaultdict(list)
    for idx, value in enumerate(i_seq, start=1):
        stacks[value].append(idx)
    w = []
    for i, _ in sorted(pairs, key=lambda pair: (pair[1], -pair[0])):
        w.append(stacks[i].pop())
    return TableauIndexing(i_seq, j_seq, tuple(w))


def p_u_T(u: Permutation, T_prime: Tableau, indexing: Optional[TableauIndexing] = None) -> Optional[Monomial]:
    """
    Standard monomial with columns [i_{u(a)}, i_{u(a)}+n] minus {j_a}, or None when undefined.
    """
    data = indexing or tableau_indexing(T_prime)
    n = T_prime.n
    cols = []
    for a, ua in enumerate(u):
        start, deleted = data.i[ua - 1], data.j[a]
        if not start <= deleted <= start + n:
            return None
        cols.append(tuple(x for x in range(start, start + n + 1) if x != deleted))
    return tuple(sorted(cols))


# ==================== ch(T) ====================

def _sweep(chunk: Sequence[Tuple[Permutation, int]], T_prime: Tableau, data: TableauIndexing, w0: Permutation, len_w: int) -> Counter:
    partial: Counter = Counter()
    for x, value in chunk:
        u = compose(x, w0)
        mono = p_u_T(u, T_prime, data)
        if mono is None:
            continue
        sign = -1 if (length(u) + len_w) % 2 else 1
        partial[mono] += sign * value
    return partial


def ch_small_gaps(T_prime: Tableau, config: Optional[Config] = None, threads: Optional[int] = None) -> PluckerPolynomial:
    """
    The alternating Kazhdan-Lusztig sum for a small-gaps tableau.

    Only u with u w0 <= w_T w0 contribute, so the sum runs over one
    Kazhdan-Lusztig column. Every P_{u;T} is already standard.

    Raises:
        KTooLarge: If the tableau has more than Config.MAX_K columns
    """
    config = config or Config()
    n, m, k = T_prime.n, T_prime.m, T_prime.k
    if k > config.MAX_K:
        raise KTooLarge(k, config.MAX_K)
    if k == 0:
        return PluckerPolynomial.one(n, m)
    data = tableau_indexing(T_prime)
    w0 = longest_element(k)
    column = default_table().column(compose(data.w, w0))
    items = sorted((x, sum(poly)) for x, poly in column.items())
    len_w = length(data.w)
    workers = threads or config.THREADS

    if workers > 1 and len(items) > 1:
        size = -(-len(items) // workers)
        chunks = [items[p:p + size] for p in range(0, len(items), size)]
        total: Counter = Counter()
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for partial in pool.map(lambda chunk: _sweep(chunk, T_prime, data, w0, len_w), chunks):
                total.update(partial)
    else:
        total = _sweep(items, T_prime, data, w0, len_w)

    logger.debug("ch sweep k=%d over %d permutations, %d threads, %d terms", k, len(items), workers, len(+total))
    return PluckerPolynomial(n, m, (0,) * (m - n + 1), total)


def ch(T: Tableau, config: Optional[Config] = None, clear: bool = True, threads: Optional[int] = None) -> PluckerPolynomial:
    """
    ch(T) = P_{T''} ch(T') in the localization at the solid frozens.

    With clear=True the frozen denominator is divided out wherever it
    divides; check ``in_ring`` on the result.

    Example:
        >>> T = make_tableau([[1, 2], [3, 4], [5, 6]], 3, 6)
        >>> p = ch(T)
        >>> p.in_ring
        True
    """
    T_prime, T_second = small_gaps_form(T)
    result = ch_small_gaps(T_prime, config, threads).with_frozen(T_second.frozen_exponents())
    if not clear:
        return result
    result = result.normalized()
    if not result.in_ring:
        logger.warning("ch(%s) keeps frozen denominator %s", T, result.frozen)
    return result


# ==================== REALITY / PRIMENESS / COMPATIBILITY ====================

@dataclass(frozen=True)
class RealityResult:
    real: bool
    certificate: PluckerPolynomial


def reality_test(T: Tableau, config: Optional[Config] = None) -> RealityResult:
    """
    Real iff ch(T)^2 = ch(T ∪ T); the difference is the certificate.

    Example:
        >>> reality_test(Tableau.from_columns([(1, 3, 5)], 3, 6)).real
        True
    """
    config = config or Config()
    single = ch(T, config, clear=False)
    doubled = ch(union(T, T), config, clear=False)
    delta = (single * single - doubled).normalized()
    return RealityResult(delta.is_zero(), delta)


@dataclass(frozen=True)
class PrimenessResult:
    prime: bool
    factors: Optional[Tuple[Tableau, Tableau]] = None


def _sub_multisets(columns: Sequence[Column]):
    distinct = sorted(set(columns))
    counts = [columns.count(col) for col in distinct]
    for choice in product(*(range(c + 1) for c in counts)):
        rest = tuple(c - s for c, s in zip(counts, choice))
        if not any(choice) or not any(rest) or choice > rest:
            continue
        left = [col for col, s in zip(distinct, choice) for _ in range(s)]
        right = [col for col, s in zip(distinct, rest) for _ in range(s)]
        yield left, right


def primeness_test(T: Tableau, config: Optional[Config] = None) -> PrimenessResult:
    """
    Search the bipartitions of T's fundamental columns for ch(T) = ch(T1) ch(T2).

    Raises:
        KTooLarge: If T has more fundamental factors than Config.PRIME_MAX_FACTORS
    """
    config = config or Config()
    T_prime, _ = small_gaps_form(T)
    n, m = T.n, T.m
    if T_prime.k > config.PRIME_MAX_FACTORS:
        raise KTooLarge(T_prime.k, config.PRIME_MAX_FACTORS, what="the primeness search")
    target = ch_small_gaps(T_prime, config)
    cache: Dict[Tuple[Column, ...], PluckerPolynomial] = {}

    def ch_of(columns: List[Column]) -> PluckerPolynomial:
        key = tuple(columns)
        if key not in cache:
            cache[key] = ch_small_gaps(Tableau.from_columns(columns, n, m), config)
        return cache[key]

    checked = 0
    for left, right in _sub_multisets(list(T_prime.columns)):
        checked += 1
        if quotient_equal(ch_of(left) * ch_of(right), target):
            factors = (reduce(Tableau.from_columns(left, n, m)), reduce(Tableau.from_columns(right, n, m)))
            logger.debug("%s factors after %d bipartitions", T, checked)
            return PrimenessResult(False, factors)
    logger.debug("%s is prime (%d bipartitions)", T, checked)
    return PrimenessResult(True)


@dataclass(frozen=True)
class CompatibilityResult:
    compatible: bool
    certificate: PluckerPolynomial


def compatibility_test(S: Tableau, T: Tableau, config: Optional[Config] = None) -> CompatibilityResult:
    """ch(S) ch(T) = ch(S ∪ T); necessary for S and T to sit in one cluster."""
    config = config or Config()
    delta = (ch(S, config, clear=False) * ch(T, config, clear=False) - ch(union(S, T), config, clear=False)).normalized()
    return CompatibilityResult(delta.is_zero(), delta)


def weakly_separated(I: Sequence[int], J: Sequence[int]) -> bool:
    """
    I minus J and J minus I are separated by a chord of the circle.

    For equal-size subsets this means that, read cyclically, the symmetric
    difference splits into at most two blocks.
    """
    if len(I) != len(J):
        raise DimensionMismatch("weak separation compares subsets of equal size")
    a, b = set(I), set(J)
    labels = [x in a for x in sorted(a ^ b)]
    if not labels:
        return True
    changes = sum(1 for p in range(len(labels)) if labels[p] != labels[p - 1])
    return changes <= 2


# ==================== MS MATRIX AND IMMANANTS ====================

def ms_matrix(n: int, m: int) -> List[List[Optional[Column]]]:
    """
    Symbolic m x m matrix: entry (i, j) is [i, i+n] minus {j} read mod m.

    Entries outside the band j in [i, i+n] are None (zero).

    Example:
        >>> ms_matrix(3, 5)[0]
        [(2, 3, 4), (1, 3, 4), (1, 2, 4), (1, 2, 3), None]
    """
    rows: List[List[Optional[Column]]] = []
    for i in range(1, m + 1):
        row: List[Optional[Column]] = []
        for j in range(1, m + 1):
            if not i <= j <= i + n:
                row.append(None)
                continue
            entries = sorted((x - 1) % m + 1 for x in range(i, i + n + 1) if x != j)
            row.append(tuple(entries))
        rows.append(row)
    return rows


def ms_matrix_at(n: int, m: int, X: sympy.Matrix, minors: Optional[Dict[Column, sympy.Rational]] = None) -> sympy.Matrix:
    """The MS matrix evaluated at a point of Gr(n, m)."""
    X = sympy.Matrix(X)
    cache = dict(minors or {})
    symbolic = ms_matrix(n, m)

    def value(col: Optional[Column]) -> sympy.Rational:
        if col is None:
            return sympy.Integer(0)
        if col not in cache:
            cache[col] = X.extract(list(range(n)), [c - 1 for c in col]).det(method="bareiss")
        return cache[col]

    return sympy.Matrix(m, m, lambda r, c: value(symbolic[r][c]))


def generalized_submatrix(A: sympy.Matrix, rows: Sequence[int], cols: Sequence[int]) -> sympy.Matrix:
    """A^{i,j}: rows and columns may repeat (1-based, weakly increasing)."""
    if len(rows) != len(cols):
        raise DimensionMismatch("row and column index sequences differ in length")
    return sympy.Matrix(len(rows), len(cols), lambda a, b: A[rows[a] - 1, cols[b] - 1])


def kl_immanant(v: Permutation, A: sympy.Matrix, config: Optional[Config] = None) -> sympy.Rational:
    """
    Imm_v(A) = sum over u >= v of (-1)^{l(u)-l(v)} p_{w0 u, w0 v}(1) prod A_{a, u(a)}.

    Example:
        >>> kl_immanant((1, 2), sympy.Matrix([[1, 2], [3, 4]]))
        -2
    """
    config = config or Config()
    v = validate_permutation(v)
    k = len(v)
    check_size(k, config.HARD_MAX_K, "a Kazhdan-Lusztig immanant")
    if A.shape != (k, k):
        raise DimensionMismatch(f"expected a {k}x{k} matrix, got {A.shape}")
    w0 = longest_element(k)
    len_v = length(v)
    total = sympy.Integer(0)
    for x, poly in default_table().column(compose(w0, v)).items():
        u = compose(w0, x)
        term = sympy.Integer(sum(poly) * (-1 if (length(u) - len_v) % 2 else 1))
        for a in range(k):
            term *= A[a, u[a] - 1]
            if term == 0:
                break
        total += term
    return total


def immanant_check(T_prime: Tableau, X: sympy.Matrix, config: Optional[Config] = None) -> bool:
    """Imm_{w_T^{-1}}(MS(X)^{i,j}) equals ch(T') evaluated at X."""
    config = config or Config()
    data = tableau_indexing(T_prime)
    A = generalized_submatrix(ms_matrix_at(T_prime.n, T_prime.m, X), data.i, data.j)
    lhs = kl_immanant(inverse(data.w), A, config)
    rhs = ch_small_gaps(T_prime, config).evaluate(X)
    return lhs == rhs
