"""
Plucker - The Plucker ring of Gr(n, m): straightening, frozen prefactors, the quotient.

Elements of C[Gr(n,m)] are stored in the standard monomial basis: a term is
a product of Plucker coordinates P_C whose columns assemble into a
semistandard tableau. Products of columns that do not are rewritten with the
quadratic Plucker (van der Waerden) syzygies until every term is standard.
Elements of the localization at the solid frozens d_i = P_{i..i+n-1} carry an
integer exponent vector over the d_i in front of the terms.

Architecture:
    - Monomial: lex-sorted tuple of columns (each a strictly increasing tuple)
    - straighten_terms: worklist rewriting of {monomial: coefficient}; the
      pair rewriting rule is memoized per column pair
    - PluckerPolynomial: immutable (n, m, frozen exponents, standard terms);
      arithmetic aligns frozen prefactors by multiplying with d_i
    - Quotient by d_i = 1: quotient_equal homogenizes term by term and
      compares in C[Gr(n,m)]; quotient_reduce rewrites into the small-gaps basis
    - Evaluation at exact rational matrices (sympy)

Usage Example:
    >>> p = straighten(3, 5, {((1, 2, 5), (2, 3, 4)): 1})
    >>> str(p)
    'P124*P235 - P123*P245'
    >>> plucker_abc(2, 1, 2, 3)
    (1, 2, 4)

Author: grtab developers
Version: 2.0
Last Modified: October 17, 2026
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np
import sympy

from .errors import (
    DimensionMismatch,
    IncomparableDegrees,
    NotExpressible,
    NotInLattice,
    OutOfRange,
    SingularFrozen,
)
from .log import get_logger
from .tableaux import (
    Column,
    Tableau,
    content,
    dominance_key,
    rows_from_columns,
    small_gaps_form,
    solve_frozen_exponents,
    trivial_column,
)

logger = get_logger(__name__)

Monomial = Tuple[Column, ...]
Terms = Dict[Monomial, int]

DIVISION_STEP_LIMIT = 100000


# ==================== STRAIGHTENING ====================

def sort_column(entries: Sequence[int]) -> Tuple[int, Optional[Column]]:
    """Sign of the sorting permutation and the sorted column; (0, None) on repeats."""
    values = list(entries)
    if len(set(values)) != len(values):
        return 0, None
    sign = 1
    for a in range(len(values)):
        for b in range(a + 1, len(values)):
            if values[a] > values[b]:
                sign = -sign
    return sign, tuple(sorted(values))


def first_violation(mono: Monomial) -> Optional[int]:
    """Index p such that columns p and p+1 break row weak increase, or None."""
    for p in range(len(mono) - 1):
        if any(a > b for a, b in zip(mono[p], mono[p + 1])):
            return p
    return None


def is_standard(mono: Monomial) -> bool:
    return first_violation(mono) is None


@lru_cache(maxsize=None)
def _syzygy(alpha: Column, beta: Column) -> Tuple[Tuple[Tuple[Column, Column], int], ...]:
    """
    Rewrite P_alpha * P_beta with the shuffle relation at the first violating row.

    With r the first row where alpha_r > beta_r and Z = {beta_1..beta_r,
    alpha_r..alpha_n}, the alternating sum over (n-r+1)-subsets S of Z of
    [alpha_1..alpha_{r-1}, S][Z minus S, beta_{r+1}..beta_n] vanishes.
    """
    n = len(alpha)
    r = next(idx for idx in range(n) if alpha[idx] > beta[idx])
    z = beta[: r + 1] + alpha[r:]
    size = n - r
    head, tail = alpha[:r], beta[r + 1:]
    original = tuple(range(len(z) - size, len(z)))
    original_sign = -1 if (size * (len(z) - size)) % 2 else 1

    out: Counter = Counter()
    for chosen in combinations(range(len(z)), size):
        if chosen == original:
            continue
        rest = [p for p in range(len(z)) if p not in chosen]
        inversions = sum(1 for p in chosen for q in rest if p > q)
        sign1, col1 = sort_column(head + tuple(z[p] for p in chosen))
        if not sign1:
            continue
        sign2, col2 = sort_column(tuple(z[p] for p in rest) + tail)
        if not sign2:
            continue
        shuffle_sign = -1 if inversions % 2 else 1
        pair = (col1, col2) if col1 <= col2 else (col2, col1)
        out[pair] -= original_sign * shuffle_sign * sign1 * sign2
    return tuple((pair, c) for pair, c in sorted(out.items()) if c)


def straighten_terms(terms: Mapping[Monomial, int]) -> Terms:
    """Rewrite {monomial: coefficient} until every monomial is standard."""
    result: Counter = Counter()
    pending: Counter = Counter()
    for mono, c in terms.items():
        if c:
            pending[tuple(sorted(mono))] += c
    rewrites = 0
    while pending:
        mono, c = pending.popitem()
        if not c:
            continue
        p = first_violation(mono)
        if p is None:
            result[mono] += c
            continue
        rewrites += 1
        for (col1, col2), coeff in _syzygy(mono[p], mono[p + 1]):
            new = tuple(sorted(mono[:p] + (col1, col2) + mono[p + 2:]))
            pending[new] += c * coeff
    if rewrites > 5000:
        logger.debug("straightening used %d rewrites for %d input terms", rewrites, len(terms))
    return {mono: c for mono, c in result.items() if c}


def _frozen_columns(exponents: Sequence[int], n: int) -> Monomial:
    cols: List[Column] = []
    for i, a in enumerate(exponents, start=1):
        if a < 0:
            raise ValueError("negative exponent has no column monomial")
        cols.extend([trivial_column(i, n)] * a)
    return tuple(cols)


def _times_frozen(terms: Mapping[Monomial, int], exponents: Sequence[int], n: int) -> Terms:
    extra = _frozen_columns(exponents, n)
    if not extra:
        return dict(terms)
    return straighten_terms({mono + extra: c for mono, c in terms.items()})


def _divide_rows(rows: Sequence[Sequence[int]], divisor: Sequence[Sequence[int]]) -> Optional[Monomial]:
    quotient_rows = []
    for big, small in zip(rows, divisor):
        rest = Counter(big)
        rest.subtract(small)
        if any(v < 0 for v in rest.values()):
            return None
        quotient_rows.append(sorted(rest.elements()))
    width = len(quotient_rows[0])
    cols = tuple(tuple(row[p] for row in quotient_rows) for p in range(width))
    if any(any(col[r] >= col[r + 1] for r in range(len(col) - 1)) for col in cols):
        return None
    return cols


def _divide_by_frozen(terms: Mapping[Monomial, int], exponents: Sequence[int], n: int, m: int) -> Optional[Terms]:
    """
    Exact division by prod d_i^{a_i} in C[Gr(n,m)], or None if it does not divide.

    Long division on the dominance-largest term: P_S * P_F has P_{S ∪ F} as
    its largest term, so the largest term of the dividend must be a union.
    """
    divisor = _frozen_columns(exponents, n)
    divisor_rows = rows_from_columns(divisor, n)
    remaining: Counter = Counter(terms)
    quotient: Counter = Counter()
    keys: Dict[Monomial, Tuple[int, ...]] = {}
    for _ in range(DIVISION_STEP_LIMIT):
        remaining = Counter({mono: c for mono, c in remaining.items() if c})
        if not remaining:
            return {mono: c for mono, c in quotient.items() if c}
        for mono in remaining:
            if mono not in keys:
                keys[mono] = dominance_key(rows_from_columns(mono, n), m)
        lead = max(remaining, key=lambda mono: (keys[mono], mono))
        c = remaining[lead]
        q = _divide_rows(rows_from_columns(lead, n), divisor_rows)
        if q is None:
            return None
        quotient[q] += c
        for mono, coeff in straighten_terms({q + divisor: c}).items():
            remaining[mono] -= coeff
        if remaining.get(lead):
            return None
    logger.warning("frozen division gave up after %d steps", DIVISION_STEP_LIMIT)
    return None


# ==================== POLYNOMIALS ====================

class PluckerPolynomial:
    """
    An element of C[Gr(n,m)] or of its localization at the solid frozens.

    The value is prod_i d_i^{frozen[i]} * sum(coeff * P_mono) with every
    mono standard. Instances are immutable; equality is equality of the
    represented functions, decided by subtracting and straightening.

    Attributes:
        n (int): Rows of the Grassmannian
        m (int): Columns of the Grassmannian
        frozen (Tuple[int, ...]): Exponents of d_1..d_{m-n+1}, negative allowed
        terms (Tuple[Tuple[Monomial, int], ...]): Standard monomials, sorted, nonzero

    Example:
        >>> p = PluckerPolynomial.plucker((1, 2, 4), 3, 6) * PluckerPolynomial.plucker((3, 5, 6), 3, 6)
        >>> str(p)
        'P124*P356'
        >>> p.in_ring
        True
    """

    __slots__ = ("n", "m", "frozen", "terms")

    def __init__(self, n: int, m: int, frozen: Sequence[int], terms: Mapping[Monomial, int]):
        if len(frozen) != m - n + 1:
            raise DimensionMismatch(f"frozen exponent vector must have {m - n + 1} entries")
        cleaned = {mono: c for mono, c in terms.items() if c}
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "frozen", tuple(frozen) if cleaned else (0,) * (m - n + 1))
        object.__setattr__(self, "terms", tuple(sorted(cleaned.items())))

    def __setattr__(self, name, value):
        raise AttributeError("PluckerPolynomial is immutable")

    # ---------- constructors ----------

    @classmethod
    def from_terms(cls, n: int, m: int, terms: Union[Mapping, Iterable], frozen: Optional[Sequence[int]] = None) -> "PluckerPolynomial":
        """Straighten arbitrary column products; columns may be unsorted (antisymmetry applies)."""
        items = terms.items() if isinstance(terms, Mapping) else terms
        raw: Counter = Counter()
        for cols, c in items:
            sign = 1
            normalized = []
            for col in cols:
                s, sorted_col = sort_column(col)
                if not s:
                    sign = 0
                    break
                if len(sorted_col) != n or sorted_col[0] < 1 or sorted_col[-1] > m:
                    raise OutOfRange(f"column {tuple(col)} is not an {n}-subset of [1, {m}]")
                sign *= s
                normalized.append(sorted_col)
            if sign:
                raw[tuple(sorted(normalized))] += sign * c
        return cls(n, m, frozen or (0,) * (m - n + 1), straighten_terms(raw))

    @classmethod
    def zero(cls, n: int, m: int) -> "PluckerPolynomial":
        return cls(n, m, (0,) * (m - n + 1), {})

    @classmethod
    def one(cls, n: int, m: int) -> "PluckerPolynomial":
        return cls(n, m, (0,) * (m - n + 1), {(): 1})

    @classmethod
    def constant(cls, value: int, n: int, m: int) -> "PluckerPolynomial":
        return cls(n, m, (0,) * (m - n + 1), {(): value})

    @classmethod
    def plucker(cls, col: Sequence[int], n: int, m: int) -> "PluckerPolynomial":
        return cls.from_terms(n, m, {(tuple(col),): 1})

    @classmethod
    def from_tableau(cls, T: Tableau) -> "PluckerPolynomial":
        """The standard monomial P_T."""
        return cls(T.n, T.m, (0,) * (T.m - T.n + 1), {T.columns: 1})

    @classmethod
    def frozen_monomial(cls, exponents: Sequence[int], n: int, m: int) -> "PluckerPolynomial":
        return cls(n, m, exponents, {(): 1})

    # ---------- inspection ----------

    def term_dict(self) -> Terms:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def in_ring(self) -> bool:
        """No negative frozen exponent remains."""
        return all(a >= 0 for a in self.frozen)

    def term_degree(self, mono: Monomial) -> Tuple[int, ...]:
        deg = [0] * self.m
        for col in mono:
            for x in col:
                deg[x - 1] += 1
        for i, a in enumerate(self.frozen, start=1):
            for x in trivial_column(i, self.n):
                deg[x - 1] += a
        return tuple(deg)

    def degrees(self) -> set:
        return {self.term_degree(mono) for mono, _ in self.terms}

    def degree(self) -> Tuple[int, ...]:
        """
        The common Z^m-degree of a homogeneous element.

        Raises:
            IncomparableDegrees: If the terms have different degrees
        """
        found = self.degrees()
        if len(found) > 1:
            raise IncomparableDegrees(f"{len(found)} different term degrees in {self}")
        return found.pop() if found else (0,) * self.m

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def sorted_terms(self) -> List[Tuple[Monomial, int]]:
        """Terms in print order: dominance-descending, ties lexicographic."""
        keyed = [((dominance_key(rows_from_columns(mono, self.n), self.m), mono), mono, c) for mono, c in self.terms]
        keyed.sort(key=lambda item: (tuple(-x for x in item[0][0]), item[0][1]))
        return [(mono, c) for _, mono, c in keyed]

    def leading_term(self) -> Tuple[Monomial, int]:
        """The dominance-maximal term (first in print order)."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return self.sorted_terms()[0]

    # ---------- arithmetic ----------

    def _check(self, other: "PluckerPolynomial") -> None:
        if (self.n, self.m) != (other.n, other.m):
            raise DimensionMismatch(f"Gr({self.n},{self.m}) vs Gr({other.n},{other.m})")

    def _aligned(self, other: "PluckerPolynomial") -> Tuple[Tuple[int, ...], Terms, Terms]:
        self._check(other)
        if self.is_zero():
            return other.frozen, {}, other.term_dict()
        if other.is_zero():
            return self.frozen, self.term_dict(), {}
        low = tuple(min(a, b) for a, b in zip(self.frozen, other.frozen))
        left = _times_frozen(self.term_dict(), [a - l for a, l in zip(self.frozen, low)], self.n)
        right = _times_frozen(other.term_dict(), [b - l for b, l in zip(other.frozen, low)], self.n)
        return low, left, right

    def __add__(self, other: "PluckerPolynomial") -> "PluckerPolynomial":
        low, left, right = self._aligned(other)
        total = Counter(left)
        total.update(right)
        return PluckerPolynomial(self.n, self.m, low, total)

    def __neg__(self) -> "PluckerPolynomial":
        return PluckerPolynomial(self.n, self.m, self.frozen, {mono: -c for mono, c in self.terms})

    def __sub__(self, other: "PluckerPolynomial") -> "PluckerPolynomial":
        return self + (-other)

    def scale(self, factor: int) -> "PluckerPolynomial":
        return PluckerPolynomial(self.n, self.m, self.frozen, {mono: factor * c for mono, c in self.terms})

    def __mul__(self, other: Union["PluckerPolynomial", int]) -> "PluckerPolynomial":
        if isinstance(other, int):
            return self.scale(other)
        return multiply(self, other)

    __rmul__ = __mul__

    def __pow__(self, power: int) -> "PluckerPolynomial":
        result = PluckerPolynomial.one(self.n, self.m)
        for _ in range(power):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, PluckerPolynomial):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def with_frozen(self, exponents: Sequence[int]) -> "PluckerPolynomial":
        """Multiply by the Laurent monomial prod d_i^{a_i}."""
        return PluckerPolynomial(self.n, self.m, [a + b for a, b in zip(self.frozen, exponents)], self.term_dict())

    def absorb_frozen(self) -> "PluckerPolynomial":
        """Move positive frozen exponents into the terms."""
        positive = [max(a, 0) for a in self.frozen]
        if not any(positive):
            return self
        terms = _times_frozen(self.term_dict(), positive, self.n)
        return PluckerPolynomial(self.n, self.m, [min(a, 0) for a in self.frozen], terms)

    def normalized(self) -> "PluckerPolynomial":
        """
        Canonical Laurent form: nonpositive exponents, each remaining d_i not dividing the terms.

        A result with no negative exponent left is a genuine polynomial
        (in_ring is True).
        """
        p = self.absorb_frozen()
        exps = list(p.frozen)
        terms = p.term_dict()
        for i in range(len(exps)):
            while exps[i] < 0:
                unit = [0] * len(exps)
                unit[i] = 1
                divided = _divide_by_frozen(terms, unit, self.n, self.m)
                if divided is None:
                    break
                terms = divided
                exps[i] += 1
        if any(a < 0 for a in exps):
            logger.debug("frozen denominator %s does not clear", tuple(exps))
        return PluckerPolynomial(self.n, self.m, exps, terms)

    # ---------- evaluation ----------

    def evaluate(self, X: sympy.Matrix, minors: Optional[Mapping[Column, sympy.Rational]] = None) -> sympy.Rational:
        """
        Value at an n x m matrix.

        Args:
            X: The evaluation point
            minors: Precomputed maximal minors of X (see plucker_minors), reused
                across many polynomials evaluated at the same point

        Raises:
            DimensionMismatch: If X is not n x m
            SingularFrozen: If a frozen minor with negative exponent vanishes
        """
        X = sympy.Matrix(X)
        if X.shape != (self.n, self.m):
            raise DimensionMismatch(f"expected a {self.n}x{self.m} matrix, got {X.shape}")
        cache: Dict[Column, sympy.Rational] = dict(minors or {})

        def minor(col: Column) -> sympy.Rational:
            if col not in cache:
                cache[col] = X.extract(list(range(self.n)), [c - 1 for c in col]).det(method="bareiss")
            return cache[col]

        total = sympy.Integer(0)
        for mono, c in self.terms:
            value = sympy.Integer(c)
            for col in mono:
                value *= minor(col)
            total += value
        for i, a in enumerate(self.frozen, start=1):
            if a == 0:
                continue
            d = minor(trivial_column(i, self.n))
            if a < 0 and d == 0:
                raise SingularFrozen(f"frozen minor {format_column(trivial_column(i, self.n), self.m)} vanishes")
            total *= d ** a
        return total

    # ---------- serialization ----------

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "frozen": list(self.frozen),
            "terms": [{"coeff": c, "columns": [list(col) for col in mono]} for mono, c in self.sorted_terms()],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "PluckerPolynomial":
        n, m = data["n"], data["m"]
        frozen = data.get("frozen") or [0] * (m - n + 1)
        terms = [(tuple(tuple(col) for col in term["columns"]), int(term["coeff"])) for term in data["terms"]]
        return cls.from_terms(n, m, terms, frozen)

    def __str__(self) -> str:
        body = _format_terms(self.sorted_terms(), self.m)
        if not any(self.frozen) or self.is_zero():
            return body
        prefactor = "*".join(
            format_column(trivial_column(i, self.n), self.m) + ("" if a == 1 else f"^{a}")
            for i, a in enumerate(self.frozen, start=1) if a
        )
        return f"{prefactor}*({body})"

    def __repr__(self) -> str:
        return f"PluckerPolynomial(Gr({self.n},{self.m}): {self})"


def format_column(col: Column, m: int) -> str:
    if m >= 10:
        return "P[" + ",".join(str(x) for x in col) + "]"
    return "P" + "".join(str(x) for x in col)


def _format_terms(terms: Sequence[Tuple[Monomial, int]], m: int) -> str:
    if not terms:
        return "0"
    pieces = []
    for idx, (mono, c) in enumerate(terms):
        factors = "*".join(format_column(col, m) for col in mono)
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


def straighten(n: int, m: int, terms: Union[Mapping, Iterable]) -> PluckerPolynomial:
    """Canonical standard-monomial expansion of an integer combination of column products."""
    return PluckerPolynomial.from_terms(n, m, terms)


def multiply(p: PluckerPolynomial, q: PluckerPolynomial) -> PluckerPolynomial:
    """Distribute, straighten, add frozen prefactors."""
    p._check(q)
    raw: Counter = Counter()
    for mono1, c1 in p.terms:
        for mono2, c2 in q.terms:
            raw[tuple(sorted(mono1 + mono2))] += c1 * c2
    frozen = [a + b for a, b in zip(p.frozen, q.frozen)]
    return PluckerPolynomial(p.n, p.m, frozen, straighten_terms(raw))


def evaluate(p: PluckerPolynomial, X: sympy.Matrix) -> sympy.Rational:
    return p.evaluate(X)


# ==================== QUOTIENT BY THE SOLID FROZENS ====================

def _homogenized(p: PluckerPolynomial) -> Terms:
    """
    Multiply every term by solid frozens until all share one degree.

    Raises:
        IncomparableDegrees: If two term degrees differ outside the frozen lattice
    """
    if p.is_zero():
        return {}
    n, m = p.n, p.m
    terms = list(p.terms)
    reference = p.term_degree(terms[0][0])
    shifts = []
    for mono, _ in terms:
        diff = [a - b for a, b in zip(reference, p.term_degree(mono))]
        try:
            shifts.append(solve_frozen_exponents(diff, n, m))
        except NotInLattice:
            raise IncomparableDegrees(
                f"degrees of {_format_terms([(terms[0][0], 1)], m)} and {_format_terms([(mono, 1)], m)} "
                f"differ outside the solid frozen lattice"
            ) from None
    low = [min(column) for column in zip(*shifts)]
    total: Counter = Counter()
    for (mono, c), shift in zip(terms, shifts):
        extra = _frozen_columns([s - l for s, l in zip(shift, low)], n)
        total[tuple(sorted(mono + extra))] += c
    return straighten_terms(total)


def quotient_equal(p: PluckerPolynomial, q: PluckerPolynomial) -> bool:
    """
    Equality of the images in C[Gr(n,m)] / (d_i - 1).

    Example:
        >>> lhs = PluckerPolynomial.from_terms(3, 5, {((1, 2, 4), (2, 3, 5)): 1})
        >>> rhs = PluckerPolynomial.from_terms(3, 5, {((1, 2, 5),): 1, ((2, 4, 5),): 1})
        >>> quotient_equal(lhs, rhs)
        True
    """
    p._check(q)
    return not _homogenized(p - q)


def quotient_reduce(p: PluckerPolynomial) -> PluckerPolynomial:
    """
    Expansion of the image of p in the small-gaps standard monomial basis.

    The result has no frozen prefactor; its terms are small-gaps tableaux,
    possibly of different degrees.
    """
    n, m = p.n, p.m
    work: Counter = Counter(_homogenized(p))
    result: Counter = Counter()
    for _ in range(DIVISION_STEP_LIMIT):
        work = Counter({mono: c for mono, c in work.items() if c})
        if not work:
            return PluckerPolynomial(n, m, (0,) * (m - n + 1), result)
        lead = max(work, key=lambda mono: (dominance_key(rows_from_columns(mono, n), m), mono))
        c = work[lead]
        T = Tableau(n, m, rows_from_columns(lead, n))
        S, _ = small_gaps_form(T)
        exps = solve_frozen_exponents([a - b for a, b in zip(content(T), content(S))], n, m)
        if any(a < 0 for a in exps):
            work = Counter(_times_frozen(work, [max(-a, 0) for a in exps], n))
            continue
        result[S.columns] += c
        for mono, coeff in straighten_terms({tuple(sorted(S.columns + _frozen_columns(exps, n))): c}).items():
            work[mono] -= coeff
        if work.get(lead):
            raise NotExpressible(f"leading term {_format_terms([(lead, 1)], m)} did not cancel")
    raise NotExpressible("quotient reduction did not terminate")


# ==================== COLUMNS BY SHAPE ====================

def plucker_abc(a: int, b: int, c: int, n: int, m: Optional[int] = None) -> Column:
    """
    Column made of a run of a entries from b, a gap of size c, then n-a entries.

    a = 0 and a = n give a single run (starting at b+c-1 and b respectively).

    Raises:
        OutOfRange: If an entry falls outside [1, m], or c < 1 with 0 < a < n
    """
    if not 0 <= a <= n:
        raise OutOfRange(f"run length {a} outside [0, {n}]")
    if a == 0:
        col = tuple(range(b + c - 1, b + c - 1 + n))
    elif a == n:
        col = tuple(range(b, b + n))
    else:
        if c < 1:
            raise OutOfRange(f"gap {c} must be at least 1")
        second = b + a - 1 + c
        col = tuple(range(b, b + a)) + tuple(range(second, second + n - a))
    upper = m if m is not None else col[-1]
    if col[0] < 1 or col[-1] > upper:
        raise OutOfRange(f"column {col} leaves [1, {upper}]")
    return col


# ==================== EVALUATION POINTS ====================

def _rational(rng: np.random.Generator, bound: int, positive: bool = False) -> sympy.Rational:
    low = 1 if positive else -bound
    return sympy.Rational(int(rng.integers(low, bound + 1)), int(rng.integers(1, bound + 1)))


def random_rational_matrix(n: int, m: int, rng: np.random.Generator, bound: int = 9) -> sympy.Matrix:
    return sympy.Matrix(n, m, lambda i, j: _rational(rng, bound))


def random_tnn_matrix(n: int, m: int, rng: np.random.Generator, steps: Optional[int] = None) -> sympy.Matrix:
    """
    A point with all maximal minors nonnegative.

    [I_n | 0] times a product of elementary bidiagonal factors I + t E_{i,i+1},
    I + t E_{i+1,i} (t > 0) and a positive diagonal; by Cauchy-Binet every
    maximal minor stays nonnegative. Each factor acts as a column operation.
    """
    X = sympy.zeros(n, m)
    for i in range(n):
        X[i, i] = 1
    for _ in range(steps or 4 * n * m):
        i = int(rng.integers(0, m - 1))
        t = _rational(rng, 5, positive=True)
        if rng.random() < 0.5:
            X[:, i + 1] = X[:, i + 1] + t * X[:, i]
        else:
            X[:, i] = X[:, i] + t * X[:, i + 1]
    for j in range(m):
        X[:, j] = X[:, j] * _rational(rng, 5, positive=True)
    return X


def plucker_minors(X: sympy.Matrix) -> Dict[Column, sympy.Rational]:
    """Every maximal minor of X keyed by its column set."""
    n, m = X.shape
    rows = list(range(n))
    return {col: X.extract(rows, [c - 1 for c in col]).det(method="bareiss") for col in combinations(range(1, m + 1), n)}


def normalized_random_matrix(n: int, m: int, rng: np.random.Generator, bound: int = 9) -> sympy.Matrix:
    """Random rational point rescaled column by column so every d_i evaluates to 1."""
    while True:
        X = random_rational_matrix(n, m, rng, bound)
        ok = True
        for i in range(m - n + 1):
            value = X.extract(list(range(n)), list(range(i, i + n))).det(method="bareiss")
            if value == 0:
                ok = False
                break
            X[:, i + n - 1] = X[:, i + n - 1] / value
        if ok:
            return X
