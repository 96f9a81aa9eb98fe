"""
Tableaux - Semistandard tableaux of rectangular shape and the SSYT monoid.

A tableau here has n rows and k columns, entries in [1, m], rows weakly
increasing and columns strictly increasing. Tableaux multiply by row-wise
sorted union, which turns the set of all of them into a commutative monoid.
This module implements that monoid together with everything the rest of the
package reads off a tableau: content, weight, gap weight, the reduction by
trivial columns and the small-gaps factorization.

Architecture:
    - Tableau is an immutable value object (rows stored sorted)
    - Columns are plain tuples of ints; a column with consecutive entries is
      "trivial" and corresponds to a frozen variable
    - TableauFraction holds formal quotients of tableaux (T'' below)
    - Every other module builds on these functions: monomials converts
      columns to dominant monomials, plucker straightens products of columns,
      cluster multiplies and lifts tableaux

Usage Example:
    >>> T = make_tableau([[1, 2], [3, 4], [5, 6]], n=3, m=6)
    >>> T.columns
    ((1, 3, 5), (2, 4, 6))
    >>> T_prime, T_second = small_gaps_form(T)
    >>> str(T_prime)
    '1,3,4|2,3,5|2,4,5|3,4,6'
    >>> gap_weight(T)
    4

Author: grtab developers
Version: 2.0
Last Modified: October 17, 2026
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from .errors import (
    ColumnNotStrict,
    ContentMismatch,
    DimensionMismatch,
    NotAFactor,
    NotFundamental,
    NotInLattice,
    OutOfRange,
    RaggedRows,
)

Column = Tuple[int, ...]
ContentVector = Tuple[int, ...]
WeightVector = Tuple[int, ...]


@dataclass(frozen=True)
class Tableau:
    """
    A semistandard tableau of shape n x k with entries in [1, m].

    Build instances through make_tableau (validating) or the classmethods;
    the raw constructor trusts its arguments.

    Attributes:
        n (int): Number of rows (the Grassmannian's k in Gr(k, m))
        m (int): Alphabet size
        rows (Tuple[Tuple[int, ...], ...]): Sorted rows, all of length k

    Example:
        >>> T = Tableau.from_columns([(1, 2, 4), (3, 5, 6)], n=3, m=6)
        >>> T.rows
        ((1, 3), (2, 5), (4, 6))
        >>> str(T)
        '1,2,4|3,5,6'
    """

    n: int
    m: int
    rows: Tuple[Tuple[int, ...], ...]

    @property
    def k(self) -> int:
        """Number of columns."""
        return len(self.rows[0]) if self.rows else 0

    @cached_property
    def columns(self) -> Tuple[Column, ...]:
        return tuple(tuple(row[p] for row in self.rows) for p in range(self.k))

    @classmethod
    def empty(cls, n: int, m: int) -> "Tableau":
        """The unit of the monoid: n empty rows."""
        return cls(n, m, tuple(() for _ in range(n)))

    @classmethod
    def from_columns(cls, columns: Iterable[Sequence[int]], n: int, m: int) -> "Tableau":
        """Union of single-column tableaux, validated."""
        rows: List[List[int]] = [[] for _ in range(n)]
        for col in columns:
            if len(col) != n:
                raise DimensionMismatch(f"column {tuple(col)} does not have {n} entries")
            for r, x in enumerate(col):
                rows[r].append(x)
        return make_tableau(rows, n, m)

    @classmethod
    def from_dict(cls, data: dict) -> "Tableau":
        return make_tableau(data["rows"], data["n"], data["m"])

    def to_dict(self) -> dict:
        return {"n": self.n, "m": self.m, "rows": [list(row) for row in self.rows]}

    def __str__(self) -> str:
        if self.k == 0:
            return "()"
        return "|".join(",".join(str(x) for x in col) for col in self.columns)


def make_tableau(rows: Sequence[Sequence[int]], n: int, m: int) -> Tableau:
    """
    Validate rows and return a Tableau with each row sorted.

    Args:
        rows: n sequences of equal length
        n: Number of rows
        m: Largest allowed entry

    Returns:
        Tableau: The validated tableau

    Raises:
        DimensionMismatch: If there are not exactly n rows or m <= n
        RaggedRows: If the rows have different lengths
        OutOfRange: If an entry lies outside [1, m]
        ColumnNotStrict: If some column fails to increase strictly

    Example:
        >>> make_tableau([[2, 1], [3, 4]], n=2, m=4).rows
        ((1, 2), (3, 4))
    """
    if n < 1 or m <= n:
        raise DimensionMismatch(f"need 1 <= n < m, got n={n}, m={m}")
    if len(rows) != n:
        raise DimensionMismatch(f"expected {n} rows, got {len(rows)}")

    sorted_rows = tuple(tuple(sorted(int(x) for x in row)) for row in rows)
    if len({len(row) for row in sorted_rows}) > 1:
        raise RaggedRows(f"row lengths differ: {[len(r) for r in sorted_rows]}")
    for row in sorted_rows:
        for x in row:
            if not 1 <= x <= m:
                raise OutOfRange(f"entry {x} outside [1, {m}]")
    for p in range(len(sorted_rows[0])):
        for r in range(1, n):
            if sorted_rows[r][p] <= sorted_rows[r - 1][p]:
                raise ColumnNotStrict(f"column {p + 1} is not strictly increasing")
    return Tableau(n, m, sorted_rows)


def rows_from_columns(columns: Sequence[Column], n: int) -> Tuple[Tuple[int, ...], ...]:
    """Row-sorted union of columns, no validation."""
    return tuple(tuple(sorted(col[r] for col in columns)) for r in range(n))


def _check_same_frame(S: Tableau, T: Tableau) -> None:
    if (S.n, S.m) != (T.n, T.m):
        raise DimensionMismatch(f"SSYT({S.n},[{S.m}]) vs SSYT({T.n},[{T.m}])")


# ==================== MONOID ====================

def union(S: Tableau, T: Tableau) -> Tableau:
    """Row-wise sorted union; always semistandard."""
    _check_same_frame(S, T)
    rows = tuple(tuple(sorted(a + b)) for a, b in zip(S.rows, T.rows))
    return Tableau(S.n, S.m, rows)


def union_all(tableaux: Iterable[Tableau], n: int, m: int) -> Tableau:
    result = Tableau.empty(n, m)
    for T in tableaux:
        result = union(result, T)
    return result


def divide(T: Tableau, S: Tableau) -> Tableau:
    """
    The tableau R with R ∪ S = T.

    Raises:
        NotAFactor: If some row of S is not a sub-multiset of the matching row
            of T, or if the row-wise difference is not semistandard
    """
    _check_same_frame(S, T)
    rows = []
    for big, small in zip(T.rows, S.rows):
        rest = Counter(big)
        rest.subtract(small)
        if any(v < 0 for v in rest.values()):
            raise NotAFactor(f"{S} does not divide {T}")
        rows.append(sorted(rest.elements()))
    try:
        return make_tableau(rows, T.n, T.m)
    except ColumnNotStrict:
        raise NotAFactor(f"{T} / {S} is not semistandard") from None


def content(T: Tableau) -> ContentVector:
    """Multiplicity of each letter 1..m."""
    counts = [0] * T.m
    for row in T.rows:
        for x in row:
            counts[x - 1] += 1
    return tuple(counts)


# ==================== COLUMNS ====================

def trivial_column(i: int, n: int) -> Column:
    """The frozen column {i, ..., i+n-1}."""
    return tuple(range(i, i + n))


def column_gap_weight(col: Column) -> int:
    return col[-1] - col[0] - (len(col) - 1)


def is_trivial_column(col: Column) -> bool:
    return column_gap_weight(col) == 0


def is_trivial(T: Tableau) -> bool:
    return all(is_trivial_column(col) for col in T.columns)


def gap_weight(T: Tableau) -> int:
    """Total number of missing letters inside the columns; equals k after factorization."""
    return sum(column_gap_weight(col) for col in T.columns)


def column_weight(col: Column) -> WeightVector:
    # gap after the (j-1)-th entry (1-based j) counts toward omega_{n-j+1}
    n = len(col)
    w = [0] * (n - 1)
    for j in range(1, n):
        w[n - j - 1] += col[j] - col[j - 1] - 1
    return tuple(w)


def weight(T: Tableau) -> WeightVector:
    """Weight in fundamental-weight coordinates (omega_1, ..., omega_{n-1})."""
    total = [0] * (T.n - 1)
    for col in T.columns:
        for idx, g in enumerate(column_weight(col)):
            total[idx] += g
    return tuple(total)


def weight_in_roots(w: Sequence[int], n: int) -> Tuple[Fraction, ...]:
    """Coordinates of sum w_j omega_j in the simple roots of A_{n-1}."""
    rank = n - 1
    coeffs = []
    for i in range(1, rank + 1):
        total = Fraction(0)
        for j in range(1, rank + 1):
            total += w[j - 1] * Fraction(min(i, j) * (n - max(i, j)), n)
        coeffs.append(total)
    return tuple(coeffs)


def weight_leq(v: Sequence[int], w: Sequence[int], n: int) -> bool:
    """v <= w when w - v is a nonnegative integral combination of simple roots."""
    diff = [b - a for a, b in zip(v, w)]
    return all(c.denominator == 1 and c >= 0 for c in weight_in_roots(diff, n))


def split_column(col: Column, n: int) -> Tuple[List[Column], List[Column]]:
    """
    Factor one column into fundamental columns.

    Repeatedly peels T1 = [j1+1, j1+n+1] minus {j1+c+1} off the column, where
    j1+1..j1+c is its initial run of consecutive entries, and records the
    trivial column [j1+2, j1+n+1] each step introduces in the denominator.

    Returns:
        Tuple[List[Column], List[Column]]: (fundamental columns, added trivial columns)

    Example:
        >>> split_column((1, 3, 6), 3)
        ([(1, 3, 4), (2, 3, 5), (3, 4, 6)], [(2, 3, 4), (3, 4, 5)])
    """
    fundamentals: List[Column] = []
    added: List[Column] = []
    current = tuple(col)
    while column_gap_weight(current) > 1:
        j1 = current[0] - 1
        c = 1
        while current[c] == current[0] + c:
            c += 1
        fundamentals.append(tuple(x for x in range(j1 + 1, j1 + n + 2) if x != j1 + c + 1))
        added.append(trivial_column(j1 + 2, n))
        current = tuple(range(j1 + 2, j1 + c + 2)) + current[c:]
    if column_gap_weight(current) == 1:
        fundamentals.append(current)
    return fundamentals, added


# ==================== FRACTIONS ====================

@dataclass(frozen=True)
class TableauFraction:
    """A formal quotient numerator / denominator in the group of fractions."""

    numerator: Tableau
    denominator: Tableau

    @property
    def is_tableau(self) -> bool:
        return self.denominator.k == 0

    def content(self) -> Tuple[int, ...]:
        return tuple(a - b for a, b in zip(content(self.numerator), content(self.denominator)))

    def reduced(self) -> "TableauFraction":
        """Cancel columns dividing both sides until none does."""
        num, den = self.numerator, self.denominator
        n, m = num.n, num.m
        progress = True
        while progress:
            progress = False
            for col in sorted(set(den.columns)):
                piece = Tableau.from_columns([col], n, m)
                try:
                    new_num, new_den = divide(num, piece), divide(den, piece)
                except NotAFactor:
                    continue
                num, den = new_num, new_den
                progress = True
                break
        return TableauFraction(num, den)

    def frozen_exponents(self) -> Tuple[int, ...]:
        """
        Exponents a_i of the trivial columns d_i = {i..i+n-1}, i = 1..m-n+1.

        Raises:
            NotFundamental: If a side contains a nontrivial column
        """
        n, m = self.numerator.n, self.numerator.m
        exps = [0] * (m - n + 1)
        for sign, side in ((1, self.numerator), (-1, self.denominator)):
            for col in side.columns:
                if not is_trivial_column(col):
                    raise NotFundamental(f"column {col} is not trivial")
                exps[col[0] - 1] += sign
        return tuple(exps)

    def __str__(self) -> str:
        if self.is_tableau:
            return str(self.numerator)
        return f"{self.numerator} / {self.denominator}"


# ==================== REDUCTION AND FACTORIZATION ====================

def reduce(T: Tableau) -> Tableau:
    """Strip trivial columns, smallest index first, while the quotient stays semistandard."""
    n, m = T.n, T.m
    current = T
    changed = True
    while changed:
        changed = False
        for i in range(1, m - n + 2):
            piece = Tableau(n, m, tuple((x,) for x in trivial_column(i, n)))
            try:
                current = divide(current, piece)
            except NotAFactor:
                continue
            changed = True
            break
    return current


def small_gaps_form(T: Tableau) -> Tuple[Tableau, TableauFraction]:
    """
    Factor T = T'' ∪ T' with T' a union of fundamental columns.

    T'' is a reduced fraction of trivial tableaux: the trivial columns of T
    over the trivial columns introduced by splitting.

    Returns:
        Tuple[Tableau, TableauFraction]: (T', T'')

    Example:
        >>> T = make_tableau([[1, 2], [3, 4], [5, 6]], 3, 6)
        >>> T_prime, T_second = small_gaps_form(T)
        >>> str(T_second)
        '() / 2,3,4|3,4,5'
    """
    n, m = T.n, T.m
    fundamentals: List[Column] = []
    added: List[Column] = []
    kept_trivial: List[Column] = []
    for col in T.columns:
        if is_trivial_column(col):
            kept_trivial.append(col)
            continue
        f, a = split_column(col, n)
        fundamentals.extend(f)
        added.extend(a)
    T_prime = Tableau.from_columns(fundamentals, n, m)
    T_second = TableauFraction(
        Tableau.from_columns(kept_trivial, n, m),
        Tableau.from_columns(added, n, m),
    ).reduced()
    return T_prime, T_second


def equivalent(S: Tableau, T: Tableau) -> bool:
    """S ~ T: equal modulo trivial columns."""
    _check_same_frame(S, T)
    return small_gaps_form(S)[0] == small_gaps_form(T)[0]


def solve_frozen_exponents(diff: Sequence[int], n: int, m: int) -> Tuple[int, ...]:
    """
    Write a content difference as sum a_i content(d_i) over trivial columns.

    Raises:
        NotInLattice: If no integer solution exists
    """
    last = m - n + 1
    a: List[int] = []
    for i in range(1, last + 1):
        covered = sum(a[j - 1] for j in range(max(1, i - n + 1), i))
        a.append(diff[i - 1] - covered)
    for i in range(last + 1, m + 1):
        covered = sum(a[j - 1] for j in range(max(1, i - n + 1), last + 1))
        if diff[i - 1] != covered:
            raise NotInLattice(f"content difference {tuple(diff)} is not spanned by frozen columns")
    return tuple(a)


def frozen_tableau(exponents: Sequence[int], n: int, m: int) -> Tableau:
    """Union of d_i^{a_i} for the nonnegative exponents."""
    cols = []
    for i, a in enumerate(exponents, start=1):
        if a < 0:
            raise NotAFactor("negative frozen exponent has no tableau")
        cols.extend([trivial_column(i, n)] * a)
    return Tableau.from_columns(cols, n, m)


@dataclass(frozen=True)
class LiftResult:
    """Outcome of content_lift: a tableau, or a fraction when denominators remain."""

    exponents: Tuple[int, ...]
    fraction: TableauFraction

    @property
    def localized(self) -> bool:
        return not self.fraction.is_tableau

    @property
    def tableau(self) -> Optional[Tableau]:
        return None if self.localized else self.fraction.numerator


def content_lift(T_class: Tableau, target: Sequence[int]) -> LiftResult:
    """
    The member of the ~-class of T_class with the given content.

    Frozen exponents are solved triangularly against the reduced form; when
    some exponent is negative the result is reported as a fraction.

    Raises:
        NotInLattice: If target - content(reduce(T_class)) is not a frozen combination
    """
    n, m = T_class.n, T_class.m
    base = reduce(T_class)
    diff = [t - c for t, c in zip(target, content(base))]
    exps = solve_frozen_exponents(diff, n, m)
    positive = [max(a, 0) for a in exps]
    negative = [max(-a, 0) for a in exps]
    fraction = TableauFraction(
        union(base, frozen_tableau(positive, n, m)),
        frozen_tableau(negative, n, m),
    ).reduced()
    return LiftResult(exps, fraction)


# ==================== ORDERS ====================

def _shape_below(rows: Sequence[Sequence[int]], i: int) -> Tuple[int, ...]:
    return tuple(sum(1 for x in row if x <= i) for row in rows)


def _partial_sums(values: Sequence[int]) -> Tuple[int, ...]:
    out, total = [], 0
    for v in values:
        total += v
        out.append(total)
    return tuple(out)


def dominance_leq(S: Tableau, T: Tableau) -> bool:
    """
    S <= T when sh(S[i]) is dominated by sh(T[i]) for every i.

    S[i] is the subtableau of entries at most i.

    Raises:
        ContentMismatch: If S and T have different contents
    """
    _check_same_frame(S, T)
    if content(S) != content(T):
        raise ContentMismatch(f"{S} and {T} have different contents")
    for i in range(1, S.m + 1):
        low = _partial_sums(_shape_below(S.rows, i))
        high = _partial_sums(_shape_below(T.rows, i))
        if any(a > b for a, b in zip(low, high)):
            return False
    return True


def dominance_key(rows: Sequence[Sequence[int]], m: int) -> Tuple[int, ...]:
    """Sort key whose lexicographic order extends the dominance order."""
    key: List[int] = []
    for i in range(1, m + 1):
        key.extend(_partial_sums(_shape_below(rows, i)))
    return tuple(key)


# ==================== ENUMERATION ====================

def all_columns(n: int, m: int) -> List[Column]:
    return [tuple(c) for c in combinations(range(1, m + 1), n)]


def all_tableaux(n: int, m: int, k: int) -> Iterator[Tableau]:
    """Every tableau of SSYT(n, [m]) with exactly k columns."""
    cols = all_columns(n, m)

    def extend(chain: List[Column], start: int) -> Iterator[List[Column]]:
        if len(chain) == k:
            yield chain
            return
        for idx in range(start, len(cols)):
            col = cols[idx]
            if chain and any(a > b for a, b in zip(chain[-1], col)):
                continue
            yield from extend(chain + [col], idx)

    for chain in extend([], 0):
        yield Tableau(n, m, rows_from_columns(chain, n))
