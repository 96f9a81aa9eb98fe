"""
Formats - Text and JSON payloads accepted and printed by the command line.

Every payload argument may be given inline, as ``@path`` (read from a file)
or as ``-`` (read from stdin). Text forms are the ones the library prints;
JSON forms are the ``to_dict`` schemas of the owning modules. The full
grammar is documented in docs/formats.md.

Usage Example:
    >>> str(parse_tableau("1,2,4|3,5,6", 3, 6).rows)
    '((1, 3), (2, 5), (4, 6))'
    >>> parse_tableau("[[1,2],[3,4],[5,6]]", 3, 6).columns
    ((1, 3, 5), (2, 4, 6))
    >>> parse_matrix('[["1", "1/2"], [0, "-3"]]')
    Matrix([
    [1, 1/2],
    [0,  -3]])
"""

import json
import sys
from pathlib import Path
from typing import Any, List

import numpy as np
import sympy

from core.errors import DimensionMismatch, FormatError
from core.monomials import DominantMonomial, Multisegment
from core.plucker import PluckerPolynomial
from core.tableaux import Tableau, make_tableau


def read_payload(text: str) -> str:
    """Resolve ``@path`` and ``-``; anything else is the payload itself."""
    if text == "-":
        return sys.stdin.read()
    if text.startswith("@"):
        path = Path(text[1:])
        try:
            return path.read_text(encoding="utf-8")
        except OSError as exc:
            raise FormatError(f"cannot read {path}: {exc.strerror}") from None
    return text


def load_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc.msg} at position {exc.pos}") from None


def dump_json(data: Any) -> str:
    return json.dumps(data, indent=2, sort_keys=True)


def _looks_like_json(text: str) -> bool:
    return text[:1] in ("[", "{")


def _check_frame(data: dict, n: int, m: int, what: str) -> None:
    if data.get("n", n) != n or data.get("m", m) != m:
        raise DimensionMismatch(f"{what} is for Gr({data.get('n')},{data.get('m')}), command is for Gr({n},{m})")


# ==================== TABLEAUX ====================

def parse_tableau(text: str, n: int, m: int) -> Tableau:
    """
    Read a tableau of Gr(n, m).

    Accepted forms:
        "1,2,4|3,5,6"            columns separated by |
        "[[1,3],[2,5],[4,6]]"    JSON rows
        '{"n":3,"m":6,"rows":..}' Tableau.to_dict
        "()"                     the empty tableau
    """
    text = read_payload(text).strip()
    if text in ("", "()"):
        return Tableau.empty(n, m)
    if _looks_like_json(text):
        data = load_json(text)
        if isinstance(data, dict):
            _check_frame(data, n, m, "tableau")
            data = data.get("rows")
        if not isinstance(data, list) or not all(isinstance(row, list) for row in data):
            raise FormatError("tableau JSON must be a list of rows")
        try:
            rows = [[int(x) for x in row] for row in data]
        except (TypeError, ValueError):
            raise FormatError("tableau entries must be integers") from None
        return make_tableau(rows, n, m)
    columns = []
    for piece in text.split("|"):
        try:
            columns.append([int(x) for x in piece.split(",")])
        except ValueError:
            raise FormatError(f"cannot parse column {piece!r}") from None
    return Tableau.from_columns(columns, n, m)


def render_tableau(T: Tableau) -> str:
    return str(T)


# ==================== MONOMIALS AND MULTISEGMENTS ====================

def parse_monomial(text: str) -> DominantMonomial:
    """'Y[1,-5] Y[1,-3]^2' or JSON [[i, s, multiplicity], ...]."""
    text = read_payload(text).strip()
    if _looks_like_json(text):
        data = load_json(text)
        if isinstance(data, dict):
            data = data.get("factors", [])
        try:
            return DominantMonomial.from_list(data)
        except (TypeError, ValueError):
            raise FormatError("monomial JSON must be a list of [i, s, multiplicity]") from None
    return DominantMonomial.parse(text)


def parse_multisegment(text: str) -> Multisegment:
    """'[0,1]+[-3,0]' or JSON [[b, e], ...]."""
    text = read_payload(text).strip()
    if text.startswith("[["):
        data = load_json(text)
        try:
            return Multisegment.of((b, e) for b, e in data)
        except (TypeError, ValueError):
            raise FormatError("multisegment JSON must be a list of [b, e]") from None
    return Multisegment.parse(text)


# ==================== MATRICES ====================

def parse_matrix(text: str) -> sympy.Matrix:
    """JSON list of rows; entries are integers or strings like "3/4"."""
    data = load_json(read_payload(text))
    if not isinstance(data, list) or not data or not all(isinstance(row, list) for row in data):
        raise FormatError("matrix JSON must be a non-empty list of rows")
    width = len(data[0])
    if any(len(row) != width for row in data):
        raise FormatError("matrix rows have different lengths")
    try:
        return sympy.Matrix([[sympy.Rational(str(x)) for x in row] for row in data])
    except (TypeError, ValueError, sympy.SympifyError):
        raise FormatError("matrix entries must be integers or fractions p/q") from None


def render_matrix(X: sympy.Matrix) -> List[List[str]]:
    return [[str(X[i, j]) for j in range(X.cols)] for i in range(X.rows)]


def render_grid(grid: np.ndarray) -> str:
    """One line per row i of a g-vector grid: 'i: g_0 g_1 ...'."""
    return "\n".join(f"{i}: " + " ".join(str(int(x)) for x in row) for i, row in enumerate(grid.tolist(), start=1))


# ==================== POLYNOMIALS ====================

def parse_polynomial(text: str, n: int, m: int) -> PluckerPolynomial:
    """PluckerPolynomial.to_dict JSON; terms are straightened on input."""
    data = load_json(read_payload(text))
    if not isinstance(data, dict) or "terms" not in data:
        raise FormatError("polynomial JSON needs a 'terms' list")
    _check_frame(data, n, m, "polynomial")
    data = {"n": n, "m": m, **data}
    try:
        return PluckerPolynomial.from_dict(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"malformed polynomial JSON: {exc}") from None
