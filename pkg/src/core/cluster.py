"""
Cluster - Quivers, tableau-labeled seeds and mutation inside the SSYT monoid.

A seed for C[Gr(n,m)] is a quiver whose vertices carry tableaux. Mutation at
a mutable vertex k replaces its tableau T_k by

    max(∪_{i->k} T_i, ∪_{k->i} T_i) / T_k

where max compares weights and the division happens among fundamental
columns; the exact tableau is then recovered from the Z^m-content the
exchange relation forces. No polynomial is ever computed for a mutation;
exchange_check verifies the resulting relation with ch when asked to.

Architecture:
    - Quiver: vertex list, frozen set and an exchange matrix (numpy int array)
    - Seed: immutable quiver + labels {vertex: Tableau}; vertices are (i, t)
      grid positions plus the trivial frozens (0, 0) and (n, t)
    - initial_seed: the rectangular grid seed with Kirillov-Reshetikhin labels
    - cluster_closure: breadth-first exchange graph, seeds keyed by their
      sorted label multiset
    - g-vectors and c-vectors through the fundamental-column coordinates

Usage Example:
    >>> seed = initial_seed(3, 6)
    >>> str(seed.labels[(1, 0)])
    '1,2,4'
    >>> str(mutate_seed(seed, (1, 0)).labels[(1, 0)])
    '1,3,5'

Author: grtab developers
Version: 2.0
Last Modified: October 17, 2026
"""

from __future__ import annotations

import random
import re
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Set, Tuple

import numpy as np
import sympy

from .characters import ch
from .config import Config
from .errors import (
    AmbiguousMax,
    BadDimensions,
    FormatError,
    FrozenVertex,
    NotAFactor,
    NotExpressible,
    OutOfRange,
    OutOfWindow,
)
from .log import get_logger
from .monomials import DominantMonomial, kr_plucker, monomial_weight, psi
from .plucker import PluckerPolynomial, quotient_equal
from .tableaux import (
    Tableau,
    content,
    content_lift,
    small_gaps_form,
    solve_frozen_exponents,
    union,
    union_all,
    weight,
    weight_leq,
)

logger = get_logger(__name__)

Vertex = Tuple[int, int]

_VERTEX = re.compile(r"^\s*\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*$")


def format_vertex(v: Vertex) -> str:
    return f"({v[0]},{v[1]})"


def parse_vertex(text: str) -> Vertex:
    match = _VERTEX.match(text)
    if not match:
        raise FormatError(f"cannot parse vertex {text!r}, expected '(i,t)'")
    return int(match.group(1)), int(match.group(2))


# ==================== QUIVERS ====================

class Quiver:
    """
    A quiver without loops or 2-cycles, stored as its exchange matrix.

    B[a, b] is the number of arrows from vertex a to vertex b minus the
    number of arrows from b to a.

    Example:
        >>> Q = Quiver.from_arrows(["a", "k", "b"], [("a", "k"), ("k", "b")])
        >>> sorted(mutate_quiver(Q, "k").arrows())
        [('a', 'b'), ('b', 'k'), ('k', 'a')]
    """

    def __init__(self, vertices: Sequence, frozen: Iterable, B: np.ndarray):
        self.vertices = tuple(vertices)
        self.frozen = frozenset(frozen)
        self.B = np.array(B, dtype=np.int64)
        self.index = {v: a for a, v in enumerate(self.vertices)}
        if self.B.shape != (len(self.vertices), len(self.vertices)):
            raise BadDimensions("exchange matrix does not match the vertex list")
        if not np.array_equal(self.B, -self.B.T):
            raise BadDimensions("exchange matrix must be skew-symmetric")

    @classmethod
    def from_arrows(cls, vertices: Sequence, arrows: Iterable[Tuple], frozen: Iterable = ()) -> "Quiver":
        """Build from a list of arrows; opposite arrows cancel."""
        index = {v: a for a, v in enumerate(vertices)}
        B = np.zeros((len(vertices), len(vertices)), dtype=np.int64)
        for src, dst in arrows:
            if src == dst:
                raise BadDimensions(f"loop at {src}")
            B[index[src], index[dst]] += 1
            B[index[dst], index[src]] -= 1
        return cls(vertices, frozen, B)

    @property
    def mutable(self) -> List:
        return [v for v in self.vertices if v not in self.frozen]

    def is_frozen(self, v) -> bool:
        return v in self.frozen

    def arrows(self) -> List[Tuple]:
        """Arrows with multiplicity, in vertex order."""
        out = []
        for a, src in enumerate(self.vertices):
            for b, dst in enumerate(self.vertices):
                out.extend([(src, dst)] * max(int(self.B[a, b]), 0))
        return out

    def incoming(self, k) -> List:
        col = self.B[:, self.index[k]]
        return [v for a, v in enumerate(self.vertices) for _ in range(max(int(col[a]), 0))]

    def outgoing(self, k) -> List:
        row = self.B[self.index[k], :]
        return [v for a, v in enumerate(self.vertices) for _ in range(max(int(row[a]), 0))]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Quiver):
            return NotImplemented
        if set(self.vertices) != set(other.vertices) or self.frozen != other.frozen:
            return False
        order = [other.index[v] for v in self.vertices]
        return np.array_equal(self.B, other.B[np.ix_(order, order)])

    __hash__ = None

    def __repr__(self) -> str:
        return f"Quiver({len(self.vertices)} vertices, {len(self.frozen)} frozen, {len(self.arrows())} arrows)"


def mutate_quiver(Q: Quiver, k) -> Quiver:
    """
    Quiver mutation at k.

    Raises:
        FrozenVertex: If k is frozen
    """
    if k in Q.frozen:
        raise FrozenVertex(f"cannot mutate at frozen vertex {k}")
    if k not in Q.index:
        raise OutOfRange(f"unknown vertex {k}")
    a = Q.index[k]
    B = Q.B
    col = B[:, a]
    row = B[a, :]
    new = B + (np.outer(np.abs(col), row) + np.outer(col, np.abs(row))) // 2
    new[a, :] = -row
    new[:, a] = -col
    return Quiver(Q.vertices, Q.frozen, new)


# ==================== SEEDS ====================

@dataclass(frozen=True, eq=False)
class Seed:
    """
    A quiver with a tableau on every vertex.

    Attributes:
        quiver (Quiver): Exchange quiver, trivial frozens included
        labels (Mapping): Vertex -> Tableau
    """

    quiver: Quiver
    labels: Mapping = field(default_factory=dict)

    @property
    def n(self) -> int:
        return next(iter(self.labels.values())).n

    @property
    def m(self) -> int:
        return next(iter(self.labels.values())).m

    @property
    def mutable(self) -> List:
        return self.quiver.mutable

    def key(self) -> Tuple[str, ...]:
        """Sorted multiset of mutable labels; identifies the cluster."""
        return tuple(sorted(str(self.labels[v]) for v in self.quiver.mutable))

    def to_dict(self) -> dict:
        vertices = [
            {"id": format_vertex(v), "frozen": v in self.quiver.frozen, "tableau": self.labels[v].to_dict()}
            for v in self.quiver.vertices
        ]
        arrows = [[format_vertex(src), format_vertex(dst)] for src, dst in self.quiver.arrows()]
        return {"n": self.n, "m": self.m, "vertices": vertices, "arrows": arrows}

    @classmethod
    def from_dict(cls, data: dict) -> "Seed":
        try:
            vertices = [parse_vertex(item["id"]) for item in data["vertices"]]
            frozen = [parse_vertex(item["id"]) for item in data["vertices"] if item.get("frozen")]
            labels = {parse_vertex(item["id"]): Tableau.from_dict(item["tableau"]) for item in data["vertices"]}
            arrows = [(parse_vertex(src), parse_vertex(dst)) for src, dst in data["arrows"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise FormatError(f"malformed seed JSON: {exc}") from None
        return cls(Quiver.from_arrows(vertices, arrows, frozen), labels)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Seed):
            return NotImplemented
        return self.quiver == other.quiver and dict(self.labels) == dict(other.labels)



def initial_seed(n: int, m: int) -> Seed:
    """
    The rectangular seed of C[Gr(n, m)].

    Grid vertices (i, t), i in [1, n-1], t in [0, l] with l = m - n - 1,
    carry [1, n-i] ∪ [n-i+t+2, n+t+1]; column t = l is frozen. The trivial
    frozens sit at (0, 0) (the column 1..n) and (n, t) (the column t+2..t+n+1).

    Raises:
        BadDimensions: Unless 2 <= n < m
    """
    if not 2 <= n < m:
        raise BadDimensions(f"need 2 <= n < m, got n={n}, m={m}")
    ell = m - n - 1
    grid = [(i, t) for i in range(1, n) for t in range(ell + 1)]
    trivial = [(0, 0)] + [(n, t) for t in range(ell + 1)]
    vertices = grid + trivial
    frozen = {(i, ell) for i in range(1, n)} | set(trivial)
    labels = {v: Tableau.from_columns([kr_plucker(v[0], v[1], n)], n, m) for v in vertices}

    arrows = []
    for i in range(1, n):
        for t in range(ell + 1):
            if t < ell:
                arrows.append(((i, t), (i + 1, t + 1)))
            if t >= 1:
                arrows.append(((i, t), (i, t - 1)))
            if i >= 2:
                arrows.append(((i, t), (i - 1, t)))
    for t in range(ell + 1):
        arrows.append(((n, t), (n - 1, t)))
    if ell >= 1:
        arrows.append(((1, 0), (0, 0)))
    arrows = [(src, dst) for src, dst in arrows if not (src in frozen and dst in frozen)]
    return Seed(Quiver.from_arrows(vertices, arrows, frozen), labels)


def _fundamentals(T: Tableau) -> Counter:
    return Counter(small_gaps_form(T)[0].columns)


@dataclass(frozen=True)
class ExchangeSides:
    incoming: Tableau
    outgoing: Tableau
    larger: str  # "in" or "out"

    @property
    def maximum(self) -> Tableau:
        return self.incoming if self.larger == "in" else self.outgoing


def exchange_sides(seed: Seed, k: Vertex) -> ExchangeSides:
    """
    The ∪-products of the in- and out-neighbours of k, and which one is larger.

    Raises:
        FrozenVertex: If k is frozen
        AmbiguousMax: If the two weights are equal or incomparable
    """
    if k in seed.quiver.frozen:
        raise FrozenVertex(f"cannot mutate at frozen vertex {format_vertex(k)}")
    n, m = seed.n, seed.m
    incoming = union_all((seed.labels[v] for v in seed.quiver.incoming(k)), n, m)
    outgoing = union_all((seed.labels[v] for v in seed.quiver.outgoing(k)), n, m)
    w_in, w_out = weight(incoming), weight(outgoing)
    if w_in != w_out and weight_leq(w_out, w_in, n):
        return ExchangeSides(incoming, outgoing, "in")
    if w_in != w_out and weight_leq(w_in, w_out, n):
        return ExchangeSides(incoming, outgoing, "out")
    raise AmbiguousMax(f"in-weight {w_in} and out-weight {w_out} at {format_vertex(k)} are not strictly ordered")


def mutated_label(seed: Seed, k: Vertex) -> Tableau:
    """The tableau T'_k that mutation at k puts on the vertex."""
    sides = exchange_sides(seed, k)
    old = seed.labels[k]
    remainder = _fundamentals(sides.maximum)
    remainder.subtract(_fundamentals(old))
    if any(c < 0 for c in remainder.values()):
        raise NotAFactor(f"{old} does not divide {sides.maximum} modulo trivial columns")
    n, m = seed.n, seed.m
    quotient_class = Tableau.from_columns(list(remainder.elements()), n, m)
    target = [a - b for a, b in zip(content(sides.maximum), content(old))]
    lift = content_lift(quotient_class, target)
    if lift.localized:
        raise NotExpressible(f"mutation at {format_vertex(k)} gives the fraction {lift.fraction}")
    logger.debug("mutation at %s: %s side wins, %s -> %s", format_vertex(k), sides.larger, old, lift.tableau)
    return lift.tableau


def mutate_seed(seed: Seed, k: Vertex) -> Seed:
    """
    Seed mutation at k: new label from the monoid rule, quiver mutated alongside.

    Raises:
        FrozenVertex: If k is frozen
        AmbiguousMax: If neither side has strictly larger weight
    """
    labels = dict(seed.labels)
    labels[k] = mutated_label(seed, k)
    return Seed(mutate_quiver(seed.quiver, k), labels)


def mutate_sequence(seed: Seed, steps: Iterable[Vertex]) -> Seed:
    for k in steps:
        seed = mutate_seed(seed, k)
    return seed


def vertex_color(seed: Seed, k: Vertex) -> str:
    """'green' when the incoming product is the larger side, 'red' otherwise."""
    return "green" if exchange_sides(seed, k).larger == "in" else "red"


def exchange_check(seed: Seed, k: Vertex, config: Optional[Config] = None) -> bool:
    """
    ch(T_k) ch(T'_k) = prod_{i->k} ch(T_i) + prod_{k->i} ch(T_i) in the quotient.

    Raises:
        KTooLarge: If a label exceeds the character cap
    """
    config = config or Config()
    n, m = seed.n, seed.m
    new = mutated_label(seed, k)

    def product(vertices: Sequence[Vertex]) -> PluckerPolynomial:
        result = PluckerPolynomial.one(n, m)
        for v in vertices:
            result = result * ch(seed.labels[v], config, clear=False)
        return result

    lhs = ch(seed.labels[k], config, clear=False) * ch(new, config, clear=False)
    rhs = product(seed.quiver.incoming(k)) + product(seed.quiver.outgoing(k))
    return quotient_equal(lhs, rhs)


def mutate_monomials(quiver: Quiver, labels: Mapping[Vertex, DominantMonomial], k: Vertex, n: int) -> Dict[Vertex, DominantMonomial]:
    """
    The same exchange rule on dominant monomials: M'_k = max(prod_in, prod_out) / M_k.

    Raises:
        AmbiguousMax: If the two products have weights that are not strictly ordered
        NotAFactor: If M_k does not divide the larger product
    """
    if k in quiver.frozen:
        raise FrozenVertex(f"cannot mutate at frozen vertex {k}")
    incoming = DominantMonomial()
    for v in quiver.incoming(k):
        incoming = incoming * labels[v]
    outgoing = DominantMonomial()
    for v in quiver.outgoing(k):
        outgoing = outgoing * labels[v]
    w_in, w_out = monomial_weight(incoming, n), monomial_weight(outgoing, n)
    if w_in != w_out and weight_leq(w_out, w_in, n):
        larger = incoming
    elif w_in != w_out and weight_leq(w_in, w_out, n):
        larger = outgoing
    else:
        raise AmbiguousMax(f"monomial weights {w_in} and {w_out} are not strictly ordered")
    rest = larger.counter()
    rest.subtract(labels[k].counter())
    if any(c < 0 for c in rest.values()):
        raise NotAFactor(f"{labels[k]} does not divide {larger}")
    updated = dict(labels)
    updated[k] = DominantMonomial.from_counter(rest)
    return updated


# ==================== CLOSURE ====================

@dataclass
class ClosureResult:
    """Outcome of the exchange-graph exploration."""

    clusters: Set[Tuple[str, ...]]
    variables: Set[Tableau]
    depth: int
    truncated: bool

    @property
    def non_plucker(self) -> List[Tableau]:
        return sorted((T for T in self.variables if T.k > 1), key=lambda T: T.rows)


def cluster_closure(n: int, m: int, depth: Optional[int] = None, config: Optional[Config] = None) -> ClosureResult:
    """
    Breadth-first mutation from the initial seed.

    Stops at the depth limit or after Config.CLOSURE_MAX_SEEDS clusters; in
    both cases the result is flagged truncated when unexplored seeds remain.
    """
    config = config or Config()
    limit = config.CLOSURE_MAX_DEPTH if depth is None else depth
    start = initial_seed(n, m)
    seen = {start.key()}
    variables = {start.labels[v] for v in start.mutable}
    queue = deque([(start, 0)])
    reached = 0
    truncated = False
    while queue:
        seed, d = queue.popleft()
        reached = max(reached, d)
        if d >= limit:
            truncated = True
            continue
        for k in seed.mutable:
            nxt = mutate_seed(seed, k)
            key = nxt.key()
            if key in seen:
                continue
            if len(seen) >= config.CLOSURE_MAX_SEEDS:
                truncated = True
                break
            seen.add(key)
            variables.add(nxt.labels[k])
            queue.append((nxt, d + 1))
    if truncated:
        logger.warning("closure of Gr(%d,%d) truncated at depth %d with %d clusters", n, m, reached, len(seen))
    return ClosureResult(seen, variables, reached, truncated)


def random_walk(seed: Seed, steps: int, rng: random.Random) -> List[Tuple[Seed, Vertex]]:
    """Seeds visited by mutating at uniformly chosen mutable vertices, with the vertex used."""
    path = []
    for _ in range(steps):
        k = rng.choice(seed.mutable)
        path.append((seed, k))
        seed = mutate_seed(seed, k)
    return path


# ==================== g-VECTORS AND c-VECTORS ====================

def grid_positions(n: int, m: int) -> List[Vertex]:
    ell = m - n - 1
    return [(i, t) for i in range(1, n) for t in range(ell + 1)]


def window_exponents(M: DominantMonomial, n: int, m: int) -> np.ndarray:
    """a_{i,j}: multiplicity of Y_{i, i-2j-2} in M, as an (n-1) x (l+1) grid."""
    ell = m - n - 1
    a = np.zeros((n - 1, ell + 1), dtype=np.int64)
    for i, s, c in M.factors:
        if not 1 <= i <= n - 1 or (i - s) % 2:
            raise OutOfWindow(f"Y[{i},{s}] is outside the window of Gr({n},{m})")
        j = (i - s - 2) // 2
        if not 0 <= j <= ell:
            raise OutOfWindow(f"Y[{i},{s}] is outside the window of Gr({n},{m})")
        a[i - 1, j] += c
    return a


def g_vector(M, n: int, m: int) -> np.ndarray:
    """
    The g-vector grid g[i-1, t] of a dominant monomial or tableau.

    g_{i,j} = a_{i,j} - a_{i,j+1} with a_{i,l+1} = 0.

    Example:
        >>> g_vector(DominantMonomial.parse("Y[1,-3] Y[1,-5] Y[2,0] Y[2,-2]"), 3, 6).tolist()
        [[-1, 0, 1], [0, 1, 0]]
    """
    if isinstance(M, Tableau):
        M = psi(M)
    a = window_exponents(M, n, m)
    shifted = np.zeros_like(a)
    shifted[:, :-1] = a[:, 1:]
    return a - shifted


def g_factorization(T: Tableau, seed: Optional[Seed] = None) -> Dict[Vertex, int]:
    """
    Exponents g with T = ∪ (T_v)^{g_v} over the initial seed, content-exact.

    Grid exponents are the g-vector of psi(T); the trivial frozens absorb
    the remaining content.

    Raises:
        NotExpressible: If the union does not reproduce T exactly
    """
    n, m = T.n, T.m
    seed = seed or initial_seed(n, m)
    g = g_vector(T, n, m)
    exponents: Dict[Vertex, int] = {}
    residual = list(content(T))
    for i, t in grid_positions(n, m):
        e = int(g[i - 1, t])
        if e:
            exponents[(i, t)] = e
            for x in seed.labels[(i, t)].columns[0]:
                residual[x - 1] -= e
    frozen_exps = solve_frozen_exponents(residual, n, m)
    trivial_vertices = [(0, 0)] + [(n, t) for t in range(m - n)]
    for v, e in zip(trivial_vertices, frozen_exps):
        if e:
            exponents[v] = exponents.get(v, 0) + e

    numerator = union_all((seed.labels[v] for v, e in exponents.items() for _ in range(max(e, 0))), n, m)
    denominator = union_all((seed.labels[v] for v, e in exponents.items() for _ in range(max(-e, 0))), n, m)
    if union(T, denominator) != numerator:
        raise NotExpressible(f"{T} is not the union of initial tableaux with exponents {exponents}")
    return dict(sorted(exponents.items()))


def _window_matrix(tableaux: Sequence[Tableau], n: int, m: int) -> sympy.Matrix:
    columns = [window_exponents(psi(T), n, m).reshape(-1).tolist() for T in tableaux]
    return sympy.Matrix(columns).T


def c_vectors(distant: Sequence[Tableau], initial: Optional[Sequence[Tableau]] = None) -> np.ndarray:
    """
    C' with T^{(0)}_i = ∪_j T_j^{c'_{ij}} modulo trivial columns; column j is the j-th c-vector.

    Both lists run over the grid vertices (mutable and frozen) in the order
    of grid_positions.

    Raises:
        NotExpressible: If the distant labels are not a basis of the window lattice
    """
    n, m = distant[0].n, distant[0].m
    if initial is None:
        seed = initial_seed(n, m)
        initial = [seed.labels[v] for v in grid_positions(n, m)]
    V_dist = _window_matrix(distant, n, m)
    V_init = _window_matrix(initial, n, m)
    if V_dist.shape[0] != V_dist.shape[1] or V_dist.det() == 0:
        raise NotExpressible("distant labels do not form a basis of the window lattice")
    solved = V_dist.LUsolve(V_init)
    if any(not entry.is_integer for entry in solved):
        raise NotExpressible("initial labels are not integral ∪-monomials in the distant labels")
    return np.array([[int(x) for x in row] for row in solved.T.tolist()], dtype=np.int64)


def g_matrix(distant: Sequence[Tableau]) -> np.ndarray:
    """Columns are the g-vectors of the distant labels, flattened in grid order."""
    n, m = distant[0].n, distant[0].m
    return np.array([g_vector(T, n, m).reshape(-1) for T in distant], dtype=np.int64).T
