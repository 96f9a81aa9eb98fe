import json
import random

import numpy as np
import pytest

from core.cluster import (
    Quiver,
    Seed,
    c_vectors,
    cluster_closure,
    exchange_check,
    exchange_sides,
    g_factorization,
    g_matrix,
    g_vector,
    grid_positions,
    initial_seed,
    mutate_monomials,
    mutate_quiver,
    mutate_seed,
    mutate_sequence,
    mutated_label,
    parse_vertex,
    random_walk,
    vertex_color,
)
from core.errors import BadDimensions, FormatError, FrozenVertex
from core.characters import ch
from core.monomials import DominantMonomial, phi_tilde, psi
from core.plucker import quotient_equal
from core.tableaux import Tableau, make_tableau, weight


def cols(columns, n=3, m=6):
    return Tableau.from_columns(columns, n, m)


# ############################################################################
# QUIVERS
# ############################################################################

def test_quiver_mutation_of_a_path():
    Q = Quiver.from_arrows(["a", "k", "b"], [("a", "k"), ("k", "b")])
    mutated = mutate_quiver(Q, "k")
    assert sorted(mutated.arrows()) == [("a", "b"), ("b", "k"), ("k", "a")]
    assert mutate_quiver(mutated, "k") == Q


def test_quiver_rejects_bad_input():
    with pytest.raises(BadDimensions):
        Quiver(["a", "b"], [], np.array([[0, 1], [0, 0]]))
    with pytest.raises(BadDimensions):
        Quiver.from_arrows(["a"], [("a", "a")])
    with pytest.raises(FrozenVertex):
        mutate_quiver(Quiver.from_arrows(["a", "b"], [("a", "b")], frozen=["a"]), "a")


def test_opposite_arrows_cancel():
    Q = Quiver.from_arrows(["a", "b"], [("a", "b"), ("b", "a"), ("a", "b")])
    assert Q.arrows() == [("a", "b")]
    assert Q.incoming("b") == ["a"]
    assert Q.outgoing("a") == ["b"]


# ############################################################################
# INITIAL SEED
# ############################################################################

@pytest.mark.parametrize('vertex, label', [
    ((1, 0), "1,2,4"),
    ((2, 0), "1,3,4"),
    ((1, 1), "1,2,5"),
    ((2, 1), "1,4,5"),
    ((1, 2), "1,2,6"),
    ((2, 2), "1,5,6"),
    ((0, 0), "1,2,3"),
    ((3, 0), "2,3,4"),
    ((3, 1), "3,4,5"),
    ((3, 2), "4,5,6"),
])
def test_initial_labels_of_gr36(vertex, label):
    assert str(initial_seed(3, 6).labels[vertex]) == label


def test_initial_seed_shape():
    seed = initial_seed(3, 6)
    assert seed.mutable == [(1, 0), (1, 1), (2, 0), (2, 1)]
    assert len(seed.quiver.vertices) == 10
    assert all(vertex_color(seed, k) == "green" for k in seed.mutable)


@pytest.mark.parametrize('vertex, label', [
    ((0, 0), "1,2,3,4,5"),
    ((1, 0), "1,2,3,4,6"),
    ((1, 3), "1,2,3,4,9"),
    ((1, 4), "1,2,3,4,10"),
    ((2, 0), "1,2,3,5,6"),
    ((2, 1), "1,2,3,6,7"),
    ((3, 2), "1,2,6,7,8"),
    ((4, 0), "1,3,4,5,6"),
    ((4, 3), "1,6,7,8,9"),
    ((4, 4), "1,7,8,9,10"),
    ((5, 0), "2,3,4,5,6"),
    ((5, 4), "6,7,8,9,10"),
])
def test_initial_labels_of_gr510(vertex, label):
    assert str(initial_seed(5, 10).labels[vertex]) == label


def test_initial_seed_of_gr510_shape():
    seed = initial_seed(5, 10)
    assert seed.mutable == [(i, t) for i in range(1, 5) for t in range(4)]
    assert len(seed.quiver.vertices) == 26
    assert all(vertex_color(seed, k) == "green" for k in seed.mutable)


def test_initial_seed_of_gr24():
    seed = initial_seed(2, 4)
    assert seed.mutable == [(1, 0)]
    assert sorted(seed.quiver.arrows()) == [
        ((1, 0), (0, 0)),
        ((1, 0), (2, 1)),
        ((1, 1), (1, 0)),
        ((2, 0), (1, 0)),
    ]


@pytest.mark.parametrize('n, m', [(1, 3), (3, 3), (4, 3)])
def test_initial_seed_rejects(n, m):
    with pytest.raises(BadDimensions):
        initial_seed(n, m)


# ############################################################################
# MUTATION
# ############################################################################

@pytest.mark.parametrize('n, m, vertex, label', [
    (3, 6, (1, 0), "1,3,5"),
    (2, 5, (1, 0), "2,4"),
    (2, 4, (1, 0), "2,4"),
])
def test_first_mutation(n, m, vertex, label):
    assert str(mutate_seed(initial_seed(n, m), vertex).labels[vertex]) == label


def test_mutation_is_an_involution():
    seed = initial_seed(3, 6)
    for k in seed.mutable:
        assert mutate_seed(mutate_seed(seed, k), k) == seed


def test_mutation_at_frozen_vertex():
    with pytest.raises(FrozenVertex):
        mutate_seed(initial_seed(3, 6), (1, 2))
    with pytest.raises(FrozenVertex):
        mutated_label(initial_seed(3, 6), (0, 0))


def test_mutate_sequence():
    seed = mutate_sequence(initial_seed(3, 6), [(1, 0), (1, 0)])
    assert seed == initial_seed(3, 6)


@pytest.mark.parametrize('k', [(1, 0), (1, 1), (2, 0), (2, 1)])
def test_exchange_relation_holds_on_initial_seed(k):
    assert exchange_check(initial_seed(3, 6), k)


def test_exchange_relation_after_two_mutations():
    seed = mutate_sequence(initial_seed(3, 6), [(1, 0), (2, 1)])
    for k in seed.mutable:
        assert exchange_check(seed, k)


def test_monomial_mutation_agrees_with_tableaux():
    seed = initial_seed(3, 6)
    monomials = {v: psi(T) for v, T in seed.labels.items()}
    for k in seed.mutable:
        updated = mutate_monomials(seed.quiver, monomials, k, 3)
        assert updated[k] == psi(mutate_seed(seed, k).labels[k])


def test_monomial_mutation_rejects_frozen():
    seed = initial_seed(2, 4)
    monomials = {v: psi(T) for v, T in seed.labels.items()}
    with pytest.raises(FrozenVertex):
        mutate_monomials(seed.quiver, monomials, (1, 1), 2)


# ############################################################################
# A SEED WITH TWO-COLUMN NEIGHBOURS
# ############################################################################

def _gr38_seed():
    def T(columns):
        return cols(columns, m=8)

    labels = {
        (1, 0): T([(2, 3, 8)]),
        (0, 1): T([(1, 2, 8)]),
        (0, 2): T([(3, 5, 7), (4, 6, 8)]),
        (0, 3): T([(2, 3, 4)]),
        (2, 1): T([(3, 4, 8)]),
        (2, 2): T([(2, 5, 7), (4, 6, 8)]),
        (2, 3): T([(1, 2, 3)]),
    }
    arrows = [
        ((0, 1), (1, 0)),
        ((0, 2), (1, 0)),
        ((0, 3), (1, 0)),
        ((1, 0), (2, 1)),
        ((1, 0), (2, 2)),
        ((1, 0), (2, 3)),
    ]
    frozen = [v for v in labels if v != (1, 0)]
    return Seed(Quiver.from_arrows(list(labels), arrows, frozen), labels)


def test_sides_of_two_column_seed():
    sides = exchange_sides(_gr38_seed(), (1, 0))
    assert weight(sides.incoming) == (7, 2)
    assert weight(sides.outgoing) == (5, 3)
    assert sides.larger == "in"
    assert vertex_color(_gr38_seed(), (1, 0)) == "green"


def test_mutated_label_of_two_column_seed():
    assert mutated_label(_gr38_seed(), (1, 0)) == make_tableau([[1, 3, 4], [2, 5, 6], [4, 7, 8]], 3, 8)


def test_exchange_relation_of_two_column_seed():
    assert exchange_check(_gr38_seed(), (1, 0))


def test_three_term_exchange_relation_in_gr38():
    def chi(column):
        return ch(cols([column], m=8))

    lhs = chi((1, 3, 4)) * chi((2, 3, 5))
    rhs = chi((1, 3, 5)) * chi((2, 3, 4)) + chi((1, 2, 3)) * chi((3, 4, 5))
    assert quotient_equal(lhs, rhs)


# ############################################################################
# CLOSURE AND WALKS
# ############################################################################

def test_closure_of_gr36():
    result = cluster_closure(3, 6)
    assert len(result.clusters) == 50
    assert len(result.variables) == 16
    assert not result.truncated
    assert sorted(str(T) for T in result.non_plucker) == ["1,2,4|3,5,6", "1,3,5|2,4,6"]


@pytest.mark.parametrize('n, m, clusters, variables', [
    (2, 5, 5, 5),
    (2, 6, 14, 9),
])
def test_closure_of_finite_type_gr2(n, m, clusters, variables):
    result = cluster_closure(n, m)
    assert len(result.clusters) == clusters
    assert len(result.variables) == variables
    assert result.non_plucker == []


def test_closure_depth():
    assert cluster_closure(2, 5).depth == 2
    assert cluster_closure(3, 6, depth=1).truncated


def test_random_walk_stays_in_the_exchange_graph():
    start = initial_seed(3, 6)
    path = random_walk(start, 6, random.Random(4))
    assert len(path) == 6
    assert path[0][0] == start
    for (seed, k), (following, _) in zip(path, path[1:]):
        assert k in seed.mutable
        assert mutate_seed(seed, k) == following


def test_exchange_relations_along_a_walk_in_gr37():
    path = random_walk(initial_seed(3, 7), 4, random.Random(12))
    for seed, k in path:
        assert exchange_check(seed, k)


# ############################################################################
# g-VECTORS AND c-VECTORS
# ############################################################################

def test_g_vector():
    M = DominantMonomial.parse("Y[1,-3] Y[1,-5] Y[2,0] Y[2,-2]")
    assert g_vector(M, 3, 6).tolist() == [[-1, 0, 1], [0, 1, 0]]
    assert g_vector(cols([(1, 3, 5), (2, 4, 6)]), 3, 6).tolist() == [[-1, 0, 1], [0, 1, 0]]


def test_g_factorization():
    T = make_tableau([[1, 2], [3, 4], [5, 6]], 3, 6)
    assert g_factorization(T) == {(1, 0): -1, (1, 2): 1, (2, 1): 1, (3, 0): 1}


def test_g_factorization_of_initial_label():
    seed = initial_seed(3, 6)
    assert g_factorization(seed.labels[(2, 1)]) == {(2, 1): 1}


def _random_window_monomial(rng, n, m):
    ell = m - n - 1
    nodes = [(i, i - 2 * j - 2) for i in range(1, n) for j in range(ell + 1)]
    return DominantMonomial.from_pairs(rng.choice(nodes) for _ in range(rng.randint(0, 6)))


@pytest.mark.parametrize('seed', range(4))
def test_g_factorization_matches_g_vector_on_random_monomials(seed):
    rng = random.Random(60 + seed)
    start = initial_seed(3, 6)
    for _ in range(25):
        M = _random_window_monomial(rng, 3, 6)
        T = phi_tilde(M, 3, 6)
        factors = g_factorization(T, start)
        total = np.zeros((2, 3), dtype=np.int64)
        for v, e in factors.items():
            total += e * g_vector(start.labels[v], 3, 6)
        assert np.array_equal(total, g_vector(M, 3, 6))
        for i, t in grid_positions(3, 6):
            assert factors.get((i, t), 0) == g_vector(M, 3, 6)[i - 1, t]


def test_c_vectors_of_initial_seed():
    seed = initial_seed(3, 6)
    distant = [seed.labels[v] for v in grid_positions(3, 6)]
    assert c_vectors(distant).tolist() == np.eye(6, dtype=np.int64).tolist()


def test_c_vectors_after_one_mutation():
    seed = mutate_seed(initial_seed(2, 5), (1, 0))
    distant = [seed.labels[v] for v in grid_positions(2, 5)]
    assert c_vectors(distant).tolist() == [[-1, 1, 0], [0, 1, 0], [0, 0, 1]]


@pytest.mark.parametrize('n, m', [(2, 5), (3, 6), (3, 7)])
def test_c_vectors_are_dual_to_g_vectors(n, m):
    start = initial_seed(n, m)
    size = len(grid_positions(n, m))
    for k in start.mutable:
        seed = mutate_seed(start, k)
        distant = [seed.labels[v] for v in grid_positions(n, m)]
        C, G = c_vectors(distant), g_matrix(distant)
        assert (C.T @ G).tolist() == np.eye(size, dtype=np.int64).tolist()


def test_g_matrix_columns():
    seed = mutate_seed(initial_seed(3, 6), (1, 0))
    distant = [seed.labels[v] for v in grid_positions(3, 6)]
    G = g_matrix(distant)
    assert G.shape == (6, 6)
    assert G[:, 0].tolist() == g_vector(distant[0], 3, 6).reshape(-1).tolist()


# ############################################################################
# SERIALIZATION
# ############################################################################

def test_seed_dict_form():
    seed = mutate_seed(initial_seed(3, 6), (1, 0))
    data = json.loads(json.dumps(seed.to_dict()))
    assert data["n"] == 3 and data["m"] == 6
    assert Seed.from_dict(data) == seed


def test_seed_from_bad_dict():
    with pytest.raises(FormatError):
        Seed.from_dict({"vertices": [{"id": "(1,0)"}], "arrows": []})


@pytest.mark.parametrize('text, vertex', [
    ("(1,0)", (1, 0)),
    (" ( 2 , -1 ) ", (2, -1)),
])
def test_parse_vertex(text, vertex):
    assert parse_vertex(text) == vertex


@pytest.mark.parametrize('text', ["1,0", "(a,0)", "(1,0,2)"])
def test_parse_vertex_rejects(text):
    with pytest.raises(FormatError):
        parse_vertex(text)
