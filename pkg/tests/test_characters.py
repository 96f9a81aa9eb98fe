import random
from itertools import combinations

import numpy as np
import pytest
import sympy

from core.characters import (
    QCharFormula,
    ch,
    ch_small_gaps,
    compatibility_test,
    generalized_submatrix,
    immanant_check,
    kl_immanant,
    ms_matrix,
    primeness_test,
    qchar_formula,
    reality_test,
    tableau_indexing,
    weakly_separated,
)
from core.config import Config
from core.errors import DimensionMismatch, KTooLarge
from core.monomials import DominantMonomial, phi_tilde, psi
from core.plucker import (
    PluckerPolynomial,
    plucker_minors,
    quotient_equal,
    random_rational_matrix,
    random_tnn_matrix,
)
from core.tableaux import Tableau, all_tableaux, dominance_leq, gap_weight, make_tableau, small_gaps_form, union_all

T_EXAMPLE = make_tableau([[1, 2], [3, 4], [5, 6]], 3, 6)


def cols(columns, n=3, m=6):
    return Tableau.from_columns(columns, n, m)


def poly(n, m, terms):
    return PluckerPolynomial.from_terms(n, m, terms)


# ############################################################################
# Q-CHARACTER FORMULAS
# ############################################################################

def test_qchar_of_two_fundamentals():
    M = DominantMonomial.parse("Y[1,-1] Y[2,-4]")
    assert str(qchar_formula(M)) == "chi(Y[1,-1])*chi(Y[2,-4]) - chi(Y[3,-3])"
    assert str(qchar_formula(M, n=3)) == "chi(Y[1,-1])*chi(Y[2,-4]) - 1"


def test_qchar_of_unit():
    assert qchar_formula(DominantMonomial.parse("1")).as_dict() == {(): 1}


FOUR_FACTORS = DominantMonomial.parse("Y[1,-5] Y[1,-3] Y[2,-2] Y[2,0]")


def test_qchar_of_four_factors():
    assert qchar_formula(FOUR_FACTORS).as_dict() == {
        ((2, -2), (4, -2)): 1,
        ((3, -3), (3, -1)): -1,
        ((1, -1), (2, -4), (3, -1)): 1,
        ((2, -4), (2, -2), (2, 0)): -1,
        ((1, -5), (1, -3), (1, -1), (3, -1)): -1,
        ((1, -5), (1, -3), (2, -2), (2, 0)): 1,
    }


def test_qchar_truncates_at_rank():
    assert qchar_formula(FOUR_FACTORS, n=4).as_dict()[((2, -2),)] == 1
    assert qchar_formula(FOUR_FACTORS, n=3).as_dict() == {
        (): -1,
        ((1, -1), (2, -4)): 1,
        ((2, -4), (2, -2), (2, 0)): -1,
        ((1, -5), (1, -3), (1, -1)): -1,
        ((1, -5), (1, -3), (2, -2), (2, 0)): 1,
    }


def test_qchar_dict_form():
    f = qchar_formula(FOUR_FACTORS)
    assert QCharFormula.from_dict(f.to_dict()) == f


def test_qchar_size_cap():
    with pytest.raises(KTooLarge):
        qchar_formula(FOUR_FACTORS, config=Config(MAX_K=3))


# ############################################################################
# ch(T)
# ############################################################################

@pytest.mark.parametrize('T, text', [
    (cols([(1, 2, 4), (3, 5, 6)]), "P124*P356 - P123*P456"),
    (T_EXAMPLE, "P135*P246 - P134*P256 - P125*P346 + P124*P356 - 2*P123*P456"),
    (Tableau.empty(3, 6), "1"),
    (cols([(1, 3, 5)]), "P135"),
])
def test_ch_values(T, text):
    assert str(ch(T)) == text


def test_tableau_indexing():
    data = tableau_indexing(cols([(1, 2, 4), (3, 5, 6)]))
    assert (data.i, data.j, data.w) == ((1, 3), (3, 4), (1, 2))


def test_ch_of_small_gaps_form():
    T_prime, _ = small_gaps_form(T_EXAMPLE)
    expected = poly(3, 6, {
        ((1, 2, 3), (2, 3, 4), (3, 4, 5), (4, 5, 6)): -1,
        ((1, 2, 4), (2, 3, 4), (3, 4, 5), (3, 5, 6)): 1,
        ((1, 3, 4), (2, 3, 4), (2, 4, 5), (3, 5, 6)): -1,
        ((1, 2, 4), (2, 3, 5), (3, 4, 5), (3, 4, 6)): -1,
        ((1, 3, 4), (2, 3, 5), (2, 4, 5), (3, 4, 6)): 1,
    })
    assert ch_small_gaps(T_prime) == expected
    d2, d3 = PluckerPolynomial.plucker((2, 3, 4), 3, 6), PluckerPolynomial.plucker((3, 4, 5), 3, 6)
    assert ch(T_EXAMPLE) * d2 * d3 == expected


def test_ch_without_clearing_keeps_prefactor():
    p = ch(T_EXAMPLE, clear=False)
    assert p.frozen == (0, -1, -1, 0)
    assert p.normalized() == ch(T_EXAMPLE)


def test_ch_in_gr47_modulo_frozens():
    T = make_tableau([[1, 2], [2, 3], [4, 5], [6, 7]], 4, 7)
    expected = poly(4, 7, {
        ((2, 3, 5, 6),): 1,
        ((2, 4, 5, 6), (3, 5, 6, 7)): -1,
        ((1, 2, 3, 5), (2, 4, 5, 6), (3, 4, 6, 7)): 1,
        ((1, 2, 4, 5), (2, 3, 5, 6), (3, 4, 6, 7)): -1,
        ((1, 2, 3, 5), (2, 3, 4, 6), (2, 4, 5, 6), (3, 4, 5, 7)): -1,
        ((1, 2, 4, 5), (2, 3, 4, 6), (2, 3, 5, 6), (3, 4, 5, 7)): 1,
    })
    assert quotient_equal(ch(T, clear=False), expected)


def test_ch_size_cap():
    with pytest.raises(KTooLarge):
        ch(T_EXAMPLE, Config(MAX_K=2))
    with pytest.raises(KTooLarge):
        ch_small_gaps(small_gaps_form(T_EXAMPLE)[0], Config(MAX_K=3))


def test_threaded_sweep_matches_serial():
    T = make_tableau([[1, 2], [2, 3], [4, 5], [6, 7]], 4, 7)
    assert ch(T, threads=4) == ch(T, threads=1)
    assert ch(T_EXAMPLE, Config(THREADS=3)) == ch(T_EXAMPLE)


def _assert_unitriangular(T, p=None):
    p = ch(T) if p is None else p
    assert p.in_ring
    terms = p.term_dict()
    assert terms.pop(T.columns) == 1
    for mono in terms:
        assert dominance_leq(Tableau.from_columns(mono, T.n, T.m), T)


@pytest.mark.parametrize('k', [1, 2])
def test_ch_is_unitriangular_in_gr36(k):
    for T in all_tableaux(3, 6, k):
        _assert_unitriangular(T)


@pytest.fixture(scope="module")
def gr38_characters():
    """ch(T) for single columns and for two-column tableaux of gap weight <= 4 in Gr(3,8)."""
    family = list(all_tableaux(3, 8, 1))
    family += [T for T in all_tableaux(3, 8, 2) if gap_weight(T) <= 4]
    return [(T, ch(T)) for T in family]


def test_ch_is_unitriangular_in_gr38(gr38_characters):
    for T, p in gr38_characters:
        _assert_unitriangular(T, p)


def test_ch_is_nonnegative_on_totally_positive_points(gr38_characters):
    rng = np.random.default_rng(17)
    for _ in range(50):
        X = random_tnn_matrix(3, 8, rng)
        minors = plucker_minors(X)
        for _, p in gr38_characters:
            assert p.evaluate(X, minors) >= 0


# ############################################################################
# T-SYSTEM
# ############################################################################

def _chi(nodes, n, m):
    M = DominantMonomial.from_pairs((i, s) for i, s in nodes if 0 < i < n)
    return ch(phi_tilde(M, n, m), clear=False)


T_SYSTEM_CASES = [
    (n, m, i, j)
    for n, m in [(3, 8), (4, 7)]
    for i in range(1, n)
    for j in range(1, m - n)
]


@pytest.mark.parametrize('n, m, i, j', T_SYSTEM_CASES)
def test_t_system(n, m, i, j):
    s = i - 2 * j
    lhs = _chi([(i, s)], n, m) * _chi([(i, s - 2)], n, m)
    rhs = _chi([(i, s), (i, s - 2)], n, m) + _chi([(i - 1, s - 1), (i + 1, s - 1)], n, m)
    assert quotient_equal(lhs, rhs)


# ############################################################################
# REALITY, PRIMENESS, COMPATIBILITY
# ############################################################################

def test_plucker_coordinate_is_real():
    result = reality_test(cols([(1, 3, 5)]))
    assert result.real
    assert result.certificate.is_zero()


def test_two_column_example_is_real():
    assert reality_test(cols([(1, 2, 4), (3, 5, 6)])).real


@pytest.mark.slow
def test_nonreal_tableau_in_gr48():
    T = make_tableau([[1, 3], [2, 5], [4, 7], [6, 8]], 4, 8)
    result = reality_test(T)
    assert not result.real
    assert quotient_equal(result.certificate, PluckerPolynomial.plucker((1, 2, 7, 8), 4, 8))


def test_prime_tableau():
    result = primeness_test(cols([(1, 2, 4), (3, 5, 6)]))
    assert result.prime
    assert result.factors is None


def test_factorizable_tableau():
    T = cols([(1, 2, 4), (1, 3, 5)])
    result = primeness_test(T)
    assert not result.prime
    first, second = result.factors
    assert psi(first) * psi(second) == psi(T)


def test_mutated_cluster_variable_in_gr38_is_prime():
    assert primeness_test(make_tableau([[1, 3, 4], [2, 5, 6], [4, 7, 8]], 3, 8)).prime


@pytest.mark.slow
def test_cluster_monomial_in_gr38_factors():
    result = primeness_test(make_tableau([[1, 3, 4], [2, 5, 6], [7, 8, 8]], 3, 8))
    assert not result.prime
    assert sorted(str(T) for T in result.factors) == ["1,2,8", "3,5,7|4,6,8"]


def test_primeness_factor_cap():
    with pytest.raises(KTooLarge):
        primeness_test(T_EXAMPLE, Config(PRIME_MAX_FACTORS=2))


def test_incompatible_pair():
    result = compatibility_test(cols([(1, 2, 4)]), cols([(3, 5, 6)]))
    assert not result.compatible
    assert str(result.certificate) == "P123*P456"


def test_compatible_pair():
    assert compatibility_test(cols([(1, 2, 5)], m=5), cols([(1, 3, 4)], m=5)).compatible


@pytest.mark.parametrize('I, J, expected', [
    ((1, 2, 5), (1, 3, 4), True),
    ((1, 2, 4), (3, 5, 6), False),
    ((1, 3, 5), (2, 4, 6), False),
    ((1, 2, 3), (4, 5, 6), True),
    ((1, 2, 4), (1, 2, 4), True),
])
def test_weakly_separated(I, J, expected):
    assert weakly_separated(I, J) == expected


def test_weakly_separated_rejects_sizes():
    with pytest.raises(DimensionMismatch):
        weakly_separated((1, 2), (1, 2, 3))


@pytest.mark.slow
def test_plucker_compatibility_is_weak_separation():
    columns = list(combinations(range(1, 7), 3))
    for p, I in enumerate(columns):
        for J in columns[p:]:
            assert compatibility_test(cols([I]), cols([J])).compatible == weakly_separated(I, J)


# ############################################################################
# MS MATRIX AND IMMANANTS
# ############################################################################

def test_ms_matrix():
    rows = ms_matrix(3, 5)
    assert rows[0] == [(2, 3, 4), (1, 3, 4), (1, 2, 4), (1, 2, 3), None]
    assert rows[4][4] == (1, 2, 3)
    assert rows[4][0] is None


def test_generalized_submatrix_repeats_indices():
    A = sympy.Matrix([[1, 2], [3, 4]])
    assert generalized_submatrix(A, [1, 1], [1, 2]) == sympy.Matrix([[1, 2], [1, 2]])
    with pytest.raises(DimensionMismatch):
        generalized_submatrix(A, [1], [1, 2])


def test_immanants_of_two_by_two():
    A = sympy.Matrix([[1, 2], [3, 4]])
    assert kl_immanant((1, 2), A) == -2
    assert kl_immanant((2, 1), A) == 6


def test_identity_immanant_is_determinant():
    rng = np.random.default_rng(2)
    A = random_rational_matrix(4, 4, rng)
    assert kl_immanant((1, 2, 3, 4), A) == A.det()
    assert kl_immanant((4, 3, 2, 1), A) == A[0, 3] * A[1, 2] * A[2, 1] * A[3, 0]
    with pytest.raises(DimensionMismatch):
        kl_immanant((1, 2, 3), A)


@pytest.mark.parametrize('T', [
    cols([(1, 2, 4), (3, 5, 6)]),
    small_gaps_form(T_EXAMPLE)[0],
    small_gaps_form(make_tableau([[1, 2], [2, 3], [4, 5], [6, 7]], 4, 7))[0],
])
def test_immanant_agrees_with_ch(T):
    rng = np.random.default_rng(23)
    for _ in range(3):
        assert immanant_check(T, random_rational_matrix(T.n, T.m, rng))


def _random_small_gaps_tableaux(count, rng):
    frames = [(3, 6), (3, 7), (4, 7)]
    found = []
    while len(found) < count:
        n, m = frames[rng.randrange(len(frames))]
        columns = [tuple(sorted(rng.sample(range(1, m + 1), n))) for _ in range(rng.randint(1, 2))]
        T = union_all((Tableau.from_columns([c], n, m) for c in columns), n, m)
        if 1 <= gap_weight(T) <= 4:
            found.append(small_gaps_form(T)[0])
    return found


def test_immanant_agrees_with_ch_on_random_tableaux():
    rng = np.random.default_rng(29)
    for T in _random_small_gaps_tableaux(10, random.Random(31)):
        assert 1 <= T.k <= 4
        assert immanant_check(T, random_rational_matrix(T.n, T.m, rng))
