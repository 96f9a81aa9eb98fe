import numpy as np
import pytest
import sympy

from core.errors import DimensionMismatch, IncomparableDegrees, OutOfRange, SingularFrozen
from core.plucker import (
    PluckerPolynomial,
    format_column,
    is_standard,
    normalized_random_matrix,
    plucker_abc,
    plucker_minors,
    quotient_equal,
    quotient_reduce,
    random_rational_matrix,
    random_tnn_matrix,
    sort_column,
    straighten,
)


def P(col, n=3, m=6):
    return PluckerPolynomial.plucker(col, n, m)


# ############################################################################
# STRAIGHTENING
# ############################################################################

def test_sort_column():
    assert sort_column((3, 1, 2)) == (1, (1, 2, 3))
    assert sort_column((2, 1, 3)) == (-1, (1, 2, 3))
    assert sort_column((1, 1, 3)) == (0, None)


def test_is_standard():
    assert is_standard(((1, 2, 4), (3, 5, 6)))
    assert not is_standard(((1, 2, 5), (2, 3, 4)))


def test_straighten_product_in_gr35():
    p = straighten(3, 5, {((1, 2, 5), (2, 3, 4)): 1})
    assert str(p) == "P124*P235 - P123*P245"


def test_three_term_relation_in_gr24():
    lhs = straighten(2, 4, {((1, 4), (2, 3)): 1})
    rhs = P((1, 3), 2, 4) * P((2, 4), 2, 4) - P((1, 2), 2, 4) * P((3, 4), 2, 4)
    assert lhs == rhs
    assert str(lhs) == "P13*P24 - P12*P34"


def test_antisymmetry():
    assert P((2, 1, 3)) == -P((1, 2, 3))
    assert PluckerPolynomial.from_terms(3, 6, {((1, 1, 3),): 1}).is_zero()
    with pytest.raises(OutOfRange):
        P((1, 2, 7))


@pytest.mark.parametrize('n, m, terms', [
    (2, 4, {((1, 4), (2, 3)): 1}),
    (3, 5, {((1, 2, 5), (2, 3, 4)): 1}),
    (3, 5, {((1, 3, 5), (2, 3, 4)): 1}),
    (3, 6, {((1, 2, 5), (2, 3, 4)): 1}),
    (3, 6, {((3, 5, 6), (1, 4, 6), (1, 2, 3)): 1}),
    (3, 6, {((2, 4, 6), (1, 3, 5), (1, 2, 4)): 3, ((4, 5, 6), (1, 2, 3)): -2}),
    (3, 6, {((4, 5, 6), (1, 2, 6), (2, 3, 4), (1, 3, 5)): 1}),
])
def test_straightening_preserves_values(n, m, terms):
    rng = np.random.default_rng(7)
    p = PluckerPolynomial.from_terms(n, m, terms)
    assert all(is_standard(mono) for mono, _ in p.terms)
    for _ in range(20):
        X = random_rational_matrix(n, m, rng)
        minors = plucker_minors(X)
        expected = sum(
            c * sympy.prod([minors[tuple(sorted(col))] for col in mono]) for mono, c in terms.items()
        )
        assert p.evaluate(X) == expected
        assert p.evaluate(X, minors) == expected


# ############################################################################
# ARITHMETIC AND DEGREES
# ############################################################################

def test_ring_operations_match_evaluation():
    rng = np.random.default_rng(11)
    X = random_rational_matrix(3, 6, rng)
    p = P((1, 3, 5)) - P((2, 4, 6)) * 2
    q = P((1, 2, 4)) * P((3, 5, 6)) + PluckerPolynomial.one(3, 6)
    assert (p * q).evaluate(X) == p.evaluate(X) * q.evaluate(X)
    assert (p + q).evaluate(X) == p.evaluate(X) + q.evaluate(X)
    assert (p ** 2).evaluate(X) == p.evaluate(X) ** 2
    assert (p - p).is_zero()
    assert 3 * p == p.scale(3)


def test_degree():
    p = P((1, 2, 4)) * P((3, 5, 6)) - P((1, 2, 3)) * P((4, 5, 6))
    assert p.degree() == (1, 1, 1, 1, 1, 1)
    assert p.is_homogeneous()
    assert PluckerPolynomial.zero(3, 6).degree() == (0,) * 6


def test_inhomogeneous_degree_raises():
    p = P((1, 2, 5), 3, 5) + P((2, 4, 5), 3, 5)
    assert not p.is_homogeneous()
    with pytest.raises(IncomparableDegrees):
        p.degree()


def test_mismatched_frames():
    with pytest.raises(DimensionMismatch):
        P((1, 2, 4)) + P((1, 2, 4), 3, 7)


def test_leading_term_is_dominance_maximal():
    p = P((1, 2, 3)) * P((4, 5, 6)) + P((1, 3, 5)) * P((2, 4, 6))
    assert p.leading_term() == (((1, 3, 5), (2, 4, 6)), 1)
    assert str(p) == "P135*P246 + P123*P456"


# ############################################################################
# FROZEN PREFACTORS
# ############################################################################

def test_frozen_denominator_clears():
    d2 = P((2, 3, 4))
    p = (P((1, 2, 4)) * d2).with_frozen([0, -1, 0, 0])
    cleared = p.normalized()
    assert cleared.in_ring
    assert cleared.frozen == (0, 0, 0, 0)
    assert cleared == P((1, 2, 4))


def test_frozen_denominator_that_stays():
    p = P((1, 2, 4)).with_frozen([0, -1, 0, 0]).normalized()
    assert not p.in_ring
    assert str(p) == "P234^-1*(P124)"


def test_absorb_frozen():
    p = PluckerPolynomial.frozen_monomial([1, 0, 0, 0], 3, 6) * P((1, 2, 4))
    assert p.absorb_frozen() == P((1, 2, 3)) * P((1, 2, 4))
    assert p.absorb_frozen().frozen == (0, 0, 0, 0)


def test_evaluate_with_frozen_prefactor():
    X = sympy.Matrix([[1, 0, 0, 1, 2, 1], [0, 1, 0, 1, 3, -1], [0, 0, 1, 1, 4, 2]])
    minors = plucker_minors(X)
    p = P((1, 3, 5)).with_frozen([0, -1, 2, 0])
    assert p.evaluate(X) == minors[(1, 3, 5)] * minors[(3, 4, 5)] ** 2 / minors[(2, 3, 4)]


def test_evaluate_rejects_vanishing_frozen():
    X = sympy.Matrix([[1, 1, 0, 0, 0, 0], [0, 0, 1, 0, 0, 1], [0, 0, 0, 1, 1, 0]])
    X[:, 2] = X[:, 3]
    p = P((1, 2, 4)).with_frozen([0, -1, 0, 0])
    with pytest.raises(SingularFrozen):
        p.evaluate(X)
    with pytest.raises(DimensionMismatch):
        p.evaluate(sympy.eye(3))


# ############################################################################
# QUOTIENT BY THE SOLID FROZENS
# ############################################################################

def test_quotient_equal_in_gr35():
    lhs = P((1, 2, 4), 3, 5) * P((2, 3, 5), 3, 5)
    assert quotient_equal(lhs, P((1, 2, 5), 3, 5) + P((2, 4, 5), 3, 5))
    assert not quotient_equal(lhs, P((1, 2, 5), 3, 5))


def test_quotient_equal_in_gr46():
    lhs = P((1, 2, 3, 5), 4, 6) * P((2, 3, 4, 6), 4, 6)
    assert quotient_equal(lhs, P((1, 2, 3, 6), 4, 6) + P((2, 3, 5, 6), 4, 6))


def test_quotient_reduce():
    reduced = quotient_reduce(P((1, 2, 5), 3, 5))
    assert reduced.term_dict() == {((1, 2, 4), (2, 3, 5)): 1, ((2, 4, 5),): -1}
    assert quotient_equal(reduced, P((1, 2, 5), 3, 5))


def test_quotient_reduce_drops_frozens():
    d = P((2, 3, 4)) * P((3, 4, 5))
    assert quotient_reduce(d).term_dict() == {(): 1}


# ############################################################################
# COLUMNS, FORMATTING, SERIALIZATION
# ############################################################################

@pytest.mark.parametrize('a, b, c, n, m, column', [
    (2, 1, 2, 3, 6, (1, 2, 4)),
    (1, 2, 3, 3, 6, (2, 5, 6)),
    (0, 1, 2, 3, 6, (2, 3, 4)),
    (3, 2, 1, 3, 6, (2, 3, 4)),
])
def test_plucker_abc(a, b, c, n, m, column):
    assert plucker_abc(a, b, c, n, m) == column


def test_plucker_abc_rejects():
    with pytest.raises(OutOfRange):
        plucker_abc(2, 1, 5, 3, 6)
    with pytest.raises(OutOfRange):
        plucker_abc(1, 1, 0, 3, 6)


def test_format_column():
    assert format_column((1, 2, 4), 6) == "P124"
    assert format_column((1, 2, 10), 10) == "P[1,2,10]"


def test_dict_form():
    p = (P((1, 2, 4)) * P((3, 5, 6)) - P((1, 2, 3)) * P((4, 5, 6))).with_frozen([0, -1, 0, 0])
    data = p.to_dict()
    assert data["frozen"] == [0, -1, 0, 0]
    assert data["terms"][0] == {"coeff": 1, "columns": [[1, 2, 4], [3, 5, 6]]}
    assert PluckerPolynomial.from_dict(data) == p


# ############################################################################
# EVALUATION POINTS
# ############################################################################

def test_random_tnn_matrix_has_nonnegative_minors():
    rng = np.random.default_rng(5)
    X = random_tnn_matrix(3, 6, rng)
    minors = plucker_minors(X)
    assert len(minors) == 20
    assert all(value >= 0 for value in minors.values())


def test_normalized_random_matrix():
    rng = np.random.default_rng(9)
    X = normalized_random_matrix(3, 6, rng)
    minors = plucker_minors(X)
    assert [minors[(i, i + 1, i + 2)] for i in range(1, 5)] == [1, 1, 1, 1]
