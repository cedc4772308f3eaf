"""Tests for exact polynomials, derivations, the dual involution, and weights."""

import random
from fractions import Fraction
from math import comb

from f4poly import poly
from f4poly.poly import Derivation, Polynomial


def x(i):
    return Polynomial.variable(i)


def random_poly(rng, nterms=4, max_var=8, max_deg=2):
    total = Polynomial.zero()
    for _ in range(nterms):
        term = Polynomial.constant(rng.randrange(-5, 6))
        for _ in range(rng.randrange(0, max_deg + 1)):
            term = term * x(rng.randrange(1, max_var + 1))
        total = total + term
    return total


def test_basic_arithmetic():
    p = x(1) + x(2)
    assert p * p == x(1) ** 2 + 2 * x(1) * x(2) + x(2) ** 2
    assert (p - p).is_zero()
    assert p - x(2) == x(1)
    assert 0 * p == Polynomial.zero()
    assert p * 0 == Polynomial.zero()
    assert (p + 0) == p
    assert Polynomial.constant(5) == 5
    assert Polynomial.zero() == 0


def test_fraction_coefficients():
    p = Fraction(1, 2) * x(3)
    assert (p + p) == x(3)
    assert p * Fraction(2, 1) == x(3)


def test_degree_and_homogeneous():
    assert Polynomial.zero().degree() == -1
    assert Polynomial.constant(3).degree() == 0
    assert (x(1) * x(2) + x(3)).degree() == 2
    assert not (x(1) * x(2) + x(3)).is_homogeneous()
    assert (x(1) * x(2) + x(3) ** 2).is_homogeneous()


def test_partial_derivative():
    p = x(1) ** 3 * x(2) + 2 * x(2)
    assert p.partial(1) == 3 * x(1) ** 2 * x(2)
    assert p.partial(2) == x(1) ** 3 + Polynomial.constant(2)
    assert p.partial(3).is_zero()


def test_partial_product_rule():
    rng = random.Random(4242)
    for _ in range(20):
        f = random_poly(rng)
        g = random_poly(rng)
        v = rng.randrange(1, 9)
        assert (f * g).partial(v) == f.partial(v) * g + f * g.partial(v)


def test_derivation_apply_and_leibniz():
    op = Derivation.from_terms([(1, 2, 1)])  # x1 * d/dx2
    assert op(x(2)) == x(1)
    assert op(x(2) ** 2) == 2 * x(1) * x(2)
    rng = random.Random(11)
    big = Derivation.from_terms([(1, 2, 3), (4, 1, -2), (2, 2, 1)])
    for _ in range(10):
        f = random_poly(rng, max_var=4)
        g = random_poly(rng, max_var=4)
        assert big(f * g) == big(f) * g + f * big(g)


def test_derivation_commutator():
    rng = random.Random(5)
    a = Derivation.from_terms([(1, 2, 1), (3, 4, -1)])
    b = Derivation.from_terms([(2, 1, 2), (4, 3, 1), (5, 5, 1)])
    c = a.commutator(b)
    for _ in range(10):
        f = random_poly(rng, max_var=6)
        assert c(f) == a(b(f)) - b(a(f))


def test_derivation_matrix_roundtrip():
    op = Derivation.from_terms([(1, 2, 3), (5, 2, -1), (7, 26, 2)])
    m = op.matrix()
    assert m[0][1] == 3 and m[4][1] == -1 and m[6][25] == 2
    assert Derivation.from_matrix(m) == op


def test_dual_involution():
    assert poly.dual(x(1)) == x(26)
    assert poly.dual(x(12)) == x(15)
    assert poly.dual(x(13)) == -x(13)
    assert poly.dual(x(14)) == -x(14)
    assert poly.dual(x(13) * x(14)) == x(13) * x(14)
    rng = random.Random(2024)
    for _ in range(10):
        f = random_poly(rng, max_var=26)
        g = random_poly(rng, max_var=26)
        assert poly.dual(poly.dual(f)) == f
        assert poly.dual(f * g) == poly.dual(f) * poly.dual(g)


def test_dual_op_is_conjugation():
    rng = random.Random(31337)
    op = Derivation.from_terms([(1, 13, 2), (13, 5, 1), (14, 14, -1), (7, 20, 3)])
    conj = poly.dual_op(op)
    for _ in range(10):
        f = random_poly(rng, max_var=26)
        assert conj(f) == poly.dual(op(poly.dual(f)))
    assert poly.dual_op(conj) == op


def test_variable_weights_pair_to_zero():
    for r in range(1, 13):
        w = poly.VARIABLE_WEIGHTS[r - 1]
        wbar = poly.VARIABLE_WEIGHTS[26 - r]
        assert tuple(a + b for a, b in zip(w, wbar)) == (0, 0, 0, 0)
    assert poly.VARIABLE_WEIGHTS[12] == (0, 0, 0, 0)
    assert poly.VARIABLE_WEIGHTS[13] == (0, 0, 0, 0)
    nonzero = [w for w in poly.VARIABLE_WEIGHTS if w != (0, 0, 0, 0)]
    assert len(nonzero) == 24
    assert len(set(nonzero)) == 24


def test_weight_of_monomials_and_mixed_error():
    w1 = poly.VARIABLE_WEIGHTS[0]
    assert poly.weight(x(1)) == w1
    assert poly.weight(x(1) * x(26)) == (0, 0, 0, 0)
    assert poly.weight(x(1) ** 2) == tuple(2 * a for a in w1)
    try:
        poly.weight(x(1) + x(2))
    except poly.WeightError as err:
        assert err.first != err.second
    else:
        assert False, "expected WeightError"
    try:
        poly.weight(Polynomial.zero())
    except ValueError:
        pass
    else:
        assert False, "expected ValueError"


def test_monomial_enumeration_counts():
    for k in range(4):
        count = sum(1 for _ in poly.monomials_of_degree(k))
        assert count == comb(k + 25, 25)


def test_degree_weight_table():
    table = poly.degree_weight_table(2)
    assert sum(len(v) for v in table.values()) == comb(27, 25)
    keys = list(table)
    assert keys == sorted(keys, reverse=True)
    for w, exps in table.items():
        for e in exps:
            assert poly.exponent_weight(e) == w
    # 12 dual-pair products plus the three quadratics in the two null variables
    zero_basis = poly.weight_subspace_basis(2, (0, 0, 0, 0))
    assert len(zero_basis) == 15
    assert poly.weight_subspace_basis(1, (9, 9, 9, 9)) == ()


def test_json_roundtrip():
    f = 3 * x(1) * x(26) - Fraction(1, 3) * x(13) ** 2 + Polynomial.constant(7)
    data = poly.poly_to_json(f)
    assert all(set(rec) == {"exp", "num", "den"} for rec in data)
    assert poly.poly_from_json(data) == f
