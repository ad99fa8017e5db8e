import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nilinv.poly import (
    Polynomial,
    PolyMatrix,
    T,
    ZERO,
    derivative,
    determinant,
    eval_poly,
    poly_from_json,
    poly_text,
    poly_to_json,
    substitute,
    var_text,
)

X67 = (6, 7)
X68 = (6, 8)
X6m8 = (6, -8)


def v(i, j):
    return Polynomial.var((i, j))


def test_addition_cancels():
    p = v(6, 7) + (-v(6, 7))
    assert p.is_zero
    assert p == 0


def test_product_of_conjugates():
    x, y = v(1, 2), v(1, 3)
    assert (x + y) * (x - y) == x * x - y * y


def test_scalar_normalization():
    assert Fraction(1, 2) * (2 * v(1, 2)) == v(1, 2)
    half = Fraction(1, 2) * v(1, 2)
    assert list(half.terms.values()) == [Fraction(1, 2)]


def test_power():
    x = v(1, 2)
    assert x ** 0 == 1
    assert x ** 3 == x * x * x
    assert (x + 1) ** 2 == x * x + 2 * x + 1


def test_substitute_identity_and_shift():
    p = v(6, 7)
    assert substitute(p, {(6, 7): v(6, 7)}) == p
    t = Polynomial.var(T)
    image = substitute(p, {(6, 7): v(6, 7) + t * v(5, 7)})
    assert image == v(6, 7) + t * v(5, 7)
    assert substitute(v(1, 2) * v(1, 3), {(1, 2): ZERO}) == 0
    # unmapped variables pass through
    assert substitute(v(1, 2) * v(1, 3), {(1, 2): Polynomial.const(2)}) == 2 * v(1, 3)


def test_derivative():
    x, y = v(1, 2), v(1, 3)
    assert derivative(x * x * y, (1, 2)) == 2 * x * y
    assert derivative(Polynomial.const(5), (1, 2)) == 0
    det2 = v(5, 7) * v(6, 8) - v(5, 8) * v(6, 7)
    assert derivative(det2, (6, 8)) == v(5, 7)


def test_determinant_2x2():
    grid = [[v(5, 7), v(5, 8)], [v(6, 7), v(6, 8)]]
    assert determinant(grid) == v(5, 7) * v(6, 8) - v(5, 8) * v(6, 7)


def test_determinant_edge_cases():
    assert determinant([[v(1, 2)]]) == v(1, 2)
    assert determinant([[ZERO, ZERO], [v(1, 2), v(1, 3)]]) == 0
    with pytest.raises(ValueError):
        determinant([[v(1, 2), v(1, 3)]])


def naive_cofactor_det(grid):
    n = len(grid)
    if n == 0:
        return Polynomial.const(1)
    if n == 1:
        return grid[0][0]
    total = ZERO
    for c in range(n):
        sub = [row[:c] + row[c + 1:] for row in grid[1:]]
        term = grid[0][c] * naive_cofactor_det(sub)
        total = total + (term if c % 2 == 0 else -term)
    return total


def test_determinant_matches_cofactor_expansion():
    rng = random.Random(11)
    vars_ = [(i, j) for i in range(1, 4) for j in range(4, 7)]
    for _ in range(12):
        size = rng.randint(1, 4)
        grid = [[Polynomial.var(rng.choice(vars_)) * rng.randint(-2, 2)
                 for _ in range(size)] for _ in range(size)]
        assert determinant(grid) == naive_cofactor_det(grid)


def test_eval_poly():
    p = v(5, 7) * v(6, 8) - v(5, 8) * v(6, 7)
    point = {(5, 7): 1, (6, 8): 1, (5, 8): 0, (6, 7): 0}
    assert eval_poly(p, point) == 1
    assert eval_poly(v(1, 2) - v(1, 2), {(1, 2): 9}) == 0
    assert eval_poly(Polynomial.const(Fraction(3, 2)), {}) == Fraction(3, 2)


def test_eval_commutes_with_substitute():
    rng = random.Random(3)
    vars_ = [(1, 2), (1, 3), (2, 3)]
    for _ in range(10):
        p = ZERO
        for _ in range(4):
            term = Polynomial.const(rng.randint(-3, 3))
            for var in vars_:
                term = term * Polynomial.var(var, rng.randint(0, 2))
            p = p + term
        mapping = {(1, 2): v(1, 3) + 2, (1, 3): v(2, 3) * v(2, 3)}
        point = {var: Fraction(rng.randint(-5, 5)) for var in vars_}
        mapped_point = {var: eval_poly(mapping.get(var, Polynomial.var(var)), point)
                        for var in vars_}
        assert eval_poly(substitute(p, mapping), point) == eval_poly(p, mapped_point)


coeffs = st.integers(min_value=-9, max_value=9)
exps = st.integers(min_value=0, max_value=3)
var_pool = [(1, 2), (1, 3), (2, 3), (2, -3)]


@st.composite
def polynomials(draw):
    p = ZERO
    for _ in range(draw(st.integers(min_value=0, max_value=4))):
        term = Polynomial.const(draw(coeffs))
        for var in var_pool:
            term = term * Polynomial.var(var, draw(exps))
        p = p + term
    return p


@settings(max_examples=60, deadline=None)
@given(polynomials(), polynomials(), polynomials())
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p + q == q + p
    assert (p * q) * r == p * (q * r)
    assert p * q == q * p
    assert p * (q + r) == p * q + p * r
    assert p + ZERO == p
    assert p * Polynomial.const(1) == p
    assert p - p == 0


def test_poly_matrix():
    pm = PolyMatrix(rows=(5, 6), cols=(7, 8),
                    entries={(5, 7): v(5, 7), (5, 8): v(5, 8),
                             (6, 7): v(6, 7), (6, 8): v(6, 8)})
    assert pm.entry(5, 7) == v(5, 7)
    assert determinant(pm) == v(5, 7) * v(6, 8) - v(5, 8) * v(6, 7)
    with pytest.raises(AssertionError):
        PolyMatrix(rows=(6, 5), cols=(7, 8), entries={})


def test_text_rendering():
    assert poly_text(ZERO) == "0"
    assert var_text(T) == "t"
    assert var_text((6, -8)) == "x[6,-8]"
    p = -Polynomial.var(X68) * Polynomial.var(X6m8)
    assert poly_text(p) == "-x[6,8]*x[6,-8]"
    q = Polynomial.var(X67) - 2 * Polynomial.var(X68) * Polynomial.var(X68)
    assert poly_text(q) == "x[6,7] - 2*x[6,8]^2"


def test_json_round_trip():
    p = (3 * v(6, 7) * v(6, -8) - Fraction(1, 2) * v(5, 7)
         + v(2, 3) ** 2 * v(1, 2))
    data = poly_to_json(p)
    assert poly_from_json(data) == p
    assert all(isinstance(item["coeff"], str) for item in data)
    with pytest.raises(ValueError):
        poly_to_json(Polynomial.var(T))
