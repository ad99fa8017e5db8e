import pytest

from nilinv.base import compute_base
from nilinv.pairs import (
    CASE_CHAIN,
    CASE_RIGHT,
    admissible_pairs,
    is_chain,
    phi_set,
)
from nilinv.parabolic import ParabolicShape, split_roots
from nilinv.roots import GroupType, double, minus, plus, single

C2 = GroupType("C", 2)
D8 = GroupType("D", 8)
B8 = GroupType("B", 8)
C8 = GroupType("C", 8)


def pairs_of(shape):
    levi = split_roots(shape)
    base = compute_base(levi.nilradical, shape.gtype)
    return admissible_pairs(base, levi, shape)


def test_is_chain():
    assert is_chain([minus(6, 7), minus(5, 6), minus(4, 5)], D8)
    assert not is_chain([minus(6, 7), minus(4, 5)], D8)
    assert is_chain([minus(6, 7)], D8)
    assert is_chain([double(7, formal=True), minus(6, 7)], D8)
    assert not is_chain([minus(6, 7), double(7, formal=True)], D8)
    with pytest.raises(ValueError):
        is_chain([], D8)


def test_pairs_o16(o16_shape):
    got = {(q.xi, q.xi_prime): (q.alpha, q.phi, q.case)
           for q in pairs_of(o16_shape)}
    assert got == {
        (minus(6, 7), minus(6, 7)):
            (double(7, formal=True), plus(6, 7), CASE_RIGHT),
        (minus(5, 8), minus(6, 7)): (plus(7, 8), plus(6, 8), CASE_RIGHT),
        (plus(1, 8), minus(6, 7)): (minus(7, 8), minus(6, 8), CASE_RIGHT),
        (minus(5, 8), minus(5, 8)):
            (double(8, formal=True), plus(5, 8), CASE_RIGHT),
        (minus(6, 7), minus(4, 5)): (minus(5, 6), minus(4, 6), CASE_CHAIN),
    }
    assert set(phi_set(pairs_of(o16_shape))) == {
        plus(6, 7), plus(6, 8), minus(6, 8), plus(5, 8), minus(4, 6)}


def test_pairs_sp16(sp16_shape):
    # the diagonal pairs drop: their doubled connectors are cut from Gamma_r
    got = {(q.xi, q.xi_prime): (q.alpha, q.phi, q.case)
           for q in pairs_of(sp16_shape)}
    assert got == {
        (minus(5, 8), minus(6, 7)): (plus(7, 8), plus(6, 8), CASE_RIGHT),
        (plus(1, 8), minus(6, 7)): (minus(7, 8), minus(6, 8), CASE_RIGHT),
        (minus(6, 7), minus(4, 5)): (minus(5, 6), minus(4, 6), CASE_CHAIN),
    }


def test_pairs_o17(o17_shape):
    got = {(q.xi, q.xi_prime): (q.alpha, q.phi) for q in pairs_of(o17_shape)}
    assert got == {
        (minus(3, 4), minus(1, 2)): (minus(2, 3), minus(1, 3)),
        (plus(6, 7), minus(2, 5)): (minus(5, 6), minus(2, 6)),
        (plus(6, 7), minus(3, 4)): (minus(4, 6), minus(3, 6)),
        (single(8), minus(2, 5)): (minus(5, 8), minus(2, 8)),
        (single(8), minus(3, 4)): (minus(4, 8), minus(3, 8)),
    }
    assert all(q.case == CASE_CHAIN for q in pairs_of(o17_shape))


def test_pairs_sp4_empty():
    shape = ParabolicShape(C2, (1, 2, 1))
    assert pairs_of(shape) == ()


def test_chains_are_chains(small_family):
    for shape in small_family:
        levi = split_roots(shape)
        base = compute_base(levi.nilradical, shape.gtype)
        for q in admissible_pairs(base, levi, shape):
            if q.case == CASE_CHAIN:
                assert is_chain([q.xi, q.alpha, q.xi_prime], shape.gtype)
                assert q.alpha in set(levi.levi)
            else:
                assert q.alpha in set(levi.gamma_r)


def test_phi_lands_in_the_nilradical(small_family):
    for shape in small_family:
        levi = split_roots(shape)
        base = compute_base(levi.nilradical, shape.gtype)
        nil = set(levi.nilradical)
        pairs = admissible_pairs(base, levi, shape)
        for q in pairs:
            assert q.phi in nil
            assert not q.phi.formal
        phis = phi_set(pairs)
        assert len(set(phis)) == len(phis)
        assert not set(phis) & set(base.roots)
