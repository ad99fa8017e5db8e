import random

from nilinv.base import compute_base, minimal_elements
from nilinv.parabolic import ParabolicShape, split_roots
from nilinv.roots import (
    INCOMPARABLE,
    GroupType,
    compare,
    dominates,
    double,
    e_position,
    minus,
    plus,
    precedes,
    single,
)

C2 = GroupType("C", 2)
D8 = GroupType("D", 8)
B8 = GroupType("B", 8)
C8 = GroupType("C", 8)


def brute_minimal(roots, gtype):
    pool = set(roots)
    return {g for g in pool
            if not any(dominates(g, x, gtype) for x in pool if x != g)}


def test_minimal_elements_sp4():
    shape = ParabolicShape(C2, (1, 2, 1))
    m_roots = split_roots(shape).nilradical
    assert set(m_roots) == {minus(1, 2), plus(1, 2), double(1)}
    assert set(minimal_elements(m_roots, C2)) == {minus(1, 2)}
    assert set(minimal_elements(m_roots, C2)) == brute_minimal(m_roots, C2)


def test_minimal_elements_trivial():
    assert minimal_elements([], C2) == ()
    assert minimal_elements([minus(1, 2)], C2) == (minus(1, 2),)


def test_base_o16(o16_shape):
    base = compute_base(split_roots(o16_shape).nilradical, D8)
    assert set(base.roots) == {minus(6, 7), minus(5, 8), minus(4, 5),
                               minus(3, 4), minus(2, 6), plus(1, 8)}
    assert [set(g) for g in base.generations] == [
        {minus(3, 4), minus(4, 5), minus(6, 7)},
        {minus(2, 6), minus(5, 8)},
        {plus(1, 8)},
    ]


def test_base_sp16(sp16_shape):
    base = compute_base(split_roots(sp16_shape).nilradical, C8)
    assert set(base.roots) == {minus(6, 7), minus(5, 8), minus(4, 5),
                               minus(3, 4), minus(2, 6), plus(1, 8)}


def test_base_o17(o17_shape):
    base = compute_base(split_roots(o17_shape).nilradical, B8)
    assert set(base.roots) == {minus(1, 2), minus(3, 4), single(8),
                               minus(2, 5), plus(4, 5), plus(6, 7)}


def test_base_sp4():
    shape = ParabolicShape(C2, (1, 2, 1))
    base = compute_base(split_roots(shape).nilradical, C2)
    assert base.roots == (minus(1, 2),)


def test_base_single_block():
    shape = ParabolicShape(D8, (16,))
    assert compute_base(split_roots(shape).nilradical, D8).roots == ()


def test_base_antichain_and_covering(small_family):
    for shape in small_family:
        gtype = shape.gtype
        m_roots = split_roots(shape).nilradical
        base = compute_base(m_roots, gtype)
        roots = base.roots
        for x in roots:
            for y in roots:
                if x != y:
                    # incomparable in the strict root sense and under the
                    # doubled-unit extension used by the peeling
                    assert compare(x, y, gtype) == INCOMPARABLE
                    assert not dominates(x, y, gtype)
        covered = set(roots)
        for g in m_roots:
            if g not in covered:
                assert any(dominates(g, x, gtype) for x in roots)


def test_base_rows_and_columns_are_distinct(small_family):
    for shape in small_family:
        base = compute_base(split_roots(shape).nilradical, shape.gtype)
        positions = [e_position(r, shape.gtype) for r in base.roots]
        assert len({p[0] for p in positions}) == len(positions)
        assert len({p[1] for p in positions}) == len(positions)


def test_excluded_minus_roots_see_a_base_blocker(small_family):
    # a skipped e_i - e_j always has a base root in its row or column span
    for shape in small_family:
        gtype = shape.gtype
        m_roots = split_roots(shape).nilradical
        base = compute_base(m_roots, gtype)
        in_base = set(base.roots)
        for g in m_roots:
            if g.kind != "minus" or g in in_base:
                continue
            i, j = g.i, g.j
            witnesses = [xi for xi in base.roots
                         if (xi.kind == "minus" and xi.j == j and i < xi.i)
                         or (xi.kind == "minus" and xi.i == i and xi.j < j)]
            assert witnesses, f"{g} uncovered in {shape.blocks}"


def test_excluded_plus_roots_see_a_base_blocker(small_family):
    # the eight witness patterns for a skipped e_i + e_j
    for shape in small_family:
        gtype = shape.gtype
        m_roots = split_roots(shape).nilradical
        base = compute_base(m_roots, gtype)
        in_base = set(base.roots)
        for g in m_roots:
            if g.kind != "plus" or g in in_base:
                continue
            i, j = g.i, g.j

            def witness(xi):
                if xi.kind == "plus":
                    return (xi.j == j and xi.i > i) or (xi.i == i and xi.j > j) \
                        or (xi.i == j) or (xi.j == i and xi.i > i)
                if xi.kind == "minus":
                    return xi.i in (i, j)
                if xi.kind == "single":
                    return xi.i in (i, j)
                if xi.kind == "double":
                    return xi.i in (i, j)
                return False

            assert any(witness(xi) for xi in base.roots), \
                f"{g} uncovered in {shape.gtype.letter} {shape.blocks}"


def test_excluded_double_roots_see_a_base_blocker(small_family):
    for shape in small_family:
        gtype = shape.gtype
        if gtype.letter != "C":
            continue
        m_roots = split_roots(shape).nilradical
        base = compute_base(m_roots, gtype)
        in_base = set(base.roots)
        for g in m_roots:
            if g.kind != "double" or g in in_base:
                continue
            i = g.i
            found = [xi for xi in base.roots
                     if e_position(xi, gtype)[1] == -i
                     and precedes(i, e_position(xi, gtype)[0])]
            assert found, f"{g} uncovered in {shape.blocks}"


def test_occupied_columns_have_base_roots_for_sp(small_family):
    # for the symplectic type, any nilradical column supports a base root
    for shape in small_family:
        gtype = shape.gtype
        if gtype.letter != "C":
            continue
        m_roots = split_roots(shape).nilradical
        base = compute_base(m_roots, gtype)
        m_cols = {e_position(g, gtype)[1] for g in m_roots}
        base_cols = {e_position(x, gtype)[1] for x in base.roots}
        assert base_cols == m_cols, f"empty columns in {shape.blocks}"


def test_recomputation_is_stable(small_family):
    for shape in small_family[:30]:
        m_roots = split_roots(shape).nilradical
        first = compute_base(m_roots, shape.gtype)
        second = compute_base(m_roots, shape.gtype)
        assert first == second


def test_base_with_covered_subsets_reproduces_itself(small_family):
    rng = random.Random(7)
    for shape in small_family:
        gtype = shape.gtype
        m_roots = split_roots(shape).nilradical
        base = compute_base(m_roots, gtype)
        covered = [g for g in m_roots if g not in set(base.roots)]
        for _ in range(3):
            subset = [g for g in covered if rng.random() < 0.5]
            again = compute_base(list(base.roots) + subset, gtype)
            assert again.roots == base.roots


def test_compute_base_accepts_arbitrary_root_subsets():
    # peeling applies to any antichain-coverable subset, not only nilradicals
    base = compute_base([minus(1, 3), minus(1, 2), minus(2, 3)], GroupType("D", 3))
    assert set(base.roots) == {minus(1, 2), minus(2, 3)}
