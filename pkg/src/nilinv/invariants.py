"""The formal nilradical matrix, its distinguished minors, and the
quadratic invariants attached to admissible pairs.

For a nilradical root with position (-j, -i) the coordinate x[i,j] sits
at the cell (i, j); the reflected cell (-j, -i) carries x[i,j] again for
the symplectic type when j < 0 and -x[i,j] otherwise.  A symplectic root
2e_i contributes the single cell (i, -i).

The minor attached to a nilradical root gamma collects the base roots
strictly above and to the left of E(gamma); their position data builds
two index systems whose determinants agree up to sign.
"""

from __future__ import annotations

from dataclasses import dataclass

from .base import BaseSet, compute_base
from .pairs import AdmissiblePair, admissible_pairs
from .parabolic import LeviData, ParabolicShape, split_roots
from .poly import Polynomial, ZERO, determinant
from .roots import (
    GroupType,
    Root,
    add_lattice,
    e_position,
    mirror_key,
    precedes,
    root_from_lattice,
    sub_lattice,
)


class MinorIndexError(RuntimeError):
    """Row or column labels of a minor collide."""


class SystemError(RuntimeError):
    """The invariant system violates a structural requirement."""


@dataclass(frozen=True)
class FormalMatrix:
    shape: ParabolicShape
    cells: dict

    def entry(self, r: int, c: int) -> Polynomial:
        cell = self.cells.get((r, c))
        if cell is None:
            return ZERO
        sign, var = cell
        p = Polynomial.var(var)
        return p if sign > 0 else -p

    def submatrix(self, rows, cols) -> list[list[Polynomial]]:
        return [[self.entry(r, c) for c in cols] for r in rows]


def build_X(shape: ParabolicShape) -> FormalMatrix:
    """Generic element of the nilradical as a signed-variable matrix."""
    gtype = shape.gtype
    cells = {}
    for gamma in split_roots(shape).nilradical:
        u, v = e_position(gamma, gtype)
        i, j = -v, -u
        cells[(i, j)] = (1, (i, j))
        if (u, v) != (i, j):
            sign = 1 if gtype.letter == "C" and j < 0 else -1
            cells[(u, v)] = (sign, (i, j))
    return FormalMatrix(shape, cells)


def variable_of(gamma: Root, gtype: GroupType) -> tuple[int, int]:
    """The coordinate x[i,j] attached to a nilradical root."""
    u, v = e_position(gamma, gtype)
    return (-v, -u)


def s_gamma(gamma: Root, base: BaseSet, gtype: GroupType) -> tuple[Root, ...]:
    """Base roots positioned strictly above and strictly left of E(gamma)."""
    a, neg_b = e_position(gamma, gtype)
    out = [xi for xi in base.roots
           if precedes(a, e_position(xi, gtype)[0])
           and precedes(e_position(xi, gtype)[1], neg_b)]
    return tuple(sorted(out, key=lambda r: r.sort_key))


@dataclass(frozen=True)
class MinorIndices:
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    rows_bar: tuple[int, ...]
    cols_bar: tuple[int, ...]


def _msort(values) -> tuple[int, ...]:
    return tuple(sorted(values, key=mirror_key))


def minor_indices(gamma: Root, base: BaseSet, gtype: GroupType) -> MinorIndices:
    a, neg_b = e_position(gamma, gtype)
    b = -neg_b
    rows_a, cols_b = [], []
    for xi in s_gamma(gamma, base, gtype):
        ai, neg_bi = e_position(xi, gtype)
        rows_a.append(ai)
        cols_b.append(-neg_bi)
    # the b_t lying strictly beyond a in the mirror order bring their rows in
    sel = [t for t in range(len(cols_b)) if precedes(a, cols_b[t])]
    # a doubled base root sits at (d, -d), so its row and column labels
    # coincide and enter each ordered system only once
    self_paired = sum(1 for t in sel if rows_a[t] == cols_b[t])

    def ordered(values) -> tuple[int, ...]:
        distinct = set(values)
        if len(distinct) != len(values) - self_paired:
            raise MinorIndexError(f"label collision in the minor of {gamma}")
        return _msort(distinct)

    rows = ordered(cols_b + [b] + [rows_a[t] for t in sel])
    cols = ordered([-a] + [-x for x in rows_a] + [-cols_b[t] for t in sel])
    rows_bar = ordered([a] + rows_a + [cols_b[t] for t in sel])
    cols_bar = ordered([-x for x in cols_b] + [-b] + [-rows_a[t] for t in sel])
    return MinorIndices(rows, cols, rows_bar, cols_bar)


def minor_M(gamma: Root, base: BaseSet, X: FormalMatrix) -> Polynomial:
    idx = minor_indices(gamma, base, X.shape.gtype)
    return determinant(X.submatrix(idx.rows, idx.cols))


def minor_Mbar(gamma: Root, base: BaseSet, X: FormalMatrix) -> Polynomial:
    idx = minor_indices(gamma, base, X.shape.gtype)
    return determinant(X.submatrix(idx.rows_bar, idx.cols_bar))


def l_summands(pair: AdmissiblePair, levi: LeviData,
               gtype: GroupType) -> tuple[tuple[Root, Root], ...]:
    """Root pairs (xi + a1, a2 + xi') over ordered splittings a1 + a2 of
    alpha, keeping only splittings where both sums are genuine nilradical
    roots.  The parts range over the positive Levi system together with
    the doubled elements of Gamma_r and zero: for the symplectic type the
    central doubled roots must stay available as splitting parts even
    though they are struck from Gamma_r for pair admissibility, or the
    telescoping that makes L invariant loses its partner terms."""
    n = gtype.n
    zero = (0,) * n
    parts = {zero}
    parts.update(g.lattice(n) for g in levi.levi)
    parts.update(g.lattice(n) for g in levi.gamma_r)
    parts = sorted(parts)
    part_set = set(parts)
    target = pair.alpha.lattice(n)
    nil_set = set(levi.nilradical)

    out = []
    for a1 in parts:
        a2 = sub_lattice(target, a1)
        if a2 not in part_set:
            continue
        left = root_from_lattice(add_lattice(pair.xi.lattice(n), a1), gtype)
        right = root_from_lattice(add_lattice(a2, pair.xi_prime.lattice(n)), gtype)
        if left is None or right is None:
            continue
        if left not in nil_set or right not in nil_set:
            continue
        out.append((left, right))
    if not out:
        raise SystemError(f"no valid splitting of alpha for pair ({pair.xi}, {pair.xi_prime})")
    return tuple(out)


def build_L(pair: AdmissiblePair, levi: LeviData, base: BaseSet,
            X: FormalMatrix) -> Polynomial:
    total = ZERO
    for left, right in l_summands(pair, levi, X.shape.gtype):
        total = total + minor_M(left, base, X) * minor_Mbar(right, base, X)
    return total


@dataclass(frozen=True)
class BaseInvariant:
    root: Root
    indices: MinorIndices
    poly: Polynomial

    @property
    def name(self) -> str:
        return f"M[{self.root}]"


@dataclass(frozen=True)
class PairInvariant:
    pair: AdmissiblePair
    summands: tuple  # ((rows, cols, rows_bar, cols_bar) per factor pair)
    poly: Polynomial

    @property
    def name(self) -> str:
        return f"L[{self.pair.phi}]"


@dataclass(frozen=True)
class InvariantSystem:
    shape: ParabolicShape
    levi: LeviData
    base: BaseSet
    pairs: tuple[AdmissiblePair, ...]
    base_invs: tuple[BaseInvariant, ...]
    pair_invs: tuple[PairInvariant, ...]

    @property
    def dim_m(self) -> int:
        return self.levi.dim_m

    @property
    def size(self) -> int:
        return len(self.base_invs) + len(self.pair_invs)

    def polynomials(self):
        for inv in self.base_invs:
            yield inv.name, inv.poly
        for inv in self.pair_invs:
            yield inv.name, inv.poly


def build_system(shape: ParabolicShape) -> InvariantSystem:
    gtype = shape.gtype
    levi = split_roots(shape)
    base = compute_base(levi.nilradical, gtype)
    pairs = admissible_pairs(base, levi, shape)
    X = build_X(shape)

    base_invs = []
    for xi in base.roots:
        idx = minor_indices(xi, base, gtype)
        poly = determinant(X.submatrix(idx.rows, idx.cols))
        if poly.is_zero:
            raise SystemError(f"vanishing minor for base root {xi}")
        base_invs.append(BaseInvariant(xi, idx, poly))

    pair_invs = []
    for pair in pairs:
        pieces = []
        total = ZERO
        for left, right in l_summands(pair, levi, gtype):
            li = minor_indices(left, base, gtype)
            ri = minor_indices(right, base, gtype)
            pieces.append(((li.rows, li.cols), (ri.rows_bar, ri.cols_bar)))
            total = total + (determinant(X.submatrix(li.rows, li.cols))
                             * determinant(X.submatrix(ri.rows_bar, ri.cols_bar)))
        if total.is_zero:
            raise SystemError(f"vanishing invariant for pair phi {pair.phi}")
        pair_invs.append(PairInvariant(pair, tuple(pieces), total))

    return InvariantSystem(shape, levi, base, tuple(pairs),
                           tuple(base_invs), tuple(pair_invs))
