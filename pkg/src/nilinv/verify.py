"""Computational verification of the invariant system.

Invariance is checked exactly: the generic nilradical matrix is
conjugated by each one-parameter subgroup with the parameter t kept
formal, and every invariant must reproduce itself identically.
Independence is certified by the exact rank of the Jacobian at a seeded
random integer point, and the orbit-dimension bound by exact ranks of
sampled bracket maps.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .invariants import FormalMatrix, InvariantSystem, build_X, variable_of
from .parabolic import ParabolicShape, split_roots
from .poly import Polynomial, T, ZERO, determinant, derivative, eval_poly, substitute
from .roots import (
    DOUBLE,
    GroupType,
    MINUS,
    PLUS,
    SINGLE,
    Root,
    mirror_indices,
    positive_roots,
)


class ClosureError(RuntimeError):
    """A conjugated matrix left the nilradical shape."""


# -- one-parameter subgroups and generators -------------------------------

def chevalley_generator(alpha: Root, gtype: GroupType) -> dict:
    """Integer matrix generating the one-parameter subgroup of alpha."""
    if alpha.formal:
        raise ValueError("formal elements generate no subgroup")
    i, j = alpha.i, alpha.j
    if alpha.kind == MINUS:
        return {(i, j): 1, (-j, -i): -1}
    if alpha.kind == PLUS:
        if gtype.letter == "C":
            return {(i, -j): 1, (j, -i): 1}
        return {(i, -j): 1, (j, -i): -1}
    if alpha.kind == DOUBLE:
        if gtype.letter != "C":
            raise ValueError("2e_i generates a subgroup only for Sp")
        return {(i, -i): 1}
    if gtype.letter != "B":
        raise ValueError("e_i generates a subgroup only for odd orthogonal")
    return {(i, 0): 1, (0, -i): -1}


def one_param(alpha: Root, gtype: GroupType, t_sign: int = 1) -> dict:
    """The unipotent matrix g_alpha(t), with t replaced by t_sign * t."""
    t = Polynomial.var(T)
    if t_sign < 0:
        t = -t
    mat = {(v, v): Polynomial.const(1) for v in mirror_indices(gtype)}
    for cell, c in chevalley_generator(alpha, gtype).items():
        mat[cell] = mat.get(cell, ZERO) + c * t
    if alpha.kind == SINGLE:
        i = alpha.i
        half = Fraction(1, 2)
        mat[(i, -i)] = mat.get((i, -i), ZERO) - half * t * t
    return mat


def matmul(a: dict, b: dict) -> dict:
    rows_of_b: dict[int, list] = {}
    for (r, c), p in b.items():
        rows_of_b.setdefault(r, []).append((c, p))
    out: dict = {}
    for (r, k), pa in a.items():
        for c, pb in rows_of_b.get(k, ()):
            prod = pa * pb
            if prod.is_zero:
                continue
            cur = out.get((r, c))
            cur = prod if cur is None else cur + prod
            if cur.is_zero:
                out.pop((r, c), None)
            else:
                out[(r, c)] = cur
    return out


# -- conjugation -----------------------------------------------------------

def _x_cells(X: FormalMatrix) -> dict:
    return {cell: X.entry(*cell) for cell in X.cells}

def conjugated_matrix(alpha: Root, shape: ParabolicShape,
                      X: FormalMatrix | None = None) -> dict:
    """g_alpha(-t) X g_alpha(t), verified to stay inside the nilradical."""
    gtype = shape.gtype
    if X is None:
        X = build_X(shape)
    g_pos = one_param(alpha, gtype)
    g_neg = one_param(alpha, gtype, t_sign=-1)
    Y = matmul(matmul(g_neg, _x_cells(X)), g_pos)
    _check_closure(Y, shape, X, alpha)
    return Y


def _check_closure(Y: dict, shape: ParabolicShape, X: FormalMatrix,
                   alpha: Root) -> None:
    gtype = shape.gtype
    allowed = set(X.cells)
    for cell, p in Y.items():
        if not p.is_zero and cell not in allowed:
            raise ClosureError(
                f"conjugation by {alpha} leaves the nilradical at cell {cell}")
    for gamma in split_roots(shape).nilradical:
        i, j = variable_of(gamma, gtype)
        mirror = (-j, -i)
        if mirror == (i, j):
            continue
        sign = 1 if gtype.letter == "C" and j < 0 else -1
        lhs = Y.get(mirror, ZERO)
        rhs = sign * Y.get((i, j), ZERO)
        if lhs != rhs:
            raise ClosureError(
                f"conjugation by {alpha} breaks the sign pairing at {mirror}")


def adjoint_image(p: Polynomial, alpha: Root, shape: ParabolicShape) -> Polynomial:
    """Image of a polynomial under conjugation by g_alpha(t), t formal."""
    Y = conjugated_matrix(alpha, shape)
    nil_vars = {variable_of(g, shape.gtype) for g in split_roots(shape).nilradical}
    mapping = {v: Y.get(v, ZERO) for v in nil_vars}
    return substitute(p, mapping)


# -- invariance ------------------------------------------------------------

@dataclass(frozen=True)
class InvarianceResult:
    ok: bool
    closure_ok: bool
    checked: int
    failures: tuple  # (invariant name, alpha) pairs


def check_invariance(system: InvariantSystem) -> InvarianceResult:
    shape = system.shape
    gtype = shape.gtype
    X = build_X(shape)
    x_cells = _x_cells(X)
    failures = []
    closure_ok = True
    checked = 0

    x_dets: dict = {}

    def x_det(rows, cols):
        key = (rows, cols)
        if key not in x_dets:
            x_dets[key] = determinant(X.submatrix(rows, cols))
        return x_dets[key]

    for alpha in positive_roots(gtype):
        gen = chevalley_generator(alpha, gtype)
        touched_rows = {r for r, _ in gen}
        touched_cols = {c for _, c in gen}
        g_pos = one_param(alpha, gtype)
        g_neg = one_param(alpha, gtype, t_sign=-1)
        Y = matmul(matmul(g_neg, x_cells), g_pos)
        try:
            _check_closure(Y, shape, X, alpha)
        except ClosureError:
            closure_ok = False
            failures.append(("<closure>", alpha))
            continue

        y_dets: dict = {}

        def untouched(rows, cols):
            return (not touched_rows.intersection(rows)
                    and not touched_cols.intersection(cols))

        def y_det(rows, cols):
            key = (rows, cols)
            got = y_dets.get(key)
            if got is None:
                if untouched(rows, cols):
                    got = x_det(rows, cols)
                else:
                    got = determinant(
                        [[Y.get((r, c), ZERO) for c in cols] for r in rows])
                y_dets[key] = got
            return got

        for inv in system.base_invs:
            checked += 1
            if untouched(inv.indices.rows, inv.indices.cols):
                continue
            if y_det(inv.indices.rows, inv.indices.cols) != inv.poly:
                failures.append((inv.name, alpha))

        for inv in system.pair_invs:
            checked += 1
            if all(untouched(rw, cl) for piece in inv.summands for rw, cl in piece):
                continue
            total = ZERO
            for (r1, c1), (r2, c2) in inv.summands:
                total = total + y_det(r1, c1) * y_det(r2, c2)
            if total != inv.poly:
                failures.append((inv.name, alpha))

    return InvarianceResult(not failures, closure_ok, checked, tuple(failures))


# -- restriction to the expanded-base subspace ------------------------------

@dataclass(frozen=True)
class PiForm:
    name: str
    distinguished: tuple[int, int]
    monomial_count: int
    is_monomial: bool
    distinguished_present: bool
    exponents_ok: bool
    support_ok: bool

    @property
    def strict_ok(self) -> bool:
        return (self.is_monomial and self.distinguished_present
                and self.exponents_ok and self.support_ok)


@dataclass(frozen=True)
class PiResult:
    forms: tuple[PiForm, ...]
    injective: bool

    @property
    def base_ok(self) -> bool:
        return all(f.strict_ok for f in self.forms if f.name.startswith("M"))

    @property
    def pair_distinguished_ok(self) -> bool:
        return all(f.distinguished_present and f.exponents_ok
                   for f in self.forms if f.name.startswith("L"))

    @property
    def strict_ok(self) -> bool:
        return self.injective and all(f.strict_ok for f in self.forms)


def _analyze_pi(poly: Polynomial, distinguished, allowed) -> tuple:
    """(count, is_monomial, distinguished_present, exponents_ok, support_ok).

    distinguished_present / exponents_ok refer to the best term: one whose
    support is {distinguished} + allowed with the distinguished variable
    appearing once and every other exponent 1 or 2.
    """
    count = len(poly.terms)
    good_term = False
    for mono in poly.terms:
        exps = dict(mono)
        if exps.get(distinguished) != 1:
            continue
        rest = {v: e for v, e in exps.items() if v != distinguished}
        if all(v in allowed and e in (1, 2) for v, e in rest.items()):
            good_term = True
            break
    if count == 1:
        mono = next(iter(poly.terms))
        exps = dict(mono)
        present = exps.get(distinguished) == 1
        rest = {v: e for v, e in exps.items() if v != distinguished}
        exponents_ok = all(e in (1, 2) for e in rest.values())
        support_ok = all(v in allowed for v in rest)
        return count, True, present, exponents_ok, support_ok
    return count, False, good_term, good_term, good_term


def pi_restriction(system: InvariantSystem) -> PiResult:
    from .invariants import s_gamma

    gtype = system.shape.gtype
    expanded = list(system.base.roots) + [q.phi for q in system.pairs]
    keep = {variable_of(g, gtype) for g in expanded}
    kill = {variable_of(g, gtype): ZERO
            for g in system.levi.nilradical if variable_of(g, gtype) not in keep}

    forms = []
    seen = []
    for inv in system.base_invs:
        dist = variable_of(inv.root, gtype)
        allowed = {variable_of(g, gtype)
                   for g in s_gamma(inv.root, system.base, gtype)}
        image = substitute(inv.poly, kill)
        forms.append(PiForm(inv.name, dist, *_analyze_pi(image, dist, allowed)))
        seen.append(dist)
    for inv in system.pair_invs:
        q = inv.pair
        dist = variable_of(q.phi, gtype)
        allowed = {variable_of(q.xi, gtype)}
        for xi in (q.xi, q.xi_prime):
            allowed |= {variable_of(g, gtype)
                        for g in s_gamma(xi, system.base, gtype)}
        image = substitute(inv.poly, kill)
        forms.append(PiForm(inv.name, dist, *_analyze_pi(image, dist, allowed)))
        seen.append(dist)
    return PiResult(tuple(forms), len(set(seen)) == len(seen))


# -- exact ranks ------------------------------------------------------------

def int_rank(rows: list[list[int]]) -> int:
    """Rank of an integer matrix by fraction-free elimination."""
    work = [list(r) for r in rows if any(r)]
    if not work:
        return 0
    ncols = len(work[0])
    rank = 0
    col = 0
    while rank < len(work) and col < ncols:
        piv = next((r for r in range(rank, len(work)) if work[r][col]), None)
        if piv is None:
            col += 1
            continue
        work[rank], work[piv] = work[piv], work[rank]
        lead = work[rank]
        for r in range(rank + 1, len(work)):
            row = work[r]
            if row[col]:
                a, b = lead[col], row[col]
                for c in range(col, ncols):
                    row[c] = row[c] * a - lead[c] * b
                g = 0
                for v in row:
                    g = gcd(g, v)
                if g > 1:
                    for c in range(ncols):
                        row[c] //= g
        rank += 1
        col += 1
    return rank


def _to_int_rows(rows) -> list[list[int]]:
    out = []
    for row in rows:
        denom = 1
        for v in row:
            if isinstance(v, Fraction):
                denom = denom * v.denominator // gcd(denom, v.denominator)
        out.append([int(v * denom) for v in row])
    return out


def independence_rank(system: InvariantSystem, seed: int = 42,
                      retries: int = 5) -> int:
    """Exact Jacobian rank at seeded random integer points."""
    gtype = system.shape.gtype
    variables = sorted((variable_of(g, gtype) for g in system.levi.nilradical))
    polys = [poly for _, poly in system.polynomials()]
    if not polys:
        return 0
    gradients = [{v: derivative(p, v) for v in p.variables()} for p in polys]

    rng = random.Random(seed)
    best = 0
    for _ in range(max(1, retries)):
        point = {v: rng.randint(-99, 99) for v in variables}
        rows = [[eval_poly(g[v], point) if v in g else 0 for v in variables]
                for g in gradients]
        best = max(best, int_rank(_to_int_rows(rows)))
        if best == len(polys):
            break
    return best


def orbit_rank_sample(shape: ParabolicShape, seed: int) -> int:
    """Exact rank of the bracket map at a seeded random nilradical point."""
    gtype = shape.gtype
    levi = split_roots(shape)
    rng = random.Random(seed)

    x: dict = {}
    natural = []
    for gamma in levi.nilradical:
        coeff = rng.randint(-99, 99)
        natural.append(variable_of(gamma, gtype))
        for cell, c in chevalley_generator(gamma, gtype).items():
            x[cell] = x.get(cell, 0) + coeff * c

    def int_matmul(a, b):
        rows_of_b: dict[int, list] = {}
        for (r, c), v in b.items():
            rows_of_b.setdefault(r, []).append((c, v))
        out: dict = {}
        for (r, k), va in a.items():
            for c, vb in rows_of_b.get(k, ()):
                out[(r, c)] = out.get((r, c), 0) + va * vb
        return out

    rows = []
    for alpha in positive_roots(gtype):
        e_a = chevalley_generator(alpha, gtype)
        bracket = int_matmul(e_a, x)
        for cell, v in int_matmul(x, e_a).items():
            bracket[cell] = bracket.get(cell, 0) - v
        rows.append([bracket.get(cell, 0) for cell in natural])
    return int_rank(rows)


# -- the full per-shape verification ----------------------------------------

@dataclass(frozen=True)
class VerificationReport:
    shape: ParabolicShape
    invariance: InvarianceResult
    independence_rank: int
    pi: PiResult
    orbit_rank_samples: tuple[int, ...]
    n_base: int
    n_phi: int
    dim_m: int

    @property
    def trdeg_lower(self) -> int:
        return self.n_base + self.n_phi

    @property
    def orbit_upper(self) -> int:
        return self.dim_m - self.trdeg_lower

    @property
    def orbit_ok(self) -> bool:
        return all(r <= self.orbit_upper for r in self.orbit_rank_samples)

    @property
    def independence_ok(self) -> bool:
        return self.independence_rank == self.trdeg_lower

    @property
    def passed(self) -> bool:
        return (self.invariance.ok and self.invariance.closure_ok
                and self.independence_ok and self.orbit_ok
                and self.pi.base_ok and self.pi.pair_distinguished_ok
                and self.pi.injective)


def verify_shape(shape: ParabolicShape, seed: int = 42, retries: int = 5,
                 orbit_samples: int = 3) -> VerificationReport:
    from .invariants import build_system

    system = build_system(shape)
    invariance = check_invariance(system)
    rank = independence_rank(system, seed=seed, retries=retries)
    pi = pi_restriction(system)
    orbits = tuple(orbit_rank_sample(shape, seed + k) for k in range(orbit_samples))
    return VerificationReport(shape, invariance, rank, pi, orbits,
                              len(system.base_invs), len(system.pair_invs),
                              system.dim_m)
