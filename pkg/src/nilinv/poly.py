"""Exact sparse multivariate polynomials over the rationals.

Variables are the matrix coordinates x[i,j], keyed by the signed index
pair (i, j), plus the deformation parameter t used during conjugation
checks (keyed by the reserved pair (0, 0)).  Coefficients are Python
ints or Fractions; zero coefficients are never stored, so structural
equality is mathematical equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .roots import mirror_key

Var = tuple[int, int]
T: Var = (0, 0)

Scalar = int | Fraction
Monomial = tuple[tuple[Var, int], ...]


def _var_key(v: Var):
    return (mirror_key(v[0]), mirror_key(v[1]))


def _norm_scalar(c: Scalar) -> Scalar:
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class Polynomial:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None):
        self.terms: dict[Monomial, Scalar] = dict(terms) if terms else {}

    # -- constructors ----------------------------------------------------
    @staticmethod
    def zero() -> "Polynomial":
        return Polynomial()

    @staticmethod
    def const(c: Scalar) -> "Polynomial":
        c = _norm_scalar(c)
        return Polynomial({(): c} if c != 0 else None)

    @staticmethod
    def var(v: Var, exp: int = 1) -> "Polynomial":
        if exp < 0:
            raise ValueError("exponents must be nonnegative")
        if exp == 0:
            return Polynomial.const(1)
        return Polynomial({((v, exp),): 1})

    # -- basic queries ----------------------------------------------------
    @property
    def is_zero(self) -> bool:
        return not self.terms

    def variables(self) -> set[Var]:
        return {v for mono in self.terms for v, _ in mono}

    def degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(e for _, e in mono) for mono in self.terms)

    def constant_value(self) -> Scalar:
        """The value of a constant polynomial."""
        if not self.terms:
            return 0
        if set(self.terms) != {()}:
            raise ValueError("polynomial is not constant")
        return self.terms[()]

    # -- ring operations --------------------------------------------------
    def __add__(self, other) -> "Polynomial":
        other = _coerce(other)
        out = dict(self.terms)
        for mono, c in other.terms.items():
            s = out.get(mono, 0) + c
            if s == 0:
                out.pop(mono, None)
            else:
                out[mono] = _norm_scalar(s)
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "Polynomial":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return _coerce(other) + (-self)

    def __mul__(self, other) -> "Polynomial":
        other = _coerce(other)
        out: dict[Monomial, Scalar] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                c = c1 * c2
                if c == 0:
                    continue
                mono = _merge(m1, m2)
                s = out.get(mono, 0) + c
                if s == 0:
                    out.pop(mono, None)
                else:
                    out[mono] = _norm_scalar(s)
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, exp: int) -> "Polynomial":
        if exp < 0:
            raise ValueError("exponents must be nonnegative")
        result = Polynomial.const(1)
        square = self
        while exp:
            if exp & 1:
                result = result * square
            exp >>= 1
            if exp:
                square = square * square
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.terms == other.terms

    def __repr__(self):
        return f"Polynomial({poly_text(self)})"

    __hash__ = None


def _coerce(x) -> Polynomial:
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, (int, Fraction)):
        return Polynomial.const(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to Polynomial")


def _merge(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    exps = dict(m1)
    for v, e in m2:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items(), key=lambda it: _var_key(it[0])))


ZERO = Polynomial()


def substitute(p: Polynomial, mapping: Mapping[Var, Polynomial | Scalar]) -> Polynomial:
    """Replace variables by polynomials; unmapped variables are kept."""
    cache = {v: _coerce(img) for v, img in mapping.items()}
    out = ZERO
    for mono, c in p.terms.items():
        term = Polynomial.const(c)
        for v, e in mono:
            factor = cache.get(v)
            term = term * (Polynomial.var(v, e) if factor is None else factor ** e)
            if term.is_zero:
                break
        out = out + term
    return out


def derivative(p: Polynomial, v: Var) -> Polynomial:
    out: dict[Monomial, Scalar] = {}
    for mono, c in p.terms.items():
        exps = dict(mono)
        e = exps.get(v, 0)
        if e == 0:
            continue
        if e == 1:
            del exps[v]
        else:
            exps[v] = e - 1
        reduced = tuple(sorted(exps.items(), key=lambda it: _var_key(it[0])))
        s = out.get(reduced, 0) + c * e
        if s == 0:
            out.pop(reduced, None)
        else:
            out[reduced] = _norm_scalar(s)
    return Polynomial(out)


def eval_poly(p: Polynomial, point: Mapping[Var, Scalar]) -> Scalar:
    total: Scalar = 0
    for mono, c in p.terms.items():
        value = c
        for v, e in mono:
            value *= point[v] ** e
        total += value
    return _norm_scalar(Fraction(total)) if isinstance(total, Fraction) else total


@dataclass(frozen=True)
class PolyMatrix:
    """A matrix of polynomials with mirror-ordered row/column labels."""

    rows: tuple[int, ...]
    cols: tuple[int, ...]
    entries: dict

    def __post_init__(self):
        assert list(self.rows) == sorted(self.rows, key=mirror_key)
        assert list(self.cols) == sorted(self.cols, key=mirror_key)

    def entry(self, r: int, c: int) -> Polynomial:
        return self.entries.get((r, c), ZERO)

    def grid(self) -> list[list[Polynomial]]:
        return [[self.entry(r, c) for c in self.cols] for r in self.rows]


def determinant(matrix) -> Polynomial:
    """Exact determinant via Laplace expansion memoized on column subsets."""
    grid = matrix.grid() if isinstance(matrix, PolyMatrix) else matrix
    size = len(grid)
    if any(len(row) != size for row in grid):
        raise ValueError("determinant requires a square matrix")
    if size == 0:
        return Polynomial.const(1)

    memo: dict[tuple[int, ...], Polynomial] = {}

    def expand(row: int, cols: tuple[int, ...]) -> Polynomial:
        if not cols:
            return Polynomial.const(1)
        cached = memo.get(cols)
        if cached is not None:
            return cached
        acc = ZERO
        sign = 1
        for pos, c in enumerate(cols):
            entry = grid[row][c]
            if not entry.is_zero:
                rest = cols[:pos] + cols[pos + 1:]
                sub = expand(row + 1, rest)
                acc = acc + (entry * sub if sign > 0 else -(entry * sub))
            sign = -sign
        memo[cols] = acc
        return acc

    return expand(0, tuple(range(size)))


# -- canonical rendering -------------------------------------------------

def _term_sort_key(item):
    mono, _ = item
    return (sum(e for _, e in mono),
            tuple((_var_key(v), e) for v, e in mono))


def var_text(v: Var) -> str:
    if v == T:
        return "t"
    return f"x[{v[0]},{v[1]}]"


def poly_text(p: Polynomial) -> str:
    """Deterministic text form, monomials by total degree then variable ids."""
    if p.is_zero:
        return "0"
    pieces = []
    for mono, c in sorted(p.terms.items(), key=_term_sort_key):
        factors = "*".join(
            var_text(v) + (f"^{e}" if e > 1 else "") for v, e in mono)
        mag = abs(c)
        body = factors if mag == 1 and factors else (
            f"{mag}*{factors}" if factors else f"{mag}")
        if not pieces:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(pieces)


def poly_to_json(p: Polynomial) -> list[dict]:
    """JSON term list; only matrix variables may appear."""
    out = []
    for mono, c in sorted(p.terms.items(), key=_term_sort_key):
        if any(v == T for v, _ in mono):
            raise ValueError("the parameter t has no JSON form")
        out.append({"coeff": str(Fraction(c)),
                    "monomial": [[v[0], v[1], e] for v, e in mono]})
    return out


def poly_from_json(terms: Iterable[Mapping]) -> Polynomial:
    out = ZERO
    for item in terms:
        mono = Polynomial.const(Fraction(item["coeff"]))
        for i, j, e in item["monomial"]:
            mono = mono * Polynomial.var((i, j), e)
        out = out + mono
    return out
