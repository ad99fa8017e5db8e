"""Positive roots of the classical types B_n, C_n, D_n and the mirror order.

Matrix rows and columns are indexed by the signed values 1, 2, ..., n,
(0 for odd orthogonal groups), -n, ..., -2, -1, read in the *mirror order*

    1 < 2 < ... < n (< 0) < -n < ... < -2 < -1.

Every positive root gamma occupies a matrix position E(gamma) strictly
above the main diagonal in this order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

# Root kinds, in canonical sort order.
MINUS = "minus"    # e_i - e_j, i < j
PLUS = "plus"      # e_i + e_j, i < j
DOUBLE = "double"  # 2e_i  (a root only in type C; formal element in B and D)
SINGLE = "single"  # e_i   (type B only)

_KIND_ORDER = {MINUS: 0, PLUS: 1, DOUBLE: 2, SINGLE: 3}

SUCC = "succ"
PREC = "prec"
EQUAL = "equal"
INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class GroupType:
    """One of the classical groups: B = O_{2n+1}, C = Sp_{2n}, D = O_{2n}."""

    letter: str
    n: int

    def __post_init__(self):
        if self.letter not in ("B", "C", "D"):
            raise ValueError(f"unknown group type {self.letter!r}")
        if self.n < 1:
            raise ValueError("rank must be a positive integer")

    @property
    def m(self) -> int:
        """Size of the defining matrix representation."""
        return 2 * self.n + 1 if self.letter == "B" else 2 * self.n

    @property
    def orthogonal(self) -> bool:
        return self.letter in ("B", "D")


@dataclass(frozen=True)
class Root:
    """A positive root, or a formal doubled element 2e_i for types B/D."""

    kind: str
    i: int
    j: int | None = None
    formal: bool = False

    def __post_init__(self):
        if self.kind not in _KIND_ORDER:
            raise ValueError(f"unknown root kind {self.kind!r}")
        if self.kind in (MINUS, PLUS):
            if self.j is None or not 0 < self.i < self.j:
                raise ValueError(f"{self.kind} root needs 0 < i < j")
        else:
            if self.j is not None or self.i < 1:
                raise ValueError(f"{self.kind} root takes a single index i >= 1")
        if self.formal and self.kind != DOUBLE:
            raise ValueError("only doubled elements can be formal")

    @property
    def sort_key(self) -> tuple:
        return (_KIND_ORDER[self.kind], self.i, self.j if self.j is not None else 0)

    def lattice(self, n: int) -> tuple[int, ...]:
        """Coefficient vector on e_1, ..., e_n."""
        v = [0] * n
        if self.kind == MINUS:
            v[self.i - 1] = 1
            v[self.j - 1] = -1
        elif self.kind == PLUS:
            v[self.i - 1] = 1
            v[self.j - 1] = 1
        elif self.kind == DOUBLE:
            v[self.i - 1] = 2
        else:
            v[self.i - 1] = 1
        return tuple(v)

    def __str__(self):
        if self.kind == MINUS:
            return f"e{self.i}-e{self.j}"
        if self.kind == PLUS:
            return f"e{self.i}+e{self.j}"
        if self.kind == DOUBLE:
            return f"2e{self.i}"
        return f"e{self.i}"


def minus(i: int, j: int) -> Root:
    return Root(MINUS, i, j)


def plus(i: int, j: int) -> Root:
    return Root(PLUS, i, j)


def double(i: int, formal: bool = False) -> Root:
    return Root(DOUBLE, i, formal=formal)


def single(i: int) -> Root:
    return Root(SINGLE, i)


def mirror_key(v: int) -> tuple[int, int]:
    """Sort key realizing the mirror order; independent of the rank."""
    if v > 0:
        return (0, v)
    if v == 0:
        return (1, 0)
    return (2, v)


def precedes(a: int, b: int) -> bool:
    """Strict mirror order a < b on signed indices."""
    return mirror_key(a) < mirror_key(b)


def mirror_rank(v: int, gtype: GroupType) -> int:
    """1-based position of a signed index in the mirror order."""
    n = gtype.n
    if v > 0:
        if v > n:
            raise ValueError(f"index {v} out of range for rank {n}")
        return v
    if v == 0:
        if gtype.letter != "B":
            raise ValueError("index 0 exists only for odd orthogonal groups")
        return n + 1
    if v < -n:
        raise ValueError(f"index {v} out of range for rank {n}")
    return gtype.m + 1 + v


def mirror_indices(gtype: GroupType) -> list[int]:
    """All row/column indices in mirror order."""
    n = gtype.n
    mid = [0] if gtype.letter == "B" else []
    return list(range(1, n + 1)) + mid + list(range(-n, 0))


@lru_cache(maxsize=None)
def positive_roots(gtype: GroupType) -> tuple[Root, ...]:
    """The positive roots of the type, in deterministic order."""
    n = gtype.n
    out = [minus(i, j) for i in range(1, n) for j in range(i + 1, n + 1)]
    out += [plus(i, j) for i in range(1, n) for j in range(i + 1, n + 1)]
    if gtype.letter == "C":
        out += [double(i) for i in range(1, n + 1)]
    if gtype.letter == "B":
        out += [single(i) for i in range(1, n + 1)]
    return tuple(sorted(out, key=lambda r: r.sort_key))


def e_position(root: Root, gtype: GroupType) -> tuple[int, int]:
    """Matrix position E(gamma) of a positive root (or formal 2e_i)."""
    if root.kind == MINUS:
        return (-root.j, -root.i)
    if root.kind == PLUS:
        return (root.j, -root.i)
    if root.kind == DOUBLE:
        return (root.i, -root.i)
    if gtype.letter != "B":
        raise ValueError("e_i exists only for odd orthogonal groups")
    return (0, -root.i)


def root_at(pos: tuple[int, int], gtype: GroupType,
            allow_formal: bool = False) -> Root | None:
    """Inverse of e_position; None when no (formal) root sits at pos."""
    row, col = pos
    n = gtype.n
    if not (-n <= col < 0):
        return None
    i = -col
    if row == 0:
        return single(i) if gtype.letter == "B" else None
    if row < 0:
        j = -row
        return minus(i, j) if i < j <= n else None
    if row == i:
        if gtype.letter == "C":
            return double(i)
        return double(i, formal=True) if allow_formal else None
    j = row
    return plus(i, j) if i < j <= n else None


def add_lattice(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x + y for x, y in zip(a, b))


def sub_lattice(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x - y for x, y in zip(a, b))


def root_from_lattice(vec: tuple[int, ...], gtype: GroupType,
                      allow_formal: bool = False) -> Root | None:
    """Recognize a lattice vector as a positive root (or formal 2e_i)."""
    support = [(idx + 1, c) for idx, c in enumerate(vec) if c != 0]
    if len(support) == 1:
        (i, c), = support
        if c == 2:
            if gtype.letter == "C" or allow_formal:
                return double(i, formal=gtype.letter != "C")
            return None
        if c == 1 and gtype.letter == "B":
            return single(i)
        return None
    if len(support) == 2:
        (i, ci), (j, cj) = support
        if ci == 1 and cj == 1:
            return plus(i, j)
        if ci == 1 and cj == -1:
            return minus(i, j)
    return None


def compare(x: Root, y: Root, gtype: GroupType) -> str:
    """Comparability of genuine positive roots: x > y iff x - y is one."""
    if x.formal or y.formal:
        raise ValueError("comparability is defined for genuine roots")
    if x == y:
        return EQUAL
    n = gtype.n
    diff = sub_lattice(x.lattice(n), y.lattice(n))
    if root_from_lattice(diff, gtype) is not None:
        return SUCC
    if root_from_lattice(tuple(-c for c in diff), gtype) is not None:
        return PREC
    return INCOMPARABLE


def dominates(x: Root, y: Root, gtype: GroupType) -> bool:
    """Dominance used by the base construction: x - y is a positive root
    or a doubled unit 2e_i (taken as a formal comparability for B and D,
    where the orthogonal root system omits it)."""
    if x == y:
        return False
    n = gtype.n
    diff = sub_lattice(x.lattice(n), y.lattice(n))
    return root_from_lattice(diff, gtype, allow_formal=True) is not None
