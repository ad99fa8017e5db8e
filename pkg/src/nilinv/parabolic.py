"""Block data of a parabolic subalgebra: nilradical and Levi root sets.

A parabolic subalgebra is given by a palindromic list of diagonal block
sizes summing to the matrix size m.  A positive root belongs to the
nilradical when its matrix position lies strictly above the block
diagonal, and to the positive Levi system when both coordinates fall in
the same diagonal block.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate

from .roots import (
    DOUBLE,
    GroupType,
    PLUS,
    Root,
    double,
    e_position,
    mirror_rank,
    plus,
    positive_roots,
    precedes,
)


class ShapeError(ValueError):
    """Invalid block data for the group type."""


@dataclass(frozen=True)
class ParabolicShape:
    gtype: GroupType
    blocks: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(self.blocks))
        if not self.blocks or any(b < 1 for b in self.blocks):
            raise ShapeError("block sizes must be positive integers")
        if sum(self.blocks) != self.gtype.m:
            raise ShapeError(
                f"block sizes sum to {sum(self.blocks)}, expected m = {self.gtype.m}")
        if self.blocks != self.blocks[::-1]:
            raise ShapeError("block sizes must form a palindrome")

    @property
    def s(self) -> int:
        return len(self.blocks)

    @property
    def p(self) -> int:
        return (self.s + 1) // 2

    @property
    def left_width(self) -> int:
        """Number of rows strictly left of the central block.

        For an even block count the center is the empty gap between the
        two middle blocks, so the width is m/2 and nothing can lie
        strictly inside the central block.
        """
        if self.s % 2 == 0:
            return self.gtype.m // 2
        return sum(self.blocks[: (self.s - 1) // 2])

    @property
    def boundaries(self) -> tuple[int, ...]:
        return tuple(accumulate(self.blocks))


def block_of(idx: int, shape: ParabolicShape) -> int:
    """1-based ordinal of the diagonal block containing a mirror index."""
    rank = mirror_rank(idx, shape.gtype)
    for ordinal, bound in enumerate(shape.boundaries, start=1):
        if rank <= bound:
            return ordinal
    raise AssertionError("rank beyond the last block")


def in_nilradical(root: Root, shape: ParabolicShape) -> bool:
    row, col = e_position(root, shape.gtype)
    return block_of(row, shape) < block_of(col, shape)


@dataclass(frozen=True)
class LeviData:
    """Nilradical roots, positive Levi roots, the cutoff k and Gamma_r."""

    nilradical: tuple[Root, ...]
    levi: tuple[Root, ...]
    k: int | None
    gamma_r: tuple[Root, ...]

    @property
    def dim_m(self) -> int:
        return len(self.nilradical)


@lru_cache(maxsize=None)
def split_roots(shape: ParabolicShape) -> LeviData:
    """Partition the positive roots into nilradical and Levi parts.

    k is the largest index with e_k + e_{k+1} in the nilradical.  Gamma_r
    is the positive Levi system with the doubled elements 2e_i, k < i <= n,
    adjoined formally for the orthogonal types and removed for the
    symplectic type.
    """
    gtype = shape.gtype
    nil, levi = [], []
    for root in positive_roots(gtype):
        row, col = e_position(root, gtype)
        rb, cb = block_of(row, shape), block_of(col, shape)
        if rb < cb:
            nil.append(root)
        else:
            assert rb == cb, "positive root below the block diagonal"
            levi.append(root)

    nil_set = set(nil)
    k = None
    for i in range(gtype.n - 1, 0, -1):
        if plus(i, i + 1) in nil_set:
            k = i
            break

    if k is None:
        gamma = list(levi)
    elif gtype.orthogonal:
        gamma = list(levi) + [double(i, formal=True) for i in range(k + 1, gtype.n + 1)]
    else:
        cut = {double(i) for i in range(k + 1, gtype.n + 1)}
        gamma = [r for r in levi if r not in cut]

    key = lambda r: r.sort_key
    return LeviData(tuple(sorted(nil, key=key)), tuple(sorted(levi, key=key)),
                    k, tuple(sorted(gamma, key=key)))


def is_right_of_central(root: Root, shape: ParabolicShape) -> bool:
    """Whether E(root) = (a, -b) has its row strictly inside the central
    block span, i.e. R < a < -R in the mirror order."""
    row, col = e_position(root, shape.gtype)
    if col >= 0:
        raise ValueError("position column must lie in the negative half")
    if shape.s == 1:
        return False
    r = shape.left_width
    return precedes(r, row) and precedes(row, -r)


def palindromic_block_lists(m: int) -> list[tuple[int, ...]]:
    """All palindromic compositions of m, in lexicographic order."""

    def compositions(total):
        if total == 0:
            yield ()
            return
        for first in range(1, total + 1):
            for rest in compositions(total - first):
                yield (first,) + rest

    out = set()
    for half in range(0, m // 2 + 1):
        for left in compositions(half):
            center = m - 2 * half
            if center > 0:
                out.add(left + (center,) + left[::-1])
            elif center == 0 and left:
                out.add(left + left[::-1])
    return sorted(out)


def all_shapes(max_n: int, letters: str = "BCD") -> list[ParabolicShape]:
    """Every parabolic shape of rank <= max_n for the requested types."""
    shapes = []
    for n in range(1, max_n + 1):
        for letter in letters:
            gtype = GroupType(letter, n)
            for blocks in palindromic_block_lists(gtype.m):
                shapes.append(ParabolicShape(gtype, blocks))
    return shapes
