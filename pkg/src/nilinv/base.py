"""The base of the nilradical root set: an iterated minimal-element antichain.

Peeling proceeds in generations: collect the minimal elements, then drop
them together with everything dominating one of them, and repeat.  The
union of the generations is the base.  Dominance allows, besides genuine
positive-root differences, the doubled units 2e_i (formal for the
orthogonal types); without them the peeling does not reproduce the
expected antichains in types B and D.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .roots import GroupType, Root, dominates


class BaseConstructionError(RuntimeError):
    """The peeling produced a set violating the base conditions."""


@dataclass(frozen=True)
class BaseSet:
    roots: tuple[Root, ...]
    generations: tuple[tuple[Root, ...], ...]

    def __contains__(self, root: Root) -> bool:
        return root in set(self.roots)

    def __len__(self) -> int:
        return len(self.roots)


def minimal_elements(roots: Iterable[Root], gtype: GroupType) -> tuple[Root, ...]:
    """Elements dominating nothing else in the set."""
    pool = sorted(set(roots), key=lambda r: r.sort_key)
    return tuple(g for g in pool
                 if not any(dominates(g, x, gtype) for x in pool if x is not g))


def compute_base(m_roots: Iterable[Root], gtype: GroupType) -> BaseSet:
    """Compute the base of a nilradical root set by iterated peeling."""
    remaining = sorted(set(m_roots), key=lambda r: r.sort_key)
    everything = list(remaining)
    generations = []
    while remaining:
        gen = minimal_elements(remaining, gtype)
        if not gen:
            raise BaseConstructionError("no minimal elements in a nonempty set")
        generations.append(gen)
        gen_set = set(gen)
        remaining = [g for g in remaining
                     if g not in gen_set
                     and not any(dominates(g, x, gtype) for x in gen)]
    base = tuple(sorted((r for gen in generations for r in gen),
                        key=lambda r: r.sort_key))

    base_set = set(base)
    for x in base:
        for y in base:
            if x != y and dominates(x, y, gtype):
                raise BaseConstructionError(f"base is not an antichain: {x} > {y}")
    for g in everything:
        if g not in base_set and not any(dominates(g, x, gtype) for x in base):
            raise BaseConstructionError(f"{g} is not covered by the base")
    return BaseSet(base, tuple(generations))
