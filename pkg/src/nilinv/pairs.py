"""Admissible pairs of base roots and the expanded base.

An ordered pair (xi, xi') of base roots with positions (a, -b), (a', -b')
and a <= a' in the mirror order is admissible when either

  * at least one of the two does not lie right of the central block and
    some positive Levi root alpha makes {xi, alpha, xi'} a chain (the
    positions link head to tail), or
  * both lie right of the central block and the position (-a, a') holds
    an element of Gamma_r (possibly a formal doubled element).

Each admissible pair determines alpha uniquely and contributes the
nilradical root phi = alpha + xi' to the expanded base.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .base import BaseSet
from .parabolic import LeviData, ParabolicShape, in_nilradical, is_right_of_central
from .roots import (
    GroupType,
    Root,
    add_lattice,
    e_position,
    mirror_key,
    root_at,
    root_from_lattice,
)

CASE_CHAIN = "chain"
CASE_RIGHT = "right-of-central"


class PairConstructionError(RuntimeError):
    """An admissible pair violates the expanded-base requirements."""


@dataclass(frozen=True)
class AdmissiblePair:
    xi: Root
    xi_prime: Root
    alpha: Root
    phi: Root
    case: str


def is_chain(roots: Sequence[Root], gtype: GroupType) -> bool:
    """Whether consecutive positions link as (a1,a2), (a2,a3), (a3,a4), ..."""
    if not roots:
        raise ValueError("a chain is a nonempty sequence")
    positions = [e_position(r, gtype) for r in roots]
    return all(positions[t][1] == positions[t + 1][0]
               for t in range(len(positions) - 1))


def admissible_pairs(base: BaseSet, levi: LeviData,
                     shape: ParabolicShape) -> tuple[AdmissiblePair, ...]:
    gtype = shape.gtype
    n = gtype.n
    levi_set = set(levi.levi)
    gamma_set = set(levi.gamma_r)
    nil_set = set(levi.nilradical)
    right = {xi: is_right_of_central(xi, shape) for xi in base.roots}

    out = []
    for xi in base.roots:
        a, neg_b = e_position(xi, gtype)
        for xi_p in base.roots:
            a_p, _ = e_position(xi_p, gtype)
            if mirror_key(a) > mirror_key(a_p):
                continue
            if right[xi] and right[xi_p]:
                alpha_pos, case, pool = (-a, a_p), CASE_RIGHT, gamma_set
            else:
                alpha_pos, case, pool = (neg_b, a_p), CASE_CHAIN, levi_set
            if mirror_key(alpha_pos[0]) >= mirror_key(alpha_pos[1]):
                continue
            alpha = root_at(alpha_pos, gtype, allow_formal=True)
            if alpha is None or alpha not in pool:
                continue
            phi = root_from_lattice(
                add_lattice(alpha.lattice(n), xi_p.lattice(n)), gtype)
            if phi is None:
                raise PairConstructionError(
                    f"alpha + xi' is not a positive root for ({xi}, {xi_p})")
            if phi not in nil_set:
                raise PairConstructionError(
                    f"phi = {phi} falls outside the nilradical")
            out.append(AdmissiblePair(xi, xi_p, alpha, phi, case))

    out.sort(key=lambda q: (q.xi.sort_key, q.xi_prime.sort_key))
    phis = [q.phi for q in out]
    if len(set(phis)) != len(phis):
        raise PairConstructionError("distinct admissible pairs share a phi root")
    if set(phis) & set(base.roots):
        raise PairConstructionError("expanded base roots collide with the base")
    return tuple(out)


def phi_set(pairs: Sequence[AdmissiblePair]) -> tuple[Root, ...]:
    return tuple(sorted((q.phi for q in pairs), key=lambda r: r.sort_key))
