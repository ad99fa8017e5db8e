"""Invariants of the unipotent adjoint action on parabolic nilradicals
of the classical types B, C, D."""

from .roots import (
    GroupType,
    Root,
    compare,
    dominates,
    double,
    e_position,
    minus,
    plus,
    positive_roots,
    root_at,
    single,
)
from .parabolic import (
    LeviData,
    ParabolicShape,
    ShapeError,
    all_shapes,
    block_of,
    is_right_of_central,
    palindromic_block_lists,
    split_roots,
)
from .base import BaseSet, compute_base, minimal_elements
from .pairs import AdmissiblePair, admissible_pairs, is_chain, phi_set
from .poly import Polynomial, PolyMatrix, determinant, derivative, eval_poly, substitute
from .invariants import (
    FormalMatrix,
    InvariantSystem,
    build_L,
    build_system,
    build_X,
    minor_M,
    minor_Mbar,
    s_gamma,
)
from .verify import (
    VerificationReport,
    adjoint_image,
    check_invariance,
    independence_rank,
    one_param,
    orbit_rank_sample,
    pi_restriction,
    verify_shape,
)

__version__ = "0.1.0"
