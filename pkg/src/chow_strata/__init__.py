"""Rational Chow rings of the strata of genus-zero nodal curves with at most three nodes."""

from .deformations import OrderedDeformation, enumerate_ordered_deformations, persistent_edges, quotient
from .dual_trees import DualTree, automorphism_group, degree_partition, enumerate_trees, named_tree, parse_tree
from .equivariant_p1 import EquivariantP1Class, builtin_classes, pushforward
from .errors import (
    ChowStrataError,
    ConsistencyError,
    DegreeBoundError,
    DomainError,
    LocalizationError,
    MultiplicityError,
)
from .exact_poly import Polynomial, SignedPermutation, apply_action, reynolds_average, transfer_sum
from .mumford import chern_roots, kappa, kappa_zero, verify_defmumpol
from .strata_classes import (
    GlobalChowClass,
    gamma_class,
    global_gamma,
    restrict_extended_class,
    vanishing_predicate,
)
from .stratum_ring import build_presentation, is_invariant, psi_class

__version__ = "0.1.0"
