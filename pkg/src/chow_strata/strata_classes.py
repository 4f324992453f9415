"""Strata classes and their restrictions to other strata.

The class of a stratum pulled back to its own cover is the product over
nodes of ``psi + psi'``.  Restricting the extension of a class ``a`` from
``G`` to ``G'`` sums, over every ordered deformation ``d: G' -> G``, the
substituted class ``subst_d(a)`` times the persistent-edge factor, and
divides by ``|Aut(G)|``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .deformations import (
    OrderedDeformation,
    contracted_edges,
    enumerate_ordered_deformations,
    persistent_edges,
    quotient,
)
from .dual_trees import STRATA_NAMES, DualTree, named_tree
from .errors import ConsistencyError, DomainError, MultiplicityError
from .exact_poly import Polynomial, reynolds_average
from .stratum_ring import (
    InvariantPolynomial,
    SmoothStratumPresentation,
    build_presentation,
    is_invariant,
    psi_class,
)

__all__ = [
    "GlobalChowClass",
    "edge_factor",
    "gamma_class",
    "substitution",
    "restriction_term",
    "restrict_extended_class",
    "restrict_via_classes",
    "excess_factorization",
    "global_gamma",
    "vanishing_predicate",
    "stratum_of",
]


def vanishing_predicate(tree: DualTree) -> bool:
    """True iff some node joins two components with three or more nodes."""
    return any(tree.degree(a) >= 3 and tree.degree(b) >= 3 for a, b in tree.edges)


def edge_factor(presentation, edge) -> Polynomial:
    a, b = edge
    return psi_class(presentation, a, edge) + psi_class(presentation, b, edge)


def gamma_class(tree: DualTree) -> InvariantPolynomial:
    """Pullback of the stratum class to the stratum itself.

    Trees with a vertex of multiplicity four have no ring here; they are
    accepted only when the class visibly vanishes.
    """
    if len(tree) == 1:
        raise DomainError("the smooth stratum has no stratum class")
    if tree.max_degree() > 3:
        if vanishing_predicate(tree):
            return InvariantPolynomial(Polynomial.zero(), None)
        raise MultiplicityError("stratum class needs multiplicity at most 3")
    pres = build_presentation(tree)
    out = Polynomial.one()
    for e in tree.edges:
        out = out * edge_factor(pres, e)
    return InvariantPolynomial(out, pres)


def substitution(pres_source, pres_target, d: OrderedDeformation) -> dict:
    """Images of the source-tree variables as psi-classes of the target tree.

    ``pres_source`` belongs to ``d.target`` (the tree being deformed) and
    ``pres_target`` to ``d.source`` (where the result lives).  Each node
    side of a component is sent to the psi-class at the matching endpoint
    of the persistent edge lying over that node; ``r`` is then
    ``(psi_inf - psi_0) / 2``.
    """
    tree = pres_source.tree
    images = {}
    for name in pres_source.variables:
        alpha = pres_source.vertex_of[name]
        if tree.degree(alpha) == 1:
            (beta,) = tree.neighbors(alpha)
            p, q = d.lifted_edge(alpha, beta)
            images[name] = psi_class(pres_target, p, d.source.edge(p, q))
        else:
            p0, q0 = d.lifted_edge(alpha, tree.neighbor_at_0(alpha))
            pi, qi = d.lifted_edge(alpha, tree.neighbor_at_infinity(alpha))
            psi_inf = psi_class(pres_target, pi, d.source.edge(pi, qi))
            psi_0 = psi_class(pres_target, p0, d.source.edge(p0, q0))
            images[name] = (psi_inf - psi_0) / 2
    return images


def restriction_term(pres_source, pres_target, d: OrderedDeformation, a: Polynomial) -> Polynomial:
    """``subst_d(a)`` times the top Chern class of the excess bundle of ``d``."""
    if isinstance(pres_source, SmoothStratumPresentation):
        term = Polynomial.const(a.constant_term())
    else:
        term = a.substitute(substitution(pres_source, pres_target, d), strict=True)
    for e in persistent_edges(d):
        term = term * edge_factor(pres_target, e)
    return term


def _coerce_class(pres, a) -> Polynomial:
    if isinstance(a, InvariantPolynomial):
        a = a.poly
    elif isinstance(a, (int, Fraction)):
        a = Polynomial.const(a)
    if not isinstance(a, Polynomial):
        raise DomainError(f"cannot use {a!r} as a class")
    if isinstance(pres, SmoothStratumPresentation) and not a.is_constant():
        raise DomainError("only constant classes on the smooth stratum extend by psi-classes")
    if not is_invariant(pres, a):
        raise DomainError(f"class {a} is not invariant under the automorphisms of the stratum")
    return a


def restrict_extended_class(gamma: DualTree, a, gamma_prime: DualTree) -> InvariantPolynomial:
    """Restriction to ``gamma_prime`` of the extension of ``a`` from ``gamma``.

    ``a`` may be an :class:`InvariantPolynomial`, a :class:`Polynomial` in
    the variables of ``gamma``, or a rational constant.  The result is zero
    when ``gamma_prime`` is not a deformation of ``gamma``.
    """
    pres = build_presentation(gamma)
    pres_prime = build_presentation(gamma_prime)
    a = _coerce_class(pres, a)
    total = Polynomial.zero()
    for d in enumerate_ordered_deformations(gamma, gamma_prime):
        total = total + restriction_term(pres, pres_prime, d, a)
    total = total / pres.sigma
    if not is_invariant(pres_prime, total):
        raise ConsistencyError(f"restriction {total} is not invariant on the target stratum")
    return InvariantPolynomial(total, pres_prime)


def restrict_via_classes(gamma: DualTree, a, gamma_prime: DualTree) -> Polynomial:
    """Same restriction, summed over classes modulo ``Aut(gamma_prime)``.

    Each class contributes its orbit size times the average of one
    representative's term over ``Aut(gamma_prime)``.
    """
    pres = build_presentation(gamma)
    pres_prime = build_presentation(gamma_prime)
    a = _coerce_class(pres, a)
    defs = enumerate_ordered_deformations(gamma, gamma_prime)
    total = Polynomial.zero()
    for xi in quotient(defs, "gammaprime"):
        term = restriction_term(pres, pres_prime, xi.representative, a)
        total = total + reynolds_average(pres_prime.action, term) * xi.orbit_size
    return total / pres.sigma


def excess_factorization(d: OrderedDeformation) -> tuple:
    """``(all edges, contracted edges, persistent edges)`` products on ``d.source``."""
    pres = build_presentation(d.source)
    full, contracted, persistent = Polynomial.one(), Polynomial.one(), Polynomial.one()
    for e in d.source.edges:
        full = full * edge_factor(pres, e)
    for e in contracted_edges(d):
        contracted = contracted * edge_factor(pres, e)
    for e in persistent_edges(d):
        persistent = persistent * edge_factor(pres, e)
    return full, contracted, persistent


def stratum_of(tree: DualTree) -> str:
    """Name of the stratum (at most three nodes) isomorphic to ``tree``."""
    for name in STRATA_NAMES:
        if named_tree(name).is_isomorphic(tree):
            return name
    raise DomainError("tree is not one of the five strata with at most three nodes")


@dataclass(frozen=True)
class GlobalChowClass:
    """A class on the stack of curves with at most three nodes.

    Stored through its restrictions to the five strata, which determine it.
    """

    restrictions: dict

    def __getitem__(self, stratum: str) -> InvariantPolynomial:
        return self.restrictions[stratum]

    def __eq__(self, other) -> bool:
        if not isinstance(other, GlobalChowClass):
            return NotImplemented
        return {k: v.poly for k, v in self.restrictions.items()} == {
            k: v.poly for k, v in other.restrictions.items()
        }

    def to_json(self) -> dict:
        return {k: v.poly.to_json() for k, v in self.restrictions.items()}


def global_gamma(tree: DualTree) -> GlobalChowClass:
    stratum_of(tree)
    return GlobalChowClass(
        {name: restrict_extended_class(tree, 1, named_tree(name)) for name in STRATA_NAMES}
    )
