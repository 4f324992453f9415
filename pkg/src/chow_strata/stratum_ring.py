"""Rational Chow rings of the strata, one polynomial ring per dual tree.

For a singular tree the ring is ``Q[t_leaves, r_twonode]`` made invariant
under the signed action of the tree's automorphisms.  The relation
``psi_0 + psi_inf = 0`` on two-node components is built in by setting
``psi_inf = r`` and ``psi_0 = -r``, so every ring stays a free polynomial
ring.  The smooth stratum is ``Q[c2sl2]`` with ``c2sl2`` of degree two.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .dual_trees import (
    DualTree,
    automorphism_group,
    degree_partition,
    induced_signed_permutation,
    variable_names,
)
from .errors import DomainError, MultiplicityError
from .exact_poly import Polynomial, SignedPermutation, apply_action, reynolds_average

__all__ = [
    "StratumPresentation",
    "SmoothStratumPresentation",
    "InvariantPolynomial",
    "build_presentation",
    "psi_class",
    "is_invariant",
    "C2SL2",
]

C2SL2 = "c2sl2"


@dataclass(frozen=True, eq=False)
class StratumPresentation:
    tree: DualTree
    variables: tuple
    vertex_of: dict
    action: tuple
    automorphisms: tuple

    @property
    def sigma(self) -> int:
        return len(self.automorphisms)

    @property
    def t_variables(self) -> tuple:
        return tuple(v for v in self.variables if v.startswith("t"))

    @property
    def r_variables(self) -> tuple:
        return tuple(v for v in self.variables if v.startswith("r"))

    def variable_of(self, vertex: str) -> str:
        for name, v in self.vertex_of.items():
            if v == vertex:
                return name
        raise DomainError(f"vertex {vertex} carries no variable")

    def gens(self) -> list:
        return [Polynomial.var(v) for v in self.variables]

    def average(self, p: Polynomial) -> Polynomial:
        return reynolds_average(self.action, p)


@dataclass(frozen=True, eq=False)
class SmoothStratumPresentation:
    """``B PGL_2``: the ring ``Q[c2sl2]``; odd Chern classes of sl_2 vanish."""

    tree: DualTree = field(default_factory=lambda: DualTree(["0"], []))
    variables: tuple = (C2SL2,)
    sigma: int = 1

    @property
    def action(self) -> tuple:
        return (SignedPermutation.identity(self.variables),)

    @property
    def c1(self) -> Polynomial:
        return Polynomial.zero()

    @property
    def c2(self) -> Polynomial:
        return Polynomial.var(C2SL2)

    @property
    def c3(self) -> Polynomial:
        return Polynomial.zero()

    def gens(self) -> list:
        return [Polynomial.var(C2SL2)]

    def average(self, p: Polynomial) -> Polynomial:
        return p


@dataclass(frozen=True)
class InvariantPolynomial:
    """A polynomial together with the stratum ring it belongs to."""

    poly: Polynomial
    presentation: object

    def __post_init__(self):
        if self.presentation is None:
            # Ring-less witness of a vanishing class.
            if not self.poly.is_zero():
                raise DomainError("only the zero class may lack a stratum ring")
            return
        if not is_invariant(self.presentation, self.poly):
            raise DomainError(f"{self.poly} is not invariant on this stratum")

    def __str__(self) -> str:
        return str(self.poly)


def build_presentation(tree: DualTree):
    """Variables, signed automorphism action and ``sigma`` for ``tree``."""
    if len(tree) == 1:
        return SmoothStratumPresentation(tree=tree)
    if tree.max_degree() > 3:
        raise MultiplicityError("Chow rings are only presented for multiplicity at most 3")
    leaves, middles, _ = degree_partition(tree)
    names = variable_names(tree)
    variables = tuple(names[v] for v in leaves) + tuple(names[v] for v in middles)
    autos = tuple(automorphism_group(tree))
    action = tuple(induced_signed_permutation(tree, g) for g in autos)
    return StratumPresentation(
        tree=tree,
        variables=variables,
        vertex_of={name: v for v, name in names.items()},
        action=action,
        automorphisms=autos,
    )


def psi_class(presentation: StratumPresentation, vertex: str, edge) -> Polynomial:
    """First Chern class of the tangent line at the node ``edge`` on ``vertex``.

    Leaves give ``t``, trivalent components give 0, two-node components
    give ``+r`` toward the node at infinity and ``-r`` toward the node at 0.
    """
    tree = presentation.tree
    a, b = edge
    if vertex not in (a, b) or not tree.has_edge(a, b):
        raise DomainError(f"edge {edge} is not incident to vertex {vertex}")
    other = b if vertex == a else a
    d = tree.degree(vertex)
    if d == 3:
        return Polynomial.zero()
    if d > 3:
        raise MultiplicityError(f"vertex {vertex} has {d} nodes")
    var = Polynomial.var(presentation.variable_of(vertex))
    if d == 1:
        return var
    return var if tree.neighbor_at_infinity(vertex) == other else -var


def is_invariant(presentation, p: Polynomial) -> bool:
    foreign = p.variables() - set(presentation.variables)
    if foreign:
        raise DomainError(f"variables {sorted(foreign)} do not belong to this stratum")
    return all(apply_action(g, p) == p for g in presentation.action)
