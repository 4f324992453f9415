"""Mumford classes on the strata with at most three nodes.

On a singular stratum ``kappa_m = -(t_1^m + ... + t_d^m)`` summed over the
leaf components.  The Chern roots of the rank-three bundle pushed forward
from the dual dualizing sheaf are ``{0, t1, t2}`` on chains and
``{t1, t2, t3}`` on the trivalent star; on the smooth stratum they are the
weights ``{2u, 0, -2u}`` of the adjoint representation, with ``u`` a
formal square root, ``u^2 = -c2sl2 / 4``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .dual_trees import DualTree
from .equivariant_p1 import builtin_classes, pushforward
from .errors import ConsistencyError, DomainError
from .exact_poly import (
    Polynomial,
    newton_power_sum,
    power_sum,
    symmetric_functions,
    transfer_sum,
)
from .strata_classes import stratum_of
from .stratum_ring import C2SL2, InvariantPolynomial, SmoothStratumPresentation, build_presentation

__all__ = [
    "ChernData",
    "chern_roots",
    "kappa",
    "kappa_zero",
    "naive_kappa_zero",
    "kappa_via_localization",
    "defmumpol_report",
    "verify_defmumpol",
    "newton_kappa",
    "WEIGHT_VAR",
]

WEIGHT_VAR = "u"
KAPPA_ZERO = -2


def _eliminate_weight(p: Polynomial) -> Polynomial:
    """Rewrite ``u^(2k)`` as ``(-c2sl2/4)^k``; odd powers of ``u`` are a bug."""
    out = Polynomial.zero()
    c2 = Polynomial.var(C2SL2) * Fraction(-1, 4)
    for mono, coeff in p.terms.items():
        exps = dict(mono)
        k = exps.pop(WEIGHT_VAR, 0)
        if k % 2:
            raise ConsistencyError(f"odd power of the weight variable survives in {p}")
        out = out + Polynomial.monomial(exps, coeff) * c2 ** (k // 2)
    return out


@dataclass(frozen=True)
class ChernData:
    """Chern roots and classes of the rank-three pushforward on one stratum.

    On the smooth stratum ``roots`` are written in the internal weight
    ``u``; ``c1, c2, c3`` are always ``u``-free.
    """

    stratum: object
    roots: tuple
    c1: Polynomial
    c2: Polynomial
    c3: Polynomial

    @property
    def chern_classes(self) -> list:
        return [self.c1, self.c2, self.c3]


def chern_roots(tree: DualTree) -> ChernData:
    name = stratum_of(tree)
    pres = build_presentation(tree)
    zero = Polynomial.zero()
    if name == "point":
        u = Polynomial.var(WEIGHT_VAR)
        roots = (2 * u, zero, -2 * u)
        _, elem = symmetric_functions(roots, 1)
        c1, c2, c3 = (_eliminate_weight(e) for e in elem[:3])
    else:
        ts = [Polynomial.var(v) for v in pres.t_variables]
        roots = tuple(ts) if name == "star3" else (zero, *ts)
        _, elem = symmetric_functions(roots, 1)
        c1, c2, c3 = elem[:3]
    return ChernData(pres, roots, c1, c2, c3)


def kappa(tree: DualTree, m: int) -> InvariantPolynomial:
    """The Mumford class ``kappa_m`` restricted to the stratum of ``tree``."""
    if m < 1:
        raise DomainError("kappa_m is computed for m >= 1; use kappa_zero() for m = 0")
    stratum_of(tree)
    pres = build_presentation(tree)
    if isinstance(pres, SmoothStratumPresentation):
        data = chern_roots(tree)
        value = -_eliminate_weight(power_sum(data.roots, m))
        return InvariantPolynomial(value, pres)
    p_m = power_sum([Polynomial.var(v) for v in pres.t_variables], m)
    value = -transfer_sum(pres.action, p_m / pres.sigma)
    return InvariantPolynomial(value, pres)


def kappa_zero(tree: DualTree | None = None) -> int:
    """Degree of the dualizing sheaf on a genus-zero curve: always -2.

    The per-stratum power-sum formula at ``m = 0`` would give ``-delta_1``,
    which is wrong on the star (``-3``): the trivalent component carries
    ``deg omega(3 points) = 1`` that the formula does not see.
    """
    return KAPPA_ZERO


def naive_kappa_zero(tree: DualTree) -> int:
    """The power-sum formula evaluated at ``m = 0``; kept for comparison."""
    pres = build_presentation(tree)
    if isinstance(pres, SmoothStratumPresentation):
        return KAPPA_ZERO
    return -len(pres.t_variables)


def kappa_via_localization(tree: DualTree, m: int) -> Polynomial:
    """``kappa_m`` from fixed-point pushforwards on each component.

    Leaf components contribute ``(-1)^(m+1) F_*(-K-R)^(m+1)`` and two-node
    components ``(-1)^(m+1) F_*(-K-R-Q)^(m+1)``, each in its own variable;
    the sum is pushed down the etale cover and divided by ``sigma``.
    """
    if m < 1:
        raise DomainError("m must be at least 1")
    pres = build_presentation(tree)
    if isinstance(pres, SmoothStratumPresentation):
        raise DomainError("the smooth stratum has no component decomposition")
    K, Q, R, _ = builtin_classes()
    sign = (-1) ** (m + 1)
    leaf = pushforward((-K - R) ** (m + 1)) * sign
    middle = pushforward((-K - R - Q) ** (m + 1)) * sign
    total = Polynomial.zero()
    for v in pres.t_variables:
        total = total + leaf.substitute({"t": Polynomial.var(v)})
    for v in pres.r_variables:
        total = total + middle.substitute({"t": Polynomial.var(v)})
    return transfer_sum(pres.action, total) / pres.sigma


def defmumpol_report(tree: DualTree) -> list:
    """Rows ``(m, kappa_m, polynomial in c1, c2, c3, equal?)`` for m = 1, 2, 3."""
    data = chern_roots(tree)
    c1, c2, c3 = data.c1, data.c2, data.c3
    expected = {
        1: -c1,
        2: 2 * c2 - c1 ** 2,
        3: -(c1 ** 3) + 3 * c1 * c2 - 3 * c3,
    }
    rows = []
    for m in (1, 2, 3):
        k = kappa(tree, m).poly
        if WEIGHT_VAR in k.variables() or WEIGHT_VAR in expected[m].variables():
            raise ConsistencyError("weight variable leaked into an exported class")
        rows.append((m, k, expected[m], k == expected[m]))
    return rows


def verify_defmumpol(tree: DualTree) -> bool:
    """Check ``kappa_m = -n_m(c1, c2, c3)`` for m = 1, 2, 3 on one stratum."""
    return all(ok for *_, ok in defmumpol_report(tree))


def newton_kappa(tree: DualTree, m: int) -> Polynomial:
    """``-p_m`` computed from ``c1, c2, c3`` alone by Newton's identities."""
    data = chern_roots(tree)
    return -newton_power_sum(data.chern_classes, m)
