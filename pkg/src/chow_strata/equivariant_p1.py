"""Torus-equivariant classes on P^1 stored as fixed-point restrictions.

A class is the pair ``(c|_0, c|_inf)`` of its restrictions to the two
fixed points.  Ring operations are componentwise and the pushforward to
a point is the difference quotient ``(c|_inf - c|_0) / t``, defined
exactly when ``c|_0 = c|_inf (mod t)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import LocalizationError
from .exact_poly import Polynomial

__all__ = ["EquivariantP1Class", "builtin_classes", "pushforward", "lift", "pushforward_table", "TORUS_VAR"]

TORUS_VAR = "t"


@dataclass(frozen=True)
class EquivariantP1Class:
    at_zero: Polynomial
    at_infinity: Polynomial
    weight: str = TORUS_VAR

    def satisfies_image_condition(self) -> bool:
        diff = self.at_zero - self.at_infinity
        return all(dict(mono).get(self.weight, 0) >= 1 for mono in diff.terms)

    def _check(self, other: EquivariantP1Class) -> None:
        if self.weight != other.weight:
            raise LocalizationError("classes use different torus weights")

    def __add__(self, other: EquivariantP1Class) -> EquivariantP1Class:
        self._check(other)
        return EquivariantP1Class(self.at_zero + other.at_zero, self.at_infinity + other.at_infinity, self.weight)

    def __neg__(self) -> EquivariantP1Class:
        return EquivariantP1Class(-self.at_zero, -self.at_infinity, self.weight)

    def __sub__(self, other: EquivariantP1Class) -> EquivariantP1Class:
        return self + (-other)

    def __mul__(self, other) -> EquivariantP1Class:
        if isinstance(other, EquivariantP1Class):
            self._check(other)
            return EquivariantP1Class(self.at_zero * other.at_zero, self.at_infinity * other.at_infinity, self.weight)
        return EquivariantP1Class(self.at_zero * other, self.at_infinity * other, self.weight)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> EquivariantP1Class:
        return EquivariantP1Class(self.at_zero ** n, self.at_infinity ** n, self.weight)


def lift(p: Polynomial, weight: str = TORUS_VAR) -> EquivariantP1Class:
    """Pull back a class from the point: equal restrictions at both fixed points."""
    return EquivariantP1Class(p, p, weight)


def builtin_classes(weight: str = TORUS_VAR) -> tuple:
    """``(K, Q, R, one)``: canonical class, point at 0, point at infinity, unit."""
    t = Polynomial.var(weight)
    zero = Polynomial.zero()
    K = EquivariantP1Class(t, -t, weight)
    Q = EquivariantP1Class(-t, zero, weight)
    R = EquivariantP1Class(zero, t, weight)
    one = EquivariantP1Class(Polynomial.one(), Polynomial.one(), weight)
    return K, Q, R, one


def pushforward(c: EquivariantP1Class) -> Polynomial:
    """Integrate over the fibre; normalized so ``Q`` and ``R`` push to 1."""
    if not c.satisfies_image_condition():
        raise LocalizationError(
            f"restrictions {c.at_zero} and {c.at_infinity} do not agree modulo {c.weight}"
        )
    return (c.at_infinity - c.at_zero).divide_by_variable(c.weight)


def pushforward_table(max_exponent: int = 10, weight: str = TORUS_VAR) -> list:
    """Rows ``(label, h, computed, expected)`` for the five pushforward families."""
    K, Q, R, one = builtin_classes(weight)
    t = Polynomial.var(weight)
    rows = []
    for h in range(0, max_exponent + 1):
        rows.append(("K^(2h)", h, pushforward(K ** (2 * h)), Polynomial.zero()))
        rows.append(("K^(2h+1)", h, pushforward(K ** (2 * h + 1)), -2 * t ** (2 * h)))
    for h in range(1, max_exponent + 1):
        rows.append(("(-K-R)^(2h)", h, pushforward((-K - R) ** (2 * h)), -(t ** (2 * h - 1))))
        rows.append(("(-K-R)^(2h+1)", h, pushforward((-K - R) ** (2 * h + 1)), t ** (2 * h)))
    for h in range(0, max_exponent + 1):
        rows.append(("(-K-R-Q)^h", h, pushforward((-K - R - Q) ** h), Polynomial.zero()))
    return rows
