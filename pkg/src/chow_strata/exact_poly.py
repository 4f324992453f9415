"""Sparse multivariate polynomials over Q with signed-permutation actions.

Polynomials are immutable maps ``monomial -> Fraction``.  A monomial is a
tuple of ``(variable, exponent)`` pairs sorted by :func:`var_key`, with no
zero exponents.  Variables are plain strings: ``t1, t2, ...`` (leaf classes),
``r1, r2, ...`` (two-node classes), then everything else (``c2sl2``, ``u``,
the torus weight ``t`` of the P^1 calculator).

Example::

    >>> t1, t2 = Polynomial.var("t1"), Polynomial.var("t2")
    >>> str((t1 + t2) ** 2)
    't1^2 + 2*t1*t2 + t2^2'
"""

from __future__ import annotations

import os
import re
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .errors import DegreeBoundError, DomainError

__all__ = [
    "Polynomial",
    "SignedPermutation",
    "apply_action",
    "reynolds_average",
    "transfer_sum",
    "symmetric_functions",
    "elementary_symmetric",
    "power_sum",
    "newton_power_sum",
    "get_degree_bound",
    "set_degree_bound",
    "var_key",
]

DEFAULT_DEGREE_BOUND = 64
_degree_bound = None  # explicit override; otherwise read from the environment


def get_degree_bound() -> int:
    if _degree_bound is not None:
        return _degree_bound
    return int(os.environ.get("CHOW_STRATA_DEGREE_BOUND", DEFAULT_DEGREE_BOUND))


def set_degree_bound(bound: int | None) -> int:
    """Set the total-degree guard, or clear it with None; returns the previous value."""
    global _degree_bound
    if bound is not None and bound < 1:
        raise DomainError(f"degree bound must be positive, got {bound}")
    previous = get_degree_bound()
    _degree_bound = None if bound is None else int(bound)
    return previous


_VAR_RE = re.compile(r"^([A-Za-z_]+?)(\d*)$")
_FAMILY_RANK = {"t": 0, "r": 1}


def var_key(name: str) -> tuple:
    """Sort key putting t-variables first, then r-variables, then the rest."""
    m = _VAR_RE.match(name)
    if m is None:
        return (2, name, -1, name)
    family, index = m.group(1), m.group(2)
    rank = _FAMILY_RANK.get(family, 2)
    return (rank, family if rank == 2 else "", int(index) if index else -1, name)


def _mono_mul(a: tuple, b: tuple) -> tuple:
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for v, e in b:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items(), key=lambda item: var_key(item[0])))


def _mono_degree(m: tuple) -> int:
    return sum(e for _, e in m)


def _grlex_key(m: tuple) -> tuple:
    return (-_mono_degree(m), tuple((var_key(v), -e) for v, e in m))


class Polynomial:
    """Immutable polynomial with exact rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple, Fraction] | None = None):
        clean = {}
        if terms:
            for mono, coeff in terms.items():
                coeff = Fraction(coeff)
                if coeff:
                    mono = tuple(
                        sorted(((v, e) for v, e in mono if e), key=lambda item: var_key(item[0]))
                    )
                    for _, e in mono:
                        if e < 0:
                            raise DomainError("negative exponent in monomial")
                    clean[mono] = clean.get(mono, 0) + coeff
            clean = {m: c for m, c in clean.items() if c}
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> Polynomial:
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def var(cls, name: str) -> Polynomial:
        return cls._raw({((name, 1),): Fraction(1)})

    @classmethod
    def const(cls, value) -> Polynomial:
        value = Fraction(value)
        return cls._raw({(): value} if value else {})

    @classmethod
    def zero(cls) -> Polynomial:
        return cls._raw({})

    @classmethod
    def one(cls) -> Polynomial:
        return cls._raw({(): Fraction(1)})

    @classmethod
    def monomial(cls, exponents: Mapping[str, int], coeff=1) -> Polynomial:
        return cls({tuple(exponents.items()): Fraction(coeff)})

    # -- inspection ------------------------------------------------------

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self) -> list:
        """Terms as ``(monomial, coefficient)`` in graded-lex order."""
        return sorted(self._terms.items(), key=lambda item: _grlex_key(item[0]))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return all(not m for m in self._terms)

    def constant_term(self) -> Fraction:
        return self._terms.get((), Fraction(0))

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((_mono_degree(m) for m in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({_mono_degree(m) for m in self._terms}) <= 1

    def variables(self) -> set:
        return {v for m in self._terms for v, _ in m}

    def coefficient(self, exponents: Mapping[str, int]) -> Fraction:
        mono = tuple(sorted(((v, e) for v, e in exponents.items() if e), key=lambda i: var_key(i[0])))
        return self._terms.get(mono, Fraction(0))

    def homogeneous_part(self, degree: int) -> Polynomial:
        return Polynomial._raw({m: c for m, c in self._terms.items() if _mono_degree(m) == degree})

    # -- arithmetic ------------------------------------------------------

    @staticmethod
    def _coerce(other) -> Polynomial:
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.const(other)
        return NotImplemented

    def __add__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial._raw(out)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> Polynomial:
        return (-self) + other

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            if not other:
                return Polynomial.zero()
            return Polynomial._raw({m: c * other for m, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        bound = get_degree_bound()
        out: dict = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                if _mono_degree(m) > bound:
                    raise DegreeBoundError(
                        f"monomial of degree {_mono_degree(m)} exceeds bound {bound}"
                    )
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        return Polynomial._raw(out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> Polynomial:
        # Only scalar division; polynomial division is deliberately absent.
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            if not other:
                raise ZeroDivisionError("polynomial divided by zero")
            return Polynomial._raw({m: c / other for m, c in self._terms.items()})
        return NotImplemented

    def __pow__(self, n: int) -> Polynomial:
        if not isinstance(n, int) or n < 0:
            raise DomainError(f"exponent must be a natural number, got {n!r}")
        bound = get_degree_bound()
        if n and self.degree() * n > bound:
            raise DegreeBoundError(f"power of degree {self.degree() * n} exceeds bound {bound}")
        result, base = Polynomial.one(), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- substitution ----------------------------------------------------

    def substitute(self, images: Mapping[str, Polynomial], *, strict: bool = False) -> Polynomial:
        """Replace variables by polynomials.

        Variables absent from ``images`` are kept as they are unless
        ``strict`` is set, in which case they raise :class:`DomainError`.
        """
        out = Polynomial.zero()
        cache: dict = {}
        for mono, coeff in self._terms.items():
            term = Polynomial.const(coeff)
            for v, e in mono:
                if v in images:
                    key = (v, e)
                    if key not in cache:
                        cache[key] = images[v] ** e
                    term = term * cache[key]
                elif strict:
                    raise DomainError(f"no image given for variable {v!r}")
                else:
                    term = term * Polynomial._raw({((v, e),): Fraction(1)})
            out = out + term
        return out

    def divide_by_variable(self, name: str) -> Polynomial:
        """Exact division by a single variable; raises if not divisible."""
        out = {}
        for mono, coeff in self._terms.items():
            exps = dict(mono)
            if exps.get(name, 0) < 1:
                raise DomainError(f"polynomial is not divisible by {name}")
            exps[name] -= 1
            out[tuple((v, exps[v]) for v, _ in mono if exps[v])] = coeff
        return Polynomial._raw(out)

    # -- rendering -------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for i, (mono, coeff) in enumerate(self.items()):
            body = "*".join(v if e == 1 else f"{v}^{e}" for v, e in mono)
            sign = "-" if coeff < 0 else "+"
            mag = abs(coeff)
            if not body:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            if i == 0:
                pieces.append(("-" if sign == "-" else "") + text)
            else:
                pieces.append(f" {sign} {text}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"

    def to_json(self) -> dict:
        return {
            "terms": [
                {"coeff": f"{c.numerator}/{c.denominator}", "monomial": {v: e for v, e in m}}
                for m, c in self.items()
            ]
        }

    @classmethod
    def from_json(cls, data: Mapping) -> Polynomial:
        try:
            terms = data["terms"]
        except (KeyError, TypeError) as exc:
            raise DomainError("polynomial JSON must be an object with a 'terms' list") from exc
        out: dict = {}
        for term in terms:
            coeff = Fraction(term["coeff"])
            mono = tuple(
                sorted(((str(v), int(e)) for v, e in term.get("monomial", {}).items()),
                       key=lambda item: var_key(item[0]))
            )
            if any(e <= 0 for _, e in mono):
                raise DomainError("monomial exponents in JSON must be positive")
            out[mono] = out.get(mono, 0) + coeff
        return cls(out)


class SignedPermutation:
    """A bijection ``variable -> (variable, sign)`` acting on polynomials.

    ``g.compose(h)`` is ``g o h``: apply ``h`` first.
    """

    __slots__ = ("_map",)

    def __init__(self, mapping: Mapping[str, tuple]):
        m = {}
        for src, (dst, sign) in mapping.items():
            if sign not in (1, -1):
                raise DomainError(f"sign must be +1 or -1, got {sign!r}")
            m[src] = (dst, sign)
        if sorted({d for d, _ in m.values()}) != sorted(m):
            raise DomainError("signed permutation is not a bijection of its variable set")
        self._map = m

    @classmethod
    def identity(cls, variables: Iterable[str]) -> SignedPermutation:
        return cls({v: (v, 1) for v in variables})

    @property
    def domain(self) -> frozenset:
        return frozenset(self._map)

    def image(self, var: str) -> tuple:
        try:
            return self._map[var]
        except KeyError:
            raise DomainError(f"variable {var!r} not in the domain of the permutation") from None

    def compose(self, other: SignedPermutation) -> SignedPermutation:
        if self.domain != other.domain:
            raise DomainError("cannot compose permutations on different variable sets")
        out = {}
        for v in other._map:
            mid, s1 = other._map[v]
            dst, s2 = self._map[mid]
            out[v] = (dst, s1 * s2)
        return SignedPermutation(out)

    def inverse(self) -> SignedPermutation:
        return SignedPermutation({dst: (src, sign) for src, (dst, sign) in self._map.items()})

    def is_identity(self) -> bool:
        return all(src == dst and sign == 1 for src, (dst, sign) in self._map.items())

    def __call__(self, p: Polynomial) -> Polynomial:
        return apply_action(self, p)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SignedPermutation):
            return NotImplemented
        return self._map == other._map

    def __hash__(self) -> int:
        return hash(frozenset(self._map.items()))

    def __repr__(self) -> str:
        parts = []
        for src in sorted(self._map, key=var_key):
            dst, sign = self._map[src]
            parts.append(f"{src}->{'-' if sign < 0 else ''}{dst}")
        return "SignedPermutation(" + ", ".join(parts) + ")"


def apply_action(g: SignedPermutation, p: Polynomial) -> Polynomial:
    """Substitute ``v -> sign * g(v)`` in every monomial of ``p``."""
    out: dict = {}
    for mono, coeff in p._terms.items():
        exps: dict = {}
        sign = 1
        for v, e in mono:
            dst, s = g.image(v)
            exps[dst] = e
            if s < 0 and e % 2:
                sign = -sign
        new = tuple(sorted(exps.items(), key=lambda item: var_key(item[0])))
        out[new] = out.get(new, 0) + sign * coeff
    return Polynomial._raw({m: c for m, c in out.items() if c})


def transfer_sum(group: Sequence[SignedPermutation], p: Polynomial) -> Polynomial:
    """Orbit sum ``sum_g g.p``; realizes pushforward along the etale cover."""
    if not group:
        raise DomainError("group must be non-empty")
    out = Polynomial.zero()
    for g in group:
        out = out + apply_action(g, p)
    return out


def reynolds_average(group: Sequence[SignedPermutation], p: Polynomial) -> Polynomial:
    """Projection onto invariants, ``(1/|G|) sum_g g.p``."""
    if not group:
        raise DomainError("group must be non-empty")
    return transfer_sum(group, p) / len(group)


def elementary_symmetric(roots: Sequence[Polynomial], k: int) -> Polynomial:
    if k == 0:
        return Polynomial.one()
    out = Polynomial.zero()
    for combo in combinations(roots, k):
        term = Polynomial.one()
        for r in combo:
            term = term * r
        out = out + term
    return out


def power_sum(roots: Sequence[Polynomial], m: int) -> Polynomial:
    out = Polynomial.zero()
    for r in roots:
        out = out + r ** m
    return out


def newton_power_sum(elementary: Sequence[Polynomial], m: int) -> Polynomial:
    """Power sum ``p_m`` from ``e_1, e_2, ...`` by Newton's identities.

    ``elementary[i]`` is ``e_{i+1}``; missing entries count as zero.
    """
    if m < 1:
        raise DomainError("power sums are indexed from 1")

    def e(i):
        return elementary[i - 1] if i <= len(elementary) else Polynomial.zero()

    p = [Polynomial.zero()]
    for k in range(1, m + 1):
        acc = e(k) * ((-1) ** (k - 1) * k)
        for i in range(1, k):
            acc = acc + e(i) * p[k - i] * ((-1) ** (i - 1))
        p.append(acc)
    return p[m]


def symmetric_functions(roots: Sequence[Polynomial], m: int) -> tuple:
    """Return ``(p_m, [e_1, ..., e_n])`` with ``n = max(3, len(roots))``."""
    if m < 1:
        raise DomainError("m must be at least 1")
    for r in roots:
        if not r.is_zero() and (r.degree() != 1 or not r.is_homogeneous()):
            raise DomainError(f"root {r} is not a linear form")
    n = max(3, len(roots))
    elem = [elementary_symmetric(roots, k) for k in range(1, n + 1)]
    return power_sum(roots, m), elem
