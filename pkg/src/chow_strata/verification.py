"""End-to-end checks of the closed-form identities, one per criterion.

Each check returns a :class:`CheckResult`; :func:`run_all` runs them in
order.  The command line ``verify-all`` prints these results.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import permutations, product

from .deformations import enumerate_ordered_deformations, quotient
from .dual_trees import STRATA_NAMES, DualTree, named_tree
from .equivariant_p1 import pushforward_table
from .exact_poly import Polynomial
from .mumford import kappa, kappa_zero, newton_kappa, verify_defmumpol
from .strata_classes import (
    excess_factorization,
    gamma_class,
    global_gamma,
    restrict_extended_class,
    vanishing_predicate,
)
from .stratum_ring import C2SL2, SmoothStratumPresentation, build_presentation, is_invariant

__all__ = [
    "CheckResult",
    "REFERENCE_DEFORMATION_TABLE",
    "REFERENCE_GAMMA_TABLE",
    "equal_up_to_relabeling",
    "random_invariant_class",
    "run_all",
]

SINGULAR_STRATA = STRATA_NAMES[1:]

# Rows 1-8 of the worked example: vertices of G' sent to A, the rest to B.
REFERENCE_DEFORMATION_TABLE = {
    1: "PRST",
    2: "QRST",
    3: "PQR",
    4: "PQRS",
    5: "Q",
    6: "P",
    7: "ST",
    8: "T",
}


def _reference_gamma_table() -> dict:
    t1, t2, t3, r1, r2 = (Polynomial.var(v) for v in ("t1", "t2", "t3", "r1", "r2"))
    return {
        "edge": t1 + t2,
        "chain2": (t1 - r1) * (t2 + r1),
        "chain3": (t1 - r1) * (r1 + r2) * (t2 - r2),
        "star3": t1 * t2 * t3,
    }


REFERENCE_GAMMA_TABLE = _reference_gamma_table()

# Restriction of the divisor class of the one-node stratum to the
# three-node chain, as produced by the independent brute-force oracle
# (tests/oracles/restriction_oracle.py) on the canonical chain labeling.
ORACLE_EDGE_TO_CHAIN3 = Polynomial.var("t1") + Polynomial.var("t2")


@dataclass(frozen=True)
class CheckResult:
    number: int
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.number:2d}. {self.name}" + (f": {self.detail}" if self.detail else "")


def equal_up_to_relabeling(p: Polynomial, q: Polynomial, t_vars, r_vars) -> bool:
    """Whether a permutation of t's, a permutation of r's and signs on r's carry p to q."""
    for tp in permutations(t_vars):
        for rp in permutations(r_vars):
            for signs in product((1, -1), repeat=len(r_vars)):
                images = {a: Polynomial.var(b) for a, b in zip(t_vars, tp)}
                images.update({a: Polynomial.var(b) * s for a, b, s in zip(r_vars, rp, signs)})
                if p.substitute(images) == q:
                    return True
    return False


def random_invariant_class(pres, rng: random.Random, max_degree: int = 2) -> Polynomial:
    """Average of a random polynomial of degree at most ``max_degree``."""
    gens = pres.gens()
    p = Polynomial.const(rng.randint(-3, 3))
    for _ in range(rng.randint(1, 6)):
        term = Polynomial.const(rng.randint(-5, 5) or 1)
        for _ in range(rng.randint(1, max_degree)):
            term = term * rng.choice(gens)
        p = p + term
    return pres.average(p)


def check_deformation_example() -> CheckResult:
    gamma = DualTree(["A", "B"], [("A", "B")])
    gamma_prime = named_tree("paper-example-4edge")
    defs = enumerate_ordered_deformations(gamma, gamma_prime)
    row_of = {}
    for d in defs:
        to_a = "".join(v for v in gamma_prime.vertices if d(v) == "A")
        row = next((k for k, s in REFERENCE_DEFORMATION_TABLE.items() if s == to_a), None)
        row_of[d] = row
    rows_ok = len(defs) == 8 and sorted(row_of.values(), key=str) == list(range(1, 9))
    prime_classes = {frozenset(row_of[d] for d in c.representatives) for c in quotient(defs, "gammaprime")}
    expected_prime = {frozenset(s) for s in ({1, 2}, {3}, {4}, {5, 6}, {7}, {8})}
    gamma_classes = quotient(defs, "gamma")
    ok = rows_ok and prime_classes == expected_prime and len(gamma_classes) == 4
    return CheckResult(
        1,
        "deformation enumeration",
        ok,
        f"{len(defs)} ordered, {len(prime_classes)} classes mod Aut(G'), {len(gamma_classes)} mod Aut(G)",
    )


def check_gamma_table() -> CheckResult:
    bad = []
    for name, expected in REFERENCE_GAMMA_TABLE.items():
        tree = named_tree(name)
        pres = build_presentation(tree)
        got = gamma_class(tree).poly
        if not equal_up_to_relabeling(got, expected, pres.t_variables, pres.r_variables):
            bad.append(name)
    return CheckResult(2, "strata class table", not bad, f"mismatch on {bad}" if bad else "4/4 rows")


def check_self_restriction() -> CheckResult:
    bad = [
        n for n in SINGULAR_STRATA
        if restrict_extended_class(named_tree(n), 1, named_tree(n)).poly != gamma_class(named_tree(n)).poly
    ]
    return CheckResult(3, "self-restriction equals stratum class", not bad, f"failed on {bad}" if bad else "4/4")


def check_vanishing() -> CheckResult:
    direct = restrict_extended_class(named_tree("star3"), 1, named_tree("chain3")).poly.is_zero()
    bad = []
    for n in SINGULAR_STRATA:
        tree = named_tree(n)
        g = global_gamma(tree)
        for target in STRATA_NAMES:
            if not enumerate_ordered_deformations(tree, named_tree(target)) and not g[target].poly.is_zero():
                bad.append((n, target))
    return CheckResult(4, "restriction to non-deformations vanishes", direct and not bad,
                       f"star3->chain3 zero: {direct}; nonzero at {bad}" if bad or not direct else "")


def check_zero_divisor() -> CheckResult:
    witness = named_tree("zerodiv-5edge")
    ok = vanishing_predicate(witness) and gamma_class(witness).poly.is_zero()
    for n in SINGULAR_STRATA:
        tree = named_tree(n)
        ok = ok and not vanishing_predicate(tree) and not gamma_class(tree).poly.is_zero()
    return CheckResult(5, "zero-divisor witness", ok)


def check_mumford_identities() -> CheckResult:
    bad = [n for n in STRATA_NAMES if not verify_defmumpol(named_tree(n))]
    return CheckResult(6, "Mumford classes as polynomials in c1, c2, c3", not bad,
                       f"failed on {bad}" if bad else "5/5 strata")


def check_smooth_stratum() -> CheckResult:
    point = named_tree("point")
    c2 = Polynomial.var(C2SL2)
    ok = (
        kappa_zero(point) == -2
        and kappa(point, 1).poly.is_zero()
        and kappa(point, 3).poly.is_zero()
        and kappa(point, 2).poly == 2 * c2
    )
    return CheckResult(7, "smooth stratum Mumford classes", ok)


def check_pushforward_table(max_exponent: int = 10) -> CheckResult:
    rows = pushforward_table(max_exponent)
    bad = [(label, h) for label, h, got, want in rows if got != want]
    return CheckResult(8, "equivariant pushforward table", not bad,
                       f"{len(rows)} identities" if not bad else f"failed {bad[:5]}")


def check_property_suite(samples: int = 100, seed: int = 20240611) -> CheckResult:
    rng = random.Random(seed)
    problems = []
    for src in SINGULAR_STRATA:
        src_tree = named_tree(src)
        src_pres = build_presentation(src_tree)
        for dst in STRATA_NAMES:
            dst_tree = named_tree(dst)
            dst_pres = build_presentation(dst_tree)
            for _ in range(samples):
                a = random_invariant_class(src_pres, rng)
                out = restrict_extended_class(src_tree, a, dst_tree).poly
                if not is_invariant(dst_pres, out):
                    problems.append(f"non-invariant {src}->{dst}")
                    break
            if isinstance(dst_pres, SmoothStratumPresentation):
                continue
            for d in enumerate_ordered_deformations(src_tree, dst_tree):
                full, contracted, persistent = excess_factorization(d)
                if full != contracted * persistent:
                    problems.append(f"multiplicativity {src}->{dst}")
    for name in STRATA_NAMES:
        tree = named_tree(name)
        for m in range(1, 7):
            if kappa(tree, m).poly != newton_kappa(tree, m):
                problems.append(f"Newton bridge {name} m={m}")
    return CheckResult(9, "property suite", not problems, "; ".join(problems[:5]))


def check_oracle() -> CheckResult:
    edge = named_tree("edge")
    t = [Polynomial.var(f"t{i}") for i in (1, 2, 3)]
    star = restrict_extended_class(edge, 1, named_tree("star3")).poly == t[0] + t[1] + t[2]
    chain = restrict_extended_class(edge, 1, named_tree("chain3")).poly == ORACLE_EDGE_TO_CHAIN3
    return CheckResult(10, "restrictions of the divisor class match the oracle", star and chain,
                       f"star3: {star}, chain3: {chain}")


CHECKS = (
    check_deformation_example,
    check_gamma_table,
    check_self_restriction,
    check_vanishing,
    check_zero_divisor,
    check_mumford_identities,
    check_smooth_stratum,
    check_pushforward_table,
    check_property_suite,
    check_oracle,
)


def run_all() -> list:
    return [check() for check in CHECKS]
