import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from chow_strata.errors import DegreeBoundError, DomainError
from chow_strata.exact_poly import (
    Polynomial,
    SignedPermutation,
    apply_action,
    get_degree_bound,
    newton_power_sum,
    power_sum,
    reynolds_average,
    set_degree_bound,
    symmetric_functions,
    transfer_sum,
)

P = Polynomial
t1, t2, t3, r1, r2 = (P.var(n) for n in ("t1", "t2", "t3", "r1", "r2"))
VARS = ("t1", "t2", "r1", "c2sl2")

coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=6)
monomials = st.dictionaries(st.sampled_from(VARS), st.integers(1, 2), max_size=3)
polys = st.lists(st.tuples(monomials, coeffs), max_size=5).map(
    lambda ts: sum((P.monomial(m, c) for m, c in ts), P.zero())
)


def swap_flip():
    return SignedPermutation({"t1": ("t2", 1), "t2": ("t1", 1), "r1": ("r1", -1)})


# Spec examples

def test_binomial_square():
    assert (t1 + t2) ** 2 == t1 ** 2 + 2 * t1 * t2 + t2 ** 2


def test_times_zero():
    assert ((t1 + r1) * P.zero()).is_zero()


def test_chain2_class_expansion():
    assert (t1 - r1) * (t2 + r1) == t1 * t2 + t1 * r1 - r1 * t2 - r1 ** 2


def test_action_fixes_chain2_class():
    p = (t1 - r1) * (t2 + r1)
    assert apply_action(swap_flip(), p) == p


def test_identity_action_and_even_power():
    g = SignedPermutation.identity(["t1", "r1"])
    assert apply_action(g, t1 - r1) == t1 - r1
    assert apply_action(SignedPermutation({"r1": ("r1", -1)}), r1 ** 2) == r1 ** 2


def test_reynolds_examples():
    swap = SignedPermutation({"t1": ("t2", 1), "t2": ("t1", 1)})
    G = [SignedPermutation.identity(["t1", "t2"]), swap]
    assert reynolds_average(G, t1) == (t1 + t2) / 2
    assert reynolds_average(G, t1 + t2) == t1 + t2
    H = [SignedPermutation.identity(["t1", "t2", "r1"]), swap_flip()]
    assert reynolds_average(H, r1 * t1) == (r1 * t1 - r1 * t2) / 2


def test_transfer_examples():
    swap = SignedPermutation({"t1": ("t2", 1), "t2": ("t1", 1)})
    G = [SignedPermutation.identity(["t1", "t2"]), swap]
    assert transfer_sum(G, t1 + t2) == 2 * (t1 + t2)
    assert transfer_sum(G[:1], t1 ** 5 - t2) == t1 ** 5 - t2
    assert transfer_sum(G, t1 ** 3) == t1 ** 3 + t2 ** 3


def test_symmetric_functions_chain():
    p2, e = symmetric_functions([P.zero(), t1, t2], 2)
    assert p2 == t1 ** 2 + t2 ** 2
    assert e == [t1 + t2, t1 * t2, P.zero()]


def test_symmetric_functions_star_first_power():
    p1, e = symmetric_functions([t1, t2, t3], 1)
    assert p1 == e[0]


def test_symmetric_functions_sl2_weights():
    u = P.var("u")
    p2, e = symmetric_functions([2 * u, P.zero(), -2 * u], 2)
    assert p2 == 8 * u ** 2
    assert e[1] == -4 * u ** 2
    assert p2 == e[0] ** 2 - 2 * e[1]


# Behaviour

def test_printing_and_order():
    assert str(t1 ** 2 + 2 * t1 * t2 - r1 / 2) == "t1^2 + 2*t1*t2 - 1/2*r1"
    assert str(P.zero()) == "0"
    assert [str(P({m: 1})) for m, _ in (t2 + r1 + t1).items()] == ["t1", "t2", "r1"]


def test_division_only_by_scalars():
    assert (t1 / 3).coefficient({"t1": 1}) == Fraction(1, 3)
    with pytest.raises((DomainError, TypeError)):
        t1 / t2


def test_divide_by_variable():
    assert (t1 ** 2 * r1 - 3 * t1).divide_by_variable("t1") == t1 * r1 - 3
    with pytest.raises(DomainError):
        (t1 + 1).divide_by_variable("t1")


def test_degree_bound_is_enforced_and_configurable():
    try:
        set_degree_bound(4)
        with pytest.raises(DegreeBoundError):
            t1 ** 5
        assert (t1 ** 4).degree() == 4
    finally:
        set_degree_bound(None)


def test_degree_bound_from_environment(monkeypatch):
    monkeypatch.setenv("CHOW_STRATA_DEGREE_BOUND", "7")
    assert get_degree_bound() == 7


def test_substitute():
    assert (t1 * r1).substitute({"r1": t2 + 1}) == t1 * t2 + t1
    with pytest.raises(DomainError):
        (t1 * r1).substitute({"r1": t2}, strict=True)


def test_empty_group_rejected():
    with pytest.raises(DomainError):
        reynolds_average([], t1)


def test_signed_permutation_group_laws():
    g = swap_flip()
    assert g.compose(g).is_identity()
    assert g.inverse() == g
    h = SignedPermutation({"t1": ("t1", 1), "t2": ("t2", 1), "r1": ("r1", -1)})
    assert apply_action(g.compose(h), t1 * r1) == apply_action(g, apply_action(h, t1 * r1))


# Properties

@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == P.zero()


@settings(max_examples=60, deadline=None)
@given(polys)
def test_json_round_trip(p):
    data = json.loads(json.dumps(p.to_json()))
    assert P.from_json(data) == p
    assert all("/" in term["coeff"] for term in data["terms"])


@settings(max_examples=40, deadline=None)
@given(polys)
def test_reynolds_average_is_fixed(p):
    G = [
        SignedPermutation.identity(VARS),
        SignedPermutation({"t1": ("t2", 1), "t2": ("t1", 1), "r1": ("r1", -1), "c2sl2": ("c2sl2", 1)}),
    ]
    avg = reynolds_average(G, p)
    assert all(apply_action(g, avg) == avg for g in G)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.lists(coeffs, min_size=4, max_size=4), min_size=3, max_size=3), st.integers(1, 7))
def test_newton_identities_for_linear_roots(rows, m):
    roots = [sum((c * P.var(x) for c, x in zip(row, ("t1", "t2", "t3", "r1"))), P.zero()) for row in rows]
    p_m, elem = symmetric_functions(roots, m)
    assert p_m == power_sum(roots, m)
    assert newton_power_sum(elem, m) == p_m
