import pytest
from hypothesis import given, settings, strategies as st

from chow_strata.equivariant_p1 import (
    EquivariantP1Class,
    builtin_classes,
    lift,
    pushforward,
    pushforward_table,
)
from chow_strata.errors import LocalizationError
from chow_strata.exact_poly import Polynomial

K, Q, R, ONE = builtin_classes()
t = Polynomial.var("t")
zero = Polynomial.zero()


def test_fixed_point_table():
    assert (K.at_zero, K.at_infinity) == (t, -t)
    assert (Q.at_zero, Q.at_infinity) == (-t, zero)
    assert (R.at_zero, R.at_infinity) == (zero, t)
    assert (ONE.at_zero, ONE.at_infinity) == (Polynomial.one(), Polynomial.one())


def test_combinations():
    minus_k_r = -K - R
    assert (minus_k_r.at_zero, minus_k_r.at_infinity) == (-t, zero)
    minus_k_r_q = -K - R - Q
    assert minus_k_r_q.at_zero.is_zero() and minus_k_r_q.at_infinity.is_zero()
    assert K * ONE == K


@pytest.mark.parametrize("h", range(11))
def test_odd_powers_of_k(h):
    assert pushforward(K ** (2 * h + 1)) == -2 * t ** (2 * h)


@pytest.mark.parametrize("h", range(1, 11))
def test_powers_of_minus_k_minus_r(h):
    assert pushforward((-K - R) ** (2 * h)) == -(t ** (2 * h - 1))
    assert pushforward((-K - R) ** (2 * h + 1)) == t ** (2 * h)


def test_pushforward_of_one_and_points():
    assert pushforward(ONE).is_zero()
    assert pushforward(Q) == 1 and pushforward(R) == 1


def test_image_condition_violation():
    with pytest.raises(LocalizationError):
        pushforward(EquivariantP1Class(Polynomial.one(), zero))


def test_self_intersections():
    assert Q * Q == lift(Q.at_zero) * Q
    assert R * R == lift(R.at_infinity) * R


def test_table_all_pass():
    rows = pushforward_table(10)
    assert len(rows) == 53
    assert all(got == want for _, _, got, want in rows)


generators = st.sampled_from([K, Q, R, ONE, -K - R, lift(Polynomial.var("s"))])
words = st.lists(generators, min_size=1, max_size=10)
scalars = st.sampled_from([Polynomial.one(), t, Polynomial.var("s") + 2, t ** 2 - 3])


def product_of(word):
    out = ONE
    for c in word:
        out = out * c
    return out


@settings(max_examples=80, deadline=None)
@given(words, words)
def test_image_condition_closed(a, b):
    x, y = product_of(a), product_of(b)
    assert (x * y).satisfies_image_condition()
    assert (x + y).satisfies_image_condition()
    assert (-x).satisfies_image_condition()


@settings(max_examples=80, deadline=None)
@given(words, scalars)
def test_projection_formula(word, p):
    c = product_of(word)
    assert pushforward(c * lift(p)) == p * pushforward(c)
