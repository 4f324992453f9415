import pytest

from chow_strata.dual_trees import STRATA_NAMES, named_tree
from chow_strata.errors import DomainError
from chow_strata.exact_poly import Polynomial
from chow_strata.mumford import (
    WEIGHT_VAR,
    chern_roots,
    defmumpol_report,
    kappa,
    kappa_via_localization,
    kappa_zero,
    naive_kappa_zero,
    newton_kappa,
    verify_defmumpol,
)
from chow_strata.stratum_ring import build_presentation, is_invariant

t1, t2, t3 = (Polynomial.var(n) for n in ("t1", "t2", "t3"))
c2 = Polynomial.var("c2sl2")


def test_chain2_chern_classes():
    data = chern_roots(named_tree("chain2"))
    assert (data.c1, data.c2, data.c3) == (t1 + t2, t1 * t2, Polynomial.zero())


def test_star3_top_chern_class():
    assert chern_roots(named_tree("star3")).c3 == t1 * t2 * t3


def test_smooth_chern_classes():
    data = chern_roots(named_tree("point"))
    assert data.c1.is_zero() and data.c3.is_zero()
    assert data.c2 == c2


def test_kappa_examples():
    assert kappa(named_tree("edge"), 2).poly == -(t1 ** 2 + t2 ** 2)
    assert kappa(named_tree("point"), 2).poly == 2 * c2
    assert kappa(named_tree("star3"), 1).poly == -(t1 + t2 + t3)


def test_kappa_needs_positive_index():
    with pytest.raises(DomainError):
        kappa(named_tree("edge"), 0)


@pytest.mark.parametrize("name", STRATA_NAMES)
def test_kappa_zero_is_minus_two(name):
    assert kappa_zero(named_tree(name)) == -2


def test_naive_kappa_zero_differs_on_the_star():
    assert naive_kappa_zero(named_tree("star3")) == -3


@pytest.mark.parametrize("name", STRATA_NAMES)
def test_defmumpol(name):
    assert verify_defmumpol(named_tree(name))


def test_smooth_report_values():
    rows = defmumpol_report(named_tree("point"))
    assert [r[1] for r in rows] == [Polynomial.zero(), 2 * c2, Polynomial.zero()]


@pytest.mark.parametrize("name", STRATA_NAMES)
@pytest.mark.parametrize("m", range(1, 7))
def test_newton_bridge_and_invariance(name, m):
    tree = named_tree(name)
    k = kappa(tree, m).poly
    assert k == newton_kappa(tree, m)
    assert WEIGHT_VAR not in k.variables()
    pres = build_presentation(tree)
    assert is_invariant(pres, k)
    data = chern_roots(tree)
    assert all(is_invariant(pres, c) for c in data.chern_classes)


@pytest.mark.parametrize("name", STRATA_NAMES[1:])
@pytest.mark.parametrize("m", range(1, 7))
def test_agrees_with_localization(name, m):
    tree = named_tree(name)
    assert kappa_via_localization(tree, m) == kappa(tree, m).poly


def test_edge_localization_by_hand():
    # Two leaf components; no two-node components.
    from chow_strata.equivariant_p1 import builtin_classes, pushforward
    K, Q, R, _ = builtin_classes()
    for m in range(1, 6):
        leaf = pushforward((-K - R) ** (m + 1)) * (-1) ** (m + 1)
        total = leaf.substitute({"t": t1}) + leaf.substitute({"t": t2})
        assert total == kappa(named_tree("edge"), m).poly
