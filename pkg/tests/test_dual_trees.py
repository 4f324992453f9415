import json
import random
from itertools import permutations

import networkx as nx
import pytest

from chow_strata.dual_trees import (
    STRATA_NAMES,
    DualTree,
    TreeAutomorphism,
    automorphism_group,
    degree_partition,
    enumerate_trees,
    induced_signed_permutation,
    named_tree,
    parse_tree,
    variable_names,
)
from chow_strata.errors import DomainError, MultiplicityError
from chow_strata.exact_poly import Polynomial, SignedPermutation, apply_action


def brute_force_automorphisms(tree):
    edges = {frozenset(e) for e in tree.edges}
    count = 0
    for perm in permutations(tree.vertices):
        g = dict(zip(tree.vertices, perm))
        if {frozenset((g[a], g[b])) for a, b in tree.edges} == edges:
            count += 1
    return count


def networkx_tree_counts(max_edges, max_degree):
    counts = []
    for n in range(1, max_edges + 2):
        trees = [nx.empty_graph(1)] if n == 1 else nx.nonisomorphic_trees(n)
        counts.append(sum(1 for t in trees if max((d for _, d in t.degree), default=0) <= max_degree))
    return counts


# Spec examples

def test_enumerate_up_to_three_edges():
    trees = enumerate_trees(3, 3)
    assert len(trees) == 5
    assert {named_tree(n).canonical_key() for n in STRATA_NAMES} == {t.canonical_key() for t in trees}


def test_enumerate_zero_edges():
    (tree,) = enumerate_trees(0, 3)
    assert len(tree) == 1


def test_enumerate_four_edges_matches_brute_force():
    # Independent count: 7 trees with at most 4 edges and no vertex of degree above 3.
    assert len(enumerate_trees(4, 3)) == sum(networkx_tree_counts(4, 3)) == 7
    assert len(enumerate_trees(4, 4)) == sum(networkx_tree_counts(4, 4)) == 8


@pytest.mark.parametrize("max_degree", [3, 4])
def test_enumeration_counts_match_networkx(max_degree):
    trees = enumerate_trees(7, max_degree)
    by_size = [sum(1 for t in trees if t.n_edges == k) for k in range(8)]
    assert by_size == networkx_tree_counts(7, max_degree)


def test_enumeration_guards():
    with pytest.raises(DomainError):
        enumerate_trees(9, 3)
    with pytest.raises(DomainError):
        enumerate_trees(3, 5)


@pytest.mark.parametrize("name, order", [("edge", 2), ("star3", 6), ("chain3", 2), ("chain2", 2), ("point", 1)])
def test_automorphism_orders(name, order):
    tree = named_tree(name)
    assert len(automorphism_group(tree)) == order == brute_force_automorphisms(tree)


@pytest.mark.parametrize("name, sizes", [("chain3", (2, 2, 0)), ("star3", (3, 0, 1)), ("point", (0, 0, 0))])
def test_degree_partition(name, sizes):
    assert tuple(len(part) for part in degree_partition(named_tree(name))) == sizes


def test_degree_partition_rejects_degree_four():
    with pytest.raises(MultiplicityError):
        degree_partition(named_tree("star4"))


def test_chain2_flip_signs():
    tree = named_tree("chain2")
    names = variable_names(tree)
    flip = next(g for g in automorphism_group(tree) if not g.is_identity())
    got = induced_signed_permutation(tree, flip)
    t1, t2, r1 = sorted(names.values(), key=lambda n: (n[0] != "t", n))
    assert got == SignedPermutation({t1: (t2, 1), t2: (t1, 1), r1: (r1, -1)})


def test_identity_induces_identity():
    tree = named_tree("chain3")
    assert induced_signed_permutation(tree, automorphism_group(tree)[0]).is_identity()


def test_chain3_flip_with_opposed_orientations():
    # Leaves A, D; middles B, C with B:(0 -> A, inf -> C) and C:(0 -> D, inf -> B).
    tree = DualTree(["A", "B", "C", "D"], [("A", "B"), ("B", "C"), ("C", "D")],
                    orientation={"B": ("A", "C"), "C": ("D", "B")})
    names = variable_names(tree)
    flip = TreeAutomorphism({"A": "D", "B": "C", "C": "B", "D": "A"})
    g = induced_signed_permutation(tree, flip)
    assert g == SignedPermutation({
        names["A"]: (names["D"], 1), names["D"]: (names["A"], 1),
        names["B"]: (names["C"], 1), names["C"]: (names["B"], 1),
    })
    # The tabulated chain3 class, written in these variables, is fixed.
    t1, t2, r1, r2 = (Polynomial.var(names[v]) for v in "ADBC")
    row = (t1 - r1) * (r1 + r2) * (t2 - r2)
    assert apply_action(g, row) == row


# Properties

def test_enumerated_trees_are_trees():
    for tree in enumerate_trees(6, 4):
        assert tree.n_edges == len(tree) - 1
        assert nx.is_connected(nx.Graph(list(tree.edges))) if tree.edges else len(tree) == 1


def test_automorphism_groups_are_closed():
    for tree in enumerate_trees(5, 4):
        group = automorphism_group(tree)
        assert group[0].is_identity()
        members = set(group)
        for g in group:
            assert g.is_automorphism_of(tree)
            assert g.inverse() in members
            for h in group:
                assert g.compose(h) in members


def test_induced_action_is_a_homomorphism():
    for tree in enumerate_trees(4, 3):
        if len(tree) == 1:
            continue
        group = automorphism_group(tree)
        for g in group:
            for h in group:
                lhs = induced_signed_permutation(tree, g.compose(h))
                rhs = induced_signed_permutation(tree, g).compose(induced_signed_permutation(tree, h))
                assert lhs == rhs


def test_canonical_form_is_relabeling_invariant():
    rng = random.Random(7)
    for tree in enumerate_trees(6, 4):
        canon = tree.canonical_form()
        for _ in range(5):
            new = [f"v{i}" for i in range(len(tree))]
            rng.shuffle(new)
            order = list(new)
            rng.shuffle(order)
            other = tree.relabel(dict(zip(tree.vertices, new)), order=order)
            assert other.canonical_form() == canon
            assert other.is_isomorphic(tree)


def test_canonical_orientation_uses_smaller_label_as_zero():
    tree = named_tree("chain3")
    for v in tree.vertices:
        if tree.degree(v) == 2:
            assert tree.index(tree.neighbor_at_0(v)) < tree.index(tree.neighbor_at_infinity(v))


def test_json_round_trip_and_parse():
    for name in ("chain3", "paper-example-4edge", "zerodiv-5edge"):
        tree = named_tree(name)
        text = json.dumps(tree.to_json())
        assert DualTree.from_json(json.loads(text)) == tree
        assert parse_tree(text) == tree


def test_parse_tree_from_file(tmp_path):
    path = tmp_path / "tree.json"
    path.write_text(json.dumps(named_tree("star3").to_json()))
    assert parse_tree(str(path)) == named_tree("star3")


@pytest.mark.parametrize("bad", [
    {"vertices": ["a", "b", "c"], "edges": [["a", "b"]]},
    {"vertices": ["a", "b"], "edges": [["a", "b"], ["b", "a"]]},
    {"vertices": ["a", "b"], "edges": [["a", "c"]]},
])
def test_invalid_trees_rejected(bad):
    with pytest.raises(DomainError):
        DualTree.from_json(bad)


def test_unknown_name_rejected():
    with pytest.raises(DomainError):
        parse_tree("no-such-tree")
