"""Mumford classes on each stratum and their expression in Chern classes."""

from chow_strata import chern_roots, kappa, kappa_zero, named_tree, verify_defmumpol
from chow_strata.dual_trees import STRATA_NAMES
from chow_strata.mumford import naive_kappa_zero

for name in STRATA_NAMES:
    tree = named_tree(name)
    data = chern_roots(tree)
    print(f"{name}: c1 = {data.c1}, c2 = {data.c2}, c3 = {data.c3}")
    for m in (1, 2, 3, 4):
        print(f"  kappa_{m} = {kappa(tree, m)}")
    print(f"  identities in c1, c2, c3 hold: {verify_defmumpol(tree)}")

star = named_tree("star3")
print(f"\nkappa_0 = {kappa_zero(star)}; the power-sum formula at m = 0 would give {naive_kappa_zero(star)}")
