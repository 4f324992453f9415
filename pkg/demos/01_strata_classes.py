"""Strata classes of the five strata and how they restrict to one another."""

from chow_strata import build_presentation, gamma_class, global_gamma, named_tree
from chow_strata.dual_trees import STRATA_NAMES

for name in STRATA_NAMES[1:]:
    tree = named_tree(name)
    pres = build_presentation(tree)
    print(f"{name:7s} ring Q[{', '.join(pres.variables)}], sigma = {pres.sigma}")
    print(f"        class on itself: {gamma_class(tree)}")

print()
print("The divisor of one-node curves, restricted to every stratum:")
g = global_gamma(named_tree("edge"))
for name in STRATA_NAMES:
    print(f"  {name:7s} {g[name]}")

# A tree with two adjacent trivalent vertices has a vanishing class.
print()
print("two adjacent trivalent vertices:", gamma_class(named_tree("zerodiv-5edge")))
