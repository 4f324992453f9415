"""Fixed-point computations on P^1 with a one-dimensional torus."""

from chow_strata import builtin_classes, named_tree, pushforward
from chow_strata.equivariant_p1 import pushforward_table
from chow_strata.mumford import kappa, kappa_via_localization

K, Q, R, one = builtin_classes()
for label, c in [("K", K), ("Q", Q), ("R", R), ("-K-R", -K - R), ("-K-R-Q", -K - R - Q)]:
    print(f"{label:7s} at 0: {c.at_zero!s:4s} at inf: {c.at_infinity}")

print()
for h in range(4):
    print(f"F_*(K^{2 * h + 1}) = {pushforward(K ** (2 * h + 1))}")

rows = pushforward_table(10)
print(f"\n{sum(got == want for *_, got, want in rows)}/{len(rows)} pushforward identities hold")

tree = named_tree("chain3")
for m in (1, 2, 3):
    print(f"chain3 kappa_{m}: localization {kappa_via_localization(tree, m)} | closed form {kappa(tree, m)}")
