"""Ordered deformations of a one-node curve into a four-node curve."""

from chow_strata import DualTree, enumerate_ordered_deformations, named_tree, persistent_edges, quotient

gamma = DualTree(["A", "B"], [("A", "B")])
gamma_prime = named_tree("paper-example-4edge")
print("target edges:", gamma_prime.edges)

defs = enumerate_ordered_deformations(gamma, gamma_prime)
index = {d: i for i, d in enumerate(defs, 1)}
for d in defs:
    (edge,) = persistent_edges(d)
    print(f"{index[d]}) {d.format()}   node kept: {edge[0]}-{edge[1]}")

for kind in ("gamma", "gammaprime"):
    classes = quotient(defs, kind)
    groups = [sorted(index[d] for d in c.representatives) for c in classes]
    print(f"modulo automorphisms ({kind}): {len(classes)} classes {groups}")
