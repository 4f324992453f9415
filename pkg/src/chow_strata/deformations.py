"""Ordered deformations ``d: G' -> G`` between dual trees.

An ordered deformation is a surjective vertex map with connected fibers
such that every edge of ``G'`` joining different fibers lies over an edge
of ``G``.  Equivalently: contract ``|E(G')| - |E(G)|`` edges of ``G'`` and
identify the quotient with ``G``.  Enumeration uses that description;
:func:`is_ordered_deformation` checks the defining conditions directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Mapping, Sequence

from .dual_trees import DualTree, TreeAutomorphism, automorphism_group, tree_isomorphisms
from .errors import ConsistencyError, DomainError

__all__ = [
    "OrderedDeformation",
    "DeformationClass",
    "is_ordered_deformation",
    "enumerate_ordered_deformations",
    "quotient",
    "persistent_edges",
    "contracted_edges",
]

BY_GAMMA = "gamma"
BY_GAMMA_PRIME = "gammaprime"
_KIND_ALIASES = {
    "gamma": BY_GAMMA,
    "bygamma": BY_GAMMA,
    "gammaprime": BY_GAMMA_PRIME,
    "bygammaprime": BY_GAMMA_PRIME,
}


def _fibers_connected(source: DualTree, mapping: Mapping[str, str]) -> bool:
    fibers: dict = {}
    for v in source.vertices:
        fibers.setdefault(mapping[v], []).append(v)
    for members in fibers.values():
        members_set = set(members)
        seen = {members[0]}
        stack = [members[0]]
        while stack:
            v = stack.pop()
            for w in source.neighbors(v):
                if w in members_set and w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != len(members):
            return False
    return True


def is_ordered_deformation(target: DualTree, source: DualTree, mapping: Mapping[str, str]) -> bool:
    """Check surjectivity, connected fibers and edge compatibility."""
    if set(mapping) != set(source.vertices):
        return False
    if set(mapping.values()) != set(target.vertices):
        return False
    if not _fibers_connected(source, mapping):
        return False
    return all(
        mapping[p] == mapping[q] or target.has_edge(mapping[p], mapping[q])
        for p, q in source.edges
    )


@dataclass(frozen=True, eq=False)
class OrderedDeformation:
    """``vertex_map`` sends vertices of ``source`` (the degenerate tree) onto ``target``."""

    source: DualTree
    target: DualTree
    vertex_map: dict

    def __post_init__(self):
        if not is_ordered_deformation(self.target, self.source, self.vertex_map):
            raise DomainError(f"{self.format()} is not an ordered deformation")

    def __call__(self, v: str) -> str:
        return self.vertex_map[v]

    def key(self) -> tuple:
        return tuple(self.target.index(self.vertex_map[v]) for v in self.source.vertices)

    def __eq__(self, other) -> bool:
        if not isinstance(other, OrderedDeformation):
            return NotImplemented
        return self.vertex_map == other.vertex_map and self.source == other.source and self.target == other.target

    def __hash__(self) -> int:
        return hash(frozenset(self.vertex_map.items()))

    def fiber(self, a: str) -> list:
        return [v for v in self.source.vertices if self.vertex_map[v] == a]

    def postcompose(self, g: TreeAutomorphism) -> OrderedDeformation:
        """``g o d`` for ``g`` an automorphism of the target."""
        return OrderedDeformation(self.source, self.target, {v: g(a) for v, a in self.vertex_map.items()})

    def precompose(self, g: TreeAutomorphism) -> OrderedDeformation:
        """``d o g`` for ``g`` an automorphism of the source."""
        return OrderedDeformation(self.source, self.target, {v: self.vertex_map[g(v)] for v in self.source.vertices})

    def lifted_edge(self, a: str, b: str) -> tuple:
        """The unique source edge ``(P, Q)`` with ``d(P) = a`` and ``d(Q) = b``."""
        found = [
            (p, q) if self.vertex_map[p] == a else (q, p)
            for p, q in self.source.edges
            if {self.vertex_map[p], self.vertex_map[q]} == {a, b} and a != b
        ]
        if len(found) != 1:
            raise ConsistencyError(f"edge ({a}, {b}) has {len(found)} lifts under {self.format()}")
        return found[0]

    def format(self) -> str:
        return "{" + ", ".join(f"{v}:{self.vertex_map[v]}" for v in self.source.vertices) + "}"

    def __repr__(self) -> str:
        return f"OrderedDeformation({self.format()})"


@dataclass(frozen=True)
class DeformationClass:
    """One orbit of ordered deformations under the chosen automorphism group."""

    representatives: tuple
    quotient_kind: str
    stabilizer_size: int
    group_order: int

    @property
    def orbit_size(self) -> int:
        return len(self.representatives)

    @property
    def representative(self) -> OrderedDeformation:
        return self.representatives[0]


def enumerate_ordered_deformations(target: DualTree, source: DualTree) -> list:
    """All ordered deformations of ``target`` (G) into ``source`` (G').

    Sorted by the images of the source vertices in target vertex order.
    """
    k = source.n_edges - target.n_edges
    if k < 0:
        return []
    results = []
    for contracted in combinations(source.edges, k):
        parent = {v: v for v in source.vertices}

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for p, q in contracted:
            rp, rq = find(p), find(q)
            if source.index(rp) > source.index(rq):
                rp, rq = rq, rp
            parent[rq] = rp
        reps = [v for v in source.vertices if find(v) == v]
        quotient_tree = DualTree(
            reps,
            [(find(p), find(q)) for p, q in source.edges if find(p) != find(q)],
        )
        for iso in tree_isomorphisms(quotient_tree, target):
            results.append(
                OrderedDeformation(source, target, {v: iso[find(v)] for v in source.vertices})
            )
    results.sort(key=OrderedDeformation.key)
    return results


def quotient(defs: Sequence[OrderedDeformation], kind: str) -> list:
    """Split ``defs`` into orbits under ``Aut(G)`` or ``Aut(G')``.

    ``kind`` is ``"gamma"`` (postcomposition) or ``"gammaprime"``
    (precomposition).  Classes appear in order of their first member.
    """
    kind = _KIND_ALIASES.get(kind.lower().replace("_", "").replace("-", ""))
    if kind is None:
        raise DomainError("quotient kind must be 'gamma' or 'gammaprime'")
    if not defs:
        return []
    target, source = defs[0].target, defs[0].source
    if kind == BY_GAMMA:
        group = automorphism_group(target)
        act = OrderedDeformation.postcompose
    else:
        group = automorphism_group(source)
        act = OrderedDeformation.precompose
    position = {d: i for i, d in enumerate(defs)}
    assigned = set()
    classes = []
    for d in defs:
        if d in assigned:
            continue
        images = [act(d, g) for g in group]
        orbit = sorted(set(images), key=position.__getitem__)
        missing = [e for e in orbit if e not in position]
        if missing:
            raise ConsistencyError("orbit leaves the given deformation set; input is incomplete")
        stabilizer = sum(1 for e in images if e == d)
        assigned.update(orbit)
        classes.append(DeformationClass(tuple(orbit), kind, stabilizer, len(group)))
    return classes


def persistent_edges(d: OrderedDeformation) -> list:
    """Source edges joining different fibers; one per edge of the target."""
    out = [(p, q) for p, q in d.source.edges if d(p) != d(q)]
    if len(out) != d.target.n_edges:
        raise ConsistencyError(
            f"{len(out)} persistent edges but the target has {d.target.n_edges}"
        )
    return out


def contracted_edges(d: OrderedDeformation) -> list:
    """Source edges inside a fiber; ``|E(G')| - |E(G)|`` of them."""
    return [(p, q) for p, q in d.source.edges if d(p) == d(q)]
