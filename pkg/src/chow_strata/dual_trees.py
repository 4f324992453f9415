"""Dual trees of nodal rational curves.

A :class:`DualTree` has one vertex per component and one edge per node.
Vertices of degree two carry an orientation ``(neighbor_at_0,
neighbor_at_infinity)`` recording which node sits at ``0`` and which at
``infinity`` in the fixed coordinates of that component.  Swapping an
orientation flips the sign of the corresponding ``r`` variable; all
results are covariant under that change.

Canonical labels are ``"0", "1", ...`` assigned breadth-first from the
tree center, children ordered by their AHU codes.
"""

from __future__ import annotations

import json
import re
from collections import deque
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import DomainError, MultiplicityError
from .exact_poly import SignedPermutation

__all__ = [
    "DualTree",
    "TreeAutomorphism",
    "enumerate_trees",
    "automorphism_group",
    "degree_partition",
    "variable_names",
    "induced_signed_permutation",
    "named_tree",
    "parse_tree",
    "NAMED_TREES",
    "STRATA_NAMES",
]

MAX_ENUMERATION_EDGES = 8


class DualTree:
    """A finite tree with orientations on its degree-two vertices.

    ``orientation`` may be omitted; each degree-two vertex then gets the
    neighbor appearing first in ``vertices`` as its node at ``0``.
    """


    def __init__(
        self,
        vertices: Sequence[str],
        edges: Iterable[Sequence[str]],
        orientation: Mapping[str, Sequence[str]] | None = None,
    ):
        vertices = tuple(str(v) for v in vertices)
        if not vertices:
            raise DomainError("a tree needs at least one vertex")
        if len(set(vertices)) != len(vertices):
            raise DomainError("duplicate vertex ids")
        index = {v: i for i, v in enumerate(vertices)}
        adj: dict = {v: set() for v in vertices}
        edge_set = set()
        for e in edges:
            a, b = (str(x) for x in e)
            if a not in index or b not in index:
                raise DomainError(f"edge ({a}, {b}) uses an unknown vertex")
            if a == b:
                raise DomainError(f"loop at {a}")
            key = (a, b) if index[a] < index[b] else (b, a)
            if key in edge_set:
                raise DomainError(f"repeated edge {key}")
            edge_set.add(key)
            adj[a].add(b)
            adj[b].add(a)
        if len(edge_set) != len(vertices) - 1:
            raise DomainError("a tree on n vertices has exactly n-1 edges")
        seen = {vertices[0]}
        queue = deque([vertices[0]])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        if len(seen) != len(vertices):
            raise DomainError("graph is not connected")

        self.vertices = vertices
        self._index = index
        self._adj = {v: tuple(sorted(adj[v], key=index.__getitem__)) for v in vertices}
        self.edges = tuple(sorted(edge_set, key=lambda e: (index[e[0]], index[e[1]])))

        orient = {}
        given = dict(orientation or {})
        for v in vertices:
            nbrs = self._adj[v]
            if len(nbrs) != 2:
                if v in given:
                    raise DomainError(f"orientation given for vertex {v} of degree {len(nbrs)}")
                continue
            if v in given:
                n0, ninf = (str(x) for x in given.pop(v))
                if {n0, ninf} != set(nbrs) or n0 == ninf:
                    raise DomainError(f"orientation of {v} must list its two neighbors {nbrs}")
                orient[v] = (n0, ninf)
            else:
                orient[v] = nbrs
        if given:
            raise DomainError(f"orientation given for unknown vertices {sorted(given)}")
        self.orientation = orient

    # -- basic structure -------------------------------------------------

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def index(self, v: str) -> int:
        return self._index[v]

    def neighbors(self, v: str) -> tuple:
        return self._adj[v]

    def degree(self, v: str) -> int:
        return len(self._adj[v])

    def max_degree(self) -> int:
        return max(len(n) for n in self._adj.values())

    def has_edge(self, a: str, b: str) -> bool:
        return b in self._adj.get(a, ())

    def edge(self, a: str, b: str) -> tuple:
        """The stored form of the edge joining ``a`` and ``b``."""
        if not self.has_edge(a, b):
            raise DomainError(f"({a}, {b}) is not an edge")
        return (a, b) if self._index[a] < self._index[b] else (b, a)

    def neighbor_at_0(self, v: str) -> str:
        return self.orientation[v][0]

    def neighbor_at_infinity(self, v: str) -> str:
        return self.orientation[v][1]

    def __eq__(self, other) -> bool:
        if not isinstance(other, DualTree):
            return NotImplemented
        return (
            self.vertices == other.vertices
            and set(self.edges) == set(other.edges)
            and self.orientation == other.orientation
        )

    def __hash__(self) -> int:
        return hash((self.vertices, frozenset(self.edges), frozenset(self.orientation.items())))

    def __repr__(self) -> str:
        return f"DualTree(vertices={list(self.vertices)}, edges={[list(e) for e in self.edges]})"

    # -- relabeling and canonical form -----------------------------------

    def relabel(self, mapping: Mapping[str, str], order: Sequence[str] | None = None) -> DualTree:
        """Rename vertices; orientations follow the renaming."""
        new_vertices = list(order) if order is not None else [mapping[v] for v in self.vertices]
        return DualTree(
            new_vertices,
            [(mapping[a], mapping[b]) for a, b in self.edges],
            {mapping[v]: (mapping[n0], mapping[n1]) for v, (n0, n1) in self.orientation.items()},
        )

    def centers(self) -> list:
        if len(self.vertices) <= 2:
            return list(self.vertices)
        deg = {v: len(n) for v, n in self._adj.items()}
        layer = [v for v in self.vertices if deg[v] == 1]
        remaining = len(self.vertices)
        while remaining > 2:
            remaining -= len(layer)
            nxt = []
            for v in layer:
                for w in self._adj[v]:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
            layer = nxt
        return sorted(layer, key=self._index.__getitem__)

    def _codes(self, root: str) -> dict:
        codes: dict = {}
        parent = {root: None}
        order = [root]
        for v in order:
            for w in self._adj[v]:
                if w != parent[v]:
                    parent[w] = v
                    order.append(w)
        for v in reversed(order):
            kids = sorted((codes[w] for w in self._adj[v] if w != parent[v]), key=_code_key)
            codes[v] = "(" + "".join(kids) + ")"
        return codes

    @cached_property
    def _canonical(self) -> tuple:
        best = None
        for c in self.centers():
            codes = self._codes(c)
            if best is None or _code_key(codes[c]) < _code_key(best[1][best[0]]):
                best = (c, codes)
        root, codes = best
        labels = {root: "0"}
        order = [root]
        parent = {root: None}
        for v in order:
            kids = sorted((w for w in self._adj[v] if w != parent[v]), key=lambda w: _code_key(codes[w]))
            for w in kids:
                parent[w] = v
                labels[w] = str(len(order))
                order.append(w)
        return codes[root], labels

    def canonical_key(self) -> str:
        """AHU code of the tree rooted at its canonical center."""
        return self._canonical[0]

    def canonical_labeling(self) -> dict:
        """Map from this tree's vertices to canonical labels."""
        return dict(self._canonical[1])

    def canonical_form(self) -> DualTree:
        """Canonical representative with default orientations."""
        labels = self._canonical[1]
        n = len(self.vertices)
        return DualTree([str(i) for i in range(n)], [(labels[a], labels[b]) for a, b in self.edges])

    def is_isomorphic(self, other: DualTree) -> bool:
        return len(self) == len(other) and self.canonical_key() == other.canonical_key()

    # -- serialization ---------------------------------------------------

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": [list(e) for e in self.edges],
            "orientation": {v: list(o) for v, o in self.orientation.items()},
        }

    @classmethod
    def from_json(cls, data: Mapping) -> DualTree:
        try:
            return cls(data["vertices"], data["edges"], data.get("orientation"))
        except (KeyError, TypeError) as exc:
            raise DomainError("tree JSON needs 'vertices' and 'edges'") from exc


def _code_key(code: str) -> tuple:
    return (len(code), code)


class TreeAutomorphism:
    """A vertex bijection preserving edges."""

    __slots__ = ("mapping",)

    def __init__(self, mapping: Mapping[str, str]):
        self.mapping = dict(mapping)

    def __call__(self, v: str) -> str:
        return self.mapping[v]

    def compose(self, other: TreeAutomorphism) -> TreeAutomorphism:
        """``self o other``: apply ``other`` first."""
        return TreeAutomorphism({v: self.mapping[w] for v, w in other.mapping.items()})

    def inverse(self) -> TreeAutomorphism:
        return TreeAutomorphism({w: v for v, w in self.mapping.items()})

    def is_identity(self) -> bool:
        return all(v == w for v, w in self.mapping.items())

    def is_automorphism_of(self, tree: DualTree) -> bool:
        if sorted(self.mapping) != sorted(tree.vertices) or sorted(self.mapping.values()) != sorted(tree.vertices):
            return False
        return all(tree.has_edge(self.mapping[a], self.mapping[b]) for a, b in tree.edges)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TreeAutomorphism):
            return NotImplemented
        return self.mapping == other.mapping

    def __hash__(self) -> int:
        return hash(frozenset(self.mapping.items()))

    def __repr__(self) -> str:
        moved = {v: w for v, w in self.mapping.items() if v != w}
        return f"TreeAutomorphism({moved or 'id'})"


def tree_isomorphisms(source: DualTree, target: DualTree) -> list:
    """All vertex bijections ``source -> target`` preserving edges.

    Backtracking in breadth-first order from the first vertex of
    ``source``; each vertex must land next to the image of its parent.
    """
    if len(source) != len(target) or source.canonical_key() != target.canonical_key():
        return []
    root = source.vertices[0]
    order = [root]
    parent = {root: None}
    for v in order:
        for w in source.neighbors(v):
            if w not in parent:
                parent[w] = v
                order.append(w)
    results = []
    image: dict = {}
    used: set = set()

    def extend(i: int) -> None:
        if i == len(order):
            results.append(dict(image))
            return
        v = order[i]
        p = parent[v]
        pool = target.vertices if p is None else target.neighbors(image[p])
        for w in pool:
            if w in used or target.degree(w) != source.degree(v):
                continue
            image[v] = w
            used.add(w)
            extend(i + 1)
            used.discard(w)
            del image[v]

    extend(0)
    results.sort(key=lambda m: tuple(target.index(m[v]) for v in source.vertices))
    return results


def automorphism_group(tree: DualTree) -> list:
    """The full automorphism group; the identity comes first."""
    return [TreeAutomorphism(m) for m in tree_isomorphisms(tree, tree)]


def degree_partition(tree: DualTree) -> tuple:
    """Vertices of degree 1, 2, 3 in vertex order.

    The single-vertex tree gives three empty lists.
    """
    if tree.max_degree() > 3:
        bad = [v for v in tree.vertices if tree.degree(v) > 3]
        raise MultiplicityError(f"vertices {bad} have more than three nodes")
    parts: tuple = ([], [], [])
    for v in tree.vertices:
        d = tree.degree(v)
        if d:
            parts[d - 1].append(v)
    return parts


def variable_names(tree: DualTree) -> dict:
    """Vertex -> ``t_i`` for leaves and ``r_j`` for degree-two vertices."""
    leaves, middles, _ = degree_partition(tree)
    names = {v: f"t{i}" for i, v in enumerate(leaves, 1)}
    names.update({v: f"r{j}" for j, v in enumerate(middles, 1)})
    return names


def induced_signed_permutation(tree: DualTree, g: TreeAutomorphism) -> SignedPermutation:
    """Action of an automorphism on the ``t``/``r`` variables.

    ``r_v`` goes to ``-r_{g(v)}`` exactly when ``g`` carries the node at
    ``0`` of ``v`` to the node at ``infinity`` of ``g(v)``.
    """
    if not g.is_automorphism_of(tree):
        raise DomainError(f"{g!r} is not an automorphism of the tree")
    names = variable_names(tree)
    out = {}
    for v, name in names.items():
        w = g(v)
        sign = 1
        if tree.degree(v) == 2 and g(tree.neighbor_at_0(v)) != tree.neighbor_at_0(w):
            sign = -1
        out[name] = (names[w], sign)
    return SignedPermutation(out)


def enumerate_trees(max_edges: int, max_multiplicity: int = 3) -> list:
    """One canonical tree per isomorphism class with at most ``max_edges`` edges.

    Ordered by edge count, then by canonical code.
    """
    if not 0 <= max_edges <= MAX_ENUMERATION_EDGES:
        raise DomainError(f"max_edges must lie in 0..{MAX_ENUMERATION_EDGES}")
    if max_multiplicity not in (3, 4):
        raise DomainError("max_multiplicity must be 3 or 4")
    level = {"()": DualTree(["0"], [])}
    result = [level["()"]]
    for _ in range(max_edges):
        nxt: dict = {}
        for tree in level.values():
            new = str(len(tree))
            for v in tree.vertices:
                if tree.degree(v) >= max_multiplicity:
                    continue
                grown = DualTree(list(tree.vertices) + [new], list(tree.edges) + [(v, new)])
                key = grown.canonical_key()
                if key not in nxt:
                    nxt[key] = grown.canonical_form()
        level = {k: nxt[k] for k in sorted(nxt, key=_code_key)}
        result.extend(level.values())
    return result


def _path(n_edges: int) -> DualTree:
    vs = [str(i) for i in range(n_edges + 1)]
    return DualTree(vs, list(zip(vs, vs[1:]))).canonical_form()


def _star(n_leaves: int) -> DualTree:
    vs = [str(i) for i in range(n_leaves + 1)]
    return DualTree(vs, [("0", v) for v in vs[1:]]).canonical_form()


NAMED_TREES = {
    "point": lambda: DualTree(["0"], []),
    "edge": lambda: _path(1),
    "chain2": lambda: _path(2),
    "chain3": lambda: _path(3),
    "star3": lambda: _star(3),
    # Four-edge target of the worked deformation example; keeps its letters.
    "paper-example-4edge": lambda: DualTree(
        ["P", "Q", "R", "S", "T"], [("P", "R"), ("Q", "R"), ("R", "S"), ("S", "T")]
    ),
    # Two adjacent trivalent components, two leaves each.
    "zerodiv-5edge": lambda: DualTree(
        ["X", "Y", "A", "B", "C", "D"],
        [("X", "Y"), ("X", "A"), ("X", "B"), ("Y", "C"), ("Y", "D")],
    ),
}

# The five strata of curves with at most three nodes.
STRATA_NAMES = ("point", "edge", "chain2", "chain3", "star3")

_FAMILY_RE = re.compile(r"^(chain|star)(\d+)$")


def named_tree(name: str) -> DualTree:
    """Shorthand trees; also ``chain<k>`` (k edges) and ``star<k>`` (k leaves)."""
    if name in NAMED_TREES:
        return NAMED_TREES[name]()
    m = _FAMILY_RE.match(name)
    if m:
        k = int(m.group(2))
        if m.group(1) == "chain":
            if k > MAX_ENUMERATION_EDGES:
                raise DomainError(f"chain length {k} beyond guard")
            return _path(k)
        if not 1 <= k <= MAX_ENUMERATION_EDGES:
            raise DomainError(f"star size {k} out of range")
        return _star(k)
    raise DomainError(f"unknown tree name {name!r}")


def parse_tree(text: str) -> DualTree:
    """A shorthand name, a JSON object, or a path to a JSON file."""
    text = text.strip()
    if text.startswith("{"):
        try:
            return DualTree.from_json(json.loads(text))
        except json.JSONDecodeError as exc:
            raise DomainError(f"invalid tree JSON: {exc}") from exc
    try:
        return named_tree(text)
    except DomainError:
        pass
    try:
        with open(text) as fh:
            return DualTree.from_json(json.load(fh))
    except FileNotFoundError:
        raise DomainError(f"unknown tree {text!r}") from None
