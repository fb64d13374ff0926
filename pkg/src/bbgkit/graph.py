"""Finite simple graphs, full subgraphs, connectivity and vertex separators."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import InputError, PreconditionError

DEFAULT_BRUTE_FORCE_LIMIT = 12


def edge_key(u: str, v: str) -> tuple[str, str]:
    """Canonical unordered edge: endpoints in the global vertex order."""
    return (u, v) if u < v else (v, u)


class SimplicialGraph:
    """Immutable simple graph with string vertices in lexicographic order.

    ``weights`` optionally labels edges with positive integers (Coxeter-style
    labels used only by odd contraction).
    """

    __slots__ = ("vertices", "edges", "weights", "_adj", "_hash")

    def __init__(self, vertices: Iterable, edges: Iterable, weights=None):
        verts = tuple(sorted({str(v) for v in vertices}))
        vset = set(verts)
        keys = set()
        for e in edges:
            pair = tuple(str(x) for x in e)
            if len(pair) != 2:
                raise InputError(f"edge {e!r} does not have two endpoints")
            u, v = pair
            if u == v:
                raise InputError(f"loop at vertex {u!r}")
            for x in pair:
                if x not in vset:
                    raise InputError(f"edge endpoint {x!r} is not a declared vertex")
            keys.add(edge_key(u, v))
        adj = {v: set() for v in verts}
        for u, v in keys:
            adj[u].add(v)
            adj[v].add(u)
        self.vertices = verts
        self.edges = tuple(sorted(keys))
        self._adj = {v: frozenset(ns) for v, ns in adj.items()}
        self.weights = None
        if weights is not None:
            w = {}
            for e, m in dict(weights).items():
                k = edge_key(*e)
                if k not in keys:
                    raise InputError(f"weight given for non-edge {e!r}")
                w[k] = int(m)
            self.weights = w
        self._hash = hash((self.vertices, self.edges))

    def __eq__(self, other):
        if not isinstance(other, SimplicialGraph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"SimplicialGraph(|V|={len(self.vertices)}, |E|={len(self.edges)})"

    def __contains__(self, v):
        return v in self._adj

    def neighbors(self, v: str) -> frozenset:
        try:
            return self._adj[v]
        except KeyError:
            raise InputError(f"unknown vertex {v!r}") from None

    def degree(self, v: str) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: str, v: str) -> bool:
        return u in self._adj and v in self._adj[u]

    def require_vertex(self, v: str) -> None:
        if v not in self._adj:
            raise InputError(f"unknown vertex {v!r}")

    def require_edge(self, u: str, v: str) -> None:
        if not self.has_edge(u, v):
            raise InputError(f"({u}, {v}) is not an edge")

    def induced(self, vs: Iterable[str]) -> "SimplicialGraph":
        """The full subgraph on ``vs`` as a standalone graph."""
        vs = set(vs)
        for v in vs:
            self.require_vertex(v)
        es = [e for e in self.edges if e[0] in vs and e[1] in vs]
        w = None
        if self.weights is not None:
            w = {e: self.weights[e] for e in es if e in self.weights}
        return SimplicialGraph(vs, es, w)

    def full_subgraph(self, vs: Iterable[str]) -> "Subgraph":
        vs = frozenset(vs)
        for v in vs:
            self.require_vertex(v)
        es = frozenset(e for e in self.edges if e[0] in vs and e[1] in vs)
        return Subgraph(self, vs, es, True)

    # -- serialization -------------------------------------------------

    def to_json(self) -> dict:
        out = {"vertices": list(self.vertices), "edges": [list(e) for e in self.edges]}
        if self.weights is not None:
            out["weights"] = {f"{u}-{v}": m for (u, v), m in sorted(self.weights.items())}
        return out

    @classmethod
    def from_json(cls, data) -> "SimplicialGraph":
        if isinstance(data, str):
            try:
                data = json.loads(data)
            except json.JSONDecodeError as exc:
                raise InputError(f"invalid graph JSON: {exc}") from None
        if not isinstance(data, dict) or "vertices" not in data or "edges" not in data:
            raise InputError("graph JSON needs 'vertices' and 'edges'")
        verts = [str(v) for v in data["vertices"]]
        weights = None
        if "weights" in data:
            weights = {}
            vset = set(verts)
            for key, m in data["weights"].items():
                pair = _split_weight_key(str(key), vset)
                weights[pair] = m
        return cls(verts, data["edges"], weights)

    def to_dot(self, red_edges=(), dashed_edges=(), name="G") -> str:
        red = {edge_key(*e) for e in red_edges}
        dashed = {edge_key(*e) for e in dashed_edges}
        lines = [f"graph {name} {{"]
        for v in self.vertices:
            lines.append(f'  "{v}";')
        for e in self.edges:
            attrs = []
            if e in red:
                attrs.append("color=red")
            if e in dashed:
                attrs.append("style=dashed")
            tail = f" [{', '.join(attrs)}]" if attrs else ""
            lines.append(f'  "{e[0]}" -- "{e[1]}"{tail};')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _split_weight_key(key: str, vset: set) -> tuple[str, str]:
    # vertex names may themselves contain '-', so try every split point
    for i, ch in enumerate(key):
        if ch == "-" and key[:i] in vset and key[i + 1:] in vset:
            return edge_key(key[:i], key[i + 1:])
    raise InputError(f"weight key {key!r} does not name two vertices")


@dataclass(frozen=True)
class Subgraph:
    parent: SimplicialGraph
    vertices: frozenset
    edges: frozenset
    is_full: bool

    def __post_init__(self):
        for u, v in self.edges:
            if not self.parent.has_edge(u, v):
                raise InputError(f"({u}, {v}) is not an edge of the parent graph")
            if u not in self.vertices or v not in self.vertices:
                raise InputError(f"edge ({u}, {v}) leaves the vertex subset")
        if self.is_full:
            induced = {e for e in self.parent.edges if e[0] in self.vertices and e[1] in self.vertices}
            if induced != set(self.edges):
                raise InputError("subgraph flagged full but misses induced edges")

    def sorted_vertices(self) -> tuple:
        return tuple(sorted(self.vertices))

    def sorted_edges(self) -> tuple:
        return tuple(sorted(self.edges))

    def __repr__(self):
        return f"Subgraph({{{', '.join(self.sorted_vertices())}}})"


@dataclass(frozen=True)
class OrientedEdge:
    tail: str
    head: str

    def reversed(self) -> "OrientedEdge":
        return OrientedEdge(self.head, self.tail)

    @property
    def key(self):
        return edge_key(self.tail, self.head)


def oriented(g: SimplicialGraph, tail: str, head: str) -> OrientedEdge:
    if tail == head:
        raise InputError("an oriented edge needs distinct endpoints")
    g.require_edge(tail, head)
    return OrientedEdge(tail, head)


def link(g: SimplicialGraph, v: str) -> Subgraph:
    return g.full_subgraph(g.neighbors(v))


def star(g: SimplicialGraph, v: str) -> Subgraph:
    return g.full_subgraph(g.neighbors(v) | {v})


def components(g: SimplicialGraph, vs: Iterable[str] | None = None) -> list[frozenset]:
    """Connected components of the full subgraph on ``vs`` (default: all)."""
    allowed = set(g.vertices if vs is None else vs)
    seen = set()
    out = []
    for s in sorted(allowed):
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        while stack:
            x = stack.pop()
            for y in g.neighbors(x):
                if y in allowed and y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        out.append(frozenset(comp))
    return out


def is_connected(g: SimplicialGraph) -> bool:
    return len(g.vertices) > 0 and len(components(g)) == 1


def require_connected(g: SimplicialGraph) -> None:
    comps = components(g)
    if len(comps) != 1:
        listing = "; ".join("{" + ", ".join(sorted(c)) + "}" for c in comps)
        raise PreconditionError(f"graph is not connected; components: {listing}")


def _articulation_dfs(g: SimplicialGraph):
    """Iterative Hopcroft-Tarjan lowpoint search.

    Returns (articulation points, blocks as edge sets).
    """
    index = {}
    low = {}
    cuts = set()
    blocks = []
    edge_stack = []
    counter = 0
    for root in g.vertices:
        if root in index:
            continue
        index[root] = low[root] = counter
        counter += 1
        root_children = 0
        stack = [(root, None, iter(sorted(g.neighbors(root))))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if w not in index:
                    edge_stack.append(edge_key(v, w))
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append((w, v, iter(sorted(g.neighbors(w)))))
                    advanced = True
                    break
                if index[w] < index[v]:
                    edge_stack.append(edge_key(v, w))
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            stack.pop()
            if parent is None:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= index[parent]:
                if parent == root:
                    root_children += 1
                else:
                    cuts.add(parent)
                block = set()
                target = edge_key(parent, v)
                while True:
                    e = edge_stack.pop()
                    block.add(e)
                    if e == target:
                        break
                blocks.append(frozenset(block))
        if root_children > 1:
            cuts.add(root)
    return cuts, blocks


def articulation_points(g: SimplicialGraph) -> list[str]:
    return sorted(_articulation_dfs(g)[0])


def is_biconnected(g: SimplicialGraph) -> tuple[bool, str | None]:
    """(True, None) or (False, cut vertex) for a connected graph on >= 2 vertices."""
    require_connected(g)
    if len(g.vertices) < 2:
        raise PreconditionError("biconnectivity needs at least two vertices")
    cuts = articulation_points(g)
    return (False, cuts[0]) if cuts else (True, None)


def biconnected_components(g: SimplicialGraph) -> list[Subgraph]:
    require_connected(g)
    out = []
    for block in _articulation_dfs(g)[1]:
        vs = frozenset(x for e in block for x in e)
        out.append(Subgraph(g, vs, block, True))
    out.sort(key=lambda s: (s.sorted_vertices()))
    return out


def is_separating(g: SimplicialGraph, s: Iterable[str]) -> bool:
    s = set(s)
    for v in s:
        g.require_vertex(v)
    if len(s) >= len(g.vertices):
        raise InputError("a separating set must leave some vertex behind")
    rest = [v for v in g.vertices if v not in s]
    return len(components(g, rest)) > 1


def _separator_key(s: frozenset):
    return (len(s), tuple(sorted(s)))


def _inclusion_minimal(sets: Iterable[frozenset]) -> list[frozenset]:
    ordered = sorted(set(sets), key=_separator_key)
    kept = []
    for s in ordered:
        if not any(k < s for k in kept):
            kept.append(s)
    return kept


def minimal_pair_separators(g: SimplicialGraph) -> set[frozenset]:
    """All minimal a-b separators, by close-separator expansion.

    Seeds are the neighbourhoods of components of G - N[v]; each separator
    S is expanded through the components of G - (S u N(x)) for x in S.
    """
    verts = set(g.vertices)

    def seps_avoiding(blocked):
        for comp in components(g, verts - blocked):
            boundary = frozenset(y for x in comp for y in g.neighbors(x) if y not in comp)
            if boundary:
                yield boundary

    found = set()
    queue = []
    for v in g.vertices:
        for s in seps_avoiding(g.neighbors(v) | {v}):
            if s not in found:
                found.add(s)
                queue.append(s)
    while queue:
        s = queue.pop()
        for x in sorted(s):
            for t in seps_avoiding(s | g.neighbors(x)):
                if t not in found:
                    found.add(t)
                    queue.append(t)
    return found


def separators_brute_force(g: SimplicialGraph) -> list[frozenset]:
    """Inclusion-minimal separating vertex sets by exhaustive enumeration."""
    n = len(g.vertices)
    hits = []
    for k in range(0, n - 1):
        for combo in itertools.combinations(g.vertices, k):
            s = frozenset(combo)
            if any(h <= s for h in hits):
                continue
            if is_separating(g, s):
                hits.append(s)
    return sorted(hits, key=_separator_key)


def minimal_separator_sets(g: SimplicialGraph, brute_force_below: int = 0) -> list[frozenset]:
    """Inclusion-minimal separating vertex sets, deterministically ordered.

    Graphs with fewer than ``brute_force_below`` vertices are handled by
    exhaustive enumeration instead (used as an oracle).
    """
    require_connected(g)
    if len(g.vertices) < 3:
        raise PreconditionError("separator enumeration needs at least three vertices")
    if len(g.vertices) < brute_force_below:
        return separators_brute_force(g)
    return _inclusion_minimal(minimal_pair_separators(g))


def minimal_full_separating_subgraphs(g: SimplicialGraph, brute_force_below: int = 0) -> list[Subgraph]:
    return [g.full_subgraph(s) for s in minimal_separator_sets(g, brute_force_below)]


def tree_path(adj: dict, source: str, target: str) -> list[str]:
    """Vertex path between two vertices of a tree given as adjacency dict."""
    prev = {source: None}
    stack = [source]
    while stack:
        x = stack.pop()
        if x == target:
            break
        for y in adj[x]:
            if y not in prev:
                prev[y] = x
                stack.append(y)
    if target not in prev:
        raise InputError(f"{source!r} and {target!r} are not joined in the tree")
    path = [target]
    while path[-1] != source:
        path.append(prev[path[-1]])
    path.reverse()
    return path


def bfs_distances(adj: dict, source: str) -> dict:
    dist = {source: 0}
    frontier = [source]
    while frontier:
        nxt = []
        for x in frontier:
            for y in adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    nxt.append(y)
        frontier = nxt
    return dist


def iter_edges_of(vs: Iterable[str], g: SimplicialGraph) -> Iterator[tuple[str, str]]:
    vs = set(vs)
    return (e for e in g.edges if e[0] in vs and e[1] in vs)
