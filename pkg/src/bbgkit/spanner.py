"""Spanning trees, tree 2-spanners, dual graphs and fan/cone decompositions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import networkx as nx

from .errors import InputError, PreconditionError
from .flag import FlagComplex, build_flag_complex, classify_boundary, edge_triangle_counts
from .graph import (
    OrientedEdge,
    SimplicialGraph,
    bfs_distances,
    components,
    edge_key,
    require_connected,
    tree_path,
)


class SpanningTree:
    """Oriented spanning tree whose edge order fixes the coordinates y_1..y_m."""

    __slots__ = ("parent", "edges", "keys", "_pos", "_adj")

    def __init__(self, parent: SimplicialGraph, oriented_edges: Sequence[OrientedEdge]):
        self.parent = parent
        self.edges = tuple(oriented_edges)
        self.keys = tuple(e.key for e in self.edges)
        self._pos = {k: i for i, k in enumerate(self.keys)}
        n = len(parent.vertices)
        if len(self._pos) != len(self.keys):
            raise InputError("tree lists an edge twice")
        for e in self.edges:
            if e.tail == e.head or not parent.has_edge(e.tail, e.head):
                raise InputError(f"({e.tail}, {e.head}) is not an edge of the graph")
        if len(self.keys) != n - 1:
            raise InputError(f"a spanning tree needs {n - 1} edges, got {len(self.keys)}")
        adj = {v: set() for v in parent.vertices}
        for u, v in self.keys:
            adj[u].add(v)
            adj[v].add(u)
        self._adj = {v: frozenset(s) for v, s in adj.items()}
        if n and len(bfs_distances(self._adj, parent.vertices[0])) != n:
            raise InputError("edges do not span the graph")

    @classmethod
    def from_pairs(cls, g: SimplicialGraph, pairs: Iterable, oriented: bool = False) -> "SpanningTree":
        """Build from vertex pairs; unoriented pairs point from smaller to larger."""
        out = []
        for p in pairs:
            a, b = (str(x) for x in p)
            if not oriented:
                a, b = edge_key(a, b)
            out.append(OrientedEdge(a, b))
        return cls(g, out)

    def __eq__(self, other):
        return isinstance(other, SpanningTree) and self.parent == other.parent and self.edges == other.edges

    def __hash__(self):
        return hash((self.parent, self.edges))

    def __repr__(self):
        return "SpanningTree(" + ", ".join(f"{e.tail}>{e.head}" for e in self.edges) + ")"

    def __len__(self):
        return len(self.edges)

    @property
    def adjacency(self) -> dict:
        return self._adj

    def position(self, u: str, v: str) -> int | None:
        return self._pos.get(edge_key(u, v))

    def contains(self, u: str, v: str) -> bool:
        return edge_key(u, v) in self._pos

    def path(self, u: str, v: str) -> list[str]:
        return tree_path(self._adj, u, v)

    def signed_path(self, u: str, v: str) -> list[tuple[int, int]]:
        """Coordinates (index, +-1) met walking the tree from u to v."""
        out = []
        walk = self.path(u, v)
        for a, b in zip(walk, walk[1:]):
            i = self._pos[edge_key(a, b)]
            out.append((i, 1 if self.edges[i].tail == a else -1))
        return out

    def edge_vector(self, u: str, v: str) -> list[int]:
        """Row expressing chi(u -> v) in tree coordinates."""
        row = [0] * len(self.edges)
        for i, s in self.signed_path(u, v):
            row[i] += s
        return row

    def to_json(self) -> list:
        return [[e.tail, e.head] for e in self.edges]


def canonical_spanning_tree(g: SimplicialGraph) -> SpanningTree:
    """BFS tree from the smallest vertex; edges in discovery order."""
    require_connected(g)
    root = g.vertices[0]
    seen = {root}
    frontier = [root]
    pairs = []
    while frontier:
        nxt = []
        for x in frontier:
            for y in sorted(g.neighbors(x)):
                if y not in seen:
                    seen.add(y)
                    pairs.append((x, y))
                    nxt.append(y)
        frontier = nxt
    return SpanningTree.from_pairs(g, pairs)


def extend_to_spanning_tree(g: SimplicialGraph, forest: Sequence[OrientedEdge]) -> SpanningTree:
    """Add edges in canonical order to a forest until it spans."""
    root = {v: v for v in g.vertices}

    def find(x):
        while root[x] != x:
            root[x] = root[root[x]]
            x = root[x]
        return x

    out = list(forest)
    for e in out:
        a, b = find(e.tail), find(e.head)
        if a == b:
            raise InputError("the given edges contain a cycle")
        root[a] = b
    for u, v in g.edges:
        a, b = find(u), find(v)
        if a != b:
            root[a] = b
            out.append(OrientedEdge(u, v))
    return SpanningTree(g, out)


# -- verification --------------------------------------------------------------


def _check_tree_of(g: SimplicialGraph, t: SpanningTree) -> None:
    if t.parent != g:
        raise InputError("tree does not span this graph")


def verify_tree_2_spanner(g: SimplicialGraph, t: SpanningTree) -> tuple[bool, tuple | None]:
    """Edge-wise stretch check; returns (ok, first violating edge)."""
    _check_tree_of(g, t)
    adj = t.adjacency
    for u, v in g.edges:
        if t.contains(u, v):
            continue
        if not (adj[u] & adj[v]):
            return False, (u, v)
    return True, None


def verify_tree_2_spanner_all_pairs(g: SimplicialGraph, t: SpanningTree) -> tuple[bool, tuple | None]:
    """Reference check of d_T <= 2 d_G over every vertex pair."""
    _check_tree_of(g, t)
    gadj = {v: g.neighbors(v) for v in g.vertices}
    for u in g.vertices:
        dg = bfs_distances(gadj, u)
        dt = bfs_distances(t.adjacency, u)
        for v in g.vertices:
            if v > u and dt[v] > 2 * dg[v]:
                return False, (u, v)
    return True, None


# -- search --------------------------------------------------------------------


def _search_order(g: SimplicialGraph) -> list[tuple[str, str]]:
    pos = {}
    for comp_root in g.vertices:
        if comp_root in pos:
            continue
        pos[comp_root] = len(pos)
        frontier = [comp_root]
        while frontier:
            nxt = []
            for x in frontier:
                for y in sorted(g.neighbors(x)):
                    if y not in pos:
                        pos[y] = len(pos)
                        nxt.append(y)
            frontier = nxt
    return sorted(g.edges, key=lambda e: (max(pos[e[0]], pos[e[1]]), min(pos[e[0]], pos[e[1]])))


def iter_tree_2_spanners(g: SimplicialGraph) -> Iterator[SpanningTree]:
    """Every tree 2-spanner, in the canonical include-first search order.

    Pruning: a non-tree edge needs a triangle whose other two edges can
    still be tree edges, a triangle may never end with exactly one tree
    edge, the non-excluded edges must stay connected, and tree edges stay
    acyclic.
    """
    require_connected(g)
    n = len(g.vertices)
    if n == 1:
        yield SpanningTree(g, [])
        return
    order = _search_order(g)
    idx = {e: i for i, e in enumerate(order)}
    m = len(order)
    tris = []  # per edge: list of (j, k) other edge indices
    for i, (u, v) in enumerate(order):
        lst = []
        for w in sorted(g.neighbors(u) & g.neighbors(v)):
            lst.append((idx[edge_key(u, w)], idx[edge_key(v, w)]))
        tris.append(lst)
    vid = {v: i for i, v in enumerate(g.vertices)}
    ends = [(vid[u], vid[v]) for u, v in order]
    state = [0] * m
    dsu = list(range(n))

    def find(x):
        while dsu[x] != x:
            x = dsu[x]
        return x

    def supported(i):
        return any(state[j] != -1 and state[k] != -1 for j, k in tris[i])

    def parity_ok(i):
        for j, k in tris[i]:
            s = (state[i], state[j], state[k])
            if 0 not in s and s.count(1) == 1:
                return False
        return True

    def connected_without_out():
        adj = [[] for _ in range(n)]
        for i, (a, b) in enumerate(ends):
            if state[i] != -1:
                adj[a].append(b)
                adj[b].append(a)
        seen = {0}
        stack = [0]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == n

    def consistent_out(i):
        if not supported(i) or not parity_ok(i):
            return False
        for j, k in tris[i]:
            for x in (j, k):
                if state[x] == -1 and not supported(x):
                    return False
        return connected_without_out()

    def rec(i, count):
        if i == m:
            if count == n - 1:
                yield [order[x] for x in range(m) if state[x] == 1]
            return
        a, b = ends[i]
        ra, rb = find(a), find(b)
        if ra != rb and count < n - 1:
            state[i] = 1
            dsu[ra] = rb
            if parity_ok(i):
                yield from rec(i + 1, count + 1)
            dsu[ra] = ra
        state[i] = -1
        if consistent_out(i):
            yield from rec(i + 1, count)
        state[i] = 0

    for edges in rec(0, 0):
        t = SpanningTree.from_pairs(g, sorted(edges))
        ok, witness = verify_tree_2_spanner(g, t)
        if not ok:
            raise AssertionError(f"search produced a non-spanner, violated at {witness}")
        _assert_k4_completions(g, t)
        yield t


def _assert_k4_completions(g: SimplicialGraph, t: SpanningTree) -> None:
    """A triangle avoiding the tree must sit under a vertex joined to it by tree edges."""
    fc = build_flag_complex(g, max_dim=2)
    for tri in fc.triangles:
        if any(t.contains(a, b) for a, b in ((tri[0], tri[1]), (tri[0], tri[2]), (tri[1], tri[2]))):
            continue
        common = g.neighbors(tri[0]) & g.neighbors(tri[1]) & g.neighbors(tri[2])
        if not any(all(t.contains(w, x) for x in tri) for w in common):
            raise AssertionError(f"tree-free triangle {tri} has no K4 completion")


def find_tree_2_spanner(g: SimplicialGraph) -> SpanningTree | None:
    return next(iter_tree_2_spanners(g), None)


# -- dual graph ------------------------------------------------------------------


@dataclass(frozen=True)
class DualGraph:
    """Vertices are tree edges (by coordinate index); edges join tree edges sharing a triangle."""

    tree_edges: tuple
    edges: frozenset

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def to_networkx(self) -> nx.Graph:
        h = nx.Graph()
        h.add_nodes_from(range(len(self.tree_edges)))
        h.add_edges_from(self.edges)
        return h

    def labelled_edges(self) -> list:
        return [(self.tree_edges[i], self.tree_edges[j]) for i, j in self.sorted_edges()]

    def to_json(self) -> dict:
        return {
            "vertices": [list(e) for e in self.tree_edges],
            "edges": [[i, j] for i, j in self.sorted_edges()],
        }


def dual_graph(g: SimplicialGraph, t: SpanningTree) -> DualGraph:
    ok, witness = verify_tree_2_spanner(g, t)
    if not ok:
        raise PreconditionError(f"not a tree 2-spanner; edge {witness} is stretched")
    pairs = set()
    for tri in build_flag_complex(g, max_dim=2).triangles:
        inside = sorted(
            p for p in (t.position(tri[0], tri[1]), t.position(tri[0], tri[2]), t.position(tri[1], tri[2]))
            if p is not None
        )
        for x in range(len(inside)):
            for y in range(x + 1, len(inside)):
                pairs.add((inside[x], inside[y]))
    return DualGraph(t.keys, frozenset(pairs))


def graphs_define_isomorphic_bbgs(g1, t1, g2, t2) -> bool:
    d1 = dual_graph(g1, t1).to_networkx()
    d2 = dual_graph(g2, t2).to_networkx()
    return nx.is_isomorphic(d1, d2)


# -- fans and simple cones ---------------------------------------------------------


@dataclass(frozen=True)
class Piece:
    kind: str  # "FAN" or "SIMPLE_CONE"
    vertices: tuple
    edges: tuple
    cone_vertex: str

    def spokes(self) -> list[tuple[str, str]]:
        return [e for e in self.edges if self.cone_vertex in e]

    def good_edges(self) -> set:
        if self.kind == "SIMPLE_CONE":
            return set(self.spokes())
        # a fan over a path: spokes plus the two outermost path edges
        v = self.cone_vertex
        path = [x for x in self.vertices if x != v]
        inner = nx.Graph([e for e in self.edges if v not in e])
        ends = [x for x in path if inner.degree(x) == 1] if len(path) > 1 else []
        good = set(self.spokes())
        for x in ends:
            (y,) = inner.neighbors(x)
            good.add(edge_key(x, y))
        return good

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "cone_vertex": self.cone_vertex,
            "vertices": list(self.vertices),
            "edges": [list(e) for e in self.edges],
        }


@dataclass(frozen=True)
class FanConeDecomposition:
    pieces: tuple
    bonding_edges: tuple

    def spanning_tree(self, g: SimplicialGraph) -> SpanningTree:
        """Union of the cone-vertex spokes of every piece."""
        keys = set()
        for p in self.pieces:
            keys.update(p.spokes())
        t = SpanningTree.from_pairs(g, sorted(keys))
        ok, witness = verify_tree_2_spanner(g, t)
        if not ok:
            raise AssertionError(f"fan/cone tree fails at {witness}")
        return t

    def to_json(self) -> dict:
        return {
            "pieces": [p.to_json() for p in self.pieces],
            "bonding_edges": [list(e) for e in self.bonding_edges],
        }


def cut_edges(g: SimplicialGraph) -> list[tuple[str, str]]:
    """Edges whose two endpoints together separate the graph."""
    out = []
    for u, v in g.edges:
        rest = [x for x in g.vertices if x != u and x != v]
        if rest and len(components(g, rest)) > 1:
            out.append((u, v))
    return out


def _classify_piece(h: SimplicialGraph) -> tuple[str, str | None]:
    if len(h.vertices) == 3 and len(h.edges) == 3:
        return "FAN", None
    counts = edge_triangle_counts(build_flag_complex(h, max_dim=2))
    for u in h.vertices:
        incident = [e for e in h.edges if u in e]
        if all(counts[e] >= 2 for e in incident) and len(incident) == len(h.vertices) - 1:
            base = h.induced([x for x in h.vertices if x != u])
            tri_free = not build_flag_complex(base, max_dim=2).triangles
            if tri_free and all(base.degree(x) >= 2 for x in base.vertices) and len(components(base)) == 1:
                return "SIMPLE_CONE", u
    raise AssertionError(f"piece on {h.vertices} is neither a triangle nor a simple cone")


def crowned_triangle_list(fc: FlagComplex) -> list[tuple]:
    counts = edge_triangle_counts(fc)
    return [t for t in fc.triangles if all(counts[e] >= 2 for e in ((t[0], t[1]), (t[0], t[2]), (t[1], t[2])))]


def decompose_fans_cones(fc: FlagComplex) -> FanConeDecomposition:
    """Split along cut edges until every piece is a triangle or a simple cone."""
    from .bns import certify_hypotheses

    if fc.dimension != 2:
        raise PreconditionError(f"fan/cone decomposition needs dimension 2, got {fc.dimension}")
    g = fc.base
    certify_hypotheses(g)
    crowned = crowned_triangle_list(fc)
    if crowned:
        raise PreconditionError(f"crowned triangle {crowned[0]} present", )

    raw = []
    bonding = []

    def split(vs):
        h = g.induced(vs)
        cuts = cut_edges(h)
        if not cuts:
            raw.append(h)
            return
        u, v = cuts[0]
        bonding.append((u, v))
        rest = [x for x in h.vertices if x != u and x != v]
        for comp in components(h, rest):
            split(set(comp) | {u, v})

    split(g.vertices)
    bset = set(bonding)
    pieces = []
    for h in raw:
        kind, apex = _classify_piece(h)
        if apex is None:
            mine = [e for e in h.edges if e in bset]
            if len(mine) >= 2:
                apex = (set(mine[0]) & set(mine[1])).pop()
            elif mine:
                apex = mine[0][0]
            else:
                apex = h.vertices[0]
        pieces.append(Piece(kind, h.vertices, h.edges, apex))
    for p in pieces:
        bad = [e for e in p.edges if e in bset and e not in p.good_edges()]
        if bad:
            raise AssertionError(f"bonding edge {bad[0]} is not good in piece {p.vertices}")
    _assert_no_crowned_structure(fc)
    return FanConeDecomposition(tuple(pieces), tuple(bonding))


def _assert_no_crowned_structure(fc: FlagComplex) -> None:
    """Without crowned triangles: no interior edges or triangles, at most one interior vertex."""
    cls = classify_boundary(fc)
    if cls.interior_edges:
        raise AssertionError(f"interior edge {sorted(cls.interior_edges)[0]} in a crowned-free complex")
    if len(cls.interior_vertices) > 1:
        raise AssertionError("more than one interior vertex in a crowned-free complex")
