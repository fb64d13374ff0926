"""Flag complexes: clique enumeration, boundary structure, homology, collapses."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .errors import DimensionError
from .graph import SimplicialGraph, edge_key, require_connected
from .linalg import in_integer_column_span, in_row_space, integer_rank_and_torsion, transpose

DEFAULT_COLLAPSE_RESTARTS = 10


class FlagComplex:
    """All cliques of a graph, grouped by dimension.

    ``levels[k]`` holds the (k+1)-cliques as sorted vertex tuples, so level 0
    is the vertex set and level 1 the edge set.
    """

    __slots__ = ("base", "levels", "_index")

    def __init__(self, base: SimplicialGraph, levels):
        self.base = base
        self.levels = tuple(tuple(lv) for lv in levels)
        self._index = [{s: i for i, s in enumerate(lv)} for lv in self.levels]

    @property
    def dimension(self) -> int:
        return len(self.levels) - 1

    @property
    def triangles(self) -> tuple:
        return self.levels[2] if len(self.levels) > 2 else ()

    @property
    def simplices(self) -> dict:
        """Cliques of size >= 3 keyed by dimension."""
        return {k: self.levels[k] for k in range(2, len(self.levels))}

    def counts(self) -> list[int]:
        return [len(lv) for lv in self.levels]

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * len(lv) for k, lv in enumerate(self.levels))

    def index(self, simplex) -> int:
        return self._index[len(simplex) - 1][tuple(simplex)]

    def triangles_on_edge(self, u, v) -> list[tuple]:
        g = self.base
        return [tuple(sorted((u, v, w))) for w in sorted(g.neighbors(u) & g.neighbors(v))]

    def __repr__(self):
        return f"FlagComplex(counts={self.counts()})"


def build_flag_complex(g: SimplicialGraph, max_dim: int | None = None) -> FlagComplex:
    levels = [[(v,) for v in g.vertices]]
    if g.edges and (max_dim is None or max_dim >= 1):
        levels.append(list(g.edges))
    while len(levels) >= 2 and (max_dim is None or len(levels) <= max_dim):
        nxt = []
        for c in levels[-1]:
            common = set(g.neighbors(c[0]))
            for x in c[1:]:
                common &= g.neighbors(x)
            nxt.extend(c + (w,) for w in sorted(common) if w > c[-1])
        if not nxt:
            break
        levels.append(nxt)
    return FlagComplex(g, levels)


@dataclass(frozen=True)
class BoundaryClassification:
    boundary_edges: frozenset
    interior_edges: frozenset
    boundary_vertices: frozenset
    interior_vertices: frozenset


def edge_triangle_counts(fc: FlagComplex) -> dict:
    counts = {e: 0 for e in fc.base.edges}
    for a, b, c in fc.triangles:
        for e in ((a, b), (a, c), (b, c)):
            counts[e] += 1
    return counts


def classify_boundary(fc: FlagComplex, allow_higher: bool = False) -> BoundaryClassification:
    """Boundary/interior split of edges and vertices.

    Only defined for 2-dimensional complexes; ``allow_higher`` applies the
    same "edge in exactly one triangle" rule to the 2-skeleton.
    """
    if fc.dimension < 2 or (fc.dimension > 2 and not allow_higher):
        raise DimensionError(f"boundary classification needs a 2-dimensional complex, got {fc.dimension}")
    counts = edge_triangle_counts(fc)
    bedges = frozenset(e for e, n in counts.items() if n == 1)
    bverts = frozenset(x for e in bedges for x in e)
    iverts = frozenset(v for v in fc.base.vertices if v not in bverts)
    iedges = frozenset(e for e in fc.base.edges if e[0] not in bverts and e[1] not in bverts)
    return BoundaryClassification(bedges, iedges, bverts, iverts)


# -- homology ----------------------------------------------------------------


def boundary_matrix(fc: FlagComplex, k: int) -> list[list[int]]:
    """Integer matrix of the boundary map from k-simplices to (k-1)-simplices."""
    if k <= 0 or k >= len(fc.levels):
        return []
    rows = len(fc.levels[k - 1])
    mat = [[0] * len(fc.levels[k]) for _ in range(rows)]
    for j, s in enumerate(fc.levels[k]):
        for i in range(len(s)):
            face = s[:i] + s[i + 1:]
            mat[fc.index(face)][j] += (-1) ** i
    return mat


def homology(fc: FlagComplex, k: int) -> tuple[int, list[int]]:
    """(free rank, torsion divisors) of H_k over the integers."""
    if k >= len(fc.levels):
        return 0, []
    n_k = len(fc.levels[k])
    r_k = integer_rank_and_torsion(boundary_matrix(fc, k))[0] if k > 0 else 0
    r_next, torsion = integer_rank_and_torsion(boundary_matrix(fc, k + 1))
    return n_k - r_k - r_next, torsion


def homology_h1(fc: FlagComplex) -> tuple[int, list[int]]:
    return homology(fc, 1)


def _spanning_forest(g: SimplicialGraph) -> dict:
    parent = {}
    for root in g.vertices:
        if root in parent:
            continue
        parent[root] = None
        frontier = [root]
        while frontier:
            nxt = []
            for x in frontier:
                for y in sorted(g.neighbors(x)):
                    if y not in parent:
                        parent[y] = x
                        nxt.append(y)
            frontier = nxt
    return parent


def _root_path(parent, v):
    path = [v]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    return path


def fundamental_cycles(g: SimplicialGraph):
    """Yield (vertex loop, chain vector on edges) for each non-tree edge."""
    parent = _spanning_forest(g)
    tree = {edge_key(v, p) for v, p in parent.items() if p is not None}
    eidx = {e: i for i, e in enumerate(g.edges)}
    for u, v in g.edges:
        if (u, v) in tree:
            continue
        pu, pv = _root_path(parent, u), _root_path(parent, v)
        common = set(pu) & set(pv)
        while len(pu) > 1 and pu[-2] in common:
            pu.pop()
        while len(pv) > 1 and pv[-2] in common:
            pv.pop()
        # loop u -> v, then v back up to the meeting point and down to u
        loop = [u] + pv + list(reversed(pu[:-1]))
        chain = [0] * len(g.edges)
        for a, b in zip(loop, loop[1:]):
            chain[eidx[edge_key(a, b)]] += 1 if a < b else -1
        yield loop, chain


@dataclass(frozen=True)
class SimpleConnectivityStatus:
    h1_rank: int
    h1_torsion: tuple
    verdict: str
    certificate: dict = field(default_factory=dict, compare=False)

    @property
    def certified(self) -> bool:
        return self.verdict == "SIMPLY_CONNECTED"

    def to_json(self) -> dict:
        return {
            "h1_rank": self.h1_rank,
            "h1_torsion": list(self.h1_torsion),
            "verdict": self.verdict,
            "certificate": self.certificate,
        }


def _nontrivial_cycle(fc: FlagComplex, rank1: int):
    d2 = boundary_matrix(fc, 2)
    cols = transpose(d2) if d2 else []
    for loop, chain in fundamental_cycles(fc.base):
        if rank1 > 0:
            if not in_row_space(cols, chain):
                return loop
        elif not in_integer_column_span(d2, chain):
            return loop
    raise AssertionError("nonzero H1 but every fundamental cycle bounds")


def collapse_to_point(fc: FlagComplex, rng: random.Random | None = None):
    """Greedy elementary collapses; returns the (face, coface) list or None.

    Without ``rng`` the highest-dimensional, lexicographically first free
    face is removed at each step.
    """
    present = {s for lv in fc.levels for s in lv}
    cofacets = {s: set() for s in present}
    for s in present:
        if len(s) > 1:
            for i in range(len(s)):
                cofacets[s[:i] + s[i + 1:]].add(s)
    steps = []
    while len(present) > 1:
        free = [s for s in present if len(cofacets[s]) == 1 and not cofacets[next(iter(cofacets[s]))]]
        if not free:
            return None
        if rng is None:
            sigma = min(free, key=lambda s: (-len(s), s))
        else:
            free.sort(key=lambda s: (-len(s), s))
            sigma = rng.choice(free)
        tau = next(iter(cofacets[sigma]))
        for s in (tau, sigma):
            present.discard(s)
            if len(s) > 1:
                for i in range(len(s)):
                    cofacets[s[:i] + s[i + 1:]].discard(s)
        steps.append((sigma, tau))
    return steps


def simple_connectivity(fc: FlagComplex, seed: int = 0, restarts: int = DEFAULT_COLLAPSE_RESTARTS):
    require_connected(fc.base)
    return _simple_connectivity_cached(fc.base, seed, restarts)


@lru_cache(maxsize=512)
def _simple_connectivity_cached(g: SimplicialGraph, seed: int, restarts: int) -> SimpleConnectivityStatus:
    fc = build_flag_complex(g)
    rank1, torsion = homology_h1(fc)
    if rank1 or torsion:
        loop = _nontrivial_cycle(fc, rank1)
        return SimpleConnectivityStatus(rank1, tuple(torsion), "NOT_SIMPLY_CONNECTED", {"kind": "cycle", "cycle": loop})
    for attempt in range(restarts + 1):
        rng = None if attempt == 0 else random.Random(seed * 1_000_003 + attempt)
        steps = collapse_to_point(fc, rng)
        if steps is not None:
            cert = {
                "kind": "collapse",
                "seed": seed,
                "attempt": attempt,
                "steps": [[list(s), list(t)] for s, t in steps],
            }
            return SimpleConnectivityStatus(0, (), "SIMPLY_CONNECTED", cert)
    return SimpleConnectivityStatus(0, (), "UNKNOWN", {"kind": "none", "seed": seed, "attempts": restarts + 1})


def verify_collapse(fc: FlagComplex, steps) -> bool:
    """Replay a collapse certificate from scratch."""
    present = {s for lv in fc.levels for s in lv}
    for sigma, tau in steps:
        sigma, tau = tuple(sigma), tuple(tau)
        if sigma not in present or tau not in present:
            return False
        if len(tau) != len(sigma) + 1 or not set(sigma) < set(tau):
            return False
        over = [s for s in present if len(s) > len(sigma) and set(sigma) < set(s)]
        if over != [tau]:
            return False
        present -= {sigma, tau}
    return len(present) == 1


def interior_vertices_have_thick_links(fc: FlagComplex) -> bool:
    cls = classify_boundary(fc)
    g = fc.base
    for v in cls.interior_vertices:
        nbrs = g.neighbors(v)
        if any(len(g.neighbors(w) & nbrs) < 2 for w in nbrs):
            return False
    return True


def cliques_containing(fc: FlagComplex, vs) -> list:
    vs = set(vs)
    return [s for lv in fc.levels for s in lv if vs <= set(s)]


def triangles_of_edges(fc: FlagComplex):
    out = {e: [] for e in fc.base.edges}
    for t in fc.triangles:
        for e in combinations(t, 2):
            out[e].append(t)
    return out
