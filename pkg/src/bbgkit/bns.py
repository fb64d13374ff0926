"""Characters of RAAGs and BBGs over Q and their BNS-invariants."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

from .arrangement import RationalSubspace
from .errors import HypothesisNotCertified, InputError, PreconditionError
from .flag import SimpleConnectivityStatus, build_flag_complex, simple_connectivity
from .graph import (
    OrientedEdge,
    SimplicialGraph,
    Subgraph,
    components,
    is_biconnected,
    is_connected,
    minimal_full_separating_subgraphs,
)
from .spanner import SpanningTree


def parse_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise InputError("floats are not accepted; use 'p/q' or decimal strings")
    try:
        return Fraction(str(x).strip())
    except (ValueError, ZeroDivisionError):
        raise InputError(f"not a rational number: {x!r}") from None


def format_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# -- hypotheses -------------------------------------------------------------------


@dataclass(frozen=True)
class Hypotheses:
    biconnected: bool
    cut_vertex: str | None
    connectivity: SimpleConnectivityStatus

    def to_json(self) -> dict:
        return {
            "biconnected": self.biconnected,
            "cut_vertex": self.cut_vertex,
            "simple_connectivity": self.connectivity.to_json(),
        }


@lru_cache(maxsize=512)
def _hypotheses(g: SimplicialGraph) -> Hypotheses:
    if not is_connected(g):
        raise PreconditionError("graph is not connected")
    if len(g.vertices) < 2:
        bic, cut = False, None
    else:
        bic, cut = is_biconnected(g)
    return Hypotheses(bic, cut, simple_connectivity(build_flag_complex(g)))


def hypotheses(g: SimplicialGraph) -> Hypotheses:
    return _hypotheses(g)


def certify_hypotheses(g: SimplicialGraph) -> Hypotheses:
    """Biconnectivity and certified simple connectivity, or HypothesisNotCertified."""
    if not is_connected(g):
        raise HypothesisNotCertified("graph is not connected")
    h = _hypotheses(g)
    if not h.biconnected:
        where = f" (cut vertex {h.cut_vertex})" if h.cut_vertex else ""
        raise HypothesisNotCertified(f"graph is not biconnected{where}")
    if not h.connectivity.certified:
        raise HypothesisNotCertified(f"flag complex simple connectivity: {h.connectivity.verdict}")
    return h


@lru_cache(maxsize=512)
def _separators(g: SimplicialGraph) -> tuple:
    return tuple(minimal_full_separating_subgraphs(g))


# -- characters -------------------------------------------------------------------


@dataclass(frozen=True)
class RaagCharacter:
    graph: SimplicialGraph
    labels: Mapping  # vertex -> Fraction

    def __post_init__(self):
        if set(self.labels) != set(self.graph.vertices):
            raise InputError("labels must cover exactly the vertex set")
        object.__setattr__(self, "labels", {v: parse_rational(x) for v, x in self.labels.items()})

    def __getitem__(self, v):
        return self.labels[v]

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.labels.values())

    def shifted(self, c) -> "RaagCharacter":
        c = parse_rational(c)
        return RaagCharacter(self.graph, {v: x + c for v, x in self.labels.items()})

    def living_vertices(self) -> list[str]:
        return [v for v in self.graph.vertices if self.labels[v] != 0]

    def to_json(self) -> dict:
        return {v: format_rational(self.labels[v]) for v in self.graph.vertices}


@dataclass(frozen=True)
class BbgCharacter:
    tree: SpanningTree
    values: tuple  # Fraction per tree edge, in coordinate order

    def __post_init__(self):
        vals = tuple(parse_rational(x) for x in self.values)
        if len(vals) != len(self.tree.edges):
            raise InputError(f"expected {len(self.tree.edges)} values, got {len(vals)}")
        object.__setattr__(self, "values", vals)

    @property
    def graph(self) -> SimplicialGraph:
        return self.tree.parent

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.values)

    def __neg__(self):
        return BbgCharacter(self.tree, tuple(-x for x in self.values))

    def to_json(self) -> dict:
        return {"tree": self.tree.to_json(), "values": [format_rational(x) for x in self.values]}

    @classmethod
    def from_json(cls, g: SimplicialGraph, data) -> "BbgCharacter":
        try:
            tree = SpanningTree.from_pairs(g, data["tree"], oriented=True)
            return cls(tree, tuple(data["values"]))
        except (KeyError, TypeError):
            raise InputError("character JSON needs 'tree' and 'values'") from None


def evaluate(chi: BbgCharacter, e) -> Fraction:
    """Value on an oriented edge: the signed sum along its tree path."""
    tail, head = (e.tail, e.head) if isinstance(e, OrientedEdge) else e
    chi.graph.require_edge(tail, head)
    return sum((s * chi.values[i] for i, s in chi.tree.signed_path(tail, head)), Fraction(0))


def restrict(chi_hat: RaagCharacter, t: SpanningTree) -> BbgCharacter:
    if t.parent != chi_hat.graph:
        raise InputError("tree and character live on different graphs")
    return BbgCharacter(t, tuple(chi_hat[e.head] - chi_hat[e.tail] for e in t.edges))


def extend(chi: BbgCharacter, base_vertex: str, base_value=0) -> RaagCharacter:
    """The extension taking ``base_value`` at ``base_vertex``."""
    g = chi.graph
    g.require_vertex(base_vertex)
    labels = {base_vertex: parse_rational(base_value)}
    adj = chi.tree.adjacency
    stack = [base_vertex]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in labels:
                i = chi.tree.position(x, y)
                s = 1 if chi.tree.edges[i].tail == x else -1
                labels[y] = labels[x] + s * chi.values[i]
                stack.append(y)
    return RaagCharacter(g, labels)


def restriction_matrix(t: SpanningTree) -> list[list[int]]:
    """Rows: tree edges; columns: vertices; r(chi_hat) = M chi_hat."""
    vs = t.parent.vertices
    col = {v: i for i, v in enumerate(vs)}
    rows = []
    for e in t.edges:
        row = [0] * len(vs)
        row[col[e.head]] += 1
        row[col[e.tail]] -= 1
        rows.append(row)
    return rows


def section(chi: BbgCharacter) -> RaagCharacter:
    """The extension orthogonal to the constant labelling."""
    base = extend(chi, chi.graph.vertices[0], 0)
    mean = sum(base.labels.values(), Fraction(0)) / len(chi.graph.vertices)
    return base.shifted(-mean)


# -- RAAG side ----------------------------------------------------------------------


def raag_sigma_membership(chi_hat: RaagCharacter) -> bool:
    """Living subgraph connected and dominating."""
    g = chi_hat.graph
    if not is_connected(g):
        raise PreconditionError("graph is not connected")
    if chi_hat.is_zero():
        raise InputError("the zero character has no class in the character sphere")
    living = set(chi_hat.living_vertices())
    if len(components(g, living)) != 1:
        return False
    return all(v in living or g.neighbors(v) & living for v in g.vertices)


# -- BBG side -----------------------------------------------------------------------


@dataclass(frozen=True)
class EdgeVanishing:
    living_edges: frozenset
    dead_edges: frozenset

    def to_json(self) -> dict:
        return {
            "living_edges": [list(e) for e in sorted(self.living_edges)],
            "dead_edges": [list(e) for e in sorted(self.dead_edges)],
        }


def dead_edge_subgraph(chi: BbgCharacter) -> EdgeVanishing:
    dead, live = set(), set()
    for u, v in chi.graph.edges:
        (dead if evaluate(chi, (u, v)) == 0 else live).add((u, v))
    return EdgeVanishing(frozenset(live), frozenset(dead))


def dead_separator(chi: BbgCharacter) -> Subgraph | None:
    """First minimal full separating subgraph all of whose edges are dead."""
    dead = dead_edge_subgraph(chi).dead_edges
    for lam in _separators(chi.graph):
        if lam.edges <= dead:
            return lam
    return None


def membership_by_separators(chi: BbgCharacter) -> bool:
    return dead_separator(chi) is None


def critical_constants(chi: BbgCharacter) -> list[Fraction]:
    base = extend(chi, chi.graph.vertices[0], 0)
    crit = sorted({-x for x in base.labels.values()})
    generic = max((abs(c) for c in crit), default=Fraction(0)) + 1
    return crit + [generic]


def membership_by_extensions(chi: BbgCharacter) -> bool:
    """Every extension must lie in the RAAG invariant; only finitely many are distinct."""
    base = extend(chi, chi.graph.vertices[0], 0)
    return all(raag_sigma_membership(base.shifted(c)) for c in critical_constants(chi))


def bbg_sigma_membership(chi: BbgCharacter, method: str = "both") -> bool:
    """Whether [chi] lies in the BNS-invariant; ``method`` in {"both", "separators", "extensions"}."""
    certify_hypotheses(chi.graph)
    if chi.is_zero():
        raise InputError("the zero character has no class in the character sphere")
    if method == "separators":
        return membership_by_separators(chi)
    if method == "extensions":
        return membership_by_extensions(chi)
    a = membership_by_separators(chi)
    b = membership_by_extensions(chi)
    if a != b:
        raise AssertionError(f"membership paths disagree on {chi.values}: separators={a}, extensions={b}")
    return a


@dataclass(frozen=True)
class MissingSubsphere:
    separator: Subgraph
    subspace: RationalSubspace
    equations: tuple

    def to_json(self) -> dict:
        return {
            "separator_vertices": list(self.separator.sorted_vertices()),
            "equations": [list(r) for r in self.equations],
        }


def missing_subspace(t: SpanningTree, edges) -> RationalSubspace:
    rows = [t.edge_vector(u, v) for u, v in sorted(edges)]
    return RationalSubspace.from_equations(len(t.edges), rows)


def bns_complement_arrangement(g: SimplicialGraph, t: SpanningTree) -> list[MissingSubsphere]:
    certify_hypotheses(g)
    if t.parent != g:
        raise InputError("tree does not span this graph")
    out = []
    for lam in _separators(g):
        w = missing_subspace(t, lam.edges)
        if w.codim == 0:
            raise AssertionError(f"separator {lam} imposes no condition")
        out.append(MissingSubsphere(lam, w, w.equations))
    for i, a in enumerate(out):
        for b in out[i + 1:]:
            if a.subspace.contains(b.subspace) or b.subspace.contains(a.subspace):
                raise AssertionError(f"nested missing subspaces for {a.separator} and {b.separator}")
    return out


def arrangement_to_json(t: SpanningTree, spheres: Sequence[MissingSubsphere]) -> dict:
    return {"coordinates": t.to_json(), "subspheres": [s.to_json() for s in spheres]}


def fibering_character(g: SimplicialGraph, t: SpanningTree) -> BbgCharacter:
    """Distinct powers of ten on the tree edges: no edge can evaluate to zero."""
    certify_hypotheses(g)
    chi = BbgCharacter(t, tuple(Fraction(10) ** (k + 1) for k in range(len(t.edges))))
    if dead_edge_subgraph(chi).dead_edges:
        raise AssertionError("power-of-ten character has a dead edge")
    return chi


def character_from_values(t: SpanningTree, values: Sequence) -> BbgCharacter:
    return BbgCharacter(t, tuple(parse_rational(v) for v in values))
