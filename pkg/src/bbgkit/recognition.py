"""Deciding whether a Bestvina-Brady group is a right-angled Artin group."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterator, Sequence

from .arrangement import RationalSubspace, RedundantTripleReport, redundant_triple_test
from .bns import _separators, bns_complement_arrangement, certify_hypotheses, missing_subspace
from .errors import DimensionError, HypothesisNotCertified, InputError, PreconditionError
from .flag import FlagComplex, build_flag_complex, edge_triangle_counts, simple_connectivity
from .graph import (
    OrientedEdge,
    SimplicialGraph,
    Subgraph,
    biconnected_components,
    components,
    edge_key,
    is_separating,
)
from .spanner import (
    DualGraph,
    SpanningTree,
    dual_graph,
    extend_to_spanning_tree,
    find_tree_2_spanner,
    verify_tree_2_spanner,
)

RAAG = "RAAG"
NOT_RAAG_NOT_ARTIN = "NOT_RAAG_NOT_ARTIN"
NOT_FINITELY_PRESENTED = "NOT_FINITELY_PRESENTED"
UNKNOWN = "UNKNOWN"
NOT_APPLICABLE = "NOT_APPLICABLE"


def crowned_triangles(fc: FlagComplex) -> list[tuple]:
    """Triangles none of whose edges lies in exactly one triangle (2-skeleton count)."""
    if fc.dimension < 2:
        raise DimensionError(f"crowned triangles need dimension >= 2, got {fc.dimension}")
    counts = edge_triangle_counts(fc)
    return [t for t in fc.triangles if all(counts[e] >= 2 for e in combinations(t, 2))]


# -- redundant triangles ------------------------------------------------------------


@dataclass(frozen=True)
class RedundantTriangleWitness:
    triangle: tuple  # (v1, v2, v3)
    opposite_edges: tuple  # e_j is the edge not containing v_j
    separators: tuple  # Lambda_1..3 as Subgraphs
    tree: SpanningTree
    subspaces: tuple  # W_1..3
    report: RedundantTripleReport

    def to_json(self) -> dict:
        return {
            "triangle": list(self.triangle),
            "opposite_edges": [list(e) for e in self.opposite_edges],
            "separators": [list(s.sorted_vertices()) for s in self.separators],
            "tree": self.tree.to_json(),
            "subspaces": [[list(r) for r in w.equations] for w in self.subspaces],
            "report": self.report.to_json(),
        }


def opposite_edges(triangle) -> tuple:
    v1, v2, v3 = triangle
    return (edge_key(v2, v3), edge_key(v1, v3), edge_key(v1, v2))


def redundant_triple_tree(g: SimplicialGraph, triangle, lambda_sets) -> SpanningTree:
    """Relative spokes of v3, then v2, then v1, extended to a spanning tree.

    The first two coordinates are (v3 -> v2) and (v3 -> v1), so the third
    separator's subspace sits inside {y_1 - y_2 = 0}.
    """
    v1, v2, v3 = triangle
    l1, l2, l3 = (set(s) for s in lambda_sets)
    forest = [OrientedEdge(v3, v2), OrientedEdge(v3, v1)]
    forest += [OrientedEdge(v3, x) for x in sorted(l3 - {v1, v2})]
    s3 = l3 | {v3}
    forest += [OrientedEdge(v2, x) for x in sorted(l2 - s3)]
    s2 = l2 | {v2}
    forest += [OrientedEdge(v1, x) for x in sorted(l1 - s2 - s3)]
    return extend_to_spanning_tree(g, forest)


def _check_only_e1_e2_involved(t: SpanningTree, ws: Sequence[RationalSubspace]) -> None:
    m = len(t.edges)
    for f in range(m):
        unit = [int(i == f) for i in range(m)]
        if not any(w.contains_vector(unit) for w in ws) and f not in (0, 1):
            raise AssertionError(f"tree edge {t.edges[f]} lies outside every missing subspace")


def evaluate_triple(g: SimplicialGraph, triangle, separators: Sequence[Subgraph]):
    """Build the tree and subspaces for one candidate and run the triple test."""
    t = redundant_triple_tree(g, triangle, [s.vertices for s in separators])
    ws = tuple(missing_subspace(t, s.edges) for s in separators)
    _check_only_e1_e2_involved(t, ws)
    report = redundant_triple_test(*ws, 0, 1)
    return t, ws, report


def candidate_separators(g: SimplicialGraph, triangle) -> list[list[Subgraph]]:
    """For each v_j: minimal full separators inside lk(v_j) through e_j."""
    seps = _separators(g)
    out = []
    for v, e in zip(triangle, opposite_edges(triangle)):
        nbrs = g.neighbors(v)
        out.append([s for s in seps if s.vertices <= nbrs and set(e) <= s.vertices])
    return out


def iter_triangle_candidates(g: SimplicialGraph) -> Iterator[tuple]:
    """(triangle, separators) with empty common vertex set, in canonical order."""
    fc = build_flag_complex(g, max_dim=2)
    for tri in fc.triangles:
        cands = candidate_separators(g, tri)
        for combo in product(*cands):
            if not (combo[0].vertices & combo[1].vertices & combo[2].vertices):
                yield tri, combo


def find_redundant_triangle(g: SimplicialGraph) -> RedundantTriangleWitness | None:
    certify_hypotheses(g)
    for tri, seps in iter_triangle_candidates(g):
        t, ws, report = evaluate_triple(g, tri, seps)
        if report.is_redundant:
            return RedundantTriangleWitness(tri, opposite_edges(tri), tuple(seps), t, ws, report)
    return None


def _is_minimal_separator(g: SimplicialGraph, s: frozenset) -> bool:
    if not is_separating(g, s):
        return False
    for k in range(len(s)):
        for sub in combinations(sorted(s), k):
            if is_separating(g, sub):
                return False
    return True


def verify_redundant_triangle(g: SimplicialGraph, triangle, lambda_sets) -> tuple[bool, str]:
    """Check a claimed redundant triangle from first principles."""
    triangle = tuple(triangle)
    if len(set(triangle)) != 3 or not all(g.has_edge(a, b) for a, b in combinations(triangle, 2)):
        return False, "not a triangle"
    sets = [frozenset(s) for s in lambda_sets]
    if len(sets) != 3:
        return False, "need three separators"
    for j, (v, e, s) in enumerate(zip(triangle, opposite_edges(triangle), sets), start=1):
        if not all(x in g for x in s):
            return False, f"Lambda_{j} names unknown vertices"
        if not s <= g.neighbors(v):
            return False, f"Lambda_{j} leaves the link of {v}"
        if not set(e) <= s:
            return False, f"Lambda_{j} misses edge {e}"
        if not _is_minimal_separator(g, s):
            return False, f"Lambda_{j} is not a minimal separating set"
    if sets[0] & sets[1] & sets[2]:
        return False, "the three separators share a vertex"
    subs = [g.full_subgraph(s) for s in sets]
    _, _, report = evaluate_triple(g, triangle, subs)
    if not report.is_redundant:
        return False, "the induced triple of subspaces is not redundant"
    return True, "ok"


def crowned_implies_redundant_dim2(fc: FlagComplex) -> list[RedundantTriangleWitness]:
    """Every crowned triangle of a 2-dimensional complex carries a redundancy witness."""
    if fc.dimension != 2:
        raise DimensionError(f"needs dimension 2, got {fc.dimension}")
    g = fc.base
    certify_hypotheses(g)
    out = []
    for tri in crowned_triangles(fc):
        found = None
        for combo in product(*candidate_separators(g, tri)):
            if combo[0].vertices & combo[1].vertices & combo[2].vertices:
                continue
            t, ws, report = evaluate_triple(g, tri, combo)
            if report.is_redundant:
                found = RedundantTriangleWitness(tri, opposite_edges(tri), tuple(combo), t, ws, report)
                break
        if found is None:
            raise AssertionError(f"crowned triangle {tri} is not redundant")
        out.append(found)
    return out


def resonance_arrangement(g: SimplicialGraph, t: SpanningTree) -> list[RationalSubspace]:
    return [s.subspace for s in bns_complement_arrangement(g, t)]


# -- verdicts -------------------------------------------------------------------------


@dataclass
class RecognitionVerdict:
    status: str
    certificate: dict = field(default_factory=dict)
    blocks: list = field(default_factory=list)
    hypotheses: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)
    tree: SpanningTree | None = None
    dual: DualGraph | None = None
    witness: RedundantTriangleWitness | None = None

    def to_json(self) -> dict:
        out = {"status": self.status, "certificate": self.certificate, "hypotheses": self.hypotheses}
        if self.blocks:
            out["blocks"] = [b.to_json() | {"vertices": list(vs)} for vs, b in self.blocks]
        if self.notes:
            out["notes"] = list(self.notes)
        return out


def _raag_verdict(g: SimplicialGraph, t: SpanningTree) -> RecognitionVerdict:
    ok, witness = verify_tree_2_spanner(g, t)
    if not ok:
        raise AssertionError(f"RAAG certificate fails at {witness}")
    dual = dual_graph(g, t)
    cert = {"kind": "tree_2_spanner", "tree": t.to_json(), "dual_graph": dual.to_json()}
    return RecognitionVerdict(RAAG, cert, tree=t, dual=dual)


def _recognize_block(h: SimplicialGraph) -> RecognitionVerdict:
    t = find_tree_2_spanner(h)
    if t is not None:
        return _raag_verdict(h, t)
    try:
        w = find_redundant_triangle(h)
    except HypothesisNotCertified as exc:
        return RecognitionVerdict(UNKNOWN, {"kind": "none"}, notes=[f"block hypotheses: {exc.detail}"])
    if w is not None:
        ok, why = verify_redundant_triangle(h, w.triangle, [s.vertices for s in w.separators])
        if not ok:
            raise AssertionError(f"redundant triangle witness rejected: {why}")
        cert = {"kind": "redundant_triangle"} | w.to_json()
        return RecognitionVerdict(NOT_RAAG_NOT_ARTIN, cert, witness=w)
    dim = build_flag_complex(h).dimension
    if dim <= 2:
        raise AssertionError("2-dimensional block with neither a spanner nor a redundant triangle")
    return RecognitionVerdict(
        UNKNOWN, {"kind": "none"}, notes=[f"dimension {dim}: no tree 2-spanner and no redundant triangle"]
    )


def recognize(g: SimplicialGraph, seed: int = 0) -> RecognitionVerdict:
    comps = components(g)
    if not comps:
        raise InputError("empty graph")
    if len(comps) > 1:
        parts = [(tuple(sorted(c)), recognize(g.induced(c), seed)) for c in comps]
        return RecognitionVerdict(
            NOT_APPLICABLE,
            {"kind": "disconnected"},
            blocks=parts,
            notes=["graph is disconnected; components are reported separately as free factors"],
        )
    fc = build_flag_complex(g)
    sc = simple_connectivity(fc, seed=seed)
    hyp = {"simple_connectivity": sc.to_json(), "dimension": fc.dimension}
    if sc.verdict == "NOT_SIMPLY_CONNECTED":
        return RecognitionVerdict(NOT_FINITELY_PRESENTED, sc.certificate, hypotheses=hyp)
    if sc.verdict != "SIMPLY_CONNECTED":
        return RecognitionVerdict(UNKNOWN, sc.certificate, hypotheses=hyp,
                                  notes=["simple connectivity could not be certified"])
    if len(g.vertices) == 1:
        return _raag_verdict(g, SpanningTree(g, []))
    blocks = biconnected_components(g)
    hyp["biconnected"] = len(blocks) == 1
    if len(blocks) == 1:
        v = _recognize_block(g)
        v.hypotheses = hyp
        return v
    parts = [(b.sorted_vertices(), _recognize_block(g.induced(b.vertices))) for b in blocks]
    statuses = {p.status for _, p in parts}
    if NOT_RAAG_NOT_ARTIN in statuses:
        bad = next((vs, p) for vs, p in parts if p.status == NOT_RAAG_NOT_ARTIN)
        v = RecognitionVerdict(
            NOT_RAAG_NOT_ARTIN,
            {"kind": "block", "block": list(bad[0])},
            blocks=parts,
            hypotheses=hyp,
            witness=bad[1].witness,
            notes=["a block group is neither RAAG nor Artin; the whole group is their free product"],
        )
        return v
    if UNKNOWN in statuses:
        return RecognitionVerdict(UNKNOWN, {"kind": "block"}, blocks=parts, hypotheses=hyp)
    keys = sorted({e for _, p in parts for e in p.tree.keys})
    t = SpanningTree.from_pairs(g, keys)
    v = _raag_verdict(g, t)
    v.blocks = parts
    v.hypotheses = hyp
    v.notes = ["free product of block groups, each a RAAG"]
    return v
