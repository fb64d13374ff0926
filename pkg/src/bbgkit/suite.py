"""The acceptance battery, shared by the CLI ``paper-suite`` command and the tests."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import networkx as nx

from .arrangement import RationalSubspace, iep_check, iep3, redundant_triple_test, sum_all
from .bns import (
    BbgCharacter,
    bbg_sigma_membership,
    bns_complement_arrangement,
    certify_hypotheses,
    dead_edge_subgraph,
    fibering_character,
    membership_by_extensions,
    membership_by_separators,
)
from .corpus import graph_corpus, random_character_values, two_tree_corpus
from .errors import HypothesisNotCertified
from .fixtures import FIG13_LAMBDAS, FIG13_TRIANGLE, catalog_names, fixture, fixture_tree
from .flag import build_flag_complex, simple_connectivity
from .graph import SimplicialGraph, minimal_separator_sets, separators_brute_force
from .presentation import dicks_leary, raag_presentation, tree_simplified
from .recognition import (
    NOT_FINITELY_PRESENTED,
    NOT_RAAG_NOT_ARTIN,
    RAAG,
    crowned_triangles,
    evaluate_triple,
    iter_triangle_candidates,
    recognize,
    verify_redundant_triangle,
)
from .spanner import (
    SpanningTree,
    canonical_spanning_tree,
    decompose_fans_cones,
    dual_graph,
    find_tree_2_spanner,
    graphs_define_isomorphic_bbgs,
    verify_tree_2_spanner,
    verify_tree_2_spanner_all_pairs,
)

TREFOIL_ROWS = {(1, 0, 0, 0, 0), (0, 1, 0, 0, 0), (1, -1, 0, 0, 0)}
EXTENDED_ROWS = {(1, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0), (1, -1, 0, 0, 0, 0), (0, 0, 0, 0, 1, 0)}


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"{mark} criterion {self.number:2d} ({self.seconds:5.2f}s) {self.title}: {self.detail}"


def _tree_for(name: str, g: SimplicialGraph) -> SpanningTree:
    return fixture_tree(name, g) or canonical_spanning_tree(g)


def certified_fixtures() -> list[str]:
    """Catalog fixtures that are biconnected with certified simple connectivity."""
    out = []
    for name in catalog_names():
        try:
            certify_hypotheses(fixture(name))
        except HypothesisNotCertified:
            continue
        out.append(name)
    return out


def _rows(name: str) -> set:
    g = fixture(name)
    spheres = bns_complement_arrangement(g, fixture_tree(name, g))
    rows = [r for s in spheres for r in s.equations]
    if len(rows) != len(spheres):
        return set()
    return set(rows)


def criterion_1(seed: int) -> tuple[bool, str]:
    rows = _rows("trefoil")
    return rows == TREFOIL_ROWS, f"rows {sorted(rows)}"


def criterion_2(seed: int) -> tuple[bool, str]:
    rows = _rows("extended_trefoil")
    return rows == EXTENDED_ROWS, f"rows {sorted(rows)}"


def criterion_3(seed: int) -> tuple[bool, str]:
    g = fixture("trefoil")
    ws = [s.subspace for s in bns_complement_arrangement(g, fixture_tree("trefoil", g))]
    # order the hyperplanes as y1 = 0, y2 = 0, y1 - y2 = 0
    by_eq = {s.equations[0]: s for s in ws}
    w1, w2, w3 = by_eq[(1, 0, 0, 0, 0)], by_eq[(0, 1, 0, 0, 0)], by_eq[(1, -1, 0, 0, 0)]
    value = iep3(w1, w2, w3)
    sdim = sum_all([w1, w2, w3]).dim
    rep = redundant_triple_test(w1, w2, w3, 0, 1)
    ok = value == 6 and sdim == 5 and rep.is_redundant and rep.iep3_value == 6 and rep.sum_dim == 5
    return ok, f"iep3={value} sum_dim={sdim} redundant={rep.is_redundant}"


def criterion_4(seed: int) -> tuple[bool, str]:
    fails = []

    def expect(name, status):
        v = recognize(fixture(name), seed)
        if v.status != status:
            fails.append(f"{name}: {v.status}")
        return v

    expect("trefoil", NOT_RAAG_NOT_ARTIN)
    expect("extended_trefoil", NOT_RAAG_NOT_ARTIN)
    a, b = expect("fig6a", RAAG), expect("fig6b", RAAG)
    p5 = nx.path_graph(5)
    for name, v in (("fig6a", a), ("fig6b", b)):
        if v.dual is None or not nx.is_isomorphic(v.dual.to_networkx(), p5):
            fails.append(f"{name}: dual not P5")
    ga, gb = fixture("fig6a"), fixture("fig6b")
    if a.tree and b.tree and not graphs_define_isomorphic_bbgs(ga, a.tree, gb, b.tree):
        fails.append("fig6a/fig6b duals differ")
    if not graphs_define_isomorphic_bbgs(ga, fixture_tree("fig6a"), gb, fixture_tree("fig6b")):
        fails.append("fig6a/fig6b reference trees give different duals")
    c = expect("cone:trefoil", RAAG)
    tref = nx.Graph(fixture("trefoil").edges)
    if c.dual is None or not nx.is_isomorphic(c.dual.to_networkx(), tref):
        fails.append("cone:trefoil dual is not the trefoil")
    expect("fig13_3dim", NOT_RAAG_NOT_ARTIN)
    ok13, why = verify_redundant_triangle(fixture("fig13_3dim"), FIG13_TRIANGLE, FIG13_LAMBDAS)
    if not ok13:
        fails.append(f"fig13 witness rejected: {why}")
    expect("c4", NOT_FINITELY_PRESENTED)
    v9 = expect("fig9_right", RAAG)
    if len(v9.blocks) != 2 or any(p.status != RAAG for _, p in v9.blocks):
        fails.append("fig9_right not resolved through two RAAG blocks")
    expect("fig5_bouquet", RAAG)
    return not fails, "; ".join(fails) or "all 10 verdicts as expected"


def criterion_5(seed: int, per_fixture: int = 500) -> tuple[bool, str]:
    rng = random.Random(seed)
    disagreements = 0
    inside = outside = 0
    names = certified_fixtures()
    for name in names:
        g = fixture(name)
        t = _tree_for(name, g)
        spaces = [s.subspace for s in bns_complement_arrangement(g, t)]
        for _ in range(per_fixture):
            chi = BbgCharacter(t, tuple(random_character_values(rng, len(t.edges), spaces)))
            a = membership_by_separators(chi)
            b = membership_by_extensions(chi)
            disagreements += a != b
            inside += a
            outside += not a
    return disagreements == 0, (
        f"{len(names)} fixtures x {per_fixture}: {disagreements} disagreements ({inside} in, {outside} out)"
    )


def criterion_6(seed: int, count: int = 200) -> tuple[bool, str]:
    graphs = []
    for name in certified_fixtures():
        g = fixture(name)
        if build_flag_complex(g).dimension == 2:
            graphs.append(g)
    n_fixtures = len(graphs)
    graphs += two_tree_corpus(seed, count)
    bad = 0
    with_spanner = 0
    for g in graphs:
        fc = build_flag_complex(g)
        found = find_tree_2_spanner(g) is not None
        clean = not crowned_triangles(fc)
        if found != clean:
            bad += 1
        if clean:
            decompose_fans_cones(fc).spanning_tree(g)
        with_spanner += found
    return bad == 0, f"{n_fixtures} fixtures + {count} 2-trees: {bad} disagreements, {with_spanner} with spanners"


def _raag_missing_subspaces(g: SimplicialGraph) -> list[RationalSubspace]:
    n = len(g.vertices)
    out = []
    for s in minimal_separator_sets(g):
        rows = [[int(j == i) for j in range(n)] for i, v in enumerate(g.vertices) if v not in s]
        out.append(RationalSubspace(n, rows))
    return out


def _random_triple(rng: random.Random, m: int):
    def extra(k):
        return [[rng.choice((-1, 0, 0, 1)) for _ in range(m)] for _ in range(k)]

    e1 = [int(i == 0) for i in range(m)]
    e2 = [int(i == 1) for i in range(m)]
    d = [a - b for a, b in zip(e1, e2)]
    return tuple(
        RationalSubspace.from_equations(m, [base] + extra(rng.randint(0, m - 2)))
        for base in (e1, e2, d)
    )


# smallest triple of the required shape that is not redundant yet fits neither dichotomy case
DICHOTOMY_COUNTEREXAMPLE = ([[1, 0], [0, 1]], [[0, 1]], [[1, -1]])


def _tally(rep, counts):
    if rep.is_redundant:
        counts["redundant"] += 1
        counts["inequality"] += not rep.inequality_holds
    else:
        counts["nonredundant"] += 1
        counts["dichotomy"] += not rep.dichotomy_holds


def criterion_7(seed: int, count: int = 50) -> tuple[bool, str]:
    rng = random.Random(seed)
    iep_fail = 0
    for g in graph_corpus(seed, count, 3, 9):
        spaces = _raag_missing_subspaces(g) if len(g.vertices) >= 3 else []
        if len(spaces) >= 2 and not iep_check(spaces).equal:
            iep_fail += 1
    keys = ("redundant", "nonredundant", "inequality", "dichotomy")
    graph_counts = dict.fromkeys(keys, 0)
    sources = [fixture(n) for n in certified_fixtures()]
    sources += [g for g in two_tree_corpus(seed + 1, 40) if crowned_triangles(build_flag_complex(g))]
    for g in sources:
        for tri, seps in iter_triangle_candidates(g):
            _, _, rep = evaluate_triple(g, tri, seps)
            _tally(rep, graph_counts)
    synth_counts = dict.fromkeys(keys, 0)
    triples = [tuple(RationalSubspace.from_equations(2, eqs) for eqs in DICHOTOMY_COUNTEREXAMPLE)]
    triples += [_random_triple(rng, rng.randint(2, 6)) for _ in range(200)]
    for triple in triples:
        _tally(redundant_triple_test(*triple, 0, 1), synth_counts)
    violations = sum(c["inequality"] + c["dichotomy"] for c in (graph_counts, synth_counts))
    ok = iep_fail == 0 and violations == 0

    def fmt(c):
        return (f"{c['redundant']} redundant ({c['inequality']} below bound), "
                f"{c['nonredundant']} non-redundant ({c['dichotomy']} outside dichotomy)")

    return ok, f"iep failures {iep_fail}/{count}; graph triples: {fmt(graph_counts)}; synthetic triples: {fmt(synth_counts)}"


def _random_spanning_tree(rng: random.Random, g: SimplicialGraph) -> SpanningTree:
    edges = list(g.edges)
    rng.shuffle(edges)
    root = {v: v for v in g.vertices}

    def find(x):
        while root[x] != x:
            x = root[x]
        return x

    keep = []
    for u, v in edges:
        a, b = find(u), find(v)
        if a != b:
            root[a] = b
            keep.append((u, v))
    return SpanningTree.from_pairs(g, keep)


def criterion_8(seed: int, count: int = 150) -> tuple[bool, str]:
    rng = random.Random(seed)
    sep_bad = span_bad = checked_trees = 0
    for g in graph_corpus(seed + 7, count, 3, 9):
        if minimal_separator_sets(g) != separators_brute_force(g):
            sep_bad += 1
        for _ in range(3):
            t = _random_spanning_tree(rng, g)
            checked_trees += 1
            if verify_tree_2_spanner(g, t)[0] != verify_tree_2_spanner_all_pairs(g, t)[0]:
                span_bad += 1
        t = find_tree_2_spanner(g)
        if t is not None:
            checked_trees += 1
            if not verify_tree_2_spanner_all_pairs(g, t)[0]:
                span_bad += 1
    return sep_bad == 0 and span_bad == 0, (
        f"{count} graphs: {sep_bad} separator mismatches; {checked_trees} trees, {span_bad} stretch mismatches"
    )


def criterion_9(seed: int) -> tuple[bool, str]:
    bad = []
    names = certified_fixtures()
    for name in names:
        g = fixture(name)
        chi = fibering_character(g, _tree_for(name, g))
        if dead_edge_subgraph(chi).dead_edges or not bbg_sigma_membership(chi) or not bbg_sigma_membership(-chi):
            bad.append(name)
    return not bad, f"{len(names)} fixtures; failures: {bad or 'none'}"


def criterion_10(seed: int) -> tuple[bool, str]:
    bad = []
    checked = skipped = 0
    for name in catalog_names():
        g = fixture(name)
        fc = build_flag_complex(g)
        if not simple_connectivity(fc).certified:
            skipped += 1
            continue
        target = len(g.vertices) - 1
        kinds = [dicks_leary(fc), tree_simplified(fc, _tree_for(name, g))]
        t = find_tree_2_spanner(g)
        if t is not None:
            raag = raag_presentation(fc, t)
            kinds.append(raag)
            dual = {((i + 1,), (j + 1,)) for i, j in dual_graph(g, t).sorted_edges()}
            if set(raag.commutators) != dual or len(raag.relators) != len(dual):
                bad.append(f"{name}: raag relators differ from dual edges")
        for p in kinds:
            checked += 1
            if p.abelianization()[0] != target:
                bad.append(f"{name} {p.kind}: rank {p.abelianization()[0]} != {target}")
    return not bad, f"{checked} presentations checked, {skipped} non-simply-connected fixtures skipped; {bad or 'no failures'}"


CRITERIA: list[tuple[int, str, Callable]] = [
    (1, "trefoil BNS complement rows", criterion_1),
    (2, "extended trefoil BNS complement rows", criterion_2),
    (3, "trefoil inclusion-exclusion failure", criterion_3),
    (4, "recognition verdicts", criterion_4),
    (5, "membership paths agree", criterion_5),
    (6, "spanner exists iff no crowned triangle", criterion_6),
    (7, "inclusion-exclusion and triple lemmas", criterion_7),
    (8, "separator and stretch oracles", criterion_8),
    (9, "fibering character", criterion_9),
    (10, "presentation abelianizations", criterion_10),
]


def run_criterion(number: int, seed: int = 0) -> CriterionResult:
    _, title, fn = CRITERIA[number - 1]
    start = time.perf_counter()
    try:
        ok, detail = fn(seed)
    except Exception as exc:  # a crash is a failed criterion, reported with its cause
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return CriterionResult(number, title, ok, detail, time.perf_counter() - start)


def run_all(seed: int = 0) -> list[CriterionResult]:
    return [run_criterion(n, seed) for n, _, _ in CRITERIA]
