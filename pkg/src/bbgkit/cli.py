"""Command-line front end: ``bbgkit <command> <graph> ...``.

A graph argument is either a path to a graph JSON file or a fixture name
(see ``bbgkit fixtures``).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import bns, presentation, suite
from .errors import BBGKitError, HypothesisNotCertified, InputError, PreconditionError
from .fixtures import catalog_names, fixture, fixture_tree
from .flag import build_flag_complex, classify_boundary, homology_h1, simple_connectivity
from .graph import SimplicialGraph, is_biconnected, is_connected
from .recognition import recognize
from .spanner import (
    SpanningTree,
    canonical_spanning_tree,
    dual_graph,
    find_tree_2_spanner,
)

EXIT_OK, EXIT_SUITE, EXIT_INPUT, EXIT_HYPOTHESIS = 0, 1, 2, 3


def load_graph(arg: str) -> tuple[SimplicialGraph, str | None]:
    """Return the graph and, for fixtures, the fixture name."""
    path = Path(arg)
    if path.suffix == ".json" or path.is_file():
        try:
            text = path.read_text()
        except OSError as exc:
            raise InputError(f"cannot read {arg}: {exc.strerror}") from None
        return SimplicialGraph.from_json(text), None
    return fixture(arg), arg


def parse_tree(g: SimplicialGraph, spec: str) -> SpanningTree:
    pairs = []
    for item in spec.split(","):
        item = item.strip()
        if ">" not in item:
            raise InputError(f"tree edge {item!r} must be written tail>head")
        pairs.append(item.split(">", 1))
    return SpanningTree.from_pairs(g, pairs, oriented=True)


def choose_tree(g: SimplicialGraph, name: str | None, spec: str | None) -> SpanningTree:
    if spec:
        return parse_tree(g, spec)
    if name is not None:
        t = fixture_tree(name, g)
        if t is not None:
            return t
    return canonical_spanning_tree(g)


def format_equation(row) -> str:
    terms = []
    for i, c in enumerate(row):
        if c == 0:
            continue
        mag = "" if abs(c) == 1 else f"{abs(c)}*"
        if not terms:
            terms.append(("-" if c < 0 else "") + f"{mag}y{i + 1}")
        else:
            terms.append(("- " if c < 0 else "+ ") + f"{mag}y{i + 1}")
    return " ".join(terms) + " = 0"


def emit(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=False))


# -- commands -------------------------------------------------------------------


def cmd_fixtures(args) -> int:
    for name in catalog_names():
        g = fixture(name)
        print(f"{name}: {len(g.vertices)} vertices, {len(g.edges)} edges")
    print("families: k<n>, path<n>, fan<n>, cone:<fixture>")
    return EXIT_OK


def cmd_analyze(args) -> int:
    g, _ = load_graph(args.graph)
    fc = build_flag_complex(g)
    counts = fc.counts()
    rank1, torsion = homology_h1(fc)
    out = {
        "vertices": len(g.vertices),
        "edges": len(g.edges),
        "triangles": len(fc.triangles),
        "simplex_counts": counts,
        "dimension": fc.dimension,
        "euler_characteristic": fc.euler_characteristic(),
        "connected": is_connected(g),
        "h1_rank": rank1,
        "h1_torsion": torsion,
    }
    if out["connected"] and len(g.vertices) > 1:
        bic, cut = is_biconnected(g)
        out["biconnected"] = bic
        out["cut_vertex"] = cut
    out["simple_connectivity"] = simple_connectivity(fc, seed=args.seed).verdict if out["connected"] else None
    if fc.dimension == 2:
        b = classify_boundary(fc)
        out["boundary_edges"] = [list(e) for e in sorted(b.boundary_edges)]
        out["interior_vertices"] = sorted(b.interior_vertices)
    if args.json:
        emit(out)
        return EXIT_OK
    print(f"{out['vertices']} vertices, {out['edges']} edges, {out['triangles']} triangles")
    print(f"simplex counts: {counts}  dimension: {fc.dimension}  euler characteristic: {out['euler_characteristic']}")
    h1 = "0" if rank1 == 0 and not torsion else f"rank {rank1}" + (f", torsion {torsion}" if torsion else "")
    print(f"H1 = {h1}")
    if "biconnected" in out:
        print("biconnected" if out["biconnected"] else f"not biconnected (cut vertex {out['cut_vertex']})")
    elif not out["connected"]:
        print("not connected")
    if out["simple_connectivity"]:
        print(f"simple connectivity: {out['simple_connectivity']}")
    if "boundary_edges" in out:
        print("boundary edges: " + " ".join("-".join(e) for e in out["boundary_edges"]))
        print("interior vertices: " + (" ".join(out["interior_vertices"]) or "none"))
    return EXIT_OK


def cmd_recognize(args) -> int:
    g, _ = load_graph(args.graph)
    v = recognize(g, seed=args.seed)
    if args.json:
        emit(v.to_json())
        return EXIT_OK
    print(v.status)
    cert = v.certificate
    if v.dual is not None:
        d = v.dual
        print("tree: " + " ".join(f"{a}>{b}" for a, b in d.tree_edges))
        print(f"dual graph: {len(d.tree_edges)} vertices, edges " + " ".join(f"e{i + 1}-e{j + 1}" for i, j in d.sorted_edges()))
    if v.witness is not None:
        w = v.witness
        print("redundant triangle: " + " ".join(w.triangle))
        for i, s in enumerate(w.separators, 1):
            print(f"  separator {i}: {{{', '.join(s.sorted_vertices())}}}")
        print(f"  iep3 = {w.report.iep3_value}, dim of sum = {w.report.sum_dim}")
    if cert.get("kind") == "block" and "block" in cert:
        print("offending block: " + " ".join(cert["block"]))
    for vs, b in v.blocks:
        print(f"block {{{', '.join(vs)}}}: {b.status}")
    if "cycle" in cert:
        print("nontrivial cycle: " + " ".join(cert["cycle"]))
    for note in v.notes:
        print(f"note: {note}")
    return EXIT_OK


def cmd_bns(args) -> int:
    g, name = load_graph(args.graph)
    t = choose_tree(g, name, args.tree)
    if args.character is not None:
        vals = [bns.parse_rational(x) for x in args.character.split(",")]
        chi = bns.character_from_values(t, vals)
        inside = bns.bbg_sigma_membership(chi)
        dead = bns.dead_separator(chi)
        vanish = bns.dead_edge_subgraph(chi)
        if args.dot:
            print(g.to_dot(red_edges=t.keys, dashed_edges=vanish.dead_edges), end="")
            return EXIT_OK
        if args.json:
            emit({
                "character": chi.to_json(),
                "in_sigma": inside,
                "dead_separator": None if dead is None else list(dead.sorted_vertices()),
                "vanishing": vanish.to_json(),
            })
            return EXIT_OK
        print("IN_SIGMA" if inside else "NOT_IN_SIGMA")
        if dead is not None:
            print("dead separator: {" + ", ".join(dead.sorted_vertices()) + "}")
        return EXIT_OK
    spheres = bns.bns_complement_arrangement(g, t)
    if args.dot:
        print(g.to_dot(red_edges=t.keys), end="")
        return EXIT_OK
    if args.json:
        emit(bns.arrangement_to_json(t, spheres))
        return EXIT_OK
    print("coordinates: " + " ".join(f"y{i + 1}={e.tail}>{e.head}" for i, e in enumerate(t.edges)))
    for s in spheres:
        sep = "{" + ", ".join(s.separator.sorted_vertices()) + "}"
        print(f"{sep}: " + ", ".join(format_equation(r) for r in s.equations))
    return EXIT_OK


def cmd_spanner(args) -> int:
    g, _ = load_graph(args.graph)
    t = find_tree_2_spanner(g)
    if args.dot:
        print(g.to_dot(red_edges=t.keys if t else ()), end="")
        return EXIT_OK
    if t is None:
        if args.json:
            emit({"found": False})
        else:
            print("no tree 2-spanner")
        return EXIT_OK
    d = dual_graph(g, t)
    if args.json:
        emit({"found": True, "tree": t.to_json(), "dual_graph": d.to_json()})
        return EXIT_OK
    print("tree 2-spanner: " + " ".join(f"{e.tail}>{e.head}" for e in t.edges))
    print("dual graph edges: " + (" ".join(f"e{i + 1}-e{j + 1}" for i, j in d.sorted_edges()) or "none"))
    return EXIT_OK


def cmd_presentation(args) -> int:
    g, name = load_graph(args.graph)
    fc = build_flag_complex(g)
    if args.kind == "dl":
        pres = presentation.dicks_leary(fc)
    elif args.kind == "tree":
        pres = presentation.tree_simplified(fc, choose_tree(g, name, args.tree))
    else:
        t = parse_tree(g, args.tree) if args.tree else find_tree_2_spanner(g)
        if t is None:
            raise PreconditionError("no tree 2-spanner: the RAAG presentation needs one")
        pres = presentation.raag_presentation(fc, t)
    if args.cas:
        emit(pres.to_cas_json())
    elif args.json:
        emit(pres.to_json())
    else:
        print(pres.to_text())
    return EXIT_OK


def cmd_paper_suite(args) -> int:
    results = suite.run_all(args.seed)
    for r in results:
        print(r.line())
    failed = [r.number for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} criteria passed")
    return EXIT_SUITE if failed else EXIT_OK


# -- wiring ---------------------------------------------------------------------


def _default_seed() -> int:
    raw = os.environ.get("BBGKIT_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"BBGKIT_SEED must be an integer, got {raw!r}") from None


def build_parser(default_seed: int = 0) -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bbgkit", description="Bestvina-Brady groups of flag complexes.")
    p.add_argument("--seed", type=int, default=default_seed,
                   help="seed for randomized collapse restarts (default: $BBGKIT_SEED or 0)")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_cmd(name, fn, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("graph", help="graph JSON file or fixture name")
        sp.set_defaults(fn=fn)
        return sp

    sp = sub.add_parser("fixtures", help="list built-in graphs")
    sp.set_defaults(fn=cmd_fixtures)

    sp = graph_cmd("analyze", cmd_analyze, "flag complex statistics, H1, biconnectivity, boundary")
    sp.add_argument("--json", action="store_true", help="emit JSON")

    sp = graph_cmd("recognize", cmd_recognize, "decide whether the group is a RAAG, with a certificate")
    sp.add_argument("--json", action="store_true", help="emit the verdict as JSON")

    sp = graph_cmd("bns", cmd_bns, "complement of the BNS-invariant, or membership of one character")
    sp.add_argument("--tree", help="coordinates as comma-separated tail>head tree edges")
    sp.add_argument("--character", help="comma-separated rational values, one per tree edge (e.g. 1,-1/2,0)")
    sp.add_argument("--json", action="store_true", help="emit JSON")
    sp.add_argument("--dot", action="store_true", help="emit DOT: tree edges red, dead edges dashed")

    sp = graph_cmd("spanner", cmd_spanner, "search for a tree 2-spanner")
    sp.add_argument("--json", action="store_true", help="emit JSON")
    sp.add_argument("--dot", action="store_true", help="emit DOT with the spanner in red")

    sp = graph_cmd("presentation", cmd_presentation, "finite presentation of the group")
    sp.add_argument("--kind", choices=("dl", "tree", "raag"), default="tree",
                    help="dl: edge generators; tree: tree-edge generators; raag: dual-graph RAAG")
    sp.add_argument("--tree", help="spanning tree as comma-separated tail>head edges")
    sp.add_argument("--json", action="store_true", help="emit JSON")
    sp.add_argument("--cas", action="store_true", help="emit generator/relator strings for a CAS")

    sp = sub.add_parser("paper-suite", help="run every acceptance check; exit 1 on any failure")
    sp.set_defaults(fn=cmd_paper_suite)
    return p


def main(argv=None) -> int:
    try:
        parser = build_parser(_default_seed())
        args = parser.parse_args(argv)
        return args.fn(args)
    except HypothesisNotCertified as exc:
        print(f"{exc.status}: {exc.detail}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except (InputError, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BBGKitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
