"""Built-in example graphs, their reference spanning trees and characters."""

from __future__ import annotations

import re

from .errors import InputError
from .graph import SimplicialGraph
from .spanner import SpanningTree


def _g(vertices, edges) -> SimplicialGraph:
    return SimplicialGraph(vertices, [tuple(e.split("-")) for e in edges.split()])


TREFOIL_EDGES = "1-2 1-3 2-3 2-5 3-5 2-4 4-5 3-6 5-6"

# numbering: 1 apex, 2/3 upper central, 5 central bottom, 4/6 outer ears
_STATIC = {
    "trefoil": lambda: _g("123456", TREFOIL_EDGES),
    "extended_trefoil": lambda: _g("1234567", TREFOIL_EDGES + " 1-7 3-7"),
    "c4": lambda: _g("1234", "1-2 2-3 3-4 1-4"),
    "fig5_bouquet": lambda: _g(
        "123456789",
        "1-2 1-3 1-4 1-5 1-6 1-7 1-8 2-5 3-5 4-5 5-6 5-7 6-8 6-9 8-9",
    ),
    "fig6a": lambda: _g("123456", "1-2 2-3 3-4 1-4 2-4 2-5 5-6 3-6 2-6"),
    "fig6b": lambda: _g("123456", "1-2 2-3 3-4 1-4 2-4 2-5 5-6 3-6 3-5"),
    "fig7_cone_p5": lambda: _g("012345", "0-1 0-2 0-3 0-4 0-5 1-2 2-3 3-4 4-5"),
    "fig8_cross_square": lambda: _g("01234", "0-1 0-2 0-3 0-4 1-2 2-3 3-4 1-4"),
    "fig9_right": lambda: _g("01234", "0-1 0-2 1-2 0-3 0-4 3-4"),
    "fig13_3dim": lambda: SimplicialGraph(
        ["a", "b", "c", "u", "v1", "v2", "v3", "w"],
        [
            ("u", "v1"), ("v1", "v2"), ("v2", "u"), ("u", "a"), ("a", "v2"), ("v1", "w"),
            ("w", "v2"), ("u", "b"), ("b", "v1"), ("v1", "c"), ("c", "w"), ("c", "v2"),
            ("v3", "a"), ("v3", "u"), ("v3", "b"), ("v3", "v1"), ("v3", "v2"), ("v3", "w"),
        ],
    ),
    "fig4_diamond": lambda: _g("bmnopt", "t-m t-n t-o t-p b-m b-n b-o b-p m-n n-o o-p"),
    "fig4_house": lambda: _g("opqrsx", "p-q q-r r-s p-s o-p o-q o-r o-s r-x s-x"),
}

# oriented reference trees (tail>head) in coordinate order
_TREES = {
    "trefoil": "5>2 5>3 5>4 5>6 3>1",
    "extended_trefoil": "5>2 5>3 5>4 5>6 3>1 3>7",
    "fig5_bouquet": "1>2 1>3 1>4 1>5 1>6 1>7 6>8 8>9",
    "fig6a": "2>1 2>3 2>4 2>5 2>6",
    "fig6b": "2>3 1>4 2>4 5>6 3>5",
    "fig7_cone_p5": "0>1 0>2 0>3 0>4 0>5",
    "fig8_cross_square": "0>1 0>2 0>3 0>4",
}

# vertex sets of the separators exhibited for the 3-dimensional example
FIG13_LAMBDAS = (("u", "v2", "v3"), ("u", "v1", "v3"), ("v1", "v2", "w"))
FIG13_TRIANGLE = ("v1", "v2", "v3")

# vertex labellings drawn in the figures
FIG7_LABELS = {"0": 0, "1": 1, "2": 0, "3": 0, "4": 0, "5": 1}
FIG8_LABELS = {"0": 0, "1": 1, "2": 1, "3": 2, "4": 2}
FIG9_LABELS = {"0": 0, "1": 1, "2": 1, "3": 1, "4": 1}

_PATTERNS = [
    (re.compile(r"k(\d+)$"), "complete"),
    (re.compile(r"path(\d+)$"), "path"),
    (re.compile(r"fan(\d+)$"), "fan"),
]


def complete_graph(n: int) -> SimplicialGraph:
    vs = [str(i) for i in range(1, n + 1)]
    return SimplicialGraph(vs, [(a, b) for i, a in enumerate(vs) for b in vs[i + 1:]])


def path_graph(n: int) -> SimplicialGraph:
    vs = [str(i) for i in range(1, n + 1)]
    return SimplicialGraph(vs, list(zip(vs, vs[1:])))


def cone(g: SimplicialGraph, apex: str | None = None) -> SimplicialGraph:
    """Join a new vertex to every vertex of ``g``."""
    if apex is None:
        apex = "c"
        while apex in g:
            apex += "'"
    if apex in g:
        raise InputError(f"cone vertex {apex!r} already exists")
    return SimplicialGraph(list(g.vertices) + [apex], list(g.edges) + [(apex, v) for v in g.vertices])


def fan(n: int) -> SimplicialGraph:
    return cone(path_graph(n), apex="0")


def fixture(name: str) -> SimplicialGraph:
    if name.startswith("cone:"):
        return cone(fixture(name[5:]))
    if name in _STATIC:
        return _STATIC[name]()
    for pat, kind in _PATTERNS:
        m = pat.match(name)
        if m:
            n = int(m.group(1))
            if n < 1:
                raise InputError(f"fixture {name!r} needs n >= 1")
            return {"complete": complete_graph, "path": path_graph, "fan": fan}[kind](n)
    raise InputError(f"unknown fixture {name!r}")


def fixture_tree(name: str, g: SimplicialGraph | None = None) -> SpanningTree | None:
    """The reference tree drawn for a fixture, or the spoke tree of a cone."""
    g = fixture(name) if g is None else g
    if name in _TREES:
        return SpanningTree.from_pairs(g, [p.split(">") for p in _TREES[name].split()], oriented=True)
    if name.startswith("cone:") or re.match(r"fan\d+$", name):
        apex = max(g.vertices, key=lambda v: (g.degree(v) == len(g.vertices) - 1, v == "0", v.startswith("c")))
        others = [v for v in g.vertices if v != apex]
        return SpanningTree.from_pairs(g, [(apex, v) for v in others], oriented=True)
    return None


def static_names() -> list[str]:
    return sorted(_STATIC)


def catalog_names() -> list[str]:
    """Every named fixture used by the test suites."""
    return static_names() + ["k3", "k4", "k5", "path3", "path5", "fan4", "fan5", "cone:trefoil", "cone:c4", "cone:path3"]
