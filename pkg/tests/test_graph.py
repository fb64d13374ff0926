import itertools

import networkx as nx
import pytest

from bbgkit.errors import InputError
from bbgkit.fixtures import fixture
from bbgkit.graph import (
    SimplicialGraph,
    biconnected_components,
    components,
    is_biconnected,
    is_separating,
    link,
    minimal_full_separating_subgraphs,
    minimal_separator_sets,
    separators_brute_force,
    star,
)


def as_nx(g):
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges)
    return h


def test_rejects_loops_and_unknown_endpoints():
    with pytest.raises(InputError):
        SimplicialGraph("ab", [("a", "a")])
    with pytest.raises(InputError):
        SimplicialGraph("ab", [("a", "c")])


def test_duplicate_edges_collapse():
    g = SimplicialGraph("ab", [("a", "b"), ("b", "a")])
    assert g.edges == (("a", "b"),)


def test_json_round_trip_with_hyphenated_names():
    g = SimplicialGraph(["a-1", "b", "c"], [("a-1", "b"), ("b", "c")], {("a-1", "b"): 3, ("b", "c"): 2})
    again = SimplicialGraph.from_json(g.to_json())
    assert again == g
    assert again.weights == g.weights


def test_from_json_rejects_garbage():
    with pytest.raises(InputError):
        SimplicialGraph.from_json("{not json")
    with pytest.raises(InputError):
        SimplicialGraph.from_json({"vertices": ["a"]})


def test_link_of_central_bottom_vertex_in_trefoil():
    g = fixture("trefoil")
    lk = link(g, "5")
    assert lk.vertices == frozenset("2346")
    # ears 4 and 6 hang off the edges 2-5 and 3-5, so the link is the path 4-2-3-6
    assert lk.edges == frozenset({("2", "3"), ("2", "4"), ("3", "6")})
    ref = as_nx(g).subgraph(as_nx(g).neighbors("5"))
    assert lk.edges == {tuple(sorted(e)) for e in ref.edges}
    assert lk.is_full


def test_link_in_single_edge_and_k4():
    g = SimplicialGraph("ab", [("a", "b")])
    assert link(g, "a").vertices == {"b"} and not link(g, "a").edges
    k4 = fixture("k4")
    lk = link(k4, "1")
    assert lk.vertices == frozenset("234") and len(lk.edges) == 3


def test_star_contains_center():
    s = star(fixture("trefoil"), "1")
    assert s.vertices == frozenset("123")


def test_link_of_missing_vertex():
    with pytest.raises(InputError):
        link(fixture("trefoil"), "9")


@pytest.mark.parametrize(
    "name, expected",
    [("trefoil", (True, None)), ("fig9_right", (False, "0")), ("path3", (False, "2"))],
)
def test_biconnectivity(name, expected):
    assert is_biconnected(fixture(name)) == expected


def test_blocks():
    assert sorted(b.sorted_vertices() for b in biconnected_components(fixture("fig9_right"))) == [
        ("0", "1", "2"),
        ("0", "3", "4"),
    ]
    assert len(biconnected_components(fixture("trefoil"))) == 1
    blocks = biconnected_components(fixture("path5"))
    assert len(blocks) == 4 and all(len(b.edges) == 1 for b in blocks)


def test_blocks_match_networkx():
    for name in ["fig5_bouquet", "fig9_right", "trefoil", "cone:path3"]:
        g = fixture(name)
        ours = sorted(b.sorted_vertices() for b in biconnected_components(g))
        ref = sorted(tuple(sorted(c)) for c in nx.biconnected_components(as_nx(g)))
        assert ours == ref


def test_is_separating():
    g = fixture("trefoil")
    assert is_separating(g, {"2", "3"})
    assert sorted(map(sorted, components(g, set(g.vertices) - {"2", "3"}))) == [["1"], ["4", "5", "6"]]
    assert not is_separating(g, {"1", "5"})
    assert not is_separating(g, set())


@pytest.mark.parametrize(
    "name, expected",
    [
        ("trefoil", [{"2", "3"}, {"2", "5"}, {"3", "5"}]),
        ("extended_trefoil", [{"1", "3"}, {"2", "3"}, {"2", "5"}, {"3", "5"}]),
        ("c4", [{"1", "3"}, {"2", "4"}]),
    ],
)
def test_minimal_separators(name, expected):
    g = fixture(name)
    got = sorted(map(sorted, minimal_separator_sets(g)))
    assert got == sorted(map(sorted, expected))
    assert got == sorted(map(sorted, separators_brute_force(g)))


def test_separator_subgraphs_are_full():
    for lam in minimal_full_separating_subgraphs(fixture("extended_trefoil")):
        assert lam.is_full and len(lam.edges) == 1


def test_complete_graph_has_no_separators():
    assert minimal_separator_sets(fixture("k5")) == []


def test_brute_force_oracle_is_itself_exhaustive():
    # independent check of the oracle: every separating set contains a reported one
    g = fixture("fig6b")
    mins = separators_brute_force(g)
    vs = g.vertices
    for r in range(len(vs)):
        for s in itertools.combinations(vs, r):
            if is_separating(g, s):
                assert any(m <= set(s) for m in mins)
