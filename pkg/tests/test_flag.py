import random

import networkx as nx
import pytest

from bbgkit.errors import DimensionError
from bbgkit.fixtures import cone, fixture
from bbgkit.flag import (
    build_flag_complex,
    classify_boundary,
    collapse_to_point,
    homology,
    homology_h1,
    simple_connectivity,
    verify_collapse,
)
from bbgkit.graph import SimplicialGraph


def test_trefoil_counts():
    fc = build_flag_complex(fixture("trefoil"))
    assert fc.counts() == [6, 9, 4]
    assert fc.dimension == 2
    assert ("2", "3", "5") in fc.triangles


def test_c4_and_k4_dimensions():
    assert build_flag_complex(fixture("c4")).dimension == 1
    fc = build_flag_complex(fixture("k4"))
    assert fc.dimension == 3 and fc.counts() == [4, 6, 4, 1]


def test_cliques_match_networkx():
    for name in ["fig13_3dim", "k5", "fig5_bouquet", "cone:trefoil"]:
        g = fixture(name)
        h = nx.Graph(list(g.edges))
        ref = {}
        for c in nx.enumerate_all_cliques(h):
            ref.setdefault(len(c), set()).add(tuple(sorted(c)))
        fc = build_flag_complex(g)
        for k, lv in enumerate(fc.levels):
            assert set(lv) == ref[k + 1]
            assert len(lv) == len(set(lv))


def test_faces_present():
    fc = build_flag_complex(fixture("fig13_3dim"))
    for k in range(1, len(fc.levels)):
        lower = set(fc.levels[k - 1])
        for s in fc.levels[k]:
            for i in range(len(s)):
                assert s[:i] + s[i + 1:] in lower


def test_trefoil_boundary():
    b = classify_boundary(build_flag_complex(fixture("trefoil")))
    assert b.boundary_edges == {("1", "2"), ("1", "3"), ("2", "4"), ("4", "5"), ("3", "6"), ("5", "6")}
    assert not b.interior_edges and not b.interior_vertices


def test_fan_boundary_is_path_plus_outer_spokes():
    b = classify_boundary(build_flag_complex(fixture("fan4")))
    assert b.boundary_edges == {("1", "2"), ("2", "3"), ("3", "4"), ("0", "1"), ("0", "4")}


def test_cone_over_square_has_apex_interior():
    b = classify_boundary(build_flag_complex(fixture("cone:c4")))
    assert b.boundary_edges == set(fixture("c4").edges)
    assert b.interior_vertices == {"c"}


def test_boundary_needs_dimension_two():
    with pytest.raises(DimensionError):
        classify_boundary(build_flag_complex(fixture("k4")))
    with pytest.raises(DimensionError):
        classify_boundary(build_flag_complex(fixture("c4")))
    assert classify_boundary(build_flag_complex(fixture("k4")), allow_higher=True).boundary_edges == set()


@pytest.mark.parametrize(
    "name, rank",
    [("c4", 1), ("trefoil", 0), ("fig9_right", 0), ("cone:c4", 0), ("k5", 0)],
)
def test_h1(name, rank):
    assert homology_h1(build_flag_complex(fixture(name))) == (rank, [])


def test_two_holes():
    g = SimplicialGraph("123456", [("1", "2"), ("2", "3"), ("3", "4"), ("4", "1"), ("3", "5"), ("5", "6"), ("6", "4")])
    assert homology_h1(build_flag_complex(g)) == (2, [])


def test_octahedron_has_h2():
    # the suspension of a square, twice, is a 2-sphere
    g = cone(cone(fixture("c4"), "n"), "s")
    g = SimplicialGraph(g.vertices, [e for e in g.edges if set(e) != {"n", "s"}])
    fc = build_flag_complex(g)
    assert homology(fc, 1) == (0, [])
    assert homology(fc, 2) == (1, [])


def test_euler_characteristic_matches_betti_numbers():
    for name in ["trefoil", "c4", "fig13_3dim", "k4"]:
        fc = build_flag_complex(fixture(name))
        betti = [homology(fc, k)[0] for k in range(fc.dimension + 1)]
        assert fc.euler_characteristic() == sum((-1) ** k * b for k, b in enumerate(betti))


def test_simple_connectivity_verdicts():
    assert simple_connectivity(build_flag_complex(fixture("trefoil"))).verdict == "SIMPLY_CONNECTED"
    assert simple_connectivity(build_flag_complex(fixture("k3"))).verdict == "SIMPLY_CONNECTED"
    st = simple_connectivity(build_flag_complex(fixture("c4")))
    assert st.verdict == "NOT_SIMPLY_CONNECTED" and st.h1_rank == 1
    assert "cycle" in st.certificate


def test_collapse_certificate_replays():
    fc = build_flag_complex(fixture("fig13_3dim"))
    steps = collapse_to_point(fc, random.Random(3))
    assert steps is not None
    assert verify_collapse(fc, steps)


def test_simple_connectivity_deterministic():
    fc = build_flag_complex(fixture("fig5_bouquet"))
    assert simple_connectivity(fc, seed=7).to_json() == simple_connectivity(fc, seed=7).to_json()
