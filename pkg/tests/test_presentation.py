import networkx as nx
import pytest

from bbgkit.errors import HypothesisNotCertified, InputError
from bbgkit.fixtures import fixture, fixture_tree
from bbgkit.flag import build_flag_complex
from bbgkit.graph import SimplicialGraph
from bbgkit.linalg import rank
from bbgkit.presentation import (
    canonical_commutator,
    commutator,
    dicks_leary,
    free_reduce,
    inverse,
    odd_contraction,
    raag_presentation,
    tree_simplified,
)
from bbgkit.spanner import SpanningTree, canonical_spanning_tree, find_tree_2_spanner


def test_word_basics():
    assert free_reduce((1, 2, -2, -1, 3)) == (3,)
    assert inverse((1, -2)) == (2, -1)
    assert commutator((1,), (2,)) == (-1, -2, 1, 2)
    assert canonical_commutator((2,), (1,)) == canonical_commutator((1,), (2,))


def test_dicks_leary_on_triangle():
    p = dicks_leary(build_flag_complex(fixture("k3")))
    assert len(p.generators) == 3 and len(p.relators) == 2
    assert p.abelianization() == (2, [])


def test_dicks_leary_on_tree_is_free():
    p = dicks_leary(build_flag_complex(fixture("path5")))
    assert len(p.generators) == 4 and p.relators == ()
    assert p.abelianization() == (4, [])


def test_dicks_leary_trefoil_counts():
    p = dicks_leary(build_flag_complex(fixture("trefoil")))
    assert len(p.generators) == 9 and len(p.relators) == 8


def test_refuses_non_simply_connected():
    with pytest.raises(HypothesisNotCertified):
        dicks_leary(build_flag_complex(fixture("c4")))


def test_triangle_tree_presentation_is_z2():
    g = fixture("k3")
    t = SpanningTree.from_pairs(g, [("1", "2"), ("2", "3")])
    p = tree_simplified(build_flag_complex(g), t)
    assert p.generators == ("e1", "e2")
    assert p.commutators == (((1,), (2,)),)


def test_tree_input_gives_free_presentation():
    g = fixture("path3")
    p = tree_simplified(build_flag_complex(g), SpanningTree.from_pairs(g, g.edges))
    assert p.relators == ()


def test_trefoil_tree_presentation_matches_reference_up_to_relabelling():
    g = fixture("trefoil")
    p = tree_simplified(build_flag_complex(g), fixture_tree("trefoil", g))
    assert len(p.generators) == 5
    # reference presentation on a..e: [a,b], [b,c], [c,d], [b^-1 c, e]
    a, b, c, d, e = 3, 1, 2, 4, 5
    reference = {
        canonical_commutator((a,), (b,)),
        canonical_commutator((b,), (c,)),
        canonical_commutator((c,), (d,)),
        canonical_commutator((-b, c), (e,)),
    }
    assert set(p.commutators) == reference
    assert p.exponent_sums_vanish()


def test_extended_trefoil_adds_one_commutator():
    g = fixture("extended_trefoil")
    p = tree_simplified(build_flag_complex(g), fixture_tree("extended_trefoil", g))
    assert canonical_commutator((5,), (6,)) in p.commutators
    assert len(p.commutators) == 5


def test_abelianization_rank_cross_check():
    # free rank via rational rank of the exponent matrix, independent of the SNF
    for name in ["trefoil", "fig13_3dim", "k5", "fig5_bouquet"]:
        g = fixture(name)
        fc = build_flag_complex(g)
        for p in (dicks_leary(fc), tree_simplified(fc, fixture_tree(name, g) or canonical_spanning_tree(g))):
            m = p.exponent_matrix()
            expected = len(p.generators) - (rank(m) if m else 0)
            assert p.abelianization()[0] == expected == len(g.vertices) - 1


def test_raag_presentation_of_cone():
    g = fixture("cone:path3")
    t = fixture_tree("cone:path3", g)
    p = raag_presentation(build_flag_complex(g), t)
    assert len(p.generators) == 3
    assert {frozenset((u[0], v[0])) for u, v in p.commutators} == {frozenset((1, 2)), frozenset((2, 3))}


def test_raag_presentation_fig6_is_p5():
    g = fixture("fig6a")
    p = raag_presentation(build_flag_complex(g), fixture_tree("fig6a", g))
    h = nx.Graph([(u[0], v[0]) for u, v in p.commutators])
    assert nx.is_isomorphic(h, nx.path_graph(5))


def test_raag_presentation_k3():
    g = fixture("k3")
    p = raag_presentation(build_flag_complex(g), find_tree_2_spanner(g))
    assert len(p.generators) == 2 and len(p.relators) == 1


def test_text_and_json_outputs():
    g = fixture("k3")
    p = raag_presentation(build_flag_complex(g), find_tree_2_spanner(g))
    assert p.to_text().startswith("< e1, e2 | [e1, e2] >")
    assert p.to_cas_json() == {"generators": ["e1", "e2"], "relators": ["e1^-1*e2^-1*e1*e2"]}
    assert p.to_json()["kind"] == "RAAG_STANDARD"


def labelled(vs, weights):
    return SimplicialGraph(vs, list(weights), weights)


def test_odd_contraction_all_even():
    g = labelled("abc", {("a", "b"): 2, ("b", "c"): 2})
    assert odd_contraction(g) == SimplicialGraph("abc", [("a", "b"), ("b", "c")])


def test_odd_contraction_all_odd():
    g = labelled("abc", {("a", "b"): 3, ("b", "c"): 5, ("a", "c"): 3})
    h = odd_contraction(g)
    assert h.vertices == ("a+b+c",) and h.edges == ()


def test_odd_contraction_mixed_path():
    h = odd_contraction(labelled("abc", {("a", "b"): 3, ("b", "c"): 2}))
    assert h.vertices == ("a+b", "c") and h.edges == (("a+b", "c"),)


def test_odd_contraction_needs_weights():
    with pytest.raises(InputError):
        odd_contraction(fixture("k3"))
    with pytest.raises(InputError):
        odd_contraction(labelled("ab", {("a", "b"): 0}))
