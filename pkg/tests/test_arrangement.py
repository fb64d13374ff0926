from fractions import Fraction

import pytest

from bbgkit.arrangement import (
    RationalSubspace,
    intersect,
    iep3,
    iep_check,
    orthogonal_complement,
    redundant_triple_test,
    subspace_sum,
)
from bbgkit.errors import InputError
from bbgkit.fixtures import fixture
from bbgkit.graph import minimal_separator_sets
from bbgkit.suite import DICHOTOMY_COUNTEREXAMPLE


def hyper(m, row):
    return RationalSubspace.from_equations(m, [row])


def eqs(m, *rows):
    return RationalSubspace.from_equations(m, list(rows))


TREFOIL_TRIPLE = (hyper(5, [1, 0, 0, 0, 0]), hyper(5, [0, 1, 0, 0, 0]), hyper(5, [1, -1, 0, 0, 0]))


def test_coordinate_hyperplanes():
    a, b = TREFOIL_TRIPLE[:2]
    assert intersect(a, b).dim == 3
    assert subspace_sum(a, b).dim == 5
    assert intersect(a, a) == a


def test_equations_are_primitive_with_positive_lead():
    w = RationalSubspace.from_equations(4, [[0, -2, 4, 0], [Fraction(1, 2), 0, 0, Fraction(1, 3)]])
    assert w.equations == ((0, 1, -2, 0), (3, 0, 0, 2))


def test_orthogonal_complement_dimension():
    w = eqs(6, [1, 1, 0, 0, 0, 0], [0, 0, 1, -1, 0, 0])
    perp = orthogonal_complement(w)
    assert perp.dim == 2 and orthogonal_complement(perp) == w


def test_iep_tree_cut_vertices():
    g = fixture("path5")
    n = len(g.vertices)
    spaces = [
        RationalSubspace.from_equations(n, [[int(v == x) for x in g.vertices] for v in s])
        for s in minimal_separator_sets(g)
    ]
    assert len(spaces) == 3
    assert iep_check(spaces).equal


def test_iep_trefoil_fails():
    res = iep_check(list(TREFOIL_TRIPLE))
    assert (res.lhs, res.rhs) == (5, 6)
    assert not res.equal


def test_iep_single_subspace():
    assert iep_check([TREFOIL_TRIPLE[0]]).equal


def test_iep3_values():
    assert iep3(*TREFOIL_TRIPLE) == 6
    w = eqs(5, [1, 2, 0, 0, 0], [0, 0, 1, 0, 0])
    assert iep3(w, w, w) == w.dim == 3
    generic = [hyper(5, [1, 2, 3, 4, 5]), hyper(5, [2, -1, 0, 1, 3]), hyper(5, [0, 1, -1, 2, 7])]
    assert iep3(*generic) == 5


def test_trefoil_triple_is_redundant():
    rep = redundant_triple_test(*TREFOIL_TRIPLE, 0, 1)
    assert rep.is_redundant
    assert (rep.iep3_value, rep.sum_dim) == (6, 5)
    assert rep.inequality_holds
    assert rep.xi_vector[:5] == (-1, 0, 0, 0, 0)


def test_q4_triple_with_shared_third_equation():
    # every pairwise intersection of the complements is the e3 line, and xi has no e3 part
    w1 = eqs(4, [1, 0, 0, 0], [0, 0, 1, 0])
    w2 = eqs(4, [0, 1, 0, 0], [0, 0, 1, 0])
    w3 = eqs(4, [1, -1, 0, 0], [0, 0, 1, 0])
    rep = redundant_triple_test(w1, w2, w3, 0, 1)
    assert all(k.dim == 1 for k in rep.k_spaces.values())
    assert rep.is_redundant
    assert (rep.iep3_value, rep.sum_dim) == (4, 3)


def test_q2_lines():
    w1, w2, w3 = hyper(2, [1, 0]), hyper(2, [0, 1]), hyper(2, [1, -1])
    rep = redundant_triple_test(w1, w2, w3, 0, 1)
    assert all(k.dim == 0 for k in rep.k_spaces.values())
    assert rep.is_redundant
    assert (rep.iep3_value, rep.sum_dim) == (3, 2)


def test_dichotomy_case_two():
    # three lines in Q^3; xi = K(a, b, c) with a, b, c spanning the pairwise intersections
    w1 = eqs(3, [1, 0, 0], [0, 1, -1])
    w2 = eqs(3, [0, 1, 0], [1, 0, -1])
    w3 = eqs(3, [1, -1, 0], [1, 0, 1])
    third = Fraction(1, 3)
    a = [-third * x for x in (1, 1, -1)]
    b = [third * x for x in (-1, 2, 1)]
    c = [third * x for x in (-2, 1, -1)]
    p1, p2, p3 = (orthogonal_complement(w) for w in (w1, w2, w3))
    assert p1.contains_vector(a) and p2.contains_vector(a)
    assert p2.contains_vector(b) and p3.contains_vector(b)
    assert p1.contains_vector(c) and p3.contains_vector(c)
    xi = [x + z for x, z in zip(a, c)] + [-x + y for x, y in zip(a, b)] + [-y - z for y, z in zip(b, c)]
    rep = redundant_triple_test(w1, w2, w3, 0, 1)
    assert tuple(xi) == rep.xi_vector
    assert not rep.is_redundant
    assert not any(w.contains_vector([0, 0, 1]) for w in (w1, w2, w3))
    assert rep.dichotomy_case == 2


def test_dichotomy_case_one():
    w = eqs(3, [1, 0, 0], [0, 1, 0])
    rep = redundant_triple_test(w, w, w, 0, 1)
    assert not rep.is_redundant
    assert rep.dichotomy_case == 1


def test_non_redundant_triple_outside_both_dichotomy_cases():
    # W1 = 0, W2 = {y2 = 0}, W3 = {y1 = y2} in Q^2.  With a = -e2 in W1perp & W2perp,
    # b = 0 and c = e2 - e1 in W1perp & W3perp we get (a + c, -a + b, -b - c) = xi,
    # so xi lies in K12 + K23 + K13.  Yet e1 is not in W2perp, and there is no third axis.
    w1, w2, w3 = (RationalSubspace.from_equations(2, e) for e in DICHOTOMY_COUNTEREXAMPLE)
    a, b, c = [0, -1], [0, 0], [-1, 1]
    assert orthogonal_complement(w1).contains_vector(a) and orthogonal_complement(w2).contains_vector(a)
    assert orthogonal_complement(w1).contains_vector(c) and orthogonal_complement(w3).contains_vector(c)
    xi = [x + z for x, z in zip(a, c)] + [-x + y for x, y in zip(a, b)] + [-y - z for y, z in zip(b, c)]
    rep = redundant_triple_test(w1, w2, w3, 0, 1)
    assert tuple(xi) == rep.xi_vector
    assert not rep.is_redundant
    assert not orthogonal_complement(w2).contains_vector([1, 0])
    assert rep.dichotomy_case is None and not rep.dichotomy_holds


def test_containment_violations_rejected():
    with pytest.raises(InputError):
        redundant_triple_test(hyper(3, [0, 1, 0]), hyper(3, [0, 1, 0]), hyper(3, [1, -1, 0]), 0, 1)
    with pytest.raises(InputError):
        redundant_triple_test(*[hyper(3, [1, 0, 0])] * 3, 0, 0)


def test_report_json():
    data = redundant_triple_test(*TREFOIL_TRIPLE, 0, 1).to_json()
    assert data["is_redundant"] and data["iep3"] == 6 and data["k_dims"] == {"12": 0, "23": 0, "13": 0}
