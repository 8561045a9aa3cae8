from math import gcd

import pytest

from tatseifert.fixtures import annulus_plumbing, circle_graph, complete_bipartite, k411
from tatseifert.horizontal import (HorizontalClass, OrderMismatch, component_count, fundamental_cycles,
                                   horizontal_class, irreducible_part, is_irreducible)
from tatseifert.inverse import realize_tat
from tatseifert.quotient import BranchPoint, branch_points, orbit_graph
from tatseifert.ribbon import RibbonGraph
from tatseifert.seifert import fibering_from_plumbing
from tatseifert.tat import GraphAutomorphism, tat_map


def class_of(a, seed=None):
    orbit = orbit_graph(a)
    return horizontal_class(a.graph, a, branch_points(a), orbit, seed=seed)


@pytest.fixture(scope="module")
def annulus():
    return realize_tat(fibering_from_plumbing(annulus_plumbing()), HorizontalClass(2, (1,)))


def test_segment_has_no_cycles():
    orbit = orbit_graph(tat_map(k411()))
    assert fundamental_cycles(orbit) == []


def test_wedge_of_two_circles():
    g = RibbonGraph.from_rotations([[0, 1, 2, 3]], [(0, 1), (2, 3)], [1, 1])
    cycles = fundamental_cycles(g)
    assert len(cycles) == 2
    assert {c[0] for c in cycles} == {0, 2}


def test_circle_with_two_segments():
    from tatseifert.inverse import build_lambda
    _, deck = build_lambda(fibering_from_plumbing(annulus_plumbing()), HorizontalClass(2, (1,)))
    orbit = orbit_graph(deck)
    cycles = fundamental_cycles(orbit)
    assert len(cycles) == 1
    g = orbit.graph
    loop = [h for h in range(g.num_half_edges) if g.vertex_index()[h] == g.vertex_index()[g.opposite[h]]]
    assert set(cycles[0]) <= set(loop)


def test_k411_class():
    c = class_of(tat_map(k411()))
    assert c.q == 1 and c.p == ()


def test_annulus_class(annulus):
    a = annulus.automorphism
    orbit = orbit_graph(a)
    c = horizontal_class(a.graph, a, branch_points(a), orbit,
                         cycles=annulus.basis_cycles(a, orbit))
    assert (c.p, c.q) == ((1,), 2)
    assert class_of(a).q == 2


def test_identity_on_circle():
    g = circle_graph()
    a = GraphAutomorphism(g, tuple(range(g.num_half_edges)), 1)
    assert class_of(a) == HorizontalClass(1, (0,))


def test_order_mismatch():
    a = tat_map(k411())
    bogus = [BranchPoint(0, 5, 1, 0)]
    with pytest.raises(OrderMismatch):
        horizontal_class(a.graph, a, bogus, orbit_graph(a))


@pytest.mark.parametrize("p, q, count", [((1,), 2, 1), ((0,), 3, 3), ((2, 4), 6, 2)])
def test_component_count(p, q, count):
    c = HorizontalClass(q, p)
    assert component_count(c) == count
    assert is_irreducible(c) == (count == 1)
    assert is_irreducible(irreducible_part(c))


def test_class_serialization():
    assert HorizontalClass(2, (3,)).to_json() == {"q": 2, "p": [1]}


@pytest.mark.parametrize("name", ["k411", "k23", "circle", "annulus"])
def test_spanning_tree_invariance(name, annulus):
    a = {"k411": lambda: tat_map(k411()), "k23": lambda: tat_map(complete_bipartite(2, 3)),
         "circle": lambda: tat_map(circle_graph()), "annulus": lambda: annulus.automorphism}[name]()
    base = class_of(a)
    n = a.order
    m = n // base.q
    assert base.q * m == n
    assert component_count(base) == 1
    for seed in range(5):
        c = class_of(a, seed=seed)
        assert c.q == base.q
        assert gcd(*c.p, c.q) == gcd(*base.p, base.q)
