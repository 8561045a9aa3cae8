import random
from fractions import Fraction
from math import lcm

import pytest

from tatseifert.fixtures import (bounce_graph, circle_graph, complete_bipartite, k411, k411_perturbed,
                                 theta_graph)
from tatseifert.quotient import branch_points
from tatseifert.tat import (GraphAutomorphism, GraphPoint, NotTat, StartAtVertex, boundary_rotation,
                            check_tat, is_tat, perm_order, safe_walk, same_point, tat_map)


def sampled_counterexample(g, samples=400, seed=0):
    """Sampling oracle: compare the two walks at random interior points."""
    rng = random.Random(seed)
    for _ in range(samples):
        h = rng.randrange(g.num_half_edges)
        t = g.lengths[h] * Fraction(rng.randrange(1, 997), 997)
        p = GraphPoint(h, t)
        if not same_point(g, safe_walk(g, p, 1).endpoint, safe_walk(g, p, -1).endpoint):
            return p
    return None


def test_circle_walk_wraps_once():
    res = safe_walk(circle_graph(), GraphPoint(0, Fraction(1, 4)))
    assert res.endpoint == GraphPoint(0, Fraction(1, 4))
    assert res.itinerary == (0, 0)


def test_k411_walks_meet():
    g = k411()
    rng = random.Random(3)
    for _ in range(50):
        p = GraphPoint(rng.randrange(88), Fraction(rng.randrange(1, 50), 100))
        assert same_point(g, safe_walk(g, p, 1).endpoint, safe_walk(g, p, -1).endpoint)


def test_bounce_at_p_vertex():
    g = bounce_graph()
    # start on the u-w edge a quarter away from w, heading to u
    res = safe_walk(g, GraphPoint(1, Fraction(1, 4)), 1)
    assert res.sigma_jumps == (0,)
    assert res.itinerary == (1, 0, 2)
    assert res.endpoint == GraphPoint(2, Fraction(1, 4))


def test_walk_is_deterministic():
    g = k411()
    p = GraphPoint(17, Fraction(1, 7))
    assert safe_walk(g, p, -1) == safe_walk(g, p, -1)


def test_walk_from_vertex_rejected():
    with pytest.raises(StartAtVertex):
        safe_walk(k411(), GraphPoint(0, Fraction(0)))


def test_endpoint_continuity():
    g = k411()
    a = safe_walk(g, GraphPoint(4, Fraction(1, 10)), 1).endpoint
    b = safe_walk(g, GraphPoint(4, Fraction(1, 10) + Fraction(1, 1000)), 1).endpoint
    assert a.half_edge == b.half_edge
    assert b.offset - a.offset == Fraction(1, 1000)


def test_check_tat_fixtures():
    assert check_tat(k411()) is None
    assert check_tat(circle_graph()) is None
    assert is_tat(complete_bipartite(2, 3))


def test_check_tat_finds_counterexamples():
    g = k411().with_lengths([Fraction(1, 3) if h in (0, 1) else Fraction(1, 2) for h in range(88)])
    w = check_tat(g)
    assert w is not None
    p = GraphPoint(w.half_edge, w.offset)
    assert not same_point(g, safe_walk(g, p, 1).endpoint, safe_walk(g, p, -1).endpoint)
    assert sampled_counterexample(g) is not None
    assert check_tat(k411_perturbed()) is not None
    assert check_tat(theta_graph((1, 2, 3))) is not None


def test_checker_agrees_with_sampling_on_tat_graphs():
    for g in (k411(), complete_bipartite(2, 3), circle_graph()):
        assert sampled_counterexample(g, samples=100) is None


def test_circle_map_is_identity():
    a = tat_map(circle_graph())
    assert a.order == 1


def test_k411_order_and_local_orders():
    a = tat_map(k411())
    assert a.order == 44
    assert perm_order(a.power(4)) == 11
    assert perm_order(a.power(11)) == 4


def test_k23_order_is_lcm_of_vertex_orders():
    a = tat_map(complete_bipartite(2, 3))
    ks = [b.isotropy for b in branch_points(a)]
    assert a.order == lcm(*ks) == 6


def test_tat_map_rejects_non_tat():
    with pytest.raises(NotTat):
        tat_map(k411_perturbed())


@pytest.mark.parametrize("make", [k411, circle_graph, lambda: complete_bipartite(2, 3)])
def test_tat_map_structure(make):
    a = tat_map(make())
    g = a.graph
    for h in range(g.num_half_edges):
        assert a.perm[g.opposite[h]] == g.opposite[a.perm[h]]
        assert a.perm[g.next_at_vertex[h]] == g.next_at_vertex[a.perm[h]]
        assert g.lengths[a.perm[h]] == g.lengths[h]
    assert a.is_ribbon_automorphism()
    for b in branch_points(a):
        assert a.order % b.isotropy == 0
    for r in boundary_rotation(a):
        assert a.order % (r.orbit_size * r.rotation.denominator) == 0


def test_k411_boundary_rotation():
    rots = boundary_rotation(tat_map(k411()))
    assert len(rots) == 1
    assert rots[0].orbit_size == 1
    assert rots[0].rotation == Fraction(43, 44)
    assert rots[0].signed == Fraction(-1, 44)
    assert rots[0].walk_rotation == Fraction(1, 44)


def test_identity_rotation_on_circle():
    g = circle_graph()
    ident = GraphAutomorphism(g, tuple(range(g.num_half_edges)), 1)
    rots = boundary_rotation(ident)
    assert [r.rotation for r in rots] == [0, 0]
