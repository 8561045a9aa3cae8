from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from tatseifert.fixtures import circle_graph, k411, theta_graph
from tatseifert.ribbon import (DisconnectedGraph, OffsetOutOfRange, RibbonGraph, ValidationError,
                               faces, subdivide, subdivide_many, surface_invariants, validate)


def brute_faces(g):
    """Face count by following h -> next(opposite(h)) without any shortcuts."""
    seen, count = set(), 0
    for h in range(g.num_half_edges):
        if h in seen:
            continue
        count += 1
        x = h
        while x not in seen:
            seen.add(x)
            x = g.next_at_vertex[g.opposite[x]]
    return count


def test_single_loop_is_valid():
    validate(circle_graph())


def test_star_with_two_consecutive_p_edges_is_rejected():
    # centre with two consecutive spokes ending in P and a loop
    g = RibbonGraph.from_rotations([[0, 2, 4, 5], [1], [3]], [(0, 1), (2, 3), (4, 5)],
                                   [1, 1, 1], sigma={1: 3, 3: 1})
    with pytest.raises(ValidationError) as err:
        validate(g)
    assert err.value.kind == "P-condition"


def test_k411_is_valid():
    validate(k411())


def test_bad_length_is_reported():
    g = circle_graph().with_lengths((Fraction(0), Fraction(0)))
    with pytest.raises(ValidationError) as err:
        validate(g)
    assert err.value.kind == "length"


def test_circle_faces():
    fs = faces(circle_graph(Fraction(3, 2)))
    assert len(fs) == 2
    assert all(f.total_length == Fraction(3, 2) for f in fs)


def test_theta_faces():
    g = theta_graph()
    assert len(faces(g)) == 3 == brute_faces(g)


def test_k411_single_face():
    fs = faces(k411())
    assert len(fs) == 1
    assert len(fs[0]) == 88
    assert fs[0].total_length == 44


@pytest.mark.parametrize("graph, expected", [
    (circle_graph(), (0, 2, 0)),
    (k411(), (15, 1, -29)),
    (theta_graph(), (0, 3, -1)),
])
def test_surface_invariants(graph, expected):
    assert surface_invariants(graph) == expected


def test_disconnected_graph():
    g = RibbonGraph.from_rotations([[0, 1], [2, 3]], [(0, 1), (2, 3)], [1, 1])
    with pytest.raises(DisconnectedGraph):
        surface_invariants(g)


def test_subdivide_loop():
    g = subdivide(circle_graph(), 0, Fraction(1, 2))
    validate(g)
    assert len(g.vertices()) == 2
    assert len(g.edges()) == 2
    assert sorted(g.lengths) == [Fraction(1, 2)] * 4
    assert surface_invariants(g) == (0, 2, 0)


def test_subdivide_k411_keeps_euler_characteristic():
    g = subdivide(k411(), 6, Fraction(1, 4))
    assert surface_invariants(g)[2] == -29


def test_subdivide_theta_keeps_faces():
    g = subdivide(theta_graph(), 2, Fraction(1, 3))
    assert len(faces(g)) == 3 == brute_faces(g)


@pytest.mark.parametrize("offset", [0, 1, Fraction(3, 2), -1])
def test_subdivide_offset_out_of_range(offset):
    with pytest.raises(OffsetOutOfRange):
        subdivide(circle_graph(), 0, offset)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.fractions(min_value=Fraction(1, 100), max_value=Fraction(99, 100)),
                min_size=1, max_size=4, unique=True),
       st.integers(min_value=0, max_value=87))
def test_subdivide_many_preserves_invariants(offsets, h):
    g = k411()
    s = subdivide_many(g, h, [x / 2 for x in offsets])
    validate(s)
    assert surface_invariants(s) == surface_invariants(g)
    assert s.total_length() == g.total_length()
    assert brute_faces(s) == len(faces(s))
