import random
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from tatseifert.fixtures import annulus_plumbing
from tatseifert.seifert import (NODE_TO_DISK, NODE_TO_NODE, DivisionByZero, EmptyChain, NonIntegralEuler,
                                NotCoprime, NotNormalized, NotStarShaped, PlumbingGraph, SeifertFibering,
                                SeifertPair, cont_frac, euler_b, eval_cont_frac, fibering_from_plumbing,
                                gluing_matrix, gluing_matrix_literal, pair_from_rotation,
                                plumbing_from_fibering, torus_type)

P = SeifertPair


@pytest.mark.parametrize("k, p, pair", [(11, 4, (11, 8)), (4, 3, (4, 1)), (44, -1, (44, 1))])
def test_pair_from_rotation(k, p, pair):
    assert pair_from_rotation(k, p) == P(*pair)


def test_pair_from_rotation_needs_coprime():
    with pytest.raises(NotCoprime):
        pair_from_rotation(6, 4)


@pytest.mark.parametrize("pair, expected", [((3, 2), (1, 3)), ((2, 1), (1, 2)), ((11, 8), (4, 11))])
def test_torus_type(pair, expected):
    assert torus_type(P(*pair)) == expected


def test_torus_type_needs_normalized():
    with pytest.raises(NotNormalized):
        torus_type(P(3, 5))


def test_rotation_round_trip():
    for k in range(2, 40):
        for p in range(-k, 2 * k):
            if gcd(p, k) == 1:
                assert torus_type(pair_from_rotation(k, p)) == (p % k, k)


def test_euler_b():
    assert euler_b([(4, 1), (11, 8), (44, 1)]) == -1
    assert euler_b([]) == 0
    with pytest.raises(NonIntegralEuler):
        euler_b([(2, 1), (3, 2)])


@pytest.mark.parametrize("a, b, chain", [(11, 8, [2, 2, 3, 2]), (4, 1, [4]), (3, 2, [2, 2]), (2, 1, [2])])
def test_cont_frac_examples(a, b, chain):
    assert cont_frac(a, b) == chain
    assert eval_cont_frac(chain) == Fraction(a, b)


def test_cont_frac_exhaustive():
    for a in range(2, 201):
        for b in range(1, a):
            if gcd(a, b) == 1:
                chain = cont_frac(a, b)
                assert min(chain) >= 2
                assert eval_cont_frac(chain) == Fraction(a, b)


def test_twos_chain():
    for k in range(1, 30):
        assert eval_cont_frac([2] * k) == Fraction(k + 1, k)


def test_division_by_zero_reports_depth():
    with pytest.raises(DivisionByZero) as err:
        eval_cont_frac([1, 1, 1])
    assert err.value.depth >= 1


def test_gluing_examples():
    m = gluing_matrix([2], NODE_TO_DISK)
    assert m.rows() == ((0, 1), (1, -2))
    assert m.disk_fraction() == 2
    m = gluing_matrix([2, 2, 3, 2], NODE_TO_NODE)
    assert m.node_fraction() == Fraction(11, 8)
    assert m.det == -1
    for e in range(-5, 10):
        assert gluing_matrix_literal([e]).rows() == ((1, -e), (0, -1))


def test_empty_chain():
    with pytest.raises(EmptyChain):
        gluing_matrix([])


def test_random_gluing_chains():
    rng = random.Random(2024)
    for _ in range(1000):
        chain = [rng.randint(2, 9) for _ in range(rng.randint(1, 8))]
        for case in (NODE_TO_NODE, NODE_TO_DISK):
            lit, closed = gluing_matrix_literal(chain, case), gluing_matrix(chain, case)
            assert lit == closed
            assert lit.det == -1
        assert gluing_matrix(chain, NODE_TO_NODE).node_fraction() == eval_cont_frac(chain)
        assert gluing_matrix(chain, NODE_TO_DISK).disk_fraction() == eval_cont_frac(chain)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(-9, 9), min_size=1, max_size=8))
def test_gluing_determinant_any_weights(chain):
    for case in (NODE_TO_NODE, NODE_TO_DISK):
        m = gluing_matrix(chain, case)
        assert m.det == -1
        assert m == gluing_matrix_literal(chain, case)
    try:
        value = eval_cont_frac(chain)
    except ZeroDivisionError:
        return
    m = gluing_matrix(chain, NODE_TO_NODE)
    if m.a:
        assert m.node_fraction() == value


def test_k411_plumbing():
    f = SeifertFibering(0, 1, [P(11, 8), P(4, 1)], None, [P(44, 1)])
    p = plumbing_from_fibering(f)
    assert p.e == -1
    assert sorted(p.bamboos) == [[2, 2, 3, 2], [4]]
    assert p.arrows == 1
    assert p.arrow_bamboos == [cont_frac(44, 1)]
    back = fibering_from_plumbing(p)
    assert back.key() == (0, 1, (P(4, 1), P(11, 8)))
    assert back.b == -1


def test_trivial_plumbing():
    p = plumbing_from_fibering(SeifertFibering(0, 1, [], 0))
    assert (p.e, p.g, p.bamboos, p.arrows) == (0, 0, [], 1)
    assert fibering_from_plumbing(PlumbingGraph(0, 0, [], 1)).pairs == []


def test_annulus_plumbing():
    f = fibering_from_plumbing(annulus_plumbing())
    assert f.key() == (0, 2, (P(2, 1), P(3, 2)))
    p = plumbing_from_fibering(f)
    assert sorted(p.bamboos) == [[2], [2, 2]]
    assert p.arrows == 2


def test_not_star_shaped():
    with pytest.raises(NotStarShaped):
        fibering_from_plumbing(PlumbingGraph(0, 0, [[1]], 1))
    with pytest.raises(NotStarShaped):
        PlumbingGraph(0, 0, [[]], 1)


def test_normalization_moves_shift_into_b():
    f = SeifertFibering(1, 0, [P(3, 5), P(2, -1), P(1, 4)], 2).normalized()
    assert f.pairs == [P(2, 1), P(3, 2)]
    assert f.b == 2 + 1 - 1 + 4


@st.composite
def fiberings(draw):
    pairs = []
    for _ in range(draw(st.integers(0, 4))):
        a = draw(st.integers(2, 30))
        b = draw(st.integers(1, a - 1).filter(lambda x: gcd(x, a) == 1))
        pairs.append(P(a, b))
    return SeifertFibering(draw(st.integers(0, 3)), draw(st.integers(1, 3)), sorted(pairs),
                           draw(st.integers(-5, 5)))


@settings(max_examples=100, deadline=None)
@given(fiberings())
def test_plumbing_round_trip(f):
    back = fibering_from_plumbing(plumbing_from_fibering(f))
    assert back.key() == f.key()
    assert back.b == f.b
