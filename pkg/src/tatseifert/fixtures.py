"""Small graphs used by the tests, the acceptance suite and the CLI demos."""

from fractions import Fraction

from .ribbon import RibbonGraph
from .seifert import PlumbingGraph


def circle_graph(length=1) -> RibbonGraph:
    return RibbonGraph.from_rotations([[0, 1]], [(0, 1)], [length])


def theta_graph(lengths=(1, 1, 1)) -> RibbonGraph:
    """Two vertices joined by three edges, drawn in the plane."""
    return RibbonGraph.from_rotations([[0, 2, 4], [5, 3, 1]], [(0, 1), (2, 3), (4, 5)], lengths)


def complete_bipartite(p: int, q: int, length=Fraction(1, 2)) -> RibbonGraph:
    """K_{p,q} with p vertices on a top line and q on a bottom line, edges straight.

    Edge (i, j) joins top vertex i and bottom vertex j; its half-edge at the top
    is ``2*(i*q + j)`` and at the bottom ``2*(i*q + j) + 1``. Counterclockwise,
    a top vertex sees the bottom row left to right and a bottom vertex sees the
    top row right to left.
    """
    def e(i, j):
        return 2 * (i * q + j)

    top = [[e(i, j) for j in range(q)] for i in range(p)]
    bottom = [[e(i, j) + 1 for i in reversed(range(p))] for j in range(q)]
    edges = [(e(i, j), e(i, j) + 1) for i in range(p) for j in range(q)]
    return RibbonGraph.from_rotations(top + bottom, edges, [length] * len(edges))


def k411() -> RibbonGraph:
    return complete_bipartite(4, 11)


def bounce_graph() -> RibbonGraph:
    """A P-vertex ``u`` joined to ``w`` by an edge of length 1/2, and a loop at ``w``.

    Half-edges: 0 at u, 1 at w (edge u-w); 2, 3 at w (the loop). sigma(u) = u.
    """
    return RibbonGraph.from_rotations([[0], [1, 2, 3]], [(0, 1), (2, 3)],
                                      [Fraction(1, 2), Fraction(1, 2)], sigma={0: 0})


def k411_perturbed() -> RibbonGraph:
    """K_{4,11} with one edge lengthened to 3/5; no longer tete-a-tete."""
    g = k411()
    lens = list(g.lengths)
    lens[0] = lens[1] = Fraction(3, 5)
    return g.with_lengths(lens)


def annulus_plumbing() -> PlumbingGraph:
    """Annulus base with bamboos [2, 2] and [2]."""
    return PlumbingGraph(-3, 0, [[2, 2], [2]], 2)


def trivial_plumbing() -> PlumbingGraph:
    """A solid torus fibered without special fibers: one arrow on a weight-0 vertex."""
    return PlumbingGraph(0, 0, [], 1)
