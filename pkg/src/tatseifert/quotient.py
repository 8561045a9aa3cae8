"""Orbit graph of a tete-a-tete automorphism and its branch points."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .ribbon import RibbonGraph, cycles_of, surface_invariants
from .tat import GraphAutomorphism


class NotAutomorphism(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class OrbitGraph:
    graph: RibbonGraph
    projection: tuple[int, ...]  # half-edge of the cover -> half-edge of the quotient
    genus: int
    boundary_count: int


@dataclass(frozen=True)
class BranchPoint:
    vertex: int           # representative vertex id in the automorphism's graph
    isotropy: int         # k
    s: int                # n / k
    rotation: Fraction    # p / k, local rotation of a**s read on the vertex star

    @property
    def p(self) -> int:
        return self.rotation.numerator

    @property
    def k(self) -> int:
        return self.isotropy


def _check(a: GraphAutomorphism) -> None:
    if not a.is_ribbon_automorphism():
        raise NotAutomorphism("permutation does not commute with the ribbon structure")
    g = a.graph
    if any(a.perm[h] not in g.jump for h in g.jump):
        raise NotAutomorphism("P-vertices are not preserved")
    if any(a.perm[g.jump[h]] != g.jump[a.perm[h]] for h in g.jump):
        raise NotAutomorphism("automorphism does not commute with sigma")


def orbit_graph(a: GraphAutomorphism) -> OrbitGraph:
    """Quotient ribbon graph; requires a free action on half-edges."""
    _check(a)
    g = a.graph
    orbits = cycles_of(a.perm)
    proj = [0] * g.num_half_edges
    for i, orb in enumerate(orbits):
        for h in orb:
            proj[h] = i
    if any(proj[g.opposite[h]] == proj[h] for h in range(g.num_half_edges)):
        raise NotAutomorphism("an edge is inverted; subdivide it first")
    rep = [orb[0] for orb in orbits]
    opp = tuple(proj[g.opposite[h]] for h in rep)
    nxt = tuple(proj[g.next_at_vertex[h]] for h in rep)
    lens = tuple(g.lengths[h] for h in rep)
    jump = {proj[h]: proj[t] for h, t in g.jump.items()}
    q = RibbonGraph(opp, nxt, lens, jump)
    genus, r, _ = surface_invariants(q)
    return OrbitGraph(q, tuple(proj), genus, r)


def branch_points(a: GraphAutomorphism) -> list[BranchPoint]:
    g = a.graph
    n = a.order
    verts = g.vertices()
    vmap = a.vertex_map()
    out = []
    for orbit in cycles_of(vmap):
        k = n // len(orbit)
        if k == 1:
            continue
        v = orbit[0]
        star = verts[v]
        s = n // k
        b = a.power(s)
        j = star.index(b[star[0]])
        rot = Fraction(j, len(star))
        if rot.denominator != k:
            raise NotAutomorphism(f"vertex {v}: rotation {rot} has wrong order for isotropy {k}")
        out.append(BranchPoint(v, k, s, rot))
    return out


def hurwitz_defect(a: GraphAutomorphism, orbit: OrbitGraph | None = None) -> int:
    """chi(cover) - [n chi(quotient) - sum over branch orbits (n - n/k)]; zero when consistent."""
    orbit = orbit_graph(a) if orbit is None else orbit
    _, _, chi = surface_invariants(a.graph)
    _, _, chi_q = surface_invariants(orbit.graph)
    n = a.order
    return chi - (n * chi_q - sum(n - n // b.isotropy for b in branch_points(a)))
