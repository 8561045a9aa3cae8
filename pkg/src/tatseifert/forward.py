"""From a tete-a-tete graph to its Seifert data, plumbing graph and horizontal class."""

from __future__ import annotations

from dataclasses import dataclass

from .horizontal import HorizontalClass, horizontal_class
from .quotient import BranchPoint, OrbitGraph, branch_points, hurwitz_defect, orbit_graph
from .ribbon import RibbonGraph
from .seifert import (PlumbingGraph, SeifertFibering, SeifertPair, pair_from_rotation,
                      plumbing_from_fibering)
from .tat import BoundaryRotation, GraphAutomorphism, boundary_rotation, tat_map


@dataclass(frozen=True, eq=False)
class Analysis:
    automorphism: GraphAutomorphism
    orbit: OrbitGraph
    branch: list[BranchPoint]
    boundary: list[BoundaryRotation]
    fibering: SeifertFibering
    plumbing: PlumbingGraph
    horizontal: HorizontalClass

    @property
    def order(self) -> int:
        return self.automorphism.order


def cap_pair(n: int, rot: BoundaryRotation) -> SeifertPair:
    """Pair of the solid torus that caps one boundary orbit of the mapping torus."""
    k = n // rot.orbit_size
    if k == 1:
        return SeifertPair(1, 0)
    p = rot.rotation * k
    if p.denominator != 1:
        raise ValueError(f"boundary rotation {rot.rotation} is not a multiple of 1/{k}")
    return pair_from_rotation(k, int(p))


def fibering_of(a: GraphAutomorphism, orbit: OrbitGraph, branch, boundary) -> SeifertFibering:
    pairs = sorted(pair_from_rotation(b.isotropy, b.p) for b in branch)
    caps = [cap_pair(a.order, r) for r in boundary]
    return SeifertFibering(orbit.genus, orbit.boundary_count, pairs, None, caps)


def analyze(g: RibbonGraph, a: GraphAutomorphism | None = None, seed: int | None = None,
            cycles=None) -> Analysis:
    """Run the forward translation; ``a`` defaults to the tete-a-tete map of ``g``."""
    a = tat_map(g) if a is None else a
    orbit = orbit_graph(a)
    branch = branch_points(a)
    if hurwitz_defect(a, orbit):
        raise ValueError("Riemann-Hurwitz fails for the computed quotient")
    boundary = boundary_rotation(a)
    fib = fibering_of(a, orbit, branch, boundary)
    plumb = plumbing_from_fibering(fib)
    fib.b = plumb.e
    cls = horizontal_class(a.graph, a, branch, orbit, cycles=cycles, seed=seed)
    return Analysis(a, orbit, branch, boundary, fib, plumb, cls)
