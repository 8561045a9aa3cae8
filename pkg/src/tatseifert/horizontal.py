"""Cohomology class of the horizontal surface given by a tete-a-tete graph's
thickening inside the mapping torus."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import gcd, lcm
from typing import Sequence

from .quotient import BranchPoint, OrbitGraph
from .ribbon import DisconnectedGraph, RibbonGraph, cycles_of
from .tat import GraphAutomorphism


class OrderMismatch(ValueError):
    pass


Disconnected = DisconnectedGraph


@dataclass(frozen=True)
class HorizontalClass:
    q: int
    p: tuple[int, ...]
    basis: tuple[tuple[int, ...], ...] = field(default=(), compare=False)

    def __post_init__(self):
        if self.q < 1:
            raise ValueError("q must be positive")
        object.__setattr__(self, "p", tuple(x % self.q for x in self.p))
        object.__setattr__(self, "basis", tuple(tuple(c) for c in self.basis))

    @property
    def mu(self) -> int:
        return len(self.p)

    def to_json(self) -> dict:
        return {"q": self.q, "p": list(self.p)}


def component_count(c: HorizontalClass) -> int:
    return gcd(*c.p, c.q)


def is_irreducible(c: HorizontalClass) -> bool:
    return component_count(c) == 1


def irreducible_part(c: HorizontalClass) -> HorizontalClass:
    d = component_count(c)
    return HorizontalClass(c.q // d, tuple(x // d for x in c.p), c.basis)


def _tree_path(parent: dict, depth: dict, opp, vi, u: int, v: int) -> list[int]:
    """Directed half-edges of the tree path from vertex u to vertex v."""
    up, down = [], []
    while u != v:
        if depth[u] >= depth[v]:
            h = parent[u]          # half-edge at u pointing to its parent
            up.append(h)
            u = vi[opp[h]]
        else:
            h = parent[v]
            down.append(opp[h])    # parent -> v
            v = vi[opp[h]]
    return up + down[::-1]


def fundamental_cycles(orbit: OrbitGraph | RibbonGraph, seed: int | None = None) -> list[tuple[int, ...]]:
    """Closed edge paths, one per edge outside a spanning tree.

    By default the tree is grown breadth-first from vertex 0, trying edges in
    increasing id order, and cycles are listed by increasing id of their
    non-tree edge. ``seed`` shuffles the edge order to pick another tree.
    """
    g = orbit.graph if isinstance(orbit, OrbitGraph) else orbit
    if not g.is_connected():
        raise Disconnected("orbit graph is not connected")
    opp = g.opposite
    vi = g.vertex_index()
    verts = g.vertices()
    edges = g.edges()
    rank = {h: i for i, h in enumerate(edges)}
    if seed is not None:
        order = list(edges)
        random.Random(seed).shuffle(order)
        rank = {h: i for i, h in enumerate(order)}
    erank = {h: rank[min(h, opp[h])] for h in range(g.num_half_edges)}

    parent: dict[int, int] = {}
    depth = {0: 0}
    tree = set()
    frontier = [0]
    while frontier:
        nxt_frontier = []
        for v in frontier:
            for h in sorted(verts[v], key=lambda x: (erank[x], x)):
                w = vi[opp[h]]
                if w not in depth:
                    depth[w] = depth[v] + 1
                    parent[w] = opp[h]
                    tree.add(min(h, opp[h]))
                    nxt_frontier.append(w)
        frontier = nxt_frontier

    cycles = []
    for e in sorted((h for h in edges if h not in tree), key=lambda x: rank[x]):
        start, end = vi[e], vi[opp[e]]
        cycles.append(tuple([e] + _tree_path(parent, depth, opp, vi, end, start)))
    return cycles


def _lift_step(a: GraphAutomorphism, canon, proj, vi, verts, cur: int, target: int) -> int:
    g = a.graph
    w = vi[g.opposite[cur]]
    cands = {canon[x] for x in verts[w] if proj[x] == target}
    if len(cands) != 1:
        raise OrderMismatch(f"lift of the cycle is not unique modulo a^q ({len(cands)} choices)")
    return cands.pop()


def horizontal_class(g: RibbonGraph | None, a: GraphAutomorphism, branch: Sequence[BranchPoint],
                     orbit: OrbitGraph, cycles=None, seed: int | None = None) -> HorizontalClass:
    """(p_1, ..., p_mu; q) for the basis ``cycles`` (default: :func:`fundamental_cycles`).

    Each cycle is lifted to the quotient of the graph by a^q, where the cone
    points no longer branch. Following the lift from a chosen point until it
    closes visits q' points of its fiber; the component is preserved by
    a^k with k = q/q', and the position t of a^k(start) among those points
    gives p = (t - 1) k.
    """
    n = a.order
    m = lcm(*(b.isotropy for b in branch)) if branch else 1
    if n % m:
        raise OrderMismatch(f"lcm of isotropy orders {m} does not divide the order {n}")
    q = n // m
    if cycles is None:
        cycles = fundamental_cycles(orbit, seed)
    G = a.graph
    proj = orbit.projection
    vi = G.vertex_index()
    verts = G.vertices()
    canon = [0] * G.num_half_edges
    for orb in cycles_of(a.power(q)):
        for x in orb:
            canon[x] = orb[0]
    shift = [canon[x] for x in a.perm]
    first_lift: dict[int, int] = {}
    for h in range(G.num_half_edges):
        first_lift.setdefault(proj[h], h)

    ps = []
    for cyc in cycles:
        cyc = list(cyc)
        start = canon[first_lift[cyc[0]]]
        laps = [start]
        cur = start
        while True:
            for target in cyc[1:] + cyc[:1]:
                cur = _lift_step(a, canon, proj, vi, verts, cur, target)
            if cur == start:
                break
            laps.append(cur)
            if len(laps) > q:
                raise OrderMismatch("lift does not close within q laps")
        k = q // len(laps)
        image = start
        for _ in range(k):
            image = shift[image]
        if image not in laps:
            raise OrderMismatch("residual action does not preserve the lifted component")
        t = laps.index(image) + 1
        ps.append((t - 1) * k % q)
    return HorizontalClass(q, tuple(ps), tuple(tuple(c) for c in cycles))
