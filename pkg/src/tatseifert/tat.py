"""Safe walks, the tete-a-tete decision procedure and the induced automorphism.

Walks have length 1 (one unit is pi). Arriving at a vertex along half-edge
``h`` a walk departs along ``next_at_vertex[h]``; arriving at a P-vertex it
departs from ``sigma`` of that vertex.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from bisect import bisect_left, bisect_right
from math import lcm

from .ribbon import RibbonGraph, cycles_of, face_index, faces, subdivide_edges, validate

ONE = Fraction(1)


class StartAtVertex(ValueError):
    pass


class NotTat(ValueError):
    pass


@dataclass(frozen=True)
class GraphPoint:
    """Point at distance ``offset`` from the source of ``half_edge``."""
    half_edge: int
    offset: Fraction

    def flipped(self, g: RibbonGraph) -> "GraphPoint":
        return GraphPoint(g.opposite[self.half_edge], g.lengths[self.half_edge] - self.offset)


@dataclass(frozen=True)
class WalkResult:
    endpoint: GraphPoint
    itinerary: tuple[int, ...]
    sigma_jumps: tuple[int, ...]

    @property
    def at_vertex(self) -> bool:
        return self.endpoint.offset == 0


def safe_walk(g: RibbonGraph, start: GraphPoint, direction: int = 1, length=ONE) -> WalkResult:
    """Walk ``length`` from ``start``; ``direction=1`` moves along ``start.half_edge``,
    ``-1`` against it.

    When the walk ends exactly at a vertex the endpoint is reported as offset 0
    on the half-edge it would depart along, except at a P-vertex, where the
    endpoint is the arrival point itself (offset 0 of the P half-edge's
    reverse); :func:`same_point` treats a P-vertex and its sigma-image alike.
    """
    L = g.lengths[start.half_edge]
    if not 0 < start.offset < L:
        raise StartAtVertex(f"start offset {start.offset} is not inside the edge")
    p = start if direction > 0 else start.flipped(g)
    h, t = p.half_edge, Fraction(p.offset)
    remaining = Fraction(length)
    itinerary = [h]
    jumps = []
    while True:
        ahead = g.lengths[h] - t
        if remaining < ahead:
            return WalkResult(GraphPoint(h, t + remaining), tuple(itinerary), tuple(jumps))
        remaining -= ahead
        arrival = g.opposite[h]
        if remaining == 0:
            if arrival in g.jump:
                return WalkResult(GraphPoint(arrival, Fraction(0)), tuple(itinerary), tuple(jumps))
            return WalkResult(GraphPoint(g.next_at_vertex[arrival], Fraction(0)),
                              tuple(itinerary), tuple(jumps))
        if arrival in g.jump:
            jumps.append(arrival)
        h = g.successor(arrival)
        t = Fraction(0)
        itinerary.append(h)


def _point_key(g: RibbonGraph, vi: list[int], p: GraphPoint):
    if p.offset == 0:
        return ("v", vi[p.half_edge])
    h, t = p.half_edge, p.offset
    if h > g.opposite[h]:
        h, t = g.opposite[h], g.lengths[h] - t
    return ("e", h, t)


def same_point(g: RibbonGraph, p: GraphPoint, q: GraphPoint, vi=None) -> bool:
    vi = g.vertex_index() if vi is None else vi
    kp, kq = _point_key(g, vi, p), _point_key(g, vi, q)
    if kp == kq:
        return True
    if p.offset == 0 and q.offset == 0:
        # the jump at a P-vertex is instantaneous: v and sigma(v) are the same moment
        a, b = p.half_edge, q.half_edge
        if a in g.jump and b in g.jump:
            return g.jump[a] == b or g.jump[b] == a
    return False


class _WalkIndex:
    """All safe walks of one graph at once.

    A walk that leaves along ``h`` next leaves along ``successor(opposite h)``;
    the cycles of that permutation are closed walk circuits. Lengths are
    scaled to integers (one unit of walk = ``unit``) and each circuit stores
    prefix sums, so a walk of length one is a modular addition plus a
    binary search.
    """

    def __init__(self, g: RibbonGraph):
        self.g = g
        den = lcm(*(x.denominator for x in g.lengths)) if g.lengths else 1
        self.scale = 2 * den                      # midpoints of cut intervals stay integral
        self.unit = self.scale
        self.L = [int(x * self.scale) for x in g.lengths]
        n = g.num_half_edges
        step = [g.successor(g.opposite[h]) for h in range(n)]
        self.cid = [0] * n
        self.pos = [0] * n
        self.circuits = []
        self.prefix = []
        self.total = []
        for cyc in cycles_of(step):
            pre, acc = [], 0
            for i, h in enumerate(cyc):
                self.cid[h] = len(self.circuits)
                self.pos[h] = acc
                pre.append(acc)
                acc += self.L[h]
            self.circuits.append(cyc)
            self.prefix.append(pre)
            self.total.append(acc)

    def walk(self, h: int, t: int):
        """End of the unit walk from offset ``t`` along ``h``: ``(half_edge, offset)``
        inside an edge, or ``(arrival, None)`` when it stops at a vertex."""
        c = self.cid[h]
        pre = self.prefix[c]
        x = (self.pos[h] + t + self.unit) % self.total[c]
        i = bisect_right(pre, x) - 1
        off = x - pre[i]
        if off == 0:
            cyc = self.circuits[c]
            return self.g.opposite[cyc[i - 1]], None
        return self.circuits[c][i], off

    def breakpoints(self, h: int) -> list[int]:
        """Offsets in (0, L) from which the walk along ``h`` stops at a vertex."""
        c = self.cid[h]
        pre, C, L = self.prefix[c], self.total[c], self.L[h]
        base = (self.pos[h] + self.unit) % C
        out = []
        hi = base + L
        for v in pre[bisect_right(pre, base):bisect_left(pre, min(hi, C))]:
            out.append(v - base)
        if hi > C:
            for v in pre[:bisect_left(pre, hi - C)]:
                out.append(v + C - base)
        return sorted(set(t for t in out if 0 < t < L))


def _same_vertex(g: RibbonGraph, vi, a: int, b: int) -> bool:
    if vi[a] == vi[b]:
        return True
    return a in g.jump and b in g.jump and (g.jump[a] == b or g.jump[b] == a)


def _agree(idx: _WalkIndex, vi, h: int, t: int, interior: bool) -> bool:
    g = idx.g
    o = g.opposite[h]
    fh, ft = idx.walk(h, t)
    bh, bt = idx.walk(o, idx.L[h] - t)
    if ft is None or bt is None:
        return ft is None and bt is None and _same_vertex(g, vi, fh, bh)
    if g.opposite[fh] != bh or ft + bt != idx.L[fh]:
        # same point seen from the same side would mean the walks travel together
        return False if interior else (fh == bh and ft == bt)
    return True


def _cut_points(idx: _WalkIndex, h: int) -> list[int]:
    L = idx.L[h]
    cuts = set(idx.breakpoints(h))
    cuts.update(L - u for u in idx.breakpoints(idx.g.opposite[h]))
    return sorted(cuts)


def check_tat(g: RibbonGraph) -> GraphPoint | None:
    """Return ``None`` when every interior point has coinciding safe walks,
    otherwise a counterexample point."""
    validate(g)
    vi = g.vertex_index()
    idx = _WalkIndex(g)
    for h in g.edges():
        pts = [0] + _cut_points(idx, h) + [idx.L[h]]
        for a, b in zip(pts, pts[1:]):
            mid = (a + b) // 2
            if not _agree(idx, vi, h, mid, True):
                return GraphPoint(h, Fraction(mid, idx.scale))
        for c in pts[1:-1]:
            if not _agree(idx, vi, h, c, False):
                return GraphPoint(h, Fraction(c, idx.scale))
    return None


def is_tat(g: RibbonGraph) -> bool:
    return check_tat(g) is None


# -- permutations -----------------------------------------------------------

def perm_compose(p, q):
    """x -> p[q[x]]."""
    return tuple(p[x] for x in q)


def perm_power(p, k: int):
    n = len(p)
    result = tuple(range(n))
    base = tuple(p)
    if k < 0:
        inv = [0] * n
        for i, x in enumerate(base):
            inv[x] = i
        base, k = tuple(inv), -k
    while k:
        if k & 1:
            result = perm_compose(base, result)
        base = perm_compose(base, base)
        k >>= 1
    return result


def perm_order(p) -> int:
    return lcm(*(len(c) for c in cycles_of(p))) if len(p) else 1


@dataclass(frozen=True, eq=False)
class GraphAutomorphism:
    """Directed-edge permutation of ``graph`` (usually a subdivision of the input)."""
    graph: RibbonGraph
    perm: tuple[int, ...]
    order: int

    def __call__(self, h: int) -> int:
        return self.perm[h]

    def power(self, k: int) -> tuple[int, ...]:
        return perm_power(self.perm, k % self.order if self.order else k)

    def vertex_map(self) -> list[int]:
        vi = self.graph.vertex_index()
        out = [0] * (max(vi) + 1 if vi else 0)
        for h, v in enumerate(vi):
            out[v] = vi[self.perm[h]]
        return out

    def is_ribbon_automorphism(self) -> bool:
        g, a = self.graph, self.perm
        return all(a[g.opposite[h]] == g.opposite[a[h]]
                   and a[g.next_at_vertex[h]] == g.next_at_vertex[a[h]]
                   and g.lengths[a[h]] == g.lengths[h]
                   for h in range(g.num_half_edges))


def tat_map(g: RibbonGraph, max_rounds: int = 64) -> GraphAutomorphism:
    """The automorphism p -> (walk of length pi from p), made simplicial by
    subdividing, with edges inverted by some power split at their midpoints."""
    if check_tat(g) is not None:
        raise NotTat("graph does not have the tete-a-tete property")
    for _ in range(max_rounds):
        idx = _WalkIndex(g)
        cuts = {}
        for h in g.edges():
            pts = _cut_points(idx, h)
            if pts:
                cuts[h] = [Fraction(t, idx.scale) for t in pts]
        if cuts:
            g = subdivide_edges(g, cuts)
            continue
        perm = []
        for h in range(g.num_half_edges):
            end, off = idx.walk(h, idx.L[h] // 2)
            if off is None or 2 * off != idx.L[end]:
                raise NotTat("the walk map is not simplicial on a subdivided edge")
            perm.append(end)
        perm = tuple(perm)
        inverted = {}
        for cyc in cycles_of(perm):
            members = set(cyc)
            for h in cyc:
                if h < g.opposite[h] and g.opposite[h] in members:
                    inverted[h] = [g.lengths[h] / 2]
        if inverted:
            g = subdivide_edges(g, inverted)
            continue
        return GraphAutomorphism(g, perm, perm_order(perm))
    raise NotTat("vertex orbit did not close; walk map is not periodic")


@dataclass(frozen=True)
class BoundaryRotation:
    """Action of an automorphism on one orbit of boundary cycles.

    ``walk_rotation`` is the shift of ``a**orbit_size`` along the face, in the
    direction safe walks travel, as a fraction of the face length.
    ``rotation`` is the same shift measured along the boundary orientation of
    the capping disk, i.e. ``-walk_rotation mod 1``; this is the value that
    feeds the Seifert pair of the capped boundary. ``signed`` lies in (-1/2, 1/2].
    """
    face: tuple[int, ...]
    orbit: tuple[int, ...]
    orbit_size: int
    walk_rotation: Fraction
    rotation: Fraction

    @property
    def signed(self) -> Fraction:
        return self.rotation - 1 if self.rotation > Fraction(1, 2) else self.rotation


def boundary_rotation(a: GraphAutomorphism) -> list[BoundaryRotation]:
    g = a.graph
    fcs = faces(g)
    fi = face_index(g, fcs)
    face_perm = [fi[a.perm[f.half_edges[0]]] for f in fcs]
    out = []
    for orbit in cycles_of(face_perm):
        face = fcs[orbit[0]]
        s = len(orbit)
        b = a.power(s)
        j = face.half_edges.index(b[face.half_edges[0]])
        shift = sum((g.lengths[h] for h in face.half_edges[:j]), Fraction(0))
        walk = shift / face.total_length
        out.append(BoundaryRotation(face.half_edges, orbit, s, walk, (-walk) % 1))
    return out
