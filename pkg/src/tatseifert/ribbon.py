"""Metric ribbon graphs with boundary vertices.

A graph is stored as two permutations of the half-edge set ``0..N-1``:
``opposite`` (a fixed-point-free involution pairing half-edges into edges) and
``next_at_vertex`` (whose cycles are the vertices, in counterclockwise order).
Lengths are exact :class:`~fractions.Fraction` values in units of pi, stored
per half-edge (both halves of an edge carry the same value).

Boundary ("P") vertices are univalent vertices that a safe walk leaves by
jumping; they are recorded by their unique half-edge, and ``sigma`` maps each
such half-edge to the half-edge of the target vertex.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence


class ValidationError(ValueError):
    def __init__(self, kind: str, witness, message: str = ""):
        self.kind = kind
        self.witness = witness
        super().__init__(f"{kind}: {message or 'violated'} (witness {witness!r})")


class DisconnectedGraph(ValueError):
    pass


class OffsetOutOfRange(ValueError):
    pass


def cycles_of(perm: Sequence[int], domain: Iterable[int] | None = None) -> list[tuple[int, ...]]:
    """Cycles of ``perm`` restricted to ``domain``, each starting at its least element,
    listed by increasing least element."""
    todo = sorted(range(len(perm)) if domain is None else domain)
    seen = set()
    out = []
    for start in todo:
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        h = perm[start]
        while h != start:
            cyc.append(h)
            seen.add(h)
            h = perm[h]
        out.append(tuple(cyc))
    return out


@dataclass(frozen=True)
class FaceCycle:
    half_edges: tuple[int, ...]
    total_length: Fraction

    def __len__(self):
        return len(self.half_edges)


@dataclass(frozen=True, eq=False)
class RibbonGraph:
    opposite: tuple[int, ...]
    next_at_vertex: tuple[int, ...]
    lengths: tuple[Fraction, ...]
    jump: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "opposite", tuple(self.opposite))
        object.__setattr__(self, "next_at_vertex", tuple(self.next_at_vertex))
        object.__setattr__(self, "lengths", tuple(Fraction(x) for x in self.lengths))
        object.__setattr__(self, "jump", dict(self.jump))

    # -- construction -----------------------------------------------------

    @classmethod
    def from_rotations(cls, rotations: Sequence[Sequence[int]], edges: Sequence[tuple[int, int]],
                       lengths: Sequence | None = None, sigma: Mapping[int, int] | None = None):
        """Build from vertex rotations (lists of half-edges, counterclockwise) and
        edges given as half-edge pairs. ``lengths`` is indexed like ``edges``;
        ``sigma`` maps boundary half-edges to boundary half-edges."""
        n = sum(len(r) for r in rotations)
        nxt = [None] * n
        for rot in rotations:
            for i, h in enumerate(rot):
                nxt[h] = rot[(i + 1) % len(rot)]
        opp = [None] * n
        lens = [None] * n
        if lengths is None:
            lengths = [1] * len(edges)
        for (a, b), x in zip(edges, lengths):
            opp[a], opp[b] = b, a
            lens[a] = lens[b] = Fraction(x)
        if None in nxt or None in opp:
            raise ValidationError("involution", None, "half-edges missing from rotations or edges")
        return cls(tuple(opp), tuple(nxt), tuple(lens), dict(sigma or {}))

    # -- basic combinatorics ----------------------------------------------

    @property
    def num_half_edges(self) -> int:
        return len(self.opposite)

    @property
    def boundary(self) -> frozenset[int]:
        """Half-edges sitting at P-vertices."""
        return frozenset(self.jump)

    def vertices(self) -> list[tuple[int, ...]]:
        return cycles_of(self.next_at_vertex)

    def vertex_index(self) -> list[int]:
        idx = [0] * self.num_half_edges
        for i, cyc in enumerate(self.vertices()):
            for h in cyc:
                idx[h] = i
        return idx

    def edges(self) -> list[int]:
        """Canonical half-edge (the smaller one) of every edge, ascending."""
        return [h for h in range(self.num_half_edges) if h < self.opposite[h]]

    def edge_index(self) -> dict[int, int]:
        """Map every half-edge to the id of its edge."""
        idx = {}
        for i, h in enumerate(self.edges()):
            idx[h] = idx[self.opposite[h]] = i
        return idx

    def length(self, h: int) -> Fraction:
        return self.lengths[h]

    def p_vertex_ids(self) -> list[int]:
        vi = self.vertex_index()
        return sorted(vi[h] for h in self.jump)

    def successor(self, arrival: int) -> int:
        """Departure half-edge of a safe walk that arrives along ``arrival``."""
        j = self.jump.get(arrival)
        return self.next_at_vertex[arrival] if j is None else j

    def is_core(self, h: int) -> bool:
        """True when ``h`` belongs to the erased graph (not on an edge to a P-vertex)."""
        return h not in self.jump and self.opposite[h] not in self.jump

    def is_connected(self) -> bool:
        n = self.num_half_edges
        if n == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            h = stack.pop()
            for x in (self.opposite[h], self.next_at_vertex[h]):
                if x not in seen:
                    seen.add(x)
                    stack.append(x)
        return len(seen) == n

    def core_next(self, h: int) -> int:
        """Rotation at a vertex of the erased graph: skip half-edges leading to P."""
        x = self.next_at_vertex[h]
        while not self.is_core(x):
            x = self.next_at_vertex[x]
        return x

    def total_length(self) -> Fraction:
        return sum((self.lengths[h] for h in self.edges()), Fraction(0))

    def with_lengths(self, lengths: Sequence) -> "RibbonGraph":
        return RibbonGraph(self.opposite, self.next_at_vertex, lengths, self.jump)

    def __eq__(self, other):
        if not isinstance(other, RibbonGraph):
            return NotImplemented
        return (self.opposite == other.opposite and self.next_at_vertex == other.next_at_vertex
                and self.lengths == other.lengths and self.jump == other.jump)

    def __hash__(self):
        return hash((self.opposite, self.next_at_vertex, self.lengths, tuple(sorted(self.jump.items()))))

    def __repr__(self):
        return (f"RibbonGraph(V={len(self.vertices())}, E={len(self.edges())}, "
                f"P={len(self.jump)})")


def validate(g: RibbonGraph) -> None:
    """Raise :class:`ValidationError` naming the first violated invariant."""
    n = g.num_half_edges
    opp, nxt = g.opposite, g.next_at_vertex
    if len(nxt) != n or len(g.lengths) != n:
        raise ValidationError("size", None, "arrays of unequal length")
    for h in range(n):
        if not 0 <= opp[h] < n or opp[h] == h or opp[opp[h]] != h:
            raise ValidationError("involution", h, "opposite must be a fixed-point-free involution")
    if sorted(nxt) != list(range(n)):
        raise ValidationError("permutation", None, "next_at_vertex is not a permutation")
    for h in range(n):
        x = g.lengths[h]
        if not isinstance(x, Fraction) or x <= 0:
            raise ValidationError("length", h, "lengths must be positive rationals")
        if x != g.lengths[opp[h]]:
            raise ValidationError("length", h, "the two halves of an edge disagree")
    P = g.boundary
    for h in P:
        if not 0 <= h < n:
            raise ValidationError("sigma", h, "boundary half-edge out of range")
        if nxt[h] != h:
            raise ValidationError("univalent", h, "P-vertex is not univalent")
        if opp[h] in P:
            raise ValidationError("P-condition", h, "edge joins two P-vertices")
    if sorted(g.jump.values()) != sorted(P):
        raise ValidationError("sigma", None, "sigma is not a permutation of P")
    for h in range(n):
        if nxt[h] == h and h not in P:
            raise ValidationError("univalent", h, "univalent vertex outside P")
    for h in range(n):
        if h in P:
            continue
        a, b = h, nxt[h]
        if a != b and opp[a] in P and opp[b] in P:
            raise ValidationError("P-condition", h, "two consecutive edges lead to P-vertices")


def faces(g: RibbonGraph) -> list[FaceCycle]:
    """Boundary cycles of the thickening of the erased graph.

    A face steps from ``h`` to ``next(opposite(h))`` where ``next`` is the
    rotation of the erased graph.
    """
    core = [h for h in range(g.num_half_edges) if g.is_core(h)]
    perm = list(range(g.num_half_edges))
    for h in core:
        perm[h] = g.core_next(g.opposite[h])
    out = []
    for cyc in cycles_of(perm, core):
        out.append(FaceCycle(cyc, sum((g.lengths[h] for h in cyc), Fraction(0))))
    return out


def face_index(g: RibbonGraph, fcs: list[FaceCycle] | None = None) -> dict[int, int]:
    fcs = faces(g) if fcs is None else fcs
    return {h: i for i, f in enumerate(fcs) for h in f.half_edges}


def surface_invariants(g: RibbonGraph) -> tuple[int, int, int]:
    """(genus, boundary_count, euler_characteristic) of the thickening."""
    if not g.is_connected():
        raise DisconnectedGraph("surface invariants need a connected graph")
    chi = len(g.vertices()) - len(g.edges())
    r = len(faces(g))
    twice_genus = 2 - chi - r
    if twice_genus % 2 or twice_genus < 0:
        raise ValidationError("euler", None, f"inconsistent chi={chi}, r={r}")
    return twice_genus // 2, r, chi


def _split(opp: list, nxt: list, lens: list, h: int, offsets: Iterable) -> None:
    L = lens[h]
    cuts = sorted(set(Fraction(t) for t in offsets))
    for t in cuts:
        if not 0 < t < L:
            raise OffsetOutOfRange(f"offset {t} not inside (0, {L})")
    cur = h
    done = Fraction(0)
    for t in cuts:
        far = opp[cur]
        rest = lens[cur] - (t - done)
        a, b = len(opp), len(opp) + 1
        opp.extend([far, cur])
        nxt.extend([b, a])
        lens.extend([rest, t - done])
        opp[cur], opp[far] = b, a
        lens[cur] = t - done
        lens[far] = rest
        cur = a
        done = t


def subdivide_edges(g: RibbonGraph, cuts: Mapping[int, Iterable]) -> RibbonGraph:
    """Subdivide several edges at once; ``cuts`` maps a half-edge to offsets
    measured from its source. New half-edges get ids after the existing ones,
    in the order of ``cuts``."""
    opp = list(g.opposite)
    nxt = list(g.next_at_vertex)
    lens = list(g.lengths)
    seen = set()
    for h, offsets in cuts.items():
        e = min(h, g.opposite[h])
        if e in seen:
            raise OffsetOutOfRange(f"edge of half-edge {h} listed twice")
        seen.add(e)
        _split(opp, nxt, lens, h, offsets)
    return RibbonGraph(tuple(opp), tuple(nxt), tuple(lens), g.jump)


def subdivide_many(g: RibbonGraph, h: int, offsets: Iterable) -> RibbonGraph:
    """Insert valency-2 vertices on the edge of ``h`` at the given distances from
    the source of ``h``."""
    return subdivide_edges(g, {h: offsets})


def subdivide(g: RibbonGraph, edge: int, offset) -> RibbonGraph:
    """Split the edge of half-edge ``edge`` at ``offset`` from its source."""
    return subdivide_many(g, edge, [offset])
