"""Voltage graphs over Z_n and their derived (cyclic covering) ribbon graphs.

A voltage assignment on a base ribbon graph gives every half-edge ``h`` an
edge voltage ``omega[h]`` (with ``omega[opposite h] = -omega[h]``) and a
corner voltage ``tau[h]`` for the corner between ``h`` and
``next_at_vertex[h]``. The derived graph has half-edges ``(h, x)``, x in Z_n,
encoded as ``h * n + x``, with

    opposite(h, x)       = (opposite h, x + omega[h])
    next_at_vertex(h, x) = (next h,     x + tau[h])

and the deck transformation ``(h, x) -> (h, x + 1)``. A base half-edge that
ends in a P-vertex lifts to P-vertices whose sigma adds ``sigma_shift[h]`` to
the sheet.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .ribbon import RibbonGraph, faces
from .tat import GraphAutomorphism


@dataclass(frozen=True, eq=False)
class VoltageAssignment:
    base: RibbonGraph
    n: int
    omega: tuple[int, ...]
    tau: tuple[int, ...]
    sigma_shift: dict = field(default_factory=dict)

    def __post_init__(self):
        g = self.base
        for h in range(g.num_half_edges):
            if (self.omega[h] + self.omega[g.opposite[h]]) % self.n:
                raise ValueError(f"edge voltage not antisymmetric at half-edge {h}")

    def lift(self, h: int, x: int) -> int:
        return h * self.n + x % self.n

    def sheet(self, lifted: int) -> tuple[int, int]:
        return divmod(lifted, self.n)

    def vertex_voltage(self, h: int) -> int:
        """Sum of corner voltages around the vertex of ``h``."""
        g = self.base
        total, x = self.tau[h], g.next_at_vertex[h]
        while x != h:
            total += self.tau[x]
            x = g.next_at_vertex[x]
        return total % self.n

    def _turn(self, arrival: int) -> tuple[int, int]:
        """Core half-edge after ``arrival`` in the erased rotation, and the corner voltage collected."""
        g = self.base
        acc = self.tau[arrival]
        x = g.next_at_vertex[arrival]
        while not g.is_core(x):
            acc += self.tau[x]
            x = g.next_at_vertex[x]
        return x, acc

    def face_voltage(self, face) -> int:
        g = self.base
        total = 0
        for h in face:
            _, acc = self._turn(g.opposite[h])
            total += self.omega[h] + acc
        return total % self.n

    def face_voltages(self) -> list[int]:
        return [self.face_voltage(f.half_edges) for f in faces(self.base)]

    def path_voltage(self, path) -> int:
        """Voltage of a closed path of base half-edges, turning counterclockwise at each vertex."""
        g = self.base
        total = 0
        for i, h in enumerate(path):
            nxt = path[(i + 1) % len(path)]
            total += self.omega[h]
            x = arrival = g.opposite[h]
            while True:
                total += self.tau[x]
                x = g.next_at_vertex[x]
                if x == nxt:
                    break
                if x == arrival:
                    raise ValueError("path steps between different vertices")
        return total % self.n

    def derived(self, lengths=None) -> RibbonGraph:
        g, n = self.base, self.n
        N = g.num_half_edges
        opp = [0] * (N * n)
        nxt = [0] * (N * n)
        lens = [None] * (N * n)
        base_len = g.lengths if lengths is None else lengths
        for h in range(N):
            o, t, w = g.opposite[h], g.next_at_vertex[h], self.omega[h]
            tv = self.tau[h]
            for x in range(n):
                i = h * n + x
                opp[i] = o * n + (x + w) % n
                nxt[i] = t * n + (x + tv) % n
                lens[i] = base_len[h]
        jump = {}
        for h, target in g.jump.items():
            s = self.sigma_shift.get(h, 0)
            for x in range(n):
                jump[h * n + x] = target * n + (x + s) % n
        return RibbonGraph(tuple(opp), tuple(nxt), tuple(lens), jump)

    def deck(self, derived: RibbonGraph, power: int = 1) -> GraphAutomorphism:
        n = self.n
        perm = tuple((i // n) * n + (i % n + power) % n for i in range(derived.num_half_edges))
        return GraphAutomorphism(derived, perm, n // gcd(n, power % n))
