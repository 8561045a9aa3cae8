"""From Seifert data and a horizontal class back to a tete-a-tete graph.

The base surface gets a "flower" spine: one central vertex carrying the
handle loops ``a_i, b_i`` (in the order a+, b+, a-, b-), one petal loop per
boundary component except the last, and one pendant segment per special
fiber. The petal insides are the boundary faces ``F_1 .. F_{r-1}``; the
remaining face ``F_r`` is the outer one. Voltages in Z_n (n = q * lcm of the
multiplicities) encode the class and the cone rotations, and the horizontal
surface is the derived graph, on which the deck shift by one sheet is the
monodromy. Lengths come from an exact linear feasibility problem that makes
the safe walk realize that shift.

A face whose voltage is a unit mod n lifts to a single face, and the deck
shift moves along it by ``t`` base laps where ``t * voltage = 1 mod n``; so
a base length ``1/(t + w n)`` makes the face pure. Other faces get a pendant
edge to a P-vertex whose sigma changes sheets (the ``s`` edges of the general
construction), so that the walk closes up after exactly one base lap.
"""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm

from .horizontal import HorizontalClass, component_count, irreducible_part
from .lp import max_min_solution
from .quotient import OrbitGraph
from .ribbon import RibbonGraph, ValidationError, faces, surface_invariants, validate
from .seifert import NonIntegralEuler, SeifertFibering, SeifertPair, euler_b, torus_type
from .tat import GraphAutomorphism, boundary_rotation, check_tat
from .voltage import VoltageAssignment

# walks longer than this many base edges make the checker slow; such
# variants are skipped in favour of ones with shorter walk cycles
WALK_BUDGET = 600


class ClosedManifold(ValueError):
    pass


class ReducibleClass(ValueError):
    pass


class ClassMismatch(ValueError):
    pass


@dataclass(frozen=True)
class LinearSystem:
    variables: tuple[str, ...]
    rows: tuple[tuple[Fraction, ...], ...]
    rhs: tuple[Fraction, ...]

    def __str__(self):
        lines = []
        for row, b in zip(self.rows, self.rhs):
            terms = [(f"{c} " if c != 1 else "") + v for c, v in zip(row, self.variables) if c]
            lines.append(" + ".join(terms) + f" = {b}")
        lines.append("all variables > 0")
        return "\n".join(lines)


class Infeasible(ValueError):
    def __init__(self, message: str, system: LinearSystem | None = None, attempts=()):
        self.system = system
        self.attempts = tuple(attempts)
        detail = f"\n{system}" if system is not None else ""
        super().__init__(message + detail)


# -- the model of the fibering ------------------------------------------------

@dataclass(frozen=True)
class HandyModel:
    """Combinatorial model of the base: genus, boundary count, the branch
    images with their solid-torus types, the arcs ``l_i`` (listed in the
    order they meet the chosen boundary component) and the spine, a wedge of
    homology circles plus one segment per branch image."""
    g: int
    r: int
    pairs: tuple[SeifertPair, ...]
    torus_types: tuple[tuple[int, int], ...]
    arcs: tuple[int, ...]
    loops: tuple[str, ...]
    segments: tuple[int, ...]

    @property
    def mu(self) -> int:
        return len(self.loops)


def handy_model(f: SeifertFibering) -> HandyModel:
    if f.r < 1:
        raise ClosedManifold("the base has no boundary; horizontal surfaces with boundary need r >= 1")
    f = f.normalized()
    pairs = tuple(f.pairs)
    loops = tuple(x for i in range(1, f.g + 1) for x in (f"a{i}", f"b{i}"))
    loops += tuple(f"d{j}" for j in range(1, f.r))
    k = len(pairs)
    return HandyModel(f.g, f.r, pairs, tuple(torus_type(p) for p in pairs),
                      tuple(range(k)), loops, tuple(range(k)))


# -- spines -------------------------------------------------------------------

@dataclass
class _Spine:
    rotations: list[list[int]] = field(default_factory=list)
    edges: list[tuple[int, int]] = field(default_factory=list)
    tau: dict[int, int] = field(default_factory=dict)
    center: int | None = None
    handle_carriers: list[int] = field(default_factory=list)
    petal_carriers: list[int] = field(default_factory=list)
    inside_reps: list[int] = field(default_factory=list)
    outer_rep: int | None = None
    s_edges: dict[int, tuple[int, int]] = field(default_factory=dict)   # face -> (s at c, far end)

    def edge(self) -> tuple[int, int]:
        h = 2 * len(self.edges)
        self.edges.append((h, h + 1))
        return h, h + 1

    @property
    def num_half_edges(self) -> int:
        return 2 * len(self.edges)


def _flower(g: int, r: int, cone_volts: list[int], mode: str) -> _Spine:
    """``mode``: ``pendant`` (cones on segments from the centre), ``petal``
    (cones threaded on the first petal) or ``cycle`` (like ``petal`` with the
    centre smoothed away; needs g = 0, r = 2)."""
    sp = _Spine()
    if mode == "cycle":
        k = len(cone_volts)
        segs = [sp.edge() for _ in range(k)]
        for i in range(k):
            sp.rotations.append([segs[i - 1][1], segs[i][0]])
            sp.tau[segs[i][0]] = cone_volts[i]
        sp.petal_carriers.append(segs[-1][1])
        sp.inside_reps.append(segs[-1][1])
        sp.outer_rep = segs[0][0]
        return sp
    c_rot: list[int] = []
    sp.rotations.append(c_rot)
    sp.center = 0
    for _ in range(g):
        a, b = sp.edge(), sp.edge()
        c_rot += [a[0], b[0], a[1], b[1]]
        sp.handle_carriers += [a[0], b[0]]
    for j in range(r - 1):
        if mode == "petal" and j == 0 and cone_volts:
            k = len(cone_volts)
            segs = [sp.edge() for _ in range(k + 1)]
            c_rot += [segs[0][0], segs[-1][1]]
            for i in range(k):
                sp.rotations.append([segs[i][1], segs[i + 1][0]])
                sp.tau[segs[i + 1][0]] = cone_volts[i]
            sp.petal_carriers.append(segs[-1][1])
            sp.inside_reps.append(segs[-1][1])
        else:
            d = sp.edge()
            c_rot += [d[0], d[1]]
            sp.petal_carriers.append(d[1])
            sp.inside_reps.append(d[1])
    if mode == "pendant":
        for v in cone_volts:
            e = sp.edge()
            c_rot.append(e[0])
            sp.rotations.append([e[1]])
            sp.tau[e[1]] = v
    return sp


def _base_graph(sp: _Spine, lengths=None) -> RibbonGraph:
    sigma = {far: far for _, far in sp.s_edges.values()}
    return RibbonGraph.from_rotations(sp.rotations, sp.edges, lengths, sigma)


def _face_of(base: RibbonGraph, fcs, rep: int) -> int:
    for i, f in enumerate(fcs):
        if rep in f.half_edges:
            return i
    raise ValueError(f"half-edge {rep} is on no face")


def _ordered_faces(sp: _Spine, base: RibbonGraph, r: int) -> list:
    """Faces of the base listed as F_1 .. F_r."""
    fcs = faces(base)
    if len(fcs) != r:
        raise ValueError(f"spine has {len(fcs)} faces, expected {r}")
    order = [_face_of(base, fcs, rep) for rep in sp.inside_reps]
    rest = [i for i in range(len(fcs)) if i not in order]
    return [fcs[i] for i in order + rest]


def _add_s_edge(sp: _Spine, base: RibbonGraph, face, j: int) -> None:
    """Insert a pendant edge to a P-vertex at a corner of the centre on ``face``."""
    c_rot = sp.rotations[sp.center]
    for h in face.half_edges:
        arrival = base.opposite[h]
        if arrival in c_rot:
            s = sp.edge()
            c_rot.insert(c_rot.index(arrival) + 1, s[0])
            sp.rotations.append([s[1]])
            sp.s_edges[j] = s
            return
    raise ValueError("face does not pass the centre")


# -- class data -----------------------------------------------------------------

def cycle_voltage(p: int, q: int) -> int:
    """Voltage mod q of a basis cycle whose class entry is ``p``: the inverse of
    p -> k (theta/k)^-1 mod q/k with k = gcd(p, q)."""
    k = gcd(p, q)
    qq = q // k
    if qq == 1:
        return 0
    return k * pow((p // k) % qq, -1, qq) % q


def _signed(x: int, n: int) -> int:
    x %= n
    return x - n if 2 * x > n else x


def _unit_inverse(x: int, n: int) -> int:
    """t in 1..n with t x = 1 mod n."""
    if n == 1:
        return 1
    t = pow(x % n, -1, n)
    return t if t else n


@dataclass(frozen=True)
class _Targets:
    n: int
    m: int
    q: int
    cone_volts: tuple[int, ...]
    handle_thetas: tuple[int, ...]
    face_volts: tuple[int, ...]     # Omega_1 .. Omega_r


def _cap_voltage(pair: SeifertPair, n: int) -> int | None:
    a, b = pair.alpha, pair.beta
    if n % a:
        return None
    return (n // a) * b % n


def _choose_targets(f: SeifertFibering, h: HorizontalClass) -> _Targets:
    g, r = f.g, f.r
    q = h.q
    m = lcm(*(p.alpha for p in f.pairs)) if f.pairs else 1
    n = m * q
    cone_volts = tuple((-p.beta * (n // p.alpha)) % n for p in f.pairs)
    thetas = [cycle_voltage(x, q) for x in h.p]
    handle = tuple(thetas[:2 * g])
    petal = thetas[2 * g:]
    total = sum(cone_volts) % n

    def score(omegas):
        return (sum(gcd(o, n) != 1 for o in omegas), sum(abs(_signed(o, n)) for o in omegas), omegas)

    best = None
    if f.boundary_pairs is not None:
        if len(f.boundary_pairs) != r:
            raise ClassMismatch(f"{len(f.boundary_pairs)} boundary pairs for {r} boundary components")
        for perm in sorted(set(itertools.permutations(f.boundary_pairs))):
            omegas = [_cap_voltage(p, n) for p in perm]
            if None in omegas or sum(omegas) % n != total:
                continue
            if any((o - t) % q for o, t in zip(omegas, petal)):
                continue
            s = score(tuple(omegas))
            if best is None or s < best:
                best = s
        if best is None:
            raise ClassMismatch("boundary framing is incompatible with the class or the multiplicities")
    else:
        for ys in itertools.product(range(m), repeat=r - 1):
            omegas = [(t + q * y) % n for t, y in zip(petal, ys)]
            omegas.append((total - sum(omegas)) % n)
            s = score(tuple(omegas))
            if best is None or s < best:
                best = s
    return _Targets(n, m, q, cone_volts, handle, best[2])


# -- assembling a candidate -------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Realization:
    """A metric tete-a-tete graph built from Seifert data.

    ``basis`` lists, in the order of the class entries, closed paths of base
    half-edges (handle loops, then the petal faces) whose lifts carry the class.
    """
    graph: RibbonGraph
    automorphism: GraphAutomorphism
    voltages: VoltageAssignment
    basis: tuple[tuple[int, ...], ...]
    face_voltages: tuple[int, ...]
    variant: str
    system: LinearSystem
    copies: int = 1

    @property
    def n(self) -> int:
        return self.voltages.n

    @property
    def is_pure(self) -> bool:
        return not self.graph.jump

    def basis_cycles(self, automorphism: GraphAutomorphism, orbit: OrbitGraph) -> list[tuple[int, ...]]:
        """The basis paths expressed in ``orbit``, the quotient by ``automorphism``
        (which may live on a subdivision of :attr:`graph`)."""
        G = automorphism.graph
        N0 = self.graph.num_half_edges
        proj = orbit.projection
        out = []
        for path in self.basis:
            cyc = []
            for h in path:
                y = self.voltages.lift(h, 0)
                while True:
                    cyc.append(proj[y])
                    w = G.opposite[y]
                    if w < N0:
                        break
                    y = G.next_at_vertex[w]
            out.append(tuple(cyc))
        return out


def _voltages(sp: _Spine, base: RibbonGraph, t: _Targets, fcs) -> VoltageAssignment:
    n = t.n
    N = base.num_half_edges
    omega = [0] * N
    for hc, theta in zip(sp.handle_carriers, t.handle_thetas):
        omega[hc] = theta % n
        omega[base.opposite[hc]] = -theta % n
    tau = [0] * N
    for hh, v in sp.tau.items():
        tau[hh] = v % n
    va = VoltageAssignment(base, n, tuple(omega), tuple(tau))
    for j, hc in enumerate(sp.petal_carriers):
        face = fcs[j].half_edges
        if base.opposite[hc] in face:
            raise ValueError("petal carrier lies on both sides of its face")
        cur = va.face_voltage(face)
        omega[hc] = (omega[hc] + t.face_volts[j] - cur) % n
        omega[base.opposite[hc]] = -omega[hc] % n
        va = VoltageAssignment(base, n, tuple(omega), tuple(tau))
    shifts = {}
    for j, (_, far) in sp.s_edges.items():
        shifts[far] = (1 - t.face_volts[j]) % n
    va = VoltageAssignment(base, n, tuple(omega), tuple(tau), shifts)
    got = [va.face_voltage(f.half_edges) for f in fcs]
    if got != [x % n for x in t.face_volts]:
        raise AssertionError(f"face voltages {got} differ from targets {t.face_volts}")
    return va


def _length_system(base: RibbonGraph, fcs, sp: _Spine, targets: list[Fraction]) -> LinearSystem:
    edges = base.edges()
    col = {}
    for i, e in enumerate(edges):
        col[e] = col[base.opposite[e]] = i
    names = []
    s_cols = {col[s[0]]: j for j, s in sp.s_edges.items()}
    for i, e in enumerate(edges):
        names.append(f"s{s_cols[i] + 1}" if i in s_cols else f"e{i}")
    rows = []
    for j, f in enumerate(fcs):
        row = [Fraction(0)] * len(edges)
        for hh in f.half_edges:
            row[col[hh]] += 1
        if j in sp.s_edges:
            row[col[sp.s_edges[j][0]]] += 2
        rows.append(tuple(row))
    return LinearSystem(tuple(names), tuple(rows), tuple(targets))


@dataclass(frozen=True)
class _Variant:
    mode: str
    s_faces: frozenset
    wraps: tuple[int, ...]

    @property
    def label(self) -> str:
        parts = [self.mode]
        if self.s_faces:
            parts.append("s:" + ",".join(str(j + 1) for j in sorted(self.s_faces)))
        if any(self.wraps):
            parts.append("wraps:" + ",".join(map(str, self.wraps)))
        return " ".join(parts)


def _face_targets(t: _Targets, v: _Variant) -> list[Fraction]:
    out = []
    for j, o in enumerate(t.face_volts):
        if j in v.s_faces:
            out.append(Fraction(1))
        else:
            out.append(Fraction(1, _unit_inverse(o, t.n) + v.wraps[j] * t.n))
    return out


def _walk_cost(t: _Targets, v: _Variant, fcs) -> int:
    cost = 0
    for j, f in enumerate(fcs):
        laps = 1 if j in v.s_faces else _unit_inverse(t.face_volts[j], t.n) + v.wraps[j] * t.n
        cost = max(cost, laps * (len(f.half_edges) + 2))
    return cost


def _build(f: SeifertFibering, t: _Targets, v: _Variant):
    """Spine, voltages and length system for one variant; lengths may be None."""
    sp = _flower(f.g, f.r, list(t.cone_volts), v.mode)
    base = _base_graph(sp)
    fcs = _ordered_faces(sp, base, f.r)
    for j in sorted(v.s_faces):
        _add_s_edge(sp, base, fcs[j], j)
    base = _base_graph(sp)
    fcs = _ordered_faces(sp, base, f.r)
    va = _voltages(sp, base, t, fcs)
    system = _length_system(base, fcs, sp, _face_targets(t, v))
    return sp, base, fcs, va, system


def _basis(sp: _Spine, fcs) -> tuple[tuple[int, ...], ...]:
    loops = [(h,) for h in sp.handle_carriers]
    petals = [tuple(fcs[j].half_edges) for j in range(len(sp.petal_carriers))]
    return tuple(loops + petals)


def _variants(f: SeifertFibering, t: _Targets):
    r, n = f.r, t.n
    nonpure = frozenset(j for j, o in enumerate(t.face_volts) if gcd(o, n) != 1)
    zero = (0,) * r
    yield _Variant("pendant", nonpure, zero)
    if r >= 2 and f.pairs and not nonpure:
        yield _Variant("cycle" if f.g == 0 and r == 2 else "petal", frozenset(), zero)
    # wrap the pure petals until they fit inside the outer face
    lens = {j: Fraction(1, _unit_inverse(t.face_volts[j], n)) for j in range(r - 1) if j not in nonpure}
    outer = Fraction(1) if (r - 1) in nonpure else Fraction(1, _unit_inverse(t.face_volts[-1], n))
    wraps = [0] * r
    budget = 2 * n
    while lens and sum(lens.values()) >= outer and budget:
        j = max(lens, key=lambda i: (lens[i], -i))
        wraps[j] += 1
        lens[j] = Fraction(1, _unit_inverse(t.face_volts[j], n) + wraps[j] * n)
        budget -= 1
    if any(wraps):
        yield _Variant("pendant", nonpure, tuple(wraps))
    yield _Variant("pendant", frozenset(range(r)), zero)


def _disk() -> Realization:
    """The trivial fibering over a disk: a path whose two P-ends are swapped by sigma."""
    rot = [[0], [1, 2], [3, 4], [5]]
    edges = [(0, 1), (2, 3), (4, 5)]
    lens = [Fraction(1, 4), Fraction(1, 2), Fraction(1, 4)]
    base = RibbonGraph.from_rotations(rot, edges, lens, {0: 5, 5: 0})
    va = VoltageAssignment(base, 1, (0,) * 6, (0,) * 6)
    graph = va.derived()
    system = LinearSystem(("e0", "e1", "e2"), ((Fraction(1), Fraction(1), Fraction(1)),), (Fraction(1),))
    return Realization(graph, va.deck(graph), va, (), (0,), "disk", system)


def _check_class(f: SeifertFibering, h: HorizontalClass) -> None:
    mu = 2 * f.g + f.r - 1
    if len(h.p) != mu:
        raise ClassMismatch(f"class has {len(h.p)} entries; the base needs {mu}")


def _split_copies(h: HorizontalClass, copies: bool) -> tuple[HorizontalClass, int]:
    d = component_count(h)
    if d == 1:
        return h, 1
    if not copies:
        raise ReducibleClass(f"class is reducible: the surface has {d} components")
    warnings.warn(f"class has {d} components; realizing the irreducible part", stacklevel=3)
    return irreducible_part(h), d


def _check_euler(f: SeifertFibering) -> None:
    if f.boundary_pairs is not None:
        euler_b([tuple(p) for p in list(f.pairs) + list(f.boundary_pairs)])


def realize_tat(f: SeifertFibering, h: HorizontalClass, copies: bool = False,
                verify: bool = True) -> Realization:
    """A metric tete-a-tete graph whose monodromy has Seifert data ``f`` and
    horizontal class ``h`` (with respect to the basis of :class:`Realization`).

    Variants are tried in order: pure faces with the cone points on pendant
    segments; pure faces with the cone points on the first petal; pure faces
    with the petals wound several times; sigma pendants on every face. The
    first whose length system is feasible (and, with ``verify``, whose
    output passes the checker) wins.
    """
    f = f.normalized()
    handy_model(f)
    _check_class(f, h)
    h, d = _split_copies(h, copies)
    _check_euler(f)
    if f.g == 0 and f.r == 1 and not f.pairs:
        res = _disk()
        return Realization(res.graph, res.automorphism, res.voltages, res.basis, res.face_voltages,
                           res.variant, res.system, d)
    t = _choose_targets(f, h)
    attempts = []
    last_system = None
    for v in _variants(f, t):
        try:
            sp, base, fcs, va, system = _build(f, t, v)
        except ValueError as exc:
            attempts.append((v.label, str(exc)))
            continue
        last_system = system
        if _walk_cost(t, v, fcs) > WALK_BUDGET and len(v.s_faces) < f.r:
            attempts.append((v.label, "walk cycles too long"))
            continue
        sol = max_min_solution(system.rows, system.rhs, len(system.variables))
        if sol is None:
            attempts.append((v.label, "length system infeasible"))
            continue
        x, _ = sol
        col = {}
        for i, e in enumerate(base.edges()):
            col[e] = col[base.opposite[e]] = i
        lengths = [x[col[hh]] for hh in range(base.num_half_edges)]
        va = VoltageAssignment(base.with_lengths(lengths), va.n, va.omega, va.tau, va.sigma_shift)
        graph = va.derived()
        try:
            validate(graph)
        except ValidationError as exc:
            attempts.append((v.label, str(exc)))
            continue
        if verify and check_tat(graph) is not None:
            attempts.append((v.label, "checker rejected the metric"))
            continue
        return Realization(graph, va.deck(graph), va, _basis(sp, fcs), t.face_volts, v.label, system, d)
    raise Infeasible("no variant produced a tete-a-tete metric: "
                     + "; ".join(f"{a}: {b}" for a, b in attempts), last_system, attempts)


# -- the lifted spine and its monodromy ---------------------------------------------

def build_lambda(f: SeifertFibering, h: HorizontalClass, copies: bool = False):
    """Derived graph of the spine with pendant segments (unit lengths) and the
    deck shift; no metric condition is imposed."""
    f = f.normalized()
    handy_model(f)
    _check_class(f, h)
    h, _ = _split_copies(h, copies)
    _check_euler(f)
    if f.g == 0 and f.r == 1 and not f.pairs:
        res = _disk()
        return res.graph, res.automorphism
    t = _choose_targets(f, h)
    sp = _flower(f.g, f.r, list(t.cone_volts), "pendant")
    base = _base_graph(sp)
    fcs = _ordered_faces(sp, base, f.r)
    va = _voltages(sp, base, t, fcs)
    graph = va.derived()
    return graph, va.deck(graph)


@dataclass(frozen=True)
class MonodromyReport:
    genus: int
    boundary_count: int
    orbit_sizes: tuple[int, ...]
    walk_rotations: tuple[Fraction, ...]
    rotations: tuple[Fraction, ...]


def monodromy_report(graph: RibbonGraph, a: GraphAutomorphism) -> MonodromyReport:
    genus, r, _ = surface_invariants(graph)
    rots = boundary_rotation(a)
    return MonodromyReport(genus, r, tuple(x.orbit_size for x in rots),
                           tuple(x.walk_rotation for x in rots), tuple(x.rotation for x in rots))


__all__ = [
    "ClassMismatch", "ClosedManifold", "HandyModel", "Infeasible", "LinearSystem", "MonodromyReport",
    "NonIntegralEuler", "Realization", "ReducibleClass", "VoltageAssignment", "build_lambda",
    "cycle_voltage", "handy_model", "monodromy_report", "realize_tat",
]
