"""Seifert pairs, Hirzebruch-Jung continued fractions, gluing matrices and
star-shaped plumbing graphs."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd


class NotCoprime(ValueError):
    pass


class NotNormalized(ValueError):
    pass


class NonIntegralEuler(ValueError):
    pass


class BadPair(ValueError):
    pass


class EmptyChain(ValueError):
    pass


class NotStarShaped(ValueError):
    pass


class DivisionByZero(ZeroDivisionError):
    def __init__(self, depth: int):
        self.depth = depth
        super().__init__(f"zero denominator at depth {depth}")


@dataclass(frozen=True, order=True)
class SeifertPair:
    alpha: int
    beta: int

    def __post_init__(self):
        if self.alpha < 1:
            raise BadPair(f"alpha must be positive, got {self.alpha}")

    @property
    def is_normalized(self) -> bool:
        return 0 <= self.beta < self.alpha and (self.alpha == 1 or gcd(self.alpha, self.beta) == 1)

    def normalized(self) -> "SeifertPair":
        return SeifertPair(self.alpha, self.beta % self.alpha)

    def __iter__(self):
        return iter((self.alpha, self.beta))


@dataclass
class SeifertFibering:
    """M(g, r; pairs) with optional Euler term ``b``.

    ``boundary_pairs`` holds, when known, the pair obtained by capping each
    boundary component of the base (in the order of the arrows of the
    plumbing); ``None`` means the boundary framing is not specified.
    """
    g: int
    r: int
    pairs: list[SeifertPair] = field(default_factory=list)
    b: int | None = None
    boundary_pairs: list[SeifertPair] | None = None

    def normalized(self) -> "SeifertFibering":
        # b + sum(beta/alpha) is invariant; unnormalized parts move into b
        pairs = [p.normalized() for p in self.pairs]
        special = sorted(p for p in pairs if p.alpha > 1)
        shift = sum(p.beta // p.alpha for p in self.pairs)
        b = None if self.b is None else self.b + shift
        return SeifertFibering(self.g, self.r, special, b,
                               None if self.boundary_pairs is None
                               else [p.normalized() for p in self.boundary_pairs])

    def key(self):
        return (self.g, self.r, tuple(sorted(self.pairs)))


def _inverse_mod(x: int, m: int) -> int:
    if m == 1:
        return 0
    if gcd(x, m) != 1:
        raise NotCoprime(f"{x} is not invertible mod {m}")
    return pow(x, -1, m)


def pair_from_rotation(k: int, p: int) -> SeifertPair:
    """Normalized pair (k, -b) with b p = 1 mod k for a local rotation p/k."""
    if k < 2:
        raise BadPair("isotropy order must exceed 1")
    if gcd(p, k) != 1:
        raise NotCoprime(f"gcd({p}, {k}) != 1")
    return SeifertPair(k, (-_inverse_mod(p % k, k)) % k)


def torus_type(pair: SeifertPair) -> tuple[int, int]:
    """(p, alpha) of the fibered solid torus around the special fiber."""
    a, b = pair
    if a < 2 or not pair.is_normalized:
        raise NotNormalized(f"{pair} is not a normalized special pair")
    c = _inverse_mod(b, a)
    return (-c) % a, a


def rotation_of_pair(pair: SeifertPair) -> Fraction:
    """Local rotation p/alpha whose pair is ``pair``."""
    p, a = torus_type(pair)
    return Fraction(p, a)


def euler_b(pairs) -> int:
    total = -sum((Fraction(b, a) for a, b in pairs), Fraction(0))
    if total.denominator != 1:
        raise NonIntegralEuler(f"-sum(beta/alpha) = {total} is not an integer")
    return int(total)


def cont_frac(alpha: int, beta: int) -> list[int]:
    """Negative continued fraction alpha/beta = b1 - 1/(b2 - ...) with all b_i >= 2."""
    if not 0 < beta < alpha and not (alpha == beta == 1):
        if not (beta > 0 and alpha % beta == 0):
            raise BadPair(f"need 0 < beta < alpha, got ({alpha}, {beta})")
    if gcd(alpha, beta) != 1:
        raise BadPair(f"({alpha}, {beta}) not coprime")
    out = []
    a, b = alpha, beta
    while b:
        c = -(-a // b)
        out.append(c)
        a, b = b, c * b - a
    return out


def eval_cont_frac(chain) -> Fraction:
    if not chain:
        raise EmptyChain("empty continued fraction")
    x = Fraction(chain[-1])
    for depth in range(len(chain) - 2, -1, -1):
        if x == 0:
            raise DivisionByZero(depth + 1)
        x = chain[depth] - 1 / x
    return x


# -- gluing matrices --------------------------------------------------------

Matrix = tuple[tuple[int, int], tuple[int, int]]

J: Matrix = ((0, 1), (1, 0))
R: Matrix = ((-1, 0), (0, 1))


def _mul(x: Matrix, y: Matrix) -> Matrix:
    return ((x[0][0] * y[0][0] + x[0][1] * y[1][0], x[0][0] * y[0][1] + x[0][1] * y[1][1]),
            (x[1][0] * y[0][0] + x[1][1] * y[1][0], x[1][0] * y[0][1] + x[1][1] * y[1][1]))


def _prod(*ms: Matrix) -> Matrix:
    out = ((1, 0), (0, 1))
    for m in ms:
        out = _mul(out, m)
    return out


def _bundle(e: int) -> Matrix:
    return ((-1, 0), (e, 1))


@dataclass(frozen=True)
class GluingMatrix:
    a: int
    b: int
    c: int
    d: int

    @classmethod
    def of(cls, m: Matrix) -> "GluingMatrix":
        return cls(m[0][0], m[0][1], m[1][0], m[1][1])

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def rows(self) -> Matrix:
        return ((self.a, self.b), (self.c, self.d))

    def node_fraction(self) -> Fraction:
        return Fraction(-self.b, self.a)

    def disk_fraction(self) -> Fraction:
        return Fraction(-self.d, self.c)


NODE_TO_NODE = "node-to-node"
NODE_TO_DISK = "node-to-disk"


def gluing_matrix_literal(chain, case: str = NODE_TO_NODE) -> GluingMatrix:
    """The full composition including the orientation-reversal factors R
    between each J and each bundle matrix."""
    if not chain:
        raise EmptyChain("bamboo must have at least one vertex")
    e = list(chain)
    k = len(e)
    if case == NODE_TO_NODE:
        factors = [J]
        for i in reversed(range(k)):
            factors += [R, _bundle(e[i]), R, J]
    elif case == NODE_TO_DISK:
        factors = [_bundle(e[-1]), R, J]
        for i in reversed(range(k - 1)):
            factors += [R, _bundle(e[i]), R, J]
    else:
        raise ValueError(f"unknown case {case!r}")
    return GluingMatrix.of(_prod(*factors))


def gluing_matrix(chain, case: str = NODE_TO_NODE) -> GluingMatrix:
    """Reduced product: J (0,-1;1,-e_k)...(0,-1;1,-e_1) for node-to-node,
    (0,1;1,-e_k)(0,-1;1,-e_{k-1})...(0,-1;1,-e_1) for node-to-disk."""
    if not chain:
        raise EmptyChain("bamboo must have at least one vertex")
    e = list(chain)
    steps = [((0, -1), (1, -x)) for x in reversed(e)]
    if case == NODE_TO_NODE:
        return GluingMatrix.of(_prod(J, *steps))
    if case == NODE_TO_DISK:
        return GluingMatrix.of(_prod(((0, 1), (1, -e[-1])), *steps[1:]))
    raise ValueError(f"unknown case {case!r}")


# -- plumbing graphs --------------------------------------------------------

@dataclass
class PlumbingGraph:
    """Star-shaped plumbing: central vertex (e, g), bamboos ending in interior
    leaves, and ``arrows`` arrowheads. ``arrow_bamboos`` lists the bamboos that
    end in an arrowhead (an empty list is an arrow on the central vertex); when
    it is ``None`` the arrows carry no framing data."""
    e: int
    g: int
    bamboos: list[list[int]] = field(default_factory=list)
    arrows: int = 0
    arrow_bamboos: list[list[int]] | None = None

    def __post_init__(self):
        if self.g < 0 or self.arrows < 0:
            raise NotStarShaped("genus and arrow count must be non-negative")
        if any(not bam for bam in self.bamboos):
            raise NotStarShaped("empty bamboo")
        if self.arrow_bamboos is not None and len(self.arrow_bamboos) != self.arrows:
            raise NotStarShaped("arrow_bamboos must list one bamboo per arrow")

    def normalized_key(self):
        return (self.g, self.arrows, tuple(sorted(tuple(b) for b in self.bamboos)))


def _pair_from_chain(chain) -> SeifertPair:
    x = eval_cont_frac(chain)
    if x <= 1:
        raise NotStarShaped(f"bamboo {chain} does not describe a special fiber")
    return SeifertPair(x.numerator, x.denominator)


def plumbing_from_fibering(f: SeifertFibering) -> PlumbingGraph:
    f = f.normalized()
    pairs = list(f.pairs)
    arrow_bamboos = None
    if f.boundary_pairs is not None:
        arrow_bamboos = [cont_frac(*p) if p.alpha > 1 else [] for p in f.boundary_pairs]
        b = euler_b([tuple(p) for p in pairs + list(f.boundary_pairs)])
        if f.b is not None and f.b != b:
            raise NonIntegralEuler(f"given b={f.b} disagrees with the pairs (b={b})")
    elif f.b is not None:
        b = f.b
    elif f.r == 0:
        b = euler_b([tuple(p) for p in pairs])
    else:
        b = 0
    return PlumbingGraph(b, f.g, [cont_frac(*p) for p in pairs], f.r, arrow_bamboos)


def fibering_from_plumbing(p: PlumbingGraph) -> SeifertFibering:
    pairs = sorted(_pair_from_chain(b) for b in p.bamboos)
    boundary = None
    if p.arrow_bamboos is not None:
        boundary = [_pair_from_chain(b) if b else SeifertPair(1, 0) for b in p.arrow_bamboos]
    return SeifertFibering(p.g, p.arrows, pairs, p.e, boundary)
