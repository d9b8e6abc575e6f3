"""Root systems, Weyl groups, the dot action, and weight multiplicities.

Weights are kept in fundamental-weight coordinates throughout, so dominance
and integrality are coordinate-wise tests.  Roots are generated from the
Cartan matrix by root-string closure and stored in simple-root coordinates.
The Cartan convention is ``cartan[i][j] = <alpha_j, alpha_i-check>``; the
j-th simple root therefore has fundamental coordinates given by column j.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .linalg import mat_inverse

WEYL_GROUP_BOUND = 100_000
WEIGHT_DIM_BOUND = 10_000

_POSITIVE_ROOT_COUNT = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}


class EnumerationBoundError(RuntimeError):
    """An enumeration (Weyl group or weight system) exceeded its bound."""


@dataclass(frozen=True)
class Weight:
    """A point of the weight space in fundamental-weight coordinates."""

    coords: tuple[Fraction, ...]

    @classmethod
    def of(cls, *coords) -> "Weight":
        return cls(tuple(Fraction(c) for c in coords))

    @classmethod
    def zero(cls, rank: int) -> "Weight":
        return cls((Fraction(0),) * rank)

    @property
    def rank(self) -> int:
        return len(self.coords)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.coords))

    def scale(self, s) -> "Weight":
        s = Fraction(s)
        return Weight(tuple(s * a for a in self.coords))

    def __repr__(self):
        return "Weight(" + ", ".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class WeylElement:
    """An element of the Weyl group as an integer matrix on fundamental coordinates."""

    matrix: tuple[tuple[int, ...], ...]
    word: tuple[int, ...]

    def act(self, v: Weight) -> Weight:
        return Weight(
            tuple(
                sum((Fraction(m) * c for m, c in zip(row, v.coords)), Fraction(0))
                for row in self.matrix
            )
        )

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        n = len(self.matrix)
        prod = tuple(
            tuple(
                sum(self.matrix[i][k] * other.matrix[k][j] for k in range(n))
                for j in range(n)
            )
            for i in range(n)
        )
        return WeylElement(prod, self.word + other.word)

    def length(self) -> int:
        return len(self.word)


@dataclass(frozen=True)
class RootSystem:
    """Cartan data of a simple type at fixed rank."""

    series: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[tuple[int, ...], ...]  # simple-root coordinates
    root_lengths: tuple[Fraction, ...]  # half squared lengths d_i of simple roots
    gram: tuple[tuple[Fraction, ...], ...]  # invariant form on fundamental weights

    @property
    def name(self) -> str:
        return f"{self.series}{self.rank}"

    @property
    def fundamental_weights(self) -> tuple[Weight, ...]:
        """The basis in which all Weight coordinates are expressed."""
        return tuple(
            Weight(tuple(Fraction(int(i == j)) for j in range(self.rank)))
            for i in range(self.rank)
        )

    @property
    def rho(self) -> Weight:
        return Weight((Fraction(1),) * self.rank)

    def simple_root(self, i: int) -> Weight:
        return Weight(tuple(Fraction(self.cartan[j][i]) for j in range(self.rank)))

    def root_weight(self, root: tuple[int, ...]) -> Weight:
        """A root given in simple-root coordinates, as a Weight."""
        return Weight(
            tuple(
                sum((Fraction(self.cartan[i][j] * root[j]) for j in range(self.rank)), Fraction(0))
                for i in range(self.rank)
            )
        )

    def bilinear(self, v: Weight, w: Weight) -> Fraction:
        total = Fraction(0)
        for i, a in enumerate(v.coords):
            if not a:
                continue
            row = self.gram[i]
            for j, b in enumerate(w.coords):
                if b:
                    total += a * row[j] * b
        return total

    def simple_reflection(self, i: int) -> WeylElement:
        n = self.rank
        mat = tuple(
            tuple(int(j == k) - (self.cartan[j][i] if k == i else 0) for k in range(n))
            for j in range(n)
        )
        return WeylElement(mat, (i,))

    def dot(self, w: WeylElement, v: Weight) -> Weight:
        """The shifted action w(v + rho) - rho."""
        return w.act(v + self.rho) - self.rho


@dataclass(frozen=True)
class WeightSystem:
    """All weights of an irreducible highest-weight representation."""

    highest: Weight
    entries: tuple[tuple[Weight, int], ...]

    def dimension(self) -> int:
        return sum(m for _, m in self.entries)

    def multiplicity(self, w: Weight) -> int:
        for v, m in self.entries:
            if v == w:
                return m
        return 0

    def to_jsonable(self) -> list[dict]:
        return [
            {"weight": [int(c) for c in w.coords], "mult": m} for w, m in self.entries
        ]


def _cartan_matrix(series: str, rank: int) -> list[list[int]]:
    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def bond(i, j, down=-1, up=-1):
        a[i][j] = down
        a[j][i] = up

    if series == "A":
        for i in range(rank - 1):
            bond(i, i + 1)
    elif series in ("B", "C"):
        for i in range(rank - 2):
            bond(i, i + 1)
        if series == "B":
            bond(rank - 2, rank - 1, down=-1, up=-2)
        else:
            bond(rank - 2, rank - 1, down=-2, up=-1)
    elif series == "D":
        for i in range(rank - 2):
            bond(i, i + 1)
        a[rank - 2][rank - 1] = a[rank - 1][rank - 2] = 0
        bond(rank - 3, rank - 1)
    elif series == "E":
        for i in range(rank - 2):
            bond(i, i + 1)
        a[rank - 2][rank - 1] = a[rank - 1][rank - 2] = 0
        bond(2, rank - 1)
    elif series == "F":
        bond(0, 1)
        bond(1, 2, down=-1, up=-2)
        bond(2, 3)
    elif series == "G":
        bond(0, 1, down=-1, up=-3)
    return a


def _validate_pair(series: str, rank: int) -> None:
    valid = {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 3,
        "E": rank in (6, 7, 8),
        "F": rank == 4,
        "G": rank == 2,
    }
    if series not in valid or not valid[series]:
        raise ValueError(f"invalid simple type {series}{rank}")


def _positive_roots(cartan: list[list[int]], rank: int) -> list[tuple[int, ...]]:
    simple = [tuple(int(i == j) for j in range(rank)) for i in range(rank)]
    roots = set(simple)
    frontier = list(simple)
    while frontier:
        new = []
        for beta in frontier:
            for i in range(rank):
                pairing = sum(beta[j] * cartan[i][j] for j in range(rank))
                down = list(beta)
                p = 0
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        p += 1
                    else:
                        break
                if p - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    cand = tuple(up)
                    if cand not in roots:
                        roots.add(cand)
                        new.append(cand)
        frontier = new
    return sorted(roots, key=lambda r: (sum(r), r))


def _symmetrizer(cartan: list[list[int]], rank: int) -> list[Fraction]:
    d = [Fraction(0)] * rank
    d[0] = Fraction(1)
    todo = [0]
    while todo:
        i = todo.pop()
        for j in range(rank):
            if i != j and cartan[i][j] and not d[j]:
                d[j] = d[i] * cartan[i][j] / cartan[j][i]
                todo.append(j)
    if any(not x for x in d):
        raise ValueError("Dynkin diagram is disconnected")
    denom = lcm(*(x.denominator for x in d))
    d = [x * denom for x in d]
    low = min(d)
    return [x / low for x in d]


@functools.lru_cache(maxsize=None)
def build_root_system(series: str, rank: int) -> RootSystem:
    """Construct the Cartan data of a simple type, with consistency checks."""
    _validate_pair(series, rank)
    cartan = _cartan_matrix(series, rank)
    roots = _positive_roots(cartan, rank)
    expected = _POSITIVE_ROOT_COUNT[series](rank)
    if len(roots) != expected:
        raise AssertionError(
            f"{series}{rank}: generated {len(roots)} positive roots, expected {expected}"
        )
    d = _symmetrizer(cartan, rank)
    ainv = mat_inverse([[Fraction(x) for x in row] for row in cartan])
    gram = tuple(
        tuple(ainv[j][i] * d[j] for j in range(rank)) for i in range(rank)
    )
    rs = RootSystem(
        series=series,
        rank=rank,
        cartan=tuple(tuple(row) for row in cartan),
        positive_roots=tuple(roots),
        root_lengths=tuple(d),
        gram=gram,
    )
    # rho must be simultaneously the sum of fundamental weights and the
    # half-sum of positive roots, in both coordinate systems.
    half_sum_simple = [Fraction(sum(r[i] for r in roots), 2) for i in range(rank)]
    half_sum_fund = [
        sum((Fraction(cartan[i][j]) * half_sum_simple[j] for j in range(rank)), Fraction(0))
        for i in range(rank)
    ]
    if half_sum_fund != [Fraction(1)] * rank:
        raise AssertionError(f"{series}{rank}: rho consistency check failed")
    return rs


def parse_algebra(name: str) -> RootSystem:
    """Parse a CLI-style name such as A1, A2, B2 or G2."""
    name = name.strip()
    if len(name) < 2 or not name[0].isalpha() or not name[1:].isdigit():
        raise ValueError(f"cannot parse algebra name {name!r}")
    return build_root_system(name[0].upper(), int(name[1:]))


@functools.lru_cache(maxsize=None)
def weyl_group(rs: RootSystem, bound: int = WEYL_GROUP_BOUND) -> tuple[WeylElement, ...]:
    """The full Weyl group by breadth-first closure over simple reflections."""
    n = rs.rank
    ident = WeylElement(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), ())
    gens = [rs.simple_reflection(i) for i in range(n)]
    seen = {ident.matrix: ident}
    frontier = [ident]
    while frontier:
        new = []
        for w in frontier:
            for i, s in enumerate(gens):
                cand = s * w
                if cand.matrix not in seen:
                    # record the shorter word s_i * w
                    elem = WeylElement(cand.matrix, (i,) + w.word)
                    seen[elem.matrix] = elem
                    new.append(elem)
                    if len(seen) > bound:
                        raise EnumerationBoundError(
                            f"Weyl group of {rs.name} exceeds bound {bound}"
                        )
        frontier = new
    return tuple(sorted(seen.values(), key=lambda w: (w.length(), w.word)))


def dot_orbit(rs: RootSystem, v: Weight) -> set[Weight]:
    return {rs.dot(w, v) for w in weyl_group(rs)}


def same_dot_orbit(rs: RootSystem, v: Weight, w: Weight) -> bool:
    return any(rs.dot(g, v) == w for g in weyl_group(rs))


def weyl_dimension(rs: RootSystem, mu: Weight) -> Fraction:
    """Weyl dimension formula; exact, so a non-integer signals bad input."""
    num = Fraction(1)
    den = Fraction(1)
    shifted = mu + rs.rho
    for root in rs.positive_roots:
        alpha = rs.root_weight(root)
        num *= rs.bilinear(shifted, alpha)
        den *= rs.bilinear(rs.rho, alpha)
    return num / den


@functools.lru_cache(maxsize=None)
def cartan_inverse(rs: RootSystem) -> tuple[tuple[Fraction, ...], ...]:
    inv = mat_inverse([[Fraction(x) for x in row] for row in rs.cartan])
    return tuple(tuple(row) for row in inv)


def _height_above(rs: RootSystem, mu: Weight, lam: Weight) -> int:
    """Height of mu - lam in simple-root coordinates (must be a nonneg integer vector)."""
    diff = mu - lam
    ainv = cartan_inverse(rs)
    total = sum(
        sum((ainv[i][j] * diff.coords[j] for j in range(rs.rank)), Fraction(0))
        for i in range(rs.rank)
    )
    if total.denominator != 1:
        raise AssertionError("weight difference not in the root lattice")
    return int(total)


def weight_system(rs: RootSystem, mu: Weight, dim_bound: int = WEIGHT_DIM_BOUND) -> WeightSystem:
    """All weights of the irreducible of highest weight mu, with multiplicities.

    The weight set is generated by closing under simple-root strings; the
    multiplicities come from Freudenthal's recursion, processed from the top.
    Every division in the recursion is exact.
    """
    if not mu.is_dominant() or not mu.is_integral():
        raise ValueError(f"highest weight must be dominant integral, got {mu}")
    dim = weyl_dimension(rs, mu)
    if dim.denominator != 1:
        raise AssertionError("Weyl dimension formula returned a non-integer")
    if dim > dim_bound:
        raise EnumerationBoundError(f"dim V = {dim} exceeds bound {dim_bound}")

    simple = [rs.simple_root(i) for i in range(rs.rank)]
    weights = {mu}
    frontier = [mu]
    while frontier:
        new = []
        for lam in frontier:
            for i in range(rs.rank):
                steps = int(lam.coords[i]) if lam.coords[i] > 0 else 0
                current = lam
                for _ in range(steps):
                    current = current - simple[i]
                    if current not in weights:
                        weights.add(current)
                        new.append(current)
        frontier = new

    positive = [rs.root_weight(r) for r in rs.positive_roots]
    norm_top = rs.bilinear(mu + rs.rho, mu + rs.rho)
    mult: dict[Weight, int] = {mu: 1}
    ordered = sorted(weights, key=lambda w: _height_above(rs, mu, w))
    for lam in ordered:
        if lam == mu:
            continue
        total = Fraction(0)
        for alpha in positive:
            j = 1
            while True:
                above = lam + alpha.scale(j)
                if above not in weights:
                    break
                total += mult[above] * rs.bilinear(above, alpha)
                j += 1
        denom = norm_top - rs.bilinear(lam + rs.rho, lam + rs.rho)
        if denom == 0:
            raise AssertionError("vanishing Freudenthal denominator below the highest weight")
        value = 2 * total / denom
        if value.denominator != 1 or value <= 0:
            raise AssertionError(f"non-integral Freudenthal multiplicity at {lam}")
        mult[lam] = int(value)

    entries = tuple(
        sorted(mult.items(), key=lambda t: (_height_above(rs, mu, t[0]), t[0].coords))
    )
    ws = WeightSystem(highest=mu, entries=entries)
    if ws.dimension() != dim:
        raise AssertionError(
            f"weight multiplicities sum to {ws.dimension()}, Weyl formula gives {dim}"
        )
    return ws


def orbit_decomposition(
    rs: RootSystem, ws: WeightSystem
) -> list[tuple[Weight, list[Weight], int]]:
    """Partition the support of a weight system into Weyl orbits.

    Returns (dominant representative, orbit, stabilizer order) triples with
    stabilizer_order * |orbit| = |W|.
    """
    group = weyl_group(rs)
    remaining = {w for w, _ in ws.entries}
    out = []
    while remaining:
        seed = next(iter(remaining))
        orbit = {g.act(seed) for g in group}
        if not orbit <= remaining:
            raise AssertionError("weight system support is not W-stable")
        rep = next(w for w in orbit if w.is_dominant())
        stab = len(group) // len(orbit)
        if stab * len(orbit) != len(group):
            raise AssertionError("orbit size does not divide the group order")
        out.append((rep, sorted(orbit, key=lambda w: w.coords), stab))
        remaining -= orbit
    out.sort(key=lambda t: (sum(t[0].coords), t[0].coords))
    return out


def is_multiplicity_free(rs: RootSystem, mu: Weight) -> bool:
    """True when every weight multiplicity is at most one.

    This is exactly the condition under which the commutant algebra of the
    diagonal enveloping-algebra action is commutative.
    """
    return all(m <= 1 for _, m in weight_system(rs, mu).entries)
