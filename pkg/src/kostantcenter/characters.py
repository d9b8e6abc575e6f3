"""The spectrum of the enveloping-algebra center as invariant polynomials.

The center acts on a highest-weight module through an infinitesimal
character, and two weights give the same character exactly when they lie in
one orbit of the shifted (dot) Weyl action.  The quotient map is realized
here by explicit generators: rank-many algebraically independent dot-invariant
polynomials in the weight coordinates.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .linalg import mat_inverse
from .mpoly import MPoly
from .roots import RootSystem, Weight, same_dot_orbit, weyl_group

# Fundamental invariant degrees of the Weyl group, by series.
_DEGREES = {
    "A": lambda n: list(range(2, n + 2)),
    "B": lambda n: list(range(2, 2 * n + 1, 2)),
    "C": lambda n: list(range(2, 2 * n + 1, 2)),
    "D": lambda n: sorted(list(range(2, 2 * n - 1, 2)) + [n]),
    "E": lambda n: {
        6: [2, 5, 6, 8, 9, 12],
        7: [2, 6, 8, 10, 12, 14, 18],
        8: [2, 8, 12, 14, 18, 20, 24, 30],
    }[n],
    "F": lambda n: [2, 6, 8, 12],
    "G": lambda n: [2, 6],
}


@dataclass(frozen=True)
class CharacterPoint:
    """A point of the character variety: one value per invariant generator."""

    values: tuple[Fraction, ...]

    def to_jsonable(self) -> list[str]:
        return [str(v) for v in self.values]

    def __repr__(self):
        return "CharacterPoint(" + ", ".join(str(v) for v in self.values) + ")"


@dataclass(frozen=True)
class InvariantBasis:
    """Generators of the dot-invariant polynomial ring of a root system."""

    rs: RootSystem
    generators: tuple[MPoly, ...]
    degrees: tuple[int, ...]

    def evaluate(self, lam: Weight) -> CharacterPoint:
        return CharacterPoint(tuple(g.evaluate(lam.coords) for g in self.generators))


def _pairing_form(rs: RootSystem, x: Weight) -> MPoly:
    """The linear form v -> <v, x> in the fundamental coordinates of v."""
    rank = rs.rank
    terms = {}
    for i in range(rank):
        coeff = sum((rs.gram[i][j] * x.coords[j] for j in range(rank)), Fraction(0))
        if coeff:
            terms[tuple(int(i == j) for j in range(rank))] = coeff
    return MPoly(rank, terms)


def _orbit_power_sum(rs: RootSystem, base: Weight, degree: int) -> MPoly:
    """Sum of <v, x>^degree over the Weyl orbit of ``base``.

    W-invariant by construction: the form is W-invariant and the orbit is
    W-stable.
    """
    orbit = {g.act(base) for g in weyl_group(rs)}
    total = MPoly.zero(rs.rank)
    for x in orbit:
        total = total + _pairing_form(rs, x) ** degree
    return total


def _shift_by_rho(rs: RootSystem, p: MPoly) -> MPoly:
    rank = rs.rank
    images = [
        MPoly(rank, {tuple(int(i == j) for j in range(rank)): 1, (0,) * rank: 1})
        for i in range(rank)
    ]
    return p.substitute(images)


def _jacobian_nonzero(polys: list[MPoly], rank: int) -> bool:
    # Algebraic independence certificate: the Jacobian determinant is a
    # polynomial, so nonvanishing at a single point proves independence.
    partials = []
    for p in polys:
        row = []
        for v in range(rank):
            terms: dict[tuple[int, ...], Fraction] = {}
            for exp, c in p.terms.items():
                if exp[v]:
                    dexp = exp[:v] + (exp[v] - 1,) + exp[v + 1 :]
                    terms[dexp] = terms.get(dexp, Fraction(0)) + c * exp[v]
            row.append(MPoly(rank, terms))
        partials.append(row)
    samples = [Fraction(1), Fraction(2), Fraction(3), Fraction(1, 2), Fraction(-2, 3)]
    for point in itertools.product(samples, repeat=rank):
        jac = [[d.evaluate(point) for d in row] for row in partials]
        try:
            mat_inverse(jac)
            return True
        except ValueError:
            continue
    return False


def invariant_generators(rs: RootSystem) -> InvariantBasis:
    """Rank-many algebraically independent dot-invariant generators.

    For the rank-one type the single generator is normalized to the
    quadratic Casimir eigenvalue x(x + 2).  Higher ranks symmetrize powers
    of linear forms over a Weyl orbit; the base point candidates start with
    a regular weight with pairwise distinct coordinates, which gives an
    asymmetric orbit whenever odd invariant degrees occur.  Independence is
    certified via the Jacobian at build time, and independent homogeneous
    invariants at the fundamental degrees generate the whole invariant ring,
    so the generators are guaranteed to separate dot orbits.
    """
    if rs.name == "A1":
        gen = MPoly(1, {(2,): 1, (1,): 2})
        return InvariantBasis(rs=rs, generators=(gen,), degrees=(2,))

    degrees = _DEGREES[rs.series](rs.rank)
    candidates = [
        Weight.of(*range(1, rs.rank + 1)),
        Weight.of(*([1] + [0] * (rs.rank - 1))),
        Weight.of(*([0] * (rs.rank - 1) + [1])),
        rs.rho,
    ]
    for base in candidates:
        symmetric = [_orbit_power_sum(rs, base, d) for d in degrees]
        if not _jacobian_nonzero(symmetric, rs.rank):
            continue
        gens = tuple(_shift_by_rho(rs, p) for p in symmetric)
        return InvariantBasis(rs=rs, generators=gens, degrees=tuple(degrees))
    raise AssertionError(f"no independent invariant set found for {rs.name}")


def character_point(basis: InvariantBasis, lam: Weight) -> CharacterPoint:
    """The infinitesimal character of the highest-weight module at lam."""
    return basis.evaluate(lam)


def same_character(basis: InvariantBasis, lam: Weight, psi: Weight) -> bool:
    """Whether two weights are dot-linked.

    Decided by exact orbit enumeration; generator evaluation is only the
    cross-check (equal orbits force equal values, and a disagreement is a
    hard internal failure).
    """
    linked = same_dot_orbit(basis.rs, lam, psi)
    if linked and basis.evaluate(lam) != basis.evaluate(psi):
        raise AssertionError("dot-linked weights evaluated to different characters")
    return linked
