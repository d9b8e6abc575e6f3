"""The center of the strongly commuting algebra as an explicit affine scheme.

The center embeds in two copies of the enveloping-algebra spectrum; its
points are the pairs of characters (chi(lam), chi(lam + mu_i)) as lam runs
over the weight space and mu_i over the weights of the twisting
representation.  One irreducible component corresponds to each Weyl orbit of
those weights.  In rank one the defining ideal is computed in closed form by
resultant elimination; in higher rank the components are shipped as exact
parametrizations together with a seeded membership test and an
interpolation helper for candidate relations.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, replace
from fractions import Fraction

from .characters import CharacterPoint, InvariantBasis, invariant_generators
from .linalg import nullspace
from .mpoly import MPoly, resultant
from .roots import RootSystem, Weight, build_root_system, orbit_decomposition, weight_system

TILDE = "tilde"
ROZHKOVSKAYA = "rozhkovskaya"
GRADED = "graded"

_VAR_NAMES = {
    TILDE: ("C2", "Mtilde1"),
    ROZHKOVSKAYA: ("C2", "M1"),
    GRADED: ("c2", "M1"),
}


@dataclass(frozen=True)
class CenterComponent:
    """One irreducible component, parametrized by a single weight parameter."""

    rs: RootSystem
    basis: InvariantBasis
    rep: Weight  # dominant orbit representative
    orbit: tuple[Weight, ...]
    stabilizer_order: int

    def point(self, lam: Weight) -> tuple[CharacterPoint, CharacterPoint]:
        return self.basis.evaluate(lam), self.basis.evaluate(lam + self.rep)


@dataclass(frozen=True)
class CenterPresentation:
    """A factored defining ideal of the center in one coordinate system."""

    coords: str
    var_names: tuple[str, ...]
    factors: tuple[MPoly, ...]
    components: tuple[tuple[tuple[int, ...], int], ...]  # (orbit rep, stabilizer order)
    level: int  # rank-one highest-weight coefficient k

    def product(self) -> MPoly:
        out = MPoly.constant(2, 1)
        for f in self.factors:
            out = out * f
        return out

    def factor_keys(self) -> set:
        return {f.sort_key() for f in self.factors}

    def to_jsonable(self) -> dict:
        return {
            "coords": self.coords,
            "vars": list(self.var_names),
            "factors": [f.to_dict(self.var_names) for f in self.factors],
            "components": [
                {"rep": list(rep), "stab": stab} for rep, stab in self.components
            ],
        }

    @classmethod
    def from_jsonable(cls, data: dict) -> "CenterPresentation":
        factors = tuple(MPoly.from_dict(f) for f in data["factors"])
        components = tuple(
            (tuple(c["rep"]), c["stab"]) for c in data["components"]
        )
        level = max(rep[0] for rep, _ in components)
        return cls(
            coords=data["coords"],
            var_names=tuple(data["vars"]),
            factors=factors,
            components=components,
            level=level,
        )

    def to_text(self) -> str:
        return "".join(f"({f.to_text(self.var_names)})" for f in self.factors)


class MembershipResult:
    """Outcome of a sampled vanishing test, with a witness on failure."""

    def __init__(self, ok: bool, witness: dict | None = None):
        self.ok = ok
        self.witness = witness

    def __bool__(self) -> bool:
        return self.ok

    def __repr__(self):
        return f"MembershipResult(ok={self.ok}, witness={self.witness})"


def center_components(
    rs: RootSystem, mu: Weight, basis: InvariantBasis | None = None
) -> list[CenterComponent]:
    """One component per Weyl orbit of the weights of the twisting representation."""
    basis = basis or invariant_generators(rs)
    ws = weight_system(rs, mu)
    out = []
    for rep, orbit, stab in orbit_decomposition(rs, ws):
        out.append(
            CenterComponent(
                rs=rs, basis=basis, rep=rep, orbit=tuple(orbit), stabilizer_order=stab
            )
        )
    return out


def fiber_dimension(rs: RootSystem, mu: Weight) -> int:
    """Sum of squared weight multiplicities: the generic fiber dimension."""
    return sum(m * m for _, m in weight_system(rs, mu).entries)


# -- rank one: closed-form ideals ------------------------------------------------


def _conic_for_orbit(m: int) -> MPoly:
    """Defining conic of the orbit {m, -m}, by eliminating the parameter.

    Eliminates t from {X - t(t+2), Y - (t+m)(t+m+2)} with a Sylvester
    resultant; the output is primitive with positive leading coefficient.
    """
    # variables (t, X, Y)
    p = MPoly(3, {(0, 1, 0): 1, (2, 0, 0): -1, (1, 0, 0): -2})
    q = MPoly(
        3,
        {
            (0, 0, 1): 1,
            (2, 0, 0): -1,
            (1, 0, 0): -(2 * m + 2),
            (0, 0, 0): -(m * m + 2 * m),
        },
    )
    return resultant(p, q, 0).drop_variable(0).primitive()


def _rank1_components(k: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    reps = list(range(k % 2, k + 1, 2))
    return tuple(((m,), 2 if m == 0 else 1) for m in reps)


def center_ideal_rank1(k: int) -> CenterPresentation:
    """Closed-form factored ideal in the (C2, delta(C2)) coordinates.

    One conic per orbit {m, -m} of the weights {k, k-2, ..., -k}; the zero
    orbit, present for even k, contributes the diagonal factor Y - X.
    """
    if k < 0:
        raise ValueError("highest weight coefficient must be nonnegative")
    factors = []
    for (m,), _ in _rank1_components(k):
        if m == 0:
            # the diagonal factor, normalized like every other one
            factors.append(MPoly(2, {(0, 1): 1, (1, 0): -1}).primitive())
        else:
            factors.append(_conic_for_orbit(m))
    return CenterPresentation(
        coords=TILDE,
        var_names=_VAR_NAMES[TILDE],
        factors=tuple(factors),
        components=_rank1_components(k),
        level=k,
    )


def rozhkovskaya_presentation(k: int) -> CenterPresentation:
    """Factored minimal polynomial of the shifted diagonal Casimir.

    The individual roots b_j = 4(j^2 - k/2 - jk + (k/2 - j)s), with
    s^2 = C2 + 1, live in a quadratic extension; pairing the conjugate
    indices j and k - j gives rational quadratics because both the sum and
    the product of the paired roots are free of s.  For even k the middle
    index is self-paired and yields a linear factor.
    """
    if k < 0:
        raise ValueError("highest weight coefficient must be nonnegative")
    factors = []
    half = Fraction(k, 2)
    for (m,), _ in _rank1_components(k):
        j = (k - m) // 2
        a = Fraction(j * j) - half - j * k
        if m == 0:
            # self-paired middle index: the root is rational already
            b = 4 * a
            factors.append(MPoly(2, {(0, 1): 1, (0, 0): -b}).primitive())
        else:
            jc = k - j
            ac = Fraction(jc * jc) - half - jc * k
            bcoef = half - j
            root_sum = 4 * (a + ac)
            # product: 16(a*ac - bcoef^2 (C2 + 1)); the cross terms cancel
            const = 16 * (a * ac - bcoef * bcoef)
            lin_c2 = -16 * bcoef * bcoef
            factors.append(
                MPoly(
                    2,
                    {(0, 2): 1, (0, 1): -root_sum, (0, 0): const, (1, 0): lin_c2},
                ).primitive()
            )
    return CenterPresentation(
        coords=ROZHKOVSKAYA,
        var_names=_VAR_NAMES[ROZHKOVSKAYA],
        factors=tuple(factors),
        components=_rank1_components(k),
        level=k,
    )


def change_presentation(p: CenterPresentation, target: str) -> CenterPresentation:
    """Rewrite a rank-one presentation between the tilde and shifted coordinates.

    The relation between the coordinate pairs is
    Mtilde1 = M1 + C2 + c, where c is the Casimir value of the twisting
    highest weight itself.
    """
    if p.coords not in (TILDE, ROZHKOVSKAYA):
        raise ValueError(f"cannot change coordinates from {p.coords!r}")
    if target not in (TILDE, ROZHKOVSKAYA):
        raise ValueError(f"cannot change coordinates to {target!r}")
    if target == p.coords:
        return p
    k = p.level
    c = Fraction(k * (k + 2))
    x = MPoly.variable(2, 0)
    y = MPoly.variable(2, 1)
    if p.coords == TILDE:
        images = [x, y + x + MPoly.constant(2, c)]
    else:
        images = [x, y - x - MPoly.constant(2, c)]
    factors = tuple(f.substitute(images).primitive() for f in p.factors)
    return replace(p, coords=target, var_names=_VAR_NAMES[target], factors=factors)


def graded_medium(p: CenterPresentation) -> CenterPresentation:
    """Leading forms of the shifted-coordinate factors under the filtration weights.

    The coefficient generator carries weight two and the shifted diagonal
    generator weight one; the leading forms present the associated graded
    algebra.
    """
    if p.coords != ROZHKOVSKAYA:
        raise ValueError("graded form is taken from the shifted-coordinate presentation")
    weights = (2, 1)
    factors = tuple(f.leading_form(weights).primitive() for f in p.factors)
    return replace(p, coords=GRADED, var_names=_VAR_NAMES[GRADED], factors=factors)


# -- symmetries -------------------------------------------------------------------


def phi_involution(
    basis: InvariantBasis, lam: Weight, psi: Weight
) -> tuple[tuple[Weight, Weight], tuple[CharacterPoint, CharacterPoint]]:
    """The coefficient/generator swap on pairs of characters.

    Acting on representatives, (lam, psi) goes to (-psi - 2 rho, -lam - 2 rho).
    Returns the new representatives together with their character points.
    """
    rho2 = basis.rs.rho.scale(2)
    new_lam = -psi - rho2
    new_psi = -lam - rho2
    return (new_lam, new_psi), (basis.evaluate(new_lam), basis.evaluate(new_psi))


def swap_variables(p: CenterPresentation) -> CenterPresentation:
    """Exchange the two coordinate blocks of every factor."""
    images = [MPoly.variable(2, 1), MPoly.variable(2, 0)]
    factors = tuple(f.substitute(images).primitive() for f in p.factors)
    return replace(p, factors=factors)


KLEIN_ELEMENTS = ("1", "phi", "neg", "negphi")


def is_self_dual(rs: RootSystem, mu: Weight) -> bool:
    """Whether the weight multiset of the twisting representation is symmetric."""
    ws = weight_system(rs, mu)
    support = {w for w, _ in ws.entries}
    return support == {-w for w in support}


def klein_action(
    rs: RootSystem,
    mu: Weight,
    element: str,
    lam: Weight,
    psi: Weight,
    basis: InvariantBasis | None = None,
) -> tuple[tuple[Weight, Weight], tuple[CharacterPoint, CharacterPoint]]:
    """Action of the four symmetries {1, phi, neg, neg*phi} on representative pairs.

    Requires a self-dual twisting weight; neg is the coordinate-wise
    antipode v -> -v - 2 rho and neg*phi composes to the plain swap.
    """
    if element not in KLEIN_ELEMENTS:
        raise ValueError(f"unknown element {element!r}")
    if not is_self_dual(rs, mu):
        raise ValueError(f"{mu} is not self-dual")
    basis = basis or invariant_generators(rs)
    rho2 = rs.rho.scale(2)
    if element == "1":
        pair = (lam, psi)
    elif element == "phi":
        pair = (-psi - rho2, -lam - rho2)
    elif element == "neg":
        pair = (-lam - rho2, -psi - rho2)
    else:
        pair = (psi, lam)
    return pair, (basis.evaluate(pair[0]), basis.evaluate(pair[1]))


# -- sampling, membership and interpolation ---------------------------------------


def random_weight(rng: random.Random, rank: int) -> Weight:
    """A random rational weight with small numerators and denominators."""
    coords = tuple(
        Fraction(rng.randint(-12, 12), rng.choice((1, 1, 2, 3, 4)))
        for _ in range(rank)
    )
    return Weight(coords)


def membership_test(
    rs: RootSystem,
    mu: Weight,
    q: MPoly,
    samples: int = 25,
    seed: int = 0,
    basis: InvariantBasis | None = None,
    component: Weight | None = None,
) -> MembershipResult:
    """Sampled test that q vanishes on the parametrized center.

    q lives in 2*rank variables ordered (first character block, second
    character block).  Vanishing is required at ``samples`` seeded random
    weights on every component (or just one, if ``component`` is given);
    the verdict is deterministic for a fixed seed.
    """
    basis = basis or invariant_generators(rs)
    if q.arity != 2 * rs.rank:
        raise ValueError(f"membership polynomial must have {2 * rs.rank} variables")
    comps = center_components(rs, mu, basis)
    if component is not None:
        comps = [c for c in comps if c.rep == component]
        if not comps:
            raise ValueError(f"no component with representative {component}")
    rng = random.Random(seed)
    for comp in comps:
        for _ in range(samples):
            lam = random_weight(rng, rs.rank)
            first, second = comp.point(lam)
            value = q.evaluate(first.values + second.values)
            if value:
                return MembershipResult(
                    False,
                    witness={
                        "component": [str(c) for c in comp.rep.coords],
                        "lambda": [str(c) for c in lam.coords],
                        "value": str(value),
                    },
                )
    return MembershipResult(True)


def _monomials_within(nvars: int, weights: tuple[int, ...], bound: int):
    def rec(i: int, remaining: int):
        if i == nvars:
            yield ()
            return
        e = 0
        while e * weights[i] <= remaining:
            for tail in rec(i + 1, remaining - e * weights[i]):
                yield (e,) + tail
            e += 1

    return sorted(rec(0, bound))


def interpolate_relations(
    rs: RootSystem,
    mu: Weight,
    component: Weight,
    max_weighted_degree: int,
    samples: int = 50,
    seed: int = 0,
    basis: InvariantBasis | None = None,
) -> list[MPoly]:
    """Candidate relations vanishing on one component, by exact interpolation.

    Builds the evaluation matrix of all monomials up to a weighted degree
    bound (variable weights are the generator degrees, repeated for the two
    blocks) at seeded random parameter values, and returns a basis of its
    kernel.  Callers should re-verify candidates on fresh samples: an
    undersampled kernel contains spurious elements.
    """
    basis = basis or invariant_generators(rs)
    comp = next(
        (c for c in center_components(rs, mu, basis) if c.rep == component), None
    )
    if comp is None:
        raise ValueError(f"no component with representative {component}")
    nvars = 2 * rs.rank
    weights = tuple(basis.degrees) * 2
    monos = _monomials_within(nvars, weights, max_weighted_degree)
    rng = random.Random(seed)
    rows = []
    for _ in range(samples):
        lam = random_weight(rng, rs.rank)
        first, second = comp.point(lam)
        point = first.values + second.values
        rows.append(
            [
                MPoly(nvars, {m: 1}).evaluate(point) if any(m) else Fraction(1)
                for m in monos
            ]
        )
    kernel = nullspace(rows, len(monos))
    out = []
    for vec in kernel:
        poly = MPoly(nvars, {m: c for m, c in zip(monos, vec) if c})
        if not poly.is_zero():
            out.append(poly.primitive())
    return out


def restriction_surjection_check(k_big: int, k_small: int) -> bool:
    """Factor-set containment realizing the canonical restriction surjections.

    The weights of the smaller rank-one representation embed in those of the
    larger one exactly when the coefficients share parity, and then every
    orbit factor of the small ideal must recur verbatim in the large one.
    """
    if k_small > k_big:
        raise ValueError("first argument must dominate the second")
    if (k_big - k_small) % 2 != 0:
        raise ValueError(f"parity mismatch: {k_big} vs {k_small}")
    big = center_ideal_rank1(k_big).factor_keys()
    small = center_ideal_rank1(k_small).factor_keys()
    return small <= big


def standard_basis(algebra: str) -> tuple[RootSystem, InvariantBasis]:
    rs = build_root_system(algebra[0].upper(), int(algebra[1:]))
    return rs, invariant_generators(rs)
