"""Linkage structure of a Verma module tensored with a finite-dimensional one.

The central characters occurring in the tensor product are the characters of
the shifted highest weights; grouping the shifts into dot orbits gives the
block decomposition.  For the rank-one algebra the module also carries an
exact operator engine: the diagonal quadratic Casimir restricted to a weight
space of the tensor product is a small tridiagonal rational matrix, and the
closed-form center relations must annihilate it identically.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .characters import CharacterPoint, InvariantBasis, invariant_generators
from .linalg import Matrix, identity, is_zero_matrix, mat_add, mat_mul, mat_scale
from .mpoly import MPoly
from .roots import RootSystem, Weight, weight_system
from .center import CenterPresentation, center_ideal_rank1


def casimir_value(x: Fraction | int) -> Fraction:
    """Quadratic Casimir eigenvalue on a highest-weight module: x(x + 2)."""
    x = Fraction(x)
    return x * (x + 2)


def _coords_jsonable(w: Weight):
    if w.is_integral():
        return [int(c) for c in w.coords]
    return [str(c) for c in w.coords]


@dataclass(frozen=True)
class LinkageBlock:
    """Weights of the twisting representation whose shifts share one character."""

    weights: tuple[Weight, ...]
    character: CharacterPoint
    label: str | None  # "P:<w>" or "M:<w>" in the rank-one projective regime
    multiplicity: int

    def to_jsonable(self) -> dict:
        return {
            "weights": [_coords_jsonable(w) for w in self.weights],
            "character": self.character.to_jsonable(),
            "label": self.label,
            "mult": self.multiplicity,
        }


@dataclass(frozen=True)
class LinkageDecomposition:
    lam: Weight
    mu: Weight
    blocks: tuple[LinkageBlock, ...]

    def total_multiplicity(self) -> int:
        return sum(b.multiplicity for b in self.blocks)

    def to_jsonable(self) -> dict:
        return {
            "lambda": _coords_jsonable(self.lam),
            "mu": _coords_jsonable(self.mu),
            "blocks": [b.to_jsonable() for b in self.blocks],
        }


def tensor_characters(
    rs: RootSystem, lam: Weight, mu: Weight, basis: InvariantBasis | None = None
) -> list[tuple[CharacterPoint, int]]:
    """Central characters of the tensor product, merged along dot linkage.

    Each weight of the twisting representation contributes the character of
    the shifted weight with its own multiplicity; dot-linked shifts merge.
    """
    basis = basis or invariant_generators(rs)
    merged: dict[tuple, tuple[CharacterPoint, int]] = {}
    for nu, m in weight_system(rs, mu).entries:
        chi = basis.evaluate(lam + nu)
        key = tuple(chi.values)
        if key in merged:
            merged[key] = (chi, merged[key][1] + m)
        else:
            merged[key] = (chi, m)
    return sorted(merged.values(), key=lambda t: t[0].values)


def linkage_decomposition_sl2(lam: int, k: int) -> LinkageDecomposition:
    """Block decomposition of the rank-one tensor product, with block labels.

    Shifted weights are grouped into dot orbits; in the projective regime
    (integral lam >= -1) a linked pair {a > b} is the indecomposable
    projective at the antidominant member, labelled P:<b>, and a singleton
    is the Verma at its own weight, labelled M:<a>.  Below the projective
    regime only the character blocks are returned, without labels.
    """
    if k < 0:
        raise ValueError("highest weight coefficient must be nonnegative")
    rs_a1 = _a1()
    basis = invariant_generators(rs_a1)
    shifts = [lam + m for m in range(-k, k + 1, 2)]
    classes: list[list[int]] = []
    for s in shifts:
        partner = -s - 2
        placed = False
        for cls in classes:
            if s in cls or partner in cls:
                cls.append(s)
                placed = True
                break
        if not placed:
            classes.append([s])
    label_ok = lam >= -1
    blocks = []
    for cls in classes:
        members = sorted(set(cls))
        label = None
        if label_ok:
            if len(members) == 2:
                label = f"P:{members[0]}"
            else:
                label = f"M:{members[0]}"
        blocks.append(
            LinkageBlock(
                weights=tuple(Weight.of(s - lam) for s in members),
                character=basis.evaluate(Weight.of(members[0])),
                label=label,
                multiplicity=len(cls),
            )
        )
    blocks.sort(key=lambda b: min(lam + w.coords[0] for w in b.weights))
    return LinkageDecomposition(lam=Weight.of(lam), mu=Weight.of(k), blocks=tuple(blocks))


def discriminant_sl2(k: int) -> set[Fraction]:
    """Casimir values where two shifted characters collide.

    Distinct weights i > j of the twisting representation give linked shifts
    exactly at lam = -(i + j + 2)/2; the discriminant is the set of Casimir
    values of those lam.
    """
    values = set()
    weights = list(range(-k, k + 1, 2))
    for a in range(len(weights)):
        for b in range(a + 1, len(weights)):
            lam = Fraction(-(weights[a] + weights[b] + 2), 2)
            values.add(casimir_value(lam))
    return values


@dataclass(frozen=True)
class WeightBlockMatrix:
    """The diagonal Casimir on one weight space of the rank-one tensor product."""

    lam: Fraction
    k: int
    depth: int
    basis_labels: tuple[tuple[int, int], ...]  # (Verma power, representation index)
    matrix: tuple[tuple[Fraction, ...], ...]

    def as_rows(self) -> Matrix:
        return [list(row) for row in self.matrix]

    def trace(self) -> Fraction:
        return sum(self.matrix[i][i] for i in range(len(self.matrix)))


def casimir_block_matrix(lam: Fraction | int, k: int, depth: int) -> WeightBlockMatrix:
    """Exact matrix of the diagonal Casimir h^2 + 2h + 4fe on one weight space.

    Basis vectors are f^a v (x) w_b with a + b = depth and 0 <= b <= k, where
    w_b is the b-fold lowering of the highest vector of the (k+1)-dimensional
    representation.  The standard raising and lowering actions make the
    matrix tridiagonal in b; the normalization is the unique one acting on a
    highest-weight vector of weight x by x(x + 2).
    """
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    if k < 0:
        raise ValueError("highest weight coefficient must be nonnegative")
    lam = Fraction(lam)
    size = min(depth, k) + 1
    nu = lam + k - 2 * depth
    rows = [[Fraction(0)] * size for _ in range(size)]
    labels = []
    for b in range(size):
        a = depth - b
        labels.append((a, b))
        rows[b][b] = nu * nu + 2 * nu + 4 * (a * (lam - a + 1) + b * (k - b + 1))
        # e then f, the cross terms of 4 f_D e_D
        if a >= 1 and b + 1 <= min(depth, k):
            rows[b + 1][b] = 4 * a * (lam - a + 1)
        if b >= 1:
            rows[b - 1][b] = Fraction(4 * b * (k - b + 1))
    return WeightBlockMatrix(
        lam=lam,
        k=k,
        depth=depth,
        basis_labels=tuple(labels),
        matrix=tuple(tuple(row) for row in rows),
    )


def predicted_block_eigenvalues(lam: Fraction | int, k: int, depth: int) -> list[Fraction]:
    """Generalized eigenvalues of the block: the shifted Casimir values."""
    lam = Fraction(lam)
    return [casimir_value(lam + k - 2 * j) for j in range(min(depth, k) + 1)]


def _matrix_poly(q: MPoly, x_value: Fraction, b: Matrix) -> Matrix:
    """Evaluate a two-variable polynomial at (scalar * I, matrix)."""
    n = len(b)
    powers = [identity(n)]
    max_pow = max((e[1] for e in q.terms), default=0)
    for _ in range(max_pow):
        powers.append(mat_mul(powers[-1], b))
    out = [[Fraction(0)] * n for _ in range(n)]
    for (ex, ey), c in q.terms.items():
        out = mat_add(out, mat_scale(powers[ey], c * x_value**ex))
    return out


def operator_relation_check(
    lam: Fraction | int,
    k: int,
    depth_max: int,
    presentation: CenterPresentation | None = None,
) -> bool:
    """Exact operator verification of the closed-form center relations.

    Substituting the Casimir scalar for the first coordinate and the
    diagonal-Casimir block matrix for the second, the product of the ideal
    factors must be the zero matrix on every weight-space truncation.  This
    holds for every lam: at collision points the block is allowed to be
    non-semisimple, and the product still annihilates because colliding
    characters occur as a double root.
    """
    pres = presentation or center_ideal_rank1(k)
    x_value = casimir_value(lam)
    for depth in range(depth_max + 1):
        block = casimir_block_matrix(lam, k, depth).as_rows()
        n = len(block)
        product = identity(n)
        for factor in pres.factors:
            product = mat_mul(product, _matrix_poly(factor, x_value, block))
        if not is_zero_matrix(product):
            return False
    return True


def _a1() -> RootSystem:
    from .roots import build_root_system

    return build_root_system("A", 1)
