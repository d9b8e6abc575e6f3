"""Tests for tensor-product linkage, discriminants and the operator engine."""

import random
from fractions import Fraction

import pytest

from kostantcenter.center import center_ideal_rank1
from kostantcenter.characters import invariant_generators
from kostantcenter.linalg import charpoly
from kostantcenter.mpoly import MPoly
from kostantcenter.roots import Weight, build_root_system
from kostantcenter.tensor import (
    casimir_block_matrix,
    casimir_value,
    discriminant_sl2,
    linkage_decomposition_sl2,
    operator_relation_check,
    predicted_block_eigenvalues,
    tensor_characters,
)

A1 = build_root_system("A", 1)
A2 = build_root_system("A", 2)


class TestTensorCharacters:
    def test_lambda_zero_k5(self):
        got = {c.values[0]: m for c, m in tensor_characters(A1, Weight.of(0), Weight.of(5))}
        assert got == {Fraction(15): 2, Fraction(3): 2, Fraction(-1): 1, Fraction(35): 1}

    def test_lambda_minus_one_k5(self):
        got = {c.values[0]: m for c, m in tensor_characters(A1, Weight.of(-1), Weight.of(5))}
        assert got == {Fraction(0): 2, Fraction(8): 2, Fraction(24): 2}

    def test_lambda_one_k5(self):
        got = {c.values[0]: m for c, m in tensor_characters(A1, Weight.of(1), Weight.of(5))}
        assert got == {Fraction(8): 2, Fraction(0): 2, Fraction(24): 1, Fraction(48): 1}

    def test_trivial_twist(self):
        basis = invariant_generators(A2)
        lam = Weight.of(Fraction(1, 2), 3)
        got = tensor_characters(A2, lam, Weight.zero(2), basis)
        assert got == [(basis.evaluate(lam), 1)]

    def test_generic_rational_lambda_all_distinct(self):
        got = tensor_characters(A1, Weight.of(Fraction(1, 3)), Weight.of(5))
        assert len(got) == 6
        assert all(m == 1 for _, m in got)

    def test_a2_adjoint_at_generic_point(self):
        lam = Weight.of(Fraction(2, 5), Fraction(1, 7))
        got = tensor_characters(A2, lam, Weight.of(1, 1))
        assert sum(m for _, m in got) == 8


class TestLinkageDecomposition:
    @pytest.mark.parametrize(
        "lam,expected",
        [
            (-1, [("P:-6", 24), ("P:-4", 8), ("P:-2", 0)]),
            (0, [("P:-5", 15), ("P:-3", 3), ("M:-1", -1), ("M:5", 35)]),
            (1, [("P:-4", 8), ("P:-2", 0), ("M:4", 24), ("M:6", 48)]),
            (2, [("P:-3", 3), ("M:-1", -1), ("M:3", 15), ("M:5", 35), ("M:7", 63)]),
            (3, [("P:-2", 0), ("M:2", 8), ("M:4", 24), ("M:6", 48), ("M:8", 80)]),
        ],
    )
    def test_projective_regime_k5(self, lam, expected):
        dec = linkage_decomposition_sl2(lam, 5)
        got = [(b.label, b.character.values[0]) for b in dec.blocks]
        assert got == [(label, Fraction(chi)) for label, chi in expected]
        assert dec.total_multiplicity() == 6

    def test_generic_dominant_all_vermas(self):
        dec = linkage_decomposition_sl2(7, 5)
        assert [b.label for b in dec.blocks] == ["M:2", "M:4", "M:6", "M:8", "M:10", "M:12"]
        chars = [b.character.values[0] for b in dec.blocks]
        assert len(set(chars)) == 6

    def test_trivial_twist(self):
        dec = linkage_decomposition_sl2(0, 0)
        assert [b.label for b in dec.blocks] == ["M:0"]

    def test_below_projective_regime_no_labels(self):
        dec = linkage_decomposition_sl2(-4, 3)
        assert all(b.label is None for b in dec.blocks)
        assert dec.total_multiplicity() == 4

    def test_block_weights_are_original_weights(self):
        dec = linkage_decomposition_sl2(0, 5)
        flattened = sorted(
            int(w.coords[0]) for b in dec.blocks for w in b.weights
        )
        assert flattened == [-5, -3, -1, 1, 3, 5]

    def test_serialization(self):
        dec = linkage_decomposition_sl2(-1, 5)
        data = dec.to_jsonable()
        assert data["lambda"] == [-1]
        assert [b["label"] for b in data["blocks"]] == ["P:-6", "P:-4", "P:-2"]
        assert all(b["mult"] == 2 for b in data["blocks"])


class TestDiscriminant:
    def test_k5(self):
        assert discriminant_sl2(5) == {
            Fraction(-1),
            Fraction(0),
            Fraction(3),
            Fraction(8),
            Fraction(15),
        }

    def test_k0_empty(self):
        assert discriminant_sl2(0) == set()

    def test_k1(self):
        assert discriminant_sl2(1) == {Fraction(-1)}

    def test_matches_merged_tensor_characters(self):
        # collision values are exactly where the character multiset merges
        for k in (1, 2, 3, 4, 5):
            disc = discriminant_sl2(k)
            seen = set()
            lam = Fraction(-2 * k - 4)
            while lam <= k + 1:
                merged = any(
                    m >= 2
                    for _, m in tensor_characters(A1, Weight.of(lam), Weight.of(k))
                )
                if merged:
                    seen.add(casimir_value(lam))
                lam += Fraction(1, 2)
            assert seen == disc


class TestCasimirBlocks:
    def test_highest_weight_line(self):
        block = casimir_block_matrix(Fraction(1, 3), 3, 0)
        assert block.matrix == ((Fraction(160, 9),),)

    def test_depth_two_charpoly(self):
        block = casimir_block_matrix(Fraction(1, 3), 3, 2)
        assert len(block.matrix) == 3
        coeffs = charpoly(block.as_rows())
        x = MPoly.variable(1, 0)
        expected = MPoly.constant(1, 1)
        for ev in (Fraction(160, 9), Fraction(40, 9), Fraction(-8, 9)):
            expected = expected * (x - MPoly.constant(1, ev))
        assert coeffs == [expected.terms.get((i,), Fraction(0)) for i in range(4)]

    def test_dimension_cap(self):
        assert len(casimir_block_matrix(Fraction(7, 2), 2, 9).matrix) == 3
        assert len(casimir_block_matrix(Fraction(7, 2), 5, 3).matrix) == 4

    def test_trace_identity(self):
        rng = random.Random(12)
        for _ in range(10):
            k = rng.randint(0, 5)
            t = rng.randint(0, 7)
            lam = Fraction(rng.randint(-9, 9), rng.choice((1, 2, 3, 5)))
            block = casimir_block_matrix(lam, k, t)
            assert block.trace() == sum(predicted_block_eigenvalues(lam, k, t))

    def test_charpoly_equals_predicted_product(self):
        rng = random.Random(13)
        for _ in range(8):
            k = rng.randint(0, 4)
            t = rng.randint(0, 6)
            lam = Fraction(rng.randint(-9, 9), rng.choice((2, 3, 5, 7)))
            block = casimir_block_matrix(lam, k, t)
            coeffs = charpoly(block.as_rows())
            x = MPoly.variable(1, 0)
            expected = MPoly.constant(1, 1)
            for ev in predicted_block_eigenvalues(lam, k, t):
                expected = expected * (x - MPoly.constant(1, ev))
            assert coeffs == [
                expected.terms.get((i,), Fraction(0)) for i in range(len(coeffs))
            ]

    def test_generic_spectrum_squarefree(self):
        evs = predicted_block_eigenvalues(Fraction(1, 3), 5, 8)
        assert len(set(evs)) == len(evs)


class TestOperatorRelation:
    def test_generic_rational(self):
        assert operator_relation_check(Fraction(1, 3), 5, 8)

    def test_discriminant_adjacent(self):
        # non-semisimple blocks occur here; the relation must still annihilate
        assert operator_relation_check(2, 5, 8)
        assert operator_relation_check(-1, 5, 8)

    def test_trivial_twist(self):
        assert operator_relation_check(Fraction(9, 4), 0, 3)

    def test_seeded_sweep(self):
        rng = random.Random(21)
        for k in range(0, 7):
            pres = center_ideal_rank1(k)
            for _ in range(10):
                lam = Fraction(rng.randint(-12, 12), rng.choice((1, 2, 3, 4)))
                assert operator_relation_check(lam, k, k + 3, pres)

    def test_wrong_relation_detected(self):
        wrong = center_ideal_rank1(3)
        assert not operator_relation_check(Fraction(1, 3), 5, 6, wrong)
