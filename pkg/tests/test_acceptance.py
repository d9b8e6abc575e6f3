"""Acceptance suite: every criterion checked exactly, one pass/fail line each.

All comparisons are exact rational arithmetic with tolerance zero.  Expected
values are frozen inline here, independently of the package's own stored
reference data.
"""

import random
from contextlib import contextmanager
from fractions import Fraction

from kostantcenter.center import (
    center_ideal_rank1,
    change_presentation,
    fiber_dimension,
    graded_medium,
    interpolate_relations,
    klein_action,
    membership_test,
    restriction_surjection_check,
    rozhkovskaya_presentation,
    swap_variables,
)
from kostantcenter.characters import invariant_generators
from kostantcenter.mpoly import MPoly
from kostantcenter.roots import Weight, build_root_system, weight_system
from kostantcenter.tensor import (
    discriminant_sl2,
    linkage_decomposition_sl2,
    operator_relation_check,
    tensor_characters,
)
from oracles import multiplicity_oracle_a2

A1 = build_root_system("A", 1)
A2 = build_root_system("A", 2)


@contextmanager
def criterion(name):
    try:
        yield
    except BaseException:
        print(f"FAIL {name}", flush=True)
        raise
    else:
        print(f"PASS {name}", flush=True)


def poly2(terms):
    return MPoly(2, terms)


def factor_set(pres):
    return pres.factor_keys()


def test_criterion_1_tilde_presentation():
    with criterion("criterion 1: tilde presentation of the level-5 center"):
        expected = {
            poly2(t).sort_key()
            for t in (
                {(2, 0): 1, (1, 1): -2, (0, 2): 1, (1, 0): -2, (0, 1): -2, (0, 0): -3},
                {(2, 0): 1, (1, 1): -2, (0, 2): 1, (1, 0): -50, (0, 1): -50, (0, 0): 525},
                {(2, 0): 1, (1, 1): -2, (0, 2): 1, (1, 0): -18, (0, 1): -18, (0, 0): 45},
            )
        }
        assert factor_set(center_ideal_rank1(5)) == expected


def test_criterion_2_rozhkovskaya_presentation():
    with criterion("criterion 2: shifted-coordinate presentation at level 5"):
        expected = {
            poly2(t).sort_key()
            for t in (
                {(0, 2): 1, (0, 1): 20, (1, 0): -100},
                {(0, 2): 1, (0, 1): 52, (1, 0): -36, (0, 0): 640},
                {(0, 2): 1, (0, 1): 68, (1, 0): -4, (0, 0): 1152},
            )
        }
        direct = rozhkovskaya_presentation(5)
        assert factor_set(direct) == expected
        # and the same set arises from the tilde ideal via Mtilde1 = M1 + C2 + 35
        changed = change_presentation(center_ideal_rank1(5), "rozhkovskaya")
        assert factor_set(changed) == expected


def test_criterion_3_graded_presentation():
    with criterion("criterion 3: graded presentation at level 5"):
        expected = {
            poly2({(0, 2): 1, (1, 0): -c}).sort_key() for c in (100, 36, 4)
        }
        graded = graded_medium(rozhkovskaya_presentation(5))
        assert factor_set(graded) == expected


def test_criterion_4_discriminant():
    with criterion("criterion 4: discriminant locus at level 5"):
        assert discriminant_sl2(5) == {
            Fraction(-1),
            Fraction(0),
            Fraction(3),
            Fraction(8),
            Fraction(15),
        }


def test_criterion_5_tensor_decompositions():
    with criterion("criterion 5: tensor decompositions and character lists"):
        expected_blocks = {
            -1: ["P:-6", "P:-4", "P:-2"],
            0: ["P:-5", "P:-3", "M:-1", "M:5"],
            1: ["P:-4", "P:-2", "M:4", "M:6"],
            2: ["P:-3", "M:-1", "M:3", "M:5", "M:7"],
            3: ["P:-2", "M:2", "M:4", "M:6", "M:8"],
        }
        for lam, labels in expected_blocks.items():
            dec = linkage_decomposition_sl2(lam, 5)
            assert [b.label for b in dec.blocks] == labels, lam
            assert dec.total_multiplicity() == 6
        expected_characters = {
            -1: {Fraction(0): 2, Fraction(8): 2, Fraction(24): 2},
            0: {Fraction(15): 2, Fraction(3): 2, Fraction(-1): 1, Fraction(35): 1},
            1: {Fraction(8): 2, Fraction(0): 2, Fraction(24): 1, Fraction(48): 1},
        }
        for lam, want in expected_characters.items():
            got = {
                chi.values[0]: m
                for chi, m in tensor_characters(A1, Weight.of(lam), Weight.of(5))
            }
            assert got == want, lam


def test_criterion_6_operator_relations():
    with criterion("criterion 6: operator identities on weight-space truncations"):
        rng = random.Random(2024)
        for k in range(0, 7):
            pres = center_ideal_rank1(k)
            for _ in range(10):
                lam = Fraction(rng.randint(-12, 12), rng.choice((1, 2, 3, 4)))
                assert operator_relation_check(lam, k, k + 3, pres), (k, lam)


def test_criterion_7_symmetries():
    with criterion("criterion 7: coordinate swap symmetry and Klein composition"):
        pres = center_ideal_rank1(5)
        assert factor_set(swap_variables(pres)) == factor_set(pres)
        table = {
            ("phi", "phi"): "1",
            ("phi", "neg"): "negphi",
            ("neg", "phi"): "negphi",
            ("neg", "neg"): "1",
            ("negphi", "negphi"): "1",
            ("phi", "negphi"): "neg",
            ("neg", "negphi"): "phi",
            ("1", "phi"): "phi",
            ("1", "neg"): "neg",
            ("1", "negphi"): "negphi",
        }
        mu = Weight.of(5)
        rng = random.Random(7)
        for _ in range(20):
            lam = Weight.of(Fraction(rng.randint(-20, 20), rng.randint(1, 4)))
            psi = lam + Weight.of(rng.choice((-5, -3, -1, 1, 3, 5)))
            for (g, h), gh in table.items():
                inner, _ = klein_action(A1, mu, h, lam, psi)
                _, chars_composed = klein_action(A1, mu, g, *inner)
                _, chars_direct = klein_action(A1, mu, gh, lam, psi)
                assert chars_composed == chars_direct, (g, h)


def test_criterion_8_fiber_dimensions():
    with criterion("criterion 8: fiber dimensions, with independent oracle"):
        assert fiber_dimension(A1, Weight.of(5)) == 6
        assert fiber_dimension(A2, Weight.of(1, 1)) == 10
        # cross-check against the alternating character formula
        ws = weight_system(A2, Weight.of(1, 1))
        oracle_total = 0
        for w, m in ws.entries:
            m_oracle = multiplicity_oracle_a2(A2, Weight.of(1, 1), w)
            assert m == m_oracle
            oracle_total += m_oracle * m_oracle
        assert oracle_total == 10


def test_criterion_9_restriction_tower():
    with criterion("criterion 9: restriction surjections for all parity pairs"):
        for k_big in range(0, 8):
            for k_small in range(k_big % 2, k_big + 1, 2):
                assert restriction_surjection_check(k_big, k_small), (k_big, k_small)


def test_criterion_10_higher_rank_membership():
    with criterion("criterion 10: interpolated relations and mutation detection"):
        mu = Weight.of(1, 1)
        basis = invariant_generators(A2)
        zero_rels = interpolate_relations(
            A2, mu, Weight.zero(2), max_weighted_degree=3, samples=50, seed=11, basis=basis
        )
        theta_rels = interpolate_relations(
            A2, mu, mu, max_weighted_degree=8, samples=50, seed=11, basis=basis
        )
        assert zero_rels and theta_rels
        zero_ok = [
            q
            for q in zero_rels
            if membership_test(
                A2, mu, q, samples=50, seed=5050, basis=basis, component=Weight.zero(2)
            )
        ]
        theta_ok = [
            q
            for q in theta_rels
            if membership_test(A2, mu, q, samples=50, seed=5050, basis=basis, component=mu)
        ]
        assert zero_ok and theta_ok
        product = zero_ok[0] * theta_ok[0]
        assert membership_test(A2, mu, product, samples=50, seed=6060, basis=basis)
        for i, exp in enumerate(sorted(product.terms)):
            corrupted = product + MPoly(4, {exp: 1})
            assert not membership_test(
                A2, mu, corrupted, samples=50, seed=7070 + i, basis=basis
            ), exp
