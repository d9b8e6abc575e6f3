"""Tests for invariant generators and infinitesimal characters."""

import random
from fractions import Fraction

import pytest

from kostantcenter.characters import character_point, invariant_generators, same_character
from kostantcenter.mpoly import MPoly
from kostantcenter.roots import Weight, build_root_system, parse_algebra, weyl_group


def random_weight(rng, rank):
    return Weight(tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 3)) for _ in range(rank)))


def test_a1_generator_is_casimir():
    basis = invariant_generators(build_root_system("A", 1))
    assert basis.generators == (MPoly(1, {(2,): 1, (1,): 2}),)
    assert basis.degrees == (2,)


def test_a1_normalization_on_integers():
    basis = invariant_generators(build_root_system("A", 1))
    for k in range(-10, 11):
        assert character_point(basis, Weight.of(k)).values == (Fraction(k * (k + 2)),)


def test_a1_fixed_point_value():
    basis = invariant_generators(build_root_system("A", 1))
    assert character_point(basis, Weight.of(-1)).values == (Fraction(-1),)


@pytest.mark.parametrize("name", ["A2", "B2", "G2", "A3"])
def test_generator_count_and_dot_invariance(name):
    rs = parse_algebra(name)
    basis = invariant_generators(rs)
    assert len(basis.generators) == rs.rank
    rng = random.Random(17)
    for _ in range(20):
        lam = random_weight(rng, rs.rank)
        chi = basis.evaluate(lam)
        for w in weyl_group(rs):
            assert basis.evaluate(rs.dot(w, lam)) == chi


def test_generators_separate_unlinked_points():
    rs = build_root_system("A", 2)
    basis = invariant_generators(rs)
    group = weyl_group(rs)
    rng = random.Random(23)
    for _ in range(40):
        lam, psi = random_weight(rng, 2), random_weight(rng, 2)
        linked = any(rs.dot(w, lam) == psi for w in group)
        assert (basis.evaluate(lam) == basis.evaluate(psi)) == linked


class TestSameCharacter:
    def test_a1_pairs(self):
        basis = invariant_generators(build_root_system("A", 1))
        assert same_character(basis, Weight.of(3), Weight.of(-5))
        assert not same_character(basis, Weight.of(3), Weight.of(5))

    def test_a2_orbit_members(self):
        rs = build_root_system("A", 2)
        basis = invariant_generators(rs)
        rng = random.Random(31)
        for _ in range(10):
            lam = random_weight(rng, 2)
            for w in weyl_group(rs):
                assert same_character(basis, lam, rs.dot(w, lam))


def test_character_point_values_a1():
    basis = invariant_generators(build_root_system("A", 1))
    assert character_point(basis, Weight.of(2)).values == (Fraction(8),)
    assert character_point(basis, Weight.of(-4)).values == (Fraction(8),)


def test_character_point_serialization():
    basis = invariant_generators(build_root_system("A", 1))
    chi = character_point(basis, Weight.of(Fraction(1, 3)))
    assert chi.to_jsonable() == ["7/9"]
