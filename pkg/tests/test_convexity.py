import random
from fractions import Fraction

import pytest

from weylfold import build_root_system
from weylfold.convexity import (
    contains_via_cone,
    hull_of_orbit,
    lattice_points,
)
from weylfold.model_space import TranslationLattice
from weylfold.scalars import LexPair, vec_zero

A1 = build_root_system("A1")
A2 = build_root_system("A2")


def test_hull_of_origin_is_origin():
    hull = hull_of_orbit(A2, vec_zero(2))
    assert hull.contains(vec_zero(2))
    assert not hull.contains((Fraction(1, 10), Fraction(0)))


def test_a1_hull_is_segment():
    hull = hull_of_orbit(A1, (Fraction(1),))
    assert hull.contains((Fraction(1, 2),))
    assert hull.contains((Fraction(-1),))
    assert not hull.contains((Fraction(3, 2),))


def test_hexagon_has_seven_root_lattice_points():
    hull = hull_of_orbit(A2, (Fraction(1), Fraction(1)))
    pts = lattice_points(hull, TranslationLattice(A2, "root"), vec_zero(2))
    assert len(pts) == 7
    expected = {(0, 0), (1, 1), (-1, -1), (1, 0), (-1, 0), (0, 1), (0, -1)}
    assert {(int(a), int(b)) for a, b in pts} == expected


def test_a1_lattice_points():
    hull = hull_of_orbit(A1, (Fraction(1),))
    pts = lattice_points(hull, TranslationLattice(A1, "root"), vec_zero(1))
    assert sorted(pts) == [(-1,), (0,), (1,)]


def test_cone_examples():
    x = (Fraction(1), Fraction(1))
    assert contains_via_cone(A2, x, vec_zero(2))
    assert contains_via_cone(A2, x, x)
    assert not contains_via_cone(A2, x, (Fraction(2), Fraction(1)))
    assert not hull_of_orbit(A2, x).contains((Fraction(2), Fraction(0)))


@pytest.mark.parametrize("label", ["A2", "B2", "C2", "G2", "A3"])
def test_two_characterizations_agree(label):
    rng = random.Random(hash(label) % 1000)
    rs = build_root_system(label)
    for _ in range(200):
        x = tuple(Fraction(rng.randint(-5, 5), 2) for _ in range(rs.rank))
        y = tuple(Fraction(rng.randint(-5, 5), 2) for _ in range(rs.rank))
        hull = hull_of_orbit(rs, x)
        assert hull.contains(y) == contains_via_cone(rs, x, y)


def test_membership_is_weyl_invariant():
    rng = random.Random(4)
    rs = build_root_system("B2")
    x = (Fraction(3, 2), Fraction(2))
    hull = hull_of_orbit(rs, x)
    for _ in range(50):
        y = tuple(Fraction(rng.randint(-4, 4), 2) for _ in range(2))
        w = rng.choice(rs.weyl_elements())
        assert hull.contains(y) == hull.contains(w.apply(y))


def test_hull_same_for_whole_orbit():
    x = (Fraction(1), Fraction(1))
    reference = hull_of_orbit(A2, x)
    for p in A2.weyl_orbit(x):
        hull = hull_of_orbit(A2, p)
        assert hull.halfspaces == reference.halfspaces
        assert hull.contains(p)


def test_lex_scalars_in_hull():
    x = (Fraction(1), Fraction(1))
    hull = hull_of_orbit(A2, x)
    inside = (LexPair(1, Fraction(-1, 5)), LexPair(1, 0))
    outside = (LexPair(1, Fraction(1, 5)), LexPair(1, 0))
    assert hull.contains(inside)
    assert not hull.contains(outside)
    assert contains_via_cone(A2, x, inside)
    assert not contains_via_cone(A2, x, outside)
