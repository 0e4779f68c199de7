import random
from fractions import Fraction

import pytest

from weylfold import InputError
from weylfold.scalars import LexPair, scalar_abs
from weylfold.tree import (
    build_tree,
    retraction_rho,
    special_points,
    sphere,
    tree_distance,
    verify_tree_theorem,
)


def test_special_points_are_half_steps():
    pts = special_points(Fraction(1), Fraction(2))
    assert sorted(pts) == [
        Fraction(-3, 2), -1, Fraction(-1, 2), 0, Fraction(1, 2), 1, Fraction(3, 2)
    ]


def test_build_tree_is_deterministic():
    a = build_tree(Fraction(1), Fraction(3), 42)
    b = build_tree(Fraction(1), Fraction(3), 42)
    assert a == b
    c = build_tree(Fraction(1), Fraction(3), 43)
    assert a != c


def test_unbranched_sphere():
    t = build_tree(Fraction(1), Fraction(3), 0, thick=False)
    assert sphere(t, Fraction(2)) == {("base", 2), ("base", -2)}
    assert sphere(t, Fraction(0)) == {("base", 0)}


def test_branched_sphere_counts():
    t = build_tree(Fraction(1), Fraction(2), 1)
    s = sphere(t, Fraction(2))
    branch_pts = [p for p in s if p[0] == "br"]
    # every full-length branch inside the ball contributes one point
    assert len(branch_pts) >= len(special_points(Fraction(1), Fraction(2))) - 1
    for p in s:
        assert tree_distance(t, ("base", Fraction(0)), p) == 2


def test_rho_fixes_base_and_unfolds_branches():
    t = build_tree(Fraction(1), Fraction(4), 7)
    assert retraction_rho(t, ("base", Fraction(-3))) == -3
    for i, (z, length) in enumerate(t.branches):
        assert retraction_rho(t, ("br", i, length)) == z + length
    # the documented case: branch at z=-1, point at depth 1 retracts to 0
    idx = next(i for i, b in enumerate(t.branches) if b[0] == -1 and b[1] >= 1)
    assert retraction_rho(t, ("br", idx, Fraction(1))) == 0


def test_tree_distance_cases():
    t = build_tree(Fraction(1), Fraction(4), 7)
    i = next(k for k, b in enumerate(t.branches) if b[0] == Fraction(-1, 2) and b[1] >= 1)
    j = next(k for k, b in enumerate(t.branches) if b[0] == Fraction(3, 2) and b[1] >= 1)
    p = ("br", i, Fraction(1))
    q = ("br", j, Fraction(1, 2))
    assert tree_distance(t, p, q) == 1 + 2 + Fraction(1, 2)
    assert tree_distance(t, p, ("base", Fraction(1))) == 1 + Fraction(3, 2)
    assert tree_distance(t, p, p) == 0
    with pytest.raises(InputError):
        tree_distance(t, ("br", i, Fraction(100)), p)


def test_theorem_on_thick_tree():
    t = build_tree(Fraction(1), Fraction(4), 7)
    report = verify_tree_theorem(t, Fraction(2))
    assert report["status"] == "VERIFIED"
    assert report["rho_image"] == [-2, -1, 0, 1, 2]


def test_theorem_reports_insufficient_thickness():
    t = build_tree(Fraction(1), Fraction(4), 7, thick=False)
    report = verify_tree_theorem(t, Fraction(2))
    assert report["status"] == "INSUFFICIENT_THICKNESS"
    assert report["verdict"] is False
    assert report["rho_image"] == [-2, 2]


def test_theorem_rejects_non_lattice_x():
    t = build_tree(Fraction(1), Fraction(4), 7)
    with pytest.raises(InputError):
        verify_tree_theorem(t, Fraction(3, 2))
    with pytest.raises(InputError):
        verify_tree_theorem(t, Fraction(5))


def test_theorem_with_half_step():
    t = build_tree(Fraction(1, 2), Fraction(2), 3)
    report = verify_tree_theorem(t, Fraction(3, 2))
    assert report["status"] == "VERIFIED"
    assert report["expected"] == [
        Fraction(-3, 2), -1, Fraction(-1, 2), 0, Fraction(1, 2), 1, Fraction(3, 2)
    ]


def test_theorem_with_lex_scalars():
    step = LexPair(1, 0)
    t = build_tree(step, 4 * step, 11)
    for k in (1, 2, 3, 4):
        assert verify_tree_theorem(t, k * step)["status"] == "VERIFIED"


def test_rho_is_distance_non_increasing():
    rng = random.Random(9)
    t = build_tree(Fraction(1), Fraction(4), 5)
    pool = list(sphere(t, Fraction(2))) + list(sphere(t, Fraction(3)))
    pool.append(("base", Fraction(0)))
    for _ in range(500):
        p = rng.choice(pool)
        q = rng.choice(pool)
        lhs = scalar_abs(retraction_rho(t, p) - retraction_rho(t, q))
        assert lhs <= tree_distance(t, p, q)


def test_rho_is_isometric_on_single_apartment():
    # a branch together with the ray toward the negative end is an
    # apartment; rho restricted to it preserves distances
    t = build_tree(Fraction(1), Fraction(4), 7)
    i = next(k for k, b in enumerate(t.branches) if b[0] == -1 and b[1] >= 2)
    apartment = [("base", Fraction(-3)), ("base", Fraction(-2)), ("br", i, Fraction(1)),
                 ("br", i, Fraction(2))]
    for p in apartment:
        for q in apartment:
            lhs = scalar_abs(retraction_rho(t, p) - retraction_rho(t, q))
            assert lhs == tree_distance(t, p, q)
