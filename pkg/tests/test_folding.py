import random
from fractions import Fraction

import pytest

from weylfold import FoldConstructionError, InputError, build_root_system
from weylfold.convexity import hull_of_orbit, lattice_points
from weylfold.folding import (
    fold_schedule,
    lambda_max,
    positive_fold_to,
)
from weylfold.model_space import TranslationLattice
from weylfold.scalars import LexPair, vec_zero

A1 = build_root_system("A1")
A2 = build_root_system("A2")


def test_lambda_max_examples():
    hull = hull_of_orbit(A1, (Fraction(1),))
    assert lambda_max(A1, hull, (Fraction(0),), 1) == 1
    assert lambda_max(A1, hull, (Fraction(-1),), 1) == 0
    hull2 = hull_of_orbit(A2, (Fraction(1), Fraction(1)))
    assert lambda_max(A2, hull2, vec_zero(2), 1) == 1


def test_lambda_max_rejects_outside_point():
    hull = hull_of_orbit(A1, (Fraction(1),))
    with pytest.raises(InputError):
        lambda_max(A1, hull, (Fraction(2),), 1)


def test_schedule_example():
    schedule = fold_schedule(
        A2, (Fraction(1), Fraction(1)), vec_zero(2), (1, 2, 1), lattice=True
    )
    assert schedule.steps == (1, 1, 0)
    assert schedule.terminal == (-1, -1)


def test_schedule_trivial_at_terminus():
    x = (Fraction(1), Fraction(1))
    y = A2.longest_word().apply(x)
    schedule = fold_schedule(A2, x, y)
    assert all(s == 0 for s in schedule.steps)


def test_schedule_rejects_bad_word():
    with pytest.raises(InputError):
        fold_schedule(A2, (Fraction(1), Fraction(1)), vec_zero(2), (1, 2))


def test_schedule_with_lex_scalars():
    x = (Fraction(1), Fraction(1))
    y = (LexPair(0, Fraction(1, 3)), LexPair(Fraction(1, 2), 0))
    schedule = fold_schedule(A2, x, y)
    assert schedule.terminal == (-1, -1)
    assert all(s >= 0 for s in schedule.steps)


@pytest.mark.parametrize("label,x", [
    ("A2", (Fraction(1), Fraction(1))),
    ("A2", (Fraction(2), Fraction(1))),
    ("B2", (Fraction(1), Fraction(1))),
    ("B2", (Fraction(1), Fraction(2))),
    ("G2", (Fraction(1), Fraction(2, 3))),
])
def test_schedule_terminates_for_all_lattice_points(label, x):
    rs = build_root_system(label)
    lattice = TranslationLattice(rs, "coroot")
    hull = hull_of_orbit(rs, x)
    pts = lattice_points(hull, lattice, vec_zero(rs.rank))
    w0x = tuple(rs.longest_word().apply(hull.x_plus))
    for word in rs.reduced_words_of_longest():
        for y in pts:
            schedule = fold_schedule(rs, x, y, word, lattice=True)
            assert schedule.terminal == w0x
            for point in schedule.points:
                assert hull.contains(point)


def test_positive_fold_examples():
    path = positive_fold_to(A1, (Fraction(1),), (Fraction(0),))
    assert path.points() == ((0,), (Fraction(-1, 2),), (0,))
    assert positive_fold_to(A1, (Fraction(1),), (Fraction(1),)).endpoint() == (1,)
    w0x = tuple(A1.longest_word().apply((Fraction(1),)))
    assert positive_fold_to(A1, (Fraction(1),), w0x).points() == ((0,), (-1,))


def test_positive_fold_reaches_every_lattice_point():
    for label, x in [("A2", (Fraction(1), Fraction(1))), ("B2", (Fraction(1), Fraction(1)))]:
        rs = build_root_system(label)
        hull = hull_of_orbit(rs, x)
        pts = lattice_points(hull, TranslationLattice(rs, "coroot"), vec_zero(rs.rank))
        for y in pts:
            assert positive_fold_to(rs, x, y).endpoint() == y


def test_positive_fold_rejects_non_lattice_target():
    with pytest.raises(InputError):
        positive_fold_to(A2, (Fraction(1), Fraction(1)), (Fraction(1, 2), Fraction(0)))


def test_figure_constants():
    # the committed configuration reproducing the folding illustration:
    # dominant x = 3 alpha1 + 2 alpha2, target y = alpha1, word (2, 1, 2)
    schedule = fold_schedule(
        A2, (Fraction(3), Fraction(2)), (Fraction(1), Fraction(0)), (2, 1, 2),
        lattice=True,
    )
    assert schedule.steps == (1, 3, 2)
