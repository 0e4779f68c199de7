import random
from fractions import Fraction

import pytest

from weylfold import InputError, build_root_system

COUNTS = {"A1": 1, "A2": 3, "B2": 4, "C2": 4, "G2": 6, "A3": 6}
ORDERS = {"A1": 2, "A2": 6, "B2": 8, "C2": 8, "G2": 12, "A3": 24}


@pytest.mark.parametrize("label", sorted(COUNTS))
def test_positive_root_counts(label):
    rs = build_root_system(label)
    assert len(rs.positive_roots) == COUNTS[label]
    assert len(rs.roots) == 2 * COUNTS[label]


@pytest.mark.parametrize("label", sorted(ORDERS))
def test_weyl_group_order(label):
    rs = build_root_system(label)
    assert len(rs.weyl_elements()) == ORDERS[label]


def test_unknown_label_rejected():
    with pytest.raises(InputError):
        build_root_system("E8")


def test_longest_words():
    assert build_root_system("A1").longest_word().word == (1,)
    assert build_root_system("A2").longest_word().word == (1, 2, 1)
    assert len(build_root_system("B2").longest_word().word) == 4


def test_reduced_word_counts_of_longest():
    assert build_root_system("A2").reduced_words_of_longest() == ((1, 2, 1), (2, 1, 2))
    assert len(build_root_system("A3").reduced_words_of_longest()) == 16


def test_w0_is_involution():
    for label in COUNTS:
        rs = build_root_system(label)
        w0 = rs.longest_word()
        square = w0 * w0
        ident = rs.identity_element()
        assert square.matrix == ident.matrix


def test_reflection_is_involution_on_roots():
    rng = random.Random(0)
    for label in COUNTS:
        rs = build_root_system(label)
        for _ in range(30):
            a = rng.choice(rs.roots)
            b = rng.choice(rs.roots)
            assert rs.reflect_root(a, rs.reflect_root(a, b)) == b


def test_invariant_form():
    rng = random.Random(1)
    for label in ("A2", "B2", "G2"):
        rs = build_root_system(label)
        for _ in range(30):
            x = tuple(Fraction(rng.randint(-4, 4), 2) for _ in range(rs.rank))
            y = tuple(Fraction(rng.randint(-4, 4), 2) for _ in range(rs.rank))
            w = rng.choice(rs.weyl_elements())
            assert rs.inner(w.apply(x), w.apply(y)) == rs.inner(x, y)


def test_weyl_orbit_examples():
    rs = build_root_system("A2")
    assert rs.weyl_orbit((Fraction(0), Fraction(0))) == {(0, 0)}
    orbit = rs.weyl_orbit((Fraction(1), Fraction(1)))
    assert len(orbit) == 6
    assert (Fraction(-1), Fraction(-1)) in orbit
    rs1 = build_root_system("A1")
    assert rs1.weyl_orbit((Fraction(1),)) == {(1,), (-1,)}


def test_coroot_normalization():
    for label in COUNTS:
        rs = build_root_system(label)
        for root in rs.roots:
            assert rs.pair_coroot(root, root) == 2


def test_highest_root():
    assert build_root_system("G2").highest_root() == (3, 2)
    assert build_root_system("B2").highest_root() == (1, 2)
    assert build_root_system("C2").highest_root() == (2, 1)
