from fractions import Fraction

import pytest

from weylfold.scalars import LexPair, mat_invert, mat_mul, scalar_abs, scalar_floor


def test_lexpair_order_is_lexicographic():
    assert LexPair(1, 0) > LexPair(0, 100)
    assert LexPair(0, Fraction(-1, 2)) < LexPair(0, 0)
    assert LexPair(Fraction(1, 2), -3) < LexPair(1, -5)


def test_rationals_embed():
    assert LexPair(Fraction(2, 3), 0) == Fraction(2, 3)
    assert Fraction(1, 2) < LexPair(Fraction(1, 2), Fraction(1, 7))
    assert LexPair(3, 0) == 3
    assert hash(LexPair(Fraction(5, 4), 0)) == hash(Fraction(5, 4))


def test_arithmetic_is_componentwise():
    a = LexPair(1, Fraction(1, 2))
    b = LexPair(Fraction(-1, 3), 2)
    assert a + b == LexPair(Fraction(2, 3), Fraction(5, 2))
    assert a - b == LexPair(Fraction(4, 3), Fraction(-3, 2))
    assert 3 * a == LexPair(3, Fraction(3, 2))
    assert a / 2 == LexPair(Fraction(1, 2), Fraction(1, 4))


def test_abs_is_order_abs():
    assert scalar_abs(LexPair(0, -1)) == LexPair(0, 1)
    assert scalar_abs(LexPair(-2, 5)) == LexPair(2, -5)
    assert scalar_abs(Fraction(-7, 2)) == Fraction(7, 2)


@pytest.mark.parametrize(
    "value,floor",
    [
        (Fraction(7, 2), 3),
        (Fraction(-7, 2), -4),
        (LexPair(2, Fraction(1, 3)), 2),
        (LexPair(2, Fraction(-1, 3)), 1),
        (LexPair(Fraction(5, 2), -9), 2),
    ],
)
def test_scalar_floor(value, floor):
    assert scalar_floor(value) == floor


def test_mat_invert_roundtrip():
    m = ((Fraction(2), Fraction(-1)), (Fraction(-2), Fraction(2)))
    inv = mat_invert(m)
    ident = mat_mul(m, inv)
    assert ident == ((1, 0), (0, 1))


def test_mat_invert_rejects_singular():
    with pytest.raises(ValueError):
        mat_invert(((1, 1), (2, 2)))
