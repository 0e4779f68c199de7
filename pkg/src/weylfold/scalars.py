"""Exact coefficient scalars.

Two ordered abelian groups are supported as coefficient domains: the
rationals (plain ``fractions.Fraction``) and pairs of rationals ordered
lexicographically (``LexPair``).  The second group is non-Archimedean: the
second component is infinitesimal against the first.  Rationals embed as
``(q, 0)``, and ``LexPair`` arithmetic accepts plain rationals on either
side through that embedding.
"""

from __future__ import annotations

from fractions import Fraction
from math import floor
from typing import Union


class LexPair:
    """Pair of rationals with lexicographic order and diagonal scaling."""

    __slots__ = ("a", "b")

    def __init__(self, a, b=0):
        self.a = a if type(a) is Fraction else Fraction(a)
        self.b = b if type(b) is Fraction else Fraction(b)

    @staticmethod
    def _coerce(other):
        if isinstance(other, LexPair):
            return other
        if isinstance(other, (int, Fraction)):
            return LexPair(other, 0)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return LexPair(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return LexPair(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return LexPair(o.a - self.a, o.b - self.b)

    def __neg__(self):
        return LexPair(-self.a, -self.b)

    def __mul__(self, other):
        # Only rational scalars act; LexPair * LexPair has no meaning here.
        if isinstance(other, (int, Fraction)):
            return LexPair(self.a * other, self.b * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return LexPair(self.a / other, self.b / other)
        return NotImplemented

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __lt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self.a, self.b) < (o.a, o.b)

    def __le__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self.a, self.b) <= (o.a, o.b)

    def __gt__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else o < self

    def __ge__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else o <= self

    def __hash__(self):
        # Embedded rationals hash like the bare rational so mixed lookups work.
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __abs__(self):
        return self if self >= 0 else -self

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __repr__(self):
        return f"LexPair({self.a!r}, {self.b!r})"


Scalar = Union[Fraction, LexPair]
Point = tuple  # coefficient vector over a Scalar domain


def scalar_abs(s):
    return s if s >= 0 else -s


def scalar_floor(s):
    """Largest integer <= s.  Defined for both scalar domains."""
    if isinstance(s, LexPair):
        n = floor(s.a)
        if s.a == n and s.b < 0:
            n -= 1
        return n
    return floor(s)


def vec_add(x, y):
    return tuple(a + b for a, b in zip(x, y))


def vec_sub(x, y):
    return tuple(a - b for a, b in zip(x, y))


def vec_neg(x):
    return tuple(-a for a in x)


def vec_scale(c, x):
    return tuple(c * a for a in x)


def vec_zero(n):
    return (Fraction(0),) * n


def vec_is_zero(x):
    return all(a == 0 for a in x)


def mat_vec(m, x):
    return tuple(sum(m[i][j] * x[j] for j in range(len(x))) for i in range(len(m)))


def mat_mul(m, n):
    size = len(m)
    return tuple(
        tuple(sum(m[i][k] * n[k][j] for k in range(size)) for j in range(size))
        for i in range(size)
    )


def mat_identity(n):
    return tuple(
        tuple(Fraction(1) if i == j else Fraction(0) for j in range(n)) for i in range(n)
    )


def mat_invert(m):
    """Invert a small rational matrix by Gauss-Jordan elimination."""
    n = len(m)
    aug = [[Fraction(m[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ValueError("singular matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [v - f * w for v, w in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)
