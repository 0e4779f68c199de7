"""Crystallographic root systems of rank <= 3 with exact rational arithmetic.

Roots are stored as integer coefficient vectors over the simple roots, so the
simple roots themselves are unit coordinate vectors.  The invariant inner
product normalizes short roots to squared length 2, which keeps every derived
quantity (coroots, coweights, wall levels) rational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import InputError
from .scalars import (
    mat_identity,
    mat_invert,
    mat_mul,
    mat_vec,
    vec_neg,
    vec_scale,
    vec_sub,
)

# PAIRING[label][i][j] = <alpha_i, alpha_j^vee>
PAIRING = {
    "A1": ((2,),),
    "A2": ((2, -1), (-1, 2)),
    "B2": ((2, -2), (-1, 2)),  # alpha1 long, alpha2 short
    "C2": ((2, -1), (-2, 2)),  # alpha1 short, alpha2 long
    "G2": ((2, -1), (-3, 2)),  # alpha1 short, alpha2 long
    "A3": ((2, -1, 0), (-1, 2, -1), (0, -1, 2)),
}

# Half squared lengths of the simple roots ((alpha,alpha)/2, short roots = 1).
HALF_NORMS = {
    "A1": (1,),
    "A2": (1, 1),
    "B2": (2, 1),
    "C2": (1, 2),
    "G2": (1, 3),
    "A3": (1, 1, 1),
}

WEYL_ORDER = {"A1": 2, "A2": 6, "B2": 8, "C2": 8, "G2": 12, "A3": 24}


@dataclass(frozen=True)
class WeylElement:
    """A spherical Weyl group element: reduced word plus its exact matrix."""

    word: tuple
    matrix: tuple

    def apply(self, x):
        return mat_vec(self.matrix, x)

    def __mul__(self, other):
        return WeylElement(self.word + other.word, mat_mul(self.matrix, other.matrix))


class RootSystem:
    def __init__(self, label):
        if label not in PAIRING:
            raise InputError(f"unknown root system {label!r}; choose from "
                             + ", ".join(sorted(PAIRING)))
        self.label = label
        self.pairing_matrix = PAIRING[label]
        self.half_norms = tuple(Fraction(d) for d in HALF_NORMS[label])
        self.rank = len(self.pairing_matrix)
        # Gram matrix of the simple roots: (alpha_i, alpha_j) = d_j * P[i][j].
        self.gram = tuple(
            tuple(self.half_norms[j] * self.pairing_matrix[i][j] for j in range(self.rank))
            for i in range(self.rank)
        )
        self.simple_roots = tuple(
            tuple(1 if j == i else 0 for j in range(self.rank)) for i in range(self.rank)
        )
        self.roots = self._close_roots()
        self.positive_roots = tuple(
            r for r in self.roots if all(c >= 0 for c in r)
        )
        self._check_invariants()
        self.coweights = self._fundamental_coweights()
        self._weyl = None

    # -- construction ------------------------------------------------------

    def _close_roots(self):
        frontier = set(self.simple_roots) | {vec_neg(r) for r in self.simple_roots}
        roots = set()
        while frontier:
            r = frontier.pop()
            if r in roots:
                continue
            roots.add(r)
            for i in range(self.rank):
                frontier.add(self._reflect_root_raw(i, r))
        order = sorted(roots, key=lambda r: (sum(r), r), reverse=True)
        return tuple(sorted(order))

    def _reflect_root_raw(self, i, root):
        c = sum(root[j] * self.pairing_matrix[j][i] for j in range(self.rank))
        return tuple(root[k] - c * (1 if k == i else 0) for k in range(self.rank))

    def _check_invariants(self):
        assert len(self.positive_roots) * 2 == len(self.roots)
        for r in self.roots:
            assert self.pair_coroot(r, r) == 2
        for i in range(self.rank):
            for j in range(self.rank):
                if i != j:
                    assert self.pairing_matrix[i][j] <= 0

    def _fundamental_coweights(self):
        # omega_i solves <omega_i, alpha_j^vee> = delta_ij, equivalently
        # (omega_i, alpha_j) = d_j * delta_ij: a positive multiple of the
        # classical fundamental coweight, which is the only thing the dual
        # half-space tests depend on.
        inv = mat_invert(self.pairing_matrix)
        coweights = tuple(tuple(inv[i]) for i in range(self.rank))
        for i in range(self.rank):
            for j in range(self.rank):
                expect = self.half_norms[j] if i == j else 0
                assert self.height(coweights[i], self.simple_roots[j]) == expect
        return coweights

    # -- bilinear data -----------------------------------------------------

    def inner(self, x, y):
        """Invariant inner product; either argument may have Scalar entries."""
        total = 0
        for i in range(self.rank):
            xi = x[i]
            if not xi:
                continue
            row = self.gram[i]
            for j in range(self.rank):
                if y[j]:
                    total = total + (row[j] * xi) * y[j]
        return total + Fraction(0) if isinstance(total, int) else total

    def pair_simple_coroot(self, x, i):
        """<x, alpha_i^vee> for a coefficient vector x."""
        col = self.pairing_matrix
        total = 0
        for j in range(self.rank):
            if x[j]:
                total = total + x[j] * col[j][i]
        return total + Fraction(0) if isinstance(total, int) else total

    def norm2(self, root):
        """(beta, beta) for an integer root vector."""
        return sum(root[i] * self.gram[i][j] * root[j]
                   for i in range(self.rank) for j in range(self.rank))

    def pair_coroot(self, x, root):
        """<x, beta^vee> = 2 (x, beta) / (beta, beta) for any root beta."""
        num = 0
        for i in range(self.rank):
            if x[i]:
                c = sum(root[j] * self.gram[i][j] for j in range(self.rank))
                if c:
                    num = num + x[i] * c
        val = num * Fraction(2, 1) / self.norm2(root)
        return val

    def height(self, x, root):
        """(x, beta): the wall-level coordinate of x against the root beta."""
        total = 0
        for i in range(self.rank):
            if x[i]:
                c = sum(root[j] * self.gram[i][j] for j in range(self.rank))
                if c:
                    total = total + x[i] * c
        return total + Fraction(0) if isinstance(total, int) else total

    def coroot_vector(self, root):
        """beta^vee = 2 beta / (beta, beta) as a rational point."""
        f = Fraction(2) / self.norm2(root)
        return vec_scale(f, tuple(Fraction(c) for c in root))

    # -- reflections -------------------------------------------------------

    def reflect_root(self, alpha, beta):
        """s_alpha(beta) for roots alpha, beta."""
        if alpha not in self.roots or beta not in self.roots:
            raise InputError("reflect_root arguments must be roots")
        c = self.pair_coroot(beta, alpha)
        out = vec_sub(beta, vec_scale(c, alpha))
        out = tuple(int(v) for v in out)
        assert out in self.roots
        return out

    def reflect_point(self, x, root):
        """Linear reflection s_beta applied to a coefficient vector."""
        c = self.pair_coroot(x, root)
        return tuple(x[j] - c * root[j] if root[j] else x[j] for j in range(self.rank))

    def apply_simple(self, i, x):
        c = self.pair_simple_coroot(x, i)
        return tuple(x[j] - c if j == i else x[j] for j in range(self.rank))

    def simple_matrix(self, i):
        n = self.rank
        return tuple(
            tuple(
                Fraction(int(r == c)) - (Fraction(self.pairing_matrix[c][i]) if r == i else 0)
                for c in range(n)
            )
            for r in range(n)
        )

    # -- Weyl group --------------------------------------------------------

    def weyl_elements(self):
        """All elements, BFS by length; first word found is lex smallest."""
        if self._weyl is None:
            gens = [self.simple_matrix(i) for i in range(self.rank)]
            ident = mat_identity(self.rank)
            seen = {ident: ()}
            frontier = [ident]
            while frontier:
                nxt = []
                for m in sorted(frontier, key=lambda m: seen[m]):
                    for i, g in enumerate(gens):
                        prod = mat_mul(m, g)
                        if prod not in seen:
                            seen[prod] = seen[m] + (i + 1,)
                            nxt.append(prod)
                frontier = nxt
            elems = [WeylElement(w, m) for m, w in seen.items()]
            elems.sort(key=lambda e: (len(e.word), e.word))
            assert len(elems) == WEYL_ORDER[self.label]
            self._weyl = tuple(elems)
        return self._weyl

    def identity_element(self):
        return self.weyl_elements()[0]

    def length(self, matrix):
        neg = 0
        for r in self.positive_roots:
            img = mat_vec(matrix, tuple(Fraction(c) for c in r))
            if all(c <= 0 for c in img):
                neg += 1
        return neg

    def longest_word(self):
        w0 = max(self.weyl_elements(), key=lambda e: len(e.word))
        assert len(w0.word) == len(self.positive_roots)
        return w0

    def reduced_words_of_longest(self):
        """Every reduced expression for w0, lexicographically sorted."""
        gens = [self.simple_matrix(i) for i in range(self.rank)]
        ident = mat_identity(self.rank)

        @lru_cache(maxsize=None)
        def rec(matrix):
            if matrix == ident:
                return ((),)
            out = []
            for i in range(self.rank):
                # i+1 is a right descent iff the matrix sends alpha_i negative
                img = mat_vec(matrix, tuple(Fraction(int(j == i)) for j in range(self.rank)))
                if all(c <= 0 for c in img):
                    rest = mat_mul(matrix, gens[i])
                    for w in rec(rest):
                        out.append(w + (i + 1,))
            return tuple(out)

        words = sorted(rec(self.longest_word().matrix))
        rec.cache_clear()
        return tuple(words)

    def element_from_word(self, word):
        m = mat_identity(self.rank)
        for i in word:
            if not 1 <= i <= self.rank:
                raise InputError(f"generator index {i} out of range 1..{self.rank}")
            m = mat_mul(m, self.simple_matrix(i - 1))
        return WeylElement(tuple(word), m)

    def weyl_orbit(self, x):
        """Closure of {x} under the simple reflections."""
        seen = {tuple(x)}
        frontier = [tuple(x)]
        while frontier:
            p = frontier.pop()
            for i in range(self.rank):
                q = self.apply_simple(i, p)
                if q not in seen:
                    seen.add(q)
                    frontier.append(q)
        return seen

    def highest_root(self):
        # Unique positive root whose height against every positive root is
        # maximal; for the shipped types the maximal coefficient sum wins.
        return max(self.positive_roots, key=lambda r: (sum(r), r))

    def to_json(self):
        w0 = self.longest_word()
        return {
            "label": self.label,
            "rank": self.rank,
            "cartan": [list(row) for row in self.pairing_matrix],
            "positive_roots": [list(r) for r in self.positive_roots],
            "half_norms": [str(d) for d in self.half_norms],
            "weyl_order": WEYL_ORDER[self.label],
            "w0": list(w0.word),
        }


@lru_cache(maxsize=None)
def build_root_system(label):
    return RootSystem(label)
