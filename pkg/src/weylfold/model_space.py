"""The model space: points over pluggable ordered scalar groups, the exact
vectorial metric, hyperplane coordinates, affine reflections and segments.

Points are coefficient vectors over the simple roots, with entries drawn from
either scalar domain (Fraction or LexPair).  Wall levels use the invariant
form directly: the hyperplane of the root alpha at level lam is
{x : (x, alpha) = lam}, which for simple roots places walls at the same
positions as the pairing convention but stays integral for long roots too.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InputError
from .rootsystem import RootSystem, WeylElement
from .scalars import scalar_abs, vec_zero


def hyperplane_coords(rs: RootSystem, x):
    """Coordinates x^alpha = half the coroot pairing, for each simple root."""
    return {
        rs.simple_roots[i]: rs.pair_simple_coroot(x, i) / 2
        for i in range(rs.rank)
    }


def distance(rs: RootSystem, x, y):
    """Vectorial metric: sum over positive roots of |<y - x, alpha_vee>|."""
    total = Fraction(0)
    for root in rs.positive_roots:
        diff = tuple(y[i] - x[i] for i in range(rs.rank))
        total = total + scalar_abs(rs.pair_coroot(diff, root))
    return total


def distance_to_origin_closed_form(rs: RootSystem, x):
    """d(0, x) from the hyperplane coordinates of the dominant representative.

    For dominant x the metric sum telescopes through the simple-root
    expansions of the positive roots: each alpha = sum_b p^alpha_b alpha_b
    contributes (2 / d_alpha) * sum_b p^alpha_b d_b x^b, where d_beta is half
    the squared length and x^b the hyperplane coordinate of x against
    alpha_b.  This agrees with distance(rs, 0, x) identically.
    """
    x_plus, _ = dominant_representative(rs, x)
    coords = [rs.pair_simple_coroot(x_plus, i) / 2 for i in range(rs.rank)]
    total = Fraction(0)
    for root in rs.positive_roots:
        d_alpha = rs.norm2(root) / 2
        inner = Fraction(0)
        for b in range(rs.rank):
            if root[b]:
                inner = inner + (root[b] * rs.half_norms[b]) * coords[b]
        total = total + (Fraction(2) / d_alpha) * inner
    return total


def affine_reflect(rs: RootSystem, x, root, level):
    """Reflection in the hyperplane {(y, root) = level}."""
    if tuple(root) not in rs.roots:
        raise InputError("affine_reflect needs a root of the system")
    reflected = rs.reflect_point(x, root)
    d_alpha = rs.norm2(root) / 2
    shift = level / d_alpha
    return tuple(
        reflected[j] + shift * root[j] if root[j] else reflected[j]
        for j in range(rs.rank)
    )


def dominant_representative(rs: RootSystem, x):
    """The unique dominant point of the Weyl orbit, with a witness element."""
    point = tuple(x)
    w = rs.identity_element()
    moved = True
    while moved:
        moved = False
        for i in range(rs.rank):
            if rs.pair_simple_coroot(point, i) < 0:
                point = rs.apply_simple(i, point)
                w = rs.element_from_word((i + 1,)) * w
                moved = True
    return point, w


def in_segment(rs: RootSystem, x, y, z):
    """Whether z lies on the metric segment from x to y (exact equality)."""
    return distance(rs, x, y) == distance(rs, x, z) + distance(rs, z, y)


class TranslationLattice:
    """Translation subgroup T: the full group, the coroot lattice Q(R_vee),
    or the root lattice, all in simple-root coordinates."""

    KINDS = ("full", "coroot", "root")

    def __init__(self, rs: RootSystem, kind="full"):
        if kind not in self.KINDS:
            raise InputError(f"unknown lattice kind {kind!r}")
        self.rs = rs
        self.kind = kind

    def basis(self):
        """Generating points; the full group has no finite basis."""
        if self.kind == "full":
            raise InputError("the full translation group has no lattice basis")
        if self.kind == "coroot":
            return tuple(rs_coroot_basis(self.rs))
        return tuple(
            tuple(Fraction(int(i == j)) for j in range(self.rs.rank))
            for i in range(self.rs.rank)
        )

    def contains(self, x):
        if self.kind == "full":
            return True
        if self.kind == "coroot":
            # x = sum c_i alpha_i_vee with alpha_i_vee = alpha_i / d_i, so the
            # integer coefficients are c_i = x_i * d_i.
            return all(
                isinstance(x[i], Fraction)
                and (x[i] * self.rs.half_norms[i]).denominator == 1
                for i in range(self.rs.rank)
            )
        return all(
            isinstance(x[i], Fraction) and x[i].denominator == 1
            for i in range(self.rs.rank)
        )

    def coefficients(self, x):
        """Integer coordinates of a lattice point in the basis order."""
        if not self.contains(x):
            raise InputError("point is not in the lattice")
        if self.kind == "full":
            raise InputError("the full translation group is not discrete")
        if self.kind == "coroot":
            return tuple(int(x[i] * self.rs.half_norms[i]) for i in range(self.rs.rank))
        return tuple(int(x[i]) for i in range(self.rs.rank))

    def point(self, coefficients):
        if self.kind == "full":
            raise InputError("the full translation group is not discrete")
        basis = self.basis()
        out = vec_zero(self.rs.rank)
        for c, b in zip(coefficients, basis):
            out = tuple(o + c * v for o, v in zip(out, b))
        return out


def rs_coroot_basis(rs: RootSystem):
    return [rs.coroot_vector(rs.simple_roots[i]) for i in range(rs.rank)]
