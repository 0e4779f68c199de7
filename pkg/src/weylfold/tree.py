"""Finite thick Lambda-tree simulator for the rank-1 building theorem.

The base apartment is the interval [-N, N] of scalar values, with the
translation group T = step * Z acting by shifts and the reflections of the
associated affine group fixing the half-step lattice.  Extra half-apartments
(branches) may be glued exactly at those half-step points; gluing anywhere
else would break the thickness hypothesis rather than realize it, because
apartments never branch at non-special points.

Points are ("base", u) on the base apartment or ("br", i, c) at distance
c > 0 along branch i from its attachment point.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError
from .scalars import scalar_abs


@dataclass(frozen=True)
class ThickTree:
    step: object          # generator of T, positive Scalar
    depth: object         # half-width N of the base apartment
    branches: tuple       # (attachment point z, length) per branch

    def contains(self, p):
        if p[0] == "base":
            return scalar_abs(p[1]) <= self.depth
        if p[0] == "br":
            _, i, c = p
            return 0 <= i < len(self.branches) and 0 < c <= self.branches[i][1]
        return False

    def is_thick_to(self, radius):
        """At least one full branch at every special point within radius."""
        z = -self.step / 2
        while -radius < z:
            needed = radius - scalar_abs(z)
            if not any(b[0] == z and b[1] >= needed for b in self.branches):
                return False
            z = z - self.step / 2
        return True


def special_points(step, depth):
    """The half-step lattice inside (-depth, depth): the points fixed by
    some reflection of the affine group of T."""
    out = []
    z = step / 2
    while z < depth:
        out.append(z)
        out.append(-z)
        z = z + step / 2
    return sorted(out) + [0 * step]


def build_tree(step, depth, seed, thick=True, max_extra=2):
    """Seeded random thick tree.

    When thick is set every special point gets one full-length branch (so
    the theorem's hypothesis holds out to the full depth) plus up to
    max_extra shorter ones; otherwise no branches at all, which gives the
    degenerate single-apartment tree used for negative tests.
    """
    if not step > 0:
        raise InputError("step must be positive")
    rng = random.Random(seed)
    branches = []
    if thick:
        for z in special_points(step, depth):
            if z == 0 * step:
                continue
            full = depth - scalar_abs(z)
            branches.append((z, full))
            for _ in range(rng.randint(0, max_extra)):
                frac = Fraction(rng.randint(1, 4), 4)
                branches.append((z, full * frac))
    return ThickTree(step, depth, tuple(branches))


def tree_distance(tree: ThickTree, p, q):
    """Exact tree metric through the meet point."""
    for point in (p, q):
        if not tree.contains(point):
            raise InputError(f"point {point!r} is not in the tree")
    if p[0] == "base" and q[0] == "base":
        return scalar_abs(p[1] - q[1])
    if p[0] == "base":
        p, q = q, p
    if q[0] == "base":
        z = tree.branches[p[1]][0]
        return p[2] + scalar_abs(q[1] - z)
    if p[1] == q[1]:
        return scalar_abs(p[2] - q[2])
    zp = tree.branches[p[1]][0]
    zq = tree.branches[q[1]][0]
    return p[2] + scalar_abs(zp - zq) + q[2]


def sphere(tree: ThickTree, radius):
    """All tree points at exact distance radius from the origin."""
    if radius < 0:
        raise InputError("radius must be non-negative")
    if not radius > 0:
        return {("base", 0 * tree.step)}
    out = set()
    if radius <= tree.depth:
        out.add(("base", radius))
        out.add(("base", -radius))
    for i, (z, length) in enumerate(tree.branches):
        c = radius - scalar_abs(z)
        if 0 < c <= length:
            out.add(("br", i, c))
    return out


def retraction_rho(tree: ThickTree, p):
    """Retraction onto the base apartment fixing the antidominant end:
    every branch unfolds in the increasing direction, so a branch point at
    distance c from its attachment z lands at z + c."""
    if not tree.contains(p):
        raise InputError(f"point {p!r} is not in the tree")
    if p[0] == "base":
        return p[1]
    z = tree.branches[p[1]][0]
    return z + p[2]


def verify_tree_theorem(tree: ThickTree, x):
    """Compare rho(sphere(d(0,x))) with the hull lattice points, exactly.

    x must be a vertex of T.  The status is VERIFIED on success,
    INSUFFICIENT_THICKNESS when the image is a strict subset explained by
    missing branches, and FAILED otherwise (which would refute the theorem).
    """
    radius = scalar_abs(x)
    k, acc = 0, 0 * tree.step
    while acc < radius:
        acc = acc + tree.step
        k += 1
    if acc != radius:
        raise InputError("x must be a point of the translation lattice T")
    if radius > tree.depth:
        raise InputError("x is beyond the tree truncation depth")
    expected = [-radius + j * tree.step for j in range(2 * k + 1)]
    image = sorted({retraction_rho(tree, p) for p in sphere(tree, radius)})
    if image == expected:
        status = "VERIFIED"
    elif set(image) <= set(expected) and not tree.is_thick_to(radius):
        status = "INSUFFICIENT_THICKNESS"
    else:
        status = "FAILED"
    return {
        "radius": radius,
        "sphere_size": len(sphere(tree, radius)),
        "rho_image": image,
        "expected": expected,
        "status": status,
        "verdict": status == "VERIFIED",
    }
