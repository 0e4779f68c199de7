"""Dual half-spaces and the convex hull of a Weyl orbit.

The hull conv*(W.x) is cut out by the finitely many dual half-spaces
{y : (y, w.omega_i) <= k_i} with k_i = (x_plus, omega_i), where omega_i are
the fundamental coweights.  Membership is equivalently decided by the cone
test: x_plus - y_plus must be a non-negative combination of simple roots,
which in simple-root coordinates just means componentwise non-negativity.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError
from .model_space import TranslationLattice, dominant_representative
from .rootsystem import RootSystem
from .scalars import scalar_floor, vec_add, vec_sub

_COWEIGHT_ORBITS = {}


def _coweight_orbit_vectors(rs: RootSystem, i):
    """All distinct images w.omega_i, cached per root system."""
    key = (rs.label, i)
    if key not in _COWEIGHT_ORBITS:
        orbit = sorted(rs.weyl_orbit(rs.coweights[i]))
        _COWEIGHT_ORBITS[key] = tuple(orbit)
    return _COWEIGHT_ORBITS[key]


@dataclass(frozen=True)
class DualHalfSpace:
    """The set {y : (y, vector) <= bound}."""

    vector: tuple
    bound: object


@dataclass(frozen=True)
class OrbitHull:
    rs: RootSystem
    x: tuple
    x_plus: tuple
    halfspaces: tuple

    def contains(self, y):
        for hs in self.halfspaces:
            if self.rs.inner(y, hs.vector) > hs.bound:
                return False
        return True


def hull_of_orbit(rs: RootSystem, x) -> OrbitHull:
    x_plus, _ = dominant_representative(rs, x)
    halfspaces = []
    for i in range(rs.rank):
        bound = rs.inner(x_plus, rs.coweights[i])
        for vec in _coweight_orbit_vectors(rs, i):
            halfspaces.append(DualHalfSpace(vec, bound))
    return OrbitHull(rs, tuple(x), x_plus, tuple(halfspaces))


def contains(hull: OrbitHull, y):
    return hull.contains(y)


def contains_via_cone(rs: RootSystem, x, y):
    """Cone test: dominant difference has non-negative root coordinates."""
    x_plus, _ = dominant_representative(rs, x)
    y_plus, _ = dominant_representative(rs, y)
    return all(c >= 0 for c in vec_sub(x_plus, y_plus))


def lattice_points(hull: OrbitHull, lattice: TranslationLattice, anchor):
    """All points of anchor + lattice inside the hull."""
    rs = hull.rs
    if lattice.kind == "full":
        raise InputError("lattice_points needs a discrete lattice")
    if not all(isinstance(c, Fraction) for c in anchor):
        raise InputError("lattice_points needs rational coordinates")
    orbit = rs.weyl_orbit(hull.x_plus)
    lows = [min(p[i] for p in orbit) for i in range(rs.rank)]
    highs = [max(p[i] for p in orbit) for i in range(rs.rank)]
    basis = lattice.basis()
    # Diagonal bases: basis vector j is a positive multiple of alpha_j, so the
    # coefficient ranges decouple along the simple-root coordinates.
    ranges = []
    for j in range(rs.rank):
        scale = basis[j][j]
        lo = (lows[j] - anchor[j]) / scale
        hi = (highs[j] - anchor[j]) / scale
        ranges.append(range(scalar_floor(lo), scalar_floor(hi) + 2))
    found = set()
    for coeffs in itertools.product(*ranges):
        point = vec_add(anchor, lattice.point(coeffs))
        if all(lows[i] <= point[i] <= highs[i] for i in range(rs.rank)):
            if hull.contains(point):
                found.add(point)
    return found
