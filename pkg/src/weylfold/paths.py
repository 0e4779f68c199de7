"""Piecewise linear paths, height functions and the raising root operators.

A path is the linear interpolation of rational breakpoints starting at the
origin.  Heights are measured with the invariant form, h_alpha(t) =
(pi(t), alpha), so walls sit at integer levels for every root length and the
raising operator shifts the endpoint by exactly the coroot direction
(2/(alpha,alpha)) alpha.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InputError
from .rootsystem import RootSystem
from .scalars import vec_add, vec_is_zero, vec_sub, vec_zero


class PLPath:
    """Canonical piecewise linear path from the origin.

    Breakpoints are (time, point) pairs with strictly increasing rational
    times from 0 to 1.  The canonical form merges consecutive segments whose
    directions are positive multiples of each other, drops zero segments,
    and distributes breakpoint times uniformly, so two parameterizations of
    the same curve compare equal.
    """

    __slots__ = ("breakpoints",)

    def __init__(self, breakpoints):
        pts = [tuple(p) for _, p in sorted(breakpoints)]
        if not pts or not vec_is_zero(pts[0]):
            raise InputError("paths must start at the origin")
        self.breakpoints = _canonical(pts)

    @property
    def rank(self):
        return len(self.breakpoints[0][1])

    def endpoint(self):
        return self.breakpoints[-1][1]

    def points(self):
        return tuple(p for _, p in self.breakpoints)

    def value(self, t):
        """Exact evaluation at a rational time in [0, 1]."""
        t = Fraction(t)
        if not 0 <= t <= 1:
            raise InputError("time out of range")
        bps = self.breakpoints
        for (t0, p0), (t1, p1) in zip(bps, bps[1:]):
            if t <= t1:
                f = (t - t0) / (t1 - t0)
                return tuple(a + f * (b - a) for a, b in zip(p0, p1))
        return bps[-1][1]

    def __eq__(self, other):
        if not isinstance(other, PLPath):
            return NotImplemented
        return self.breakpoints == other.breakpoints

    def __hash__(self):
        return hash(self.breakpoints)

    def __repr__(self):
        return f"PLPath({list(self.breakpoints)!r})"

    def to_json(self):
        return [
            [[t.numerator, t.denominator],
             [[c.numerator, c.denominator] for c in p]]
            for t, p in self.breakpoints
        ]


def _canonical(points):
    """Merge proportional consecutive segments and retime uniformly."""
    kept = [points[0]]
    for p in points[1:]:
        if p != kept[-1]:
            kept.append(p)
    merged = [kept[0]]
    for p in kept[1:]:
        if len(merged) >= 2 and _same_direction(vec_sub(merged[-1], merged[-2]),
                                                vec_sub(p, merged[-1])):
            merged[-1] = p
        else:
            merged.append(p)
    if len(merged) == 1:
        merged.append(merged[0])
    m = len(merged) - 1
    return tuple((Fraction(i, m), merged[i]) for i in range(m + 1))


def _same_direction(u, v):
    """Whether v is a positive rational multiple of u (both nonzero)."""
    if vec_is_zero(u) or vec_is_zero(v):
        return False
    ratio = None
    for a, b in zip(u, v):
        if (a == 0) != (b == 0):
            return False
        if a != 0:
            r = b / a
            if r <= 0 or (ratio is not None and r != ratio):
                return False
            ratio = r
    return True


def constant_path(rank):
    return PLPath([(Fraction(0), vec_zero(rank)), (Fraction(1), vec_zero(rank))])


def straight(rs: RootSystem, endpoint):
    end = tuple(Fraction(c) for c in endpoint)
    return PLPath([(Fraction(0), vec_zero(rs.rank)), (Fraction(1), end)])


def concat(a: PLPath, b: PLPath) -> PLPath:
    """Run a on the first half-time, then b translated to a's endpoint."""
    half = Fraction(1, 2)
    pts = [(t * half, p) for t, p in a.breakpoints]
    shift = a.endpoint()
    pts += [(half + t * half, vec_add(shift, p)) for t, p in b.breakpoints[1:]]
    return PLPath(pts)


def reflect_path(rs: RootSystem, path: PLPath, root) -> PLPath:
    return PLPath([(t, rs.reflect_point(p, root)) for t, p in path.breakpoints])


def height_profile(rs: RootSystem, path: PLPath, root):
    """h_alpha = (pi(t), alpha) at each breakpoint (piecewise linear)."""
    return tuple(rs.height(p, root) for _, p in path.breakpoints)


def critical_value(rs: RootSystem, path: PLPath, root):
    """n_alpha: the exact minimum of the height function."""
    return min(height_profile(rs, path, root))


def root_operator_e(rs: RootSystem, path: PLPath, i):
    """The raising operator e_alpha for the simple root alpha_i (1-based).

    Returns None (the operator is absent) when the critical value exceeds
    -1; otherwise returns the raised path, whose endpoint is shifted by the
    coroot direction and whose critical value has grown by exactly 1.
    """
    if not 1 <= i <= rs.rank:
        raise InputError(f"simple root index {i} out of range 1..{rs.rank}")
    alpha = rs.simple_roots[i - 1]
    heights = height_profile(rs, path, alpha)
    n = min(heights)
    if n > -1:
        return None

    bps = list(path.breakpoints)
    # t1: first time the minimum is attained (always at a breakpoint).
    j1 = next(j for j, h in enumerate(heights) if h == n)
    t1 = bps[j1][0]
    # t0: maximal time with h >= n+1 on the whole prefix [0, t0], i.e. the
    # first downward crossing of the level n+1.
    level = n + 1
    t0 = None
    for j in range(j1):
        ha, hb = heights[j], heights[j + 1]
        if hb < level:
            if ha == level:
                t0 = bps[j][0]
            else:
                f = (level - ha) / (hb - ha)
                t0 = bps[j][0] + f * (bps[j + 1][0] - bps[j][0])
            break
    assert t0 is not None

    # Refine breakpoints so t0 and t1 are breakpoints, then cut [t0, t1]
    # into pieces: maximal strictly decreasing runs get reflected, the
    # stretches between them (which return to their starting level from
    # above) are kept.
    ts = sorted({t for t, _ in bps} | {t0, t1})
    ps = [path.value(t) for t in ts]
    hs = [rs.height(p, alpha) for p in ps]
    i0 = ts.index(t0)
    i1 = ts.index(t1)

    pieces = []  # (start_index, end_index, reflect?)
    j = i0
    while j < i1:
        if hs[j + 1] < hs[j]:
            # maximal strictly decreasing run: reflected
            k = j
            while k < i1 and hs[k + 1] < hs[k]:
                k += 1
            pieces.append((j, k, True))
        else:
            # kept stretch: ends at the first downward return to its start
            # level, inserting the exact crossing point when the return
            # happens inside a segment
            v = hs[j]
            k = j + 1
            while not (hs[k] == v and (k == i1 or hs[k + 1] < hs[k])):
                if hs[k] > v and hs[k + 1] < v:
                    f = (v - hs[k]) / (hs[k + 1] - hs[k])
                    tc = ts[k] + f * (ts[k + 1] - ts[k])
                    pc = tuple(a + f * (b - a) for a, b in zip(ps[k], ps[k + 1]))
                    ts.insert(k + 1, tc)
                    ps.insert(k + 1, pc)
                    hs.insert(k + 1, v)
                    i1 += 1
                    k += 1
                    break
                k += 1
                assert k <= i1
            pieces.append((j, k, False))
        j = k

    refined = list(zip(ts, ps))
    out = refined[: i0 + 1]
    for start, end, do_reflect in pieces:
        base = out[-1][1]
        origin = refined[start][1]
        for idx in range(start + 1, end + 1):
            disp = vec_sub(refined[idx][1], origin)
            if do_reflect:
                disp = rs.reflect_point(disp, alpha)
            out.append((refined[idx][0], vec_add(base, disp)))
    shift = vec_sub(out[-1][1], refined[i1][1])
    for idx in range(i1 + 1, len(refined)):
        out.append((refined[idx][0], vec_add(refined[idx][1], shift)))
    return PLPath(out)
