"""Maximal-step folding schedules and positive folds of the geodesic path.

The recursion walks y back to w0.x_plus through the hull: at step k it moves
y against the coroot direction of the word's k-th simple root by the largest
admissible amount.  Over a lattice the steps specialize to the integer
constants m_k, which drive the raising operators that build the folded path.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .convexity import OrbitHull, hull_of_orbit
from .errors import FoldConstructionError, InputError
from .model_space import TranslationLattice
from .paths import PLPath, root_operator_e, straight
from .rootsystem import RootSystem
from .scalars import scalar_floor, vec_sub


@dataclass(frozen=True)
class FoldSchedule:
    word: tuple
    points: tuple  # y_0 .. y_n
    steps: tuple   # lambda_1 .. lambda_n (integers when lattice=True)

    @property
    def terminal(self):
        return self.points[-1]


def lambda_max(rs: RootSystem, hull: OrbitHull, y, i):
    """Largest lam >= 0 with y - lam * alpha_i_vee still in the hull.

    One-variable linear program over the hull's half-spaces; exact for both
    scalar domains.
    """
    if not hull.contains(y):
        raise InputError("lambda_max requires a point of the hull")
    coroot = rs.coroot_vector(rs.simple_roots[i - 1])
    best = None
    for hs in hull.halfspaces:
        a = rs.inner(coroot, hs.vector)
        if a < 0:
            bound = (hs.bound - rs.inner(y, hs.vector)) / (-a)
            if best is None or bound < best:
                best = bound
    if best is None or best < 0:
        raise FoldConstructionError("hull is unbounded against the coroot")
    return best


def fold_schedule(rs: RootSystem, x, y, word=None, lattice=False) -> FoldSchedule:
    """Run the maximal-step recursion from y down to w0.x_plus.

    With lattice=True each step is the integer part of the maximal one,
    which preserves coroot-lattice differences.  The terminal point is
    checked against w0.x_plus rather than assumed.
    """
    hull = hull_of_orbit(rs, x)
    if word is None:
        word = rs.longest_word().word
    else:
        word = tuple(word)
        elem = rs.element_from_word(word)
        if elem.matrix != rs.longest_word().matrix or len(word) != len(rs.positive_roots):
            raise InputError("word must be a reduced expression for w0")
    if not hull.contains(y):
        raise InputError("y must lie in the hull of the orbit")
    points = [tuple(y)]
    steps = []
    for i in word:
        lam = lambda_max(rs, hull, points[-1], i)
        if lattice:
            lam = Fraction(scalar_floor(lam))
        coroot = rs.coroot_vector(rs.simple_roots[i - 1])
        nxt = tuple(c - lam * v for c, v in zip(points[-1], coroot))
        if not hull.contains(nxt):
            raise FoldConstructionError("step left the hull")
        points.append(nxt)
        steps.append(lam)
    expected = rs.longest_word().apply(hull.x_plus)
    if points[-1] != tuple(expected):
        raise FoldConstructionError(
            f"schedule terminated at {points[-1]}, expected {tuple(expected)}"
        )
    return FoldSchedule(word, tuple(points), tuple(steps))


def positive_fold_stages(rs: RootSystem, x, y, word=None):
    """The folded path after each block of raising operators, starting with
    the straight geodesic to w0.x_plus and ending at the positive fold with
    endpoint y.  Returns (schedule, [path_0, ..., path_n])."""
    lattice = TranslationLattice(rs, "coroot")
    if not all(isinstance(c, Fraction) for c in list(x) + list(y)):
        raise InputError("positive_fold_to needs rational coordinates")
    if not lattice.contains(vec_sub(y, x)):
        raise InputError("y must differ from x by a coroot lattice vector")
    schedule = fold_schedule(rs, x, y, word, lattice=True)
    hull = hull_of_orbit(rs, x)
    path = straight(rs, rs.longest_word().apply(hull.x_plus))
    stages = [path]
    for k in range(len(schedule.word) - 1, -1, -1):
        i = schedule.word[k]
        for _ in range(int(schedule.steps[k])):
            raised = root_operator_e(rs, path, i)
            if raised is None:
                raise FoldConstructionError(
                    f"raising operator e_{i} vanished mid-construction"
                )
            path = raised
        stages.append(path)
    if path.endpoint() != tuple(y):
        raise FoldConstructionError("folded path missed its endpoint")
    return schedule, stages


def positive_fold_to(rs: RootSystem, x, y, word=None) -> PLPath:
    """Positively folded path from 0 to y, built from the straight geodesic
    to w0.x_plus by raising operators in reverse schedule order."""
    _, stages = positive_fold_stages(rs, x, y, word)
    return stages[-1]
