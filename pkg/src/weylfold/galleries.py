"""Alcove walks in the affine Coxeter complex and positively folded galleries.

Alcoves are identified with elements of the affine Weyl group W x Q(R_vee),
stored as exact affine transformations (matrix, translation).  A minimal
gallery is read off a straight-line walk from a generic interior point of
the fundamental alcove to its translate by the target, which crosses each
separating wall exactly once.  The positive-fold enumeration then replays
the gallery type from every possible initial alcove around the origin,
choosing at each panel either to cross or, when the fold is positive, to
stay.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .convexity import hull_of_orbit, lattice_points
from .errors import BudgetExceeded, InputError
from .model_space import TranslationLattice
from .rootsystem import RootSystem
from .scalars import mat_identity, mat_mul, mat_vec, vec_add, vec_zero


@dataclass(frozen=True)
class AffineElement:
    """x -> matrix @ x + shift, an element of the affine Weyl group."""

    matrix: tuple
    shift: tuple

    def apply(self, x):
        return vec_add(mat_vec(self.matrix, x), self.shift)

    def compose(self, other):
        """self after other."""
        return AffineElement(
            mat_mul(self.matrix, other.matrix),
            vec_add(mat_vec(self.matrix, other.shift), self.shift),
        )


@dataclass(frozen=True)
class Gallery:
    """A walk of fixed type: per panel either a crossing or a (positive)
    fold, starting from initial_element and targeting the image of 0."""

    gallery_type: tuple       # generator letter per panel
    initial_word: tuple       # reduced word of the starting spherical element
    moves: tuple              # "cross" | "fold" per panel
    target: tuple

    @property
    def fold_count(self):
        return sum(1 for m in self.moves if m == "fold")


def affine_generators(rs: RootSystem):
    """Generators s_1..s_rank (linear) and s_0 (highest-root wall at level 1),
    indexed 0..rank."""
    gens = {}
    zero = vec_zero(rs.rank)
    for i in range(rs.rank):
        gens[i + 1] = AffineElement(rs.simple_matrix(i), zero)
    theta = rs.highest_root()
    d_theta = rs.norm2(theta) / 2
    # matrix of s_theta: x -> x - <x, theta_vee> theta, column by column
    columns = []
    for c in range(rs.rank):
        e = tuple(Fraction(int(k == c)) for k in range(rs.rank))
        pairing = rs.pair_coroot(e, theta)
        columns.append(tuple(e[r] - pairing * theta[r] for r in range(rs.rank)))
    s_theta = tuple(
        tuple(columns[c][r] for c in range(rs.rank)) for r in range(rs.rank)
    )
    shift = tuple((Fraction(1) / d_theta) * Fraction(t) for t in theta)
    gens[0] = AffineElement(s_theta, shift)
    return gens


def generic_base_point(rs: RootSystem, variant=0):
    """A generic interior point of the fundamental alcove.

    Distinct tiny coordinates against each simple wall keep every wall
    crossing of a straight walk at a distinct time; variant switches to a
    different perturbation for the type-independence check.
    """
    primes = (7, 11, 13) if variant == 0 else (5, 17, 19)
    base = Fraction(1, 100 * (23 ** variant))
    point = vec_zero(rs.rank)
    for i in range(rs.rank):
        c = base / primes[i]
        point = vec_add(point, tuple(c / rs.half_norms[i] * v for v in rs.coweights[i]))
    for root in rs.positive_roots:
        level = rs.height(point, root)
        if not 0 < level < 1:
            raise InputError("perturbation left the fundamental alcove")
    return point


def wall_of_panel(rs: RootSystem, element: AffineElement, letter, gens):
    """The wall (positive root, level) between element's alcove and its
    neighbour across the panel of the given letter."""
    if letter == 0:
        # the fundamental alcove's far wall {(x, theta) = 1} contains the
        # point theta / (theta, theta)
        root0 = rs.highest_root()
        base_point = tuple(Fraction(v) / rs.norm2(root0) for v in root0)
    else:
        root0 = rs.simple_roots[letter - 1]
        base_point = vec_zero(rs.rank)
    image_root = mat_vec(element.matrix, tuple(Fraction(c) for c in root0))
    as_int = tuple(int(c) for c in image_root)
    if all(c <= 0 for c in as_int) and any(c < 0 for c in as_int):
        as_int = tuple(-c for c in as_int)
    assert as_int in rs.roots
    level = rs.height(element.apply(base_point), as_int)
    return as_int, level


def minimal_gallery(rs: RootSystem, x_plus, variant=0):
    """Type of a minimal gallery from the fundamental alcove to its translate
    by a dominant coroot-lattice point, as a sequence of generator letters."""
    lattice = TranslationLattice(rs, "coroot")
    if not lattice.contains(x_plus):
        raise InputError("minimal_gallery needs a coroot lattice point")
    if any(rs.pair_simple_coroot(x_plus, i) < 0 for i in range(rs.rank)):
        raise InputError("minimal_gallery needs a dominant point")
    gens = affine_generators(rs)
    for attempt in range(8):
        p0 = generic_base_point(rs, variant + 2 * attempt) if attempt else \
            generic_base_point(rs, variant)
        crossings = []
        for root in rs.positive_roots:
            start = rs.height(p0, root)
            travel = rs.height(x_plus, root)
            for m in range(1, int(travel) + 1):
                t = (Fraction(m) - start) / travel if travel else None
                if t is not None and 0 < t < 1:
                    crossings.append((t, root, Fraction(m)))
        times = [t for t, _, _ in crossings]
        if len(set(times)) == len(times):
            break
    else:
        raise InputError("could not find a generic perturbation")
    crossings.sort()
    element = AffineElement(mat_identity(rs.rank), vec_zero(rs.rank))
    letters = []
    for _, root, level in crossings:
        found = None
        for letter, gen in gens.items():
            candidate = element.compose(gen)
            wall_root, wall_level = wall_of_panel(rs, element, letter, gens)
            if wall_root == root and wall_level == level:
                found = (letter, candidate)
                break
        assert found is not None, "crossing wall is not a panel wall"
        letters.append(found[0])
        element = found[1]
    expected = AffineElement(mat_identity(rs.rank), tuple(Fraction(c) for c in x_plus))
    assert element == expected, "gallery did not end at the translation"
    return tuple(letters)


def is_positive_fold(rs: RootSystem, element: AffineElement, letter, gens, probe):
    """Whether folding at this panel is positive: the repeated alcove must
    lie on the side of the wall away from the antidominant direction."""
    root, level = wall_of_panel(rs, element, letter, gens)
    inside = rs.height(element.apply(probe), root)
    assert inside != level
    return inside > level


def enumerate_positively_folded(rs: RootSystem, gallery_type, budget=10 ** 7):
    """All positively folded galleries of the given type, over every initial
    alcove around the origin."""
    gens = affine_generators(rs)
    probe = generic_base_point(rs)
    results = []
    visited = 0
    for w in rs.weyl_elements():
        start = AffineElement(w.matrix, vec_zero(rs.rank))
        stack = [(start, 0, ())]
        while stack:
            element, depth, moves = stack.pop()
            visited += 1
            if visited > budget:
                raise BudgetExceeded(
                    f"gallery enumeration exceeded {budget} steps",
                    visited=len(results),
                )
            if depth == len(gallery_type):
                target = element.apply(vec_zero(rs.rank))
                results.append(
                    Gallery(tuple(gallery_type), w.word, moves, target)
                )
                continue
            letter = gallery_type[depth]
            crossed = element.compose(gens[letter])
            stack.append((crossed, depth + 1, moves + ("cross",)))
            if is_positive_fold(rs, element, letter, gens, probe):
                stack.append((element, depth + 1, moves + ("fold",)))
    return results


def verify_simplicial_convexity(rs: RootSystem, x_plus, budget=10 ** 7, variant=0):
    """Compare gallery targets with the lattice points of the dual hull."""
    x_plus = tuple(Fraction(c) for c in x_plus)
    gallery_type = minimal_gallery(rs, x_plus, variant=variant)
    galleries = enumerate_positively_folded(rs, gallery_type, budget=budget)
    targets = {}
    for g in galleries:
        targets[g.target] = targets.get(g.target, 0) + 1
    hull = hull_of_orbit(rs, x_plus)
    lattice = TranslationLattice(rs, "coroot")
    expected = lattice_points(hull, lattice, vec_zero(rs.rank))
    return {
        "type": list(gallery_type),
        "gallery_count": len(galleries),
        "targets": sorted(targets),
        "counts": {str(k): v for k, v in sorted(targets.items())},
        "expected": sorted(expected),
        "verdict": set(targets) == expected,
    }
