"""Unique minimal generating sets (irreducible elements) of unipotent numerical monoids."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import product

from .matrix import PatternAmbient, Point, UnipotentMatrix
from .monoid import UnipotentMonoid, lower_points


def _revlex_order(ambient: PatternAmbient) -> list[int]:
    """Point coordinates in the storage (reverse-lexicographic) order of matrices."""
    return sorted(range(ambient.dim), key=lambda k: (-ambient.positions[k][0], -ambient.positions[k][1]))


def canonical_key(ambient: PatternAmbient):
    order = _revlex_order(ambient)
    return lambda p: tuple(p[k] for k in order)


@dataclass(frozen=True)
class MinimalGeneratingSet:
    ambient: PatternAmbient
    elements: tuple[Point, ...]

    @property
    def e(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, p):
        return tuple(p) in set(self.elements)

    def matrices(self) -> list[UnipotentMatrix]:
        return [self.ambient.to_matrix(p) for p in self.elements]

    def as_set(self) -> frozenset:
        return frozenset(self.elements)


def _make_set(ambient, pts) -> MinimalGeneratingSet:
    return MinimalGeneratingSet(ambient, tuple(sorted(set(pts), key=canonical_key(ambient))))


def _split_reducible(x: Point, order: list[int], holes, genus: int) -> bool:
    """Look for a member factorization among the prefix/suffix splits of x.

    Writing x as its elementary factorization word (letters in storage
    order), cutting the word after s letters gives x = y*z with y and z
    again in elementary form, so their coordinates are read off directly.
    Distinct cuts give distinct y and distinct z, hence at most 2*genus cuts
    can touch a hole.
    """
    total = sum(x)
    if total - 1 > 2 * genus:
        return True
    y = [0] * len(x)
    z = list(x)
    for k in order:
        for _ in range(x[k]):
            y[k] += 1
            z[k] -= 1
            if not any(z):
                return False
            if tuple(y) not in holes and tuple(z) not in holes:
                return True
    return False


def _search_reducible(ambient: PatternAmbient, x: Point, holes) -> bool:
    """Exhaustive left-factor search; y <= x is forced by superadditivity."""
    one = ambient.identity
    for y in lower_points(x):
        if y == one or y == x or y in holes:
            continue
        z = ambient.left_quotient(y, x)
        if z is not None and z != one and z not in holes:
            return True
    return False


def is_irreducible(S: UnipotentMonoid, x: Point) -> bool:
    """True iff x is in S \\ {1} and is not a product of two members of S \\ {1}."""
    amb = S.ambient
    x = tuple(x)
    if x == amb.identity or not S.is_member_point(x):
        return False
    if _split_reducible(x, _revlex_order(amb), S.holes, S.genus):
        return False
    return not _search_reducible(amb, x, S.holes)


def _candidates(ambient: PatternAmbient, r: int):
    """Points with entries <= 2r-1 and at most one entry >= r.

    A point with two entries >= r splits (cutting its elementary word
    between them) into two factors that each have an entry >= r, and
    every such factor lies in S; so irreducibles never have two big entries.
    """
    d = ambient.dim
    yield from product(range(r), repeat=d)
    for k in range(d):
        for big in range(r, 2 * r):
            for rest in product(range(r), repeat=d - 1):
                yield rest[:k] + (big,) + rest[k:]


def minimal_generators(S: UnipotentMonoid) -> MinimalGeneratingSet:
    """The irreducible elements of S, which form its unique minimal generating set.

    Candidates lie in the box {entries <= 2r-1}; each is tested by the cheap
    split heuristic first and by exhaustive left-factor search otherwise.
    """
    amb = S.ambient
    holes = S.holes
    g = S.genus
    r = S.generating_number
    order = _revlex_order(amb)
    one = amb.identity
    found = []
    for x in _candidates(amb, r):
        if x == one or x in holes:
            continue
        if _split_reducible(x, order, holes, g):
            continue
        if _search_reducible(amb, x, holes):
            continue
        found.append(x)
    return _make_set(amb, found)


def shell_is_reducible(S: UnipotentMonoid) -> bool:
    """Check that every point with largest entry exactly 2r (others < r) is reducible.

    Belt-and-braces guard for the candidate box bound; intended for tests.
    """
    amb = S.ambient
    r = S.generating_number
    d = amb.dim
    for k in range(d):
        for rest in product(range(r), repeat=d - 1):
            x = rest[:k] + (2 * r,) + rest[k:]
            if is_irreducible(S, x):
                return False
    return True


def fundamental_min_gens(ambient: PatternAmbient, k: int) -> MinimalGeneratingSet:
    """Closed-form minimal generators of the level-k fundamental monoid.

    One free entry in [k, 2k-1], all others in [0, k-1]; for k = 1 these
    are the elementary matrices of the ambient.
    """
    d = ambient.dim
    if k == 1:
        return _make_set(ambient, [ambient.elementary_point(p) for p in ambient.positions])
    pts = []
    for pos in range(d):
        for big in range(k, 2 * k):
            for rest in product(range(k), repeat=d - 1):
                pts.append(rest[:pos] + (big,) + rest[pos:])
    return _make_set(ambient, pts)


def closure_in_box(ambient: PatternAmbient, gens, bound: int) -> set:
    """All products of ``gens`` (and the identity) with every entry < bound."""
    one = ambient.identity
    small = [tuple(g) for g in gens if max(g) < bound]
    seen = {one}
    todo = deque([one])
    while todo:
        x = todo.popleft()
        for g in small:
            y = ambient.mul(x, g)
            if max(y) < bound and y not in seen:
                seen.add(y)
                todo.append(y)
    return seen


def verify_generates(S: UnipotentMonoid, candidate) -> bool:
    """True iff ``candidate`` generates S.

    The closure of the candidate inside {entries < 2r} must reproduce S on
    that box. Every irreducible lies in the box and can only be reached as
    itself, and the box generators reach the rest of S by entry-sum descent.
    """
    amb = S.ambient
    cand = [tuple(c) for c in candidate]
    one = amb.identity
    if any(c == one or not S.is_member_point(c) for c in cand):
        return False
    bound = 2 * S.generating_number
    reached = closure_in_box(amb, cand, bound)
    for p in amb.box(bound):
        if S.is_member_point(p) != (p in reached):
            return False
    return True


def factorization_count_commutative(x: Point, holes, hole_pair_sums=None) -> int:
    """Number of ordered pairs (y, z) of nonzero members with y + z = x (commutative case).

    Inclusion-exclusion over the all-ones count prod(x_i + 1); valid for a
    member x != 0. ``hole_pair_sums`` maps a point to the number of ordered
    hole pairs summing to it.
    """
    total = 1
    for v in x:
        total *= v + 1
    below = sum(1 for h in holes if all(a <= b for a, b in zip(h, x)))
    if hole_pair_sums is None:
        pairs = sum(1 for h in holes
                    if tuple(b - a for a, b in zip(h, x)) in holes)
    else:
        pairs = hole_pair_sums.get(x, 0)
    return total - 2 - 2 * below + pairs


def minimal_generators_commutative(S: UnipotentMonoid) -> MinimalGeneratingSet:
    """Irreducibles of a commutative monoid via factorization counting.

    Independent of :func:`minimal_generators`: x is irreducible iff it has
    no factorization into two nonzero members.
    """
    amb = S.ambient
    if not amb.is_commutative:
        raise ValueError("counting formula needs a commutative ambient")
    holes = S.holes
    pair_sums: dict = {}
    for a in holes:
        for b in holes:
            s = tuple(u + v for u, v in zip(a, b))
            pair_sums[s] = pair_sums.get(s, 0) + 1
    one = amb.identity
    out = [x for x in amb.box(2 * S.generating_number)
           if x != one and x not in holes
           and factorization_count_commutative(x, holes, pair_sums) == 0]
    return _make_set(amb, out)
