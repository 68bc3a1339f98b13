"""Unipotent numerical monoids represented by their finite hole sets."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from typing import Iterable, NamedTuple

from .errors import (ClosureViolation, GeneratorOutsideAmbient, HoleOutsideAmbient,
                     InvalidPattern)
from .matrix import (PatternAmbient, Point, UnitriangularMatrix, member_of_ambient,
                     validate_pattern)


class BasicInvariants(NamedTuple):
    r: int
    c: int
    g: int
    nspor: int


def _as_point(ambient: PatternAmbient, x) -> Point:
    if isinstance(x, UnitriangularMatrix):
        return ambient.to_point(x)
    p = tuple(int(v) for v in x)
    if len(p) != ambient.dim:
        raise ValueError(f"point {x} has {len(p)} coordinates, ambient has {ambient.dim}")
    return p


def lower_points(x: Point):
    """All points y with y <= x entrywise."""
    return product(*(range(v + 1) for v in x))


@dataclass(frozen=True)
class UnipotentMonoid:
    """A complement-finite submonoid S of a pattern ambient M, stored as H = M \\ S.

    Holes are points (free coordinates in lexicographic position order).
    Build instances through :func:`from_holes`, :func:`from_generators` or
    :func:`fundamental_monoid`; the bare constructor does not validate.
    """

    ambient: PatternAmbient
    holes: frozenset

    def __contains__(self, x) -> bool:
        return contains(self, x)

    def is_member_point(self, p: Point) -> bool:
        return min(p, default=0) >= 0 and p not in self.holes

    @cached_property
    def generating_number(self) -> int:
        return 1 + max((max(h) for h in self.holes), default=0)

    @cached_property
    def invariants(self) -> BasicInvariants:
        r = self.generating_number
        c = r ** self.ambient.dim
        g = len(self.holes)
        return BasicInvariants(r, c, g, c - g)

    @property
    def genus(self) -> int:
        return len(self.holes)

    @cached_property
    def sorted_holes(self) -> tuple[Point, ...]:
        return tuple(sorted(self.holes))

    def sporadic(self) -> list[Point]:
        """Members of S (identity included) with every entry below r."""
        r = self.generating_number
        return [p for p in self.ambient.box(r) if p not in self.holes]

    def hole_matrices(self):
        return [self.ambient.to_matrix(h) for h in self.sorted_holes]


def _require_pattern(ambient: PatternAmbient):
    chk = validate_pattern(ambient)
    if not chk:
        raise InvalidPattern(chk.witness)


def find_closure_violation(ambient: PatternAmbient, holes: frozenset):
    """Return (y, z, h) with y, z members and y*z = h a hole, or None.

    Every factorization h = y*z inside M has y <= h entrywise (products are
    entrywise superadditive), so scanning the lower box of each hole is
    exhaustive.
    """
    one = ambient.identity
    for h in sorted(holes):
        for y in lower_points(h):
            if y == one or y == h or y in holes:
                continue
            z = ambient.left_quotient(y, h)
            if z is None or z == one or z in holes:
                continue
            return y, z, h
    return None


def from_holes(ambient: PatternAmbient, holes: Iterable) -> UnipotentMonoid:
    """Validate a hole set and return the monoid M \\ holes.

    Raises HoleOutsideAmbient for holes that are the identity or not in M
    and ClosureViolation when two members multiply into a hole.
    """
    _require_pattern(ambient)
    pts = set()
    for h in holes:
        try:
            p = _as_point(ambient, h)
        except ValueError:
            raise HoleOutsideAmbient(h) from None
        if p == ambient.identity or min(p) < 0:
            raise HoleOutsideAmbient(h)
        pts.add(p)
    pts = frozenset(pts)
    bad = find_closure_violation(ambient, pts)
    if bad is not None:
        y, z, h = bad
        raise ClosureViolation(y, z, h)
    return UnipotentMonoid(ambient, pts)


def from_vectors(d: int, holes: Iterable) -> UnipotentMonoid:
    """Monoid in P(d+1, N) ~ N^d from hole vectors (a_12, ..., a_1,d+1)."""
    return from_holes(PatternAmbient.first_row(d + 1), [tuple(h) for h in holes])


def from_generators(ambient: PatternAmbient, gens: Iterable, level: int) -> UnipotentMonoid:
    """Submonoid generated by ``gens`` together with the level-``level`` fundamental monoid.

    Members inside the box {entries < level} are found by closing {1} under
    right multiplication by the in-box generators; by superadditivity every
    prefix of a factorization of an in-box element stays in the box.
    """
    _require_pattern(ambient)
    if level < 1:
        raise ValueError("level must be at least 1")
    small = []
    for g in gens:
        try:
            p = _as_point(ambient, g)
        except ValueError:
            raise GeneratorOutsideAmbient(g) from None
        if min(p, default=0) < 0:
            raise GeneratorOutsideAmbient(g)
        if max(p, default=0) < level and p != ambient.identity:
            small.append(p)
    one = ambient.identity
    reached = {one}
    todo = deque([one])
    while todo:
        x = todo.popleft()
        for g in small:
            y = ambient.mul(x, g)
            if max(y) < level and y not in reached:
                reached.add(y)
                todo.append(y)
    holes = frozenset(p for p in ambient.box(level) if p not in reached)
    return UnipotentMonoid(ambient, holes)


def fundamental_monoid(ambient: PatternAmbient, k: int) -> UnipotentMonoid:
    """{1} together with every ambient element whose largest entry is at least k."""
    _require_pattern(ambient)
    if k < 1:
        raise ValueError("k must be at least 1")
    one = ambient.identity
    return UnipotentMonoid(ambient, frozenset(p for p in ambient.box(k) if p != one))


def contains(S: UnipotentMonoid, x) -> bool:
    if isinstance(x, UnitriangularMatrix):
        if x.n != S.ambient.n:
            raise ValueError("size mismatch")
        if not member_of_ambient(x, S.ambient):
            return False
        x = S.ambient.to_point(x)
    return S.is_member_point(tuple(x))


def generating_number(S: UnipotentMonoid) -> int:
    return S.generating_number


def basic_invariants(S: UnipotentMonoid) -> BasicInvariants:
    """(r, c, g, nspor) with c = r^dim and nspor = c - g."""
    return S.invariants
