"""Upper unitriangular integer matrices and coordinate-vanishing pattern ambients.

A matrix of size n is stored by its strictly upper entries only, listed in
reverse-lexicographic position order::

    (n-1, n), (n-2, n), (n-2, n-1), (n-3, n), ..., (1, 3), (1, 2)

which is also the order in which the elementary factorization multiplies
its factors, so the stored tuple *is* the exponent vector of that
factorization.

Monoid code works on a faster "point" representation owned by
:class:`PatternAmbient`: a tuple of the free coordinates only, in
lexicographic position order (for P(n, N) this is the vector
(a_12, ..., a_1n)).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import product
from math import comb

from .errors import PositionError, SizeMismatch

Position = tuple[int, int]
Point = tuple[int, ...]


@lru_cache(maxsize=None)
def revlex_positions(n: int) -> tuple[Position, ...]:
    """Strictly upper positions of an n x n matrix in storage order."""
    return tuple(sorted(((i, j) for i in range(1, n) for j in range(i + 1, n + 1)),
                        key=lambda p: (-p[0], -p[1])))


@lru_cache(maxsize=None)
def _revlex_index(n: int) -> dict[Position, int]:
    return {p: k for k, p in enumerate(revlex_positions(n))}


def _check_position(n, i, j):
    if not (1 <= i < j <= n):
        raise PositionError(f"({i},{j}) is not a strictly upper position of a {n}x{n} matrix")


@dataclass(frozen=True, eq=False)
class UnitriangularMatrix:
    """Upper unitriangular integer matrix; entries may be negative."""

    n: int
    entries: tuple[int, ...]

    def __eq__(self, other):
        if not isinstance(other, UnitriangularMatrix):
            return NotImplemented
        return self.n == other.n and self.entries == other.entries

    def __hash__(self):
        return hash((self.n, self.entries))

    def __post_init__(self):
        if self.n < 2:
            raise SizeMismatch(f"matrix size must be at least 2, got {self.n}")
        if len(self.entries) != comb(self.n, 2):
            raise SizeMismatch(f"expected {comb(self.n, 2)} entries for n={self.n}")

    @classmethod
    def identity(cls, n: int):
        return cls(n, (0,) * comb(n, 2))

    @classmethod
    def from_entries(cls, n: int, entries: dict[Position, int]):
        """Build from a {(i, j): value} map; omitted positions are 0."""
        idx = _revlex_index(n)
        vals = [0] * comb(n, 2)
        for (i, j), v in entries.items():
            _check_position(n, i, j)
            vals[idx[(i, j)]] = int(v)
        return cls(n, tuple(vals))

    def __getitem__(self, pos: Position) -> int:
        i, j = pos
        if i == j:
            return 1
        if i > j:
            return 0
        _check_position(self.n, i, j)
        return self.entries[_revlex_index(self.n)[(i, j)]]

    def items(self):
        """(position, value) pairs in storage order."""
        return zip(revlex_positions(self.n), self.entries)

    def nonzero(self) -> dict[Position, int]:
        return {p: v for p, v in self.items() if v}

    def rows(self) -> list[list[int]]:
        """Full n x n matrix as nested lists."""
        return [[self[i, j] for j in range(1, self.n + 1)] for i in range(1, self.n + 1)]

    @property
    def is_identity(self) -> bool:
        return not any(self.entries)

    @property
    def is_nonnegative(self) -> bool:
        return all(v >= 0 for v in self.entries)

    def to_unipotent(self) -> UnipotentMatrix:
        return UnipotentMatrix(self.n, self.entries)

    def to_literal(self) -> dict:
        """Matrix literal: {"n": n, "entries": [[i, j, value], ...]}, zeros omitted."""
        lit = sorted([i, j, v] for (i, j), v in self.items() if v)
        return {"n": self.n, "entries": lit}

    def __str__(self):
        inner = ", ".join(f"({i},{j})={v}" for (i, j), v in sorted(self.nonzero().items()))
        return f"U{self.n}[{inner}]"


@dataclass(frozen=True, eq=False)
class UnipotentMatrix(UnitriangularMatrix):
    """Element of U(n, N): unitriangular with nonnegative integer entries."""

    def __post_init__(self):
        super().__post_init__()
        for v in self.entries:
            if isinstance(v, bool) or not isinstance(v, int) or v < 0:
                raise ValueError(f"entries of a U(n,N) matrix must be nonnegative integers, got {v!r}")


def elementary(n: int, i: int, j: int, power: int = 1) -> UnipotentMatrix:
    """E_{i,j}^power: the identity with ``power`` at position (i, j)."""
    _check_position(n, i, j)
    if power < 0:
        raise ValueError("power must be nonnegative")
    return UnipotentMatrix.from_entries(n, {(i, j): power})


def multiply(x: UnitriangularMatrix, y: UnitriangularMatrix) -> UnitriangularMatrix:
    """Exact matrix product. Returns a UnipotentMatrix when both factors are nonnegative."""
    if x.n != y.n:
        raise SizeMismatch(f"cannot multiply sizes {x.n} and {y.n}")
    n = x.n
    out = {}
    for (i, j) in revlex_positions(n):
        s = x[i, j] + y[i, j]
        for l in range(i + 1, j):
            s += x[i, l] * y[l, j]
        out[(i, j)] = s
    cls = UnipotentMatrix if (x.is_nonnegative and y.is_nonnegative) else UnitriangularMatrix
    return cls.from_entries(n, out)


def inverse(x: UnitriangularMatrix) -> UnitriangularMatrix:
    """Exact inverse over Z. Entries may be negative; nonnegativity is the caller's concern."""
    n = x.n
    inv: dict[Position, int] = {}
    # (x * inv)_{ij} = x_ij + inv_ij + sum_l x_il inv_lj = 0, solved by increasing span
    for span in range(1, n):
        for i in range(1, n - span + 1):
            j = i + span
            s = x[i, j]
            for l in range(i + 1, j):
                s += x[i, l] * inv[(l, j)]
            inv[(i, j)] = -s
    return UnitriangularMatrix.from_entries(n, inv)


def elementary_factorization(x: UnipotentMatrix) -> list[tuple[Position, int]]:
    """Unique factorization x = E_{n-1,n}^a ... E_{1,2}^b as (position, exponent) pairs.

    Factors are listed in multiplication order; each exponent equals the
    matrix entry at that position.
    """
    return list(x.items())


def product_of_factors(n: int, factors) -> UnitriangularMatrix:
    """Multiply ``[(position, exponent), ...]`` left to right."""
    acc = UnipotentMatrix.identity(n)
    for (i, j), e in factors:
        acc = multiply(acc, elementary(n, i, j, e))
    return acc


@dataclass(frozen=True)
class PatternCheck:
    """Outcome of :func:`validate_pattern`; falsy when the pattern is not closed."""

    ok: bool
    witness: tuple[int, int, int] | None = None

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class PatternAmbient:
    """Ambient monoid M = G_N for the pattern group {x : x_ij = 0 for (i, j) in A}."""

    n: int
    zero_positions: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 2:
            raise SizeMismatch("ambient size must be at least 2")
        zp = frozenset(tuple(p) for p in self.zero_positions)
        for i, j in zp:
            _check_position(self.n, i, j)
        object.__setattr__(self, "zero_positions", zp)

    @classmethod
    def full(cls, n: int) -> PatternAmbient:
        """U(n, N)."""
        return cls(n, frozenset())

    @classmethod
    def first_row(cls, n: int) -> PatternAmbient:
        """P(n, N): only the first row is free; isomorphic to N^(n-1)."""
        return cls(n, frozenset((i, j) for i in range(2, n) for j in range(i + 1, n + 1)))

    @cached_property
    def dim(self) -> int:
        return comb(self.n, 2) - len(self.zero_positions)

    @cached_property
    def positions(self) -> tuple[Position, ...]:
        """Free positions in lexicographic order; the coordinate order of points."""
        return tuple((i, j) for i in range(1, self.n) for j in range(i + 1, self.n + 1)
                     if (i, j) not in self.zero_positions)

    @cached_property
    def index(self) -> dict[Position, int]:
        return {p: k for k, p in enumerate(self.positions)}

    @cached_property
    def _cross(self):
        # for each free p=(i,j): pairs (idx(i,l), idx(l,j)) over free intermediate cells
        idx = self.index
        out = []
        for (i, j) in self.positions:
            out.append(tuple((idx[(i, l)], idx[(l, j)]) for l in range(i + 1, j)
                             if (i, l) in idx and (l, j) in idx))
        return tuple(out)

    @cached_property
    def _span_order(self):
        return tuple(sorted(range(self.dim), key=lambda k: self.positions[k][1] - self.positions[k][0]))

    @cached_property
    def is_commutative(self) -> bool:
        return not any(self._cross)

    @cached_property
    def is_first_row(self) -> bool:
        return self == PatternAmbient.first_row(self.n)

    @cached_property
    def is_full(self) -> bool:
        return not self.zero_positions

    @property
    def identity(self) -> Point:
        return (0,) * self.dim

    # -- point algebra ---------------------------------------------------
    def mul(self, a: Point, b: Point) -> Point:
        if self.is_commutative:
            return tuple(x + y for x, y in zip(a, b))
        return tuple(a[k] + b[k] + sum(a[q] * b[r] for q, r in cr)
                     for k, cr in enumerate(self._cross))

    def left_quotient(self, y: Point, x: Point) -> Point | None:
        """The unique z with y*z = x, or None if z has a negative entry."""
        if self.is_commutative:
            z = tuple(b - a for a, b in zip(y, x))
            return None if min(z, default=0) < 0 else z
        z = [0] * self.dim
        cross = self._cross
        for k in self._span_order:
            v = x[k] - y[k] - sum(y[q] * z[r] for q, r in cross[k])
            if v < 0:
                return None
            z[k] = v
        return tuple(z)

    def elementary_point(self, pos: Position, power: int = 1) -> Point:
        p = [0] * self.dim
        p[self.index[pos]] = power
        return tuple(p)

    def box(self, k: int):
        """All points with every entry < k (identity included)."""
        return product(range(k), repeat=self.dim)

    def to_matrix(self, point: Point) -> UnipotentMatrix:
        return UnipotentMatrix.from_entries(self.n, dict(zip(self.positions, point)))

    def to_point(self, x: UnitriangularMatrix) -> Point:
        """Coordinates of ``x``; raises if x has a nonzero forced-zero entry."""
        if x.n != self.n:
            raise SizeMismatch(f"matrix size {x.n} does not match ambient size {self.n}")
        if not member_of_ambient(x, self):
            raise ValueError(f"{x} is not in the ambient monoid")
        return tuple(x[p] for p in self.positions)

    def to_json(self) -> dict:
        return {"n": self.n, "zero_positions": sorted(list(p) for p in self.zero_positions)}


def validate_pattern(ambient: PatternAmbient) -> PatternCheck:
    """Check that the zero pattern is closed under products.

    For every forced zero (i, j) and every i < l < j, (i, l) or (l, j) must
    also be forced to zero; otherwise x_il * y_lj leaks into entry (i, j).
    """
    A = ambient.zero_positions
    for (i, j) in sorted(A):
        for l in range(i + 1, j):
            if (i, l) not in A and (l, j) not in A:
                return PatternCheck(False, (i, l, j))
    return PatternCheck(True)


def member_of_ambient(x: UnitriangularMatrix, ambient: PatternAmbient) -> bool:
    if x.n != ambient.n:
        raise SizeMismatch(f"matrix size {x.n} does not match ambient size {ambient.n}")
    return x.is_nonnegative and all(x[p] == 0 for p in ambient.zero_positions)
